# Copyright 2024 - chromsym contributors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# pylint: disable=missing-module-docstring
# pylint: disable=missing-function-docstring

import pytest
from hypothesis import given, strategies as st

from chromsym.errors import InvalidStructureError, ParseError
from chromsym.partitions import (
    Cell,
    Partition,
    compositions_of,
    hook_shape,
    partition_from_sizes,
    partitions_of,
)

from tests.chromsym.const import P

# region Partition


def test_partition_rejects_increasing_parts():
    with pytest.raises(InvalidStructureError):
        Partition((1, 2))


def test_partition_rejects_zero_parts():
    with pytest.raises(InvalidStructureError):
        Partition((2, 0))


def test_cell_rejects_non_positive_coordinates():
    with pytest.raises(InvalidStructureError):
        Cell(0, 1)


def test_partition_basic_properties():
    lam = P("3,1,1")
    assert lam.size == 5
    assert lam.length == 3
    assert lam.part(1) == 3
    assert lam.part(4) == 0
    assert lam.multiplicities() == {3: 1, 1: 2}
    assert str(lam) == "3,1,1"


def test_parse_empty_is_empty_partition():
    assert Partition.parse("") == Partition(())
    assert Partition.parse("").size == 0


@pytest.mark.parametrize("text", ["1,2", "a,b", "3,-1", "2,,1"])
def test_parse_rejects_bad_text(text):
    with pytest.raises(ParseError):
        Partition.parse(text)


def test_conjugate():
    assert P("3,1").conjugate() == P("2,1,1")
    assert P("2,2").conjugate() == P("2,2")
    assert Partition(()).conjugate() == Partition(())


partitions_strategy = st.integers(min_value=0, max_value=9).flatmap(
    lambda d: st.sampled_from(partitions_of(d))
)


@given(partitions_strategy)
def test_conjugate_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_cells_and_contains():
    lam = P("2,1")
    assert list(lam.cells()) == [Cell(1, 1), Cell(1, 2), Cell(2, 1)]
    assert lam.contains(Cell(1, 2))
    assert not lam.contains(Cell(2, 2))
    assert not lam.contains(Cell(3, 1))


def test_is_hook():
    assert P("3,1,1").is_hook()
    assert P("4").is_hook()
    assert P("1,1,1").is_hook()
    assert not P("2,2").is_hook()
    with pytest.raises(InvalidStructureError):
        Partition(()).is_hook()


def test_first_column_length():
    assert P("3,1,1").first_column_length() == 3
    with pytest.raises(InvalidStructureError):
        Partition(()).first_column_length()


def test_dominance():
    assert P("3,1").dominates(P("2,2"))
    assert not P("2,2").dominates(P("3,1"))
    assert P("2,2").dominates(P("2,1,1"))
    assert not P("3").dominates(P("2"))


# endregion
# region Enumerations


def test_partitions_of_small_degrees():
    assert partitions_of(0) == (Partition(()),)
    assert [str(p) for p in partitions_of(4)] == [
        "4",
        "3,1",
        "2,2",
        "2,1,1",
        "1,1,1,1",
    ]


@pytest.mark.parametrize("d,count", [(1, 1), (2, 2), (3, 3), (5, 7), (6, 11), (8, 22)])
def test_partition_counts(d, count):
    assert len(partitions_of(d)) == count


def count_partitions(d: int) -> int:
    ways = [1] + [0] * d
    for part in range(1, d + 1):
        for total in range(part, d + 1):
            ways[total] += ways[total - part]
    return ways[d]


@pytest.mark.parametrize("d", range(0, 31))
def test_partition_counts_match_recurrence(d):
    assert len(partitions_of(d)) == count_partitions(d)


@pytest.mark.parametrize("d", range(1, 9))
def test_is_hook_iff_arm_plus_leg_fill_the_diagram(d):
    for lam in partitions_of(d):
        assert lam.is_hook() == ((lam.parts[0] - 1) + lam.length == d)


def test_partitions_of_negative():
    with pytest.raises(InvalidStructureError):
        partitions_of(-1)


def test_hook_shape():
    assert hook_shape(4, 1) == P("4")
    assert hook_shape(4, 3) == P("2,1,1")
    assert hook_shape(4, 4) == P("1,1,1,1")
    with pytest.raises(InvalidStructureError):
        hook_shape(3, 4)


def test_compositions():
    assert list(compositions_of(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(list(compositions_of(6))) == 32


def test_partition_from_sizes():
    assert partition_from_sizes([1, 3, 2, 1]) == P("3,2,1,1")


# endregion
