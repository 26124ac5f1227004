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
# pylint: disable=unused-import
# pylint: disable=redefined-outer-name

import json
from math import factorial

import pytest

from chromsym.csf import (
    a_coefficients,
    a_coefficients_via_theorem1,
    build_poset_report,
    build_report,
    c_by_length,
    chromatic_symmetric_function,
    f_coefficients,
    kappa_by_sinks,
    pi_by_first_column,
    theorem1_coefficients,
)
from chromsym.errors import GuardExceededError, HypothesisViolationError
from chromsym.orderstruct import Graph, Poset, proper_coloring_count
from chromsym.partitions import partitions_of
from chromsym.symfunc import Basis, SymFunc, specialize_ones

from tests.chromsym.const import (  # noqa: F401
    P,
    p3_poset,
    path3,
    three_plus_one_poset,
)

# region Chromatic symmetric function


def test_single_edge():
    x = chromatic_symmetric_function(Graph.complete(2))
    assert x == SymFunc(2, Basis.MONOMIAL, {P("1,1"): 2})


def test_path3(path3):
    x = chromatic_symmetric_function(path3)
    assert x == SymFunc(3, Basis.MONOMIAL, {P("1,1,1"): 6, P("2,1"): 1})


def test_empty_graph_gives_multinomials():
    x = chromatic_symmetric_function(Graph.empty(3))
    assert x.integer_coefficients() == {P("3"): 1, P("2,1"): 3, P("1,1,1"): 6}


def test_guard():
    with pytest.raises(GuardExceededError):
        chromatic_symmetric_function(Graph.empty(10))


@pytest.mark.parametrize(
    "graph",
    [
        Graph.path(4),
        Graph.complete(4),
        Graph(4, frozenset({(0, 1), (0, 2), (0, 3)})),
        Graph(5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)})),
    ],
)
def test_specialization_counts_colorings(graph):
    x = chromatic_symmetric_function(graph)
    for palette in range(5):
        assert specialize_ones(x, palette) == proper_coloring_count(graph, palette)


# endregion
# region Coefficient families


def test_path3_families(path3):
    assert a_coefficients(path3).integer_coefficients() == {
        P("3"): 3,
        P("2,1"): 1,
        P("1,1,1"): 0,
    }
    assert f_coefficients(path3) == {P("3"): 4, P("2,1"): 1, P("1,1,1"): 0}
    assert c_by_length(path3) == (3, 1, 0)
    assert kappa_by_sinks(path3) == (3, 1, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_complete_graph(n):
    a = a_coefficients(Graph.complete(n))
    assert a == SymFunc(n, Basis.ELEMENTARY, {P(str(n)): factorial(n)})


@pytest.mark.parametrize("n", range(1, 6))
def test_empty_graph(n):
    a = a_coefficients(Graph.empty(n))
    assert a == SymFunc(n, Basis.ELEMENTARY, {P(",".join("1" * n)): 1})


def test_pi_by_first_column(p3_poset):
    assert pi_by_first_column(p3_poset) == (4, 1, 0)
    assert pi_by_first_column(Poset.chain(3)) == (1, 2, 1)


def test_zero_element_families():
    assert c_by_length(Graph.empty(0)) == ()
    report = build_poset_report(Poset(0, frozenset()))
    assert report.degree == 0
    assert report.c == ()
    assert report.kappa == ()
    assert report.pi == ()


# endregion
# region Signed enumeration


def test_theorem1_on_p3(p3_poset):
    assert [
        a_coefficients_via_theorem1(p3_poset, lam) for lam in partitions_of(3)
    ] == [3, 1, 0]
    assert theorem1_coefficients(p3_poset) == {P("3"): 3, P("2,1"): 1, P("1,1,1"): 0}


def test_theorem1_on_antichain_and_chain():
    assert a_coefficients_via_theorem1(Poset.antichain(3), P("3")) == 6
    assert a_coefficients_via_theorem1(Poset.chain(3), P("1,1,1")) == 1


def test_theorem1_refuses_three_plus_one(three_plus_one_poset):
    with pytest.raises(HypothesisViolationError, match="not \\(3\\+1\\)-free") as exc:
        a_coefficients_via_theorem1(three_plus_one_poset, P("4"))
    assert exc.value.obstruction == (0, 1, 2, 3)
    with pytest.raises(HypothesisViolationError):
        theorem1_coefficients(three_plus_one_poset)


# endregion
# region Reports


def test_poset_report(p3_poset):
    report = build_poset_report(p3_poset, with_theorem1=True)
    assert report.degree == 3
    assert report.pi == (4, 1, 0)
    assert report.theorem1 == {P("3"): 3, P("2,1"): 1, P("1,1,1"): 0}
    assert report.format_lines() == [
        "graph: graph n=3: 0-1 1-2",
        "X = 1·m_{2,1} + 6·m_{1,1,1}",
        "X = 3·e_{3} + 1·e_{2,1}",
        "f: 3:4, 2,1:1, 1,1,1:0",
        "c: 3 1 0",
        "kappa: 3 1 0",
        "pi: 4 1 0",
        "theorem1: 3:3, 2,1:1, 1,1,1:0",
    ]


def test_report_json(p3_poset):
    data = json.loads(build_poset_report(p3_poset).to_json())
    assert data["a"] == {"3": 3, "2,1": 1, "1,1,1": 0}
    assert data["f"] == {"3": 4, "2,1": 1, "1,1,1": 0}
    assert data["c"] == [3, 1, 0]
    assert data["kappa"] == [3, 1, 0]
    assert data["pi"] == [4, 1, 0]
    assert "theorem1" not in data
    assert SymFunc.from_dict(data["x"]) == chromatic_symmetric_function(Graph.path(3))


def test_report_tsv(path3):
    assert build_report(path3).to_tsv().splitlines() == [
        "partition\tm\te\tf",
        "3\t0\t3\t4",
        "2,1\t1\t1\t1",
        "1,1,1\t6\t0\t0",
    ]


def test_graph_report_has_no_poset_families(path3):
    report = build_report(path3)
    assert report.pi is None
    assert "pi" not in report.to_dict()


# endregion
