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
# pylint: disable=redefined-outer-name

from pathlib import Path

import pytest

from chromsym.orderstruct import Graph, Poset
from chromsym.partitions import Partition

# The poset a < c with b incomparable to both: elements 0=a, 1=b, 2=c. Its
# incomparability graph is the path 0-1-2.
P3_POSET_TEXT = """# a < c, b free
poset n=3
0 < 2
"""

PATH3_GRAPH_TEXT = """graph n=3
0 1
1 2
"""

# 3-chain 0<1<2 plus the isolated element 3
THREE_PLUS_ONE_TEXT = """poset n=4
0 < 1
1 < 2
"""

P = Partition.parse


@pytest.fixture
def p3_poset() -> Poset:
    return Poset(3, frozenset({(0, 2)}))


@pytest.fixture
def path3() -> Graph:
    return Graph.path(3)


@pytest.fixture
def three_plus_one_poset() -> Poset:
    return Poset.from_cover_relations(4, [(0, 1), (1, 2)])


@pytest.fixture
def p3_poset_file(tmp_path: Path) -> Path:
    path = tmp_path / "p3.poset"
    path.write_text(P3_POSET_TEXT, encoding="utf-8")
    return path


@pytest.fixture
def path3_graph_file(tmp_path: Path) -> Path:
    path = tmp_path / "path3.graph"
    path.write_text(PATH3_GRAPH_TEXT, encoding="utf-8")
    return path


@pytest.fixture
def three_plus_one_poset_file(tmp_path: Path) -> Path:
    path = tmp_path / "three_plus_one.poset"
    path.write_text(THREE_PLUS_ONE_TEXT, encoding="utf-8")
    return path
