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

"""
Finite posets, simple graphs and their orientations.

Elements and vertices are the integers ``0..n-1``. Posets store their strict order
as a set of pairs ``(u, v)`` meaning ``u < v``; graphs store unordered edges as
``(u, v)`` with ``u < v``; orientations store arcs ``(tail, head)``.
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .const import (
    LOGGER,
    MAX_CANONICAL_SIZE,
    MAX_GRAPH_ENUMERATION,
    MAX_ORIENTATION_EDGES,
    MAX_POSET_ENUMERATION,
    StructureValidator,
)
from .errors import InvalidStructureError, ParseError


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


# region Poset


@dataclass(frozen=True)
class Poset:
    """
    A finite strict partial order on ``0..n-1``.

    Raises:
        InvalidStructureError: If the relation is not irreflexive, antisymmetric
            and transitive, or mentions elements outside ``0..n-1``.
    """

    n: int
    relations: frozenset[tuple[int, int]] = frozenset()
    _up: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)
    _down: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        relations = frozenset((int(u), int(v)) for u, v in self.relations)
        object.__setattr__(self, "relations", relations)
        StructureValidator.get_validator().validate_elements(
            self.n, relations, "order"
        )
        up = [0] * self.n
        down = [0] * self.n
        for u, v in relations:
            up[u] |= 1 << v
            down[v] |= 1 << u
        for u, v in relations:
            if (v, u) in relations:
                raise InvalidStructureError(f"Order is not antisymmetric at {u}, {v}")
        for u in range(self.n):
            for v in _bits(up[u]):
                if up[v] & ~up[u]:
                    raise InvalidStructureError(f"Order is not transitive at {u} < {v}")
        object.__setattr__(self, "_up", tuple(up))
        object.__setattr__(self, "_down", tuple(down))

    # region Factories

    @classmethod
    def chain(cls, n: int) -> "Poset":
        """The chain ``0 < 1 < ... < n-1``."""
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        """``n`` pairwise incomparable elements."""
        return cls(n, frozenset())

    @classmethod
    def from_up_masks(cls, up: Sequence[int]) -> "Poset":
        """Build a poset from the bitmask of elements above each element."""
        return cls(
            len(up), frozenset((u, v) for u in range(len(up)) for v in _bits(up[u]))
        )

    @classmethod
    def from_cover_relations(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """
        Transitive closure of the given relations.

        Raises:
            InvalidStructureError: If the relations contain a cycle or a bad element.
        """
        pairs = list(pairs)
        StructureValidator.get_validator().validate_elements(n, pairs, "cover")
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(n))
        digraph.add_edges_from(pairs)
        if not nx.is_directed_acyclic_graph(digraph):
            raise InvalidStructureError("Cover relations contain a cycle")
        return cls(n, frozenset(nx.transitive_closure_dag(digraph).edges()))

    # endregion
    # region Queries

    def less(self, u: int, v: int) -> bool:
        """Whether ``u < v``."""
        return bool((self._up[u] >> v) & 1)

    def comparable(self, u: int, v: int) -> bool:
        """Whether ``u < v`` or ``v < u``."""
        return self.less(u, v) or self.less(v, u)

    def up_mask(self, u: int) -> int:
        """Bitmask of the elements strictly above ``u``."""
        return self._up[u]

    def minimal_elements(self, subset: Iterable[int] | None = None) -> list[int]:
        """Minimal elements of the induced subposet on ``subset`` (default: all)."""
        members = list(range(self.n)) if subset is None else sorted(set(subset))
        mask = 0
        for x in members:
            mask |= 1 << x
        return [x for x in members if not self._down[x] & mask]

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations in sorted order."""
        return sorted(
            (u, v)
            for u, v in self.relations
            if not any(self.less(u, w) and self.less(w, v) for w in range(self.n))
        )

    def is_connected(self) -> bool:
        """Whether the comparability graph is connected."""
        if self.n <= 1:
            return True
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.relations)
        return nx.is_connected(graph)

    def canonical_form(self) -> tuple[tuple[int, int], ...]:
        """
        The lexicographically least relation list over all relabelings.

        Raises:
            GuardExceededError: For more than ``MAX_CANONICAL_SIZE`` elements.
        """
        StructureValidator.get_validator().validate_guard(
            "Poset size for canonical forms", self.n, MAX_CANONICAL_SIZE
        )
        return min(
            tuple(sorted((perm[u], perm[v]) for u, v in self.relations))
            for perm in permutations(range(self.n))
        )

    @property
    def label(self) -> str:
        """Compact identifier, e.g. ``poset n=3: 0<2``."""
        covers = " ".join(f"{u}<{v}" for u, v in self.covers())
        return f"poset n={self.n}" + (f": {covers}" if covers else "")

    # endregion


def ordinal_sum_of_antichains(nu: Sequence[int]) -> Poset:
    """
    Blocks of sizes ``nu_1, nu_2, ...``; x < y iff x's block comes before y's.

    Raises:
        InvalidStructureError: If some block size is not positive.
    """
    if any(size < 1 for size in nu):
        raise InvalidStructureError(f"Block sizes must be positive: {tuple(nu)}")
    block = [b for b, size in enumerate(nu) for _ in range(size)]
    n = len(block)
    return Poset(
        n, frozenset((x, y) for x in range(n) for y in range(n) if block[x] < block[y])
    )


def three_plus_one_obstruction(poset: Poset) -> tuple[int, ...] | None:
    """
    The first 4-subset inducing a 3-chain plus an incomparable point.

    Returns:
        tuple | None: ``(a, b, c, d)`` with ``a < b < c`` and ``d`` incomparable to
        all three, or None if the poset is (3+1)-free.
    """
    for quad in combinations(range(poset.n), 4):
        for d in quad:
            rest = [x for x in quad if x != d]
            if any(poset.comparable(d, x) for x in rest):
                continue
            # in a chain a < b < c, a has the most elements above it
            a, b, c = sorted(
                rest, key=lambda x: bin(poset.up_mask(x)).count("1"), reverse=True
            )
            if poset.less(a, b) and poset.less(b, c):
                return (a, b, c, d)
    return None


def is_three_plus_one_free(poset: Poset) -> bool:
    """Whether no induced subposet is a 3-chain plus a disjoint point."""
    return three_plus_one_obstruction(poset) is None


# endregion
# region Graph


@dataclass(frozen=True)
class Graph:
    """
    A finite simple undirected graph on ``0..n-1``.

    Raises:
        InvalidStructureError: On loops or vertices outside ``0..n-1``.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    _adj: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        edges = [(int(u), int(v)) for u, v in self.edges]
        StructureValidator.get_validator().validate_elements(self.n, edges, "edge")
        normalized = frozenset((min(u, v), max(u, v)) for u, v in edges)
        object.__setattr__(self, "edges", normalized)
        adj = [0] * self.n
        for u, v in normalized:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        """The complete graph K_n."""
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """The edgeless graph on ``n`` vertices."""
        return cls(n, frozenset())

    @classmethod
    def path(cls, n: int) -> "Graph":
        """The path ``0 - 1 - ... - n-1``."""
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    def sorted_edges(self) -> list[tuple[int, int]]:
        """Edges in lexicographic order."""
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        """Whether ``u`` and ``v`` are adjacent."""
        return bool((self._adj[u] >> v) & 1)

    def neighbor_mask(self, v: int) -> int:
        """Bitmask of the neighbors of ``v``."""
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in increasing order."""
        return list(_bits(self._adj[v]))

    def is_independent(self, mask: int) -> bool:
        """Whether the vertex set ``mask`` spans no edge."""
        return all(not self._adj[v] & mask for v in _bits(mask))

    def to_networkx(self) -> nx.Graph:
        """Copy into a ``networkx.Graph``."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        """Whether the graph is connected (the null graph counts as connected)."""
        return self.n <= 1 or nx.is_connected(self.to_networkx())

    @property
    def label(self) -> str:
        """Compact identifier, e.g. ``graph n=3: 0-1 1-2``."""
        edges = " ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"graph n={self.n}" + (f": {edges}" if edges else "")


def incomparability_graph(poset: Poset) -> Graph:
    """Edges join exactly the incomparable pairs of ``poset``."""
    return Graph(
        poset.n,
        frozenset(
            (u, v)
            for u, v in combinations(range(poset.n), 2)
            if not poset.comparable(u, v)
        ),
    )


def is_clawfree(graph: Graph) -> bool:
    """Whether no vertex has three pairwise non-adjacent neighbors."""
    for v in range(graph.n):
        for a, b, c in combinations(graph.neighbors(v), 3):
            if not any(graph.has_edge(x, y) for x, y in ((a, b), (a, c), (b, c))):
                return False
    return True


def proper_coloring_count(graph: Graph, palette: int) -> int:
    """
    Number of proper colorings of ``graph`` with colors ``1..palette``.

    Vertices are colored in order; each step only tries the colors not already
    used by an earlier neighbor.
    """
    earlier = [[u for u in graph.neighbors(v) if u < v] for v in range(graph.n)]
    colors = [0] * graph.n

    def extend(vertex: int) -> int:
        if vertex == graph.n:
            return 1
        occupied = {colors[u] for u in earlier[vertex]}
        total = 0
        for color in range(1, palette + 1):
            if color not in occupied:
                colors[vertex] = color
                total += extend(vertex + 1)
        return total

    return extend(0)


# endregion
# region Orientations


@dataclass(frozen=True)
class Orientation:
    """
    A direction for every edge of a graph, as arcs ``(tail, head)``.

    Raises:
        InvalidStructureError: If the arcs do not orient each edge exactly once.
    """

    graph: Graph
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        undirected = [(min(u, v), max(u, v)) for u, v in arcs]
        if len(undirected) != len(set(undirected)) or (
            set(undirected) != self.graph.edges
        ):
            raise InvalidStructureError(
                "An orientation must direct every edge of its graph exactly once"
            )

    @classmethod
    def from_bits(cls, graph: Graph, bits: Sequence[int]) -> "Orientation":
        """Bit 0 directs edge ``(u, v)``, ``u < v``, as ``u -> v``; bit 1 flips it."""
        edges = graph.sorted_edges()
        StructureValidator.get_validator().validate_same_size(
            "orientation bits", len(bits), len(edges)
        )
        return cls(
            graph,
            frozenset(
                (u, v) if not bit else (v, u) for (u, v), bit in zip(edges, bits)
            ),
        )

    def out_masks(self) -> tuple[int, ...]:
        """Bitmask of out-neighbors per vertex."""
        out = [0] * self.graph.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @property
    def sinks(self) -> tuple[int, ...]:
        """Vertices without outgoing arcs, in increasing order."""
        out = self.out_masks()
        return tuple(v for v in range(self.graph.n) if not out[v])

    def is_acyclic(self) -> bool:
        """Whether no directed cycle exists (depth-first search)."""
        out = self.out_masks()
        state = [0] * self.graph.n  # 0 new, 1 on stack, 2 done

        def visit(v: int) -> bool:
            state[v] = 1
            for w in _bits(out[v]):
                if state[w] == 1 or (state[w] == 0 and not visit(w)):
                    return False
            state[v] = 2
            return True

        return all(state[v] or visit(v) for v in range(self.graph.n))

    def to_networkx(self) -> nx.DiGraph:
        """Copy into a ``networkx.DiGraph``."""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(self.graph.n))
        digraph.add_edges_from(self.arcs)
        return digraph


def _reaches(out: list[int], source: int, target: int) -> bool:
    seen = 1 << source
    stack = [source]
    while stack:
        v = stack.pop()
        if v == target:
            return True
        fresh = out[v] & ~seen
        seen |= fresh
        stack.extend(_bits(fresh))
    return False


def _acyclic_out_masks(graph: Graph) -> Iterator[tuple[int, ...]]:
    # Orient edges one at a time, pruning as soon as a directed cycle appears
    StructureValidator.get_validator().validate_guard(
        "Edge count for orientation enumeration",
        len(graph.edges),
        MAX_ORIENTATION_EDGES,
    )
    edges = graph.sorted_edges()
    out = [0] * graph.n

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(edges):
            yield tuple(out)
            return
        u, v = edges[i]
        for tail, head in ((u, v), (v, u)):
            if _reaches(out, head, tail):
                continue
            out[tail] |= 1 << head
            yield from extend(i + 1)
            out[tail] &= ~(1 << head)

    yield from extend(0)


def acyclic_orientations(graph: Graph) -> Iterator[Orientation]:
    """
    All acyclic orientations of ``graph`` in a deterministic order.

    Raises:
        GuardExceededError: For more than ``MAX_ORIENTATION_EDGES`` edges.
    """
    for out in _acyclic_out_masks(graph):
        yield Orientation(
            graph, frozenset((u, v) for u in range(graph.n) for v in _bits(out[u]))
        )


def acyclic_orientation_sink_counts(graph: Graph) -> dict[int, int]:
    """
    Map each sink count ``l`` to the number of acyclic orientations with ``l`` sinks.

    Raises:
        GuardExceededError: For more than ``MAX_ORIENTATION_EDGES`` edges.
    """
    counts: dict[int, int] = {}
    for out in _acyclic_out_masks(graph):
        sinks = sum(1 for mask in out if not mask)
        counts[sinks] = counts.get(sinks, 0) + 1
    return dict(sorted(counts.items()))


def orientation_induced_order(orientation: Orientation) -> Poset:
    """
    The order with ``u < v`` iff there is a directed path from ``v`` to ``u``.

    Its minimal elements are exactly the sinks of the orientation.

    Raises:
        InvalidStructureError: If the orientation has a directed cycle.
    """
    digraph = orientation.to_networkx()
    if not nx.is_directed_acyclic_graph(digraph):
        raise InvalidStructureError("A cyclic orientation induces no order")
    closure = nx.transitive_closure_dag(digraph)
    order = Poset(orientation.graph.n, frozenset((v, u) for u, v in closure.edges()))
    if tuple(order.minimal_elements()) != orientation.sinks:
        raise InvalidStructureError(
            "Sinks differ from the minimal elements of the induced order"
        )
    return order


# endregion
# region Generators


def _down_closed_masks(up: Sequence[int]) -> list[int]:
    n = len(up)
    down = [0] * n
    for u in range(n):
        for v in _bits(up[u]):
            down[v] |= 1 << u
    return [
        mask
        for mask in range(1 << n)
        if all(not down[x] & ~mask for x in _bits(mask))
    ]


def _extensions(up: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # Add element n below the down-set D and above nothing else, below the up-set U
    n = len(up)
    down_sets = _down_closed_masks(up)
    up_sets = [
        mask
        for mask in range(1 << n)
        if all(not up[x] & ~mask for x in _bits(mask))
    ]
    for lower in down_sets:
        for upper in up_sets:
            if lower & upper:
                continue
            if any(up[d] & upper != upper for d in _bits(lower)):
                continue
            new_up = list(up)
            for d in _bits(lower):
                new_up[d] |= 1 << n
            new_up.append(upper)
            for d in _bits(lower):
                new_up[d] |= upper
            yield tuple(new_up)


def enumerate_posets(
    n: int,
    *,
    three_plus_one_free: bool = False,
    connected: bool = False,
    unlabeled: bool = False,
) -> Iterator[Poset]:
    """
    All labeled posets on ``0..n-1`` in a deterministic order.

    Each poset is produced once, by extending its restriction to ``0..n-2`` with
    the new element ``n-1``. Being (3+1)-free is hereditary, so that filter
    prunes during generation.

    Args:
        n (int): number of elements.
        three_plus_one_free (bool): keep only (3+1)-free posets.
        connected (bool): keep only posets with a connected comparability graph.
        unlabeled (bool): keep one representative per isomorphism class
            (requires ``n <= MAX_CANONICAL_SIZE``).

    Raises:
        GuardExceededError: If ``n`` exceeds ``MAX_POSET_ENUMERATION``, or
            ``MAX_CANONICAL_SIZE`` when ``unlabeled`` is set.
    """
    validator = StructureValidator.get_validator()
    validator.validate_guard("Poset enumeration size", n, MAX_POSET_ENUMERATION)
    if unlabeled:
        validator.validate_guard(
            "Poset size for canonical forms", n, MAX_CANONICAL_SIZE
        )

    def grow(up: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(up) == n:
            yield up
            return
        for child in _extensions(up):
            if three_plus_one_free and not is_three_plus_one_free(
                Poset.from_up_masks(child)
            ):
                continue
            yield from grow(child)

    seen: set[tuple[tuple[int, int], ...]] = set()
    produced = 0
    for up in grow(()):
        poset = Poset.from_up_masks(up)
        if connected and not poset.is_connected():
            continue
        if unlabeled:
            key = poset.canonical_form()
            if key in seen:
                continue
            seen.add(key)
        produced += 1
        yield poset
    LOGGER.debug("Enumerated %d posets on %d elements", produced, n)


def enumerate_graphs(
    n: int, *, connected: bool = False, clawfree: bool = False
) -> Iterator[Graph]:
    """
    All labeled simple graphs on ``0..n-1``, by increasing edge-subset bitmask.

    Raises:
        GuardExceededError: If ``n`` exceeds ``MAX_GRAPH_ENUMERATION``.
    """
    StructureValidator.get_validator().validate_guard(
        "Graph enumeration size", n, MAX_GRAPH_ENUMERATION
    )
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        graph = Graph(n, frozenset(pairs[i] for i in _bits(mask)))
        if connected and not graph.is_connected():
            continue
        if clawfree and not is_clawfree(graph):
            continue
        yield graph


# endregion
# region File formats


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line_no, line


def _parse_header(lines: list[tuple[int, str]], kind: str) -> int:
    if not lines:
        raise ParseError(f"Empty {kind} file: expected a '{kind} n=<N>' header", 1)
    line_no, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != kind or not tokens[1].startswith("n="):
        raise ParseError(f"Expected '{kind} n=<N>', got '{header}'", line_no)
    try:
        n = int(tokens[1][2:])
    except ValueError as e:
        raise ParseError(f"Invalid element count in '{header}'", line_no) from e
    if n < 0:
        raise ParseError(f"Negative element count in '{header}'", line_no)
    return n


def _parse_index(token: str, n: int, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError as e:
        raise ParseError(f"'{token}' is not an integer", line_no) from e
    if not 0 <= value < n:
        raise ParseError(f"Index {value} out of range 0..{n - 1}", line_no)
    return value


def parse_graph(text: str) -> Graph:
    """
    Parse ``graph n=<N>`` followed by one ``u v`` pair per line.

    Raises:
        ParseError: On syntax errors, loops or repeated edges (with line numbers).
    """
    lines = list(_content_lines(text))
    n = _parse_header(lines, "graph")
    edges: set[tuple[int, int]] = set()
    for line_no, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"Expected 'u v', got '{line}'", line_no)
        u, v = (_parse_index(t, n, line_no) for t in tokens)
        if u == v:
            raise ParseError(f"Loop at vertex {u}", line_no)
        edge = (min(u, v), max(u, v))
        if edge in edges:
            raise ParseError(f"Repeated edge {u} {v}", line_no)
        edges.add(edge)
    return Graph(n, frozenset(edges))


def parse_poset(text: str) -> Poset:
    """
    Parse ``poset n=<N>`` followed by one ``u < v`` relation per line.

    The relations are closed transitively.

    Raises:
        ParseError: On syntax errors or cyclic relations (with line numbers).
    """
    lines = list(_content_lines(text))
    n = _parse_header(lines, "poset")
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(n))
    for line_no, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3 or tokens[1] != "<":
            raise ParseError(f"Expected 'u < v', got '{line}'", line_no)
        u, v = _parse_index(tokens[0], n, line_no), _parse_index(tokens[2], n, line_no)
        if u == v:
            raise ParseError(f"Element {u} cannot be below itself", line_no)
        if nx.has_path(digraph, v, u):
            raise ParseError(f"Relation {u} < {v} closes a cycle", line_no)
        digraph.add_edge(u, v)
    return Poset.from_cover_relations(n, list(digraph.edges()))


def load_graph(path: str | Path) -> Graph:
    """Read a graph file (see :func:`parse_graph`)."""
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def load_poset(path: str | Path) -> Poset:
    """Read a poset file (see :func:`parse_poset`)."""
    return parse_poset(Path(path).read_text(encoding="utf-8"))


def dump_graph(graph: Graph) -> str:
    """Render ``graph`` in the graph file format."""
    lines = [f"graph n={graph.n}"] + [f"{u} {v}" for u, v in graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def dump_poset(poset: Poset) -> str:
    """Render ``poset`` in the poset file format, listing cover relations."""
    lines = [f"poset n={poset.n}"] + [f"{u} < {v}" for u, v in poset.covers()]
    return "\n".join(lines) + "\n"


# endregion
