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
P-tableaux, special rim hook tabloids and the maps between them.

A P-tableau fills a Ferrers shape with every element of a poset once, so that
columns strictly increase downward and no element is immediately left of a smaller
one. A special rim hook tabloid cuts a shape into border strips that each touch the
first column and can be peeled off one at a time.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .const import LOGGER, StructureValidator
from .errors import InvalidStructureError
from .orderstruct import (
    Orientation,
    Poset,
    incomparability_graph,
    orientation_induced_order,
)
from .partitions import Cell, Partition, hook_shape, partition_from_sizes, partitions_of

# region P-tableaux


@dataclass(frozen=True)
class PTableau:
    """
    A filling of ``shape`` by the elements ``0..n-1``, each used once.

    The poset conditions are checked by :meth:`is_p_tableau`.

    Raises:
        InvalidStructureError: If the rows do not match the shape or the filling is
            not a bijection onto ``0..n-1``.
    """

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(row) for row in rows) != self.shape.parts:
            raise InvalidStructureError(
                f"Rows {rows} do not fill the shape {self.shape}"
            )
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(self.shape.size)):
            raise InvalidStructureError(f"Filling {rows} is not a bijection")

    def __getitem__(self, cell: Cell) -> int:
        return self.rows[cell.row - 1][cell.col - 1]

    @property
    def filling(self) -> dict[Cell, int]:
        """The filling as a map from cells to elements."""
        return {cell: self[cell] for cell in self.shape.cells()}

    def position(self, element: int) -> Cell:
        """The cell holding ``element``."""
        for i, row in enumerate(self.rows, start=1):
            if element in row:
                return Cell(i, row.index(element) + 1)
        raise InvalidStructureError(f"Element {element} is not in the tableau")

    def is_p_tableau(self, poset: Poset) -> bool:
        """Whether columns strictly increase and no row neighbor pair descends."""
        if poset.n != self.shape.size:
            return False
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if i > 0 and not poset.less(self.rows[i - 1][j], x):
                    return False
                if j > 0 and poset.less(x, row[j - 1]):
                    return False
        return True


def enumerate_p_tableaux(poset: Poset, shape: Partition) -> list[PTableau]:
    """
    All P-tableaux of ``shape``, by row-major backtracking.

    Raises:
        InvalidStructureError: If ``|shape| != |P|``.
    """
    StructureValidator.get_validator().validate_same_size(
        "P-tableau shape", shape.size, poset.n
    )
    cells = [(i, j) for i, p in enumerate(shape.parts) for j in range(p)]
    grid = [[-1] * p for p in shape.parts]
    found: list[PTableau] = []

    def place(k: int, used: int) -> None:
        if k == len(cells):
            found.append(PTableau(shape, tuple(tuple(row) for row in grid)))
            return
        i, j = cells[k]
        for x in range(poset.n):
            if used >> x & 1:
                continue
            if i > 0 and not poset.less(grid[i - 1][j], x):
                continue
            if j > 0 and poset.less(x, grid[i][j - 1]):
                continue
            grid[i][j] = x
            place(k + 1, used | 1 << x)
        grid[i][j] = -1

    place(0, 0)
    return found


def render_p_tableau(tableau: PTableau) -> str:
    """Grid of element labels, one row per line."""
    width = len(str(max(tableau.shape.size - 1, 0)))
    return "\n".join(
        " ".join(str(x).rjust(width) for x in row) for row in tableau.rows
    )


# endregion
# region Rim hooks and tabloids


def _is_order_ideal(cells: frozenset[Cell]) -> bool:
    return all(
        (c.row == 1 or Cell(c.row - 1, c.col) in cells)
        and (c.col == 1 or Cell(c.row, c.col - 1) in cells)
        for c in cells
    )


@dataclass(frozen=True)
class RimHook:
    """
    An edgewise connected set of cells with no 2x2 block.

    Raises:
        InvalidStructureError: If the cells are empty, disconnected or contain a
            2x2 block.
    """

    cells: frozenset[Cell]

    def __post_init__(self):
        cells = frozenset(self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells:
            raise InvalidStructureError("A rim hook needs at least one cell")
        coords = {(c.row, c.col) for c in cells}
        for r, k in coords:
            if {(r, k + 1), (r + 1, k), (r + 1, k + 1)} <= coords:
                raise InvalidStructureError(
                    f"Rim hook contains a 2x2 block at ({r},{k})"
                )
        start = min(coords)
        seen = {start}
        stack = [start]
        while stack:
            r, k = stack.pop()
            for step in ((r - 1, k), (r + 1, k), (r, k - 1), (r, k + 1)):
                if step in coords and step not in seen:
                    seen.add(step)
                    stack.append(step)
        if len(seen) != len(coords):
            raise InvalidStructureError("Rim hook is not edgewise connected")

    @property
    def size(self) -> int:
        """Number of cells."""
        return len(self.cells)

    @property
    def height(self) -> int:
        """Number of distinct rows."""
        return len({c.row for c in self.cells})

    @property
    def sign(self) -> int:
        """``(-1)^(height - 1)``."""
        return -1 if self.height % 2 == 0 else 1

    @property
    def is_special(self) -> bool:
        """Whether some cell lies in the first column."""
        return any(c.col == 1 for c in self.cells)

    @property
    def anchor(self) -> Cell:
        """Topmost, then leftmost, cell."""
        return min(self.cells)


def _peelable(shape_cells: frozenset[Cell], hooks: Sequence[RimHook]) -> bool:
    @lru_cache(maxsize=None)
    def peel(remaining: frozenset[int], cells: frozenset[Cell]) -> bool:
        if not remaining:
            return not cells
        for i in remaining:
            rest = cells - hooks[i].cells
            if _is_order_ideal(rest) and peel(remaining - {i}, rest):
                return True
        return False

    return peel(frozenset(range(len(hooks))), shape_cells)


@dataclass(frozen=True)
class SpecialRimHookTabloid:
    """
    A decomposition of ``shape`` into special rim hooks that can be removed one at
    a time, each removal leaving a Ferrers diagram.

    Raises:
        InvalidStructureError: If the hooks overlap, miss cells of the shape, are
            not special, or cannot be peeled off.
    """

    shape: Partition
    hooks: frozenset[RimHook]

    def __post_init__(self):
        object.__setattr__(self, "hooks", frozenset(self.hooks))
        validate_tabloid(self.shape, self.hooks)

    def ordered_hooks(self) -> list[RimHook]:
        """Hooks numbered by their topmost-then-leftmost cell."""
        return sorted(self.hooks, key=lambda hook: hook.anchor)

    @property
    def type(self) -> Partition:
        """The multiset of hook sizes."""
        return partition_from_sizes([hook.size for hook in self.hooks])

    @property
    def sign(self) -> int:
        """Product of the hook signs."""
        sign = 1
        for hook in self.hooks:
            sign *= hook.sign
        return sign

    @property
    def hook_count(self) -> int:
        """Number of hooks."""
        return len(self.hooks)

    def hook_containing(self, cell: Cell) -> RimHook:
        """The hook holding ``cell``."""
        for hook in self.hooks:
            if cell in hook.cells:
                return hook
        raise InvalidStructureError(f"Cell {cell} is not in the shape {self.shape}")


def validate_tabloid(shape: Partition, hooks: Iterable[RimHook]) -> None:
    """
    Check that ``hooks`` form a special rim hook tabloid of ``shape``.

    Raises:
        InvalidStructureError: If the hooks overlap, miss cells of the shape, are
            not special, or cannot be peeled off.
    """
    hooks = sorted(hooks, key=lambda hook: hook.anchor)
    shape_cells = frozenset(shape.cells())
    covered = [c for hook in hooks for c in hook.cells]
    if len(covered) != len(set(covered)) or set(covered) != shape_cells:
        raise InvalidStructureError(f"Hooks do not tile the shape {shape} exactly")
    if not all(hook.is_special for hook in hooks):
        raise InvalidStructureError("Every hook must meet the first column")
    if not _peelable(shape_cells, hooks):
        raise InvalidStructureError("Hooks cannot be peeled off one at a time")


def render_tabloid(tabloid: SpecialRimHookTabloid) -> str:
    """Grid of hook numbers followed by a ``type=... sign=...`` trailer."""
    number = {}
    for index, hook in enumerate(tabloid.ordered_hooks(), start=1):
        for cell in hook.cells:
            number[cell] = index
    width = len(str(tabloid.hook_count))
    grid = [
        " ".join(str(number[Cell(i, j)]).rjust(width) for j in range(1, p + 1))
        for i, p in enumerate(tabloid.shape.parts, start=1)
    ]
    sign = "+1" if tabloid.sign > 0 else "-1"
    return "\n".join(grid + [f"type={tabloid.type} sign={sign}"])


def _bottom_hooks(
    parts: tuple[int, ...]
) -> Iterator[tuple[int, frozenset[Cell], tuple[int, ...]]]:
    # Removable special rim hooks through the bottom-left cell: one per top row i.
    # Yields (top row, cells, residual parts).
    length = len(parts)
    for top in range(length, 0, -1):
        cells = [Cell(length, j) for j in range(1, parts[-1] + 1)]
        for r in range(length - 1, top - 1, -1):
            cells.extend(Cell(r, j) for j in range(parts[r], parts[r - 1] + 1))
        residue = parts[: top - 1] + tuple(parts[r] - 1 for r in range(top, length))
        yield top, frozenset(cells), tuple(p for p in residue if p > 0)


def _peel_bottom_first(
    parts: tuple[int, ...], remaining: Counter | None
) -> Iterator[list[frozenset[Cell]]]:
    if not parts:
        yield []
        return
    for _, cells, residue in _bottom_hooks(parts):
        if remaining is not None:
            if remaining[len(cells)] == 0:
                continue
            remaining[len(cells)] -= 1
        for rest in _peel_bottom_first(residue, remaining):
            yield [cells] + rest
        if remaining is not None:
            remaining[len(cells)] += 1


def enumerate_srht(
    shape: Partition, type_filter: Partition | None = None
) -> list[tuple[SpecialRimHookTabloid, int]]:
    """
    All special rim hook tabloids of ``shape`` (optionally of one type) with signs.

    Each tabloid is produced once: the hook through the bottom-left cell of the
    current shape is always removed first.
    """
    remaining = None
    if type_filter is not None:
        if type_filter.size != shape.size:
            return []
        remaining = Counter(type_filter.parts)
    found = []
    for hooks in _peel_bottom_first(shape.parts, remaining):
        tabloid = SpecialRimHookTabloid(shape, frozenset(RimHook(h) for h in hooks))
        found.append((tabloid, tabloid.sign))
    LOGGER.debug("Shape %s type %s: %d tabloids", shape, type_filter, len(found))
    return found


@lru_cache(maxsize=None)
def _signed_count(parts: tuple[int, ...], remaining: tuple[int, ...]) -> int:
    if not parts:
        return 1 if not remaining else 0
    total = 0
    for top, cells, residue in _bottom_hooks(parts):
        size = len(cells)
        if size not in remaining:
            continue
        rest = list(remaining)
        rest.remove(size)
        height = len(parts) - top + 1
        total += (-1) ** (height - 1) * _signed_count(residue, tuple(rest))
    return total


def signed_tabloid_count(shape: Partition, type_: Partition) -> int:
    """Sum of the signs of the special rim hook tabloids of ``shape`` and ``type_``."""
    if shape.size != type_.size:
        return 0
    return _signed_count(shape.parts, type_.parts)


def hook_tabloid_count(k: int, hooks: int) -> int:
    """Tabloids of a hook shape with ``k`` rows cut into ``hooks`` special hooks."""
    return comb(k - 1, hooks - 1) if k >= 1 and hooks >= 1 else 0


# endregion
# region Special rim hook P-tableaux


@dataclass(frozen=True)
class SpecialRimHookPTableau:
    """
    A P-tableau paired with a special rim hook tabloid of the same shape.

    Raises:
        InvalidStructureError: If the two shapes differ.
    """

    tableau: PTableau
    tabloid: SpecialRimHookTabloid

    def __post_init__(self):
        if self.tableau.shape != self.tabloid.shape:
            raise InvalidStructureError(
                f"Shapes differ: {self.tableau.shape} vs {self.tabloid.shape}"
            )

    @property
    def shape(self) -> Partition:
        """The common shape."""
        return self.tableau.shape

    @property
    def sign(self) -> int:
        """The sign of the tabloid."""
        return self.tabloid.sign

    @property
    def hook_count(self) -> int:
        """Number of rim hooks."""
        return self.tabloid.hook_count


def enumerate_srhpt(poset: Poset, type_: Partition) -> list[SpecialRimHookPTableau]:
    """
    All special rim hook P-tableaux of type ``type_``, over every shape.

    Raises:
        InvalidStructureError: If ``|type_| != |P|``.
    """
    StructureValidator.get_validator().validate_same_size(
        "tabloid type", type_.size, poset.n
    )
    found = []
    for shape in partitions_of(poset.n):
        tabloids = enumerate_srht(shape, type_)
        if not tabloids:
            continue
        for tableau in enumerate_p_tableaux(poset, shape):
            found.extend(SpecialRimHookPTableau(tableau, t) for t, _ in tabloids)
    return found


def sigma(item: SpecialRimHookPTableau) -> SpecialRimHookPTableau:
    """
    The sign-reversing involution on non-hook shapes.

    With H1 the hook through (1,1) and H2 the hook through (2,2): if H2 meets row 1
    its row-1 cells move to H1; otherwise, with (2,m) the rightmost cell of H2, the
    row-1 cells of H1 in columns ``>= m`` move to H2. The P-tableau is unchanged.

    Raises:
        InvalidStructureError: If the shape is a hook.
    """
    shape = item.shape
    if shape.is_hook():
        raise InvalidStructureError(f"sigma is undefined on the hook shape {shape}")
    tabloid = item.tabloid
    first = tabloid.hook_containing(Cell(1, 1))
    second = tabloid.hook_containing(Cell(2, 2))
    if first == second:
        raise InvalidStructureError("The hooks through (1,1) and (2,2) coincide")
    moved = frozenset(c for c in second.cells if c.row == 1)
    if moved:
        new_first, new_second = first.cells | moved, second.cells - moved
    else:
        m = max(c.col for c in second.cells if c.row == 2)
        moved = frozenset(c for c in first.cells if c.row == 1 and c.col >= m)
        new_first, new_second = first.cells - moved, second.cells | moved
    hooks = tabloid.hooks - {first, second}
    hooks |= {RimHook(new_first), RimHook(new_second)}
    return SpecialRimHookPTableau(item.tableau, SpecialRimHookTabloid(shape, hooks))


# endregion
# region Hook tableaux and acyclic orientations


def orientation_from_hook_tableau(poset: Poset, tableau: PTableau) -> Orientation:
    """
    The acyclic orientation of the incomparability graph induced by a hook-shaped
    P-tableau: each edge points from the element in the column further right.

    Raises:
        InvalidStructureError: If the shape is not a hook, or two adjacent vertices
            share a column.
    """
    if not tableau.shape.is_hook():
        raise InvalidStructureError(f"Shape {tableau.shape} is not a hook")
    column = {x: tableau.position(x).col for x in range(poset.n)}
    graph = incomparability_graph(poset)
    arcs = set()
    for u, v in graph.sorted_edges():
        if column[u] == column[v]:
            raise InvalidStructureError(f"Adjacent elements {u}, {v} share a column")
        arcs.add((u, v) if column[u] > column[v] else (v, u))
    return Orientation(graph, frozenset(arcs))


def _ascending_chain(poset: Poset, elements: Sequence[int]) -> list[int]:
    # The elements must be pairwise comparable; returned in increasing order
    for u, v in combinations(elements, 2):
        if not poset.comparable(u, v):
            raise InvalidStructureError(
                f"Elements {sorted(elements)} do not form a chain"
                f" ({u} and {v} are incomparable)"
            )
    return sorted(elements, key=lambda x: -bin(poset.up_mask(x)).count("1"))


def hook_tableaux_inducing(
    poset: Poset, orientation: Orientation, k: int
) -> list[PTableau]:
    """
    The hook P-tableaux with ``k`` cells in the first column inducing
    ``orientation``; there are ``C(l-1, k-1)`` of them for ``l`` sinks.

    Cell (1,1) holds the smallest sink, the rest of the first column holds ``k-1``
    further sinks in increasing order, and the first row is filled greedily with
    the smallest minimal element of what remains of the induced order.

    Raises:
        InvalidStructureError: If the orientation is not one of the incomparability
            graph of ``poset``.
    """
    if orientation.graph != incomparability_graph(poset):
        raise InvalidStructureError(
            "The orientation is not one of the incomparability graph of the poset"
        )
    sinks = _ascending_chain(poset, orientation.sinks)
    if not 1 <= k <= len(sinks):
        return []
    order = orientation_induced_order(orientation)
    shape = hook_shape(poset.n, k)
    found = []
    for lower in combinations(sinks[1:], k - 1):
        remaining = set(range(poset.n)) - set(lower) - {sinks[0]}
        row = [sinks[0]]
        while remaining:
            nxt = _ascending_chain(poset, order.minimal_elements(remaining))[0]
            row.append(nxt)
            remaining.remove(nxt)
        found.append(PTableau(shape, (tuple(row),) + tuple((x,) for x in lower)))
    return found


# endregion
