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
Integer partitions and Ferrers shapes.

Shapes are drawn English style: row 1 is on top, column 1 on the left, and cell
``(i, j)`` belongs to the shape ``mu`` iff ``j <= mu_i``. Every list of partitions
produced here is in reverse lexicographic order, which is the canonical order
used to index coefficient vectors and transition matrices.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InvalidStructureError, ParseError


@dataclass(frozen=True, order=True, slots=True)
class Cell:
    """A cell of a Ferrers diagram, with 1-based coordinates."""

    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise InvalidStructureError(
                f"Cell coordinates must be positive, got ({self.row},{self.col})"
            )

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True, slots=True)
class Partition:
    """
    An integer partition: a weakly decreasing tuple of positive parts.

    Raises:
        InvalidStructureError: If the parts are not positive and weakly decreasing.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any((not isinstance(p, int)) or p < 1 for p in parts):
            raise InvalidStructureError(f"Partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidStructureError(
                f"Partition parts must be weakly decreasing: {parts}"
            )

    # region Basic properties

    @property
    def size(self) -> int:
        """The integer d being partitioned (sum of the parts)."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts, also written l(lambda)."""
        return len(self.parts)

    def part(self, i: int) -> int:
        """The 1-based ``i``-th part, or 0 beyond the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def multiplicities(self) -> dict[int, int]:
        """Map each distinct part to the number of times it occurs."""
        counts: dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    # endregion
    # region Ferrers diagram

    def cells(self) -> Iterator[Cell]:
        """The cells of the diagram in row-major order."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield Cell(i, j)

    def contains(self, cell: Cell) -> bool:
        """Whether ``cell`` lies in the diagram."""
        return cell.col <= self.part(cell.row)

    def conjugate(self) -> "Partition":
        """The conjugate partition (transpose of the diagram)."""
        if not self.parts:
            return self
        return Partition(
            tuple(
                sum(1 for p in self.parts if p >= j)
                for j in range(1, self.parts[0] + 1)
            )
        )

    def is_hook(self) -> bool:
        """
        Whether the shape is a hook, i.e. it has no cell (2,2).

        Raises:
            InvalidStructureError: For the empty partition.
        """
        if not self.parts:
            raise InvalidStructureError("The empty partition has no hook status")
        return self.part(2) <= 1

    def first_column_length(self) -> int:
        """
        Number of cells k(mu) in the first column.

        Raises:
            InvalidStructureError: For the empty partition.
        """
        if not self.parts:
            raise InvalidStructureError("The empty partition has no first column")
        return self.length

    def dominates(self, other: "Partition") -> bool:
        """Dominance order: every partial sum of self is >= that of other."""
        if self.size != other.size:
            return False
        left = right = 0
        for i in range(1, max(self.length, other.length) + 1):
            left += self.part(i)
            right += other.part(i)
            if left < right:
                return False
        return True

    # endregion
    # region Parsing

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Parse the comma syntax used on the command line and in files.

        The empty string is the empty partition. Parts are never reordered.

        Raises:
            ParseError: If the text is not a comma separated list of positive
                integers in weakly decreasing order.
        """
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(token) for token in text.split(","))
            return cls(parts)
        except (ValueError, InvalidStructureError) as e:
            raise ParseError(f"Invalid partition '{text}' ({e})") from e

    @staticmethod
    def sort_key(partition: "Partition") -> tuple[int, ...]:
        """Key that sorts partitions of the same size in reverse lexicographic order."""
        return tuple(-p for p in partition.parts)

    # endregion


def _partitions_bounded(d: int, largest: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions_bounded(d - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(d: int) -> tuple[Partition, ...]:
    """
    All partitions of ``d`` in reverse lexicographic order.

    Raises:
        InvalidStructureError: If d is negative.
    """
    if d < 0:
        raise InvalidStructureError(f"Cannot partition a negative integer ({d})")
    return tuple(Partition(parts) for parts in _partitions_bounded(d, d))


def hook_shape(n: int, k: int) -> Partition:
    """The hook of size ``n`` with ``k`` cells in the first column."""
    if not 1 <= k <= n:
        raise InvalidStructureError(f"No hook of size {n} with {k} rows")
    return Partition((n - k + 1,) + (1,) * (k - 1))


def compositions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` (ordered positive parts), lexicographically."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def partition_from_sizes(sizes: Sequence[int]) -> Partition:
    """Sort a multiset of positive sizes into a partition."""
    return Partition(tuple(sorted(sizes, reverse=True)))
