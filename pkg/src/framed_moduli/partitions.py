"""Young diagrams and the box statistics feeding the fixed-point formulas.

A partition is stored as its weakly decreasing row lengths.  Box (i, j)
sits in column i and row j, both 1-based, with rows counted from the
bottom of the column.  The arm of a box counts the boxes above it in its
column; the leg counts the boxes to its right in its row.  A leg may be
measured in a diagram the box does not belong to, in which case it can
be negative; asking for an arm outside the diagram is an error.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence


class Box(NamedTuple):
    """A cell of a Young diagram: column and row index, 1-based."""

    column: int
    row: int


class Partition:
    """An integer partition; treat instances as immutable and shareable."""

    def __init__(self, parts: Sequence[int] = ()) -> None:
        parts = tuple(int(v) for v in parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {parts!r}")
        if parts and parts[-1] <= 0:
            raise ValueError(f"row lengths must be positive: {parts!r}")
        self.parts = parts
        self._conjugate_parts: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def _conj(self) -> tuple[int, ...]:
        if self._conjugate_parts is None:
            width = self.parts[0] if self.parts else 0
            self._conjugate_parts = tuple(
                sum(1 for p in self.parts if p >= i) for i in range(1, width + 1)
            )
        return self._conjugate_parts

    def conjugate(self) -> Partition:
        """The transposed diagram (rows and columns exchanged)."""
        return Partition(self._conj())

    def num_columns(self) -> int:
        """Number of columns, i.e. the largest part; 0 for the empty diagram."""
        return self.parts[0] if self.parts else 0

    def column_length(self, i: int) -> int:
        """Number of boxes in column i; 0 when i lies outside the diagram."""
        conj = self._conj()
        return conj[i - 1] if 1 <= i <= len(conj) else 0

    def row_length(self, j: int) -> int:
        """Number of boxes in row j; 0 when j lies outside the diagram."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def column_multiplicities(self) -> dict[int, int]:
        """Map from column length to the number of columns with exactly that length."""
        return dict(sorted(Counter(self._conj()).items()))

    def columns_longer_than(self, threshold) -> int:
        """Count columns strictly longer than threshold (which may be fractional)."""
        return sum(1 for c in self._conj() if c > threshold)

    def contains(self, box: Box) -> bool:
        column, row = box
        return 1 <= row and 1 <= column <= self.row_length(row)

    def boxes(self) -> Iterator[Box]:
        """All boxes, column by column, bottom to top."""
        for i in range(1, self.num_columns() + 1):
            for j in range(1, self.column_length(i) + 1):
                yield Box(i, j)

    def as_json(self) -> list[int]:
        return list(self.parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


EMPTY = Partition()


def arm(diagram: Partition, box) -> int:
    """Boxes above `box` in its column of `diagram`; the box must belong to it."""
    column, row = box
    if not diagram.contains(Box(column, row)):
        raise ValueError(f"box {(column, row)} is not in {diagram!r}")
    return diagram.column_length(column) - row


def leg(diagram: Partition, box) -> int:
    """Boxes to the right of `box` in its row, measured in `diagram`.

    The box need not belong to the diagram, so the result may be negative.
    """
    column, row = box
    if column < 1 or row < 1:
        raise ValueError(f"box indices must be positive: {(column, row)}")
    return diagram.row_length(row) - column


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, exactly once, lexicographically decreasing."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    return list(_partitions_cached(n))


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _descending_parts(n, n))


def _descending_parts(total: int, cap: int):
    if total == 0:
        yield ()
        return
    for first in range(min(total, cap), 0, -1):
        for rest in _descending_parts(total - first, first):
            yield (first, *rest)
