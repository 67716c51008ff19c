"""Torus-fixed data of the moduli spaces: admissibility and enumeration.

Fixed loci are indexed by a vector of first Chern coefficients, one per
framing factor and order significant, together with one Young diagram per
factor (components of the one-parameter fixed locus) or a pair of diagrams
per factor (isolated fixed points of the full torus action).  The
discriminant splits exactly as total box count plus a quadratic form in
the Chern vector; everything here is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, isqrt

from .partitions import Partition, enumerate_partitions


@dataclass(frozen=True)
class SurfaceParams:
    """Degree p of the ruled surface, plus the fractional-Chern-class switch."""

    p: int
    stacky: bool = False

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError("p must be a positive integer")
        if self.stacky and self.p < 2:
            raise ValueError("fractional first Chern classes need p >= 2")

    @property
    def denominator(self) -> int:
        """Denominator allowed for Chern coefficients: p in stacky mode, else 1."""
        return self.p if self.stacky else 1


@dataclass(frozen=True)
class ChernData:
    """Numerical type of a framed sheaf: rank, first Chern coefficient, discriminant."""

    r: int
    k: Fraction
    n: Fraction

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("rank must be a positive integer")
        object.__setattr__(self, "k", Fraction(self.k))
        object.__setattr__(self, "n", Fraction(self.n))


@dataclass(frozen=True)
class FixedComponent:
    """A fixed-locus component: Chern vector plus one diagram per factor."""

    kvec: tuple[Fraction, ...]
    tableaux: tuple[Partition, ...]

    def discriminant(self, p: int) -> Fraction:
        boxes = sum(y.size for y in self.tableaux)
        return boxes + quadratic_term(p, len(self.kvec), self.kvec)

    def as_json(self) -> dict:
        return {
            "kvec": [str(k) for k in self.kvec],
            "tableaux": [y.as_json() for y in self.tableaux],
        }


@dataclass(frozen=True)
class FullFixedPoint:
    """An isolated fixed point: Chern vector plus a pair of diagrams per factor."""

    kvec: tuple[Fraction, ...]
    tableaux_p1: tuple[Partition, ...]
    tableaux_p2: tuple[Partition, ...]

    def discriminant(self, p: int) -> Fraction:
        boxes = sum(y.size for y in self.tableaux_p1 + self.tableaux_p2)
        return boxes + quadratic_term(p, len(self.kvec), self.kvec)

    def as_json(self) -> dict:
        return {
            "kvec": [str(k) for k in self.kvec],
            "tableaux_p1": [y.as_json() for y in self.tableaux_p1],
            "tableaux_p2": [y.as_json() for y in self.tableaux_p2],
        }


def quadratic_term(p: int, r: int, kvec) -> Fraction:
    """(p/2r) * sum over pairs of squared Chern-coefficient differences.

    Nonnegative, and zero exactly when all coefficients coincide.
    """
    kvec = tuple(Fraction(k) for k in kvec)
    if len(kvec) != r:
        raise ValueError(f"expected {r} Chern coefficients, got {len(kvec)}")
    total = Fraction(0)
    for a in range(r):
        for b in range(a + 1, r):
            total += (kvec[a] - kvec[b]) ** 2
    return Fraction(p, 2 * r) * total


def minimal_discriminant(p: int, r: int, k) -> Fraction:
    """Smallest discriminant with a nonempty moduli space, p*k*(r-k)/(2r).

    Stated for k already normalized into [0, r); for fractional k the value
    is still reported but emptiness is decided by enumeration.
    """
    k = Fraction(k)
    return Fraction(p, 2 * r) * k * (r - k)


def normalize_c1(r: int, k) -> tuple[Fraction, int]:
    """Shift k into [0, r) by an integer multiple of r; returns (residue, twist)."""
    k = Fraction(k)
    twist = floor(k / r)
    return k - twist * r, twist


def is_admissible(params: SurfaceParams, chern: ChernData) -> bool:
    """Whether the moduli space for this numerical type is nonempty.

    With integer Chern coefficient this is the exact integrality-plus-bound
    criterion; in fractional mode it is decided by enumeration.
    """
    r, k, n = chern.r, chern.k, chern.n
    if n < 0:
        return False
    if not params.stacky:
        if k.denominator != 1:
            return False
        if (n - Fraction(params.p * (r - 1), 2 * r) * k * k).denominator != 1:
            return False
        k0, _ = normalize_c1(r, k)
        return n >= minimal_discriminant(params.p, r, k0)
    if params.p % k.denominator != 0:
        return False
    return bool(enumerate_components(params, chern))


def _chern_vectors(params: SurfaceParams, r: int, k: Fraction, budget: Fraction):
    """All Chern vectors summing to k whose quadratic term is at most budget.

    Returns (kvec, quadratic_term) pairs in ascending lexicographic order of
    the integer numerator vectors.
    """
    d = params.denominator
    total = k * d
    if total.denominator != 1 or budget < 0:
        return []
    total = int(total)
    # quadratic term <= budget  <=>  sum over pairs (m_a - m_b)^2 <= bound
    bound = floor(Fraction(2 * r * d * d, params.p) * budget)
    # each numerator then satisfies (r*m - total)^2 <= bound * r
    spread = isqrt(bound * r)
    lo = ceil(Fraction(total - spread, r))
    hi = floor(Fraction(total + spread, r))
    out = []

    def extend(chosen: list[int], pair_sum: int) -> None:
        slot = len(chosen)
        if slot == r:
            if sum(chosen) == total:
                kvec = tuple(Fraction(m, d) for m in chosen)
                out.append((kvec, Fraction(params.p * pair_sum, 2 * r * d * d)))
            return
        remaining = r - slot - 1
        rest = total - sum(chosen)
        for m in range(lo, hi + 1):
            if not remaining * lo <= rest - m <= remaining * hi:
                continue
            new_pairs = pair_sum + sum((m - prev) ** 2 for prev in chosen)
            if new_pairs > bound:
                continue
            chosen.append(m)
            extend(chosen, new_pairs)
            chosen.pop()

    extend([], 0)
    return out


@lru_cache(maxsize=None)
def _partition_tuples(slots: int, total: int) -> tuple[tuple[Partition, ...], ...]:
    """All ordered tuples of diagrams with the given slot count and total size."""
    if slots == 0:
        return ((),) if total == 0 else ()
    out = []
    for size in range(total + 1):
        for head in enumerate_partitions(size):
            for tail in _partition_tuples(slots - 1, total - size):
                out.append((head, *tail))
    return tuple(out)


def enumerate_components(params: SurfaceParams, chern: ChernData) -> list[FixedComponent]:
    """Every fixed-locus component with the given numerical type.

    Deterministic order: Chern vectors ascending lexicographically by
    numerators, then tableau tuples by ascending sizes with each diagram in
    the canonical partition order.  Empty when the moduli space is.
    """
    out = []
    for kvec, quad in _chern_vectors(params, chern.r, chern.k, chern.n):
        boxes = chern.n - quad
        if boxes.denominator != 1 or boxes < 0:
            continue
        for tabs in _partition_tuples(chern.r, int(boxes)):
            out.append(FixedComponent(kvec, tabs))
    return out


def enumerate_full_fixed_points(
    params: SurfaceParams, chern: ChernData
) -> list[FullFixedPoint]:
    """Every isolated fixed point of the full torus with the given type."""
    r = chern.r
    out = []
    for kvec, quad in _chern_vectors(params, r, chern.k, chern.n):
        boxes = chern.n - quad
        if boxes.denominator != 1 or boxes < 0:
            continue
        for tabs in _partition_tuples(2 * r, int(boxes)):
            out.append(FullFixedPoint(kvec, tabs[:r], tabs[r:]))
    return out


def components_up_to(
    params: SurfaceParams, r: int, k, max_n
) -> dict[Fraction, list[FixedComponent]]:
    """Fixed components for every discriminant up to max_n, grouped and sorted."""
    k, max_n = Fraction(k), Fraction(max_n)
    grouped: dict[Fraction, list[FixedComponent]] = {}
    for kvec, quad in _chern_vectors(params, r, k, max_n):
        for boxes in range(floor(max_n - quad) + 1):
            n = quad + boxes
            for tabs in _partition_tuples(r, boxes):
                grouped.setdefault(n, []).append(FixedComponent(kvec, tabs))
    return {n: grouped[n] for n in sorted(grouped)}


def full_fixed_points_up_to(
    params: SurfaceParams, r: int, k, max_n
) -> dict[Fraction, list[FullFixedPoint]]:
    """Isolated fixed points for every discriminant up to max_n, grouped and sorted."""
    k, max_n = Fraction(k), Fraction(max_n)
    grouped: dict[Fraction, list[FullFixedPoint]] = {}
    for kvec, quad in _chern_vectors(params, r, k, max_n):
        for boxes in range(floor(max_n - quad) + 1):
            n = quad + boxes
            for tabs in _partition_tuples(2 * r, boxes):
                grouped.setdefault(n, []).append(FullFixedPoint(kvec, tabs[:r], tabs[r:]))
    return {n: grouped[n] for n in sorted(grouped)}
