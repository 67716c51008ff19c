"""Equivariant tangent-space characters at fixed points, and Morse indexes.

A tangent direction carries a framing weight, recorded as the ordered pair
(alpha, beta) of factor indices, and integer exponents for the two torus
parameters t1, t2.  Characters are multisets of such terms rather than
polynomials, so dimension and index counts stay exact even when distinct
framing pairs share exponents.  Exponents are integers in both modes:
p times any Chern coefficient is an integer by construction.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Iterable, NamedTuple

from .fixed_locus import FixedComponent, FullFixedPoint, SurfaceParams
from .partitions import Partition, arm, leg


class WeightTerm(NamedTuple):
    alpha: int
    beta: int
    t1: int
    t2: int


class IndexReport(NamedTuple):
    negative_count: int
    zero_diagonal_count: int
    positive_count: int


class Character:
    """Finite multiset of weight terms with positive integer multiplicities."""

    def __init__(self, terms: Iterable[tuple[WeightTerm, int]] | None = None) -> None:
        counts: Counter[WeightTerm] = Counter()
        for term, mult in terms or ():
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if mult:
                counts[term] += mult
        self._counts = counts

    def terms(self) -> list[tuple[WeightTerm, int]]:
        """Terms with multiplicities, in canonical sorted order."""
        return sorted(self._counts.items())

    def total_multiplicity(self) -> int:
        return sum(self._counts.values())

    def is_empty(self) -> bool:
        return not self._counts

    def specialize_diagonal(self) -> Character:
        """Collapse t2 into t1 (each exponent pair (a, b) becomes (a+b, 0))."""
        out: Counter[WeightTerm] = Counter()
        for (alpha, beta, a, b), mult in self._counts.items():
            out[WeightTerm(alpha, beta, a + b, 0)] += mult
        return Character(out.items())

    def as_json(self) -> dict:
        return {
            "terms": [
                {"alpha": t.alpha, "beta": t.beta, "t1": t.t1, "t2": t.t2, "mult": m}
                for t, m in self.terms()
            ]
        }

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Character):
            return self._counts == other._counts
        return NotImplemented

    def __repr__(self) -> str:
        return f"Character({self.terms()!r})"


@lru_cache(maxsize=None)
def line_bundle_weights(p: int, k_alpha: Fraction, k_beta: Fraction) -> tuple:
    """Torus weights of the first Ext group between the twisted line bundles.

    Three regimes in the coefficient difference: between 0 and 1 there are
    no weights; for larger differences the exponent pairs are nonpositive,
    and for negative differences strictly positive, filtered in each case
    by a congruence mod p and a linear bound on the exponent sum.
    """
    k_alpha, k_beta = Fraction(k_alpha), Fraction(k_beta)
    diff = k_alpha - k_beta
    scaled = p * diff
    if scaled.denominator != 1:
        raise ValueError("p times each Chern coefficient must be an integer")
    scaled = int(scaled)
    out = []
    if diff < 0:
        # exponents (i+1, j+1) with i+j+2+p*diff divisible by p, i+j <= -p*diff-2
        for s in range(-scaled - 1):
            if (s + 2 + scaled) % p == 0:
                out.extend((i + 1, s - i + 1) for i in range(s + 1))
    elif floor(diff) > 0:
        # exponents (-i, -j) with i+j congruent to p*diff mod p, i+j <= p*(diff-1)
        for s in range(scaled - p + 1):
            if (s - scaled) % p == 0:
                out.extend((-i, -(s - i)) for i in range(s + 1))
    return tuple(out)


@lru_cache(maxsize=None)
def young_pair_weights(y_alpha: Partition, y_beta: Partition) -> tuple:
    """Arm/leg exponent pairs of the flat-plane tangent character.

    One term per box of either diagram: boxes of the first contribute
    (-leg in the second, 1 + arm in the first), boxes of the second
    (1 + leg in the first, -arm in the second).  Legs measured in the
    other diagram may be negative.
    """
    out = []
    for s in y_alpha.boxes():
        out.append((-leg(y_beta, s), 1 + arm(y_alpha, s)))
    for s in y_beta.boxes():
        out.append((1 + leg(y_alpha, s), -arm(y_beta, s)))
    return tuple(out)


def _as_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ValueError(f"expected an integer exponent, got {value}")
    return int(value)


def full_character(params: SurfaceParams, point: FullFixedPoint) -> Character:
    """Tangent character of the full torus action at an isolated fixed point.

    Sums, over ordered factor pairs, the line-bundle weights and the two
    plane contributions rescaled monomially: a plane pair (x, y) at the
    first chart becomes t1-exponent p*(k_beta - k_alpha) + p*x - y with
    t2-exponent y, and symmetrically at the second chart.
    """
    p = params.p
    kvec = point.kvec
    r = len(kvec)
    counts: Counter[WeightTerm] = Counter()
    for a in range(r):
        for b in range(r):
            shift = _as_int(p * (kvec[b] - kvec[a]))
            for x, y in line_bundle_weights(p, kvec[a], kvec[b]):
                counts[WeightTerm(a + 1, b + 1, x, y)] += 1
            for x, y in young_pair_weights(point.tableaux_p1[a], point.tableaux_p1[b]):
                counts[WeightTerm(a + 1, b + 1, shift + p * x - y, y)] += 1
            for x, y in young_pair_weights(point.tableaux_p2[a], point.tableaux_p2[b]):
                counts[WeightTerm(a + 1, b + 1, x, shift + p * y - x)] += 1
    return Character(counts.items())


def _reduced_direct(params: SurfaceParams, comp: FixedComponent) -> Character:
    p = params.p
    kvec = comp.kvec
    r = len(kvec)
    counts: Counter[WeightTerm] = Counter()
    for a in range(r):
        for b in range(r):
            shift = _as_int(p * (kvec[b] - kvec[a]))
            for x, y in line_bundle_weights(p, kvec[a], kvec[b]):
                counts[WeightTerm(a + 1, b + 1, x + y, 0)] += 1
            for s in comp.tableaux[a].boxes():
                counts[
                    WeightTerm(a + 1, b + 1, shift + p * (1 + arm(comp.tableaux[a], s)), 0)
                ] += 1
            for s in comp.tableaux[b].boxes():
                counts[
                    WeightTerm(a + 1, b + 1, shift - p * arm(comp.tableaux[b], s), 0)
                ] += 1
    return Character(counts.items())


def reduced_character(params: SurfaceParams, comp: FixedComponent) -> Character:
    """One-parameter-subgroup character at a fixed component.

    Computed by specializing the full character of the point whose first
    chart is empty, and cross-checked against the direct evaluation of the
    reduced weight sum; the two must agree as multisets.
    """
    r = len(comp.kvec)
    empty = tuple(Partition() for _ in range(r))
    point = FullFixedPoint(comp.kvec, empty, comp.tableaux)
    specialized = full_character(params, point).specialize_diagonal()
    assert specialized == _reduced_direct(params, comp), (
        "specialized and directly evaluated reduced characters disagree "
        f"for {comp!r}"
    )
    return specialized


def morse_index_direct(ch: Character) -> IndexReport:
    """Classify one-parameter weights of a reduced (or specialized) character.

    A term descends when its total torus exponent is negative, or vanishes
    with the later framing factor dominating (beta > alpha); it is tangent
    to the fixed component when the exponent vanishes on the diagonal.
    """
    negative = zero_diag = positive = 0
    for (alpha, beta, a, b), mult in ch.terms():
        w = a + b
        if w < 0 or (w == 0 and beta > alpha):
            negative += mult
        elif w == 0 and alpha == beta:
            zero_diag += mult
        else:
            positive += mult
    return IndexReport(negative, zero_diag, positive)


def dimension(ch: Character) -> int:
    """Total multiplicity of the character (the tangent-space dimension)."""
    return ch.total_multiplicity()
