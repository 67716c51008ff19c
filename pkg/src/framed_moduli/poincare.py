"""Morse-index closed forms and assembly of Poincare polynomials.

Each fixed component contributes t^(2*index) times one truncated geometric
factor per column-length multiplicity of its diagrams; summing over all
components of a numerical type gives the Poincare polynomial of the moduli
space.  Evaluation at t = -1 yields Euler characteristics, whose generating
series over all Chern data reproduces a theta/eta product.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import ceil, floor, isqrt

from .characters import morse_index_direct, reduced_character
from .fixed_locus import (
    ChernData,
    FixedComponent,
    SurfaceParams,
    enumerate_components,
)
from .partitions import Partition
from .polynomials import IntPolynomial
from .series import BiSeries


def line_index_count(p: int, k_alpha, k_beta) -> int:
    """Downward directions contributed by the line-bundle weights of a pair.

    Closed form in the coefficient difference: a half-integer-looking
    expression that is always a nonnegative integer, with a correction of
    one when the difference is a negative integer (the single weight-zero
    term then points upward instead).
    """
    diff = Fraction(k_alpha) - Fraction(k_beta)
    if diff >= 0:
        return _term_count(p, diff)
    count = _term_count(p, -diff)
    if (-diff).denominator == 1:
        count -= 1
    assert count >= 0
    return count


def _term_count(p: int, n: Fraction) -> int:
    whole = floor(n)
    frac = n - whole
    value = Fraction(whole * (p * whole + 2 - p), 2) + p * whole * frac
    assert value.denominator == 1 and value >= 0
    return int(value)


def long_column_count(y_alpha: Partition, y_beta: Partition, k_alpha, k_beta) -> int:
    """Columns exceeding the coefficient difference, on the side it selects.

    Counts the boxes whose upward direction neither descends nor ascends
    strictly, one per sufficiently long column.  For a nonnegative
    difference d these are the columns of the first diagram longer than d;
    otherwise the columns of the second diagram longer than ceil(-d) - 1.
    With integer coefficients the latter threshold is -d - 1; the ceiling
    form is what direct weight counting gives for fractional differences.
    """
    diff = Fraction(k_alpha) - Fraction(k_beta)
    if diff >= 0:
        return y_alpha.columns_longer_than(diff)
    return y_beta.columns_longer_than(ceil(-diff) - 1)


def morse_index_closed_form(params: SurfaceParams, comp: FixedComponent) -> int:
    """Morse index of a fixed component, without touching the character.

    Diagonal part: boxes minus columns of each diagram.  Off-diagonal part,
    over unordered pairs: the line-bundle count plus both box counts minus
    the long-column count.
    """
    kvec, tabs = comp.kvec, comp.tableaux
    r = len(kvec)
    index = sum(y.size - y.num_columns() for y in tabs)
    for a in range(r):
        for b in range(a + 1, r):
            index += line_index_count(params.p, kvec[a], kvec[b])
            index += tabs[a].size + tabs[b].size
            index -= long_column_count(tabs[a], tabs[b], kvec[a], kvec[b])
    return index


def component_term(params: SurfaceParams, comp: FixedComponent) -> IntPolynomial:
    """Poincare-polynomial contribution of one fixed component.

    t^(2*index) times the product over diagrams and column lengths of
    1 + t^2 + ... + t^(2m), m the number of columns with that length.
    """
    out = IntPolynomial.monomial(2 * morse_index_closed_form(params, comp))
    for y in comp.tableaux:
        for mult in y.column_multiplicities().values():
            out = out * IntPolynomial({2 * i: 1 for i in range(mult + 1)})
    return out


def poincare_polynomial(
    params: SurfaceParams, chern: ChernData, jobs: int = 1
) -> IntPolynomial:
    """Sum of component terms over the whole fixed locus of a numerical type.

    The zero polynomial when the moduli space is empty.  The reduction over
    components may be split across worker threads; the result is identical
    for any job count.
    """
    comps = enumerate_components(params, chern)
    if jobs > 1 and len(comps) > 1:
        chunk = ceil(len(comps) / jobs)
        slices = [comps[i : i + chunk] for i in range(0, len(comps), chunk)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            partials = list(
                pool.map(lambda part: _sum_terms(params, part), slices)
            )
    else:
        partials = [_sum_terms(params, comps)]
    total = IntPolynomial.zero()
    for piece in partials:
        total = total + piece
    return total


def _sum_terms(params: SurfaceParams, comps: list[FixedComponent]) -> IntPolynomial:
    total = IntPolynomial.zero()
    for comp in comps:
        total = total + component_term(params, comp)
    return total


def euler_characteristic(params: SurfaceParams, chern: ChernData, jobs: int = 1) -> int:
    """Euler characteristic: the Poincare polynomial evaluated at t = -1."""
    return poincare_polynomial(params, chern, jobs=jobs)(-1)


def component_index_report(params: SurfaceParams, comp: FixedComponent):
    """Morse data of one component by direct weight counting."""
    return morse_index_direct(reduced_character(params, comp))


def euler_generating_function(
    params: SurfaceParams, r: int, max_order, jobs: int = 1
) -> BiSeries:
    """Two-variable generating series of Euler characteristics.

    Collects chi * q^(n + p*k^2/2r) * z^k over every Chern coefficient k and
    discriminant n whose q-exponent stays within the truncation order.  The
    q-exponent always lies on the (1/2p)-lattice and the z-exponent on the
    (1/p)-lattice.
    """
    p = params.p
    max_order = Fraction(max_order)
    dq, dz = 2 * p, p
    d = params.denominator
    grid: dict[tuple[int, int], int] = {}
    # p*k^2/(2r) <= max_order bounds the numerator m of k = m/d
    m_max = isqrt(floor(Fraction(2 * r * d * d, p) * max_order))
    for m in range(-m_max, m_max + 1):
        k = Fraction(m, d)
        base = Fraction(p, 2 * r) * k * k
        iz = k * dz
        assert iz.denominator == 1
        start = ceil(base * dq)
        for iq in range(start, floor(max_order * dq) + 1):
            n = Fraction(iq, dq) - base
            chi = euler_characteristic(params, ChernData(r, k, n), jobs=jobs)
            if chi:
                grid[(iq, int(iz))] = grid.get((iq, int(iz)), 0) + chi
    return BiSeries._from_grid(dq, dz, max_order, grid)
