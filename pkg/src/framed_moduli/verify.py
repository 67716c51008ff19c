"""Built-in verification against the closed-form cross-checks.

Every routine compares an engine computation with an independent route to
the same value (product formulas, Gaussian binomials, theta/eta products,
dimension and index counts) and reports mismatches instead of raising, so
the command-line front end can turn them into exit codes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import dimension, full_character, morse_index_direct, reduced_character
from .fixed_locus import (
    ChernData,
    SurfaceParams,
    components_up_to,
    full_fixed_points_up_to,
    minimal_discriminant,
)
from .poincare import (
    euler_generating_function,
    morse_index_closed_form,
    poincare_polynomial,
)
from .polynomials import IntPolynomial, q_binomial
from .series import hilbert_scheme_series, theta_eta_series


@dataclass
class VerifyReport:
    oracle: str
    cases: int = 0
    mismatches: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def record(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            self.mismatches.append(message)


def _timed(fn):
    def wrapper(*args, **kwargs) -> VerifyReport:
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    return wrapper


@_timed
def verify_hilbert(max_n: int = 8, max_p: int = 4) -> VerifyReport:
    """Rank-1 polynomials against the product formula, for every surface degree."""
    report = VerifyReport("hilbert")
    expected = hilbert_scheme_series(max_n)
    baseline: list[IntPolynomial] | None = None
    for p in range(1, max_p + 1):
        params = SurfaceParams(p)
        got = [
            poincare_polynomial(params, ChernData(1, Fraction(0), Fraction(n)))
            for n in range(max_n + 1)
        ]
        for n in range(max_n + 1):
            report.record(
                got[n] == expected[n],
                f"p={p} n={n}: engine {got[n].render()} vs product {expected[n].render()}",
            )
        if baseline is None:
            baseline = got
        else:
            for n in range(max_n + 1):
                report.record(
                    got[n] == baseline[n],
                    f"p={p} n={n}: rank-1 polynomial depends on p",
                )
    return report


@_timed
def verify_p_independence(max_n: int = 8, max_p: int = 4) -> VerifyReport:
    """Rank-1 polynomials coincide across surface degrees."""
    report = VerifyReport("p-independence")
    baseline = [
        poincare_polynomial(SurfaceParams(1), ChernData(1, Fraction(0), Fraction(n)))
        for n in range(max_n + 1)
    ]
    for p in range(2, max_p + 1):
        params = SurfaceParams(p)
        for n in range(max_n + 1):
            got = poincare_polynomial(params, ChernData(1, Fraction(0), Fraction(n)))
            report.record(
                got == baseline[n],
                f"p={p} n={n}: {got.render()} differs from p=1 value {baseline[n].render()}",
            )
    return report


@_timed
def verify_grassmannian(max_r: int = 5, max_p: int = 3) -> VerifyReport:
    """Minimal-discriminant polynomials against Gaussian binomials in t^2."""
    report = VerifyReport("grassmannian")
    for r in range(2, max_r + 1):
        for k in range(1, r):
            expected = q_binomial(r, k).substitute_power(2)
            for p in range(1, max_p + 1):
                n = minimal_discriminant(p, r, Fraction(k))
                got = poincare_polynomial(SurfaceParams(p), ChernData(r, Fraction(k), n))
                report.record(
                    got == expected,
                    f"p={p} r={r} k={k} n={n}: {got.render()} vs {expected.render()}",
                )
    return report


@_timed
def verify_theta(max_order=5, max_r: int = 2, max_p: int = 3) -> VerifyReport:
    """Euler-characteristic series against the theta/eta product, both modes."""
    report = VerifyReport("theta")
    max_order = Fraction(max_order)
    for r in range(1, max_r + 1):
        for p in range(1, max_p + 1):
            modes = [False] + ([True] if p >= 2 else [])
            for stacky in modes:
                params = SurfaceParams(p, stacky=stacky)
                engine = euler_generating_function(params, r, max_order)
                closed = theta_eta_series(params, r, max_order)
                label = f"r={r} p={p} stacky={stacky}"
                if engine == closed:
                    report.record(True, "")
                else:
                    seen = dict(engine.terms())
                    want = dict(closed.terms())
                    diffs = [
                        f"q^{qe} z^{ze}: engine {seen.get((qe, ze), 0)}"
                        f" vs theta/eta {want.get((qe, ze), 0)}"
                        for (qe, ze) in sorted(set(seen) | set(want))
                        if seen.get((qe, ze), 0) != want.get((qe, ze), 0)
                    ]
                    report.record(False, f"{label}: " + "; ".join(diffs))
    return report


def _mode_sweep(max_r: int, max_p: int):
    for r in range(1, max_r + 1):
        for p in range(1, max_p + 1):
            for stacky in (False, True):
                if stacky and p < 2:
                    continue
                params = SurfaceParams(p, stacky=stacky)
                d = params.denominator
                for m in range(r * d):
                    yield params, r, Fraction(m, d)


@_timed
def verify_dimension(max_n: int = 4, max_r: int = 3, max_p: int = 3) -> VerifyReport:
    """Tangent dimension 2rn at every integer-coefficient fixed point."""
    report = VerifyReport("dimension")
    for r in range(1, max_r + 1):
        for p in range(1, max_p + 1):
            params = SurfaceParams(p)
            for k in range(r):
                grouped = full_fixed_points_up_to(params, r, Fraction(k), Fraction(max_n))
                for n, points in grouped.items():
                    for point in points:
                        dim = dimension(full_character(params, point))
                        report.record(
                            dim == 2 * r * n,
                            f"p={p} r={r} k={k} n={n} {point.as_json()}: "
                            f"dimension {dim} vs 2rn={2 * r * n}",
                        )
    return report


@_timed
def verify_index_consistency(max_n: int = 4, max_r: int = 3, max_p: int = 3) -> VerifyReport:
    """Direct Morse counting equals the closed form, on every component."""
    report = VerifyReport("index-consistency")
    for params, r, k in _mode_sweep(max_r, max_p):
        grouped = components_up_to(params, r, k, Fraction(max_n))
        for n, comps in grouped.items():
            for comp in comps:
                direct = morse_index_direct(reduced_character(params, comp))
                closed = morse_index_closed_form(params, comp)
                columns = sum(y.num_columns() for y in comp.tableaux)
                label = f"p={params.p} stacky={params.stacky} r={r} k={k} n={n} {comp.as_json()}"
                report.record(
                    direct.negative_count == closed,
                    f"{label}: direct index {direct.negative_count} vs closed {closed}",
                )
                report.record(
                    direct.zero_diagonal_count == columns,
                    f"{label}: zero weights {direct.zero_diagonal_count} vs columns {columns}",
                )
    return report


@_timed
def verify_connectedness(max_n: int = 4, max_r: int = 3, max_p: int = 3) -> VerifyReport:
    """Every nonzero Poincare polynomial has constant term 1.

    Integer Chern coefficients only: with fractional coefficients the
    fixed locus can split into components of equal minimal index (already
    at rank 2, half-integer coefficient, minimal discriminant), so the
    signature is a theorem of the ordinary moduli spaces alone.
    """
    report = VerifyReport("connectedness")
    for p in range(1, max_p + 1):
        params = SurfaceParams(p)
        for n in range(9):
            poly = poincare_polynomial(params, ChernData(1, Fraction(0), Fraction(n)))
            report.record(
                poly.constant_term() == 1,
                f"rank 1, p={p} n={n}: constant term {poly.constant_term()}",
            )
    for params, r, k in _mode_sweep(max_r, max_p):
        if params.stacky:
            continue
        grouped = components_up_to(params, r, k, Fraction(max_n))
        for n in grouped:
            poly = poincare_polynomial(params, ChernData(r, k, n))
            report.record(
                poly.constant_term() == 1,
                f"p={params.p} r={r} k={k} n={n}: "
                f"constant term {poly.constant_term()} in {poly.render()}",
            )
    return report


ORACLES = {
    "hilbert": verify_hilbert,
    "grassmannian": verify_grassmannian,
    "theta": verify_theta,
    "dimension": verify_dimension,
    "index-consistency": verify_index_consistency,
    "connectedness": verify_connectedness,
    "p-independence": verify_p_independence,
}
