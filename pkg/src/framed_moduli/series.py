"""Truncated exact series in q and z with exponents on a fractional lattice.

Fractional Chern data produce q-exponents in (1/2p)Z and z-exponents in
(1/p)Z, so a series fixes its denominator lattice (dq, dz) at construction
and stores integer lattice coordinates internally.  Every series carries
the q-order up to which its coefficients are guaranteed; products and
powers truncate at the smallest order involved.  All factors used here
have nonnegative q-exponents, which keeps truncated products exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, isqrt

from .polynomials import IntPolynomial


class BiSeries:
    """Exact bivariate series, truncated in q, on a fixed exponent lattice."""

    def __init__(self, dq: int, dz: int, order, terms=None) -> None:
        if dq < 1 or dz < 1:
            raise ValueError("lattice denominators must be positive")
        self.dq = dq
        self.dz = dz
        self.order = Fraction(order)
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        self._max_iq = floor(self.order * dq)
        data: dict[tuple[int, int], int] = {}
        for (qe, ze), coeff in (terms or {}).items():
            coeff = int(coeff)
            if not coeff:
                continue
            iq = Fraction(qe) * dq
            iz = Fraction(ze) * dz
            if iq.denominator != 1 or iz.denominator != 1:
                raise ValueError(f"exponent ({qe}, {ze}) is off the 1/{dq}, 1/{dz} lattice")
            if iq < 0:
                raise ValueError("q-exponents must be nonnegative")
            if int(iq) <= self._max_iq:
                data[(int(iq), int(iz))] = coeff
        self._grid = data

    @classmethod
    def _from_grid(cls, dq: int, dz: int, order, grid: dict[tuple[int, int], int]) -> BiSeries:
        out = cls(dq, dz, order)
        out._grid = {
            key: c for key, c in grid.items() if c and key[0] <= out._max_iq
        }
        return out

    @classmethod
    def one(cls, dq: int, dz: int, order) -> BiSeries:
        return cls(dq, dz, order, {(Fraction(0), Fraction(0)): 1})

    def coefficient(self, q_exp, z_exp) -> int:
        iq = Fraction(q_exp) * self.dq
        iz = Fraction(z_exp) * self.dz
        if iq.denominator != 1 or iz.denominator != 1:
            return 0
        return self._grid.get((int(iq), int(iz)), 0)

    def terms(self) -> list[tuple[tuple[Fraction, Fraction], int]]:
        """Sorted ((q_exponent, z_exponent), coefficient) pairs."""
        return [
            ((Fraction(iq, self.dq), Fraction(iz, self.dz)), self._grid[(iq, iz)])
            for iq, iz in sorted(self._grid)
        ]

    def q_slice(self, z_exp) -> dict[Fraction, int]:
        """Coefficients of a fixed power of z, keyed by q-exponent."""
        iz = Fraction(z_exp) * self.dz
        if iz.denominator != 1:
            return {}
        iz = int(iz)
        return {
            Fraction(iq, self.dq): c
            for (iq, jz), c in sorted(self._grid.items())
            if jz == iz
        }

    def _check_compatible(self, other: BiSeries) -> None:
        if (self.dq, self.dz) != (other.dq, other.dz):
            raise ValueError("series live on different exponent lattices")

    def __add__(self, other: BiSeries) -> BiSeries:
        self._check_compatible(other)
        order = min(self.order, other.order)
        grid = dict(self._grid)
        for key, c in other._grid.items():
            grid[key] = grid.get(key, 0) + c
        return BiSeries._from_grid(self.dq, self.dz, order, grid)

    def __mul__(self, other: BiSeries) -> BiSeries:
        self._check_compatible(other)
        order = min(self.order, other.order)
        max_iq = floor(order * self.dq)
        grid: dict[tuple[int, int], int] = {}
        for (iq1, iz1), c1 in self._grid.items():
            for (iq2, iz2), c2 in other._grid.items():
                iq = iq1 + iq2
                if iq > max_iq:
                    continue
                key = (iq, iz1 + iz2)
                grid[key] = grid.get(key, 0) + c1 * c2
        return BiSeries._from_grid(self.dq, self.dz, order, grid)

    def __pow__(self, exponent: int) -> BiSeries:
        if exponent < 0:
            raise ValueError("negative powers are not supported; invert first")
        result = BiSeries.one(self.dq, self.dz, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> BiSeries:
        """Multiplicative inverse of a pure-q series with unit constant term."""
        if any(iz != 0 for _, iz in self._grid):
            raise ValueError("only pure-q series are inverted here")
        if self._grid.get((0, 0), 0) != 1:
            raise ValueError("inversion needs constant term 1")
        coeffs = {iq: c for (iq, _), c in self._grid.items()}
        inv = {0: 1}
        for level in range(1, self._max_iq + 1):
            acc = 0
            for iq, c in coeffs.items():
                if 0 < iq <= level:
                    acc += c * inv.get(level - iq, 0)
            if acc:
                inv[level] = -acc
        grid = {(iq, 0): c for iq, c in inv.items() if c}
        return BiSeries._from_grid(self.dq, self.dz, self.order, grid)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiSeries):
            return (
                (self.dq, self.dz, self.order) == (other.dq, other.dz, other.order)
                and self._grid == other._grid
            )
        return NotImplemented

    def render(self) -> str:
        """Human-readable sum, e.g. '1 + 2*q + q^(1/4)*z^(1/2)'."""
        if not self._grid:
            return "0"
        pieces = []
        for (qe, ze), coeff in self.terms():
            factors = []
            for name, e in (("q", qe), ("z", ze)):
                if e == 0:
                    continue
                if e == 1:
                    factors.append(name)
                elif e.denominator == 1:
                    factors.append(f"{name}^{e}")
                else:
                    factors.append(f"{name}^({e})")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def as_json(self) -> dict:
        return {
            "dq": self.dq,
            "dz": self.dz,
            "order": str(self.order),
            "terms": [
                {"q": str(qe), "z": str(ze), "coeff": str(c)}
                for (qe, ze), c in self.terms()
            ],
        }

    def csv_rows(self) -> list[tuple[int, int, int, int, int]]:
        """(q_num, q_den, z_num, z_den, coeff) rows in canonical order."""
        return [
            (qe.numerator, qe.denominator, ze.numerator, ze.denominator, c)
            for (qe, ze), c in self.terms()
        ]

    def __repr__(self) -> str:
        return f"BiSeries(order={self.order}, {self.render()})"


def eta_series(dq: int, dz: int, order) -> BiSeries:
    """The Euler product over l of (1 - q^l), truncated; no fractional prefactor."""
    out = BiSeries.one(dq, dz, order)
    for l in range(1, floor(Fraction(order)) + 1):
        factor = BiSeries(dq, dz, order, {(Fraction(0), Fraction(0)): 1, (Fraction(l), Fraction(0)): -1})
        out = out * factor
    return out


def theta_eta_series(params, r: int, max_order) -> BiSeries:
    """The r-th power of the rescaled Jacobi theta series over the squared Euler product.

    The theta factor contributes q^(m^2/2p) z^(m/p) for integer m; without
    fractional Chern classes only multiples of p appear, keeping z-exponents
    integral.  Lattice denominators are fixed at (2p, p).
    """
    p = params.p
    max_order = Fraction(max_order)
    dq, dz = 2 * p, p
    # on this lattice the theta term for m has grid coordinates (m^2, m)
    theta_grid: dict[tuple[int, int], int] = {}
    m_max = isqrt(floor(max_order * dq))
    step = 1 if params.stacky else p
    for m in range(-(m_max // step) * step, m_max + 1, step):
        if m * m <= max_order * dq:
            theta_grid[(m * m, m)] = 1
    theta = BiSeries._from_grid(dq, dz, max_order, theta_grid)
    eta = eta_series(dq, dz, max_order)
    base = theta * (eta * eta).inverse()
    return base**r


def hilbert_scheme_series(max_n: int) -> list[IntPolynomial]:
    """Coefficients of the point-counting product formula, one polynomial per q-power.

    Expands the product over j of 1/((1 - t^(2j-2) q^j)(1 - t^(2j) q^j))
    up to q^max_n exactly.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    coeffs = [IntPolynomial.one()] + [IntPolynomial.zero()] * max_n
    for j in range(1, max_n + 1):
        for t_power in (2 * j - 2, 2 * j):
            factor = IntPolynomial.monomial(t_power)
            for i in range(j, max_n + 1):
                coeffs[i] = coeffs[i] + factor * coeffs[i - j]
    return coeffs
