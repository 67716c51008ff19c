"""Exact sparse polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations


class IntPolynomial:
    """Polynomial in one formal variable, nonnegative integer exponents.

    Zero coefficients are never stored, so two polynomials are equal iff
    their coefficient dictionaries are.  All arithmetic is exact.
    """

    def __init__(self, coeffs: dict[int, int] | None = None) -> None:
        data: dict[int, int] = {}
        for e, c in (coeffs or {}).items():
            e, c = int(e), int(c)
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            if c:
                data[e] = c
        self.coeffs = data

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls()

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> IntPolynomial:
        return cls({exponent: coefficient})

    def coefficient(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def constant_term(self) -> int:
        return self.coeffs.get(0, 0)

    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        data = dict(self.coeffs)
        for e, c in other.coeffs.items():
            data[e] = data.get(e, 0) + c
        return IntPolynomial(data)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        data = dict(self.coeffs)
        for e, c in other.coeffs.items():
            data[e] = data.get(e, 0) - c
        return IntPolynomial(data)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial({e: c * other for e, c in self.coeffs.items()})
        data: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                data[e] = data.get(e, 0) + c1 * c2
        return IntPolynomial(data)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        return sum(c * x**e for e, c in self.coeffs.items())

    def substitute_power(self, m: int) -> IntPolynomial:
        """Substitute the variable by its m-th power (exponents scaled by m)."""
        if m < 1:
            raise ValueError("power substitution needs a positive exponent")
        return IntPolynomial({e * m: c for e, c in self.coeffs.items()})

    def divide_exact(self, divisor: IntPolynomial) -> IntPolynomial:
        """Exact polynomial division; raises if any remainder would be left."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.coeffs)
        quot: dict[int, int] = {}
        dd = divisor.degree()
        dc = divisor.coeffs[dd]
        while rem:
            rd = max(rem)
            if rd < dd:
                raise ArithmeticError("polynomial division leaves a remainder")
            lead, r = divmod(rem[rd], dc)
            if r:
                raise ArithmeticError("polynomial division is not integral")
            quot[rd - dd] = lead
            for e, c in divisor.coeffs.items():
                e2 = e + rd - dd
                v = rem.get(e2, 0) - lead * c
                if v:
                    rem[e2] = v
                else:
                    rem.pop(e2, None)
        return IntPolynomial(quot)

    def render(self, var: str = "t") -> str:
        """Human-readable form, ascending exponents, e.g. '1 + t^2'."""
        if not self.coeffs:
            return "0"
        pieces = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def as_json(self, var: str = "t") -> dict:
        return {
            "var": var,
            "terms": [
                {"exp": e, "coeff": str(self.coeffs[e])} for e in sorted(self.coeffs)
            ],
        }

    def __repr__(self) -> str:
        return f"IntPolynomial({self.render()})"


def q_binomial(r: int, k: int) -> IntPolynomial:
    """Gaussian binomial coefficient as an exact polynomial in q.

    Counts partitions fitting in a k by (r-k) box; the division below is
    always exact and the result has symmetric coefficients.
    """
    if k < 0 or k > r:
        raise ValueError(f"q-binomial needs 0 <= k <= r, got r={r}, k={k}")
    num = IntPolynomial.one()
    for j in range(r - k + 1, r + 1):
        num = num * IntPolynomial({0: 1, j: -1})
    den = IntPolynomial.one()
    for j in range(1, k + 1):
        den = den * IntPolynomial({0: 1, j: -1})
    return num.divide_exact(den)
