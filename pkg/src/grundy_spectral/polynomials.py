"""Dense exact-integer univariate polynomials and real-rooted root isolation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return coeffs[:i]


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with exact integer coefficients, constant term first."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients) -> None:
        object.__setattr__(
            self, "coefficients", _trim(tuple(int(c) for c in coefficients))
        )

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coefficients)
        out.extend([0] * (len(other.coefficients) - len(out)))
        for i, c in enumerate(other.coefficients):
            out[i] -= c
        return IntPolynomial(out)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def shift_up(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coefficients)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(
            tuple(i * c for i, c in enumerate(self.coefficients) if i > 0)
        )

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def to_list(self) -> list[int]:
        return list(self.coefficients)

    @staticmethod
    def x_power(k: int) -> "IntPolynomial":
        return IntPolynomial((0,) * k + (1,))

    @staticmethod
    def constant(c: int) -> "IntPolynomial":
        return IntPolynomial((c,))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"IntPolynomial({list(self.coefficients)})"


def largest_real_root(poly: IntPolynomial, hi: float, tol: float = 1e-10) -> float:
    """Largest real root of a REAL-ROOTED monic integer polynomial.

    Uses the derivative-sequence sign test: for a polynomial whose roots are
    all real, x exceeds the largest root iff p and every derivative of p are
    positive at x.  Signs at rational bisection points are evaluated exactly,
    then a float Newton step polishes the bracket midpoint.

    ``hi`` must be an upper bound on all roots (e.g. the max degree for
    adjacency and matching polynomials).
    """
    if poly.is_zero:
        raise ValueError("zero polynomial has no roots")
    if poly.degree == 0:
        raise ValueError("constant polynomial has no roots")
    chain = [poly]
    while chain[-1].degree > 0:
        chain.append(chain[-1].derivative())
    chain.pop()  # constant term is the positive leading factorial

    def above_all_roots(x: Fraction) -> bool:
        return all(p(x) > 0 for p in chain)

    lo_f = Fraction(-abs(int(hi)) - 2)
    hi_f = Fraction(int(hi) + 2)
    # guard: hi must really be above all roots
    while not above_all_roots(hi_f):
        hi_f *= 2
    while hi_f - lo_f > Fraction(tol).limit_denominator(10**15) / 4:
        mid = (lo_f + hi_f) / 2
        if above_all_roots(mid):
            hi_f = mid
        else:
            lo_f = mid
        if float(hi_f - lo_f) < tol / 4:
            break
    root = float((lo_f + hi_f) / 2)
    # Newton polish in float; the bracket is already within tol/2
    dp = poly.derivative()
    for _ in range(3):
        fv = float(poly(Fraction(root).limit_denominator(10**15)))
        dv = dp(root)
        if dv == 0:
            break
        step = fv / dv
        if abs(step) > tol:
            break
        root -= step
    return root
