"""Exact integer polynomial arithmetic: Z[q], q-analogues, cyclotomic
polynomials, and residues in Z[q]/(q^n - 1).

Plain polynomials ("IntPoly") are tuples of coefficients, index i holding
the coefficient of q^i, with no trailing zeros.  Residues are dense length-n
coefficient vectors.  Everything is arbitrary-precision integer arithmetic;
no floating point appears anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

IntPoly = tuple[int, ...]

ZERO: IntPoly = ()
ONE: IntPoly = (1,)


def normalize(coeffs: Iterable[int]) -> IntPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def monomial(exponent: int, coeff: int = 1) -> IntPoly:
    if exponent < 0:
        raise ValueError("negative exponent")
    if coeff == 0:
        return ZERO
    return (0,) * exponent + (coeff,)


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return normalize(out)


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return poly_add(a, tuple(-c for c in b))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return normalize(out)


def poly_scale(a: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return ZERO
    return tuple(c * x for x in a)


def poly_degree(a: IntPoly) -> int:
    return len(a) - 1  # -1 for the zero polynomial


def poly_divmod(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division with remainder; requires b monic."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quo[i - db] = c
            for j, cb in enumerate(b):
                rem[i - db + j] -= c * cb
    return normalize(quo), normalize(rem)


def poly_divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    q, r = poly_divmod(a, b)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def poly_reverse(a: IntPoly) -> IntPoly:
    """Coefficient reversal: q^deg * a(1/q)."""
    return normalize(reversed(a))


def poly_text(coeffs: Iterable[int]) -> str:
    """Canonical text form "c0 + c1*q + c2*q^2 + ..." with zero terms omitted."""
    terms = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            base = "q" if e == 1 else f"q^{e}"
            body = base if abs(c) == 1 else f"{abs(c)}*{base}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


# ---------------------------------------------------------------------------
# q-analogues (exact, via the Pascal recurrence -- never by division)

def q_int(a: int) -> IntPoly:
    if a < 0:
        raise ValueError("q_int needs a >= 0")
    return (1,) * a if a else ZERO


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> IntPoly:
    if b < 0 or b > a:
        return ZERO
    if b == 0 or b == a:
        return ONE
    # [a choose b]_q = [a-1 choose b-1]_q + q^b [a-1 choose b]_q
    return poly_add(q_binomial(a - 1, b - 1),
                    poly_mul(monomial(b), q_binomial(a - 1, b)))


def q_factorial(a: int) -> IntPoly:
    out = ONE
    for i in range(1, a + 1):
        out = poly_mul(out, q_int(i))
    return out


def q_multinomial(n: int, alpha: Iterable[int]) -> IntPoly:
    alpha = tuple(alpha)
    if sum(alpha) != n:
        raise ValueError("alpha must be a composition of n")
    out = ONE
    prefix = 0
    for a in alpha:
        prefix += a
        out = poly_mul(out, q_binomial(prefix, a))
    return out


def q_multichoose(a: int, b: int) -> IntPoly:
    """q-analogue of the multiset coefficient ((a multichoose b))."""
    if b == 0:
        return ONE
    if a == 0:
        return ZERO
    return q_binomial(a + b - 1, b)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and exact root-of-unity evaluation

@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = poly_sub(monomial(d), ONE)
    for e in range(1, d):
        if d % e == 0:
            num = poly_divexact(num, cyclotomic(e))
    return num


# ---------------------------------------------------------------------------
# residues mod q^n - 1

@dataclass(frozen=True)
class ResiduePoly:
    """Dense integer polynomial residue modulo q^n - 1."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus exponent must be >= 1")
        if len(self.coeffs) != self.n:
            raise ValueError("need exactly n coefficients")

    @staticmethod
    def zero(n: int) -> "ResiduePoly":
        return ResiduePoly(n, (0,) * n)

    @staticmethod
    def constant(n: int, c: int) -> "ResiduePoly":
        return ResiduePoly(n, (c,) + (0,) * (n - 1))

    @staticmethod
    def from_terms(n: int, terms: Mapping[int, int]) -> "ResiduePoly":
        """Build from exponent -> coefficient; exponents may be any integer
        (the Laurent boundary: q^-s folds to q^((n-s) mod n))."""
        out = [0] * n
        for e, c in terms.items():
            out[e % n] += c
        return ResiduePoly(n, tuple(out))

    def _check(self, other: "ResiduePoly"):
        if self.n != other.n:
            raise ValueError("modulus mismatch")

    def __add__(self, other: "ResiduePoly") -> "ResiduePoly":
        self._check(other)
        return ResiduePoly(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ResiduePoly") -> "ResiduePoly":
        self._check(other)
        return ResiduePoly(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return ResiduePoly(self.n, tuple(other * c for c in self.coeffs))
        self._check(other)
        out = [0] * self.n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % self.n] += a * b
        return ResiduePoly(self.n, tuple(out))

    __rmul__ = __mul__

    def shift(self, s: int) -> "ResiduePoly":
        """Multiply by q^s (s may be negative)."""
        s %= self.n
        return ResiduePoly(self.n, self.coeffs[-s:] + self.coeffs[:-s] if s else self.coeffs)

    def coefficient_sum(self) -> int:
        return sum(self.coeffs)

    def to_intpoly(self) -> IntPoly:
        return normalize(self.coeffs)

    def text(self) -> str:
        return poly_text(self.coeffs)


def reduce(p: IntPoly, n: int) -> ResiduePoly:
    """Fold q^i onto q^(i mod n)."""
    out = [0] * n
    for i, c in enumerate(p):
        out[i % n] += c
    return ResiduePoly(n, tuple(out))


def refold(f: ResiduePoly, g: int) -> ResiduePoly:
    """Further reduction mod q^g - 1; requires g | n."""
    if f.n % g:
        raise ValueError("can only refold to a divisor of the modulus")
    return reduce(f.coeffs, g)


def substitute_q_inverse(f: ResiduePoly) -> ResiduePoly:
    """f(q^-1) as a residue: the coefficient of q^i moves to q^((n-i) mod n)."""
    out = [0] * f.n
    for i, c in enumerate(f.coeffs):
        out[(f.n - i) % f.n] += c
    return ResiduePoly(f.n, tuple(out))


def orbit_gf(n: int, orbit_size: int) -> ResiduePoly:
    """(q^n - 1)/(q^(n/d) - 1) = sum_{i<d} q^(i n/d), for d | n."""
    if orbit_size < 1 or n % orbit_size:
        raise ValueError("orbit size must divide n")
    step = n // orbit_size
    out = [0] * n
    for i in range(orbit_size):
        out[i * step] = 1
    return ResiduePoly(n, tuple(out))


def has_period(f: ResiduePoly, a: int) -> bool:
    """True iff q^a * f == f mod q^n - 1."""
    return f.shift(a) == f


def evaluate_at_root(f: ResiduePoly, k: int):
    """Exact value of f at omega_n^k (omega_n a primitive n-th root of unity).

    Returns an int when the value is an integer, else None ("non-integer"):
    the value is an integer iff the reduction of f modulo the minimal
    polynomial of omega_n^k is constant.
    """
    m = f.n // math.gcd(f.n, k % f.n) if k % f.n else 1
    _, rem = poly_divmod(f.to_intpoly(), cyclotomic(m))
    if len(rem) > 1:
        return None
    return rem[0] if rem else 0
