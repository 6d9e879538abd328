"""Exact arithmetic for integer polynomials in the single variable q.

A polynomial is a dense list of arbitrary-precision integer coefficients,
lowest degree first, with no trailing zeros.  The zero polynomial is the
empty coefficient tuple and has degree -1.  Everything here is exact:
there is no floating point anywhere, and evaluation at roots of unity is
done symbolically by reduction modulo cyclotomic polynomials.

The module provides the usual q-analogues ([n]_q, q-factorials, Gaussian
binomials, q-multinomials), cyclotomic polynomials, reduction mod q^n - 1,
and two independent routes for evaluating a Gaussian binomial at a root of
unity (direct cyclotomic reduction, and the q-Lucas decomposition).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Union


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class IntPolynomial:
    """Dense integer-coefficient polynomial in q, in canonical form.

    Canonical form: the highest-index coefficient is nonzero unless the
    polynomial is zero (empty tuple).  Instances are immutable and
    hashable, so they may be shared freely between threads or tasks.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return cls([0] * exponent + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def constant_value(self) -> int:
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant():
            raise ValueError(f"{self!r} is not constant")
        return self._coeffs[0] if self._coeffs else 0

    def coeff(self, i: int) -> int:
        if i < 0:
            raise ValueError("negative exponent")
        return self._coeffs[i] if i < len(self._coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == (IntPolynomial([other]))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        o = _as_poly(other)
        a, b = self._coeffs, o._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self._coeffs])

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> "IntPolynomial":
        return _as_poly(other) - self

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self._coeffs])
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self._coeffs):
            out = out * x + c
        return out

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by q^k (k must be non-negative)."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero():
            return ZERO
        return IntPolynomial((0,) * k + self._coeffs)

    def divmod_exact_lead(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division requiring each leading quotient to be an exact integer."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dc = divisor._coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        quot = [0] * max(len(rem) - dd, 0)
        while len(rem) - 1 >= dd and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            qc, r = divmod(rem[-1], lead)
            if r != 0:
                raise ExactDivisionError(f"leading coefficient {rem[-1]} not divisible by {lead}")
            pos = len(rem) - 1 - dd
            quot[pos] = qc
            for i, c in enumerate(dc):
                rem[pos + i] -= qc * c
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: Union["IntPolynomial", int]) -> "IntPolynomial":
        """Exact division; raises ExactDivisionError if divisor does not divide."""
        d = _as_poly(divisor)
        q, r = self.divmod_exact_lead(d)
        if not r.is_zero():
            raise ExactDivisionError(f"{d!r} does not divide {self!r}")
        return q

    def mod_monic(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Remainder modulo a monic divisor (leading coefficient 1)."""
        if divisor.is_zero() or divisor._coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        _, r = self.divmod_exact_lead(divisor)
        return r

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings, lowest degree first."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "IntPolynomial":
        return cls([int(c) for c in data])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else ""
                var = "q" if i == 1 else f"q^{i}"
                term = f"{sign}{mag}{var}"
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _as_poly(x: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    return IntPolynomial([x])


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
Q = IntPolynomial([0, 1])


@dataclass(frozen=True)
class NonConstant:
    """Marker returned by eval_at_unity when the reduction is not constant.

    Carries the remainder modulo the cyclotomic polynomial.  A NonConstant
    result certifies that the polynomial takes different values at
    different primitive m-th roots of unity, so it cannot be a sieving
    polynomial for any action whose relevant evaluation order is m.
    """

    remainder: IntPolynomial


@dataclass(frozen=True)
class RootOfUnityIndex:
    """Evaluation point: a primitive m-th root of unity, given by its order m."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("order must be a positive integer")


def divisors(m: int) -> list[int]:
    """Positive divisors of m in increasing order."""
    if m < 1:
        raise ValueError("m must be positive")
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def q_int(n: int) -> IntPolynomial:
    """The q-integer 1 + q + ... + q^(n-1); n = 0 gives the zero polynomial."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return IntPolynomial([1] * n)


@functools.cache
def q_factorial(n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@functools.cache
def q_binomial(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial coefficient; zero unless 0 <= k <= n.

    Computed by the division-free q-Pascal recurrence
    [n,k] = [n-1,k-1] + q^k [n-1,k], memoized.
    """
    if not 0 <= k <= n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_binomial_by_division(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial by exact division of q-factorials (differential oracle)."""
    if not 0 <= k <= n:
        return ZERO
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def q_multinomial(content: Iterable[int]) -> IntPolynomial:
    """q-multinomial [n; content]_q with n the sum of the parts.

    Equals the generating polynomial of the major index over all words
    with the given letter multiplicities.  Computed as a product of
    Gaussian binomials, so it stays division-free.
    """
    mu = list(content)
    if not mu:
        raise ValueError("content must be non-empty")
    if any(m < 0 for m in mu):
        raise ValueError("content parts must be non-negative")
    out = ONE
    remaining = sum(mu)
    for part in mu:
        out = out * q_binomial(remaining, part)
        remaining -= part
    return out


@functools.cache
def cyclotomic(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, by exact division of q^m - 1."""
    if m < 1:
        raise ValueError("m must be positive")
    num = IntPolynomial.monomial(1, m) - 1
    for d in divisors(m):
        if d < m:
            num = num.exact_div(cyclotomic(d))
    return num


def eval_at_unity(f: IntPolynomial, m: Union[int, RootOfUnityIndex]) -> Union[int, NonConstant]:
    """Value of f at every primitive m-th root of unity, or NonConstant.

    The reduction r = f mod Phi_m is computed exactly; if r is constant,
    that integer is the common value of f at each primitive m-th root.
    Otherwise a NonConstant marker carrying r is returned.
    """
    order = m.m if isinstance(m, RootOfUnityIndex) else m
    if order < 1:
        raise ValueError("order must be positive")
    if order == 1:
        return f(1)
    r = f.mod_monic(cyclotomic(order))
    if r.is_constant():
        return r.constant_value()
    return NonConstant(r)


def q_lucas_eval(n: int, k: int, m: int) -> Union[int, NonConstant]:
    """Gaussian binomial at a primitive m-th root of unity via q-Lucas.

    Decomposes [n,k]_q into binom(n//m, k//m) times the Gaussian binomial
    of the remainders, and only the small factor is reduced mod Phi_m.
    Must agree with eval_at_unity(q_binomial(n, k), m) in all cases.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if not 0 <= k <= n:
        return 0
    if m == 1:
        return math.comb(n, k)
    outer = math.comb(n // m, k // m)
    if outer == 0:
        return 0
    inner = eval_at_unity(q_binomial(n % m, k % m), m)
    if isinstance(inner, NonConstant):
        return NonConstant(inner.remainder * outer)
    return outer * inner


def mod_cyclic(f: IntPolynomial, n: int) -> tuple[int, ...]:
    """Coefficients of f reduced mod q^n - 1: exponent i folds onto i mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    out = [0] * n
    for i, c in enumerate(f.coeffs):
        out[i % n] += c
    return tuple(out)


def all_polynomials_equal(polys: Iterator[IntPolynomial]) -> bool:
    it = iter(polys)
    try:
        first = next(it)
    except StopIteration:
        return True
    return all(p == first for p in it)
