"""Closed-form q-enumerations and the brute-force oracles they are tested against.

The central quantity is the major-index generating function of north-east
lattice paths that must visit a given list of diagonals in order.  Writing
delta for the distance w + 2 between the two forbidden diagonals of a
circular Dyck path, inclusion-exclusion over alternating visit lists turns
the closed formulas here into the q-count of CDP(n, w).

Every closed formula has an independent exhaustive counterpart in this
module (or in paths) so the two can be compared coefficient by coefficient.
Brute-force guards raise instead of truncating: a silently partial oracle
is worse than none.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal

from .paths import (
    area_to_path,
    enumerate_avl,
    enumerate_cdp,
    enumerate_cmp,
    enumerate_dyck,
    maj,
    transpose_word,
)
from .qpoly import ONE, ZERO, IntPolynomial, q_binomial, q_int

Side = Literal["left", "right"]

BRUTE_FORCE_TARGET_LIMIT = 14
BRUTE_FORCE_CDP_LIMIT = 16


# ---------------------------------------------------------------------------
# Paths visiting prescribed diagonals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagonalSpec:
    """Target point plus ordered list of diagonals that must be visited.

    Diagonal d stands for the lattice diagonal through (d, 0), that is,
    the set of points with x - y = d.
    """

    target: tuple[int, int]
    diagonals: tuple[int, ...] = ()

    def __post_init__(self):
        if self.target[0] < 0 or self.target[1] < 0:
            raise ValueError("target must lie in the non-negative quadrant")
        object.__setattr__(self, "diagonals", tuple(self.diagonals))

    def is_alternating(self) -> bool:
        """The four-case zig-zag condition; the empty list is alternating.

        The comparisons between consecutive diagonals must strictly
        alternate, starting upward if d_1 <= 0 and downward if d_1 >= 0,
        and the target must lie strictly on the side of the last diagonal
        that the final comparison points away from.
        """
        ds = self.diagonals
        ell = len(ds)
        if ell == 0:
            return True
        t = self.target[0] - self.target[1]
        if ell == 1:
            return t != ds[0]

        def chain_ok(start_up: bool) -> bool:
            up = start_up
            for i in range(ell - 1):
                if up and not ds[i] < ds[i + 1]:
                    return False
                if not up and not ds[i] > ds[i + 1]:
                    return False
                up = not up
            last_was_up = (start_up == (ell % 2 == 0))
            if last_was_up:
                return t < ds[-1]
            return t > ds[-1]

        if ds[0] <= 0 and chain_ok(True):
            return True
        if ds[0] >= 0 and chain_ok(False):
            return True
        return False


def _walk_diagonals(bits: str) -> Iterator[int]:
    """x - y at every lattice point of the walk from (0, 0), start included."""
    d = 0
    yield d
    for b in bits:
        d += 1 if b == "0" else -1
        yield d


def _visits_in_order(bits: str, diagonals: tuple[int, ...]) -> bool:
    """Greedy earliest-match scan; correct because visits in order are monotone."""
    if not diagonals:
        return True
    idx = 0
    for d in _walk_diagonals(bits):
        if d == diagonals[idx]:
            idx += 1
            if idx == len(diagonals):
                return True
    return False


def _words_to(target: tuple[int, int]) -> Iterator[str]:
    easts, norths = target
    total = easts + norths
    for north_pos in combinations(range(total), norths):
        word = ["0"] * total
        for p in north_pos:
            word[p] = "1"
        yield "".join(word)


def h_bruteforce(spec: DiagonalSpec) -> IntPolynomial:
    """Sum of q^maj over NE-walks from (0,0) to the target visiting the diagonals.

    Exhaustive; the target coordinates are capped at BRUTE_FORCE_TARGET_LIMIT.
    """
    x, y = spec.target
    if x > BRUTE_FORCE_TARGET_LIMIT or y > BRUTE_FORCE_TARGET_LIMIT:
        raise ValueError(f"brute-force guard: target coordinates must be <= {BRUTE_FORCE_TARGET_LIMIT}")
    coeffs = [0] * (x * y + max(x, y) + 1)
    for word in _words_to(spec.target):
        if _visits_in_order(word, spec.diagonals):
            coeffs[maj(word)] += 1
    return IntPolynomial(coeffs)


def alternating_list(first: int, second: int, ell: int) -> tuple[int, ...]:
    """The list (first, second, first, second, ...) of length ell."""
    return tuple(first if i % 2 == 0 else second for i in range(ell))


def h_closed(n: int, gamma: int, delta: int, ell: int, first_side: Side) -> IntPolynomial:
    """Closed form for the visit generating function with target (n, n-1).

    The visited diagonals alternate between gamma (right) and gamma - delta
    (left), requiring delta > gamma > 0; `first_side` says which one is
    visited first.  All four parity/side cases reduce to a power of q times
    a single Gaussian binomial.  Each case is what repeated application of
    the one-step visit recursion produces; the even-visit columns are
    n-1 -+ delta*t (verified against the exhaustive count, which pins the
    sign).
    """
    if not delta > gamma > 0:
        raise ValueError("need delta > gamma > 0")
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if first_side == "right":
        t, odd = divmod(ell, 2)
        col = (n - 1 + gamma + delta * t) if odd else (n - 1 - delta * t)
        return q_binomial(2 * n - 1, col).shift(t * t * delta + t * gamma)
    if first_side == "left":
        t = (ell + 1) // 2
        if ell % 2 == 0:
            col = n - 1 + delta * t
        else:
            col = n - 1 + gamma - delta * t
        return q_binomial(2 * n - 1, col).shift(t * t * delta - t * gamma)
    raise ValueError(f"unknown side {first_side!r}")


def lr_count(n: int, w: int, ell: int, j: int, side: Side) -> IntPolynomial:
    """q-count of width-w strip walks visiting the bounding diagonals ell times.

    Translated to the origin, a walk of CDP(n, w) type starting at
    (w + 1 - j, 0) sees the left forbidden diagonal as j + 1 - (w + 2) and
    the right one as j + 1; `side` names the diagonal visited first.
    Agrees with h_bruteforce on the translated configuration.
    """
    if not 1 <= j <= w:
        raise ValueError("need 1 <= j <= w")
    if ell < 0:
        raise ValueError("ell must be non-negative")
    return h_closed(n, j + 1, w + 2, ell, side)


def gen_q_ballot(x: int, i: int, j: int) -> IntPolynomial:
    """maj generating function of NE-paths (x,0) -> (i,j) avoiding x = y.

    Computes [i+j-x, j]_q - q^x [i+j-x, j-x]_q.  The path interpretation
    requires the endpoint to lie off the diagonal (i > j, or x = 0 where
    both sides vanish); at i = j > 0 the expression is nonzero even though
    no avoiding path exists.
    """
    if not (i >= j >= 0 and x >= 0):
        raise ValueError("need i >= j >= 0 and x >= 0")
    return q_binomial(i + j - x, j) - q_binomial(i + j - x, j - x).shift(x)


# ---------------------------------------------------------------------------
# Circular Dyck path q-enumeration
# ---------------------------------------------------------------------------

def cdp_q_closed(n: int, w: int) -> IntPolynomial:
    """Closed-form q-count of CDP(n, w): the double sum over s and j.

    The outer sum over s is truncated to |(w+2) s| <= 2n; every other term
    has both Gaussian binomials out of range and vanishes.
    """
    if n < 1 or w < 1:
        raise ValueError("n and w must be positive")
    delta = w + 2
    s_max = (2 * n) // delta + 1
    total = ZERO
    for s in range(-s_max, s_max + 1):
        for j in range(1, w + 1):
            term = q_binomial(2 * n - 1, n - 1 - delta * s) - q_binomial(2 * n - 1, n + j + delta * s)
            if term.is_zero():
                continue
            # s^2 delta + s (j+1) >= 0 for every s since j + 1 < delta.
            total = total + term.shift(s * s * delta + s * (j + 1))
    return total


def cdp_q_wide(n: int, w: int) -> IntPolynomial:
    """Three-term q-count of CDP(n, w), valid when w >= n.

    For w >= n a walk cannot visit both forbidden diagonals, so the
    inclusion-exclusion collapses to one subtraction per diagonal.
    """
    if not w >= n >= 1:
        raise ValueError("need w >= n >= 1")
    total = w * q_binomial(2 * n - 1, n - 1)
    for j in range(1, w + 1):
        total = total - q_binomial(2 * n - 1, n + j).shift(j)
        total = total - q_binomial(2 * n - 1, n + j - (w + 2))
    return total


def cdp_q_bruteforce(n: int, w: int) -> IntPolynomial:
    """Sum of q^maj over all lattice words of CDP(n, w); the independent oracle."""
    if n + w > BRUTE_FORCE_CDP_LIMIT:
        raise ValueError(f"brute-force guard: need n + w <= {BRUTE_FORCE_CDP_LIMIT}")
    coeffs = [0] * (2 * n * n + 1)
    for a in enumerate_cdp(n, w):
        coeffs[maj(area_to_path(a).bits)] += 1
    return IntPolynomial(coeffs)


def _comb0(n: int, k: int) -> int:
    """Binomial coefficient with the out-of-range convention C(n, k) = 0."""
    if not 0 <= k <= n:
        return 0
    from math import comb

    return comb(n, k)


def cdp_count(n: int, w: int) -> int:
    """|CDP(n, w)| = (w+2) * sum_t C(2n-1, n+(w+2)t) - 2^(2n-1)."""
    if n < 1 or w < 1:
        raise ValueError("n and w must be positive")
    delta = w + 2
    t_max = (2 * n) // delta + 1
    total = sum(_comb0(2 * n - 1, n + delta * t) for t in range(-t_max, t_max + 1))
    return delta * total - 2 ** (2 * n - 1)


# ---------------------------------------------------------------------------
# Diagonal-avoiding paths
# ---------------------------------------------------------------------------

def avl_q_closed(n: int, w: int) -> IntPolynomial:
    """Closed maj q-count of 2n-step paths (0,0) -> (n,n) avoiding x - y = +-w."""
    if n < 1 or w < 1:
        raise ValueError("n and w must be positive")
    s_max = (2 * n + w) // (2 * w) + 1
    total = ZERO
    for s in range(-s_max, s_max + 1):
        term = q_binomial(2 * n, n + 2 * s * w) - q_binomial(2 * n, n + w + 2 * s * w)
        if term.is_zero():
            continue
        total = total + term.shift(2 * s * s * w + s * w)
    return total


def avl_q_bruteforce(n: int, w: int) -> IntPolynomial:
    """Exhaustive maj q-count over enumerate_avl(n, w)."""
    if n > 8:
        raise ValueError("brute-force guard: need n <= 8")
    coeffs = [0] * (n * n + 1)
    for bits in enumerate_avl(n, w):
        coeffs[maj(bits)] += 1
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Binary words under the twisted shift, and Mobius paths
# ---------------------------------------------------------------------------

def bw_q(n: int, form: Literal["A", "B", "C"] = "A") -> IntPolynomial:
    """The binary-word q-polynomial, in three deliberately separate forms.

    A: sum_k q^binom(k,2) [n, k]_q
    B: product_{j=0}^{n-1} (1 + q^j)
    C: sum over all binary words b of q^(maj(b) + maj(complement(b)))

    The three forms are identical polynomials; keeping the code paths
    separate makes them mutual oracles.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if form == "A":
        total = ZERO
        for k in range(n + 1):
            total = total + q_binomial(n, k).shift(k * (k - 1) // 2)
        return total
    if form == "B":
        total = ONE
        for j in range(n):
            total = total * (IntPolynomial.monomial(1, j) + 1)
        return total
    if form == "C":
        coeffs = [0] * (n * n + 1)
        for v in range(2 ** n):
            bits = format(v, f"0{n}b") if n else ""
            coeffs[maj(bits) + maj(transpose_word(bits))] += 1
        return IntPolynomial(coeffs)
    raise ValueError(f"unknown form {form!r}")


def cmp_q(n: int) -> IntPolynomial:
    """Sum of q^maj over the full words of the circular Mobius paths of size n."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [0] * (2 * n * n + 1)
    for word in enumerate_cmp(n):
        coeffs[maj(word.full_bits())] += 1
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Classical Dyck paths
# ---------------------------------------------------------------------------

def carlitz_q_catalan(n: int) -> IntPolynomial:
    """The Carlitz q-Catalan polynomial [2n, n]_q / [n+1]_q (exact division)."""
    if n < 1:
        raise ValueError("n must be positive")
    return q_binomial(2 * n, n).exact_div(q_int(n + 1))


def dyck_q_bruteforce(n: int) -> IntPolynomial:
    """Exhaustive maj q-count over Dyck paths of size n."""
    if n > 9:
        raise ValueError("brute-force guard: need n <= 9")
    coeffs = [0] * (n * n + 1)
    for p in enumerate_dyck(n):
        coeffs[maj(p.bits)] += 1
    return IntPolynomial(coeffs)
