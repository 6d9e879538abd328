"""Verification engines: cyclic sieving, subset sieving, Lyndon-like families,
orbit-count feasibility, and homomesy.

A triple (carrier, action, f) exhibits cyclic sieving when f evaluated at
the k-th power of a primitive n-th root of unity equals the number of
fixed points of the k-th power of the generator, for every k.  All
evaluations here are exact (cyclotomic reduction); every verdict is also
recomputed through a second, independent route (folding f mod q^n - 1 and
comparing with the orbit census), and disagreement between the two routes
is raised as an internal error rather than reported as a result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Hashable, Sequence, Union

from .actions import (
    CyclicAction,
    area_shift,
    mobius_shift,
    orbit_decompose,
    orbit_poly,
)
from .genfunc import cdp_q_closed, cmp_q
from .paths import enumerate_cdp, enumerate_cmp, word_from_zeros_runs, zeros_run_vector
from .qpoly import IntPolynomial, NonConstant, divisors, eval_at_unity, mod_cyclic, q_multinomial

__all__ = [
    "CspRow",
    "CspReport",
    "DualRouteError",
    "verify_csp",
    "verify_subset_csp",
    "FeasibilityReport",
    "csp_feasibility",
    "LyndonParameters",
    "lyndon_params",
    "lyndon_construct",
    "LyndonReport",
    "lyndon_check",
    "HomomesyReport",
    "homomesy_check",
    "verify_word_csp",
    "check_cdp_fixed_points",
    "cdp_family",
    "words_family",
    "cmp_family",
    "FAMILIES",
    "words_of_content",
    "rotate_tuple",
    "balanced_words_ending_in_one",
    "zrun_rotation_action",
    "moebius",
]


class DualRouteError(AssertionError):
    """The root-of-unity route and the coefficient route disagreed: kernel bug."""


def moebius(n: int) -> int:
    """Number-theoretic Moebius function."""
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


# ---------------------------------------------------------------------------
# Cyclic sieving reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CspRow:
    k: int
    gcd: int
    evaluation: Union[int, NonConstant]
    fixed: int
    match: bool

    def to_json(self) -> dict:
        if isinstance(self.evaluation, NonConstant):
            ev: Union[str, dict] = {"nonconstant": self.evaluation.remainder.to_json()}
        else:
            ev = str(self.evaluation)
        return {
            "k": str(self.k),
            "gcd": str(self.gcd),
            "evaluation": ev,
            "fixed_count": str(self.fixed),
            "match": self.match,
        }


@dataclass(frozen=True)
class CspReport:
    order: int
    rows: tuple[CspRow, ...]
    passed: bool
    first_mismatch: Union[int, None]
    warnings: tuple[str, ...] = ()

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "rows": [r.to_json() for r in self.rows],
            "verdict": self.verdict,
            "first_mismatch": None if self.first_mismatch is None else str(self.first_mismatch),
            "warnings": list(self.warnings),
        }


def _evaluation_rows(
    f: IntPolynomial,
    n: int,
    fixed_of_k: Callable[[int], int],
) -> tuple[tuple[CspRow, ...], bool, Union[int, None]]:
    rows = []
    first_mismatch = None
    for k in range(1, n + 1):
        d = gcd(k, n)
        ev = eval_at_unity(f, n // d)
        fc = fixed_of_k(k)
        ok = not isinstance(ev, NonConstant) and ev == fc
        if not ok and first_mismatch is None:
            first_mismatch = k
        rows.append(CspRow(k, d, ev, fc, ok))
    return tuple(rows), first_mismatch is None, first_mismatch


def verify_csp(
    carrier: Sequence[Hashable],
    action: CyclicAction,
    f: IntPolynomial,
    warnings: Sequence[str] = (),
) -> CspReport:
    """Exact sieving check of (carrier, action, f), with the dual-route guard.

    Route one compares f at each root of unity with the fixed-point count.
    Route two folds f mod q^n - 1 and compares with the orbit census of
    the action (coefficient l counts orbits whose stabilizer order divides
    l).  The two verdicts agree for every polynomial; if they ever do not,
    a DualRouteError is raised instead of a report.
    """
    carrier = list(carrier)
    n = action.order
    dec = orbit_decompose(carrier, action)

    sizes = dec.sizes
    orbit_size_count: dict[int, int] = {}
    for s in sizes:
        orbit_size_count[s] = orbit_size_count.get(s, 0) + 1

    def fixed_of_k(k: int) -> int:
        d = gcd(k, n)
        return sum(s * c for s, c in orbit_size_count.items() if d % s == 0)

    rows, passed, first_mismatch = _evaluation_rows(f, n, fixed_of_k)

    census = [0] * n
    for s in sizes:
        stab = n // s
        for ell in range(0, n, stab):
            census[ell] += 1
    coefficient_route = mod_cyclic(f, n) == tuple(census)
    if coefficient_route != passed:
        raise DualRouteError(
            f"root-of-unity route says {passed}, coefficient route says {coefficient_route}"
        )
    return CspReport(n, rows, passed, first_mismatch, tuple(warnings))


def verify_subset_csp(
    subset: Sequence[Hashable],
    superset: Sequence[Hashable],
    action: CyclicAction,
    f: IntPolynomial,
    warnings: Sequence[str] = (),
) -> CspReport:
    """Subset sieving: fixed points are counted inside a subset of the carrier.

    The action must be closed on the superset; the subset need not be
    closed.  Matches f at each root of unity against the number of subset
    elements fixed by the corresponding generator power.
    """
    sub = set(subset)
    sup = set(superset)
    if not sub <= sup:
        raise ValueError("subset is not contained in the superset")
    action.validate_on(sorted(sup))
    n = action.order
    subset_sorted = sorted(sub)

    def fixed_of_k(k: int) -> int:
        d = gcd(k, n)
        return sum(1 for y in subset_sorted if action.apply_power(y, d) == y)

    rows, passed, first_mismatch = _evaluation_rows(f, n, fixed_of_k)
    return CspReport(n, rows, passed, first_mismatch, tuple(warnings))


# ---------------------------------------------------------------------------
# Orbit-count feasibility (existence of some action with the given polynomial)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FeasibilityReport:
    order: int
    s_values: dict[int, int]
    feasible: bool
    diagnosis: str = ""

    def orbit_counts(self) -> dict[int, int]:
        """Number of orbits of each size k | n, when feasible."""
        if not self.feasible:
            raise ValueError("not feasible")
        return {k: s // k for k, s in self.s_values.items()}

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "s_values": {str(k): str(v) for k, v in self.s_values.items()},
            "feasible": self.feasible,
            "diagnosis": self.diagnosis,
        }


def csp_feasibility(f: IntPolynomial, n: int) -> FeasibilityReport:
    """Moebius-inverted fixed-point counts S_k, and whether they admit an action.

    S_k = sum over j | k of mu(k/j) f(at a primitive (n/j)-th root) is the
    number of elements lying in orbits of size exactly k.  Feasible means
    every S_k is non-negative and divisible by k (orbit counts must be
    whole numbers).  A NonConstant evaluation at any divisor order is
    immediately infeasible.
    """
    if n < 1:
        raise ValueError("n must be positive")
    evals: dict[int, int] = {}
    for j in divisors(n):
        e = eval_at_unity(f, n // j)
        if isinstance(e, NonConstant):
            return FeasibilityReport(n, {}, False, f"non-constant evaluation at order {n // j}")
        evals[j] = e
    s_values = {}
    for k in divisors(n):
        s_values[k] = sum(moebius(k // j) * evals[j] for j in divisors(k))
    for k, s in s_values.items():
        if s < 0:
            return FeasibilityReport(n, s_values, False, f"S_{k} = {s} is negative")
        if s % k != 0:
            return FeasibilityReport(n, s_values, False, f"S_{k} = {s} is not divisible by {k}")
    return FeasibilityReport(n, s_values, True)


# ---------------------------------------------------------------------------
# Lyndon-like families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LyndonParameters:
    """Solution t_d of |X_n| = sum over d | n of d * t_d, with validity flag.

    When extraction fails the first offending index and its exact rational
    value are recorded; nothing is rounded or guessed.
    """

    t: dict[int, int]
    valid: bool
    failure_index: Union[int, None] = None
    failure_value: Union[Fraction, None] = None

    def to_json(self) -> dict:
        out: dict = {
            "t": {str(d): str(v) for d, v in self.t.items()},
            "valid": self.valid,
        }
        if not self.valid:
            out["failure_index"] = str(self.failure_index)
            out["failure_value"] = {
                "num": str(self.failure_value.numerator),
                "den": str(self.failure_value.denominator),
            }
        return out


def lyndon_params(sizes: Sequence[int]) -> LyndonParameters:
    """Recover t_1, ..., t_N from |X_1|, ..., |X_N| by divisor recursion."""
    if not sizes:
        raise ValueError("need at least one size")
    t: dict[int, int] = {}
    for n, size in enumerate(sizes, start=1):
        acc = sum(d * t[d] for d in divisors(n) if d < n)
        num = size - acc
        if num % n != 0 or num < 0:
            return LyndonParameters(dict(t), False, n, Fraction(num, n))
        t[n] = num // n
    return LyndonParameters(t, True)


def lyndon_construct(
    t: Union[LyndonParameters, dict[int, int]], n: int
) -> tuple[list[tuple[int, int, int]], CyclicAction, IntPolynomial]:
    """Canonical carrier, action and polynomial realizing given Lyndon parameters.

    The carrier is {(d, i, j) : d | n, 1 <= i <= t_d, 1 <= j <= d} and the
    generator advances j cyclically within its block, so each (d, i) block
    is a single orbit of size d.  The polynomial is the orbit polynomial,
    so the triple exhibits sieving by construction, and the family over n
    is Lyndon-like.
    """
    params = t.t if isinstance(t, LyndonParameters) else dict(t)
    if isinstance(t, LyndonParameters) and not t.valid:
        raise ValueError("parameters are not valid Lyndon parameters")
    if any(v < 0 for v in params.values()):
        raise ValueError("Lyndon parameters must be non-negative")
    for d in divisors(n):
        if d not in params:
            raise ValueError(f"missing Lyndon parameter t_{d}")

    carrier = [
        (d, i, j)
        for d in divisors(n)
        for i in range(1, params[d] + 1)
        for j in range(1, d + 1)
    ]

    def generator(x: tuple[int, int, int]) -> tuple[int, int, int]:
        d, i, j = x
        return (d, i, j % d + 1)

    action = CyclicAction(n, generator, name=f"lyndon-construct-{n}")
    if carrier:
        action.validate_on(carrier)
    f = orbit_poly(orbit_decompose(carrier, action), n)
    return carrier, action, f


FamilyMember = tuple[Sequence[Hashable], CyclicAction, IntPolynomial]


@dataclass(frozen=True)
class LyndonReport:
    max_n: int
    member_verdicts: tuple[bool, ...]
    relation_failures: tuple[tuple[int, int], ...]  # (n, m) with m | n
    passed: bool

    def to_json(self) -> dict:
        return {
            "max_n": str(self.max_n),
            "member_verdicts": list(self.member_verdicts),
            "relation_failures": [[str(n), str(m)] for n, m in self.relation_failures],
            "verdict": "pass" if self.passed else "fail",
        }


def lyndon_check(family: Sequence[FamilyMember]) -> LyndonReport:
    """Check a family (X_n, C_n, f_n), n = 1..N, for the Lyndon-like relation.

    Every member must individually pass the sieving check, and for every
    n <= N and m | n the evaluation of f_n at a primitive m-th root of
    unity must equal f_{n/m}(1) exactly.
    """
    n_max = len(family)
    member_verdicts = []
    for carrier, action, f in family:
        member_verdicts.append(verify_csp(carrier, action, f).passed)
    failures = []
    for n in range(1, n_max + 1):
        f_n = family[n - 1][2]
        for m in divisors(n):
            e = eval_at_unity(f_n, m)
            want = family[n // m - 1][2](1)
            if isinstance(e, NonConstant) or e != want:
                failures.append((n, m))
    passed = all(member_verdicts) and not failures
    return LyndonReport(n_max, tuple(member_verdicts), tuple(failures), passed)


# ---------------------------------------------------------------------------
# Homomesy
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomomesyReport:
    statistic: str
    global_average: Fraction
    orbit_averages: tuple[Fraction, ...]
    homomesic: bool
    witness_orbit: Union[tuple[Hashable, ...], None]

    def to_json(self, serialize=lambda x: x) -> dict:
        def frac(x: Fraction) -> dict:
            return {"num": str(x.numerator), "den": str(x.denominator)}

        return {
            "statistic": self.statistic,
            "global_average": frac(self.global_average),
            "orbit_averages": [frac(a) for a in self.orbit_averages],
            "homomesic": self.homomesic,
            "witness_orbit": None
            if self.witness_orbit is None
            else [serialize(x) for x in self.witness_orbit],
        }


def homomesy_check(
    carrier: Sequence[Hashable],
    action: CyclicAction,
    statistic: Callable[[Hashable], int],
    name: str = "statistic",
) -> HomomesyReport:
    """Exact-rational comparison of per-orbit averages with the global average."""
    carrier = list(carrier)
    if not carrier:
        raise ValueError("carrier must be non-empty")
    dec = orbit_decompose(carrier, action)
    total = Fraction(sum(statistic(x) for x in carrier), len(carrier))
    averages = []
    witness = None
    for orbit in dec.orbits:
        avg = Fraction(sum(statistic(x) for x in orbit), len(orbit))
        averages.append(avg)
        if avg != total and witness is None:
            witness = orbit
    return HomomesyReport(name, total, tuple(averages), witness is None, witness)


def balanced_words_ending_in_one(n: int) -> list[str]:
    """Balanced words of length 2n that end with a north step."""
    from .paths import enumerate_balanced

    return [b for b in enumerate_balanced(n) if b.endswith("1")]


def zrun_rotation_action(n: int) -> CyclicAction:
    """Rotate the zeros-run vector one step to the right (order n).

    Acts on balanced words of length 2n ending in '1'; this is the word
    form of rotating the tuple (z_1, ..., z_n) of zero-run lengths.
    """

    def generator(bits: str) -> str:
        z = zeros_run_vector(bits)
        return word_from_zeros_runs((z[-1],) + z[:-1])

    return CyclicAction(n, generator, name="zrun-rotation")


# ---------------------------------------------------------------------------
# Ready-made instances
# ---------------------------------------------------------------------------

def rotate_tuple(x: tuple, steps: int = 1) -> tuple:
    steps %= len(x)
    return x[-steps:] + x[:-steps] if steps else x


def words_of_content(mu: Sequence[int]) -> list[tuple[int, ...]]:
    """All words with mu_i letters equal to i, i = 1..len(mu), as tuples."""
    remaining = list(mu)
    n = sum(remaining)
    words: list[tuple[int, ...]] = []
    word: list[int] = []

    def rec():
        if len(word) == n:
            words.append(tuple(word))
            return
        for letter in range(1, len(remaining) + 1):
            if remaining[letter - 1] > 0:
                remaining[letter - 1] -= 1
                word.append(letter)
                rec()
                word.pop()
                remaining[letter - 1] += 1

    rec()
    return words


def verify_word_csp(mu: Sequence[int]) -> CspReport:
    """Words of given content under one-step rotation with the q-multinomial."""
    mu = tuple(mu)
    n = sum(mu)
    if n < 1:
        raise ValueError("content must sum to a positive length")
    carrier = words_of_content(mu)
    action = CyclicAction(n, lambda w: rotate_tuple(w, 1), name="rotation")
    return verify_csp(carrier, action, q_multinomial(mu))


def check_cdp_fixed_points(n: int, w: int, k: int) -> bool:
    """|{a in CDP(n,w) : shifted by k steps equals a}| == |CDP(gcd(n,k), w)|."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    fixed = 0
    for a in enumerate_cdp(n, w):
        if rotate_tuple(a.values, k) == a.values:
            fixed += 1
    return fixed == sum(1 for _ in enumerate_cdp(gcd(n, k), w))


def cdp_family(w: int, max_n: int) -> list[FamilyMember]:
    """The circular Dyck path family at fixed width w, n = 1..max_n."""
    out = []
    for n in range(1, max_n + 1):
        carrier = list(enumerate_cdp(n, w))
        action = CyclicAction(n, area_shift, name=f"area-shift-{n}")
        out.append((carrier, action, cdp_q_closed(n, w)))
    return out


def words_family(alphabet: int, max_n: int) -> list[FamilyMember]:
    """Words over a k-letter alphabet under one-step rotation, n = 1..max_n."""
    out = []
    for n in range(1, max_n + 1):
        carrier = [tuple(w) for w in _all_words(alphabet, n)]
        action = CyclicAction(n, lambda x: rotate_tuple(x, 1), name="rotation")
        f = _words_maj_poly(alphabet, n)
        out.append((carrier, action, f))
    return out


def _all_words(alphabet: int, n: int):
    word = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for letter in range(1, alphabet + 1):
            word.append(letter)
            yield from rec()
            word.pop()

    yield from rec()


def _words_maj_poly(alphabet: int, n: int) -> IntPolynomial:
    """Sum of q-multinomials over all contents: maj over all k-ary words."""
    total = IntPolynomial()
    for mu in _compositions(n, alphabet):
        total = total + q_multinomial(mu)
    return total


def _compositions(n: int, parts: int):
    """All tuples of `parts` non-negative integers summing to n."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def cmp_family(max_n: int) -> list[FamilyMember]:
    """Circular Mobius paths under the induced twisted shift, n = 1..max_n."""
    out = []
    for n in range(1, max_n + 1):
        carrier = list(enumerate_cmp(n))
        action = CyclicAction(n, mobius_shift, name=f"mobius-shift-{n}")
        out.append((carrier, action, cmp_q(n)))
    return out


FAMILIES = {
    "cdp": cdp_family,
    "binary-words": lambda max_n: words_family(2, max_n),
    "ternary-words": lambda max_n: words_family(3, max_n),
    "cmp": cmp_family,
}
