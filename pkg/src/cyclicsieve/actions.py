"""Cyclic group actions, orbit decomposition, fixed points, orbit polynomial.

The four actions of interest:

* area_shift: rotate the area sequence of a circular Dyck path one step
  to the right (the generator of the C_n action on CDP(n, w)).
* word_shift_two: rotate a binary word of even length two steps to the
  right (order n on words of length 2n).
* twisted_shift: move the last two bits of a length-n binary word to the
  front, complemented; applying it n times is the identity.
* mobius_shift: the action induced by twisted_shift on circular Mobius
  paths through the odd-parity-word bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Hashable, Optional, Sequence

from .paths import AreaSequence, MobiusWord
from .qpoly import IntPolynomial

__all__ = [
    "CyclicAction",
    "OrbitDecomposition",
    "area_shift",
    "word_rotate",
    "word_shift_two",
    "twisted_shift",
    "mobius_shift",
    "orbit_decompose",
    "fixed_count",
    "orbit_poly",
]

VALIDATION_LIMIT = 10 ** 6


def area_shift(a: AreaSequence) -> AreaSequence:
    """Rotate the area values one step to the right; always valid again."""
    v = a.values
    return AreaSequence((v[-1],) + v[:-1], a.width)


def word_rotate(bits: str, steps: int) -> str:
    """Rotate a word `steps` positions to the right."""
    if not bits:
        return bits
    steps %= len(bits)
    if steps == 0:
        return bits
    return bits[-steps:] + bits[:-steps]


def word_shift_two(bits: str) -> str:
    """Rotate an even-length binary word two steps to the right."""
    if len(bits) % 2 != 0:
        raise ValueError("word must have even length")
    return word_rotate(bits, 2)


def twisted_shift(bits: str) -> str:
    """(b_1, ..., b_n) -> (1-b_{n-1}, 1-b_n, b_1, ..., b_{n-2}); needs n >= 2."""
    n = len(bits)
    if n < 2:
        raise ValueError("twisted shift needs word length at least 2")
    flip = {"0": "1", "1": "0"}
    return flip[bits[-2]] + flip[bits[-1]] + bits[:-2]


def mobius_shift(m: MobiusWord) -> MobiusWord:
    """Conjugate of twisted_shift under the odd-parity-word bijection.

    The half-word (h_1 ... h_{n-1}, 0) corresponds to the odd-parity word
    (h_1 ... h_{n-1}, p); the twisted shift preserves parity, so mapping
    back (drop the last bit, restore the trailing 0) is well defined.
    """
    n = m.size
    if n == 1:
        return m
    head = m.half[:-1]
    parity_bit = "0" if head.count("1") % 2 == 1 else "1"
    shifted = twisted_shift(head + parity_bit)
    return MobiusWord(shifted[:-1] + "0")


@dataclass(frozen=True)
class CyclicAction:
    """A generator of a cyclic group of stated order acting on a finite carrier.

    Passing `carrier` at construction runs the exhaustive bijectivity and
    order checks immediately (cheap insurance, skipped above 10^6 elements);
    orbit_decompose re-checks closure in any case.
    """

    order: int
    generator: Callable[[Hashable], Hashable]
    name: str = ""
    carrier: Optional[Sequence[Hashable]] = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.carrier is not None:
            self.validate_on(self.carrier)

    def apply_power(self, x: Hashable, k: int) -> Hashable:
        k %= self.order
        for _ in range(k):
            x = self.generator(x)
        return x

    def validate_on(self, carrier: Sequence[Hashable]) -> None:
        """Check bijectivity and generator order exhaustively (small carriers)."""
        if len(carrier) > VALIDATION_LIMIT:
            return
        cset = set(carrier)
        image = set()
        for x in carrier:
            y = self.generator(x)
            if y not in cset:
                raise ValueError(f"generator leaves the carrier at {x!r} -> {y!r}")
            image.add(y)
        if len(image) != len(cset):
            raise ValueError("generator is not a bijection on the carrier")
        for x in carrier:
            y = x
            for _ in range(self.order):
                y = self.generator(y)
            if y != x:
                raise ValueError(f"generator order does not divide {self.order} at {x!r}")


@dataclass(frozen=True)
class OrbitDecomposition:
    """Partition of a carrier into orbits, ordered by minimal element."""

    order: int
    orbits: tuple[tuple[Hashable, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    def stabilizer_order(self, i: int) -> int:
        return self.order // len(self.orbits[i])

    def carrier_size(self) -> int:
        return sum(self.sizes)

    def orbit_count_of_size(self, k: int) -> int:
        return sum(1 for o in self.orbits if len(o) == k)

    def to_json(self, serialize=lambda x: x) -> list[dict]:
        return [
            {
                "size": len(o),
                "stabilizer_order": self.order // len(o),
                "elements": [serialize(x) for x in o],
            }
            for o in self.orbits
        ]


def orbit_decompose(carrier: Sequence[Hashable], action: CyclicAction) -> OrbitDecomposition:
    """Orbits under the action, each listed from its minimal element.

    Raises ValueError (with a witness) if the generator leaves the carrier.
    """
    cset = set(carrier)
    seen: set = set()
    orbits = []
    for x in sorted(cset):
        if x in seen:
            continue
        orbit = [x]
        seen.add(x)
        y = action.generator(x)
        while y != x:
            if y not in cset:
                raise ValueError(f"generator leaves the carrier at {y!r}")
            if y in seen:
                raise ValueError(f"generator is not a bijection near {y!r}")
            orbit.append(y)
            seen.add(y)
            y = action.generator(y)
        if action.order % len(orbit) != 0:
            raise ValueError(f"orbit size {len(orbit)} does not divide order {action.order}")
        orbits.append(tuple(orbit))
    return OrbitDecomposition(action.order, tuple(orbits))


def fixed_count(carrier: Sequence[Hashable], action: CyclicAction, k: int) -> int:
    """Number of carrier elements fixed by the k-th power of the generator.

    Depends only on gcd(k, order): g^k and g^gcd(k, order) generate the
    same subgroup, hence have the same fixed-point set.
    """
    d = gcd(k, action.order)
    return sum(1 for x in carrier if action.apply_power(x, d) == x)


def orbit_poly(dec: OrbitDecomposition, n: int) -> IntPolynomial:
    """Coefficient of q^l counts the orbits whose stabilizer order divides l.

    This is the canonical sieving polynomial of the action: evaluating it
    at a primitive (n/gcd(n,k))-th root of unity gives the number of fixed
    points of the k-th generator power.
    """
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [0] * n
    for size in dec.sizes:
        if n % size != 0:
            raise ValueError(f"orbit size {size} does not divide {n}")
        stab = n // size
        for ell in range(n):
            if ell % stab == 0:
                coeffs[ell] += 1
    return IntPolynomial(coeffs)
