"""Cyclic actions, orbits, fixed points, the orbit polynomial."""

from math import gcd

import pytest

from cyclicsieve.actions import (
    CyclicAction,
    area_shift,
    fixed_count,
    mobius_shift,
    orbit_decompose,
    orbit_poly,
    twisted_shift,
    word_rotate,
    word_shift_two,
)
from cyclicsieve.csp import zrun_rotation_action
from cyclicsieve.paths import AreaSequence, MobiusWord, enumerate_cdp, enumerate_cmp
from cyclicsieve.qpoly import IntPolynomial, eval_at_unity, q_int


def bw(n):
    return [format(v, f"0{n}b") for v in range(2 ** n)]


class TestAreaShift:
    def test_rotates_right(self):
        a = AreaSequence((3, 4, 2, 3, 2, 3), 6)
        assert area_shift(a).values == (3, 3, 4, 2, 3, 2)

    def test_constant_sequences_are_fixed(self):
        a = AreaSequence((2, 2, 2), 4)
        assert area_shift(a) == a

    def test_order_divides_height(self):
        for a in enumerate_cdp(4, 4):
            b = a
            for _ in range(4):
                b = area_shift(b)
            assert b == a


class TestWordShift:
    def test_two_step_rotation(self):
        assert word_shift_two("0011") == "1100"

    def test_rejects_odd_length(self):
        with pytest.raises(ValueError):
            word_shift_two("011")

    def test_order_divides_half_length(self):
        for n in (3, 4):
            for word in bw(2 * n):
                w = word
                for _ in range(n):
                    w = word_shift_two(w)
                assert w == word

    def test_does_not_preserve_mobius_paths(self):
        full_words = {m.full_bits() for m in enumerate_cmp(3)}
        escaped = [w for w in full_words if word_shift_two(w) not in full_words]
        assert escaped


class TestTwistedShift:
    def test_fixed_word(self):
        assert twisted_shift("101") == "101"

    def test_worked_example(self):
        assert twisted_shift("110010") == "011100"

    def test_order_is_word_length(self):
        for word in bw(8):
            w = word
            for _ in range(8):
                w = twisted_shift(w)
            assert w == word

    def test_preserves_parity(self):
        for n in range(2, 11):
            for word in bw(n):
                assert word.count("1") % 2 == twisted_shift(word).count("1") % 2

    def test_rejects_short_words(self):
        with pytest.raises(ValueError):
            twisted_shift("1")


class TestMobiusShift:
    def test_worked_example(self):
        image = mobius_shift(MobiusWord("10110110"))
        assert image.half == twisted_shift("10110110")[:-1] + "0"
        assert image.half == "01101100"

    def test_identity_after_n_steps(self):
        for m in enumerate_cmp(6):
            x = m
            for _ in range(6):
                x = mobius_shift(x)
            assert x == m

    def test_is_bijection(self):
        for n in range(1, 9):
            carrier = list(enumerate_cmp(n))
            assert {mobius_shift(m) for m in carrier} == set(carrier)


class TestOrbits:
    def test_worked_zrun_orbits(self):
        carrier = ["0011", "1001", "0101"]
        dec = orbit_decompose(carrier, zrun_rotation_action(2))
        assert set(dec.orbits) == {("0011", "1001"), ("0101",)}

    def test_constant_sequences_are_singletons(self):
        carrier = list(enumerate_cdp(3, 3))
        dec = orbit_decompose(carrier, CyclicAction(3, area_shift))
        singletons = {o[0].values for o in dec.orbits if len(o) == 1}
        assert singletons == {(0, 0, 0), (1, 1, 1), (2, 2, 2)}

    def test_orbit_sizes_divide_order(self):
        carrier = list(enumerate_cdp(6, 3))
        dec = orbit_decompose(carrier, CyclicAction(6, area_shift))
        assert all(6 % s == 0 for s in dec.sizes)
        assert dec.carrier_size() == len(carrier)

    def test_closure_violation_reports_witness(self):
        action = CyclicAction(4, lambda w: word_rotate(w, 1))
        with pytest.raises(ValueError, match="leaves the carrier"):
            orbit_decompose(["0001"], action)

    def test_validate_on_rejects_wrong_order(self):
        action = CyclicAction(3, lambda w: word_rotate(w, 1))
        with pytest.raises(ValueError, match="order"):
            action.validate_on(bw(4))


class TestFixedCount:
    def test_cdp_half_shift(self):
        carrier = list(enumerate_cdp(4, 4))
        assert fixed_count(carrier, CyclicAction(4, area_shift), 2) == 10

    def test_twisted_shift_rule(self):
        carrier = bw(6)
        action = CyclicAction(6, twisted_shift)
        assert fixed_count(carrier, action, 2) == 4
        assert fixed_count(carrier, action, 3) == 0

    def test_depends_only_on_gcd(self):
        carrier = bw(6)
        action = CyclicAction(6, twisted_shift)
        for k in range(1, 7):
            assert fixed_count(carrier, action, k) == fixed_count(carrier, action, gcd(k, 6))

    def test_burnside(self):
        for n, w in [(4, 4), (6, 3)]:
            carrier = list(enumerate_cdp(n, w))
            action = CyclicAction(n, area_shift)
            dec = orbit_decompose(carrier, action)
            assert sum(fixed_count(carrier, action, k) for k in range(1, n + 1)) == n * len(dec.orbits)


class TestOrbitPoly:
    def test_single_fixed_point(self):
        dec = orbit_decompose(["x"], CyclicAction(1, lambda x: x))
        assert orbit_poly(dec, 1) == IntPolynomial([1])

    def test_single_free_orbit(self):
        for n in range(1, 8):
            base = "1" + "0" * (n - 1)
            carrier = [word_rotate(base, k) for k in range(n)]
            dec = orbit_decompose(carrier, CyclicAction(n, lambda w: word_rotate(w, 1)))
            assert orbit_poly(dec, n) == q_int(n)

    def test_evaluations_count_fixed_points(self):
        # Root-of-unity values of the orbit polynomial are fixed-point counts.
        for n in range(1, 9):
            carrier = bw(n)
            action = CyclicAction(n, lambda w: word_rotate(w, 1))
            dec = orbit_decompose(carrier, action)
            f = orbit_poly(dec, n)
            for m in (d for d in range(1, n + 1) if n % d == 0):
                assert eval_at_unity(f, m) == fixed_count(carrier, action, n // m)

    def test_rejects_non_dividing_orbit(self):
        dec = orbit_decompose(["01", "10"], CyclicAction(2, lambda w: word_rotate(w, 1)))
        with pytest.raises(ValueError):
            orbit_poly(dec, 3)
