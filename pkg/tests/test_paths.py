"""Path objects: area sequences, lattice words, bijections, statistics."""

from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cyclicsieve.paths import (
    AreaSequence,
    DyckPath,
    LatticeWord,
    MobiusWord,
    area_to_path,
    dyck_pair,
    dyck_pair_inverse,
    dyck_tuple,
    dyck_tuple_inverse,
    enumerate_avl,
    enumerate_balanced,
    enumerate_cdp,
    enumerate_cmp,
    enumerate_dyck,
    first_peak_height,
    inv_zero_one,
    last_peak_height,
    maj,
    path_to_area,
    transpose_word,
    valley_count,
    validate_area_sequence,
    zeros_run_vector,
)

FIG_AREA = (2, 3, 4, 4, 4, 3, 2, 2)
FIG_WORD = "0111010100100101"


class TestValidation:
    def test_worked_example(self):
        assert validate_area_sequence((3, 4, 2, 3, 2, 3), 6)

    def test_step_condition(self):
        assert not validate_area_sequence((0, 2), 3)

    def test_width_bound(self):
        assert not validate_area_sequence((1, 1), 1)

    def test_wraparound_is_checked(self):
        assert not validate_area_sequence((2, 0), 3)
        assert validate_area_sequence((1, 0), 3)

    def test_constructor_enforces_validity(self):
        with pytest.raises(ValueError):
            AreaSequence((0, 2), 3)


class TestEnumeration:
    def test_two_by_two(self):
        got = [a.values for a in enumerate_cdp(2, 2)]
        assert got == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_height_one(self):
        for w in range(1, 7):
            assert sum(1 for _ in enumerate_cdp(1, w)) == w

    def test_three_by_three_is_eighteen(self):
        assert sum(1 for _ in enumerate_cdp(3, 3)) == 18

    def test_lexicographic_order(self):
        values = [a.values for a in enumerate_cdp(3, 3)]
        assert values == sorted(values)

    def test_width_zero_is_empty(self):
        assert list(enumerate_cdp(3, 0)) == []


class TestWordEncoding:
    def test_figure_example(self):
        word = area_to_path(AreaSequence(FIG_AREA, 8))
        assert word.start == 6
        assert word.bits == FIG_WORD

    def test_all_zero_area_is_alternating_word(self):
        for n in range(1, 7):
            word = area_to_path(AreaSequence((0,) * n, n))
            assert word.start == n
            assert word.bits == "01" * n

    def test_round_trip_on_cdp_4_4(self):
        for a in enumerate_cdp(4, 4):
            assert path_to_area(area_to_path(a)) == a

    def test_round_trip_all_small_widths(self):
        for n in range(1, 7):
            for w in range(1, 7):
                for a in enumerate_cdp(n, w):
                    assert path_to_area(area_to_path(a)) == a

    def test_word_count_matches_area_count(self):
        # Independent word-side enumeration: every (start, word) pair that
        # stays strictly between the diagonals, across all small cells.
        for n in range(1, 7):
            for w in range(1, 7):
                words = 0
                for bits in enumerate_balanced(n):
                    if not bits.endswith("1"):
                        continue
                    for start in range(1, w + 1):
                        try:
                            LatticeWord(start, bits, w)
                        except ValueError:
                            continue
                        words += 1
                assert words == sum(1 for _ in enumerate_cdp(n, w))

    def test_rejects_diagonal_touch(self):
        with pytest.raises(ValueError):
            LatticeWord(1, "1001", 1)  # dips to the upper diagonal

    def test_rejects_missing_final_north(self):
        with pytest.raises(ValueError):
            LatticeWord(1, "0110", 2)


class TestStatistics:
    def test_maj_figure_word(self):
        assert maj(FIG_WORD) == 43

    def test_maj_trivial(self):
        assert maj("0000") == 0
        assert maj("10") == 1

    def test_inv_examples(self):
        assert inv_zero_one("0011") == 4
        assert inv_zero_one("1001") == 2
        assert inv_zero_one("0101") == 3

    def test_inv_from_zero_run_vector(self):
        for n in range(1, 7):
            for bits in enumerate_balanced(n):
                if not bits.endswith("1"):
                    continue
                z = zeros_run_vector(bits)
                assert inv_zero_one(bits) == sum((n - i) * z[i] for i in range(n))

    def test_mobius_concatenation_maj_congruence(self):
        for n in range(1, 13):
            for v in range(2 ** n):
                bits = format(v, f"0{n}b")
                both = bits + transpose_word(bits)
                assert (maj(both) - maj(bits) - maj(transpose_word(bits))) % n == 0

    def test_valley_examples(self):
        assert valley_count(AreaSequence((3, 4, 2, 3, 2, 3), 6)) == 3
        for n in range(1, 6):
            assert valley_count(AreaSequence((0,) * n, n)) == n
        assert valley_count(AreaSequence((0, 1), 2)) == 1


class TestDyckPairs:
    def test_pair_conditions_and_round_trip_cdp3(self):
        seen = set()
        for a in enumerate_cdp(3, 3):
            p, q = dyck_pair(a)
            assert first_peak_height(p) + last_peak_height(q) >= 3
            assert last_peak_height(p) + first_peak_height(q) >= 3
            assert dyck_pair_inverse(p, q) == a
            seen.add((p, q))
        assert len(seen) == 18

    def test_pair_count_matches_constrained_pairs(self):
        for n in range(1, 6):
            dycks = list(enumerate_dyck(n))
            allowed = sum(
                1
                for p, q in product(dycks, repeat=2)
                if first_peak_height(p) + last_peak_height(q) >= n
                and last_peak_height(p) + first_peak_height(q) >= n
            )
            assert allowed == sum(1 for _ in enumerate_cdp(n, n))

    def test_figure_image_satisfies_inequalities(self):
        p, q = dyck_pair(AreaSequence(FIG_AREA, 8))
        assert first_peak_height(p) + last_peak_height(q) >= 8
        assert last_peak_height(p) + first_peak_height(q) >= 8

    def test_peak_inequalities_across_sizes(self):
        for n in range(1, 8):
            for a in enumerate_cdp(n, n):
                p, q = dyck_pair(a)
                assert first_peak_height(p) + last_peak_height(q) >= n
                assert last_peak_height(p) + first_peak_height(q) >= n

    def test_inverse_rejects_violating_pairs(self):
        zigzag = DyckPath("010101")  # first and last peaks of height 1
        with pytest.raises(ValueError):
            dyck_pair_inverse(zigzag, zigzag)


class TestDyckTuples:
    def test_k_one_reduces_to_pairs(self):
        for a in enumerate_cdp(4, 4):
            assert dyck_tuple(a) == dyck_pair(a)

    def test_round_trip_cdp_4_2(self):
        for a in enumerate_cdp(4, 2):
            t = dyck_tuple(a)
            assert len(t) == 4
            assert dyck_tuple_inverse(t, 2) == a

    def test_count_matches_constrained_tuples(self):
        dycks = list(enumerate_dyck(2))
        allowed = 0
        for t in product(dycks, repeat=4):
            ok = all(
                last_peak_height(t[j]) + first_peak_height(t[(j + 1) % 4]) >= 2
                for j in range(4)
            )
            allowed += ok
        assert allowed == sum(1 for _ in enumerate_cdp(4, 2))

    def test_round_trip_wider_cells(self):
        for n, w in [(6, 2), (6, 3), (8, 4)]:
            for a in enumerate_cdp(n, w):
                assert dyck_tuple_inverse(dyck_tuple(a), w) == a

    def test_count_matches_constrained_six_tuples(self):
        dycks = list(enumerate_dyck(2))
        allowed = 0
        for t in product(dycks, repeat=6):
            ok = all(
                last_peak_height(t[j]) + first_peak_height(t[(j + 1) % 6]) >= 2
                for j in range(6)
            )
            allowed += ok
        assert allowed == sum(1 for _ in enumerate_cdp(6, 2))

    def test_rejects_wrong_height(self):
        with pytest.raises(ValueError):
            dyck_tuple(AreaSequence((0, 0, 0), 2))


class TestMobius:
    def test_size_one(self):
        words = list(enumerate_cmp(1))
        assert len(words) == 1
        assert words[0].half == "0"
        assert words[0].full_bits() == "01"

    def test_counts_are_powers_of_two(self):
        for n in range(1, 9):
            assert sum(1 for _ in enumerate_cmp(n)) == 2 ** (n - 1)

    def test_forced_bits(self):
        for word in enumerate_cmp(4):
            full = word.full_bits()
            assert full[3] == "0" and full[7] == "1"

    def test_half_determines_complemented_second_half(self):
        for word in enumerate_cmp(5):
            full = word.full_bits()
            for i in range(5):
                assert full[i] != full[5 + i]

    def test_subset_of_circular_paths(self):
        for n in range(1, 9):
            area_set = set(enumerate_cdp(n, n))
            for word in enumerate_cmp(n):
                assert path_to_area(word.to_lattice_word()) in area_set

    def test_rejects_bad_half(self):
        with pytest.raises(ValueError):
            MobiusWord("01")


class TestAvoidingPaths:
    def test_counts(self):
        assert sum(1 for _ in enumerate_avl(3, 2)) == 8
        assert sum(1 for _ in enumerate_avl(2, 1)) == 0
        assert sum(1 for _ in enumerate_avl(2, 3)) == 6


@st.composite
def area_sequences(draw):
    n = draw(st.integers(1, 8))
    w = draw(st.integers(1, 8))
    values = [draw(st.integers(0, w - 1))]
    for _ in range(n - 1):
        values.append(draw(st.integers(0, min(w - 1, values[-1] + 1))))
    assume(values[0] <= values[-1] + 1)
    return AreaSequence(tuple(values), w)


@given(area_sequences())
@settings(max_examples=200)
def test_word_round_trip_property(a):
    assert path_to_area(area_to_path(a)) == a


@given(area_sequences())
@settings(max_examples=200)
def test_pair_round_trip_property(a):
    if a.height % a.width == 0:
        assert dyck_tuple_inverse(dyck_tuple(a), a.width) == a
