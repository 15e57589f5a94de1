from math import comb

import pytest

from gamedim import (
    BitVector,
    CapacityError,
    Code,
    check_condition,
    constant_weight_subset,
    enumerator_of_code,
    extend_parity,
    graham_sloane,
    graham_sloane_buckets,
    hamming_code,
    load_code,
    min_distance,
    save_code,
    weight_enumerator,
)

from conftest import HAMMING84_WORDS


class TestCondition:
    def test_example_code_passes(self, example_code):
        ok, pair = check_condition(example_code)
        assert ok and pair is None

    def test_c8_passes(self, c8):
        assert check_condition(c8) == (True, None)

    def test_equality_case_fails(self):
        code = Code(2, frozenset({BitVector.parse("10"), BitVector.parse("01")}))
        ok, pair = check_condition(code)
        assert not ok
        assert set(pair) == {BitVector.parse("10"), BitVector.parse("01")}

    def test_constant_weight_distance_four_always_passes(self):
        for n, w in ((6, 3), (8, 4), (10, 5)):
            code = graham_sloane(n, w)
            assert check_condition(code) == (True, None)


class TestHammingCode:
    def test_m3_shape(self):
        code = hamming_code(3)
        assert code.length == 7
        assert len(code) == 16
        assert min_distance(code) == 3

    def test_m3_weight_distribution(self):
        assert enumerator_of_code(hamming_code(3)).coefficients == (
            1, 0, 0, 7, 7, 0, 0, 1,
        )

    def test_m4_shape(self):
        code = hamming_code(4)
        assert code.length == 15
        assert len(code) == 2048

    def test_zero_word_retained(self):
        assert BitVector.zeros(7) in hamming_code(3).words

    def test_linear_closure(self):
        # codewords form a GF(2) subspace
        values = {w.value for w in hamming_code(4).words}
        sample = sorted(values)[:40]
        for a in sample:
            for b in sample:
                assert a ^ b in values

    def test_guards(self):
        with pytest.raises(ValueError):
            hamming_code(1)
        with pytest.raises(CapacityError):
            hamming_code(6)


class TestExtendParity:
    def test_matches_canonical_listing(self, extended_hamming8):
        assert extended_hamming8.words == HAMMING84_WORDS

    def test_extended_min_distance(self, extended_hamming8):
        assert min_distance(extended_hamming8) == 4

    def test_single_words(self):
        zero = Code(7, frozenset({BitVector.zeros(7)}))
        assert extend_parity(zero).words == frozenset({BitVector.zeros(8)})
        even = Code(7, frozenset({BitVector.parse("0011101")}))
        assert extend_parity(even).words == frozenset({BitVector.parse("00111010")})

    def test_all_weights_even(self):
        for m in (3, 4):
            extended = extend_parity(hamming_code(m))
            assert all(w.weight % 2 == 0 for w in extended.words)

    def test_extended_m4_min_distance_exhaustive(self):
        values = sorted(w.value for w in extend_parity(hamming_code(4)).words)
        best = 16
        for i, v in enumerate(values):
            for u in values[i + 1:]:
                d = (v ^ u).bit_count()
                if d < best:
                    best = d
        assert best == 4


class TestWeightEnumerator:
    def test_t7_coefficients(self):
        assert weight_enumerator(7).coefficients == (1, 0, 0, 7, 7, 0, 0, 1)

    def test_middle_symmetry(self):
        for t in (7, 15, 31):
            coeffs = weight_enumerator(t).coefficients
            assert coeffs[(t - 1) // 2] == coeffs[(t + 1) // 2]

    def test_t15_total(self):
        assert weight_enumerator(15).total == 2048

    def test_matches_enumeration(self):
        for m in (3, 4):
            t = (1 << m) - 1
            assert (
                weight_enumerator(t).coefficients
                == enumerator_of_code(hamming_code(m)).coefficients
            )

    def test_malformed_t(self):
        for t in (6, 8, 3, 14):
            with pytest.raises(ValueError):
                weight_enumerator(t)


class TestConstantWeightSubset:
    def test_c8(self, extended_hamming8):
        subset = constant_weight_subset(extended_hamming8, 4)
        assert len(subset) == 14
        assert all(w.weight == 4 for w in subset.words)

    def test_n16_half_weight_count(self):
        subset = constant_weight_subset(extend_parity(hamming_code(4)), 8)
        assert len(subset) == 870

    def test_oversized_weight_empty(self, extended_hamming8):
        assert len(constant_weight_subset(extended_hamming8, 9)) == 0


class TestGrahamSloane:
    def test_n8_cardinality(self):
        assert len(graham_sloane(8, 4)) >= 9  # ceil(70 / 8)

    def test_n6_cardinality_and_distance(self):
        code = graham_sloane(6, 3)
        assert len(code) >= 4  # ceil(20 / 6)
        assert min_distance(code) >= 4

    def test_buckets_partition(self):
        for n, w in ((6, 3), (8, 4), (9, 4)):
            buckets = graham_sloane_buckets(n, w)
            assert sum(len(b) for b in buckets) == comb(n, w)
            seen = set()
            for b in buckets:
                assert not (seen & b)
                seen |= b

    def test_deterministic_tie_break(self):
        assert graham_sloane(8, 4).words == graham_sloane(8, 4).words
        buckets = graham_sloane_buckets(8, 4)
        best = max(len(b) for b in buckets)
        winner = min(r for r in range(8) if len(buckets[r]) == best)
        assert graham_sloane(8, 4).words == buckets[winner]

    def test_guards(self):
        with pytest.raises(CapacityError):
            graham_sloane(21, 10)
        with pytest.raises(ValueError):
            graham_sloane(8, 0)


class TestMinDistance:
    def test_canonical_code(self, extended_hamming8):
        assert min_distance(extended_hamming8) == 4
        d = BitVector.parse("00011110").distance(BitVector.parse("00100111"))
        assert d == 4

    def test_c8(self, c8):
        assert min_distance(c8) == 4

    def test_complementary_pair(self):
        code = Code(6, frozenset({BitVector.parse("000111"), BitVector.parse("111000")}))
        assert min_distance(code) == 6

    def test_singleton_rejected(self):
        with pytest.raises(ValueError, match="two words"):
            min_distance(Code(3, frozenset({BitVector.parse("101")})))


class TestFileFormat:
    def test_round_trip(self, tmp_path, c8):
        path = tmp_path / "code.txt"
        save_code(c8, path, header=["weight-4 words"])
        assert load_code(path) == c8

    def test_comments_and_spacing(self, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text("# listing\n0001 1110\n1100 0000\n")
        code = load_code(path)
        assert code.words == frozenset(
            {BitVector.parse("00011110"), BitVector.parse("11000000")}
        )

    def test_mixed_lengths_rejected(self, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text("101\n1000\n")
        with pytest.raises(ValueError, match="mixed lengths"):
            load_code(path)
