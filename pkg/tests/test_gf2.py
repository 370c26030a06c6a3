import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from wsdcodes import (
    ENUMERATION_CAP,
    BinaryCode,
    CapacityError,
    InputError,
    WeightDistribution,
    bits_from_word,
    code_metrics,
    codewords,
    dual_code,
    is_doubly_even,
    is_self_dual,
    is_weakly_self_dual,
    rref,
    weight_distribution,
    word_from_bits,
)

from conftest import all_codewords_naive, brute_force_dual_words, naive_weight_distribution


# ---------------------------------------------------------------------------
# words


def test_word_round_trip():
    word, n = word_from_bits("1101")
    assert (word, n) == (0b1101, 4)
    assert bits_from_word(word, n) == "1101"


def test_word_from_sequence():
    assert word_from_bits([1, 0, 1]) == (0b101, 3)


@pytest.mark.parametrize("bad", ["", "01x", [2, 0], []])
def test_word_rejects_garbage(bad):
    with pytest.raises(InputError):
        word_from_bits(bad)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=64))
def test_word_round_trip_property(bits):
    word, n = word_from_bits(bits)
    assert [int(ch) for ch in bits_from_word(word, n)] == bits


# ---------------------------------------------------------------------------
# rref


def test_rref_duplicate_row():
    rank, basis = rref([0b11, 0b11], 2)
    assert rank == 1
    assert basis == (0b11,)


def test_rref_empty():
    assert rref([], 3) == (0, ())


def test_rref_dependent_triple():
    # third row is the GF(2) sum of the first two
    rows = [0b110, 0b011, 0b101]
    assert rows[0] ^ rows[1] == rows[2]
    rank, basis = rref(rows, 3)
    assert rank == 2
    # basis spans the same row space (exhaustive 3-bit check)
    def span(words):
        out = {0}
        for w in words:
            out |= {x ^ w for x in out}
        return out

    assert span(basis) == span(rows)


def test_rref_is_reduced():
    _, basis = rref([0b1110, 0b0111], 4)
    # every pivot column holds a single 1
    for row in basis:
        pivot = row.bit_length() - 1
        assert sum((other >> pivot) & 1 for other in basis) == 1
    assert list(basis) == sorted(basis, reverse=True)


def test_rref_rejects_wide_rows():
    with pytest.raises(InputError):
        rref([0b100], 2)


# ---------------------------------------------------------------------------
# BinaryCode


def test_code_canonical_equality():
    a = BinaryCode.from_bits(["110", "011"])
    b = BinaryCode.from_bits(["101", "011"])  # same row space
    assert a == b
    assert a.k == 2


def test_code_rejects_dependent_rows():
    with pytest.raises(InputError, match="rank 1"):
        BinaryCode.from_bits(["110", "110"])


def test_code_rejects_mixed_lengths():
    with pytest.raises(InputError):
        BinaryCode.from_bits(["110", "01"])


def test_code_contains():
    code = BinaryCode.from_bits(["110", "011"])
    assert code.contains(0b101)
    assert not code.contains(0b100)


def test_zero_code_is_allowed():
    code = BinaryCode(3, ())
    assert code.k == 0
    assert weight_distribution(code).counts == (1, 0, 0, 0)


# ---------------------------------------------------------------------------
# dual_code


def test_dual_self_dual_pair():
    code = BinaryCode.from_bits(["11"])
    assert dual_code(code) == code


def test_dual_repetition3_brute_force():
    code = BinaryCode.from_bits(["111"])
    dual = dual_code(code)
    assert dual.k == 2
    assert set(all_codewords_naive(dual)) == brute_force_dual_words(code)


def test_dual_extended_hamming_is_self(zoo):
    code = zoo["hamming8"].code
    assert dual_code(code) == code


def test_dual_involution_and_dimension(zoo_codes):
    for _, code in zoo_codes:
        dual = dual_code(code)
        assert code.k + dual.k == code.n
        assert dual_code(dual) == code


def test_dual_orthogonality_brute(zoo_codes):
    for _, code in zoo_codes:
        dual = dual_code(code)
        for g in code.generators:
            for h in dual.generators:
                assert (g & h).bit_count() % 2 == 0


# ---------------------------------------------------------------------------
# predicates


def test_weakly_self_dual_examples(zoo):
    assert is_weakly_self_dual(BinaryCode.from_bits(["11"]))
    assert not is_weakly_self_dual(BinaryCode.from_bits(["111"]))
    golay = zoo["golay24"].code
    # direct matrix-product oracle: G . G^T == 0 over GF(2)
    assert all(
        (gi & gj).bit_count() % 2 == 0
        for gi in golay.generators
        for gj in golay.generators
    )
    assert is_weakly_self_dual(golay)


def test_weakly_self_dual_matches_membership(zoo_codes):
    # C subset of C-perp, checked by enumerating all codewords
    for _, code in zoo_codes:
        if code.k > 16:
            continue
        dual = dual_code(code)
        expected = all(dual.contains(w) for w in all_codewords_naive(code))
        assert is_weakly_self_dual(code) == expected


def test_doubly_even_examples(zoo):
    assert is_doubly_even(zoo["hamming8"].code)
    assert not is_doubly_even(BinaryCode.from_bits(["11"]))
    golay = zoo["golay24"].code
    assert is_doubly_even(golay)
    weights = {w for w, c in enumerate(weight_distribution(golay).counts) if c}
    assert weights == {0, 8, 12, 16, 24}


def test_self_dual_flag(zoo):
    assert is_self_dual(zoo["hamming8"].code)
    assert is_self_dual(zoo["golay24"].code)
    assert not is_self_dual(zoo["reedmuller_1_4"].code)


# ---------------------------------------------------------------------------
# weight_distribution


def test_distribution_pair():
    assert weight_distribution(BinaryCode.from_bits(["11"])).counts == (1, 0, 1)


def test_distribution_hamming(zoo):
    counts = weight_distribution(zoo["hamming8"].code).counts
    assert counts == (1, 0, 0, 0, 14, 0, 0, 0, 1)


def test_distribution_golay(zoo):
    counts = weight_distribution(zoo["golay24"].code).counts
    assert counts[8] == 759 and counts[12] == 2576 and counts[16] == 759
    assert sum(counts) == 1 << 12


def test_distribution_matches_naive_oracle(zoo_codes):
    for name, code in zoo_codes:
        if code.k > 16:
            continue
        assert weight_distribution(code) == naive_weight_distribution(code), name


def test_distribution_odd_weights_vanish_for_wsd(wsd_zoo_codes):
    for name, code in wsd_zoo_codes:
        counts = weight_distribution(code).counts
        assert all(c == 0 for w, c in enumerate(counts) if w % 2), name


def test_distribution_capacity_error():
    wide = BinaryCode(64, tuple(1 << i for i in range(ENUMERATION_CAP + 1)))
    with pytest.raises(CapacityError, match="macwilliams"):
        weight_distribution(wide)


def test_codewords_array(zoo):
    code = zoo["hamming8"].code
    words = codewords(code)
    assert len(words) == 16
    assert set(int(w) for w in words) == all_codewords_naive(code)


# ---------------------------------------------------------------------------
# WeightDistribution validation


def test_distribution_type_rejects_bad_sum():
    with pytest.raises(InputError, match="power of two"):
        WeightDistribution(2, (1, 1, 1))


def test_distribution_type_rejects_missing_zero_word():
    with pytest.raises(InputError, match="A_0"):
        WeightDistribution(2, (0, 1, 1))


def test_distribution_type_rejects_wrong_length():
    with pytest.raises(InputError, match="counts"):
        WeightDistribution(2, (1, 0, 0, 1))


def test_distribution_dimension():
    assert WeightDistribution(2, (1, 0, 1)).dimension == 1


# ---------------------------------------------------------------------------
# code_metrics


def test_metrics_examples(zoo):
    ham = zoo["hamming8"].code
    m = code_metrics(ham, weight_distribution(ham))
    assert (m.d, m.delta) == (4, Fraction(1, 2))
    assert m.weakly_self_dual and m.doubly_even

    pair = BinaryCode.from_bits(["11"])
    m = code_metrics(pair, weight_distribution(pair))
    assert (m.d, m.delta) == (2, Fraction(1, 1))

    golay = zoo["golay24"].code
    m = code_metrics(golay, weight_distribution(golay))
    assert (m.d, m.delta) == (8, Fraction(1, 3))


def test_metrics_zero_code_is_degenerate():
    code = BinaryCode(4, ())
    with pytest.raises(InputError, match="undefined"):
        code_metrics(code, weight_distribution(code))


def test_metrics_rejects_mismatched_distribution(zoo):
    with pytest.raises(InputError, match="match"):
        code_metrics(zoo["hamming8"].code, WeightDistribution(2, (1, 0, 1)))
