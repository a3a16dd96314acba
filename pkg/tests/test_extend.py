import pytest

from unclustered_bwt.extend import (
    LastBlockVariant,
    construct_unclustered,
    construct_unclustered_ternary,
    delete_two,
    extend_alphabet,
    insert_two,
    unclustered_ternary_image,
    unclustered_with_marked_last_block,
)
from unclustered_bwt.oracle import brute_bwt, brute_runs, unclustered_necklaces
from unclustered_bwt.words import (
    bwt,
    format_word,
    inverse_bwt,
    is_bwt_image_aperiodic,
    parse_word,
    run_count,
    standard_permutation,
)

FIRST, MIDDLE = LastBlockVariant.PENULTIMATE_MINUS_ONE, LastBlockVariant.PENULTIMATE


@pytest.mark.parametrize("n", range(1, 25))
@pytest.mark.parametrize("variant", [FIRST, MIDDLE])
def test_marked_last_block(n, variant):
    w = unclustered_with_marked_last_block(n, variant)
    assert len(w) == 3 * n and run_count(w) == 3 * n and is_bwt_image_aperiodic(w)
    assert w[3 * n - variant.offset] == 2


def test_marked_last_block_n1():
    assert format_word(unclustered_with_marked_last_block(1, FIRST)) == "201"
    assert format_word(unclustered_with_marked_last_block(1, MIDDLE)) == "120"


def test_known_candidates_satisfy_variants():
    for w, variant in (("201021201", FIRST), ("120102120", MIDDLE)):
        w = parse_word(w)
        assert w[9 - variant.offset] == 2 and run_count(w) == 9 and is_bwt_image_aperiodic(w)


def test_insert_two():
    assert format_word(insert_two("201021201")) == "2010212021"
    out = insert_two("201")
    assert format_word(out) == "2021"
    assert standard_permutation(out).is_single_cycle() and run_count(out) == 4
    with pytest.raises(ValueError):
        insert_two("120102120")


def test_delete_two():
    assert format_word(delete_two("120102120")) == "12010210"
    out = delete_two("120")
    assert format_word(out) == "10" and brute_bwt((0, 1)) == out
    with pytest.raises(ValueError):
        delete_two("201021201")


def _splice_ok(before, after, inserted):
    """One-line view of the cycle: after inserting, the new element follows 3n'-1."""
    cb = standard_permutation(before).cycles()[0]
    ca = standard_permutation(after).cycles()[0]
    m = len(before)
    if inserted:
        expected = []
        for x in cb:
            expected.append(x)
            if x == m - 1:
                expected.append(m)
        return list(ca) == expected
    return list(ca) == [x for x in cb if x != m - 1]


@pytest.mark.parametrize("n", range(1, 20))
def test_insert_delete_cycle_splice(n):
    w = unclustered_with_marked_last_block(n, FIRST)
    out = insert_two(w)
    assert _splice_ok(w, out, True) and run_count(out) == run_count(w) + 1
    w = unclustered_with_marked_last_block(n, MIDDLE)
    out = delete_two(w)
    assert _splice_ok(w, out, False) and run_count(out) == run_count(w) - 1
    assert standard_permutation(out).is_single_cycle()


def test_length_extension_necklaces():
    assert str(inverse_bwt(delete_two("120102120"))) == "00212011"
    assert str(inverse_bwt(insert_two("201021201"))) == "0010211222"


@pytest.mark.parametrize("n, canon", [(1, "0"), (2, "01"), (3, "012")])
def test_base_cases(n, canon):
    u = construct_unclustered_ternary(n)
    assert str(u) == canon and run_count(bwt(u)) == n


def test_ternary_n1_bwt():
    assert format_word(bwt(construct_unclustered_ternary(1))) == "0"


@pytest.mark.parametrize("n", range(1, 61))
def test_ternary_all_lengths(n):
    u = construct_unclustered_ternary(n)
    assert len(u) == n and brute_runs(brute_bwt(u.word)) == n


@pytest.mark.parametrize("n", range(1, 10))
def test_ternary_in_oracle_set(n):
    assert construct_unclustered_ternary(n) in unclustered_necklaces(3, n)


def test_extend_alphabet_six_letters():
    assert format_word(extend_alphabet("201021201", 6)) == "301041502"
    assert format_word(extend_alphabet("201021201", 4)) == "201021301"
    assert format_word(extend_alphabet("201021201", 3)) == "201021201"


def test_extend_alphabet_length_guard():
    with pytest.raises(ValueError, match="at least alphabet size"):
        extend_alphabet("201", 4)


def test_extend_alphabet_sparse_ones_and_twos():
    # |w|_1 = |w|_2 = 1: the rank below the relabelled 2 must become 1
    w = parse_word("1020")
    assert is_bwt_image_aperiodic(w)
    out = extend_alphabet(w, 4)
    assert format_word(out) == "2031"
    assert standard_permutation(out) == standard_permutation(w)


@pytest.mark.parametrize("k", range(3, 9))
@pytest.mark.parametrize("n", range(3, 40))
def test_extend_alphabet_properties(k, n):
    if n < k:
        return
    w = unclustered_ternary_image(n)
    out = extend_alphabet(w, k)
    assert standard_permutation(out) == standard_permutation(w)
    assert set(out) == set(range(k)) and run_count(out) == n


def test_construct_unclustered_examples():
    u = construct_unclustered(9, 6, True)
    assert len(u) == 9 and run_count(bwt(u)) == 9 and set(u.word) == set(range(6))
    assert str(construct_unclustered(3, 3, True)) == "012"
    assert construct_unclustered(5, 3) in unclustered_necklaces(3, 5)


def test_construct_unclustered_errors():
    with pytest.raises(ValueError):
        construct_unclustered(2, 3, True)
    with pytest.raises(ValueError):
        construct_unclustered(5, 2)
