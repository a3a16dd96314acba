import random

import pytest

from unclustered_bwt.graph import CyclePath, gdbw_image, is_gdbw, path_from_inverse_perm
from unclustered_bwt.untie import (
    block_sets,
    find_ties,
    make_unclustered_gdbw,
    reroute,
    split_for_reroute,
    unclustered_gdbw_image,
    untie_all,
    untie_leftmost,
    untie_leftmost_step,
    untie_rightmost,
    untie_rightmost_step,
)
from unclustered_bwt.words import (
    bwt,
    format_word,
    inverse_bwt,
    inverse_standard_permutation,
    is_alphabet_permutation_power,
    is_bwt_image_aperiodic,
    parse_word,
    run_count,
)


def boundary_ties(w, k):
    """Positionwise scan, independent of the permutation view."""
    return [i for i in range(len(w) // k - 1) if w[k * i + k - 1] == w[k * (i + 1)]]


def diff_positions(a, b):
    return [p for p, (x, y) in enumerate(zip(a, b)) if x != y]


def random_instances(count, seed=2024):
    rng = random.Random(seed)
    for _ in range(count):
        k, n = rng.randint(3, 5), rng.randint(2, 8)
        yield k, n, gdbw_image(k, n, rng)


def test_find_ties_examples():
    report = find_ties("201021120", 3)
    assert report.blocks == [1] and report.ties[0].witness == 1
    assert find_ties("201102120", 3).blocks == [0]
    assert find_ties("210210210210210210", 3).blocks == []
    assert find_ties("210012210012210021", 3).blocks == [0, 1, 2, 3, 4]


def test_find_ties_witness_condition():
    w = parse_word("201021120")
    sigma = inverse_standard_permutation(w)
    n = 3
    assert sigma[1 * n + 1] == 5 and sigma[1 * n + 2] == 6


def test_find_ties_rejects_non_permutation_power():
    with pytest.raises(ValueError):
        find_ties("211", 3)


def test_reroute_first_step():
    path = CyclePath(3, (5, 6, 0, 1, 3, 2, 8, 7, 4))
    assert split_for_reroute(path, {1, 4, 7}, (4, 5)) == ((5, 6, 0, 1), (3, 2, 8, 7), (4,))
    out = reroute(path, {1, 4, 7}, {3, 4, 5}, (4, 5))
    assert out.labels == (5, 6, 0, 1, 4, 3, 2, 8, 7)


def test_reroute_second_step():
    path = CyclePath(3, (2, 8, 7, 5, 6, 0, 1, 4, 3))
    assert split_for_reroute(path, {0, 3, 6}, (3, 2)) == ((2, 8, 7, 5, 6), (0,), (1, 4, 3))
    out = reroute(path, {0, 3, 6}, {0, 1, 2}, (3, 2))
    assert out.labels == (2, 8, 7, 5, 6, 1, 4, 3, 0)


def test_reroute_trivial():
    out = reroute(CyclePath(3, (0, 1, 2)), {0, 1, 2}, {0, 1, 2}, (2, 0))
    assert out.labels == (0, 2, 1)


def test_reroute_errors():
    path = CyclePath(3, (5, 6, 0, 1, 3, 2, 8, 7, 4))
    with pytest.raises(ValueError):
        reroute(path, {1, 4, 7}, {3, 4, 5}, (1, 5))  # not visited
    with pytest.raises(ValueError):
        reroute(path, {1, 4}, {3, 4, 5}, (4, 5))
    with pytest.raises(ValueError):
        reroute(path, {1, 4, 8}, {3, 4, 5}, (4, 5))  # 8 leads outside B


@pytest.mark.parametrize("k, n, i", [(3, 3, 1), (4, 5, 2), (5, 4, 0)])
def test_block_sets_satisfy_reroute_conditions(k, n, i):
    A, B = block_sets(k, n, i)
    size = k * n
    assert len(A) == len(B) == k
    for x in A:
        assert {(k * x + j) % size for j in range(k)} == set(B)


def test_reroute_changes_only_edges_inside_AxB():
    for k, n, w in random_instances(60, seed=7):
        sigma = inverse_standard_permutation(w)
        path = path_from_inverse_perm(sigma, k)
        i = random.Random(n).randrange(n)
        A, B = block_sets(k, n, i)
        x = sorted(A)[0]
        out = reroute(path, A, B, (x, sigma[x]))
        before, after = set(path.edges()), set(out.edges())
        assert (x, sigma[x]) not in after
        inside = {(a, b) for a in A for b in B}
        assert before - inside == after - inside


def test_untie_rightmost_two_steps():
    assert format_word(untie_rightmost("201021120", 3)) == "201102120"
    assert format_word(untie_rightmost("201102120", 3)) == "120102120"
    step = untie_rightmost_step("201021120", 3)
    assert step.plan.edge == (4, 5)
    assert inverse_standard_permutation(step.after).cycles() == [(0, 1, 4, 3, 2, 8, 7, 5, 6)]
    assert str(inverse_bwt(step.after)) == "001102212"
    step2 = untie_rightmost_step(step.after, 3)
    assert inverse_standard_permutation(step2.after).cycles() == [(0, 2, 8, 7, 5, 6, 1, 4, 3)]


def test_untie_requires_tie():
    with pytest.raises(ValueError):
        untie_rightmost("210210210210210210", 3)
    with pytest.raises(ValueError):
        untie_leftmost("210210210210210210", 3)


def test_untie_leftmost_examples():
    w = parse_word("201021120")
    out = untie_leftmost(w, 3)
    assert set(diff_positions(w, out)) <= {6, 7, 8}
    assert 1 not in boundary_ties(out, 3)
    assert is_bwt_image_aperiodic(out) and is_alphabet_permutation_power(out, 3)

    w = parse_word("210012210012210021")
    out = untie_leftmost(w, 3)
    assert set(diff_positions(w, out)) <= {3, 4, 5}
    assert 0 not in boundary_ties(out, 3)
    assert is_bwt_image_aperiodic(out)


def test_rightmost_step_properties():
    checked = 0
    for k, n, w in random_instances(300):
        while boundary_ties(w, k):
            i0 = boundary_ties(w, k)[-1]
            out = untie_rightmost(w, k)
            assert set(diff_positions(w, out)) <= set(range(k * i0, k * i0 + k))
            assert all(i < i0 for i in boundary_ties(out, k))
            assert is_alphabet_permutation_power(out, k) and is_bwt_image_aperiodic(out)
            w = out
            checked += 1
    assert checked > 100


def test_leftmost_step_properties():
    for k, n, w in random_instances(200, seed=99):
        if not boundary_ties(w, k):
            continue
        i0 = boundary_ties(w, k)[0]
        out = untie_leftmost(w, k)
        assert set(diff_positions(w, out)) <= set(range(k * (i0 + 1), k * (i0 + 2)))
        assert all(i > i0 for i in boundary_ties(out, k))
        assert is_alphabet_permutation_power(out, k) and is_bwt_image_aperiodic(out)


def test_untie_all_terminates():
    for k, n, w in random_instances(200, seed=5):
        final, steps = untie_all(w, k)
        assert len(steps) <= n - 1
        assert run_count(final) == k * n
        blocks = [s.block for s in steps]
        assert blocks == sorted(blocks, reverse=True) and len(set(blocks)) == len(blocks)


def test_untie_all_trace():
    final, steps = untie_all("201021120", 3)
    assert format_word(final) == "120102120"
    assert [s.rerouted.labels for s in steps] == [(5, 6, 0, 1, 4, 3, 2, 8, 7), (2, 8, 7, 5, 6, 1, 4, 3, 0)]
    d = steps[0].to_dict()
    assert d["segments"] == [[5, 6, 0, 1], [3, 2, 8, 7], [4]]
    assert d["removed_edge"] == [4, 5] and [4, 5] in d["removed_edges"]


def test_make_unclustered_gdbw():
    assert str(make_unclustered_gdbw(3, 1)) in {"012", "021"}
    u = make_unclustered_gdbw(3, 6)
    assert len(u) == 18 and run_count(bwt(u)) == 18
    with pytest.raises(ValueError, match="alphabet too small"):
        make_unclustered_gdbw(2, 3)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
@pytest.mark.parametrize("n", range(1, 21))
def test_make_unclustered_gdbw_grid(k, n):
    u = make_unclustered_gdbw(k, n)
    assert len(u) == k * n and run_count(bwt(u)) == k * n and is_gdbw(u, k)


def test_make_unclustered_gdbw_seeded():
    rng = random.Random(1)
    for _ in range(30):
        k, n = rng.randint(3, 6), rng.randint(1, 12)
        w = unclustered_gdbw_image(k, n, rng)
        assert run_count(w) == k * n and is_bwt_image_aperiodic(w)
