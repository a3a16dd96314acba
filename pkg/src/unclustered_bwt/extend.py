"""Completely unclustered BWTs of every length and over every alphabet k >= 3.

Lengths that are multiples of 3 come straight from the untie engine.  The
other residues start from a ternary image of length 3n' whose last block
puts its ``2`` at a chosen position, then insert or delete one ``2``.
Larger alphabets relabel the highest-ranked positions with fresh letters,
which leaves the standard permutation untouched.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .graph import gdbw_image, path_from_inverse_perm, cycle_to_inverse_perm, word_from_inverse_perm
from .untie import _reroute, untie_all
from .words import (
    Necklace,
    Word,
    WordLike,
    _nonempty,
    bwt,
    format_word,
    inverse_bwt,
    inverse_standard_permutation,
    is_alphabet_permutation_power,
    run_count,
)


class LastBlockVariant(enum.Enum):
    PENULTIMATE_MINUS_ONE = "first"   # w[3n-3] == 2
    PENULTIMATE = "middle"            # w[3n-2] == 2

    @property
    def offset(self) -> int:
        return 3 if self is LastBlockVariant.PENULTIMATE_MINUS_ONE else 2


BASE_CASES = {1: (0,), 2: (0, 1), 3: (0, 1, 2)}


def unclustered_with_marked_last_block(n: int, variant: LastBlockVariant) -> Word:
    """Unclustered ternary gdbw image of length 3n with its last ``2`` placed by ``variant``."""
    if n < 1:
        raise ValueError("n must be positive")
    size = 3 * n
    w = gdbw_image(3, n)
    want = size - variant.offset
    if w[want] != 2:
        sigma = inverse_standard_permutation(w)
        path = path_from_inverse_perm(sigma, 3)
        A = frozenset({n - 1, 2 * n - 1, 3 * n - 1})
        B = frozenset({size - 3, size - 2, size - 1})
        # the last 2 sits at sigma(3n-1); move it off the unwanted slot
        rerouted, _ = _reroute(path, A, B, (size - 1, sigma[size - 1]))
        w = word_from_inverse_perm(cycle_to_inverse_perm(rerouted), 3, n)
    w, _ = untie_all(w, 3)
    assert w[want] == 2
    return w


def insert_two(w: WordLike) -> Word:
    """Insert a ``2`` between the last two letters of an image ending in ``2ab``."""
    w = _nonempty(w)
    if len(w) % 3 or not is_alphabet_permutation_power(w, 3) or w[-3] != 2:
        raise ValueError(f"{format_word(w)}: expected a ternary permutation power with w[3n-3] == 2")
    return w[:-1] + (2,) + w[-1:]


def delete_two(w: WordLike) -> Word:
    """Delete the ``2`` in the middle of the last block."""
    w = _nonempty(w)
    if len(w) % 3 or not is_alphabet_permutation_power(w, 3) or w[-2] != 2:
        raise ValueError(f"{format_word(w)}: expected a ternary permutation power with w[3n-2] == 2")
    return w[:-2] + w[-1:]


@lru_cache(maxsize=None)
def unclustered_ternary_image(n: int) -> Word:
    """BWT image of a ternary necklace of length n with n runs."""
    if n < 1:
        raise ValueError("length must be positive")
    if n in BASE_CASES:
        return bwt(BASE_CASES[n])
    if n % 3 == 0:
        return untie_all(gdbw_image(3, n // 3), 3)[0]
    if n % 3 == 1:
        m = (n - 1) // 3
        return insert_two(unclustered_with_marked_last_block(m, LastBlockVariant.PENULTIMATE_MINUS_ONE))
    m = (n + 1) // 3
    return delete_two(unclustered_with_marked_last_block(m, LastBlockVariant.PENULTIMATE))


def construct_unclustered_ternary(n: int) -> Necklace:
    return inverse_bwt(unclustered_ternary_image(n))


def extend_alphabet(w: WordLike, k: int) -> Word:
    """Relabel the top-ranked positions of a ternary image with letters 3..k-1.

    Ranks are read through the inverse standard permutation: the position
    holding rank ``n-i`` gets letter ``k-i`` for ``i = 1..k-3``.  If that
    used up every ``2``, the next rank down becomes ``2``; if every ``1``
    and ``2`` is then used up, the rank after that becomes ``1``.  Each
    fresh letter occurs once, so the standard permutation and the run
    count are unchanged.
    """
    w = _nonempty(w)
    n = len(w)
    if k < 3:
        raise ValueError("alphabet too small: need k >= 3")
    if n < k:
        raise ValueError("length must be at least alphabet size")
    if max(w) > 2:
        raise ValueError(f"{format_word(w)} is not a ternary word")
    q = inverse_standard_permutation(w)
    out = list(w)
    for i in range(1, k - 2):
        out[q[n - i]] = k - i
    twos, ones = w.count(2), w.count(1)
    if k - 3 >= twos:
        out[q[n - (k - 2)]] = 2
        if k - 2 >= twos + ones:
            out[q[n - (k - 1)]] = 1
    out = tuple(out)
    if set(out) != set(range(k)):
        raise ValueError(f"{format_word(w)} cannot be extended to cover all {k} letters")
    return out


def construct_unclustered(n: int, k: int, require_all_letters: bool = False) -> Necklace:
    """A necklace of length n over k >= 3 letters whose BWT has n runs."""
    if k < 3:
        raise ValueError("alphabet too small: need k >= 3")
    if n < 1:
        raise ValueError("length must be positive")
    w = unclustered_ternary_image(n)
    if require_all_letters:
        w = extend_alphabet(w, k)
    u = inverse_bwt(w)
    assert run_count(w) == n
    return u
