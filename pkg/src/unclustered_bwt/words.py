"""Words, necklaces, the Burrows-Wheeler transform and run-length encoding.

Words are tuples of letter codes ``0..k-1``.  Every public function also
accepts a :class:`Necklace` or a base-36 string such as ``"201021120"``,
so examples can be pasted in directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Sequence, Union

from .permutation import Permutation

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_ALPHABET = len(DIGITS)

Word = tuple[int, ...]


@dataclass(frozen=True)
class Necklace:
    """A conjugacy class of words, stored as its least rotation."""

    word: Word
    primitive: bool

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_word(self.word)


WordLike = Union[str, Sequence[int], Necklace]


def parse_word(text: str) -> Word:
    try:
        return tuple(DIGITS.index(c) for c in text.strip().lower())
    except ValueError:
        raise ValueError(f"cannot parse {text!r}: letters must be base-36 digits") from None


def format_word(w: Sequence[int]) -> str:
    return "".join(DIGITS[a] for a in w)


def as_word(w: WordLike) -> Word:
    if isinstance(w, Necklace):
        return w.word
    if isinstance(w, str):
        return parse_word(w)
    return tuple(int(a) for a in w)


def _nonempty(w: WordLike) -> Word:
    w = as_word(w)
    if not w:
        raise ValueError("empty input")
    return w


def shift(w: WordLike) -> Word:
    w = _nonempty(w)
    return w[-1:] + w[:-1]


def least_rotation(w: Sequence[int]) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(w) + list(w)
    fail = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def smallest_period(w: Sequence[int]) -> int:
    """Smallest p with w[i] == w[i+p] for all valid i (KMP border)."""
    n = len(w)
    border = [0] * n
    b = 0
    for i in range(1, n):
        while b and w[i] != w[b]:
            b = border[b - 1]
        if w[i] == w[b]:
            b += 1
        border[i] = b
    return n - border[-1]


def is_primitive(w: WordLike) -> bool:
    w = _nonempty(w)
    p = smallest_period(w)
    return p == len(w) or len(w) % p != 0


def canonical(w: WordLike) -> Necklace:
    w = _nonempty(w)
    r = least_rotation(w) % len(w)
    return Necklace(w[r:] + w[:r], is_primitive(w))


def parikh_vector(w: WordLike, k: int) -> tuple[int, ...]:
    counts = [0] * k
    for a in as_word(w):
        counts[a] += 1
    return tuple(counts)


def bwt(u: WordLike) -> Word:
    """Last column of the sorted matrix of all rotations of ``u``.

    Plain rotation sorting, O(n^2 log n); fine for words up to a few
    thousand letters.
    """
    u = _nonempty(u)
    n = len(u)
    order = sorted(range(n), key=lambda i: u[i:] + u[:i])
    return tuple(u[i - 1] for i in order)


def rle(w: WordLike) -> tuple[tuple[int, int], ...]:
    """Maximal-run factorization as ``(letter, length)`` pairs."""
    w = _nonempty(w)
    return tuple((a, len(list(g))) for a, g in groupby(w))


def run_count(w: WordLike) -> int:
    w = _nonempty(w)
    return 1 + sum(1 for a, b in zip(w, w[1:]) if a != b)


def is_completely_unclustered(u: WordLike) -> bool:
    u = _nonempty(u)
    return run_count(bwt(u)) == len(u)


def standard_permutation(w: WordLike) -> Permutation:
    """pi_w: positions ranked by (letter, occurrence order)."""
    return inverse_standard_permutation(w).inverse()


def inverse_standard_permutation(w: WordLike) -> Permutation:
    """pi_w^-1: positions of 0 left to right, then positions of 1, and so on."""
    w = _nonempty(w)
    return Permutation(tuple(sorted(range(len(w)), key=w.__getitem__)))


def is_bwt_image_aperiodic(w: WordLike) -> bool:
    return standard_permutation(w).is_single_cycle()


def inverse_bwt(w: WordLike) -> Necklace:
    """The aperiodic necklace whose BWT is ``w``.

    Walks the LF-mapping backwards from the first row of the matrix, which
    is the least rotation, so the result is already canonical.
    """
    w = _nonempty(w)
    lf = standard_permutation(w)
    n = len(w)
    if lf.cycle_length_through(0) != n:
        raise ValueError(f"{format_word(w)} is not a BWT image of an aperiodic necklace")
    out = [0] * n
    row = 0
    for pos in range(n - 1, -1, -1):
        out[pos] = w[row]
        row = lf[row]
    return Necklace(tuple(out), True)


def is_alphabet_permutation_power(w: WordLike, k: int) -> bool:
    w = _nonempty(w)
    if len(w) % k:
        return False
    full = set(range(k))
    return all(set(w[b:b + k]) == full for b in range(0, len(w), k))
