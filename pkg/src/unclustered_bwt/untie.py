"""Breaking ties between consecutive blocks of an alphabet-permutation power.

A BWT image ``w`` of a generalized de Bruijn word is a sequence of ``n``
blocks, each a permutation of the alphabet.  It has a *tie* at block ``i``
when the last letter of block ``i`` equals the first letter of block
``i + 1``.  Ties are removed one at a time by rerouting the Hamiltonian
cycle of DB(k, kn) that the inverse standard permutation of ``w`` traces.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from .graph import (
    CyclePath,
    cycle_to_inverse_perm,
    gdbw_image,
    is_edge,
    path_from_inverse_perm,
    word_from_inverse_perm,
)
from .words import (
    Necklace,
    Word,
    WordLike,
    _nonempty,
    format_word,
    inverse_bwt,
    inverse_standard_permutation,
    is_alphabet_permutation_power,
)


class Tie(NamedTuple):
    block: int
    witness: int


@dataclass(frozen=True)
class TieReport:
    ties: tuple[Tie, ...]

    @property
    def blocks(self) -> list[int]:
        return [t.block for t in self.ties]

    def __len__(self) -> int:
        return len(self.ties)

    def __bool__(self) -> bool:
        return bool(self.ties)


@dataclass(frozen=True)
class ReroutePlan:
    A: frozenset
    B: frozenset
    edge: tuple[int, int]
    segments: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def removed_edges(self) -> list[tuple[int, int]]:
        g1, g2, g3 = self.segments
        return [(g1[-1], g2[0]), (g2[-1], g3[0]), (g3[-1], g1[0])]

    @property
    def added_edges(self) -> list[tuple[int, int]]:
        g1, g2, g3 = self.segments
        return [(g1[-1], g3[0]), (g3[-1], g2[0]), (g2[-1], g1[0])]


@dataclass(frozen=True)
class UntieStep:
    block: int
    witness: int
    before: Word
    after: Word
    path: CyclePath
    rerouted: CyclePath
    plan: ReroutePlan = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "block": self.block,
            "witness": self.witness,
            "removed_edge": list(self.plan.edge),
            "A": sorted(self.plan.A),
            "B": sorted(self.plan.B),
            "segments": [list(s) for s in self.plan.segments],
            "removed_edges": [list(e) for e in self.plan.removed_edges],
            "added_edges": [list(e) for e in self.plan.added_edges],
            "path": list(self.path.labels),
            "rerouted_path": list(self.rerouted.labels),
            "word": format_word(self.after),
        }


def _dims(w: Word, k: int) -> int:
    if not is_alphabet_permutation_power(w, k):
        raise ValueError(f"{format_word(w)} is not an alphabet-permutation power over {k} letters")
    return len(w) // k


def find_ties(w: WordLike, k: int) -> TieReport:
    w = _nonempty(w)
    n = _dims(w, k)
    sigma = inverse_standard_permutation(w)
    ties = []
    for i in range(n - 1):
        last, first = k * i + k - 1, k * (i + 1)
        if w[last] == w[first]:
            j0 = w[last]
            # the (i+1)-th and (i+2)-th occurrences of j0
            assert sigma[j0 * n + i] == last and sigma[j0 * n + i + 1] == first
            ties.append(Tie(i, j0))
    return TieReport(tuple(ties))


def split_for_reroute(path: CyclePath, A: Iterable[int], edge: tuple[int, int]):
    """Rotate ``path`` to start at the head of ``edge`` and cut it in three.

    Each segment runs from a B-vertex to an A-vertex; the cuts are placed
    right after the first and the second A-vertex visited.
    """
    A = frozenset(A)
    x, y = edge
    labels = path.labels
    t = labels.index(y)
    if labels[t - 1] != x:
        raise ValueError(f"edge {x} -> {y} is not visited by the cycle")
    rotated = labels[t:] + labels[:t]
    cuts = [p + 1 for p, v in enumerate(rotated) if v in A][:2]
    if len(cuts) < 2:
        raise ValueError("cycle visits fewer than three vertices of A")
    a, b = cuts
    return rotated[:a], rotated[a:b], rotated[b:]


def reroute(path: CyclePath, A: Iterable[int], B: Iterable[int], edge: tuple[int, int]) -> CyclePath:
    """Reorder the three segments so that ``edge`` is no longer used.

    Requires ``|A|, |B| >= 3``, every pair in A x B to be an edge and every
    edge leaving A to land in B.  The result agrees with ``path`` on every
    edge outside A x B.
    """
    return _reroute(path, frozenset(A), frozenset(B), tuple(edge))[0]


def _reroute(path, A, B, edge):
    k, size = path.k, len(path)
    if len(A) < 3 or len(B) < 3:
        raise ValueError("A and B need at least three vertices each")
    if edge[0] not in A or edge[1] not in B:
        raise ValueError(f"edge {edge} does not go from A to B")
    for x in A:
        if any(not is_edge(k, size, x, y) for y in B):
            raise ValueError(f"some pair ({x}, B) is not an edge")
        if any((k * x + i) % size not in B for i in range(k)):
            raise ValueError(f"an edge leaving {x} does not land in B")
    g1, g2, g3 = split_for_reroute(path, A, edge)
    plan = ReroutePlan(A, B, edge, (g1, g2, g3))
    return CyclePath(k, g1 + g3 + g2), plan


def block_sets(k: int, n: int, i: int) -> tuple[frozenset, frozenset]:
    """A_i = {i, n+i, ..., (k-1)n+i} and B_i = {ki, ..., ki+k-1}."""
    return frozenset(j * n + i for j in range(k)), frozenset(k * i + t for t in range(k))


def _apply(w: Word, k: int, n: int, block: int, witness: int, sets_block: int, edge) -> UntieStep:
    sigma = inverse_standard_permutation(w)
    path = path_from_inverse_perm(sigma, k)
    A, B = block_sets(k, n, sets_block)
    rerouted, plan = _reroute(path, A, B, edge)
    after = word_from_inverse_perm(cycle_to_inverse_perm(rerouted), k, n)
    return UntieStep(block, witness, w, after, path, rerouted, plan)


def untie_rightmost_step(w: WordLike, k: int) -> UntieStep:
    w = _nonempty(w)
    n = _dims(w, k)
    report = find_ties(w, k)
    if not report:
        raise ValueError(f"{format_word(w)} has no tie")
    i0, j0 = report.ties[-1]
    return _apply(w, k, n, i0, j0, i0, (j0 * n + i0, k * i0 + k - 1))


def untie_leftmost_step(w: WordLike, k: int) -> UntieStep:
    w = _nonempty(w)
    n = _dims(w, k)
    report = find_ties(w, k)
    if not report:
        raise ValueError(f"{format_word(w)} has no tie")
    i0, j0 = report.ties[0]
    return _apply(w, k, n, i0, j0, i0 + 1, (j0 * n + i0 + 1, k * (i0 + 1)))


def untie_rightmost(w: WordLike, k: int) -> Word:
    """Remove the rightmost tie by changing only the letters of its block."""
    return untie_rightmost_step(w, k).after


def untie_leftmost(w: WordLike, k: int) -> Word:
    """Remove the leftmost tie at block i0 by changing only block i0 + 1."""
    return untie_leftmost_step(w, k).after


def untie_all(w: WordLike, k: int) -> tuple[Word, list[UntieStep]]:
    """Apply rightmost untying until no tie is left; at most n - 1 steps."""
    w = _nonempty(w)
    n = _dims(w, k)
    steps = []
    while find_ties(w, k):
        if len(steps) >= n - 1:
            raise RuntimeError("untying did not terminate within n - 1 steps")
        step = untie_rightmost_step(w, k)
        steps.append(step)
        w = step.after
    return w, steps


def unclustered_gdbw_image(k: int, n: int, rng: Optional[random.Random] = None) -> Word:
    if k < 3:
        raise ValueError("alphabet too small: need k >= 3")
    return untie_all(gdbw_image(k, n, rng), k)[0]


def make_unclustered_gdbw(k: int, n: int, rng: Optional[random.Random] = None) -> Necklace:
    """A generalized de Bruijn word of length kn with exactly kn BWT runs."""
    return inverse_bwt(unclustered_gdbw_image(k, n, rng))
