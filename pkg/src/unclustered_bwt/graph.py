"""Generalized de Bruijn graphs DB(k, n) and the Euler/Hamilton correspondence.

DB(k, n) has vertices ``0..n-1`` and, from every vertex ``m``, one edge per
letter ``i`` to ``(k*m + i) mod n``.  Edges are identified by
``(source, letter)`` so parallel edges and loops stay distinct.  The line
graph of DB(k, n) is DB(k, kn): edge ``(m, i)`` becomes vertex
``(k*m + i) mod kn``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .permutation import Permutation
from .words import (
    Necklace,
    WordLike,
    Word,
    as_word,
    bwt,
    inverse_bwt,
    is_alphabet_permutation_power,
    is_bwt_image_aperiodic,
)

HAMILTONIAN_ENUMERATION_LIMIT = 12


class EdgeRef(NamedTuple):
    source: int
    letter: int


@dataclass(frozen=True)
class GdbGraph:
    k: int
    n: int

    def __post_init__(self):
        if self.k < 2 or self.n < 1:
            raise ValueError(f"DB(k, n) needs k >= 2 and n >= 1, got ({self.k}, {self.n})")

    def target(self, e: EdgeRef) -> int:
        return (self.k * e.source + e.letter) % self.n

    def out_neighbors(self, m: int) -> tuple[int, ...]:
        if not 0 <= m < self.n:
            raise ValueError(f"vertex {m} out of range for DB({self.k}, {self.n})")
        return tuple((self.k * m + i) % self.n for i in range(self.k))

    def edges(self) -> list[EdgeRef]:
        return [EdgeRef(m, i) for m in range(self.n) for i in range(self.k)]

    def in_degree(self, v: int) -> int:
        return sum(1 for e in self.edges() if self.target(e) == v)

    def line_graph(self) -> "GdbGraph":
        return GdbGraph(self.k, self.k * self.n)


@dataclass(frozen=True)
class CyclePath:
    """A Hamiltonian cycle of DB(k, kn) given by its cyclic vertex order."""

    k: int
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        check_cycle_path(self.k, self.labels)

    @property
    def n(self) -> int:
        return len(self.labels) // self.k

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def edges(self) -> list[tuple[int, int]]:
        t = self.labels
        return list(zip(t, t[1:] + t[:1]))


def is_edge(k: int, size: int, x: int, y: int) -> bool:
    """Whether ``x -> y`` is an edge of DB(k, size)."""
    return (y - k * x) % size < k


def check_cycle_path(k: int, labels: Sequence[int]) -> None:
    size = len(labels)
    if size == 0 or size % k:
        raise ValueError(f"cycle length {size} is not a positive multiple of k={k}")
    if sorted(labels) != list(range(size)):
        raise ValueError("cycle does not visit every vertex exactly once")
    for x, y in zip(labels, tuple(labels[1:]) + tuple(labels[:1])):
        if not is_edge(k, size, x, y):
            raise ValueError(f"{x} -> {y} is not an edge of DB({k}, {size})")


def eulerian_cycle(G: GdbGraph, rng: Optional[random.Random] = None) -> list[EdgeRef]:
    """Hierholzer's algorithm from vertex 0.

    Without ``rng`` the unused edge with the smallest letter is always taken
    first, which makes the result reproducible; with ``rng`` the letter order
    at each vertex is shuffled.
    """
    orders = [list(range(G.k)) for _ in range(G.n)]
    if rng is not None:
        for order in orders:
            rng.shuffle(order)
    used = [0] * G.n
    stack: list[tuple[int, Optional[EdgeRef]]] = [(0, None)]
    circuit: list[EdgeRef] = []
    while stack:
        v, via = stack[-1]
        if used[v] < G.k:
            e = EdgeRef(v, orders[v][used[v]])
            used[v] += 1
            stack.append((G.target(e), e))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    return circuit


def check_eulerian_cycle(G: GdbGraph, cycle: Sequence[EdgeRef]) -> None:
    if sorted(cycle) != sorted(G.edges()):
        raise ValueError("cycle does not use every edge exactly once")
    for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
        if G.target(a) != b.source:
            raise ValueError(f"edges {a} and {b} do not chain")


def line_graph_label(e: EdgeRef, G: GdbGraph) -> int:
    return (G.k * e.source + e.letter) % (G.k * G.n)


def eulerian_to_hamiltonian(cycle: Sequence[EdgeRef], G: GdbGraph) -> CyclePath:
    check_eulerian_cycle(G, cycle)
    return CyclePath(G.k, tuple(line_graph_label(e, G) for e in cycle))


def cycle_to_inverse_perm(path: CyclePath) -> Permutation:
    """sigma with sigma(path[t]) = path[t+1]: the cycle read as a permutation."""
    image = [0] * len(path)
    for x, y in path.edges():
        image[x] = y
    return Permutation(tuple(image))


def path_from_inverse_perm(sigma: Permutation, k: int, start: int = 0) -> CyclePath:
    labels = [start]
    x = sigma[start]
    while x != start:
        labels.append(x)
        x = sigma[x]
    return CyclePath(k, tuple(labels))


def word_from_inverse_perm(sigma: Permutation, k: int, n: int) -> Word:
    """The word with letter ``j`` at positions ``sigma(j*n) .. sigma(j*n + n - 1)``."""
    if len(sigma) != k * n:
        raise ValueError(f"permutation has size {len(sigma)}, expected {k * n}")
    if not sigma.is_single_cycle():
        raise ValueError("permutation is not a single cycle")
    for x in range(k * n):
        if not is_edge(k, k * n, x, sigma[x]):
            raise ValueError(f"{x} -> {sigma[x]} is not an edge of DB({k}, {k * n})")
    w = [0] * (k * n)
    for m in range(k * n):
        w[sigma[m]] = m // n
    return tuple(w)


def gdbw_image(k: int, n: int, rng: Optional[random.Random] = None) -> Word:
    """BWT of a generalized de Bruijn word of length kn, built from an Euler tour."""
    G = GdbGraph(k, n)
    path = eulerian_to_hamiltonian(eulerian_cycle(G, rng), G)
    return word_from_inverse_perm(cycle_to_inverse_perm(path), k, n)


def generate_gdbw(k: int, n: int, rng: Optional[random.Random] = None) -> Necklace:
    return inverse_bwt(gdbw_image(k, n, rng))


def is_gdbw(u: WordLike, k: int) -> bool:
    u = as_word(u)
    return len(u) % k == 0 and is_alphabet_permutation_power(bwt(u), k)


def is_gdbw_image(w: WordLike, k: int) -> bool:
    """Whether ``w`` is the BWT of some generalized de Bruijn word."""
    return is_alphabet_permutation_power(w, k) and is_bwt_image_aperiodic(w)


def enumerate_hamiltonian_cycles(k: int, n: int) -> list[CyclePath]:
    """Every Hamiltonian cycle of DB(k, kn), each listed once starting at 0."""
    size = k * n
    if size > HAMILTONIAN_ENUMERATION_LIMIT:
        raise ValueError(f"kn = {size} exceeds the enumeration limit {HAMILTONIAN_ENUMERATION_LIMIT}")
    found = []
    path = [0]
    visited = [False] * size
    visited[0] = True

    def extend(v):
        if len(path) == size:
            if is_edge(k, size, v, 0):
                found.append(CyclePath(k, tuple(path)))
            return
        for i in range(k):
            t = (k * v + i) % size
            if not visited[t]:
                visited[t] = True
                path.append(t)
                extend(t)
                path.pop()
                visited[t] = False

    extend(0)
    return found


def export_dot(G: GdbGraph, line_labels: bool = True) -> str:
    """DOT text with one line per vertex and one line per edge.

    With ``line_labels`` every edge carries its vertex label in the line
    graph DB(k, kn).
    """
    lines = ["digraph {"]
    lines += [f"  {m};" for m in range(G.n)]
    for e in G.edges():
        attr = f" [label={line_graph_label(e, G)}]" if line_labels else ""
        lines.append(f"  {e.source} -> {G.target(e)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
