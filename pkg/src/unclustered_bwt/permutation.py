"""Permutations of ``{0, ..., m-1}`` in one-line and cycle notation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{0, ..., m-1}`` stored in one-line notation.

    ``p(i)`` (or ``p[i]``) is the image of ``i``.  Cycles are listed
    starting from their smallest element, in increasing order of that
    element, so the cycle through 0 always comes first.
    """

    one_line: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.one_line)
        if sorted(values) != list(range(len(values))):
            raise ValueError(f"not a permutation of 0..{len(values) - 1}: {values}")
        object.__setattr__(self, "one_line", values)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(size)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], size: int) -> "Permutation":
        image = list(range(size))
        seen = set()
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                if a in seen:
                    raise ValueError(f"element {a} appears in two cycles")
                seen.add(a)
                image[a] = b
        return cls(tuple(image))

    def __call__(self, i: int) -> int:
        return self.one_line[i]

    def __getitem__(self, i: int) -> int:
        return self.one_line[i]

    def __len__(self) -> int:
        return len(self.one_line)

    def __iter__(self):
        return iter(self.one_line)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(p * q)(i) == p(q(i))``."""
        if len(self) != len(other):
            raise ValueError("size mismatch")
        return Permutation(tuple(self.one_line[j] for j in other.one_line))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.one_line)
        for i, j in enumerate(self.one_line):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.one_line)
        out = []
        for start in range(len(self.one_line)):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.one_line[i]
            out.append(tuple(cycle))
        return out

    def cycle_length_through(self, start: int = 0) -> int:
        """Length of the cycle containing ``start``; stops as soon as it closes."""
        steps = 1
        i = self.one_line[start]
        while i != start:
            i = self.one_line[i]
            steps += 1
        return steps

    def is_single_cycle(self) -> bool:
        n = len(self.one_line)
        return n > 0 and self.cycle_length_through(0) == n

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())
