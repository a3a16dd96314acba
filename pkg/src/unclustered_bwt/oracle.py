"""Brute-force reference implementations for small sizes.

Nothing here reuses the constructive code paths: rotations are compared
directly, BWTs are built from explicit matrices and polynomial gcds are
computed by long division.  Size guards raise instead of truncating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .graph import (
    HAMILTONIAN_ENUMERATION_LIMIT,
    cycle_to_inverse_perm,
    enumerate_hamiltonian_cycles,
    word_from_inverse_perm,
)
from .numtheory import euler_phi
from .words import Necklace, inverse_bwt

WORD_SCAN_LIMIT = 10 ** 7


class GuardExceeded(ValueError):
    pass


def _guard(count: int, limit: int, what: str) -> None:
    if count > limit:
        raise GuardExceeded(f"{what}: {count} exceeds the limit {limit}")


def rotations(w: tuple) -> list[tuple]:
    return [w[i:] + w[:i] for i in range(len(w))]


def brute_canonical(w: tuple) -> tuple:
    return min(rotations(w))


def brute_bwt(w: tuple) -> tuple:
    return tuple(row[-1] for row in sorted(rotations(w)))


def brute_runs(w: tuple) -> int:
    return sum(1 for i in range(len(w)) if i == 0 or w[i] != w[i - 1])


def brute_primitive(w: tuple) -> bool:
    return len(set(rotations(w))) == len(w)


def enumerate_necklaces(k: int, n: int) -> list[Necklace]:
    """All necklaces of length n over k letters, sorted by canonical word."""
    _guard(k ** n, WORD_SCAN_LIMIT, f"{k}^{n} words")
    reps = {brute_canonical(w) for w in product(range(k), repeat=n)}
    return [Necklace(w, brute_primitive(w)) for w in sorted(reps)]


def unclustered_necklaces(k: int, n: int) -> list[Necklace]:
    return [u for u in enumerate_necklaces(k, n) if brute_runs(brute_bwt(u.word)) == n]


def count_unclustered(k: int, n: int) -> int:
    return len(unclustered_necklaces(k, n))


@dataclass
class EnumerationReport:
    k: int
    n: int
    total: int
    unclustered: int
    witnesses: list[str] = field(default_factory=list)
    truncated: bool = False

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "total_necklaces": self.total,
            "unclustered": self.unclustered,
            "witnesses": self.witnesses,
            "truncated": self.truncated,
        }


def necklace_count_formula(k: int, n: int) -> int:
    """(1/n) sum over d | n of phi(d) k^(n/d)."""
    return sum(euler_phi(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def enumeration_report(k: int, n: int, unclustered_only: bool = False, limit: int | None = None) -> EnumerationReport:
    necklaces = enumerate_necklaces(k, n)
    good = [u for u in necklaces if brute_runs(brute_bwt(u.word)) == n]
    if len(necklaces) != necklace_count_formula(k, n):
        raise AssertionError("necklace count disagrees with the counting formula")
    listed = good if unclustered_only else necklaces
    shown = listed if limit is None else listed[:limit]
    return EnumerationReport(k, n, len(necklaces), len(good), [str(u) for u in shown], len(shown) < len(listed))


# Polynomials over GF(p): coefficient lists, lowest degree first, no trailing zeros.

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mod(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    inv = pow(g[-1], p - 2, p)
    dg = len(g) - 1
    while len(f) > dg:
        c = f[-1] * inv % p
        if c:
            shift = len(f) - 1 - dg
            for i, gi in enumerate(g):
                f[shift + i] = (f[shift + i] - c * gi) % p
        f.pop()
    return _trim(f)


def poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, poly_mod(f, g, p)
    return f


def brute_phi(p: int, n: int) -> int:
    """Count f over GF(p), deg f < n, with gcd(f, X^n - 1) = 1, by enumeration.

    Only monic f are tried; each stands for its p - 1 nonzero scalar
    multiples, which have the same gcd.
    """
    _guard(p ** n, WORD_SCAN_LIMIT, f"{p}^{n} polynomials")
    modulus = [(-1) % p] + [0] * (n - 1) + [1]
    monic = 0
    for degree in range(n):
        for low in product(range(p), repeat=degree):
            if len(poly_gcd(modulus, list(low) + [1], p)) == 1:
                monic += 1
    return monic * (p - 1)


def enumerate_gdbw(k: int, n: int) -> list[Necklace]:
    """All generalized de Bruijn words of length kn, one per Hamiltonian cycle of DB(k, kn)."""
    _guard(k * n, HAMILTONIAN_ENUMERATION_LIMIT, "kn")
    out = []
    for path in enumerate_hamiltonian_cycles(k, n):
        out.append(inverse_bwt(word_from_inverse_perm(cycle_to_inverse_perm(path), k, n)))
    return sorted(out, key=lambda u: u.word)
