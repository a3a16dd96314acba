"""Exact counting and the primitive-root criterion for ``(k-1 ... 1 0)^n``.

Everything here is integer or :class:`fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .words import is_bwt_image_aperiodic

# Deterministic for every n < 3.3e24, which covers 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class TheoremViolation(AssertionError):
    """Two routes that must agree on a proven identity disagreed."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def multiplicative_order(a: int, m: int) -> int:
    """Least t >= 1 with a^t = 1 (mod m), by direct iteration.

    Modulo 1 every residue is 1, so the order is 1.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return 1
    a %= m
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    t, x = 1, a
    while x != 1:
        x = x * a % m
        t += 1
    return t


def factorize(m: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def euler_phi(d: int) -> int:
    if d < 1:
        raise ValueError("d must be positive")
    result = d
    for p in factorize(d):
        result -= result // p
    return result


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def is_primitive_root(a: int, m: int) -> bool:
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return gcd(a, m) == 1 and multiplicative_order(a, m) == euler_phi(m)


def lambda_p(p: int, n: int) -> int:
    """Largest power of p dividing n."""
    if n < 1:
        raise ValueError("n must be positive")
    power = 1
    while n % (power * p) == 0:
        power *= p
    return power


def phi_generalized(p: int, n: int) -> int:
    """Number of polynomials over GF(p) of degree < n coprime with X^n - 1.

    Computed as p^(n - m) * prod over d | m of (p^o - 1)^(phi(d)/o), where
    m = n / lambda_p(n) and o is the order of p modulo d.  Since the
    phi(d) sum to m this is the usual product formula with the powers of p
    pulled out, and it stays in integers.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be positive")
    m = n // lambda_p(p, n)
    value = p ** (n - m)
    for d in divisors(m):
        order = multiplicative_order(p, d)
        exponent, rem = divmod(euler_phi(d), order)
        assert rem == 0, (p, d)
        value *= (p ** order - 1) ** exponent
    return value


def count_gdbw_ternary(n: int) -> int:
    """Number of generalized de Bruijn words of length 3n: 2^(n-1) Phi_3(n) / n."""
    total = 2 ** (n - 1) * phi_generalized(3, n)
    count, rem = divmod(total, n)
    if rem:
        raise ArithmeticError(f"2^(n-1) Phi_3(n) not divisible by n = {n}")
    return count


def lower_bound_unclustered(n: int) -> Fraction:
    """Phi_3(n) / 2n, a lower bound on ternary length-3n necklaces with 3n runs."""
    return Fraction(phi_generalized(3, n), 2 * n)


def alternating_word(k: int, n: int) -> tuple[int, ...]:
    """(k-1)(k-2)...0 repeated n times."""
    return tuple(range(k - 1, -1, -1)) * n


def artin_rhs(k: int, n: int) -> bool:
    """kn + 1 is prime and k is a primitive root modulo it."""
    m = k * n + 1
    return is_prime(m) and is_primitive_root(k, m)


def artin_lhs(k: int, n: int) -> bool:
    """Whether the alternating word is a BWT image, by the single-cycle test."""
    return is_bwt_image_aperiodic(alternating_word(k, n))


def artin_lhs_modular(k: int, n: int) -> bool:
    """Same predicate through the relabelled form i -> k*i mod (kn + 1) on 1..kn."""
    m = k * n + 1
    steps, i = 1, k % m
    while i != 1:
        i = k * i % m
        steps += 1
        if steps > k * n:
            return False
    return steps == k * n


def artin_equivalence_check(k: int, n_max: int, direct_limit: int | None = None) -> list[int]:
    """The n in 1..n_max for which the alternating word is a BWT image.

    Raises :class:`TheoremViolation` when the single-cycle test and the
    primitive-root test disagree, or when the modular form disagrees with
    the direct one.  ``direct_limit`` skips the direct test for kn above it.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    holding = []
    for n in range(1, n_max + 1):
        rhs = artin_rhs(k, n)
        fast = artin_lhs_modular(k, n)
        if direct_limit is None or k * n <= direct_limit:
            direct = artin_lhs(k, n)
            if direct != fast:
                raise TheoremViolation(f"k={k}, n={n}: direct {direct} vs modular {fast}")
        if fast != rhs:
            raise TheoremViolation(f"k={k}, n={n}: BWT image {fast} vs primitive root {rhs}")
        if rhs:
            holding.append(n)
    return holding
