"""Exact modular and combinatorial arithmetic.

Prime validation, binomial coefficients modulo a prime via base-p digit
products, the Moebius function, and the Witt counting formulas for graded
components of a free Lie algebra on two letters.  Everything is exact integer
arithmetic; nothing here depends on the rest of the package.
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "PrimeChar",
    "binom_mod",
    "divisors",
    "mobius",
    "witt_bidegree",
    "witt_weight_count",
]


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeChar(int):
    """A field characteristic, validated to be prime at construction."""

    def __new__(cls, p: int) -> "PrimeChar":
        if isinstance(p, PrimeChar):
            return p
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"characteristic must be a prime >= 2, got {p}")
        return super().__new__(cls, p)

    def __repr__(self) -> str:
        return f"PrimeChar({int(self)})"


def binom_mod(n: int, k: int, p: int) -> int:
    """Binomial coefficient C(n, k) modulo the prime p.

    Computed digit by digit in base p: the residue is the product of the
    small binomials of corresponding digits, and it vanishes as soon as a
    digit of k exceeds the matching digit of n.  Out-of-range k gives 0.
    """
    p = PrimeChar(p)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    out = 1
    while n:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        out = out * math.comb(nd, kd) % p
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)**(number of prime factors)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def witt_bidegree(s: int, t: int) -> int:
    """Number of Lyndon words with s first letters and t second letters.

    Moebius-weighted multinomial sum over the common divisors of s and t
    (with gcd(k, 0) = k); the division by the length s + t is exact.  The
    count is positive whenever s, t >= 1, and for the single-letter words
    (1, 0) and (0, 1); it vanishes at (k, 0) and (0, k) for k >= 2.
    """
    if s < 0 or t < 0 or s + t < 1:
        raise ValueError("need s, t >= 0 with s + t >= 1")
    n = s + t
    acc = 0
    for d in divisors(math.gcd(s, t)):
        mu = mobius(d)
        if mu:
            acc += mu * (math.factorial(n // d) // (math.factorial(s // d) * math.factorial(t // d)))
    q, rem = divmod(acc, n)
    assert rem == 0, "Witt sum must be divisible by the word length"
    return q


def witt_weight_count(r: int, i: int) -> int:
    """Number of Lyndon words of length r over two letters with i second letters.

    Same Moebius sum as witt_bidegree with binomials in place of multinomials;
    the value at i and at r - i agree, so these counts form a symmetric
    weight profile.
    """
    if r < 1:
        raise ValueError(f"length must be positive, got {r}")
    if i < 0 or i > r:
        raise ValueError(f"need 0 <= i <= {r}, got {i}")
    acc = 0
    for d in divisors(math.gcd(r, i)):
        mu = mobius(d)
        if mu:
            acc += mu * math.comb(r // d, i // d)
    q, rem = divmod(acc, r)
    assert rem == 0, "Witt sum must be divisible by the word length"
    return q
