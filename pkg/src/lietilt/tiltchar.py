"""Weyl, simple, and tilting characters of SL(2) in characteristic p.

All three families are indexed by a highest weight m >= 0 and are monic at
the top: the multiplicity at weight m is 1 and the support lies in [-m, m].
That makes conversion between them unitriangular, so any symmetric character
decomposes uniquely in each family by peeling coefficients from the top
weight downward.  Coefficients of virtual characters may be negative; a
negative coefficient in a decomposition that should describe an actual
module is a certificate that no such module decomposition exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Mapping

from .charring import ConsistencyError, SymCharacter, weight_set
from .modarith import PrimeChar

__all__ = [
    "Basis",
    "Decomposition",
    "basis_char",
    "char_simple",
    "char_tilting",
    "char_weyl",
    "clear_tilting_memo",
    "decompose",
    "is_weyl_simple",
    "natural_power_char",
    "preload_tilting",
    "tensor_power_decomp",
    "tilting_table",
    "weyl_twist_identity",
]


class Basis(str, Enum):
    """The three highest-weight bases of the character ring."""

    DELTA = "delta"
    SIMPLE = "simple"
    TILTING = "tilting"


@lru_cache(maxsize=None)
def char_weyl(m: int) -> SymCharacter:
    """Weyl character of highest weight m: weights m, m - 2, ..., -m, all once."""
    if m < 0:
        raise ValueError(f"highest weight must be non-negative, got {m}")
    return SymCharacter({w: 1 for w in range(m, -1, -2)})


def _digits(m: int, p: int) -> list[int]:
    """Base-p digits of m, least significant first; [0] for m = 0."""
    if m == 0:
        return [0]
    out = []
    while m:
        m, d = divmod(m, p)
        out.append(d)
    return out


@lru_cache(maxsize=None)
def _simple(m: int, p: int) -> SymCharacter:
    out = char_weyl(0)
    q = 1
    for d in _digits(m, p):
        if d:
            out = out * char_weyl(d).scale_weights(q)
        q *= p
    return out


def char_simple(m: int, p: int) -> SymCharacter:
    """Character of the simple module of highest weight m.

    Product over the base-p digits d_i of m of the Weyl character of d_i
    with weights dilated by p**i; its dimension is the product of d_i + 1.
    """
    p = PrimeChar(p)
    if m < 0:
        raise ValueError(f"highest weight must be non-negative, got {m}")
    return _simple(m, int(p))


def is_weyl_simple(m: int, p: int) -> bool:
    """Whether the Weyl, simple, and tilting characters at m all coincide.

    True exactly for m = 0 and for m = a * p**k - 1 with 2 <= a <= p; in
    digit terms, m + 1 with the p-part stripped must be 1 or lie in
    [2, p - 1].
    """
    p = PrimeChar(p)
    if m < 0:
        raise ValueError(f"highest weight must be non-negative, got {m}")
    if m == 0:
        return True
    u = m + 1
    while u % p == 0:
        u //= p
    return u == 1 or 2 <= u <= p - 1


_tilting_memo: dict[tuple[int, int], SymCharacter] = {}


def char_tilting(m: int, p: int) -> SymCharacter:
    """Character of the indecomposable tilting module of highest weight m.

    Recursive in the base-p shape of m:

    * m <= p - 1: the Weyl character itself;
    * p <= m <= 2p - 2: sum of the Weyl characters at m and at 2p - 2 - m;
    * m = kp + (p - 1): weight-dilated character at k times the Weyl
      character at p - 1;
    * m = kp + i with k >= 2 and i <= p - 2: weight-dilated character at
      k - 1 times the character at p + i.

    Results are memoized per (m, p); the memo table may be pre-seeded from a
    disk cache and is safe to share across threads because entries are only
    ever inserted, never changed.
    """
    p = PrimeChar(p)
    if m < 0:
        raise ValueError(f"highest weight must be non-negative, got {m}")
    key = (m, int(p))
    hit = _tilting_memo.get(key)
    if hit is not None:
        return hit
    if m <= p - 1:
        out = char_weyl(m)
    elif m <= 2 * p - 2:
        out = char_weyl(m) + char_weyl(2 * p - 2 - m)
    else:
        k, i = divmod(m, int(p))
        if i == p - 1:
            out = char_tilting(k, p).scale_weights(p) * char_weyl(p - 1)
        else:
            out = char_tilting(k - 1, p).scale_weights(p) * char_tilting(p + i, p)
    _tilting_memo[key] = out
    return out


def tilting_table(p: int) -> dict[int, SymCharacter]:
    """Snapshot of the memoized tilting characters for characteristic p."""
    p = int(PrimeChar(p))
    return {m: chi for (m, q), chi in _tilting_memo.items() if q == p}


def preload_tilting(p: int, table: Mapping[int, SymCharacter]) -> None:
    """Seed the memo table, e.g. from a disk cache; existing entries win."""
    p = int(PrimeChar(p))
    for m, chi in table.items():
        _tilting_memo.setdefault((m, p), chi)


def clear_tilting_memo() -> None:
    """Drop all memoized tilting characters (mainly for tests)."""
    _tilting_memo.clear()


def basis_char(basis: Basis, m: int, p: int) -> SymCharacter:
    """The member of the given basis with highest weight m."""
    if basis is Basis.DELTA:
        return char_weyl(m)
    if basis is Basis.SIMPLE:
        return char_simple(m, p)
    if basis is Basis.TILTING:
        return char_tilting(m, p)
    raise ValueError(f"unknown basis {basis!r}")


@dataclass(frozen=True)
class Decomposition:
    """Signed multiplicities of a degree-r character in a highest-weight basis.

    Treat instances as immutable; entries map highest weights to nonzero
    signed coefficients.
    """

    basis: Basis
    entries: dict[int, int]
    r: int
    p: int

    def coefficient(self, m: int) -> int:
        return self.entries.get(m, 0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.entries, reverse=True))

    @property
    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.entries.values())

    def reconstruct(self) -> SymCharacter:
        """Sum the basis characters back up; exact inverse of decompose."""
        out = SymCharacter()
        for m in self.support:
            out = out + basis_char(self.basis, m, self.p).scale(self.entries[m])
        return out

    @property
    def dimension(self) -> int:
        """Signed dimension: sum of coefficient times basis-member dimension."""
        return sum(c * basis_char(self.basis, m, self.p).dim for m, c in self.entries.items())


def decompose(chi: SymCharacter, basis: Basis, r: int, p: int) -> Decomposition:
    """Coefficients of chi in the given basis, by greedy top-down elimination.

    Exact for any basis that is monic at the top with support bounded by the
    highest weight; coefficients come out signed.  The character must have
    the parity of r and support inside [-r, r].
    """
    p = PrimeChar(p)
    if r < 1:
        raise ValueError(f"degree must be positive, got {r}")
    if not chi.is_zero:
        if chi.parity != r % 2:
            raise ValueError("character parity does not match the degree")
        if chi.max_weight > r:
            raise ValueError("character support exceeds the degree")
    residual = {w: chi.multiplicity(w) for w in chi.support}
    entries: dict[int, int] = {}
    while residual:
        w = max(residual)
        c = residual[w]
        entries[w] = c
        member = basis_char(basis, w, p)
        for u in member.support:
            v = residual.get(u, 0) - c * member.multiplicity(u)
            if v:
                residual[u] = v
            else:
                residual.pop(u, None)
    return Decomposition(basis, entries, r, int(p))


@lru_cache(maxsize=None)
def natural_power_char(r: int) -> SymCharacter:
    """Character of the r-fold tensor power of the natural two-dimensional
    character: binomial weight multiplicities with total 2**r."""
    if r < 1:
        raise ValueError(f"tensor degree must be positive, got {r}")
    out = char_weyl(1)
    for _ in range(r - 1):
        out = out * char_weyl(1)
    return out


@lru_cache(maxsize=None)
def _tensor_power_decomp(r: int, p: int) -> Decomposition:
    dec = decompose(natural_power_char(r), Basis.TILTING, r, p)
    # The tensor power is an actual tilting module, so the multiplicities are
    # genuine and every positive weight of matching parity must occur.
    if not dec.is_nonnegative or any(dec.coefficient(m) <= 0 for m in weight_set(r)):
        raise ConsistencyError(f"tensor power decomposition violated positivity at r={r}, p={p}")
    return dec


def tensor_power_decomp(r: int, p: int) -> Decomposition:
    """Tilting multiplicities of the r-fold tensor power of the natural
    character; strictly positive on every positive weight of r's parity."""
    return _tensor_power_decomp(r, int(PrimeChar(p)))


def weyl_twist_identity(n: int, i: int, p: int) -> bool:
    """Check the two-step filtration identity for a Weyl character at p*n + i.

    With j = p - 2 - i, the Weyl character at p*n + i must equal the
    weight-dilated Weyl character at n - 1 times the simple character at j
    plus the weight-dilated Weyl character at n times the simple character
    at i.  Returns whether the identity holds exactly.
    """
    p = PrimeChar(p)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= i <= p - 2:
        raise ValueError(f"need 0 <= i <= p - 2, got {i}")
    j = p - 2 - i
    lhs = char_weyl(int(p) * n + i)
    rhs = char_weyl(n - 1).scale_weights(p) * char_simple(j, p) + char_weyl(n).scale_weights(p) * char_simple(i, p)
    return lhs == rhs
