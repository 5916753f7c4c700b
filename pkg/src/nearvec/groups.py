"""Unit groups modulo p^n - 1 and their quotient by the powers of p.

Scalar actions on GF(p^n)^m are encoded by exponents drawn from
G = U(p^n - 1) / <p>.  Every coset of <p> = {1, p, ..., p^(n-1)} is
represented by its smallest member, and all arithmetic below is exact
integer arithmetic on those representatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

MAX_MODULUS = 2**32  # keeps every construction at desk scale
_MUL_TABLE_LIMIT = 512


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test (sufficient below 2**32)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class GroupParams:
    """Field-size parameters p, n together with the modulus p**n - 1."""

    p: int
    n: int
    modulus: int = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p must be a prime integer, got {self.p}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if self.n * self.p.bit_length() > 64:
            raise ValueError(f"p**n is out of range: p={self.p}, n={self.n}")
        modulus = self.p**self.n - 1
        if modulus >= MAX_MODULUS:
            raise ValueError(
                f"modulus p**n - 1 = {modulus} exceeds the supported bound {MAX_MODULUS}"
            )
        object.__setattr__(self, "modulus", modulus)

    @property
    def degenerate(self) -> bool:
        """True for GF(2), whose multiplicative group is trivial."""
        return self.modulus == 1


def unit_group(modulus: int) -> list[int]:
    """All units 1 <= q <= modulus with gcd(q, modulus) = 1, ascending.

    For modulus 1 this returns [1] (the representative of the trivial group).
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    return [q for q in range(1, modulus + 1) if gcd(q, modulus) == 1]


def p_coset(params: GroupParams) -> list[int]:
    """The subgroup {1, p, ..., p^(n-1)} of U(p^n - 1), sorted ascending."""
    if params.degenerate:
        raise ValueError("modulus 1 is degenerate and has no unit cosets")
    m = params.modulus
    powers = sorted(pow(params.p, i, m) for i in range(params.n))
    # p has multiplicative order exactly n modulo p^n - 1
    assert len(set(powers)) == params.n
    return powers


def frobenius_exponent(params: GroupParams, s: int) -> int:
    """The unique l in {0, ..., n-1} with s = p**l modulo p**n - 1."""
    m = params.modulus
    if gcd(s, m) != 1:
        raise ValueError(f"{s} is not a unit modulo {m}")
    if m == 1:
        return 0
    r = s % m
    for l in range(params.n):
        if pow(params.p, l, m) == r:
            return l
    raise ValueError(f"{s} is not a power of {params.p} modulo {m}")


class QuotientGroup:
    """U(p^n - 1)/<p> with each coset held as its smallest member.

    Products are computed in U(p^n - 1) and mapped back to the smallest
    member of the resulting coset.  Instances are immutable after
    construction and safe to share between workers.
    """

    def __init__(self, params: GroupParams):
        self.params = params
        m = params.modulus
        if params.degenerate:
            self.p_coset = [1]
            self.elements = [1]
        else:
            self.p_coset = p_coset(params)
            units = unit_group(m)
            reps: list[int] = []
            seen: set[int] = set()
            for u in units:
                if u in seen:
                    continue
                reps.append(u)  # u is the smallest of its coset: units ascend
                seen.update(u * h % m for h in self.p_coset)
            assert len(reps) * params.n == len(units)
            self.elements = reps
        self.order = len(self.elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._inv_idx = [self._index[self._inv_direct(e)] for e in self.elements]
        self._mul_idx: list[list[int]] | None = None
        if self.order <= _MUL_TABLE_LIMIT:
            self._mul_idx = [
                [self._index[self._mul_direct(a, b)] for b in self.elements]
                for a in self.elements
            ]

    def __repr__(self) -> str:
        return f"QuotientGroup(p={self.params.p}, n={self.params.n}, order={self.order})"

    def index(self, a: int) -> int:
        """Position of a canonical representative in the element list."""
        try:
            return self._index[a]
        except KeyError:
            raise ValueError(f"{a} is not a canonical representative of {self!r}") from None

    def canonical_rep(self, u: int) -> int:
        """Smallest member of the coset u*<p>; u may be any unit mod p^n - 1."""
        m = self.params.modulus
        if gcd(u, m) != 1:
            raise ValueError(f"{u} is not a unit modulo {m}")
        if m == 1:
            return 1
        u %= m
        return min(u * h % m for h in self.p_coset)

    def _mul_direct(self, a: int, b: int) -> int:
        m = self.params.modulus
        if m == 1:
            return 1
        return self.canonical_rep(a * b % m)

    def _inv_direct(self, a: int) -> int:
        m = self.params.modulus
        if m == 1:
            return 1
        return self.canonical_rep(pow(a, -1, m))

    def mul(self, a: int, b: int) -> int:
        """Product of two canonical representatives, again canonical."""
        i, j = self.index(a), self.index(b)
        if self._mul_idx is not None:
            return self.elements[self._mul_idx[i][j]]
        return self._mul_direct(a, b)

    def inv(self, a: int) -> int:
        """Canonical representative of the inverse coset."""
        return self.elements[self._inv_idx[self.index(a)]]

    def index_tables(self) -> tuple[list[list[int]], list[int]]:
        """(multiplication, inverse) tables over element indices.

        Intended for vectorized callers; built on demand for large groups.
        """
        if self._mul_idx is None:
            self._mul_idx = [
                [self._index[self._mul_direct(a, b)] for b in self.elements]
                for a in self.elements
            ]
        return self._mul_idx, list(self._inv_idx)


def quotient_group(p: int, n: int) -> QuotientGroup:
    """Build U(p^n - 1)/<p> for a prime p and exponent n >= 1."""
    return QuotientGroup(GroupParams(p, n))
