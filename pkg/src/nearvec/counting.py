"""Closed-form counting of isomorphism classes via the subgroup lattice.

A class of length-m sequences with support size N has N/|H| members, where H
is the largest subgroup fixing the sequence under scaling; only subgroups
whose order divides gcd(m, N, |G|) can occur.  Counting sequences by their
exact stabilizer therefore turns the class count into exact integer
arithmetic on binomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .groups import QuotientGroup
from .subgroups import Subgroup, SubgroupLattice, all_subgroups


@dataclass(frozen=True)
class SupportSummary:
    """Counts for one support size: sequences, exact stabilizers, classes."""

    sequences: int
    stabilizers: dict[Subgroup, int]
    classes: int


@dataclass(frozen=True)
class CountReport:
    """Per-support-size breakdown of the classification of length-m sequences."""

    m: int
    per_N: dict[int, SupportSummary]
    total: int


def count_with_support(G: QuotientGroup, m: int, N: int) -> int:
    """Number of suitable sequences of length m with exactly N distinct entries.

    Choose the N-1 non-identity support classes, then compose m-1 remaining
    slots onto the N support classes: C(|G|-1, N-1) * C(m-1, N-1).
    """
    if not 1 <= N <= min(m, G.order):
        raise ValueError(f"support size must satisfy 1 <= N <= min(m, |G|), got N={N}")
    return comb(G.order - 1, N - 1) * comb(m - 1, N - 1)


def count_invariant(G: QuotientGroup, m: int, N: int, d: int) -> int:
    """Sequences of length m and support size N fixed by a subgroup of order d.

    Fixed sequences are unions of d-element cosets with uniform occurrences,
    so both the support choice and the slot composition collapse by d:
    C(|G|/d - 1, N/d - 1) * C(m/d - 1, N/d - 1).  The count is the same for
    every subgroup of order d.
    """
    if d < 1 or N % d or m % d or G.order % d:
        raise ValueError(f"order {d} must divide each of m={m}, N={N}, |G|={G.order}")
    return comb(G.order // d - 1, N // d - 1) * comb(m // d - 1, N // d - 1)


def exact_stabilizer_counts(
    G: QuotientGroup, lat: SubgroupLattice, m: int, N: int
) -> dict[Subgroup, int]:
    """For each applicable nontrivial subgroup H, the number of sequences of
    length m and support size N whose full scaling stabilizer is exactly H.

    Applicable means |H| divides gcd(m, N, |G|).  Working from the largest
    applicable orders downward, the exact count is the number of H-fixed
    sequences minus those already attributed to a strictly larger subgroup.
    """
    if not 1 <= N <= min(m, G.order):
        raise ValueError(f"support size must satisfy 1 <= N <= min(m, |G|), got N={N}")
    g = gcd(gcd(m, N), G.order)
    applicable = [H for H in lat.subgroups if H.order > 1 and g % H.order == 0]
    applicable.sort(key=lambda H: (-H.order, H.elements))
    counts: dict[Subgroup, int] = {}
    for H in applicable:
        value = count_invariant(G, m, N, H.order)
        for K, ck in counts.items():
            if K.order > H.order and H.issubset(K):
                value -= ck
        if value < 0:
            raise ArithmeticError(
                f"negative stabilizer count for {H.elements} at m={m}, N={N}; "
                "the lattice or the recursion is inconsistent"
            )
        counts[H] = value
    return counts


def _classes_from(sequences: int, stabilizers: dict[Subgroup, int], N: int) -> int:
    # Each class with stabilizer H contributes N/|H| sequences; grouping the
    # census by stabilizer makes the total divisible by N.
    weighted = sequences + sum((H.order - 1) * c for H, c in stabilizers.items())
    value, remainder = divmod(weighted, N)
    if remainder:
        raise ArithmeticError(f"class count for N={N} is not integral: {weighted}/{N}")
    return value


def class_count(G: QuotientGroup, lat: SubgroupLattice, m: int, N: int) -> int:
    """Number of isomorphism classes whose sequences have support size N."""
    return _classes_from(
        count_with_support(G, m, N), exact_stabilizer_counts(G, lat, m, N), N
    )


def total_count(G: QuotientGroup, m: int, lat: SubgroupLattice | None = None) -> CountReport:
    """Exact classification counts for length m, with per-support-size detail."""
    if m < 1:
        raise ValueError(f"sequence length must be >= 1, got {m}")
    if lat is None:
        lat = all_subgroups(G)
    per_N: dict[int, SupportSummary] = {}
    for N in range(1, min(m, G.order) + 1):
        sequences = count_with_support(G, m, N)
        stabilizers = exact_stabilizer_counts(G, lat, m, N)
        per_N[N] = SupportSummary(sequences, stabilizers, _classes_from(sequences, stabilizers, N))
    return CountReport(m, per_N, sum(s.classes for s in per_N.values()))


def coprime_total(G: QuotientGroup, m: int) -> int | None:
    """Total class count without subgroup data, valid when gcd(m, |G|) = 1.

    In the coprime case no nontrivial subgroup order can divide
    gcd(m, N, |G|), every class has exactly N members, and each
    per-support-size sequence count is divisible by N.  Returns None when
    the shortcut does not apply.
    """
    if m < 1:
        raise ValueError(f"sequence length must be >= 1, got {m}")
    if gcd(m, G.order) != 1:
        return None
    total = 0
    for N in range(1, min(m, G.order) + 1):
        value, remainder = divmod(count_with_support(G, m, N), N)
        if remainder:
            raise ArithmeticError(
                f"sequence count for N={N} is not divisible by N despite gcd(m, |G|) = 1"
            )
        total += value
    return total
