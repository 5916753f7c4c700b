"""Suitable sequences: sorted multisets of canonical exponent classes.

A suitable sequence of length m is a non-decreasing tuple of canonical
representatives whose first entry is 1; it encodes the componentwise scalar
action (x_1, ..., x_m) |-> (x_1 a^(q_1), ..., x_m a^(q_m)) up to the
symmetries that leave the action's isomorphism type unchanged.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .groups import QuotientGroup
from .subgroups import Subgroup


@dataclass(frozen=True)
class SupportProfile:
    """Distinct entries of a sequence (ascending) with their multiplicities."""

    support: tuple[int, ...]
    occurrences: tuple[int, ...]

    @property
    def length(self) -> int:
        return sum(self.occurrences)


def num_sequences(G: QuotientGroup, m: int) -> int:
    """How many suitable sequences of length m there are: C(|G|+m-2, m-1)."""
    if m < 1:
        raise ValueError(f"sequence length must be >= 1, got {m}")
    return comb(G.order + m - 2, m - 1)


def iter_sequences(G: QuotientGroup, m: int) -> Iterator[tuple[int, ...]]:
    """Yield every suitable sequence of length m in lexicographic order."""
    if m < 1:
        raise ValueError(f"sequence length must be >= 1, got {m}")
    for rest in itertools.combinations_with_replacement(G.elements, m - 1):
        yield (1,) + rest


def all_sequences(G: QuotientGroup, m: int) -> list[tuple[int, ...]]:
    return list(iter_sequences(G, m))


def normalize_sequence(G: QuotientGroup, entries: Iterable[int]) -> tuple[int, ...]:
    """Canonicalize every entry and sort non-decreasingly.

    Rejects entries that are not units modulo p^n - 1; does not require the
    result to contain 1.
    """
    return tuple(sorted(G.canonical_rep(x) for x in entries))


def validate_sequence(G: QuotientGroup, entries: Iterable[int]) -> tuple[int, ...]:
    """Return entries as a tuple after checking it is a suitable sequence."""
    seq = tuple(int(x) for x in entries)
    if not seq:
        raise ValueError("a suitable sequence cannot be empty")
    norm = normalize_sequence(G, seq)
    if norm[0] != 1:
        raise ValueError(
            f"a suitable sequence must contain the identity class 1, got {format_sequence(seq)}"
        )
    if seq != norm:
        raise ValueError(
            f"entries must be canonical representatives in non-decreasing order; "
            f"got {format_sequence(seq)}, normalized form is {format_sequence(norm)}"
        )
    return seq


def scale(G: QuotientGroup, q: int, entries: Iterable[int]) -> tuple[int, ...]:
    """Multiply every entry by q in G and re-sort non-decreasingly."""
    return tuple(sorted(G.mul(q, x) for x in entries))


def support_profile(entries: Iterable[int]) -> SupportProfile:
    counts = Counter(entries)
    support = tuple(sorted(counts))
    return SupportProfile(support, tuple(counts[s] for s in support))


def has_coset_structure(
    G: QuotientGroup,
    H: Subgroup,
    entries: Iterable[int],
    support_size: int | None = None,
) -> bool:
    """Whether the support splits into full H-cosets with uniform occurrences.

    True exactly when (a) the support of the sequence is a disjoint union of
    cosets of H (for a suitable sequence this forces H itself to be one of
    them) and (b) entries from the same coset occur equally often.  These are
    the sequences left fixed by scaling with any element of H.
    """
    prof = support_profile(entries)
    if support_size is not None and len(prof.support) != support_size:
        return False
    occ = dict(zip(prof.support, prof.occurrences))
    support = set(prof.support)
    seen: set[int] = set()
    for s in prof.support:
        if s in seen:
            continue
        coset = {G.mul(s, h) for h in H.elements}
        if not coset <= support:
            return False
        if len({occ[c] for c in coset}) != 1:
            return False
        seen |= coset
    return True


def format_sequence(entries: Iterable[int]) -> str:
    return ",".join(str(x) for x in entries)


def parse_sequence(G: QuotientGroup, text: str) -> tuple[int, ...]:
    """Parse a comma-separated sequence like '1,1,5,5' and validate it."""
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(
            f"cannot parse sequence {text!r}: entries must be comma-separated integers"
        ) from None
    return validate_sequence(G, entries)
