"""Isomorphism tests, orbits, explicit witnesses, and brute-force classification.

Two suitable sequences determine isomorphic near-vector spaces exactly when
one is a scaling of the other: s1 = q * s2 as multisets for some q in the
support of s1.  The class of a sequence is therefore its scaling orbit, and
classification reduces to picking the lexicographically least orbit member.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

import numpy as np
from numba import njit, prange

from .errors import BudgetExceededError, NotIsomorphicError, enumeration_budget
from .groups import QuotientGroup, frobenius_exponent
from .sequences import iter_sequences, num_sequences, scale, support_profile

_SUFFIX_ROWS_LIMIT = 500_000
_CHUNK_TARGET = 4_000_000
_INDEX_TABLE_LIMIT = 4096


@dataclass(frozen=True)
class IsomorphismWitness:
    """Explicit isomorphism data for a pair of suitable sequences s1, s2.

    q is the scaling class; sigma is a permutation of {1..m} mapping target
    positions to source positions; frobenius_powers[i] gives the twist l with
    q * s2[i] = s1[sigma[i]] * p**l in the unit group.
    """

    q: int
    sigma: tuple[int, ...]
    frobenius_powers: tuple[int, ...]


@dataclass(frozen=True)
class OrbitClass:
    """One isomorphism class: least member, class size, support size."""

    representative: tuple[int, ...]
    size: int
    support_size: int


@dataclass(frozen=True)
class ClassificationResult:
    """Full partition of the length-m suitable sequences into classes."""

    m: int
    classes: tuple[OrbitClass, ...]
    per_N: dict[int, int]
    total: int


def isomorphic(G: QuotientGroup, s1, s2) -> int | None:
    """Least q in the support of s1 with s1 = q * s2 as multisets, or None.

    The near-vector spaces determined by s1 and s2 are isomorphic exactly
    when such a q exists.  Sequences are assumed suitable (sorted, canonical,
    containing 1).
    """
    s1, s2 = tuple(s1), tuple(s2)
    if len(s1) != len(s2):
        raise ValueError(f"sequences have different lengths: {len(s1)} and {len(s2)}")
    p1, p2 = support_profile(s1), support_profile(s2)
    if len(p1.support) != len(p2.support):
        return None
    if sorted(p1.occurrences) != sorted(p2.occurrences):
        return None
    for q in p1.support:
        if scale(G, q, s2) == s1:
            return q
    return None


def orbit(G: QuotientGroup, entries) -> list[tuple[int, ...]]:
    """All sequences isomorphic to the given one, sorted lexicographically.

    Scaling by the inverse of each support element lands back among the
    suitable sequences; duplicates collapse when a subgroup fixes the
    sequence.
    """
    entries = tuple(entries)
    out = {entries}
    for q in support_profile(entries).support:
        out.add(scale(G, G.inv(q), entries))
    return sorted(out)


def brute_force_classes(G: QuotientGroup, m: int, budget: int | None = None) -> ClassificationResult:
    """Partition every length-m suitable sequence into isomorphism classes.

    Purely enumerative (list all sequences, group them by orbit), so the
    result is an oracle for the closed-form counts.  Representatives are the
    lexicographically least orbit members, listed in lexicographic order.
    """
    limit = enumeration_budget(budget)
    size = num_sequences(G, m)
    if size > limit:
        raise BudgetExceededError(
            f"{size} sequences of length {m} exceed the enumeration budget {limit}",
            required=size,
            budget=limit,
        )
    seen: set[tuple[int, ...]] = set()
    classes: list[OrbitClass] = []
    for seq in iter_sequences(G, m):
        if seq in seen:
            continue
        orb = orbit(G, seq)
        assert orb[0] == seq  # lexicographic iteration meets each class at its least member
        seen.update(orb)
        classes.append(OrbitClass(seq, len(orb), len(support_profile(seq).support)))
    assert sum(c.size for c in classes) == size
    per_N = Counter(c.support_size for c in classes)
    return ClassificationResult(m, tuple(classes), dict(sorted(per_N.items())), len(classes))


@njit(parallel=True, cache=True)
def _representative_support_sizes(chunk, mul, inv_idx):  # pragma: no cover - jitted
    n_rows, m = chunk.shape
    out = np.zeros(n_rows, dtype=np.int16)
    for r in prange(n_rows):
        row = chunk[r]
        scaled = np.empty_like(row)
        is_rep = True
        n_distinct = 1
        for j in range(1, m):
            q = row[j]
            if q == row[j - 1]:
                continue
            n_distinct += 1
            h = inv_idx[q]
            for i in range(m):
                v = mul[h, row[i]]
                t = i
                while t > 0 and scaled[t - 1] > v:
                    scaled[t] = scaled[t - 1]
                    t -= 1
                scaled[t] = v
            for i in range(m):
                if scaled[i] < row[i]:
                    is_rep = False
                    break
                if scaled[i] > row[i]:
                    break
            if not is_rep:
                break
        if is_rep:
            out[r] = n_distinct
    return out


def _cwr_array(k: int, length: int, memo: dict, dtype) -> np.ndarray:
    """All non-decreasing tuples of the given length over 0..k-1, in lex order."""
    key = (k, length)
    if key in memo:
        return memo[key]
    if length == 0:
        out = np.zeros((1, 0), dtype=dtype)
    else:
        parts = []
        for u in range(k):
            tail = _cwr_array(k - u, length - 1, memo, dtype) + np.array(u, dtype=dtype)
            col = np.full((len(tail), 1), u, dtype=dtype)
            parts.append(np.concatenate([col, tail], axis=1))
        out = np.concatenate(parts, axis=0)
    memo[key] = out
    return out


def _iter_chunks(k: int, m: int, dtype, chunk_target: int = _CHUNK_TARGET):
    """Yield the suitable sequences over element indices (first entry 0) in
    lexicographic order, as arrays of at most roughly chunk_target rows."""
    rest = m - 1
    memo: dict = {}
    b = 0
    while b < rest and len(_cwr_array(k, b + 1, memo, dtype)) <= _SUFFIX_ROWS_LIMIT:
        b += 1
    a = rest - b
    suffixes = _cwr_array(k, b, memo, dtype)
    starts = np.searchsorted(suffixes[:, 0], np.arange(k + 1)) if b else None

    def assemble(prefix_rows: list[tuple[int, ...]], counts: list[int]) -> np.ndarray:
        pref = np.repeat(np.array(prefix_rows, dtype=dtype).reshape(len(prefix_rows), a), counts, axis=0)
        if b:
            suff = np.concatenate([suffixes[starts[p[-1]] if a else 0 :] for p in prefix_rows], axis=0)
        else:
            suff = np.zeros((len(pref), 0), dtype=dtype)
        zero = np.zeros((len(pref), 1), dtype=dtype)
        return np.ascontiguousarray(np.concatenate([zero, pref, suff], axis=1))

    prefix_rows: list[tuple[int, ...]] = []
    counts: list[int] = []
    pending = 0
    for prefix in itertools.combinations_with_replacement(range(k), a):
        count = len(suffixes) - (starts[prefix[-1]] if (a and b) else 0)
        prefix_rows.append(prefix)
        counts.append(count)
        pending += count
        if pending >= chunk_target:
            yield assemble(prefix_rows, counts)
            prefix_rows, counts, pending = [], [], 0
    if prefix_rows:
        yield assemble(prefix_rows, counts)


def brute_force_counts(G: QuotientGroup, m: int, budget: int | None = None) -> dict[int, int]:
    """Per-support-size class counts by exhaustive enumeration.

    Same enumerate-and-group semantics as brute_force_classes, but only the
    counts are kept, and the lex-least-representative test runs in a compiled
    kernel, so sweeps of hundreds of millions of sequences stay feasible.
    """
    if m < 1:
        raise ValueError(f"sequence length must be >= 1, got {m}")
    limit = enumeration_budget(budget)
    size = num_sequences(G, m)
    if size > limit:
        raise BudgetExceededError(
            f"{size} sequences of length {m} exceed the enumeration budget {limit}",
            required=size,
            budget=limit,
        )
    k = G.order
    if k == 1 or m == 1:
        return {1: 1}
    if k > _INDEX_TABLE_LIMIT:
        result = brute_force_classes(G, m, budget=limit)
        return dict(result.per_N)
    dtype = np.int8 if k <= 127 else np.int16
    mul_list, inv_list = G.index_tables()
    mul = np.array(mul_list, dtype=dtype)
    inv_idx = np.array(inv_list, dtype=dtype)
    totals = np.zeros(m + 1, dtype=np.int64)
    n_rows = 0
    for chunk in _iter_chunks(k, m, dtype):
        sizes = _representative_support_sizes(chunk, mul, inv_idx)
        totals += np.bincount(sizes, minlength=m + 1)[: m + 1]
        n_rows += len(chunk)
    assert n_rows == size
    return {N: int(c) for N, c in enumerate(totals) if N >= 1 and c}


def build_witness(G: QuotientGroup, s1, s2, q: int | None = None) -> IsomorphismWitness:
    """Construct explicit isomorphism data for an isomorphic pair.

    The permutation is assembled blockwise: the occurrence block of a support
    element v of s2 maps onto the block of q*v in s1, preserving the order
    inside each block.  Each position then determines a Frobenius twist from
    the unit-group ratio (q * s2[i]) / s1[sigma[i]], which is a power of p.
    """
    s1, s2 = tuple(s1), tuple(s2)
    if q is None:
        q = isomorphic(G, s1, s2)
        if q is None:
            raise NotIsomorphicError(f"{s1} and {s2} are not isomorphic")
    if scale(G, q, s2) != s1:
        raise NotIsomorphicError(f"scaling by {q} does not map {s2} onto {s1}")
    modulus = G.params.modulus
    prof1, prof2 = support_profile(s1), support_profile(s2)
    block_start = {}
    pos = 0
    for v, count in zip(prof1.support, prof1.occurrences):
        block_start[v] = pos
        pos += count
    sigma: list[int] = []
    powers: list[int] = []
    for v, count in zip(prof2.support, prof2.occurrences):
        target = G.mul(q, v)
        base = block_start[target]
        if modulus == 1:
            ratio = 1
        else:
            ratio = q * v % modulus * pow(target, -1, modulus) % modulus
        twist = frobenius_exponent(G.params, ratio)
        for offset in range(count):
            sigma.append(base + offset + 1)  # 1-based positions
            powers.append(twist)
    return IsomorphismWitness(q, tuple(sigma), tuple(powers))


def witness_consistent(G: QuotientGroup, s1, s2, witness: IsomorphismWitness) -> bool:
    """Check the structural witness invariants inside the quotient group."""
    s1, s2 = tuple(s1), tuple(s2)
    m = len(s1)
    if len(s2) != m or len(witness.sigma) != m or len(witness.frobenius_powers) != m:
        return False
    if sorted(witness.sigma) != list(range(1, m + 1)):
        return False
    if witness.q not in support_profile(s1).support:
        return False
    if G.inv(witness.q) not in support_profile(s2).support:
        return False
    modulus = G.params.modulus
    for i in range(m):
        target = s1[witness.sigma[i] - 1]
        if G.mul(witness.q, s2[i]) != target:
            return False
        if modulus == 1:
            ratio = 1
        else:
            ratio = witness.q * s2[i] % modulus * pow(target, -1, modulus) % modulus
        try:
            twist = frobenius_exponent(G.params, ratio)
        except ValueError:
            return False
        if twist != witness.frobenius_powers[i]:
            return False
    return True
