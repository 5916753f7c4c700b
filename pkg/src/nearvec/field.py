"""Exact GF(p^n) arithmetic and concrete scalar-action checks.

Field elements are integers in [0, p**n): the base-p digits of the integer
are the polynomial coefficients (ascending degree) modulo a fixed monic
irreducible polynomial.  Exhaustive verification sweeps run over numpy
tables; everything stays exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

from .classify import IsomorphismWitness
from .errors import BudgetExceededError, verification_budget
from .groups import is_prime

_TABLE_LIMIT = 1 << 16
_CONSTRUCT_LIMIT = 1 << 20
_EXHAUSTIVE_PAIR_LIMIT = 512


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _poly_eval(coeffs: tuple[int, ...], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _poly_mod(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of num modulo the monic polynomial den, over GF(p)."""
    num = list(num)
    deg_den = len(den) - 1
    for i in range(len(num) - 1, deg_den - 1, -1):
        c = num[i]
        if c:
            shift = i - deg_den
            for j, dc in enumerate(den):
                num[shift + j] = (num[shift + j] - c * dc) % p
    return num[:deg_den]


def _poly_is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    degree = len(poly) - 1
    for x in range(p):
        if _poly_eval(poly, x, p) == 0:
            return False
    # no roots rules out linear factors, so degrees 2 and 3 are settled
    for d in range(2, degree // 2 + 1):
        for enc in range(p**d):
            div = []
            e = enc
            for _ in range(d):
                div.append(e % p)
                e //= p
            div.append(1)
            if not any(_poly_mod(poly, tuple(div), p)):
                return False
    return True


class FiniteField:
    """GF(p^n) with the smallest-encoding monic irreducible modulus.

    The modulus is the first irreducible x^n + c_(n-1) x^(n-1) + ... + c_0
    when the low coefficients (c_0, ..., c_(n-1)) are enumerated by their
    base-p integer encoding; the generator is the smallest element of
    maximal multiplicative order.  Both choices are deterministic, and every
    check in this module is model-independent.
    """

    def __init__(self, p: int, n: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p must be a prime integer, got {p}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"n must be a positive integer, got {n}")
        if n * p.bit_length() > 21 or p**n > _CONSTRUCT_LIMIT:
            raise BudgetExceededError(
                f"field of order p**n = {p}**{n} exceeds the construction bound {_CONSTRUCT_LIMIT}",
                required=p**n if n * p.bit_length() <= 64 else _CONSTRUCT_LIMIT + 1,
                budget=_CONSTRUCT_LIMIT,
            )
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus_poly = self._find_modulus()
        self._generator: int | None = None
        self._exp: np.ndarray | None = None
        self._log: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, n={self.n}, order={self.order})"

    # -- representation ------------------------------------------------

    def decode(self, x: int) -> tuple[int, ...]:
        """Base-p digits of an element code, ascending degree."""
        digits = []
        for _ in range(self.n):
            digits.append(x % self.p)
            x //= self.p
        return tuple(digits)

    def encode(self, coeffs) -> int:
        out = 0
        for c in reversed(tuple(coeffs)):
            out = out * self.p + c % self.p
        return out

    def elements(self) -> range:
        return range(self.order)

    def _find_modulus(self) -> tuple[int, ...]:
        if self.n == 1:
            return (0, 1)
        for enc in range(self.order):
            low = []
            e = enc
            for _ in range(self.n):
                low.append(e % self.p)
                e //= self.p
            poly = tuple(low) + (1,)
            if _poly_is_irreducible(poly, self.p):
                return poly
        raise RuntimeError(f"no irreducible polynomial of degree {self.n} over GF({self.p})")

    # -- scalar arithmetic ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        out = 0
        scale = 1
        for _ in range(self.n):
            out += (a % self.p + b % self.p) % self.p * scale
            a //= self.p
            b //= self.p
            scale *= self.p
        return out

    def neg(self, a: int) -> int:
        out = 0
        scale = 1
        for _ in range(self.n):
            out += -a % self.p * scale
            a //= self.p
            scale *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_poly(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        da, db = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.n - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % self.p
        for i in range(2 * self.n - 2, self.n - 1, -1):
            c = prod[i]
            if c:
                shift = i - self.n
                for j, mc in enumerate(self.modulus_poly):
                    prod[shift + j] = (prod[shift + j] - c * mc) % self.p
        return self.encode(prod[: self.n])

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            m = self.order - 1
            return int(self._exp[(int(self._log[a]) + int(self._log[b])) % m])
        return self._mul_poly(a, b)

    def pow(self, x: int, e: int) -> int:
        """x**e by square-and-multiply; negative e inverts a nonzero x."""
        if x == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ValueError("zero has no multiplicative inverse")
        e %= self.order - 1 if self.order > 2 else 1
        result = 1
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, x: int) -> int:
        return self.pow(x, -1)

    def frobenius(self, x: int, l: int) -> int:
        """The automorphism x -> x**(p**l)."""
        return self.pow(x, self.p**l)

    @property
    def generator(self) -> int:
        """Smallest element generating the multiplicative group."""
        if self._generator is None:
            m = self.order - 1
            if m == 1:
                self._generator = 1
            else:
                primes = _prime_factors(m)
                for x in range(2, self.order):
                    if all(self.pow(x, m // r) != 1 for r in primes):
                        self._generator = x
                        break
                else:  # pragma: no cover - the multiplicative group is cyclic
                    raise RuntimeError("no generator found")
        return self._generator

    # -- vectorized arithmetic -------------------------------------------

    def _ensure_tables(self) -> tuple[np.ndarray, np.ndarray]:
        if self._exp is None:
            if self.order > _TABLE_LIMIT:
                raise BudgetExceededError(
                    f"field of order {self.order} exceeds the table bound {_TABLE_LIMIT}",
                    required=self.order,
                    budget=_TABLE_LIMIT,
                )
            m = self.order - 1
            g = self.generator
            exp = np.zeros(max(m, 1), dtype=np.int64)
            log = np.zeros(self.order, dtype=np.int64)
            value = 1
            for i in range(max(m, 1)):
                exp[i] = value
                log[value] = i
                value = self._mul_poly(value, g)
            self._exp, self._log = exp, log
        return self._exp, self._log

    def add_arrays(self, a, b) -> np.ndarray:
        """Elementwise field addition of integer-coded arrays (broadcasting)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        scale = 1
        for _ in range(self.n):
            out += (a % self.p + b % self.p) % self.p * scale
            a = a // self.p
            b = b // self.p
            scale *= self.p
        return out

    def mul_arrays(self, a, b) -> np.ndarray:
        exp, log = self._ensure_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        zero = (a == 0) | (b == 0)
        out = exp[(log[a] + log[b]) % (self.order - 1 if self.order > 2 else 1)]
        out[zero] = 0
        return out

    def mul_scalar_array(self, arr, c: int) -> np.ndarray:
        arr = np.asarray(arr, dtype=np.int64)
        if c == 0:
            return np.zeros_like(arr)
        exp, log = self._ensure_tables()
        out = exp[(log[arr] + int(log[c])) % (self.order - 1 if self.order > 2 else 1)]
        out[arr == 0] = 0
        return out

    def pow_table(self, e: int) -> np.ndarray:
        """x**e for every element code x, as an array (e >= 0)."""
        if e < 0:
            raise ValueError(f"pow_table needs e >= 0, got {e}")
        exp, log = self._ensure_tables()
        out = np.ones(self.order, dtype=np.int64)
        if e == 0:
            return out
        m = self.order - 1 if self.order > 2 else 1
        out[0] = 0
        nz = np.arange(1, self.order)
        out[1:] = exp[(log[nz] * (e % m)) % m]
        return out


@dataclass(frozen=True)
class ActionSpec:
    """Scalar action data: per-position exponents, optional Frobenius twists.

    Encodes x_i -> x_i * a**(q_i * p**l_i) componentwise; exponents must be
    units modulo p**n - 1 and twists must lie in 0..n-1.
    """

    exponents: tuple[int, ...]
    frobenius_powers: tuple[int, ...] | None = None

    def twists(self) -> tuple[int, ...]:
        if self.frobenius_powers is None:
            return (0,) * len(self.exponents)
        return self.frobenius_powers


def _check_spec(f: FiniteField, spec: ActionSpec) -> None:
    if not spec.exponents:
        raise ValueError("an action needs at least one exponent")
    m = f.order - 1
    for q in spec.exponents:
        if q < 1 or gcd(q, m) != 1:
            raise ValueError(f"exponent {q} is not a unit modulo {m}")
    twists = spec.twists()
    if len(twists) != len(spec.exponents):
        raise ValueError("frobenius_powers must match exponents in length")
    for l in twists:
        if not 0 <= l < f.n:
            raise ValueError(f"Frobenius power {l} out of range 0..{f.n - 1}")


def apply_action(f: FiniteField, spec: ActionSpec, xs, alpha: int):
    """Componentwise x_i * alpha**(q_i * p**l_i)."""
    _check_spec(f, spec)
    xs = tuple(xs)
    if len(xs) != len(spec.exponents):
        raise ValueError(f"vector length {len(xs)} does not match action arity {len(spec.exponents)}")
    return tuple(
        f.mul(x, f.pow(alpha, q * f.p**l))
        for x, q, l in zip(xs, spec.exponents, spec.twists())
    )


def check_field_identity(f: FiniteField, qi: int, qj: int) -> bool:
    """Exhaustively test (a^qi + b^qi)^qj == (a^qj + b^qj)^qi over the field.

    The identity holds for all a, b exactly when qi and qj lie in the same
    coset of <p>, i.e. share a canonical representative.
    """
    m = f.order - 1
    for q in (qi, qj):
        if q < 1 or gcd(q, m) != 1:
            raise ValueError(f"exponent {q} is not a unit modulo {m}")
    pi = f.pow_table(qi)
    pj = f.pow_table(qj)
    si = f.add_arrays(pi[:, None], pi[None, :])
    sj = f.add_arrays(pj[:, None], pj[None, :])
    return bool(np.array_equal(pj[si], pi[sj]))


def _frobenius_is_additive(f: FiniteField, table: np.ndarray, rng: np.random.Generator) -> bool:
    if f.order <= _EXHAUSTIVE_PAIR_LIMIT:
        u = np.arange(f.order)[:, None]
        v = np.arange(f.order)[None, :]
    else:
        u = rng.integers(0, f.order, size=2048)
        v = rng.integers(0, f.order, size=2048)
    return bool(np.array_equal(table[f.add_arrays(u, v)], f.add_arrays(table[u], table[v])))


def _compatible_on(f, X, s1, s2, witness, frob) -> bool:
    sig0 = [s - 1 for s in witness.sigma]
    for alpha in range(f.order):
        a_pows = [f.pow(alpha, q) for q in s1]
        beta = f.pow(alpha, witness.q)
        b_pows = [f.pow(beta, q) for q in s2]
        for j in range(len(sig0)):
            src = X[:, sig0[j]]
            table = frob[witness.frobenius_powers[j]]
            lhs = table[f.mul_scalar_array(src, a_pows[sig0[j]])]
            rhs = f.mul_scalar_array(table[src], b_pows[j])
            if not np.array_equal(lhs, rhs):
                return False
    return True


def verify_witness(
    f: FiniteField,
    s1,
    s2,
    witness: IsomorphismWitness,
    mode: str = "sampled",
    budget: int | None = None,
    samples: int = 1000,
    seed: int = 0,
) -> bool:
    """Field-level verification of an isomorphism witness.

    Builds theta(x)_j = (x_(sigma(j)))^(p^(l_j)) and checks that it
    intertwines the two scalar actions: theta(x * s_alpha) equals
    theta(x) * t_(alpha^q) for every scalar alpha, where s uses the
    exponents of s1 and t those of s2.  theta is additive because its
    components are Frobenius powers (checked explicitly) and bijective
    because the components are bijections and the positions a permutation.

    Compatibility is always checked on the zero vector and the standard
    basis for every alpha; exhaustive mode then covers every vector of the
    module (budget-gated), sampled mode at least ``samples`` random vectors.
    """
    s1, s2 = tuple(s1), tuple(s2)
    m = len(s1)
    if len(s2) != m:
        raise ValueError(f"sequences have different lengths: {m} and {len(s2)}")
    _check_spec(f, ActionSpec(s1))
    _check_spec(f, ActionSpec(s2))
    if sorted(witness.sigma) != list(range(1, m + 1)):
        raise ValueError(f"sigma is not a permutation of 1..{m}: {witness.sigma}")
    if len(witness.frobenius_powers) != m:
        raise ValueError("frobenius_powers must have one entry per position")
    for l in witness.frobenius_powers:
        if not 0 <= l < f.n:
            raise ValueError(f"Frobenius power {l} out of range 0..{f.n - 1}")
    if witness.q < 1 or gcd(witness.q, f.order - 1) != 1:
        raise ValueError(f"witness scaling {witness.q} is not a unit modulo {f.order - 1}")
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {mode!r}")

    rng = np.random.default_rng(seed)
    frob = {l: f.pow_table(f.p**l) for l in set(witness.frobenius_powers)}
    for table in frob.values():
        if len(np.unique(table)) != f.order:
            return False
        if not _frobenius_is_additive(f, table, rng):
            return False

    basis = np.zeros((m + 1, m), dtype=np.int64)
    for i in range(m):
        basis[i + 1, i] = 1  # element code 1 is the field's one
    if not _compatible_on(f, basis, s1, s2, witness, frob):
        return False

    if mode == "exhaustive":
        total = f.order**m * f.order
        limit = verification_budget(budget)
        if total > limit:
            raise BudgetExceededError(
                f"exhaustive verification needs {total} evaluations, budget is {limit}",
                required=total,
                budget=limit,
            )
        n_vectors = f.order**m
        rows = max(1, (1 << 20) // m)
        shape = (f.order,) * m
        for start in range(0, n_vectors, rows):
            stop = min(start + rows, n_vectors)
            X = np.stack(np.unravel_index(np.arange(start, stop), shape), axis=1)
            if not _compatible_on(f, X, s1, s2, witness, frob):
                return False
    else:
        if samples < 1:
            raise ValueError(f"samples must be >= 1, got {samples}")
        X = rng.integers(0, f.order, size=(samples, m), dtype=np.int64)
        if not _compatible_on(f, X, s1, s2, witness, frob):
            return False
    return True


@dataclass(frozen=True)
class AxiomReport:
    """Pass/fail record for the defining conditions of a near-vector space."""

    additive_maps: bool
    has_zero_identity_negation: bool
    scalars_form_group: bool
    fixed_point_free: bool
    quasi_kernel_generates: bool

    @property
    def passed(self) -> bool:
        return (
            self.additive_maps
            and self.has_zero_identity_negation
            and self.scalars_form_group
            and self.fixed_point_free
            and self.quasi_kernel_generates
        )


def check_axioms(f: FiniteField, spec: ActionSpec, budget: int | None = None) -> AxiomReport:
    """Exhaustively check the near-vector-space conditions on a tiny instance.

    The scalar set is {s_a : a in GF(p^n)} acting componentwise via the
    spec's exponents and twists.  Checked: the maps are additive; 0, the
    identity and its negative occur; the nonzero maps form a group of
    bijections; the action is fixed-point free; the quasi-kernel (vectors x
    such that any x*s_a + x*s_b is again some x*s_c) generates the whole
    group under addition.
    """
    _check_spec(f, spec)
    m = len(spec.exponents)
    limit = verification_budget(budget)
    n_vectors = f.order**m
    cost = n_vectors * f.order * f.order
    if cost > limit:
        raise BudgetExceededError(
            f"axiom check needs about {cost} evaluations, budget is {limit}",
            required=cost,
            budget=limit,
        )
    exps = [q * f.p**l for q, l in zip(spec.exponents, spec.twists())]
    coeff = [tuple(f.pow(a, e) for e in exps) for a in range(f.order)]

    used = {c for row in coeff for c in row}
    additive = all(
        f.mul(f.add(u, v), c) == f.add(f.mul(u, c), f.mul(v, c))
        for c in used
        for u in range(f.order)
        for v in range(f.order)
    )

    minus_one = f.neg(1)
    zero_id_neg = (
        all(c == 0 for c in coeff[0])
        and any(all(c == 1 for c in row) for row in coeff)
        and any(all(c == minus_one for c in row) for row in coeff)
    )

    star = {coeff[a] for a in range(1, f.order)}
    scalars_group = (
        all(all(c != 0 for c in row) for row in star)
        and (1,) * m in star
        and all(tuple(f.mul(ca, cb) for ca, cb in zip(ra, rb)) in star for ra in star for rb in star)
        and all(tuple(f.inv(c) for c in row) in star for row in star)
    )

    fixed_point_free = all(
        all(ca != cb for ca, cb in zip(coeff[a], coeff[b]))
        for a in range(f.order)
        for b in range(a + 1, f.order)
    )

    def vadd(x, y):
        return tuple(f.add(xi, yi) for xi, yi in zip(x, y))

    quasi = []
    for x in itertools.product(range(f.order), repeat=m):
        images = {tuple(f.mul(xi, c) for xi, c in zip(x, coeff[a])) for a in range(f.order)}
        if all(vadd(xa, xb) in images for xa in images for xb in images):
            quasi.append(x)

    span = {(0,) * m} | set(quasi)
    frontier = list(span)
    while frontier:
        new = []
        for x in frontier:
            for qv in quasi:
                s = vadd(x, qv)
                if s not in span:
                    span.add(s)
                    new.append(s)
        frontier = new
    generates = len(span) == n_vectors

    return AxiomReport(additive, zero_id_neg, scalars_group, fixed_point_free, generates)
