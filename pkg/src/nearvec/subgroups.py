"""Complete subgroup lattice of the abelian quotient group."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import QuotientGroup


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted canonical representatives."""

    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def issubset(self, other: "Subgroup") -> bool:
        return set(self.elements) <= set(other.elements)


@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups, grouped by order, with the containment relation.

    ``containment`` holds index pairs (i, j) meaning subgroups[i] is contained
    in subgroups[j]; indices refer to the ``subgroups`` tuple, which is sorted
    by (order, elements).
    """

    subgroups: tuple[Subgroup, ...]
    by_order: dict[int, tuple[Subgroup, ...]]
    containment: frozenset[tuple[int, int]]

    def index(self, H: Subgroup) -> int:
        try:
            return self.subgroups.index(H)
        except ValueError:
            raise ValueError(f"{H} is not a subgroup in this lattice") from None

    def contains(self, inner: Subgroup, outer: Subgroup) -> bool:
        return (self.index(inner), self.index(outer)) in self.containment


def is_subgroup(G: QuotientGroup, elements: tuple[int, ...]) -> bool:
    """Whether a set of canonical representatives is closed under the product.

    In a finite group, closure under multiplication already forces the
    identity and inverses.
    """
    elems = set(elements)
    if not elems or not elems <= set(G.elements):
        return False
    return all(G.mul(a, b) in elems for a in elems for b in elems)


def _cyclic_elements(G: QuotientGroup, g: int) -> tuple[int, ...]:
    elems = [1]
    x = g
    while x != 1:
        elems.append(x)
        x = G.mul(x, g)
    return tuple(sorted(elems))


def _product_elements(G: QuotientGroup, A: tuple[int, ...], B: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted({G.mul(a, b) for a in A for b in B}))


def all_subgroups(G: QuotientGroup) -> SubgroupLattice:
    """Every subgroup of G, by closing the cyclic subgroups under products.

    For an abelian group the product of two subgroups is again a subgroup, so
    iterating pairwise products of the cyclic subgroups until a fixed point
    yields the complete lattice.
    """
    found = {_cyclic_elements(G, g) for g in G.elements}
    changed = True
    while changed:
        changed = False
        current = sorted(found)
        for A in current:
            for B in current:
                P = _product_elements(G, A, B)
                if P not in found:
                    found.add(P)
                    changed = True
    subs = tuple(sorted((Subgroup(t) for t in found), key=lambda H: (H.order, H.elements)))
    by_order: dict[int, list[Subgroup]] = {}
    for H in subs:
        by_order.setdefault(H.order, []).append(H)
    containment = frozenset(
        (i, j)
        for i, A in enumerate(subs)
        for j, B in enumerate(subs)
        if A.issubset(B)
    )
    return SubgroupLattice(subs, {d: tuple(v) for d, v in by_order.items()}, containment)


def subgroups_of_order(lat: SubgroupLattice, d: int) -> list[Subgroup]:
    """All subgroups of the given order (empty when none exist)."""
    if d < 1:
        raise ValueError(f"order must be >= 1, got {d}")
    return list(lat.by_order.get(d, ()))


def cosets(G: QuotientGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """The pairwise-disjoint cosets q*H covering G, each sorted ascending."""
    if not is_subgroup(G, H.elements):
        raise ValueError(f"{H.elements} is not a subgroup of {G!r}")
    remaining = set(G.elements)
    out: list[tuple[int, ...]] = []
    for e in G.elements:
        if e not in remaining:
            continue
        coset = tuple(sorted(G.mul(e, h) for h in H.elements))
        out.append(coset)
        remaining.difference_update(coset)
    return out


def containing_subgroups(lat: SubgroupLattice, H: Subgroup, order: int) -> list[Subgroup]:
    """All subgroups of the given order that contain H."""
    return [K for K in lat.by_order.get(order, ()) if H.issubset(K)]


def product_subgroup(G: QuotientGroup, H1: Subgroup, H2: Subgroup) -> Subgroup:
    """The subgroup {a*b : a in H1, b in H2} (G is abelian)."""
    return Subgroup(_product_elements(G, H1.elements, H2.elements))
