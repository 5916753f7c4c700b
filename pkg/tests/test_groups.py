import pytest
from math import gcd
from sympy import totient

from nearvec import (
    GroupParams,
    frobenius_exponent,
    p_coset,
    quotient_group,
    unit_group,
)
from support import G1_ELEMENTS, G2_ELEMENTS, prime_powers


def test_unit_group_frozen_sets():
    assert unit_group(26) == [1, 3, 5, 7, 9, 11, 15, 17, 19, 21, 23, 25]
    assert unit_group(24) == [1, 5, 7, 11, 13, 17, 19, 23]
    assert unit_group(2) == [1]
    assert unit_group(1) == [1]


def test_unit_group_length_matches_totient_oracle():
    for m in range(2, 200):
        assert len(unit_group(m)) == totient(m)


def test_unit_group_rejects_bad_modulus():
    with pytest.raises(ValueError):
        unit_group(0)


def test_group_params_validation():
    with pytest.raises(ValueError):
        GroupParams(4, 2)  # not prime
    with pytest.raises(ValueError):
        GroupParams(3, 0)
    with pytest.raises(ValueError):
        GroupParams(2, 33)  # modulus at least 2**32
    assert GroupParams(2, 1).degenerate
    assert not GroupParams(2, 2).degenerate
    assert GroupParams(3, 3).modulus == 26


def test_p_coset_examples():
    assert p_coset(GroupParams(3, 3)) == [1, 3, 9]
    assert p_coset(GroupParams(5, 2)) == [1, 5]
    assert p_coset(GroupParams(7, 1)) == [1]
    with pytest.raises(ValueError):
        p_coset(GroupParams(2, 1))


def test_quotient_group_published_elements():
    assert quotient_group(3, 3).elements == G1_ELEMENTS
    assert quotient_group(5, 2).elements == G2_ELEMENTS
    assert quotient_group(2, 2).elements == [1]  # U(3) = <2>
    assert quotient_group(2, 1).elements == [1]  # degenerate GF(2)


def test_quotient_group_order_is_totient_over_n():
    for p, n, _ in prime_powers(128):
        G = quotient_group(p, n)
        if G.params.degenerate:
            assert G.order == 1
        else:
            assert G.order * n == totient(G.params.modulus)


def test_elements_are_coset_minima_and_partition_units():
    for p, n in ((3, 3), (5, 2), (2, 5), (17, 1)):
        G = quotient_group(p, n)
        m = G.params.modulus
        cosets = [frozenset(e * h % m for h in G.p_coset) for e in G.elements]
        assert [min(c) for c in cosets] == G.elements
        union = set().union(*cosets)
        assert union == set(unit_group(m))
        assert sum(len(c) for c in cosets) == len(union)  # pairwise disjoint


@pytest.mark.parametrize(
    "a,b,expected",
    [(5, 5, 17), (5, 7, 1), (7, 7, 17), (7, 17, 5), (17, 17, 1), (1, 17, 17)],
)
def test_mul_published_cells(g1, a, b, expected):
    assert g1.mul(a, b) == expected


def test_mul_rejects_noncanonical_elements(g1):
    with pytest.raises(ValueError):
        g1.mul(3, 5)  # 3 lies in <3>, canonical form is 1
    with pytest.raises(ValueError):
        g1.inv(2)


def test_group_laws_exhaustive():
    for p, n in ((3, 3), (5, 2), (2, 5), (11, 1), (13, 1), (17, 1), (2, 1)):
        G = quotient_group(p, n)
        assert G.order <= 64
        for a in G.elements:
            assert G.mul(1, a) == a
            assert G.mul(a, G.inv(a)) == 1
            for b in G.elements:
                assert G.mul(a, b) == G.mul(b, a)
                for c in G.elements:
                    assert G.mul(a, G.mul(b, c)) == G.mul(G.mul(a, b), c)


def test_canonical_rep_is_quotient_homomorphism():
    for p, n in ((3, 3), (5, 2)):
        G = quotient_group(p, n)
        m = G.params.modulus
        units = unit_group(m)
        for a in units:
            for b in units:
                lhs = G.canonical_rep(a * b % m)
                rhs = G.mul(G.canonical_rep(a), G.canonical_rep(b))
                assert lhs == rhs


def test_inv_examples(g1):
    assert g1.inv(5) == 7
    assert g1.inv(17) == 17
    assert g1.inv(1) == 1


def test_canonical_rep_examples(g1):
    assert g1.canonical_rep(9) == 1
    assert g1.canonical_rep(21) == 7
    for e in g1.elements:
        assert g1.canonical_rep(e) == e
    with pytest.raises(ValueError):
        g1.canonical_rep(13)  # gcd(13, 26) = 13


def test_frobenius_exponent():
    params = GroupParams(3, 3)
    assert frobenius_exponent(params, 9) == 2
    assert frobenius_exponent(params, 1) == 0
    assert frobenius_exponent(params, 3) == 1
    assert frobenius_exponent(params, 29) == 1  # reduced mod 26
    with pytest.raises(ValueError):
        frobenius_exponent(params, 5)
    with pytest.raises(ValueError):
        frobenius_exponent(params, 13)  # not a unit
    assert frobenius_exponent(GroupParams(2, 1), 1) == 0


def test_index_tables_consistent(g2):
    mul, inv = g2.index_tables()
    for i, a in enumerate(g2.elements):
        assert g2.elements[inv[i]] == g2.inv(a)
        for j, b in enumerate(g2.elements):
            assert g2.elements[mul[i][j]] == g2.mul(a, b)
