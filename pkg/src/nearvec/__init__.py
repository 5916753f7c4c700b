"""Exact classification and counting of near-vector spaces over finite fields.

The central objects are the quotient group G = U(p^n - 1)/<p>, the suitable
sequences of exponent classes that encode scalar actions on GF(p^n)^m, the
scaling relation that decides isomorphism, and two independent routes to the
class counts: a closed form over the subgroup lattice of G and brute-force
orbit enumeration.  A finite-field layer verifies isomorphism witnesses and
the defining axioms concretely.
"""

from .classify import (
    ClassificationResult,
    IsomorphismWitness,
    OrbitClass,
    brute_force_classes,
    brute_force_counts,
    build_witness,
    isomorphic,
    orbit,
    witness_consistent,
)
from .counting import (
    CountReport,
    SupportSummary,
    class_count,
    coprime_total,
    count_invariant,
    count_with_support,
    exact_stabilizer_counts,
    total_count,
)
from .errors import BudgetExceededError, NotIsomorphicError
from .field import (
    ActionSpec,
    AxiomReport,
    FiniteField,
    apply_action,
    check_axioms,
    check_field_identity,
    verify_witness,
)
from .groups import (
    GroupParams,
    QuotientGroup,
    frobenius_exponent,
    is_prime,
    p_coset,
    quotient_group,
    unit_group,
)
from .sequences import (
    SupportProfile,
    all_sequences,
    format_sequence,
    has_coset_structure,
    iter_sequences,
    normalize_sequence,
    num_sequences,
    parse_sequence,
    scale,
    support_profile,
    validate_sequence,
)
from .subgroups import (
    Subgroup,
    SubgroupLattice,
    all_subgroups,
    containing_subgroups,
    cosets,
    is_subgroup,
    product_subgroup,
    subgroups_of_order,
)

__version__ = "0.1.0"

__all__ = [
    "ActionSpec",
    "AxiomReport",
    "BudgetExceededError",
    "ClassificationResult",
    "CountReport",
    "FiniteField",
    "GroupParams",
    "IsomorphismWitness",
    "NotIsomorphicError",
    "OrbitClass",
    "QuotientGroup",
    "Subgroup",
    "SubgroupLattice",
    "SupportProfile",
    "SupportSummary",
    "all_sequences",
    "all_subgroups",
    "apply_action",
    "brute_force_classes",
    "brute_force_counts",
    "build_witness",
    "check_axioms",
    "check_field_identity",
    "class_count",
    "containing_subgroups",
    "coprime_total",
    "cosets",
    "count_invariant",
    "count_with_support",
    "exact_stabilizer_counts",
    "format_sequence",
    "frobenius_exponent",
    "has_coset_structure",
    "is_prime",
    "is_subgroup",
    "isomorphic",
    "iter_sequences",
    "normalize_sequence",
    "num_sequences",
    "orbit",
    "p_coset",
    "parse_sequence",
    "product_subgroup",
    "quotient_group",
    "scale",
    "subgroups_of_order",
    "support_profile",
    "total_count",
    "unit_group",
    "validate_sequence",
    "verify_witness",
    "witness_consistent",
]
