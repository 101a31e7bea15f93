"""Finite commutative rings: spectra, idempotents, direct products and localizations."""
from .boolean import BooleanRingView, SetRing, atoms, boolean_ring, setring_primes, stone_iso
from .dsl import ParseError, SemanticError, elaborate, parse, ring_from_text, to_text
from .errors import (
    ConsistencyError,
    HomomorphismError,
    ImproperFilterError,
    NotDomainError,
    NotLocalError,
    NotMaxRegularError,
    NotPrimeError,
    ResourceLimitError,
    RingAxiomError,
    RingError,
    ZeroRingFactorError,
)
from .fixtures import FIXTURES, fixture
from .ideals import (
    Ideal,
    all_ideals,
    has_ideal_avoidance,
    ideal_from_generators,
    is_maximal,
    is_prime,
    is_principal,
    is_regular_ideal,
    jacobson_radical,
    nilradical,
    principal_ideal,
    qb_criterion,
    radical_of,
    radical_ops,
    unit_ideal,
    zero_ideal,
)
from .kernels import BACKEND
from .localization import (
    LocalizedRing,
    MultiplicativeSet,
    domain_embedding_check,
    filter_ideal,
    filter_quotient_iso,
    kernel_law_holds,
    localize,
    localize_at_prime,
    lying_over_minimal,
    omega_set,
    prime_disjoint_from_T,
    support,
)
from .products import (
    Classification,
    classify_prime,
    direct_sum_ideal,
    induced_hom_classification,
    prime_power_tower,
    residue_and_local_iso,
    spec_to_powerset,
    tame_max_regular,
    tame_max_regular_map,
    tame_prime,
    unit_idempotent,
    unit_idempotents,
)
from .properties import PROPERTIES, RunConfig, VerificationReport, replay, run_all, run_property
from .rings import (
    Element,
    ModularRing,
    ProductRing,
    QuotientRing,
    Ring,
    RingHom,
    TableRing,
    canonical_hom,
    diagonal_hom,
    graph_hom,
    identity_hom,
    idempotents,
    is_domain,
    is_field,
    is_local,
    is_von_neumann_regular,
    nilpotency_index,
    product_hom,
    ring_predicates,
    set_size_guard,
    size_guard,
)
from .spectrum import (
    Spectrum,
    component_purity_check,
    connected_components,
    krull_dim,
    max_regular_ideals,
    regular_ideals,
    spec,
)
from .ultrafilters import (
    BasePrimeChoice,
    FilterObject,
    a_star,
    all_ultrafilters,
    cofinite_filter,
    embedding_checks,
    m_star,
    principal_filter,
    principal_ultrafilter,
)

__version__ = "0.1.0"
