"""Exact invariants of hypersurface singularities, geometric transitions
between Calabi-Yau threefolds, and the web graph connecting their
deformation families.  All arithmetic is exact: rational or number-field
coefficients, never floating point."""

from .errors import (
    BudgetExceededError,
    DomainError,
    InconsistentDataError,
    NonIsolatedSingularityError,
    PositiveDimensionalError,
)
from .groebner import (
    DEFAULT_BUDGET,
    GroebnerBasis,
    QuotientBasis,
    buchberger,
    eliminant,
    is_unit_modulo,
    minimal_polynomial_modulo,
    normal_form,
    quotient_dimension,
)
from .numberfield import FieldElement, NumberField, cyclotomic_field
from .ordering import DEGREVLEX, LEX, MonomialOrder
from .polynomial import (
    ParseError,
    Polynomial,
    PolynomialRing,
    format_polynomial,
    format_polynomial_file,
    parse_polynomial,
    parse_polynomial_file,
)
from .singularities import (
    Ambient,
    Hypersurface,
    LocalInvariants,
    LocalModel,
    SingularityReport,
    analyze_singular_locus,
    classify_cA,
    count_cuspidal_fibers,
    fiber_product_type_ii_count,
    hessian_corank,
    load_hypersurface,
    load_local_model,
    local_invariants,
    milnor_number,
    milnor_orlik_check,
    singular_scheme,
    tyurina_number,
)
from .transitions import (
    Finding,
    Fingerprint,
    ResolutionDatum,
    SingularDatum,
    SplittingFamily,
    TransitionRecord,
    VarietyInfo,
    Verdict,
    compute_table,
    consistency_check,
    decide_simplicity,
    dim_image_lambda,
    load_transition_record,
    table_csv,
    verify_splitting_family,
)
from .web import (
    Arrow,
    WebGraph,
    WebNode,
    add_arrow,
    add_node,
    export_csv,
    export_dot,
    load_web_graph,
    serialize_web_graph,
    validate,
)

__version__ = "0.1.0"
