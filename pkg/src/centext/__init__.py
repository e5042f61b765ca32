"""Exact classification of central extensions of null-filiform algebras.

Everything is computed symbolically over the rationals or a prime
field: cocycle spaces cut out by variety identities, second cohomology,
central extensions, the automorphism group action, and orbit
classifications of extension classes.
"""

from .algebra import (
    Algebra,
    is_standard_null_filiform,
    null_filiform,
    require_in_variety,
    satisfies_variety,
)
from .automorphisms import (
    Automorphism,
    act_on_class,
    act_on_cocycle,
    automorphism_from_column,
    class_action_matrix,
    is_automorphism,
)
from .cohomology import (
    CohomologySpace,
    annihilator_intersection,
    check_cocycle,
    coboundary_space,
    cocycle_annihilator,
    cocycle_space,
    is_cocycle,
    second_cohomology,
)
from .errors import (
    BudgetExceeded,
    CentextError,
    CharTooSmall,
    CompositeModulus,
    DegreeError,
    DimMismatch,
    DivisionByZero,
    FieldMismatch,
    IdentitySyntaxError,
    IndexOutOfRange,
    InvalidDim,
    NotACocycle,
    NotInVariety,
    NotInvertible,
    TableMismatch,
    UnknownVariety,
    UnsupportedVariety,
)
from .extensions import (
    ExtensionResult,
    build_extension,
    central_extension,
    in_T1,
    is_non_split,
)
from .fields import RATIONALS, Field, Scalar
from .forms import BilinearForm, delta, nabla
from .identities import (
    IdentitySchema,
    Monomial,
    VARIETY_ALIASES,
    VARIETY_NAMES,
    VarietySpec,
    builtin_variety,
    format_identity,
    multilinearize,
    parse_identities,
    parse_identity,
)
from .linalg import Subspace, kernel_basis, rref
from .orbits import (
    DEFAULT_BUDGET,
    ClassAction,
    NamedClass,
    Orbit,
    OrbitReport,
    RootSubgroup,
    automorphism_count,
    build_table1,
    check_table1,
    classification_table,
    closed_field_representatives,
    coset_representatives,
    enumerate_automorphisms,
    orbits_on_H2,
    orbits_on_T1,
    resolve_budget,
    roots_of_unity_subgroup,
)
from .reproduce import run_reproduction

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Automorphism",
    "BilinearForm",
    "BudgetExceeded",
    "CentextError",
    "CharTooSmall",
    "ClassAction",
    "CohomologySpace",
    "CompositeModulus",
    "DEFAULT_BUDGET",
    "DegreeError",
    "DimMismatch",
    "DivisionByZero",
    "ExtensionResult",
    "Field",
    "FieldMismatch",
    "IdentitySchema",
    "IdentitySyntaxError",
    "IndexOutOfRange",
    "InvalidDim",
    "Monomial",
    "NamedClass",
    "NotACocycle",
    "NotInVariety",
    "NotInvertible",
    "Orbit",
    "OrbitReport",
    "RATIONALS",
    "RootSubgroup",
    "Scalar",
    "Subspace",
    "TableMismatch",
    "UnknownVariety",
    "UnsupportedVariety",
    "VARIETY_ALIASES",
    "VARIETY_NAMES",
    "VarietySpec",
    "act_on_class",
    "act_on_cocycle",
    "annihilator_intersection",
    "automorphism_count",
    "automorphism_from_column",
    "build_extension",
    "build_table1",
    "central_extension",
    "check_cocycle",
    "check_table1",
    "class_action_matrix",
    "classification_table",
    "closed_field_representatives",
    "coboundary_space",
    "cocycle_annihilator",
    "cocycle_space",
    "coset_representatives",
    "delta",
    "enumerate_automorphisms",
    "format_identity",
    "in_T1",
    "is_automorphism",
    "is_cocycle",
    "is_non_split",
    "is_standard_null_filiform",
    "kernel_basis",
    "multilinearize",
    "nabla",
    "null_filiform",
    "orbits_on_H2",
    "orbits_on_T1",
    "parse_identities",
    "parse_identity",
    "require_in_variety",
    "resolve_budget",
    "roots_of_unity_subgroup",
    "rref",
    "run_reproduction",
    "satisfies_variety",
    "second_cohomology",
]
