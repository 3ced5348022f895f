"""Finite posets with insertion operads, incidence products, and suboperads.

The package implements four ways of composing a poset into a vertex of
another (one linear, three set-valued), the graded products and coproducts
they induce on isomorphism classes, the series-parallel and graft-compatible
suboperads with their factorization algorithms and the bijection between
them, and exhaustive enumeration used to verify every law at desk scale.
"""

from .canon import (
    DEFAULT_SIZE_LIMIT,
    IsoClass,
    SizeLimitExceeded,
    are_isomorphic,
    canonicalize,
    class_key,
    contains_induced,
)
from .core import (
    CycleDetected,
    DuplicateLabel,
    EmptySubset,
    GroundSetMismatch,
    LabelClash,
    NotConvex,
    Poset,
    PosetError,
    UnknownLabel,
    build,
    connected_components,
    covered_ground,
    disjoint_union,
    extrema,
    from_doc,
    from_json,
    hasse_covers,
    is_convex,
    is_finer,
    opposite,
    quotient,
    relabel,
    restrict,
)
from .enumeration import (
    CountRow,
    CountTable,
    all_isoclasses,
    all_posets,
    count_table,
    labeled_count,
    pinned_sequences,
)
from .hopf import (
    ClassSum,
    TensorSum,
    cls_of,
    class_info,
    coproduct_delta,
    coproduct_delta_star,
    counit,
    down_triangle,
    ordinal_sum,
    pairing,
    product,
    star_terms,
    tensor_pairing,
    up_triangle,
    verify_bialgebra,
    verify_infinitesimal,
    verify_nap,
)
from .operad import (
    EmptyInner,
    FormalSum,
    InsertionSite,
    VertexNotFound,
    compose,
    compose_bullet,
    compose_circ,
    compose_down,
    compose_up,
    class_grid,
    labeled_grid,
    verify_axioms,
    verify_equivariance,
    verify_involution,
    verify_mixed,
    verify_mixed_compat,
    verify_nested,
    verify_parallel,
    verify_unit,
)
from .report import VerificationReport
from .species import (
    circ_bilinear,
    is_refinement,
    phi,
    phi_inverse,
    refinements,
    verify_phi,
    verify_phi_morphism,
)
from .structure import (
    Factorization,
    NotNablaCompatible,
    NotWN,
    br_split,
    closure_nabla,
    closure_triple,
    closure_wn,
    is_nabla_compatible,
    is_wn,
    theta,
    theta_inverse,
    verify_graft_split,
    verify_suboperad_relations,
    wn_factorize,
)
from .worked import run_worked_examples

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SIZE_LIMIT",
    "IsoClass",
    "SizeLimitExceeded",
    "are_isomorphic",
    "canonicalize",
    "class_key",
    "contains_induced",
    "CycleDetected",
    "DuplicateLabel",
    "EmptySubset",
    "GroundSetMismatch",
    "LabelClash",
    "NotConvex",
    "Poset",
    "PosetError",
    "UnknownLabel",
    "build",
    "connected_components",
    "covered_ground",
    "disjoint_union",
    "extrema",
    "from_doc",
    "from_json",
    "hasse_covers",
    "is_convex",
    "is_finer",
    "opposite",
    "quotient",
    "relabel",
    "restrict",
    "CountRow",
    "CountTable",
    "all_isoclasses",
    "all_posets",
    "count_table",
    "labeled_count",
    "pinned_sequences",
    "ClassSum",
    "TensorSum",
    "cls_of",
    "class_info",
    "coproduct_delta",
    "coproduct_delta_star",
    "counit",
    "down_triangle",
    "ordinal_sum",
    "pairing",
    "product",
    "star_terms",
    "tensor_pairing",
    "up_triangle",
    "verify_bialgebra",
    "verify_infinitesimal",
    "verify_nap",
    "EmptyInner",
    "FormalSum",
    "InsertionSite",
    "VertexNotFound",
    "compose",
    "compose_bullet",
    "compose_circ",
    "compose_down",
    "compose_up",
    "class_grid",
    "labeled_grid",
    "verify_axioms",
    "verify_equivariance",
    "verify_involution",
    "verify_mixed",
    "verify_mixed_compat",
    "verify_nested",
    "verify_parallel",
    "verify_unit",
    "VerificationReport",
    "circ_bilinear",
    "is_refinement",
    "phi",
    "phi_inverse",
    "refinements",
    "verify_phi",
    "verify_phi_morphism",
    "Factorization",
    "NotNablaCompatible",
    "NotWN",
    "br_split",
    "closure_nabla",
    "closure_triple",
    "closure_wn",
    "is_nabla_compatible",
    "is_wn",
    "theta",
    "theta_inverse",
    "verify_graft_split",
    "verify_suboperad_relations",
    "wn_factorize",
    "run_worked_examples",
    "__version__",
]
