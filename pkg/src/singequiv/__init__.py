"""Exact homological algebra for singular equivalences of Morita type with level.

Finite-dimensional elementary algebras are given by quivers with relations or
by structure constants over F_p or Q.  Modules, bimodules and bounded
complexes are matrix representations; projective resolutions, syzygies,
perfectness, stable isomorphism and the witness constructions are computed
by exact linear algebra.
"""

from .algebra import (
    Algebra,
    AlgebraHom,
    QuiverPresentation,
    algebra_from_quiver,
    corner,
    enveloping,
    field_algebra,
    identity_hom,
    morita_ring,
    opposite,
    product_algebra,
    raw_algebra,
    simples,
    tensor_algebra,
)
from .complex import (
    ChainMap,
    Complex,
    NotPerfect,
    NotPerfectWithinCutoff,
    Perfect,
    cone,
    hard_truncate_below,
    hom_complex,
    hom_complex_regular,
    homology,
    is_perfect,
    is_quasi_iso,
    resolve_complex,
    shift,
    soft_truncation,
    tail_syzygy,
    tensor_complexes,
)
from .errors import (
    ConstructionExhausted,
    HypothesisFailed,
    Inconclusive,
    ParseError,
    SingEquivError,
    UnknownTask,
    ValidationError,
    ZaksViolated,
)
from .gorenstein import inj_dim, is_gorenstein, is_mcm, mcm_bimodule_check, vdim
from .linalg import Field
from .module import (
    Bimodule,
    ExceedsCutoff,
    Module,
    ModuleMap,
    bimodule_syzygy,
    bimodule_tensor,
    dual,
    ext_dim,
    find_iso,
    hom_into_regular,
    hom_space,
    is_indecomposable,
    is_projective,
    pd,
    projective_cover,
    regular_as_env,
    restrict_side,
    stable_iso,
    strip_projectives,
    syzygy,
    tensor_over,
    top,
)
from .report import Check, Report
from .singular import (
    counit_cone,
    hom_singular_check,
    idempotent_ideal_check,
    idempotent_singular_check,
    perf_env_direct,
    perf_env_simples,
    singular_equivalence_check,
    unit_cone,
)
from .truncation import truncate_per_fact
from .witness import (
    Witness,
    build_witness,
    corollary_witness,
    downstream_check,
    idempotent_witness,
    morita_witness,
    verify_witness,
)
from .workspace import parse_workspace, serialize

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraHom",
    "Bimodule",
    "ChainMap",
    "Check",
    "Complex",
    "ConstructionExhausted",
    "ExceedsCutoff",
    "Field",
    "HypothesisFailed",
    "Inconclusive",
    "Module",
    "ModuleMap",
    "NotPerfect",
    "NotPerfectWithinCutoff",
    "ParseError",
    "Perfect",
    "QuiverPresentation",
    "Report",
    "SingEquivError",
    "UnknownTask",
    "ValidationError",
    "Witness",
    "ZaksViolated",
    "algebra_from_quiver",
    "bimodule_syzygy",
    "bimodule_tensor",
    "build_witness",
    "cone",
    "corner",
    "corollary_witness",
    "counit_cone",
    "downstream_check",
    "dual",
    "enveloping",
    "ext_dim",
    "field_algebra",
    "find_iso",
    "hard_truncate_below",
    "hom_complex",
    "hom_complex_regular",
    "hom_into_regular",
    "hom_singular_check",
    "hom_space",
    "homology",
    "idempotent_ideal_check",
    "idempotent_singular_check",
    "idempotent_witness",
    "identity_hom",
    "inj_dim",
    "is_gorenstein",
    "is_indecomposable",
    "is_mcm",
    "is_perfect",
    "is_projective",
    "is_quasi_iso",
    "mcm_bimodule_check",
    "morita_ring",
    "morita_witness",
    "opposite",
    "parse_workspace",
    "pd",
    "perf_env_direct",
    "perf_env_simples",
    "product_algebra",
    "projective_cover",
    "raw_algebra",
    "regular_as_env",
    "resolve_complex",
    "restrict_side",
    "serialize",
    "shift",
    "simples",
    "singular_equivalence_check",
    "soft_truncation",
    "stable_iso",
    "strip_projectives",
    "syzygy",
    "tail_syzygy",
    "tensor_algebra",
    "tensor_complexes",
    "tensor_over",
    "top",
    "truncate_per_fact",
    "unit_cone",
    "vdim",
    "verify_witness",
]
