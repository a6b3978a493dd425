"""Exact rank computations for lattice Delaunay polytopes."""

from .basis import (
    Q_BASIC_ONLY,
    UNDECIDED,
    Z_BASIC,
    BasicityClass,
    classify_basicity,
    is_affine_basis,
    lattice_index,
)
from .deps import (
    DependencyBasis,
    VertexDependency,
    basis_dependencies,
    check_dist_system,
    check_negative_type,
    dependency_module,
)
from .errors import (
    AffinelyDependent,
    DelrankError,
    DimensionDeficient,
    DuplicateVertex,
    InputError,
    NotAffineBasis,
    NotCospherical,
    NotPositiveDefinite,
    NotRealizable,
    NotUnimodular,
    SumNotOne,
    SumNotZero,
    TooFewVertices,
    WrongSize,
)
from .exact import is_positive_definite
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    P0Data,
    build,
    canonical_gram,
    cross_polytope,
    cube,
    half_cube,
    p0,
    p0_distance_matrix,
    simplex,
)
from .hyp import (
    FaceSystem,
    LemmaHyReport,
    check_lemma_hy,
    eval_hypermetric,
    face_dimension,
    face_system,
    representation_point,
    restricted_face_dimension,
    vertex_pairs,
)
from .model import (
    Circumdata,
    EmptySphereReport,
    Polytope,
    affine_basis_indices,
    circumcenter,
    distance_matrix,
    from_coords,
    from_distances,
    is_centrally_symmetric,
    validate_distance_matrix,
    verify_empty_sphere,
)
from .rank import (
    ConstraintSystem,
    FullSystem,
    RankReport,
    SymmetricReductionReport,
    bspace_basis,
    bspace_constraints,
    check_symmetric_reduction,
    full_system,
    full_system_form_dimension,
    is_extreme,
    nrd,
    rank_of,
    transform_basis,
    translate,
)

__all__ = [
    "AffinelyDependent",
    "BasicityClass",
    "Circumdata",
    "ConstraintSystem",
    "DelrankError",
    "DependencyBasis",
    "DimensionDeficient",
    "DuplicateVertex",
    "EmptySphereReport",
    "FAMILY_NAMES",
    "FaceSystem",
    "FamilySpec",
    "FullSystem",
    "InputError",
    "LemmaHyReport",
    "NotAffineBasis",
    "NotCospherical",
    "NotPositiveDefinite",
    "NotRealizable",
    "NotUnimodular",
    "P0Data",
    "Polytope",
    "Q_BASIC_ONLY",
    "RankReport",
    "SumNotOne",
    "SumNotZero",
    "SymmetricReductionReport",
    "TooFewVertices",
    "UNDECIDED",
    "VertexDependency",
    "WrongSize",
    "Z_BASIC",
    "affine_basis_indices",
    "basis_dependencies",
    "bspace_basis",
    "bspace_constraints",
    "build",
    "canonical_gram",
    "check_dist_system",
    "check_lemma_hy",
    "check_negative_type",
    "check_symmetric_reduction",
    "circumcenter",
    "classify_basicity",
    "cross_polytope",
    "cube",
    "dependency_module",
    "distance_matrix",
    "eval_hypermetric",
    "face_dimension",
    "face_system",
    "from_coords",
    "from_distances",
    "full_system",
    "full_system_form_dimension",
    "half_cube",
    "is_affine_basis",
    "is_centrally_symmetric",
    "is_extreme",
    "is_positive_definite",
    "lattice_index",
    "nrd",
    "p0",
    "p0_distance_matrix",
    "rank_of",
    "representation_point",
    "restricted_face_dimension",
    "simplex",
    "transform_basis",
    "translate",
    "validate_distance_matrix",
    "verify_empty_sphere",
    "vertex_pairs",
]
