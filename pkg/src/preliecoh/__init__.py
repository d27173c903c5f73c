"""Exact-arithmetic verification and cohomology for finite-dimensional
pre-Lie algebras.

Everything computes over the rationals with no tolerances: axiom
checkers return a first-failure witness or None, cohomology spaces come
with chosen representatives, and structure conversions re-verify their
own outputs before returning them.
"""

from .algebra import (
    ActionData,
    AlgebraMorphism,
    LieAlgebra,
    PreLieAlgebra,
    Representation,
    Violation,
    check_action,
    check_lie,
    check_prelie,
    check_representation,
    subadjacent_lie,
)
from .cochain import (
    Cochain,
    CochainBasis,
    CohomologySpace,
    are_cohomologous,
    coboundary,
    coboundary_matrix,
    cohomology,
    hom_module,
    lie_cohomology_dimension,
)
from .documents import (
    DocumentModel,
    parse_document,
    serialize_document,
    verify_document,
    write_document,
)
from .errors import (
    InvalidExtension,
    InvalidInput,
    NotACocycle,
    OutputCheckFailed,
    ParseError,
    PreLieError,
    SchemaError,
    ShapeError,
)
from .functors import (
    DendriformAlgebra,
    DendriformCrossedModule,
    LieCrossedModule,
    RotaBaxterLieCrossedModule,
    check_dendriform,
    check_dendriform_xmod,
    check_lie_crossed_module,
    check_rb_lie_xmod,
    check_rota_baxter,
    dendriform_to_prelie_xmod,
    prelie_to_lie_xmod,
    rblie_to_prelie_xmod,
)
from .linalg import MatrixQ, SubspaceBasis
from .trees import (
    LabeledRootedTree,
    TreePoly,
    check_cocycle_pullback,
    enumerate_trees,
    evaluate,
    format_tree,
    graft_product,
    parse_tree,
)
from .xmodules import (
    CrossedModule,
    CrossedModuleExtension,
    EquivalenceWitness,
    canonical_extension,
    check_crossed_module,
    check_equivalence_witness,
    check_extension,
    double_extension,
    identity_xmod,
    induced_representation,
    kernel_xmod,
    t_map,
    trivial_extension,
    trivial_module_xmod,
)

__version__ = "0.1.0"

__all__ = [
    "ActionData",
    "AlgebraMorphism",
    "Cochain",
    "CochainBasis",
    "CohomologySpace",
    "CrossedModule",
    "CrossedModuleExtension",
    "DendriformAlgebra",
    "DendriformCrossedModule",
    "DocumentModel",
    "EquivalenceWitness",
    "InvalidExtension",
    "InvalidInput",
    "LabeledRootedTree",
    "LieAlgebra",
    "LieCrossedModule",
    "MatrixQ",
    "NotACocycle",
    "OutputCheckFailed",
    "ParseError",
    "PreLieAlgebra",
    "PreLieError",
    "Representation",
    "RotaBaxterLieCrossedModule",
    "SchemaError",
    "ShapeError",
    "SubspaceBasis",
    "TreePoly",
    "Violation",
    "are_cohomologous",
    "canonical_extension",
    "check_action",
    "check_cocycle_pullback",
    "check_crossed_module",
    "check_dendriform",
    "check_dendriform_xmod",
    "check_equivalence_witness",
    "check_extension",
    "check_lie",
    "check_lie_crossed_module",
    "check_prelie",
    "check_rb_lie_xmod",
    "check_representation",
    "check_rota_baxter",
    "coboundary",
    "coboundary_matrix",
    "cohomology",
    "dendriform_to_prelie_xmod",
    "double_extension",
    "enumerate_trees",
    "evaluate",
    "format_tree",
    "graft_product",
    "hom_module",
    "identity_xmod",
    "induced_representation",
    "kernel_xmod",
    "lie_cohomology_dimension",
    "parse_document",
    "parse_tree",
    "prelie_to_lie_xmod",
    "rblie_to_prelie_xmod",
    "serialize_document",
    "subadjacent_lie",
    "t_map",
    "trivial_extension",
    "trivial_module_xmod",
    "verify_document",
    "write_document",
]
