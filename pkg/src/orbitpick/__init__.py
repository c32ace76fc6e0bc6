"""orbitpick: Pick interpolation for group-invariant disk algebras.

Decide and construct solutions of bounded analytic interpolation
problems for the fixed-point algebras of groups of disk automorphisms:
orbit Blaschke products, character extraction, reproducing-kernel Gram
matrices, Pick-matrix feasibility, extremal norms, and Schur-recursion
interpolants composed with inner functions.
"""

from .blaschke import (
    BlaschkeProduct,
    CharacterReport,
    character_of,
    evaluate,
    from_orbit,
)
from .errors import (
    AliasedNodes,
    DuplicateNodes,
    DuplicatePoints,
    InconclusiveCharacter,
    Infeasible,
    InputError,
    NoConvergence,
    NotDiskAutomorphism,
    NotInDisk,
    NoTailBound,
    NumericalError,
    OrbitExplosion,
    OrbitPickError,
    SchemaError,
    TooCloseToBoundary,
    UnsupportedVariant,
)
from .kernels import (
    ComposedInnerKernel,
    GramMatrix,
    OrbitGramKernel,
    SzegoKernel,
    boundary_gram_quadrature,
    dominance_check,
    gram,
    kernel_eval,
    orbit_block,
)
from .linalg import (
    HermitianMatrix,
    PsdReport,
    brute_force_psd_3x3,
    jacobi_eigenvalues,
    min_eig,
    psd_check,
)
from .mobius import (
    DiskAutomorphism,
    canonicalize,
    disk_point,
    iterate_cyclic,
    pseudo_hyperbolic,
)
from .orbits import (
    GroupPresentation,
    Orbit,
    OrbitEntry,
    blaschke_sum,
    cyclic_group,
    cyclic_orbit_weight,
    enumerate_orbit,
    generic_group,
    stabilizer_order_origin,
    z2z2_group,
    z2z2_normal_form,
)
from .pick import (
    ComposedInterpolant,
    FeasibilityReport,
    PickProblem,
    SchurInterpolant,
    amenable_average,
    assemble_orbit_pick,
    assemble_pick,
    evaluate_composed,
    evaluate_interpolant,
    feasibility,
    interpolate_composed,
    interpolate_disk,
    pick_norm,
)

__version__ = "0.1.0"

__all__ = [
    "AliasedNodes",
    "BlaschkeProduct",
    "CharacterReport",
    "ComposedInnerKernel",
    "ComposedInterpolant",
    "DiskAutomorphism",
    "DuplicateNodes",
    "DuplicatePoints",
    "FeasibilityReport",
    "GramMatrix",
    "GroupPresentation",
    "HermitianMatrix",
    "InconclusiveCharacter",
    "Infeasible",
    "InputError",
    "NoConvergence",
    "NotDiskAutomorphism",
    "NotInDisk",
    "NoTailBound",
    "NumericalError",
    "Orbit",
    "OrbitEntry",
    "OrbitExplosion",
    "OrbitGramKernel",
    "OrbitPickError",
    "PickProblem",
    "PsdReport",
    "SchemaError",
    "SchurInterpolant",
    "SzegoKernel",
    "TooCloseToBoundary",
    "UnsupportedVariant",
    "amenable_average",
    "assemble_orbit_pick",
    "assemble_pick",
    "blaschke_sum",
    "boundary_gram_quadrature",
    "brute_force_psd_3x3",
    "canonicalize",
    "character_of",
    "cyclic_group",
    "cyclic_orbit_weight",
    "disk_point",
    "dominance_check",
    "enumerate_orbit",
    "evaluate",
    "evaluate_composed",
    "evaluate_interpolant",
    "feasibility",
    "from_orbit",
    "generic_group",
    "gram",
    "interpolate_composed",
    "interpolate_disk",
    "iterate_cyclic",
    "jacobi_eigenvalues",
    "kernel_eval",
    "min_eig",
    "orbit_block",
    "pick_norm",
    "psd_check",
    "pseudo_hyperbolic",
    "stabilizer_order_origin",
    "z2z2_group",
    "z2z2_normal_form",
]
