"""Fourier-Stieltjes transforms of vector measures through induced representations, on finite groups."""
from .catalog import WEIL_PAIRS, builtin_group, builtin_instance, catalog_rep, instance_names, irrep_names
from .errors import (
    GroupLawError,
    InvalidP,
    NotAssociative,
    NotHomomorphism,
    NotIrreducibleWarning,
    NotLatinSquare,
    NotSubgroup,
    NotUnitary,
    PreconditionNotIrreducible,
    RepresentationError,
    ShapeMismatch,
)
from .group import (
    CosetStructure,
    FiniteGroup,
    HaarWeights,
    Subgroup,
    coset_decompose,
    haar_weights,
    integrate,
    make_subgroup,
    subgroup_closure,
    validate_group,
    weil_check,
)
from .induce import (
    InducedRep,
    alpha,
    c_tensor,
    c_tensor_all,
    coefficient_integrals,
    induce,
    induced_coefficient,
    induced_orthogonality_check,
    project_equivariant,
)
from .reps import (
    UnitaryRep,
    character,
    equivalence_check,
    irreducibility_index,
    is_irreducible,
    matrix_coefficient,
    schur_check,
    validate_unitary_rep,
)
from .spaces import membership, monotonicity_check, s2_inner, snorm, truncate
from .transform import (
    SpectralBlock,
    SpectralField,
    VectorFunction,
    VectorMeasure,
    fourier_field,
    fourier_function,
    fourier_stieltjes,
    norm_bound_check,
    spectral_decompose,
    synthesize,
)

__version__ = "0.1.0"
