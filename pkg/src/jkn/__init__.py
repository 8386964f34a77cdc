"""Exact arithmetic for the simply laced root systems J(k,n).

J(k,n) lives in the sublattice of Z^n where the coordinate sum is
divisible by k, with the quadratic form q(x) = sum x_i^2 + (2-k) d^2
for d = (sum x_i)/k.  The package classifies lattice vectors (real,
almost real, or neither), enumerates orbit classes degree by degree,
computes fundamental weights for the finite types, and builds the named
root families that organize the infinite cases.
"""

from .classify import (
    Classification,
    Kind,
    ReductionStep,
    ReductionTrace,
    TerminalKind,
    bruteforce_positive_real_roots,
    classify,
    classify_entries,
    reduce_trace,
)
from .cluster import (
    Profile,
    canonical_profile,
    cyclic_permutations,
    is_canonical,
    is_weakly_column_decreasing,
    phi,
)
from .enumeration import (
    GenericOrbit,
    OrbitClass,
    OrbitKind,
    count_almost_real_roots,
    count_real_roots,
    enumerate_generic,
    enumerate_orbits,
    orbit_size,
)
from .errors import ContractError, NotInLatticeError, ResourceLimitError
from .families import (
    ManinVector,
    Series,
    WeightVector,
    affine_delta,
    affine_family,
    definiteness_margin,
    delta_family,
    dualize,
    extend,
    fundamental_weights,
    gamma,
    is_finite_type,
    minimal_support,
    sum_of_positive_roots,
    to_manin,
)
from .lattice import (
    GramMatrix,
    LatticeVector,
    RootCoefficients,
    SystemParams,
    basis_matrix,
    beta_vector,
    cartan_matrix,
    degree,
    from_root_basis,
    gram_e_matrix,
    inner,
    q,
    simple_root,
    to_root_basis,
    vector_from_entries,
)
from .weyl import (
    S_BETA,
    WeylWord,
    apply_s_beta,
    apply_s_i,
    apply_word,
    dec,
    format_word,
    parse_word,
    word_from,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "ContractError",
    "GenericOrbit",
    "GramMatrix",
    "Kind",
    "LatticeVector",
    "ManinVector",
    "NotInLatticeError",
    "OrbitClass",
    "OrbitKind",
    "Profile",
    "ReductionStep",
    "ReductionTrace",
    "ResourceLimitError",
    "RootCoefficients",
    "S_BETA",
    "Series",
    "SystemParams",
    "TerminalKind",
    "WeightVector",
    "WeylWord",
    "affine_delta",
    "affine_family",
    "apply_s_beta",
    "apply_s_i",
    "apply_word",
    "basis_matrix",
    "beta_vector",
    "bruteforce_positive_real_roots",
    "canonical_profile",
    "cartan_matrix",
    "classify",
    "classify_entries",
    "count_almost_real_roots",
    "count_real_roots",
    "cyclic_permutations",
    "dec",
    "definiteness_margin",
    "degree",
    "delta_family",
    "dualize",
    "enumerate_generic",
    "enumerate_orbits",
    "extend",
    "format_word",
    "from_root_basis",
    "fundamental_weights",
    "gamma",
    "gram_e_matrix",
    "inner",
    "is_canonical",
    "is_finite_type",
    "is_weakly_column_decreasing",
    "minimal_support",
    "orbit_size",
    "parse_word",
    "phi",
    "q",
    "reduce_trace",
    "simple_root",
    "sum_of_positive_roots",
    "to_manin",
    "to_root_basis",
    "vector_from_entries",
    "word_from",
]
