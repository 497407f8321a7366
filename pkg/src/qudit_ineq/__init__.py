"""Entropic inequalities for single-qudit density matrices.

A qudit state is padded with zero rows/columns so that it can be read as a
qubit x qutrit or three-qubit state; subadditivity and strong subadditivity
are then checked on the resulting artificial subsystems.
"""

from .embedding import (
    PartitionScheme,
    ReductionMode,
    TripartiteReductions,
    ZeroEmbedding,
    embed_with_zeros,
    partial_trace,
    reduce_first_factor,
    reduce_second_factor,
    strip_zeros,
    tripartite_reduce,
)
from .errors import (
    DimensionMismatch,
    EmptyKeepSet,
    InvalidDimension,
    NoConvergence,
    NotHermitian,
    NotPositive,
    ParseError,
    TraceNotUnit,
)
from .hermlin import (
    DensityMatrix,
    Spectrum,
    eigvals_hermitian,
    spectral_entropy,
    validate_density,
    von_neumann_entropy,
)
from .inequalities import (
    SSAReport,
    SubadditivityReport,
    SweepRow,
    SweepTable,
    check_strong_subadditivity,
    check_subadditivity,
    strong_subadditivity_from_reductions,
    subadditivity_from_reductions,
    sweep_zero_position,
)
from .randstates import StateKind, StateRecipe, generate

__version__ = "0.1.0"
