"""Subadditivity, strong subadditivity and the zero-position sweep.

All entropies are in nats. Mutual information is always formed from the
unrounded entropies as ``(sum of parts) - (whole)`` so report identities hold
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embedding import (
    DEFAULT_TRIPARTITE_ZEROS,
    PartitionScheme,
    ReductionMode,
    TripartiteReductions,
    ZeroEmbedding,
    embed_with_zeros,
    reduce_first_factor,
    reduce_second_factor,
    tripartite_reduce,
)
from .errors import NotPositive
from .hermlin import STRICT_TOL, DensityMatrix, spectral_entropy, von_neumann_entropy

NUM_TOL = 1e-9

HOLDS = "holds"
VIOLATED = "violated"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class SubadditivityReport:
    s_total: float
    s_first: float
    s_second: float
    s_sum: float
    mutual_info: float
    margin: float
    holds: bool
    scheme: str = ""
    zero_position: int | None = None
    clamped: tuple = ()


@dataclass(frozen=True)
class SSAReport:
    s_total: float
    s_r2: float | None
    s_12: float | None
    s_23: float | None
    lhs: float | None
    rhs: float | None
    mutual_info: float | None
    holds: bool | None
    status: str
    mode: str
    reduction_traces: dict = field(default_factory=dict)
    offending_eigenvalue: float | None = None
    zero_positions: tuple = DEFAULT_TRIPARTITE_ZEROS
    clamped: tuple = ()


@dataclass(frozen=True)
class SweepRow:
    zero_position: int
    s_total: float
    s_bp1: float
    s_bp2: float
    i_bp1: float
    i_bp2: float

    @property
    def label(self) -> str:
        return f"({self.zero_position};{self.zero_position})"


@dataclass(frozen=True)
class SweepTable:
    rows: tuple

    def column(self, name) -> list:
        return [getattr(r, name) for r in self.rows]


def subadditivity_from_entropies(s_total, s_first, s_second, num_tol=NUM_TOL, **extra) -> SubadditivityReport:
    s_sum = s_first + s_second
    margin = s_sum - s_total
    return SubadditivityReport(
        s_total=s_total,
        s_first=s_first,
        s_second=s_second,
        s_sum=s_sum,
        mutual_info=margin,
        margin=margin,
        holds=margin >= -num_tol,
        **extra,
    )


def subadditivity_from_reductions(s_total, first, second, num_tol=NUM_TOL, psd_tol=STRICT_TOL,
                                  **extra) -> SubadditivityReport:
    """Report built from already reduced matrices and a known total entropy.

    Used when only the reduced states are available, e.g. matrices copied
    from a publication together with the entropy it quotes for the whole.
    """
    e1 = spectral_entropy(first, psd_tol)
    e2 = spectral_entropy(second, psd_tol)
    return subadditivity_from_entropies(
        s_total, e1.value, e2.value, num_tol, clamped=e1.clamped + e2.clamped, **extra
    )


def check_subadditivity(rho5: DensityMatrix, zero_position=6, scheme=PartitionScheme.QUBIT_QUTRIT,
                        num_tol=NUM_TOL) -> SubadditivityReport:
    """Pad to 6x6 with a zero row/column at ``zero_position`` and test S <= S1 + S2."""
    scheme = PartitionScheme(scheme)
    emb = ZeroEmbedding(rho5.dim, 6, (zero_position,))
    rho6 = embed_with_zeros(rho5, emb)
    total = spectral_entropy(rho6, rho5.psd_tol)
    return subadditivity_from_reductions(
        total.value,
        reduce_first_factor(rho6, scheme),
        reduce_second_factor(rho6, scheme),
        num_tol,
        rho5.psd_tol,
        scheme=scheme.name,
        zero_position=zero_position,
    )


def strong_subadditivity_from_reductions(s_total, red: TripartiteReductions, num_tol=NUM_TOL,
                                         psd_tol=STRICT_TOL,
                                         zero_positions=DEFAULT_TRIPARTITE_ZEROS) -> SSAReport:
    """Test ``S + S(R2) <= S(rho12) + S(rho23)`` for given reductions.

    If a reduction has an eigenvalue below ``-psd_tol`` its entropy is
    undefined; the report is then marked indeterminate and carries that
    eigenvalue instead of a verdict.
    """
    common = dict(
        s_total=s_total,
        mode=red.mode.value,
        reduction_traces=red.traces(),
        zero_positions=tuple(zero_positions),
    )
    try:
        e_r2 = spectral_entropy(red.r2, psd_tol)
        e_12 = spectral_entropy(red.rho12, psd_tol)
        e_23 = spectral_entropy(red.rho23, psd_tol)
    except NotPositive as exc:
        return SSAReport(
            s_r2=None, s_12=None, s_23=None, lhs=None, rhs=None, mutual_info=None,
            holds=None, status=INDETERMINATE, offending_eigenvalue=-exc.magnitude, **common,
        )
    lhs = s_total + e_r2.value
    rhs = e_12.value + e_23.value
    gap = rhs - lhs
    holds = gap >= -num_tol
    return SSAReport(
        s_r2=e_r2.value,
        s_12=e_12.value,
        s_23=e_23.value,
        lhs=lhs,
        rhs=rhs,
        mutual_info=gap,
        holds=holds,
        status=HOLDS if holds else VIOLATED,
        clamped=e_r2.clamped + e_12.clamped + e_23.clamped,
        **common,
    )


def check_strong_subadditivity(rho5: DensityMatrix, mode=ReductionMode.PAPER_FAITHFUL, num_tol=NUM_TOL,
                               zero_positions=DEFAULT_TRIPARTITE_ZEROS) -> SSAReport:
    """Pad to 8x8 (three qubits) and test strong subadditivity.

    The entropy of the whole is taken from the 5x5 source; zero padding
    only adds zero eigenvalues so it equals that of the 8x8.
    """
    mode = ReductionMode(mode)
    rho8 = embed_with_zeros(rho5, ZeroEmbedding(rho5.dim, 8, zero_positions))
    red = tripartite_reduce(rho8, mode, zero_positions)
    return strong_subadditivity_from_reductions(
        von_neumann_entropy(rho5), red, num_tol, rho5.psd_tol, zero_positions
    )


def _sweep_row(rho5, k):
    first = check_subadditivity(rho5, k, PartitionScheme.QUBIT_QUTRIT)
    second = check_subadditivity(rho5, k, PartitionScheme.QUTRIT_QUBIT)
    # both reports embed identically, so s_total agrees bit-for-bit
    return SweepRow(
        zero_position=k,
        s_total=first.s_total,
        s_bp1=first.s_sum,
        s_bp2=second.s_sum,
        i_bp1=first.mutual_info,
        i_bp2=second.mutual_info,
    )


def sweep_zero_position(rho5: DensityMatrix, positions=range(1, 7)) -> SweepTable:
    """One row per zero-row position with both qubit/qutrit orderings."""
    if rho5.dim != 5:
        raise ValueError(f"the sweep expects a 5x5 state, got {rho5.dim}x{rho5.dim}")
    return SweepTable(tuple(_sweep_row(rho5, k) for k in positions))

