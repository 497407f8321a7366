"""Zero-padding embeddings, composite index maps and subsystem reductions.

A single qudit has no tensor-product structure. Padding its density matrix
with zero rows and columns up to dimension 6 (or 8) lets the padded space be
read as qubit x qutrit (or three qubits), after which ordinary reduced states
can be formed.

Indices in public signatures are 1-based, matching how the matrices are
written on paper. Composite indices are row-major: the first factor is the
most significant digit.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, EmptyKeepSet
from .hermlin import DensityMatrix, as_complex_matrix

DEFAULT_TRIPARTITE_ZEROS = (1, 5, 8)


class PartitionScheme(enum.Enum):
    QUBIT_QUTRIT = (2, 3)
    QUTRIT_QUBIT = (3, 2)
    THREE_QUBIT = (2, 2, 2)

    @property
    def factor_dims(self) -> tuple:
        return self.value

    @property
    def dim(self) -> int:
        return math.prod(self.value)


class ReductionMode(enum.Enum):
    PAPER_FAITHFUL = "paper"
    CANONICAL = "canonical"


@dataclass(frozen=True)
class ZeroEmbedding:
    source_dim: int
    target_dim: int
    zero_positions: tuple

    def __post_init__(self):
        positions = tuple(sorted(int(k) for k in self.zero_positions))
        object.__setattr__(self, "zero_positions", positions)
        if self.target_dim <= self.source_dim:
            raise ValueError("target_dim must exceed source_dim")
        if len(positions) != self.target_dim - self.source_dim:
            raise ValueError(
                f"need {self.target_dim - self.source_dim} zero positions, got {len(positions)}"
            )
        if len(set(positions)) != len(positions):
            raise ValueError(f"zero positions must be distinct: {positions}")
        if positions and (positions[0] < 1 or positions[-1] > self.target_dim):
            raise ValueError(f"zero positions must lie in [1, {self.target_dim}]")

    @property
    def kept_indices(self) -> list:
        """0-based target indices that carry the source rows, in order."""
        zeros = {k - 1 for k in self.zero_positions}
        return [i for i in range(self.target_dim) if i not in zeros]


def embed_with_zeros(rho, emb: ZeroEmbedding) -> np.ndarray:
    """Insert zero rows/columns at ``emb.zero_positions``.

    The remaining minor of the result is ``rho`` in its original order.
    """
    m = rho.matrix if isinstance(rho, DensityMatrix) else as_complex_matrix(rho)
    if m.shape[0] != emb.source_dim:
        raise DimensionMismatch(f"matrix is {m.shape[0]}x{m.shape[0]}, embedding expects {emb.source_dim}")
    out = np.zeros((emb.target_dim, emb.target_dim), dtype=np.complex128)
    keep = emb.kept_indices
    out[np.ix_(keep, keep)] = m
    return out


def strip_zeros(m, emb: ZeroEmbedding) -> np.ndarray:
    """Inverse of :func:`embed_with_zeros`: drop the padded rows/columns."""
    a = as_complex_matrix(m)
    if a.shape[0] != emb.target_dim:
        raise DimensionMismatch(f"matrix is {a.shape[0]}x{a.shape[0]}, embedding targets {emb.target_dim}")
    keep = emb.kept_indices
    return a[np.ix_(keep, keep)].copy()


def composite_index(digits, factor_dims) -> int:
    """0-based flat index of the multi-index ``digits``."""
    idx = 0
    for d, n in zip(digits, factor_dims):
        if not 0 <= d < n:
            raise ValueError(f"digit {d} out of range for factor of dimension {n}")
        idx = idx * n + d
    return idx


def composite_digits(index, factor_dims) -> tuple:
    """Inverse of :func:`composite_index`."""
    digits = []
    for n in reversed(factor_dims):
        index, d = divmod(index, n)
        digits.append(d)
    if index:
        raise ValueError("index out of range")
    return tuple(reversed(digits))


def partial_trace(m, factor_dims, keep) -> np.ndarray:
    """Reduced matrix on the factors in ``keep`` (1-based factor numbers).

    Computed by direct summation over multi-indices, which keeps it
    independent of the block formulas it is used to check.
    """
    a = as_complex_matrix(m)
    factor_dims = tuple(int(d) for d in factor_dims)
    if a.shape[0] != math.prod(factor_dims):
        raise DimensionMismatch(f"matrix dimension {a.shape[0]} != product of {factor_dims}")
    keep = sorted(set(keep))
    if not keep:
        raise EmptyKeepSet("keep must name at least one factor")
    if keep[0] < 1 or keep[-1] > len(factor_dims):
        raise ValueError(f"factor numbers must lie in [1, {len(factor_dims)}]")

    kept = [k - 1 for k in keep]
    traced = [i for i in range(len(factor_dims)) if i not in kept]
    kept_dims = [factor_dims[i] for i in kept]
    traced_dims = [factor_dims[i] for i in traced]

    def full_index(kept_digits, traced_digits):
        digits = [0] * len(factor_dims)
        for i, d in zip(kept, kept_digits):
            digits[i] = d
        for i, d in zip(traced, traced_digits):
            digits[i] = d
        return composite_index(digits, factor_dims)

    out_dim = math.prod(kept_dims)
    out = np.zeros((out_dim, out_dim), dtype=np.complex128)
    kept_range = list(itertools.product(*(range(n) for n in kept_dims)))
    traced_range = list(itertools.product(*(range(n) for n in traced_dims)))
    for r, row_digits in enumerate(kept_range):
        for c, col_digits in enumerate(kept_range):
            out[r, c] = sum(
                a[full_index(row_digits, t), full_index(col_digits, t)] for t in traced_range
            )
    return out


def _check_bipartite(rho6, scheme):
    a = as_complex_matrix(rho6)
    if scheme not in (PartitionScheme.QUBIT_QUTRIT, PartitionScheme.QUTRIT_QUBIT):
        raise ValueError(f"{scheme.name} is not a bipartite scheme")
    if a.shape[0] != scheme.dim:
        raise DimensionMismatch(f"expected a {scheme.dim}x{scheme.dim} matrix, got {a.shape[0]}")
    return a


def _block(a, inner, i, j):
    return a[i * inner:(i + 1) * inner, j * inner:(j + 1) * inner]


def reduce_first_factor(rho6, scheme: PartitionScheme) -> np.ndarray:
    """Matrix of block traces: entry ``(i, j)`` is ``Tr`` of block ``(i, j)``.

    For qubit x qutrit the 6x6 is split into a 2x2 grid of 3x3 blocks, for
    qutrit x qubit into a 3x3 grid of 2x2 blocks.
    """
    a = _check_bipartite(rho6, scheme)
    outer, inner = scheme.factor_dims
    out = np.empty((outer, outer), dtype=np.complex128)
    for i in range(outer):
        for j in range(outer):
            out[i, j] = np.trace(_block(a, inner, i, j))
    return out


def reduce_second_factor(rho6, scheme: PartitionScheme) -> np.ndarray:
    """Sum of the diagonal blocks of the same block grid."""
    a = _check_bipartite(rho6, scheme)
    outer, inner = scheme.factor_dims
    out = np.zeros((inner, inner), dtype=np.complex128)
    for i in range(outer):
        out += _block(a, inner, i, i)
    return out


@dataclass(frozen=True)
class TripartiteReductions:
    rho12: np.ndarray
    rho23: np.ndarray
    r2: np.ndarray
    mode: ReductionMode

    def traces(self) -> dict:
        return {
            "rho12": float(np.trace(self.rho12).real),
            "rho23": float(np.trace(self.rho23).real),
            "r2": float(np.trace(self.r2).real),
        }


def _paper_formulas(r):
    """Entry-by-entry joint and single-qubit matrices for the {1,5,8} layout.

    ``r`` is the 5x5 source. The joint matrix of qubits 1,2 is the ordinary
    trace over qubit 3. The 2,3 matrix instead adds the off-diagonal blocks
    of qubit 1 as well as the diagonal ones, so it carries the cross terms
    r14+r41, r25+r52, r43, ... and its trace is generally not one. The
    single-qubit matrix is the trace of that 2,3 matrix over qubit 3.
    """
    def p(i, j):
        return r[i - 1, j - 1]

    rho12 = np.array([
        [p(1, 1), p(1, 3), p(1, 4), 0],
        [p(3, 1), p(2, 2) + p(3, 3), p(3, 4), p(2, 5)],
        [p(4, 1), p(4, 3), p(4, 4), 0],
        [0, p(5, 2), 0, p(5, 5)],
    ], dtype=np.complex128)

    rho23 = np.zeros((4, 4), dtype=np.complex128)
    rho23[1, 1:] = [
        p(1, 1) + p(1, 4) + p(4, 1) + p(4, 4),
        p(1, 2) + p(1, 5) + p(4, 2) + p(4, 5),
        p(1, 3) + p(4, 3),
    ]
    rho23[2, 1:] = [
        p(2, 1) + p(2, 4) + p(5, 1) + p(5, 4),
        p(2, 2) + p(2, 5) + p(5, 2) + p(5, 5),
        p(2, 3) + p(5, 3),
    ]
    rho23[3, 1:] = [p(3, 1) + p(3, 4), p(3, 2) + p(3, 5), p(3, 3)]

    r2 = np.array([
        [p(1, 1) + p(1, 4) + p(4, 1) + p(4, 4), p(1, 3) + p(4, 3)],
        [p(3, 1) + p(3, 4), p(2, 2) + p(3, 3) + p(2, 5) + p(5, 2) + p(5, 5)],
    ], dtype=np.complex128)
    return rho12, rho23, r2


def tripartite_reduce(rho8, mode=ReductionMode.PAPER_FAITHFUL,
                      zero_positions=DEFAULT_TRIPARTITE_ZEROS) -> TripartiteReductions:
    """Joint matrices of qubits (1,2) and (2,3) and the matrix of qubit 2.

    ``CANONICAL`` uses :func:`partial_trace`. ``PAPER_FAITHFUL`` applies the
    published entry formulas, which are only defined for the source embedded
    with zeros at positions 1, 5 and 8.
    """
    a = as_complex_matrix(rho8)
    if a.shape[0] != 8:
        raise DimensionMismatch(f"expected an 8x8 matrix, got {a.shape[0]}x{a.shape[0]}")
    mode = ReductionMode(mode)
    if mode is ReductionMode.CANONICAL:
        dims = PartitionScheme.THREE_QUBIT.factor_dims
        return TripartiteReductions(
            rho12=partial_trace(a, dims, {1, 2}),
            rho23=partial_trace(a, dims, {2, 3}),
            r2=partial_trace(a, dims, {2}),
            mode=mode,
        )
    if tuple(sorted(zero_positions)) != DEFAULT_TRIPARTITE_ZEROS:
        raise ValueError("the paper-faithful formulas need zero positions (1, 5, 8)")
    source = strip_zeros(a, ZeroEmbedding(5, 8, DEFAULT_TRIPARTITE_ZEROS))
    rho12, rho23, r2 = _paper_formulas(source)
    return TripartiteReductions(rho12=rho12, rho23=rho23, r2=r2, mode=mode)
