"""Regenerate the files in src/qudit_ineq/data/.

Published matrices are stored exactly as printed (truncated values kept).
``experimental_reconstructed.json`` is a least-squares estimate of the full
5x5 state consistent with all printed reductions; the measured matrix itself
was only shown as a bar chart.

    python tools/make_fixtures.py
"""

from pathlib import Path

import numpy as np

from qudit_ineq.embedding import (
    PartitionScheme,
    ReductionMode,
    ZeroEmbedding,
    embed_with_zeros,
    reduce_first_factor,
    reduce_second_factor,
    tripartite_reduce,
)
from qudit_ineq.matrixio import bundle_to_json, dumps_dm_json

DATA = Path(__file__).resolve().parents[1] / "src" / "qudit_ineq" / "data"

RHO1 = [[0.985, 8.3e-5 - 2.7e-4j], [8.3e-5 + 2.7e-4j, 0.006]]
RHO2 = [
    [0.96, 8.8e-4 - 0.003j, 0.008 - 0.018j],
    [8.8e-4 + 0.003j, 0.004, -7.6e-4 - 2.9e-4j],
    [0.008 + 0.018j, -7.6e-4 + 2.9e-4j, 0.026],
]
RHO1_TILDE = [
    [0.96, 0.008 - 0.018j, -0.006 - 8.6e-4j],
    [0.008 + 0.018j, 0.028, 0.005 - 0.007j],
    [-0.006 + 8.6e-4j, 0.005 + 0.007j, 0.004],
]
RHO2_TILDE = [[0.99, 0.005 - 0.002j], [0.005 + 0.002j, 0.002]]
RHO12 = [
    [0.959, 0.008 - 0.018j, 0.0002 - 0.0004j, 0],
    [0.008 + 0.018j, 0.026, 0.003 + 0.0013j, -0.0001 + 0.0002j],
    [0.0002 + 0.0004j, 0.003 - 0.0013j, 0.0018, 0],
    [0, -0.0001 - 0.0002j, 0, 0.004],
]
RHO23 = [
    [0, 0, 0, 0],
    [0, 0.961, -0.005 - 0.004j, 0.012 - 0.019j],
    [0, -0.005 + 0.004j, 0.004, 0.004 + 0.0064j],
    [0, 0.012 + 0.019j, 0.004 - 0.0064j, 0.026],
]
R2 = [[0.961, 0.012 - 0.019j], [0.012 + 0.019j, 0.030]]

RHO23_NOTE = (
    "Entry (2,2) is printed as '0.961 i' in the source; an imaginary diagonal "
    "entry is impossible for a Hermitian matrix, so it is stored as 0.961."
)

TABLE1 = """\
# Published entropies (nats) versus zero-row position.
# S_bp1 / S_bp2 are sums of the two subsystem entropies for the qubit x qutrit
# and qutrit x qubit orderings; I_bpX = S_bpX - S_rho.
# Rows (2;2) and (3;3) look swapped between the bp1/bp2 columns relative to the
# other rows. Without the full 5x5 matrix this cannot be re-derived; kept as printed.
zero_position,s_rho,s_bp1,s_bp2,i_bp1,i_bp2
1,0.1583,0.300,0.180,0.1418,0.0224
2,0.1583,0.1965,0.3040,0.0383,0.1457
3,0.1583,0.1968,0.3042,0.0386,0.1459
4,0.1583,0.2001,0.1987,0.0418,0.0404
5,0.1583,0.1873,0.2059,0.0291,0.0477
6,0.1583,0.1996,0.1768,0.0413,0.0185
"""


def _hermitian_basis(n):
    basis = []
    for i in range(n):
        e = np.zeros((n, n), complex)
        e[i, i] = 1
        basis.append(e)
    for i in range(n):
        for j in range(i + 1, n):
            e = np.zeros((n, n), complex)
            e[i, j] = e[j, i] = 1
            basis.append(e)
            e = np.zeros((n, n), complex)
            e[i, j], e[j, i] = 1j, -1j
            basis.append(e)
    return basis


def _printed_reductions(r):
    m6 = embed_with_zeros(r, ZeroEmbedding(5, 6, (6,)))
    m8 = embed_with_zeros(r, ZeroEmbedding(5, 8, (1, 5, 8)))
    red = tripartite_reduce(m8, ReductionMode.PAPER_FAITHFUL)
    return [
        reduce_first_factor(m6, PartitionScheme.QUBIT_QUTRIT),
        reduce_second_factor(m6, PartitionScheme.QUBIT_QUTRIT),
        reduce_first_factor(m6, PartitionScheme.QUTRIT_QUBIT),
        reduce_second_factor(m6, PartitionScheme.QUTRIT_QUBIT),
        red.rho12,
        red.rho23,
        red.r2,
    ]


def reconstruct():
    """Least-squares Hermitian 5x5 matching every printed reduction, unit trace."""
    targets = [np.array(t, complex) for t in (RHO1, RHO2, RHO1_TILDE, RHO2_TILDE, RHO12, RHO23, R2)]

    def flat(ms):
        v = np.concatenate([m.ravel() for m in ms])
        return np.concatenate([v.real, v.imag])

    basis = _hermitian_basis(5)
    a = np.array([flat(_printed_reductions(b)) for b in basis]).T
    b = flat(targets)
    # heavily weighted unit-trace row
    a = np.vstack([a, [100 * np.trace(e).real for e in basis]])
    b = np.append(b, 100.0)
    x = np.linalg.lstsq(a, b, rcond=None)[0]
    rho = sum(c * e for c, e in zip(x, basis))
    w, v = np.linalg.eigh(rho)
    rho = (v * np.clip(w, 0, None)) @ v.conj().T
    rho = (rho + rho.conj().T) / 2
    return rho / np.trace(rho).real


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    printed = {
        "rho1_printed.json": (RHO1, "qubit factor, qubit x qutrit split, zero row at 6"),
        "rho2_printed.json": (RHO2, "qutrit factor, qubit x qutrit split, zero row at 6"),
        "rho1_tilde_printed.json": (RHO1_TILDE, "qutrit factor, qutrit x qubit split, zero row at 6"),
        "rho2_tilde_printed.json": (RHO2_TILDE, "qubit factor, qutrit x qubit split, zero row at 6"),
        "rho12_printed.json": (RHO12, "joint matrix of qubits 1,2, zeros at 1,5,8"),
        "rho23_printed.json": (RHO23, RHO23_NOTE),
        "r2_printed.json": (R2, "matrix of qubit 2, zeros at 1,5,8"),
    }
    for name, (m, note) in printed.items():
        (DATA / name).write_text(dumps_dm_json(np.array(m, complex), note))

    (DATA / "bipartite_first_printed.json").write_text(bundle_to_json(
        "bipartite", {"first": np.array(RHO1, complex), "second": np.array(RHO2, complex)},
        note="printed reductions, qubit x qutrit, zero row at 6; published S_rho = 0.1583",
        scheme="QUBIT_QUTRIT", zero_position=6,
    ))
    (DATA / "bipartite_second_printed.json").write_text(bundle_to_json(
        "bipartite", {"first": np.array(RHO1_TILDE, complex), "second": np.array(RHO2_TILDE, complex)},
        note="printed reductions, qutrit x qubit, zero row at 6; published S_rho = 0.1583",
        scheme="QUTRIT_QUBIT", zero_position=6,
    ))
    (DATA / "ssa_printed.json").write_text(bundle_to_json(
        "tripartite",
        {"rho12": np.array(RHO12, complex), "rho23": np.array(RHO23, complex), "r2": np.array(R2, complex)},
        note="printed tripartite reductions (paper formulas); " + RHO23_NOTE
        + " Published S_rho = 0.1583.",
        mode="paper",
    ))
    (DATA / "table1.csv").write_text(TABLE1)
    (DATA / "mixed.json").write_text(dumps_dm_json(np.eye(5) / 5, "maximally mixed 5-level state"))
    (DATA / "experimental_reconstructed.json").write_text(dumps_dm_json(
        reconstruct(),
        "Least-squares 5x5 consistent with all printed reductions (max deviation ~0.005), "
        "PSD-projected and trace-normalized. Not the measured matrix; its entropy "
        "(~0.192) differs from the published 0.1583.",
    ))


if __name__ == "__main__":
    main()
