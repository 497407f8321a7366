"""Small dense Hermitian linear algebra: validation, spectra and entropy.

Matrices handled here are tiny (at most 8x8), so the eigensolver is a
cyclic complex Jacobi iteration written in plain Python. It needs no LAPACK
and gives a residual guarantee that is easy to state and test.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NoConvergence, NotHermitian, NotPositive, TraceNotUnit

log = logging.getLogger(__name__)

STRICT_TOL = 1e-9
JACOBI_REL_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def as_complex_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a square, finite complex128 array.

    This is the package's ComplexMatrix: a plain ``numpy`` array that has
    passed the shape and finiteness checks.
    """
    a = np.array(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def hermiticity_violation(m) -> float:
    """Largest entrywise ``|M[i,j] - conj(M[j,i])|``."""
    a = np.asarray(m)
    return float(np.max(np.abs(a - a.conj().T)))


def hermitian_part(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    return (a + a.conj().T) / 2


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted in descending order."""

    eigenvalues: tuple
    sweeps: int = 0
    residual: float = 0.0

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    @property
    def total(self) -> float:
        return math.fsum(self.eigenvalues)


@dataclass(frozen=True)
class ValidationDiagnostics:
    herm_violation: float
    trace_deviation: float
    min_eigenvalue: float


@dataclass(frozen=True)
class DensityMatrix:
    """A matrix that passed :func:`validate_density`.

    ``matrix`` holds the symmetrized Hermitian part of the input, which is
    what every downstream computation uses.
    """

    matrix: np.ndarray
    herm_tol: float
    trace_tol: float
    psd_tol: float
    diagnostics: ValidationDiagnostics = field(compare=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)


def _jacobi_rotate(a, n, p, q):
    apq = a[p][q]
    mag = abs(apq)
    if mag == 0.0:
        return
    app = a[p][p].real
    aqq = a[q][q].real
    theta = (aqq - app) / (2.0 * mag)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
        if theta < 0.0:
            t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    # column q is first rephased by exp(-i arg a_pq) so the pivot becomes real
    phase = (apq / mag).conjugate()
    a[p][p] = complex(app - t * mag)
    a[q][q] = complex(aqq + t * mag)
    a[p][q] = a[q][p] = 0j
    for k in range(n):
        if k == p or k == q:
            continue
        akp = a[k][p]
        akq = a[k][q] * phase
        nkp = c * akp - s * akq
        nkq = s * akp + c * akq
        a[k][p] = nkp
        a[k][q] = nkq
        a[p][k] = nkp.conjugate()
        a[q][k] = nkq.conjugate()


def _off_norm_sq(a, n):
    total = 0.0
    for i in range(n):
        row = a[i]
        for j in range(i + 1, n):
            z = row[j]
            total += z.real * z.real + z.imag * z.imag
    return 2.0 * total


def eigvals_hermitian(m, rel_tol=JACOBI_REL_TOL, max_sweeps=JACOBI_MAX_SWEEPS) -> Spectrum:
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi sweeps.

    The input is symmetrized first. Sweeps continue until the off-diagonal
    Frobenius norm drops to ``rel_tol`` times the Frobenius norm of the
    matrix; :class:`NoConvergence` is raised if ``max_sweeps`` is reached
    with the residual still above that threshold.
    """
    h = hermitian_part(as_complex_matrix(m))
    n = h.shape[0]
    a = h.tolist()
    threshold_sq = (rel_tol * float(np.linalg.norm(h))) ** 2

    off_sq = _off_norm_sq(a, n)
    sweeps = 0
    while off_sq > threshold_sq:
        if sweeps == max_sweeps:
            raise NoConvergence(sweeps, math.sqrt(off_sq))
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, n, p, q)
        sweeps += 1
        off_sq = _off_norm_sq(a, n)

    values = sorted((a[i][i].real for i in range(n)), reverse=True)
    return Spectrum(tuple(values), sweeps=sweeps, residual=math.sqrt(off_sq))


def validate_density(m, herm_tol=STRICT_TOL, trace_tol=STRICT_TOL, psd_tol=STRICT_TOL) -> DensityMatrix:
    """Check that ``m`` is a density matrix within the given tolerances.

    Raises :class:`NotHermitian`, :class:`TraceNotUnit` or :class:`NotPositive`
    (in that order of precedence) carrying the size of the violation.
    """
    if min(herm_tol, trace_tol, psd_tol) < 0:
        raise ValueError("tolerances must be non-negative")
    a = as_complex_matrix(m)

    herm = hermiticity_violation(a)
    if herm > herm_tol:
        raise NotHermitian(herm)
    h = hermitian_part(a)

    trace_dev = abs(float(np.trace(h).real) - 1.0)
    if trace_dev > trace_tol:
        raise TraceNotUnit(trace_dev)

    lam_min = eigvals_hermitian(h).eigenvalues[-1]
    if lam_min < -psd_tol:
        raise NotPositive(-lam_min)

    return DensityMatrix(
        matrix=h,
        herm_tol=herm_tol,
        trace_tol=trace_tol,
        psd_tol=psd_tol,
        diagnostics=ValidationDiagnostics(herm, trace_dev, lam_min),
    )


@dataclass(frozen=True)
class EntropyResult:
    value: float
    spectrum: Spectrum
    clamped: tuple = ()


def entropy_of_spectrum(eigenvalues, psd_tol=STRICT_TOL):
    """Return ``(-sum(l ln l), clamped)`` with ``0 ln 0 = 0``.

    Eigenvalues in ``[-psd_tol, 0)`` are clamped to zero and returned in
    ``clamped``; anything more negative raises :class:`NotPositive`.
    """
    terms = []
    clamped = []
    for lam in eigenvalues:
        if lam < 0.0:
            if lam < -psd_tol:
                raise NotPositive(-lam)
            clamped.append(lam)
            continue
        if lam > 0.0:
            terms.append(-lam * math.log(lam))
    return math.fsum(terms), tuple(clamped)


def spectral_entropy(m, psd_tol=STRICT_TOL) -> EntropyResult:
    """``-Tr M ln M`` for any Hermitian positive semidefinite ``M``.

    Unlike :func:`von_neumann_entropy` the trace is not required to be one,
    which is needed for reductions that are not normalized states.
    """
    spec = eigvals_hermitian(m)
    value, clamped = entropy_of_spectrum(spec.eigenvalues, psd_tol)
    if clamped:
        log.info("clamped %d small negative eigenvalue(s) to zero: %s", len(clamped), clamped)
    # -0.0 never leaks into reports
    return EntropyResult(value + 0.0, spec, clamped)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy in nats of a validated density matrix."""
    value = spectral_entropy(rho.matrix, rho.psd_tol).value
    return max(value, 0.0)
