"""Seeded random density matrices for property tests and demos.

Reproducibility contract: uniform variates come from the PCG64 bit
generator (PCG-XSL-RR 128/64), seeded through NumPy's ``SeedSequence``. Only
its raw 64-bit output stream is used; that stream is fixed by the algorithm
and does not depend on NumPy's distribution code. A raw word ``x`` maps to
the double ``(x >> 11) * 2**-53`` in ``[0, 1)``. Normal variates use the
Marsaglia polar method, exponential variates use ``-log(1 - u)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimension
from .hermlin import STRICT_TOL, DensityMatrix, validate_density

_TWO_POW_M53 = 2.0 ** -53


class StateKind(enum.Enum):
    GINIBRE_MIXED = "ginibre"
    HAAR_PURE = "pure"
    PRODUCT = "product"
    DIAGONAL_DIRICHLET = "diagonal"


class UniformStream:
    """Uniform doubles in ``[0, 1)`` from a PCG64 raw stream."""

    def __init__(self, seed: int):
        if seed < 0 or seed >= 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self._bits = np.random.PCG64(seed)

    def uniform(self) -> float:
        return (int(self._bits.random_raw()) >> 11) * _TWO_POW_M53

    def normal_pair(self):
        while True:
            u = 2.0 * self.uniform() - 1.0
            v = 2.0 * self.uniform() - 1.0
            s = u * u + v * v
            if 0.0 < s < 1.0:
                f = math.sqrt(-2.0 * math.log(s) / s)
                return u * f, v * f

    def complex_normals(self, n) -> np.ndarray:
        """``n`` standard complex Gaussians (unit variance per component)."""
        out = np.empty(n, dtype=np.complex128)
        for i in range(n):
            re, im = self.normal_pair()
            out[i] = complex(re, im)
        return out

    def exponential(self) -> float:
        return -math.log1p(-self.uniform())


@dataclass(frozen=True)
class StateRecipe:
    kind: StateKind
    dim: int | None = None
    factor_dims: tuple | None = None
    seed: int | tuple = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", StateKind(self.kind))
        if self.factor_dims is not None:
            object.__setattr__(self, "factor_dims", tuple(int(d) for d in self.factor_dims))


def ginibre_matrix(dim, seed) -> np.ndarray:
    stream = UniformStream(seed)
    g = stream.complex_normals(dim * dim).reshape(dim, dim)
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def haar_pure_matrix(dim, seed) -> np.ndarray:
    psi = UniformStream(seed).complex_normals(dim)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def dirichlet_diagonal_matrix(dim, seed) -> np.ndarray:
    stream = UniformStream(seed)
    w = np.array([stream.exponential() for _ in range(dim)])
    return np.diag(w / w.sum()).astype(np.complex128)


def product_matrix(factor_dims, seeds) -> np.ndarray:
    out = np.ones((1, 1), dtype=np.complex128)
    for d, s in zip(factor_dims, seeds):
        out = np.kron(out, ginibre_matrix(d, s))
    return out


def _factor_seeds(recipe):
    if isinstance(recipe.seed, (tuple, list)):
        if len(recipe.seed) != len(recipe.factor_dims):
            raise ValueError("need one seed per factor")
        return tuple(int(s) for s in recipe.seed)
    return tuple(int(recipe.seed) + i for i in range(len(recipe.factor_dims)))


def generate_matrix(recipe: StateRecipe) -> np.ndarray:
    if recipe.kind is StateKind.PRODUCT:
        dims = recipe.factor_dims
        if not dims or any(d < 2 for d in dims):
            raise InvalidDimension(f"product factors must have dimension >= 2, got {dims}")
        return product_matrix(dims, _factor_seeds(recipe))

    dim = recipe.dim
    if dim is None or dim < 2:
        raise InvalidDimension(f"dim must be >= 2, got {dim}")
    seed = int(recipe.seed)
    if recipe.kind is StateKind.GINIBRE_MIXED:
        return ginibre_matrix(dim, seed)
    if recipe.kind is StateKind.HAAR_PURE:
        return haar_pure_matrix(dim, seed)
    return dirichlet_diagonal_matrix(dim, seed)


def generate(recipe: StateRecipe, tol=STRICT_TOL) -> DensityMatrix:
    """Build the state described by ``recipe`` and validate it."""
    return validate_density(generate_matrix(recipe), tol, tol, tol)


def ginibre_ensemble(n, dim=5, first_seed=0):
    """``n`` Ginibre states with consecutive seeds starting at ``first_seed``."""
    return [generate(StateRecipe(StateKind.GINIBRE_MIXED, dim=dim, seed=first_seed + i)) for i in range(n)]


def random_unitary(dim, seed) -> np.ndarray:
    """Unitary from the QR factorization of a seeded complex Gaussian matrix."""
    g = UniformStream(seed).complex_normals(dim * dim).reshape(dim, dim)
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    return q * (d / np.abs(d))
