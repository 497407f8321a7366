from importlib import resources

import numpy as np
import pytest

from qudit_ineq.matrixio import read_json_object, read_matrix
from qudit_ineq.randstates import ginibre_ensemble

DATA = resources.files("qudit_ineq") / "data"

ENSEMBLE_SIZE = 1000


def data_path(name):
    return DATA / name


def load_printed(name):
    return read_matrix(data_path(name))


@pytest.fixture(scope="session")
def ensemble():
    """1000 seeded Ginibre 5x5 states, seeds 0..999."""
    return ginibre_ensemble(ENSEMBLE_SIZE, dim=5, first_seed=0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def ssa_bundle():
    return read_json_object(data_path("ssa_printed.json"))


def random_state(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return rho / np.trace(rho).real


def labelled(n=5):
    """Matrix whose entry (i, j) (1-based) is i*10 + j + 1j*(i*100 + j*1000).

    Every entry is distinct, so sums of entries identify exactly which
    source entries a formula picked up.
    """
    i, j = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    return (10.0 * i + j) + 1j * (100.0 * i + 1000.0 * j)


def r(m, i, j):
    return m[i - 1, j - 1]


def einsum_partial_trace(m, dims, keep):
    """Second oracle: tensor reshape + einsum."""
    k = len(dims)
    t = m.reshape(tuple(dims) * 2)
    letters = "abcdefgh"
    rows = letters[:k]
    cols = "".join(rows[i] if (i + 1) not in keep else letters[k + i] for i in range(k))
    out = "".join(rows[i - 1] for i in sorted(keep)) + "".join(cols[i - 1] for i in sorted(keep))
    red = np.einsum(f"{rows}{cols}->{out}", t)
    d = int(np.prod([dims[i - 1] for i in keep]))
    return red.reshape(d, d)


def cross_terms(m):
    """Paper-formula minus canonical, written out symbolically."""
    d23 = np.zeros((4, 4), dtype=complex)
    d23[1, 1] = r(m, 1, 4) + r(m, 4, 1)
    d23[1, 2] = r(m, 1, 5) + r(m, 4, 2)
    d23[2, 1] = r(m, 2, 4) + r(m, 5, 1)
    d23[1, 3] = r(m, 4, 3)
    d23[3, 1] = r(m, 3, 4)
    d23[2, 2] = r(m, 2, 5) + r(m, 5, 2)
    d23[2, 3] = r(m, 5, 3)
    d23[3, 2] = r(m, 3, 5)
    d2 = np.array([
        [r(m, 1, 4) + r(m, 4, 1), r(m, 4, 3)],
        [r(m, 3, 4), r(m, 2, 5) + r(m, 5, 2)],
    ])
    return d23, d2
