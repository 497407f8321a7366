import numpy as np
import pytest

from conftest import cross_terms, einsum_partial_trace, labelled, r, random_state
from qudit_ineq.embedding import (
    PartitionScheme,
    ReductionMode,
    ZeroEmbedding,
    composite_digits,
    composite_index,
    embed_with_zeros,
    partial_trace,
    reduce_first_factor,
    reduce_second_factor,
    strip_zeros,
    tripartite_reduce,
)
from qudit_ineq.errors import DimensionMismatch, EmptyKeepSet
from qudit_ineq.hermlin import eigvals_hermitian, spectral_entropy, validate_density

QQ = PartitionScheme.QUBIT_QUTRIT
TQ = PartitionScheme.QUTRIT_QUBIT
PAPER = ReductionMode.PAPER_FAITHFUL
CANON = ReductionMode.CANONICAL


def test_embed_eq10_layout():
    m = labelled()
    out = embed_with_zeros(m, ZeroEmbedding(5, 6, (6,)))
    assert out.shape == (6, 6)
    assert np.array_equal(out[:5, :5], m)
    assert not out[5].any() and not out[:, 5].any()


def test_embed_tripartite_layout():
    m = labelled()
    out = embed_with_zeros(m, ZeroEmbedding(5, 8, (1, 5, 8)))
    for z in (0, 4, 7):
        assert not out[z].any() and not out[:, z].any()
    assert out[1, 1] == r(m, 1, 1)
    assert out[3, 5] == r(m, 3, 4)
    assert out[6, 6] == r(m, 5, 5)
    assert out[1, 6] == r(m, 1, 5)


@pytest.mark.parametrize("k", range(1, 7))
def test_zero_insertion_shifts_rows(k):
    m = labelled()
    out = embed_with_zeros(m, ZeroEmbedding(5, 6, (k,)))
    assert not out[k - 1].any()
    kept = [i for i in range(6) if i != k - 1]
    assert np.array_equal(out[np.ix_(kept, kept)], m)


def test_embed_strip_round_trip(rng):
    for zeros in [(1,), (3,), (6,)]:
        m = random_state(rng, 5)
        emb = ZeroEmbedding(5, 6, zeros)
        assert np.array_equal(strip_zeros(embed_with_zeros(m, emb), emb), m)
    m = random_state(rng, 5)
    emb = ZeroEmbedding(5, 8, (2, 4, 7))
    assert np.array_equal(strip_zeros(embed_with_zeros(m, emb), emb), m)


def test_embed_preserves_entropy(rng):
    m = random_state(rng, 5)
    s5 = spectral_entropy(m).value
    for emb in (ZeroEmbedding(5, 6, (2,)), ZeroEmbedding(5, 8, (1, 5, 8))):
        assert abs(spectral_entropy(embed_with_zeros(m, emb)).value - s5) < 1e-10


def test_embedding_errors():
    with pytest.raises(DimensionMismatch):
        embed_with_zeros(np.eye(4) / 4, ZeroEmbedding(5, 6, (6,)))
    with pytest.raises(ValueError):
        ZeroEmbedding(5, 6, (7,))
    with pytest.raises(ValueError):
        ZeroEmbedding(5, 8, (1, 1, 8))
    with pytest.raises(ValueError):
        ZeroEmbedding(5, 8, (1, 8))


def test_embed_accepts_density_matrix():
    rho = validate_density(np.eye(5) / 5)
    out = embed_with_zeros(rho, ZeroEmbedding(5, 6, (1,)))
    assert out[0, 0] == 0 and out[1, 1] == 0.2


def test_qutrit_qubit_index_map():
    # 1 <-> (-1,-1/2), 2 <-> (-1,1/2), 3 <-> (0,-1/2), ..., 6 <-> (1,1/2)
    spin = {-1: 0, 0: 1, 1: 2, -0.5: 0, 0.5: 1}
    listed = [(-1, -0.5), (-1, 0.5), (0, -0.5), (0, 0.5), (1, -0.5), (1, 0.5)]
    for row, labels in enumerate(listed, start=1):
        digits = tuple(spin[x] for x in labels)
        assert composite_index(digits, (3, 2)) == row - 1
        assert composite_digits(row - 1, (3, 2)) == digits


def test_three_qubit_index_map():
    h = 0.5
    listed = [(-h, -h, -h), (-h, -h, h), (-h, h, -h), (-h, h, h),
              (h, -h, -h), (h, -h, h), (h, h, -h), (h, h, h)]
    for row, labels in enumerate(listed, start=1):
        digits = tuple(int(x > 0) for x in labels)
        assert composite_index(digits, (2, 2, 2)) == row - 1
        assert composite_digits(row - 1, (2, 2, 2)) == digits


def test_partial_trace_product_state(rng):
    a = random_state(rng, 2)
    b = random_state(rng, 3)
    ab = np.kron(a, b)
    assert np.max(np.abs(partial_trace(ab, (2, 3), {1}) - a)) < 1e-14
    assert np.max(np.abs(partial_trace(ab, (2, 3), {2}) - b)) < 1e-14


def test_partial_trace_maximally_mixed():
    out = partial_trace(np.eye(6) / 6, (2, 3), {2})
    assert np.allclose(out, np.eye(3) / 3, atol=1e-15)


def test_partial_trace_keep_all_is_identity(rng):
    m = random_state(rng, 6)
    assert np.array_equal(partial_trace(m, (2, 3), {1, 2}), m)


def test_partial_trace_errors():
    with pytest.raises(DimensionMismatch):
        partial_trace(np.eye(5), (2, 3), {1})
    with pytest.raises(EmptyKeepSet):
        partial_trace(np.eye(6), (2, 3), set())
    with pytest.raises(ValueError):
        partial_trace(np.eye(6), (2, 3), {3})


@pytest.mark.parametrize("dims,keep", [
    ((2, 3), {1}), ((2, 3), {2}), ((3, 2), {1}), ((3, 2), {2}),
    ((2, 2, 2), {1, 2}), ((2, 2, 2), {2, 3}), ((2, 2, 2), {1, 3}), ((2, 2, 2), {2}),
])
def test_partial_trace_matches_einsum(rng, dims, keep):
    n = int(np.prod(dims))
    for _ in range(10):
        m = random_state(rng, n)
        got = partial_trace(m, dims, keep)
        assert np.max(np.abs(got - einsum_partial_trace(m, dims, keep))) < 1e-14
        assert abs(np.trace(got) - np.trace(m)) < 1e-12
        assert np.max(np.abs(got - got.conj().T)) < 1e-12
        assert eigvals_hermitian(got).eigenvalues[-1] >= -1e-10


def test_partial_trace_composition(rng):
    for _ in range(20):
        m = random_state(rng, 8)
        twice = partial_trace(partial_trace(m, (2, 2, 2), {1, 2}), (2, 2), {2})
        once = partial_trace(m, (2, 2, 2), {2})
        assert np.max(np.abs(twice - once)) < 1e-12


def test_qubit_qutrit_block_formulas():
    m = labelled()
    m6 = embed_with_zeros(m, ZeroEmbedding(5, 6, (6,)))
    first = reduce_first_factor(m6, QQ)
    expected_first = [
        [r(m, 1, 1) + r(m, 2, 2) + r(m, 3, 3), r(m, 1, 4) + r(m, 2, 5)],
        [r(m, 4, 1) + r(m, 5, 2), r(m, 4, 4) + r(m, 5, 5)],
    ]
    assert np.array_equal(first, expected_first)
    second = reduce_second_factor(m6, QQ)
    expected_second = [
        [r(m, 1, 1) + r(m, 4, 4), r(m, 1, 2) + r(m, 4, 5), r(m, 1, 3)],
        [r(m, 2, 1) + r(m, 5, 4), r(m, 2, 2) + r(m, 5, 5), r(m, 2, 3)],
        [r(m, 3, 1), r(m, 3, 2), r(m, 3, 3)],
    ]
    assert np.array_equal(second, expected_second)


def test_qutrit_qubit_block_formulas():
    m = labelled()
    m6 = embed_with_zeros(m, ZeroEmbedding(5, 6, (6,)))
    first = reduce_first_factor(m6, TQ)
    expected_first = [
        [r(m, 1, 1) + r(m, 2, 2), r(m, 1, 3) + r(m, 2, 4), r(m, 1, 5)],
        [r(m, 3, 1) + r(m, 4, 2), r(m, 3, 3) + r(m, 4, 4), r(m, 3, 5)],
        [r(m, 5, 1), r(m, 5, 3), r(m, 5, 5)],
    ]
    assert np.array_equal(first, expected_first)
    second = reduce_second_factor(m6, TQ)
    expected_second = [
        [r(m, 1, 1) + r(m, 3, 3) + r(m, 5, 5), r(m, 1, 2) + r(m, 3, 4)],
        [r(m, 2, 1) + r(m, 4, 3), r(m, 2, 2) + r(m, 4, 4)],
    ]
    assert np.array_equal(second, expected_second)


@pytest.mark.parametrize("scheme", [QQ, TQ])
def test_block_reductions_match_partial_trace(rng, scheme):
    dims = scheme.factor_dims
    for _ in range(200):
        m = random_state(rng, 6)
        assert np.max(np.abs(reduce_first_factor(m, scheme) - partial_trace(m, dims, {1}))) < 1e-12
        assert np.max(np.abs(reduce_second_factor(m, scheme) - partial_trace(m, dims, {2}))) < 1e-12


def test_block_reductions_preserve_hermiticity(rng):
    for _ in range(20):
        m = random_state(rng, 6)
        for scheme in (QQ, TQ):
            for red in (reduce_first_factor(m, scheme), reduce_second_factor(m, scheme)):
                assert np.max(np.abs(red - red.conj().T)) < 1e-12


def test_block_reduction_errors():
    with pytest.raises(DimensionMismatch):
        reduce_first_factor(np.eye(5), QQ)
    with pytest.raises(ValueError):
        reduce_second_factor(np.eye(6), PartitionScheme.THREE_QUBIT)


def test_paper_rho12_formula_is_canonical(rng):
    for _ in range(200):
        m8 = embed_with_zeros(random_state(rng, 5), ZeroEmbedding(5, 8, (1, 5, 8)))
        paper = tripartite_reduce(m8, PAPER)
        canon = tripartite_reduce(m8, CANON)
        assert np.max(np.abs(paper.rho12 - canon.rho12)) < 1e-12
        assert np.max(np.abs(canon.rho12 - partial_trace(m8, (2, 2, 2), {1, 2}))) == 0


def test_canonical_tripartite_formulas():
    m = labelled()
    m8 = embed_with_zeros(m, ZeroEmbedding(5, 8, (1, 5, 8)))
    red = tripartite_reduce(m8, CANON)
    assert np.array_equal(red.r2, [
        [r(m, 1, 1) + r(m, 4, 4), r(m, 1, 3)],
        [r(m, 3, 1), r(m, 2, 2) + r(m, 3, 3) + r(m, 5, 5)],
    ])
    assert not red.rho23[0].any()
    assert red.rho23[1, 1] == r(m, 1, 1) + r(m, 4, 4)
    assert red.rho23[1, 2] == r(m, 1, 2) + r(m, 4, 5)
    assert red.rho23[2, 3] == r(m, 2, 3)


def test_paper_rho23_r2_differ_by_cross_terms(rng):
    for m in [labelled()] + [random_state(rng, 5) for _ in range(200)]:
        m8 = embed_with_zeros(m, ZeroEmbedding(5, 8, (1, 5, 8)))
        paper = tripartite_reduce(m8, PAPER)
        canon = tripartite_reduce(m8, CANON)
        d23, d2 = cross_terms(m)
        assert np.max(np.abs(paper.rho23 - canon.rho23 - d23)) < 1e-12
        assert np.max(np.abs(paper.r2 - canon.r2 - d2)) < 1e-12


def test_paper_traces(rng):
    for _ in range(50):
        m = random_state(rng, 5)
        red = tripartite_reduce(embed_with_zeros(m, ZeroEmbedding(5, 8, (1, 5, 8))), PAPER)
        extra = (r(m, 1, 4) + r(m, 4, 1) + r(m, 2, 5) + r(m, 5, 2)).real
        assert abs(red.traces()["rho23"] - (1 + extra)) < 1e-12
        assert abs(red.traces()["r2"] - (1 + extra)) < 1e-12
        assert abs(red.traces()["rho12"] - 1) < 1e-12


def test_paper_equals_canonical_on_diagonal_states(rng):
    for _ in range(20):
        w = rng.dirichlet(np.ones(5))
        m8 = embed_with_zeros(np.diag(w), ZeroEmbedding(5, 8, (1, 5, 8)))
        paper = tripartite_reduce(m8, PAPER)
        canon = tripartite_reduce(m8, CANON)
        for a, b in zip((paper.rho12, paper.rho23, paper.r2), (canon.rho12, canon.rho23, canon.r2)):
            assert np.max(np.abs(a - b)) < 1e-15


def test_paper_differs_on_generic_state(rng):
    m8 = embed_with_zeros(random_state(rng, 5), ZeroEmbedding(5, 8, (1, 5, 8)))
    paper = tripartite_reduce(m8, PAPER)
    canon = tripartite_reduce(m8, CANON)
    assert np.max(np.abs(paper.rho23 - canon.rho23)) > 1e-3
    assert np.max(np.abs(paper.r2 - canon.r2)) > 1e-3


def test_canonical_reductions_are_states(rng):
    for zeros in [(1, 5, 8), (2, 3, 4), (6, 7, 8)]:
        m8 = embed_with_zeros(random_state(rng, 5), ZeroEmbedding(5, 8, zeros))
        red = tripartite_reduce(m8, CANON, zeros)
        for part in (red.rho12, red.rho23, red.r2):
            validate_density(part, 1e-12, 1e-12, 1e-10)


def test_tripartite_errors():
    with pytest.raises(DimensionMismatch):
        tripartite_reduce(np.eye(6) / 6)
    with pytest.raises(ValueError):
        tripartite_reduce(np.eye(8) / 8, PAPER, (2, 3, 4))
