import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import linprog

from conftest import random_affine_map, random_dataset
from hullcheck.catalog import make_quasi
from hullcheck.dataset import Dataset, displacements, extended_rank
from hullcheck.errors import NonFinite
from hullcheck.fixtures import W0, W1, W2
from hullcheck.status import (
    Status,
    classify,
    classify_in_span,
    extreme_reduce,
    lp_separation,
    origin_interior_lp,
    span_project,
)


def highs_interior(L):
    """Origin strictly inside hull(delta) by HiGHS: max t with every weight >= t."""
    delta = displacements(L).delta
    N, d = delta.shape
    c = np.r_[np.zeros(N), -1.0]
    A = np.vstack([np.r_[np.ones(N), 0.0], np.hstack([delta.T, np.zeros((d, 1))])])
    A_ub = np.hstack([-np.eye(N), np.ones((N, 1))])
    res = linprog(c, A_ub=A_ub, b_ub=np.zeros(N), A_eq=A, b_eq=np.r_[1.0, np.zeros(d)],
                  bounds=[(0, None)] * N + [(None, None)], method="highs")
    return res.status == 0 and -res.fun > 1e-9 and np.linalg.matrix_rank(delta) == d


def test_one_dimensional_trio():
    overlap = Dataset([[1.0], [-1.0], [0.0]], [1, 1, 0])
    quasi = Dataset([[0.0], [0.0], [1.0]], [1, 0, 0])
    complete = Dataset([[1.0], [0.0]], [1, 0])
    assert classify(overlap).status is Status.OVERLAP
    assert classify(quasi).status is Status.QUASI
    assert classify(complete).status is Status.COMPLETE


def test_rank_deficient_overlap_is_quasi():
    flat = Dataset([[1.0, 0.0], [-1.0, 0.0], [0.0, 0.0]], [1, 1, 0])
    rep = classify(flat)
    assert rep.status is Status.QUASI and rep.rank == 1
    assert rep.w_tot == pytest.approx(1.0)
    assert classify_in_span(flat).status is Status.OVERLAP


def test_doubleton_is_quasi_in_one_dimension():
    rep = classify(Dataset([[0.0], [0.0]], [1, 0]))
    assert rep.status is Status.QUASI and rep.rank == 0


def test_no_mixed_results_and_non_finite():
    rep = classify(Dataset([[0.0], [1.0]], [1, 1]))
    assert rep.status is Status.NO_MIXED and rep.status.exit_code == 4
    with pytest.raises(NonFinite):
        classify(Dataset([[np.nan], [1.0]], [1, 0]))


def test_exit_codes():
    assert [s.exit_code for s in Status] == [0, 2, 3, 4]


def test_band_boundaries_go_to_quasi():
    import hullcheck.status as status

    assert status._band(1e-8, True, 1e-8) is Status.QUASI
    assert status._band(1 - 1e-8, True, 1e-8) is Status.QUASI
    assert status._band(0.5e-8, True, 1e-8) is Status.COMPLETE


def test_fixtures_overlap():
    for L in (W0, W1, W2):
        assert classify(L).status is Status.OVERLAP


def test_separating_direction_is_a_certificate():
    L = Dataset([[0.0, 0.0], [1.0, 0.5], [2.0, 2.0], [3.0, 2.5]], [0, 0, 1, 1])
    v = lp_separation(L)
    assert v.separated
    s = L.x @ v.direction + v.intercept
    assert np.all(s[L.y == 1] >= -1e-9) and np.all(s[L.y == 0] <= 1e-9)


def test_concordance_on_small_random_data():
    rng = np.random.default_rng(2)
    seen = set()
    for k in range(200):
        L = random_dataset(rng, int(rng.integers(3, 11)), int(rng.integers(1, 4)),
                           integer=bool(k % 2))
        st_ = classify(L).status
        seen.add(st_)
        ov = st_ is Status.OVERLAP
        assert ov == (not lp_separation(L).separated)
        assert ov == origin_interior_lp(L)
        assert ov == origin_interior_lp(displacements(L))
        assert ov == highs_interior(L)
    assert seen == {Status.OVERLAP, Status.QUASI, Status.COMPLETE}


@given(st.integers(0, 2**31 - 1))
def test_status_is_affine_invariant_and_flip_symmetric(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 4))
    L = random_dataset(rng, int(rng.integers(d + 2, 12)), d, integer=True)
    A, b = random_affine_map(rng, d)
    base = classify(L).status
    assert classify(L.with_x(L.x @ A + b)).status is base
    assert classify(L.flipped()).status is base


@pytest.mark.parametrize("n, d", [(50, 2), (400, 3)])
def test_quasi_generator(n, d):
    L = make_quasi(n, d, seed=n)
    assert classify(L).status is Status.QUASI
    assert lp_separation(L).separated and not origin_interior_lp(L)
    assert extended_rank(L.x) == d + 1


def test_large_inputs_reduce_to_hull_vertices():
    rng = np.random.default_rng(4)
    L = random_dataset(rng, 600, 2)
    small = classify(L)
    big = classify(L, pair_limit=1000)
    assert big.reduced and big.status is small.status is Status.OVERLAP
    assert np.allclose(big.marginals.u1, small.marginals.u1, atol=1e-8)
    R = extreme_reduce(L)
    assert R.n < L.n and classify(R).status is small.status


def test_span_projection_keeps_dimension_and_distances():
    x = np.array([[0, 0, 0], [1, 1, 1], [2, 0, 2], [3, 1, 3]], dtype=float)
    P, r = span_project(Dataset(x, [1, 0, 1, 0]))
    assert r == 2 and P.d == 2
    dist = lambda z: np.linalg.norm(z[:, None] - z[None], axis=2)
    assert np.allclose(dist(P.x), dist(x))
