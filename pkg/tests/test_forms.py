import numpy as np
import pytest

from conftest import random_affine_map
from hullcheck.dataset import Dataset, extended_rank
from hullcheck.errors import NotOverlapping, NotTypeI
from hullcheck.fixtures import W1, W2
from hullcheck.forms import (
    interim_form,
    make_equidistant,
    make_standard_type1,
    regular_simplex,
    to_standard_form,
    unit_simplex,
)
from hullcheck.minimal import Kind, config_kind
from hullcheck.status import Status, classify

# interim and standard forms of the Type I subset, as printed
PRINTED_V = [
    [0.75, 0.375, 0.75],
    [-0.75, -0.375, -0.75],
    [0.16, 0.00, -1.44],
    [-0.16, 0.05, -0.51],
    [0.00, -0.05, 1.95],
]
PRINTED_LAMBDA = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, 0, 1], [0, -1, -1]]


def exact_interim():
    u = np.array([3 / 4, 1 / 4, 2 / 5, 1 / 10, 1 / 2])
    S = u[:2] @ W1.x1
    return u[:, None] * (W1.case_first().x - S)


class TestTypeISubset:
    def test_interim_form_matches_print_and_recomputation(self):
        V = interim_form(W1)
        assert np.allclose(V, exact_interim(), atol=1e-9)
        assert np.allclose(V, PRINTED_V, atol=5e-3)  # print has two decimals

    def test_standard_form_is_the_exact_pattern(self):
        sf = to_standard_form(W1)
        assert sf.lambda_matrix.tolist() == PRINTED_LAMBDA
        assert (sf.d1, sf.d0) == (1, 2)
        assert np.allclose(sf.u1, [1 / 2, 1 / 2], atol=1e-9)
        assert np.allclose(sf.u0, [1 / 3, 1 / 3, 1 / 3], atol=1e-9)


def test_unit_simplex():
    assert unit_simplex(2).tolist() == [[1, 0], [0, 1], [-1, -1]]
    assert unit_simplex(0).tolist() == [[0]]
    with pytest.raises(ValueError):
        unit_simplex(-1)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_regular_simplex_is_regular_and_centred(n):
    V = regular_simplex(n)
    G = V @ V.T
    assert np.allclose(np.diag(G), 1.0)
    off = G[~np.eye(n + 1, dtype=bool)]
    assert np.allclose(off, -1.0 / n)
    assert np.allclose(V.sum(axis=0), 0.0)


@pytest.mark.parametrize("d1, d0", [(0, 1), (1, 1), (1, 2), (2, 2), (0, 3)])
def test_equidistant_form_is_type1_with_uniform_marginals(d1, d0):
    E = make_equidistant(d1, d0)
    assert config_kind(E) is Kind.TYPE_I
    m = classify(E).marginals
    assert np.allclose(m.u1, 1 / (d1 + 1)) and np.allclose(m.u0, 1 / (d0 + 1))
    assert np.allclose(m.S, 0.0, atol=1e-12)


def test_standard_templates():
    assert make_standard_type1(0, 0).x.tolist() == [[0], [0]]
    assert make_standard_type1(0, 1).x.ravel().tolist() == [0, 1, -1]
    assert make_standard_type1(1, 1).x.tolist() == [[1, 0], [-1, 0], [0, 1], [0, -1]]
    L = make_standard_type1(2, 1)
    assert L.rid == ("C1", "C2", "C3", "N1", "N2")
    assert L.x.tolist() == [[1, 0, 0], [0, 1, 0], [-1, -1, 0], [0, 0, 1], [0, 0, -1]]


SHAPES = [(d1, d0) for d in range(1, 6) for d1 in range(d + 1) for d0 in [d - d1]]


@pytest.mark.parametrize("d1, d0", SHAPES)
def test_standard_form_survives_affine_disguises(d1, d0):
    L = make_standard_type1(d1, d0)
    rng = np.random.default_rng(100 * d1 + d0)
    for _ in range(5):
        A, b = random_affine_map(rng, L.d)
        sf = to_standard_form(L.with_x(L.x @ A + b))
        assert np.allclose(sf.lambda_matrix, L.x, atol=1e-9)


def test_standard_form_of_embedded_configuration():
    L = make_standard_type1(1, 1)
    lifted = L.with_x(np.column_stack([L.x, np.zeros(L.n)]) @ np.array([[1, 2, 0], [0, 1, 1], [1, 0, 1.0]]))
    assert np.allclose(to_standard_form(lifted).lambda_matrix, L.x, atol=1e-9)


@pytest.mark.parametrize("d1, d0", [s for s in SHAPES if sum(s) <= 5])
def test_single_removals_never_give_quasi_or_lower_rank(d1, d0):
    L = make_standard_type1(d1, d0)
    r = extended_rank(L.x)
    for i in range(L.n):
        R = L.drop([i])
        assert classify(R).status in (Status.COMPLETE, Status.NO_MIXED)
        assert extended_rank(R.x) == r


def test_errors():
    with pytest.raises(NotTypeI):
        to_standard_form(W2)
    with pytest.raises(NotTypeI):
        to_standard_form(Dataset([[0.0], [1.0]], [1, 0]))
    with pytest.raises(NotOverlapping):
        interim_form(Dataset([[0.0], [1.0]], [1, 0]))
    with pytest.raises(ValueError):
        make_equidistant(0, 0)
