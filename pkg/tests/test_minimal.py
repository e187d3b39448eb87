import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_dataset
from hullcheck.dataset import Dataset
from hullcheck.errors import BudgetExceeded, NotMinimal, NotOverlapping
from hullcheck.fixtures import W0, W1, W2
from hullcheck.forms import make_standard_type1
from hullcheck.minimal import (
    Kind,
    config_kind,
    deflate,
    deflate_shuffled,
    doubleton_count,
    removal_depths,
    verify_minimal,
)
from hullcheck.status import Status, classify, span_project


def doubletons(d):
    x = np.repeat(np.vstack([np.zeros(d), np.eye(d)]), 2, axis=0)
    return Dataset(x, [1, 0] * (d + 1))


class TestDemonstrationSet:
    def test_given_order_deflates_to_the_type1_subset(self):
        core = deflate(W0)
        assert core.data.rid == W1.rid
        assert core.kind is Kind.TYPE_I and core.n == 5

    def test_w2_last_in_the_visit_order_deflates_to_w2(self):
        last = [W0.index_of(r) for r in W2.rid]
        order = [i for i in range(W0.n) if i not in last] + last
        core = deflate(W0, order=order)
        assert set(core.data.rid) == set(W2.rid)
        assert core.kind is Kind.TYPE_II and core.d_eff == 3 and core.n == 6

    def test_seed_3083_reaches_w2(self):
        assert set(deflate_shuffled(W0, 3083).data.rid) == set(W2.rid)

    def test_first_64_seeds_never_reach_w2(self):
        hits = [s for s in range(64) if set(deflate_shuffled(W0, s).data.rid) == set(W2.rid)]
        assert hits == []

    def test_removal_depths_of_w2(self):
        rep = removal_depths(W2, 3)
        assert rep.n_overlap == 1 and rep.n_complete == 2
        assert rep.witness_complete == ("C1", "C3")


def test_fixture_kinds():
    assert verify_minimal(W1) and config_kind(W1) is Kind.TYPE_I
    assert verify_minimal(W2) and config_kind(W2) is Kind.TYPE_II
    assert not verify_minimal(W0)
    with pytest.raises(NotMinimal):
        config_kind(W0)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_doubleton_configuration_is_the_largest_minimal_one(d):
    L = doubletons(d)
    assert verify_minimal(L) and L.n == 2 * (d + 1)
    assert doubleton_count(L) == d + 1
    assert classify(L).status is Status.OVERLAP


@pytest.mark.parametrize("d1, d0", [(0, 1), (1, 1), (1, 2), (0, 3)])
def test_type1_depths_are_one(d1, d0):
    rep = removal_depths(make_standard_type1(d1, d0), 2)
    assert rep.n_overlap == rep.n_complete == 1


@given(st.integers(0, 2**31 - 1))
def test_deflation_bounds(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 4))
    L = random_dataset(rng, int(rng.integers(2 * d + 4, 16)), d)
    if classify(L).status is not Status.OVERLAP:
        return
    core = deflate_shuffled(L, seed)
    r = span_project(core.data)[1]
    assert r + 2 <= core.n <= 2 * (r + 1)
    assert verify_minimal(core.data)
    assert set(core.data.rid) <= set(L.rid)


def test_errors():
    sep = Dataset([[0.0], [1.0]], [1, 0])
    with pytest.raises(NotOverlapping):
        deflate(sep)
    with pytest.raises(NotOverlapping):
        removal_depths(sep, 1)
    with pytest.raises(BudgetExceeded):
        removal_depths(W0, 8, budget=100)
    with pytest.raises(ValueError):
        deflate(W1, order=[0, 0, 1, 2, 3])


def test_depth_report_serialises_missing_values():
    rep = removal_depths(W2, 1)
    assert rep.to_dict()["n_complete"] == "not found <= 1"
