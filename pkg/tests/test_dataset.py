import io
import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hullcheck.dataset import Dataset, displacements, extended_rank, load_dataset, matrix_rank, shuffle
from hullcheck.errors import NoMixedResults, NonFinite, ParseError, ValidationError
from hullcheck.fixtures import W0


def test_csv_round_trip_preserves_everything():
    text = W0.to_csv()
    back = load_dataset(text)
    assert back.equals(W0)
    assert back.rid[:2] == ("C1", "C2")


def test_json_round_trip_and_stream_input():
    text = json.dumps(W0.to_json())
    assert load_dataset(text, format="json").equals(W0)
    assert load_dataset(io.StringIO(W0.to_csv())).equals(W0)
    assert load_dataset(W0.to_csv().encode()).equals(W0)


def test_counts_column_round_trips():
    L = Dataset([[0.0], [1.0]], [1, 0], counts=[2, 3])
    back = load_dataset(L.to_csv())
    assert back.weighted and back.counts.tolist() == [2.0, 3.0]


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("id,x1,y\n1,0,1\n", 1),
        ("rid,x2,y\n1,0,1\n", 1),
        ("rid,x1,y\n1,0,1\n2,0\n", 3),
        ("rid,x1,y\n1,abc,1\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        load_dataset(text if text else "\n")
    assert exc.value.line == line


def test_validation_errors_name_the_field():
    with pytest.raises(ValidationError) as exc:
        load_dataset("rid,x1,y\n1,0,1\n1,2,0\n")
    assert exc.value.field == "rid"
    with pytest.raises(ValidationError) as exc:
        Dataset([[0.0], [1.0]], [1, 2])
    assert exc.value.field == "y"
    with pytest.raises(ValidationError):
        Dataset([[0.0], [1.0]], [1, 0], counts=[1, -1])


def test_displacements_match_double_loop(rng):
    L = Dataset(rng.normal(size=(7, 3)), [1, 0, 1, 0, 0, 1, 0])
    D = displacements(L)
    expect = [L.x[i] - L.x[j] for i in L.case_idx for j in L.noncase_idx]
    assert np.allclose(D.delta, expect)
    assert D.N == L.n1 * L.n0
    with pytest.raises(NoMixedResults):
        displacements(L.subset(L.case_idx))


def test_weighted_displacements_use_count_products():
    L = Dataset([[0.0], [1.0], [2.0]], [1, 0, 0], counts=[2, 3, 5])
    assert displacements(L).pair_weights().tolist() == [6.0, 10.0]


def test_ranks():
    assert matrix_rank(np.zeros((3, 2))) == 0
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert extended_rank([[0, 0], [1, 0], [0, 1]]) == 3
    assert extended_rank([[0, 0], [1, 1], [2, 2]]) == 2
    with pytest.raises(NonFinite):
        matrix_rank([[np.nan]])


@given(st.integers(0, 10_000))
def test_shuffle_is_a_seeded_permutation(seed):
    S = shuffle(W0, seed)
    assert sorted(S.rid) == sorted(W0.rid)
    assert S.equals(shuffle(W0, seed))
    i = S.index_of("N8")
    assert np.array_equal(S.x[i], W0.x[W0.index_of("N8")])


def test_flip_and_case_first():
    L = Dataset([[0.0], [1.0], [2.0]], [0, 1, 0], ["a", "b", "c"])
    assert L.flipped().y.tolist() == [1, 0, 1]
    assert L.case_first().rid == ("b", "a", "c")
    assert L.drop([1]).rid == ("a", "c")
