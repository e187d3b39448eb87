"""Embedded reference datasets.

``W0`` is the 16-run, three-predictor demonstration set; ``W1`` and ``W2``
are its Type I and Type II sub-configurations; ``A1`` is a five-dimensional
added configuration built from three one-dimensional simplex pairs.
"""

import numpy as np

from .dataset import Dataset

__all__ = ["W0", "W1", "W2", "A1", "load_fixture", "FIXTURES"]

_W0_CASE = [
    (9.0, 5.0, 5.0),
    (10.0, 4.4, 9.0),
    (8.4, 4.2, 3.5),
    (11.9, 4.1, 6.0),
    (11.2, 4.7, 8.0),
    (9.0, 4.8, 10.0),
    (11.0, 4.6, 8.1),
    (7.0, 2.6, 4.1),
]
_W0_NONCASE = [
    (6.7, 5.8, 4.0),
    (9.5, 4.7, 7.0),
    (10.1, 2.6, 3.0),
    (7.5, 4.2, 2.5),
    (7.3, 5.1, 2.1),
    (10.4, 4.1, 3.5),
    (8.4, 4.6, 2.0),
    (10.0, 4.0, 11.0),
]

# rows of the published list; blank cells are zero
_A1 = [
    ((0, 0, 0, 0, 0), 1),
    ((1, 1, 1, 0, 0), 0),
    ((-1, -1, -1, 0, 0), 0),
    ((0, 2, 3, 1, 0), 1),
    ((0, 1, 5, 2, 0), 0),
    ((0, 4, -1, -1, 0), 0),
    ((0, 0, 1, 2, 3), 1),
    ((0, 0, 3, 8, -1), 0),
    ((0, 0, 0, -1, 5), 0),
]


def _w(case_rows, noncase_rows):
    x = [_W0_CASE[i - 1] for i in case_rows] + [_W0_NONCASE[j - 1] for j in noncase_rows]
    y = [1] * len(case_rows) + [0] * len(noncase_rows)
    rid = [f"C{i}" for i in case_rows] + [f"N{j}" for j in noncase_rows]
    return Dataset(np.array(x), np.array(y), tuple(rid))


W0 = _w(range(1, 9), range(1, 9))
W1 = _w([7, 8], [6, 7, 8])
W2 = _w([1, 2, 3], [1, 2, 3])
A1 = Dataset(
    np.array([r for r, _ in _A1], dtype=float),
    np.array([y for _, y in _A1]),
    tuple(str(i + 1) for i in range(len(_A1))),
)

FIXTURES = {"W0": W0, "W1": W1, "W2": W2, "A1": A1}


def load_fixture(name):
    return FIXTURES[name]
