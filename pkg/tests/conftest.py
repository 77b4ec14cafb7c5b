import json
import random

import pytest
import sympy

from linkspec.seifert import SeifertMatrix


def random_nondegenerate(rng: random.Random, max_size: int = 8,
                         entry_bound: int = 3, n: int | None = None) -> SeifertMatrix:
    """A random integer Seifert matrix with nonzero determinant."""
    while True:
        size = rng.randint(1, max_size)
        entries = tuple(tuple(rng.randint(-entry_bound, entry_bound)
                              for _ in range(size)) for _ in range(size))
        M = sympy.Matrix([list(r) for r in entries])
        if M.det() != 0:
            dim = n if n is not None else rng.randint(1, 3)
            return SeifertMatrix(n=dim, entries=entries)


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture
def trefoil():
    return SeifertMatrix(n=1, entries=((-1, 1), (0, -1)), name="trefoil")


@pytest.fixture
def figure_eight():
    return SeifertMatrix(n=1, entries=((1, 1), (0, -1)), name="figure-eight")


@pytest.fixture
def trefoil_file(tmp_path, trefoil):
    path = tmp_path / "trefoil.json"
    path.write_text(json.dumps(trefoil.to_dict()))
    return str(path)
