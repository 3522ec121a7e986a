import random

import pytest

from flag_reconstruction.datamodel.complex import SimplicialComplex
from tests.corpus import PROJECTIVE_PLANE_FACETS


@pytest.fixture
def projective_plane() -> SimplicialComplex:
    return SimplicialComplex.from_simplices(PROJECTIVE_PLANE_FACETS)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)
