import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from rigikit import Graph

settings.register_profile(
    "ci",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10, p_hint: float = 0.4):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return Graph(n)
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph(n, tuple(edges))


@pytest.fixture
def rng():
    import random

    return random.Random(0xC1AC)
