import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from framekit.corpus import random_lattice
from framekit.poset import poset_from_pairs
from framekit.topology import space_from_opens

settings.register_profile(
    "framekit", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("framekit")

LETTERS = "abcdefgh"


@st.composite
def posets(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    labels = list(LETTERS[:n])
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
            max_size=2 * n,
        )
    )
    # orient every pair upward in a hidden linear order so no cycle can form
    perm = draw(st.permutations(range(n))) if n else []
    rank = {i: perm[i] for i in range(n)}
    edges = []
    for i, j in pairs:
        if n and i != j:
            a, b = (i, j) if rank[i] < rank[j] else (j, i)
            edges.append((labels[a], labels[b]))
    return poset_from_pairs(labels, edges)


@st.composite
def lattices(draw, max_size=8):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_lattice(random.Random(seed), max_size=max_size)


@st.composite
def spaces(draw, max_points=4):
    n = draw(st.integers(0, max_points))
    points = [f"x{i}" for i in range(n)]
    gens = draw(st.lists(st.sets(st.sampled_from(points)) if n else st.just(set()), max_size=4))
    return space_from_opens(points, gens)


@pytest.fixture
def chain2():
    from framekit.ttmodel import chain_scenario

    return chain_scenario(2)
