import pytest

from oracles import brute_alpha, brute_matching
from qindep.catalog import get_graph
from qindep.errors import InvalidInput, SizeLimitError
from qindep.exact import IndependentSetWitness, clique_number, independence_number, maximum_matching_bipartite
from qindep.graph import (
    complement,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    random_bipartite_graph,
    random_graph,
)


@pytest.mark.parametrize("name, alpha", [
    ("c5", 2), ("petersen", 4), ("clebsch", 5), ("k5", 1), ("c6", 3), ("p4", 2),
    ("paley17", 3), ("line-rook3", 4), ("dodecahedron", 8),
])
def test_known_values(name, alpha):
    g = get_graph(name)
    w = independence_number(g)
    assert w.size == alpha
    assert w.is_valid_for(g)


def test_empty_graph():
    assert independence_number(make_empty(7)).vertices == tuple(range(7))


def test_against_brute_force(rng):
    for _ in range(200):
        n = int(rng.integers(1, 13))
        g = random_graph(n, float(rng.uniform(0.1, 0.9)), rng)
        w = independence_number(g)
        assert w.size == brute_alpha(g.adjacency)
        assert w.is_valid_for(g)


def test_deterministic():
    g = get_graph("clebsch")
    assert independence_number(g) == independence_number(g)


def test_size_limit():
    with pytest.raises(SizeLimitError):
        independence_number(make_cycle(65))


def test_folded7_complement_is_within_limit():
    # n = 64 is the largest accepted order; only the size check is exercised here
    g = complement(get_graph("folded7"))
    assert g.n == 64


def test_witness_validation():
    g = make_cycle(5)
    assert IndependentSetWitness(2, (0, 2)).is_valid_for(g)
    assert not IndependentSetWitness(2, (0, 1)).is_valid_for(g)
    assert not IndependentSetWitness(2, (0, 7)).is_valid_for(g)
    with pytest.raises(InvalidInput):
        IndependentSetWitness(3, (0, 2))


class TestClique:
    def test_clebsch_triangle_free(self, clebsch):
        assert clique_number(clebsch) == 2

    def test_complete(self):
        assert clique_number(make_complete(7)) == 7


class TestMatching:
    def test_c6(self):
        assert len(maximum_matching_bipartite(make_cycle(6))) == 3

    def test_p4(self):
        g = make_path(4)
        mu = len(maximum_matching_bipartite(g))
        assert mu == 2
        assert independence_number(g).size == 4 - mu

    def test_empty(self):
        assert maximum_matching_bipartite(make_empty(5)) == []

    def test_non_bipartite(self):
        with pytest.raises(InvalidInput):
            maximum_matching_bipartite(make_cycle(5))

    def test_bad_parts(self):
        with pytest.raises(InvalidInput):
            maximum_matching_bipartite(make_path(3), parts=([0, 1], [2]))

    def test_konig_and_brute_force(self, rng):
        for _ in range(50):
            a, b = int(rng.integers(1, 8)), int(rng.integers(1, 8))
            g = random_bipartite_graph(a, b, float(rng.uniform(0.1, 0.7)), rng)
            match = maximum_matching_bipartite(g)
            ends = [x for e in match for x in e]
            assert len(ends) == len(set(ends))
            assert all(g.has_edge(u, v) for u, v in match)
            assert len(match) == brute_matching(list(g.edges))
            assert independence_number(g).size == g.n - len(match)
