from fractions import Fraction

import numpy as np
import pytest

from oracles import brute_alpha, numpy_inertia, random_weight_matrix
from qindep.bounds import (
    BoundValue,
    complement_inertia,
    complement_inertia_check,
    golubev_bound,
    hoffman_bound,
    inertia_bound,
    rank_bound_clique,
    validate_weight_matrix,
)
from qindep.catalog import get_graph
from qindep.errors import InvalidInput
from qindep.exact import clique_number, independence_number
from qindep.graph import (
    complement,
    is_regular,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    random_graph,
)
from qindep.linalg import adjacency_matrix


class TestInertiaBound:
    def test_clebsch(self, clebsch):
        assert inertia_bound(adjacency_matrix(clebsch)) == 5

    def test_petersen(self, petersen):
        assert inertia_bound(adjacency_matrix(petersen)) == 4

    def test_zero_matrix(self):
        assert inertia_bound(np.zeros((7, 7))) == 7


class TestValidateWeights:
    def test_adjacency_is_valid(self):
        g = make_cycle(5)
        assert validate_weight_matrix(g, adjacency_matrix(g)) == []

    def test_diagonal_violation(self):
        g = make_cycle(5)
        w = adjacency_matrix(g).entries.copy()
        w[2, 2] = 1.0
        assert [(u, v) for u, v, _ in validate_weight_matrix(g, w)] == [(2, 2)]

    def test_non_edge_violation(self):
        g = make_cycle(5)
        w = np.zeros((5, 5))
        w[:4, :4] = adjacency_matrix(make_cycle(4)).entries  # 0-3 is not a C5 edge
        assert (0, 3) in [(u, v) for u, v, _ in validate_weight_matrix(g, w)]

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInput):
            validate_weight_matrix(make_cycle(5), np.zeros((4, 4)))


class TestHoffman:
    def test_clebsch_exact(self, clebsch):
        b = hoffman_bound(clebsch)
        assert b.exact == Fraction(16 * 3, 5 + 3) == 6
        assert b.value == pytest.approx(6, abs=1e-9)

    def test_petersen(self, petersen):
        assert hoffman_bound(petersen).exact == 4

    def test_not_regular(self):
        b = hoffman_bound(make_path(3))
        assert not b.applicable and b.integer_cap is None

    def test_edgeless(self):
        assert not hoffman_bound(make_empty(3)).applicable


class TestGolubev:
    def test_petersen(self, petersen):
        assert golubev_bound(petersen).exact == Fraction(10 * (5 - 3), 5)

    def test_clebsch(self, clebsch):
        assert golubev_bound(clebsch).exact == Fraction(16 * 3, 8) == 6

    def test_k2(self):
        assert golubev_bound(make_complete(2)).exact == 1

    def test_empty(self):
        assert not golubev_bound(make_empty(4)).applicable

    def test_equals_hoffman_on_regular(self, catalog_graphs):
        for g in catalog_graphs.values():
            if is_regular(g) and g.m:
                assert golubev_bound(g).value == pytest.approx(hoffman_bound(g).value, abs=1e-9)


class TestRank:
    def test_folded7_complement(self):
        assert rank_bound_clique(complement(get_graph("folded7"))).exact == 29

    def test_k5(self):
        assert rank_bound_clique(make_complete(5)).value == 5

    def test_c4(self):
        assert rank_bound_clique(make_cycle(4)).value == 2

    def test_empty(self):
        assert not rank_bound_clique(make_empty(3)).applicable


class TestComplementInertia:
    def test_petersen(self, petersen):
        # complement spectrum 6, 1^4, -2^5
        c = complement_inertia(petersen)
        assert (c.n_minus, c.n_minus_complement) == (4, 5)
        assert c.holds

    def test_k2(self):
        c = complement_inertia(make_complete(2))
        assert (c.n_minus, c.n_minus_complement, c.holds) == (1, 0, True)

    def test_random_graphs(self, rng):
        for _ in range(200):
            g = random_graph(int(rng.integers(1, 17)), float(rng.random()), rng)
            assert complement_inertia_check(g)


def test_bound_value_cap_slack():
    assert BoundValue("x", 5.9999999999).integer_cap == 6
    assert BoundValue("x", 5.99).integer_cap == 5
    assert BoundValue.not_applicable("x", "why").to_dict()["integer_cap"] is None


def test_soundness_sweep(rng):
    """alpha never exceeds any applicable bound, weighted or not."""
    for _ in range(200):
        n = int(rng.integers(1, 13))
        g = random_graph(n, float(rng.uniform(0.1, 0.9)), rng)
        alpha = brute_alpha(g.adjacency)
        assert alpha <= inertia_bound(adjacency_matrix(g))
        for _ in range(5):
            w = random_weight_matrix(rng, g.adjacency)
            assert validate_weight_matrix(g, w) == []
            assert alpha <= inertia_bound(w)
            p, z, m = numpy_inertia(w)
            assert inertia_bound(w) == z + min(p, m)
        for b in (golubev_bound(g), hoffman_bound(g)):
            if b.applicable:
                assert alpha <= b.integer_cap
        if g.m:
            assert clique_number(g) <= rank_bound_clique(g).value


def test_clique_below_rank_on_catalog(catalog_graphs):
    for g in catalog_graphs.values():
        if g.n <= 32 and g.m:
            assert clique_number(g) <= rank_bound_clique(g).value
            assert independence_number(g).size <= inertia_bound(adjacency_matrix(g))
