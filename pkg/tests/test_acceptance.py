"""The ten acceptance criteria, each at its stated tolerance and runtime.

Run ``pytest tests/test_acceptance.py`` for the summary block with one
PASS/FAIL line per criterion.
"""

import json
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from oracles import brute_alpha, random_hermitian, random_projector, random_unitary, random_weight_matrix
from qindep.bounds import (
    complement_inertia,
    golubev_bound,
    hoffman_bound,
    inertia_bound,
    rank_bound_clique,
)
from qindep.catalog import CATALOG, get_graph
from qindep.certificates import (
    classical_certificate,
    collapse_to_packing,
    isotropy_check,
    max_cross_overlap,
    trace_inner,
    verify_projective_packing,
    verify_quantum_certificate,
)
from qindep.exact import clique_number, independence_number
from qindep.graph import complement, is_regular, make_complete, make_cycle, make_empty, random_bipartite_graph, random_graph
from qindep.linalg import adjacency_matrix, eigenvalues_hermitian, inertia, tensor_with_identity
from qindep.report import Certification, certify_alpha_q
from qindep.theta import lovasz_theta
from qindep.weights import bipartite_tight_weights


def rng_for(criterion: int) -> np.random.Generator:
    return np.random.default_rng(1000 + criterion)


@pytest.mark.acceptance(1, "Clebsch reproduction")
def test_clebsch_reproduction(record_property):
    start = time.perf_counter()
    g = get_graph("clebsch")
    a = adjacency_matrix(g)
    np.testing.assert_allclose(eigenvalues_hermitian(a), [-3] * 5 + [1] * 10 + [5], atol=1e-8)
    assert inertia(a).counts() == (11, 0, 5)
    assert inertia_bound(a) == 5
    assert independence_number(g).size == 5
    assert brute_alpha(g.adjacency) == 5
    assert hoffman_bound(g).exact == golubev_bound(g).exact == Fraction(16 * 3, 8) == 6
    theta = lovasz_theta(g).value
    assert abs(theta - 6) <= 5e-3
    assert certify_alpha_q(g).certification == Certification.INERTIA_TIGHT
    elapsed = time.perf_counter() - start
    record_property("detail", f"theta={theta:.6f}, {elapsed:.2f}s")
    assert elapsed < 5


@pytest.mark.acceptance(2, "Folded 7-cube complement rank")
def test_folded7_complement_rank(record_property):
    start = time.perf_counter()
    g = complement(get_graph("folded7"))
    assert g.n == 64
    inert = inertia(adjacency_matrix(g))
    assert inert.n_plus + inert.n_minus == 29
    assert rank_bound_clique(g).value == 29
    elapsed = time.perf_counter() - start
    record_property("detail", f"inertia={inert.counts()}, {elapsed:.2f}s")
    assert elapsed < 10


@pytest.mark.slow
@pytest.mark.acceptance(3, "Paley 17 real weight search stays above alpha")
def test_paley17_search(record_property):
    start = time.perf_counter()
    g = get_graph("paley17")
    assert inertia_bound(adjacency_matrix(g)) == 8
    assert brute_alpha(g.adjacency) == 3
    report = certify_alpha_q(g, search_budget=20000, search_mode="real", search_restarts_count=10,
                             seed=0, theta=False)
    ws = report.weight_search
    assert ws["seeds"] == list(range(10)) and ws["budget"] == 20000
    assert all(b > 3 for b in ws["best_bounds"])
    assert not ws["reached_target"]
    assert report.bound("inertia_weighted").integer_cap == min(ws["best_bounds"])
    elapsed = time.perf_counter() - start
    record_property("detail", f"best bounds {ws['best_bounds']}, {elapsed:.1f}s")
    assert elapsed < 180


@pytest.mark.acceptance(4, "Bipartite tightness")
def test_bipartite_tightness(record_property):
    rng = rng_for(4)
    for _ in range(50):
        a = int(rng.integers(1, 8))
        b = int(rng.integers(1, 15 - a))
        g = random_bipartite_graph(a, b, float(rng.uniform(0.1, 0.9)), rng)
        assert g.n <= 14
        assert inertia_bound(bipartite_tight_weights(g)) == brute_alpha(g.adjacency)
    record_property("detail", "50/50 equal")


@pytest.mark.acceptance(5, "Soundness sweep")
def test_soundness_sweep(record_property):
    rng = rng_for(5)
    violations = checks = 0
    for _ in range(200):
        g = random_graph(int(rng.integers(1, 13)), float(rng.uniform(0.05, 0.95)), rng)
        alpha = brute_alpha(g.adjacency)
        caps = [inertia_bound(adjacency_matrix(g))]
        caps += [inertia_bound(random_weight_matrix(rng, g.adjacency)) for _ in range(5)]
        caps.append(golubev_bound(g).integer_cap)
        if is_regular(g) is not None:
            caps.append(hoffman_bound(g).integer_cap)
        caps = [c for c in caps if c is not None]
        checks += len(caps)
        violations += sum(alpha > c for c in caps)
    record_property("detail", f"{violations} violations in {checks} checks")
    assert violations == 0


@pytest.mark.acceptance(6, "Complement inertia and rank")
def test_complement_inertia(record_property):
    rng = rng_for(6)
    graphs = [factory() for factory, _ in CATALOG.values()]
    graphs += [random_graph(int(rng.integers(1, 17)), float(rng.random()), rng) for _ in range(200)]
    inertia_violations = rank_violations = 0
    for g in graphs:
        inertia_violations += not complement_inertia(g).holds
        rank = rank_bound_clique(g)
        if rank.applicable:
            rank_violations += clique_number(g) > rank.value
    record_property("detail", f"{len(graphs)} graphs, {inertia_violations}+{rank_violations} violations")
    assert inertia_violations == 0 and rank_violations == 0


@pytest.mark.acceptance(7, "Tensor inertia")
def test_tensor_inertia(record_property):
    rng = rng_for(7)
    for trial in range(50):
        n = int(rng.integers(1, 9))
        w = random_hermitian(rng, n)
        if trial % 2:
            # force a kernel so the zero count is exercised
            vals, vecs = np.linalg.eigh(w)
            vals[: int(rng.integers(1, n + 1))] = 0
            w = (vecs * vals) @ vecs.conj().T
        base = np.array(inertia(w).counts())
        for d in (1, 2, 3):
            assert inertia(tensor_with_identity(w, d)).counts() == tuple(d * base)
    record_property("detail", "50 matrices x 3 dims")


@pytest.mark.acceptance(8, "Certificate pipeline")
def test_certificate_pipeline(record_property):
    for name, (factory, _) in CATALOG.items():
        g = factory()
        w = independence_number(g)
        fam = classical_certificate(g, w)
        assert verify_quantum_certificate(g, w.size, fam).valid, name
        packing = collapse_to_packing(fam, w.size, g)
        verdict = verify_projective_packing(g, packing)
        assert verdict.valid and verdict.value == w.size, name
        assert isotropy_check(adjacency_matrix(g), packing, g), name

    rng = rng_for(8)
    worst = 0.0
    for trial in range(100):
        d = int(rng.integers(2, 7))
        if trial % 2:
            u = random_unitary(rng, d)
            k = int(rng.integers(1, d))
            a, b = u[:, :k], u[:, k:]
            p, q = a @ a.conj().T, b @ b.conj().T
        else:
            p = random_projector(rng, d, int(rng.integers(1, d)))
            q = random_projector(rng, d, int(rng.integers(1, d)))
        tr = abs(trace_inner(p, q))
        ov = max_cross_overlap(p, q)
        assert (tr < 1e-8) == (ov < 1e-8)
        if trial % 2:
            worst = max(worst, tr, ov)
    record_property("detail", f"{len(CATALOG)} catalog graphs; orthogonal-pair residual {worst:.1e}")
    assert worst < 1e-8


@pytest.mark.acceptance(9, "Theta sanity")
def test_theta_sanity(record_property):
    start = time.perf_counter()
    c5 = lovasz_theta(make_cycle(5)).value
    e5 = lovasz_theta(make_empty(5)).value
    k5 = lovasz_theta(make_complete(5)).value
    clebsch = get_graph("clebsch")
    prod = lovasz_theta(clebsch).value * lovasz_theta(complement(clebsch)).value
    elapsed = time.perf_counter() - start
    record_property("detail", f"C5 {c5:.5f}, K5 {k5:.5f}, product {prod:.5f}, {elapsed:.1f}s")
    assert abs(c5 - 2.236) <= 5e-3
    assert e5 == 5
    assert abs(k5 - 1) <= 5e-3
    assert abs(prod - 16) <= 0.1
    assert elapsed < 60


@pytest.mark.acceptance(10, "Deterministic JSON reports")
def test_determinism(record_property):
    for name in ("clebsch", "c7", "paley13"):
        g = get_graph(name)
        runs = {certify_alpha_q(g, search_budget=500, search_restarts_count=2, seed=7).to_json() for _ in range(2)}
        assert len(runs) == 1
    cmd = [sys.executable, "-m", "qindep.cli", "bounds", "paley17", "--json", "--search",
           "--budget", "500", "--restarts", "3", "--seed", "2"]
    outs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1
    json.loads(outs.pop())
    record_property("detail", "in-process and CLI runs byte-identical")
