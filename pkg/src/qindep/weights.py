"""Searching for weight matrices that tighten the inertia bound."""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, TextIO

import numpy as np

from .bounds import validate_weight_matrix
from .errors import InvalidInput, InvalidParameters
from .exact import maximum_matching_bipartite
from .graph import Graph, is_bipartite
from .linalg import ZERO_REL_TOL, HermitianMatrix, Inertia, classify_spectrum, jacobi_eigenvalues

MODES = ("real", "hermitian")
WEIGHT_CLAMP = 10.0
INITIAL_SIGMA = 0.5
INITIAL_TEMPERATURE = 1.0
COOLING = 0.995
ADAPT_EVERY = 100


@dataclass
class WeightSearchResult:
    best_matrix: HermitianMatrix
    best_bound: int
    target: int
    reached_target: bool
    evaluations: int
    seed: int
    mode: str
    best_margin: float = 0.0
    # (evaluation index, bound, margin) each time the best point improved
    history: list[tuple[int, int, float]] = field(default_factory=list)

    def to_dict(self, include_matrix: bool = False) -> dict:
        out = {
            "best_bound": self.best_bound,
            "target": self.target,
            "reached_target": self.reached_target,
            "evaluations": self.evaluations,
            "seed": self.seed,
            "mode": self.mode,
            "best_margin": self.best_margin,
            "history": [list(h) for h in self.history],
        }
        if include_matrix:
            a = self.best_matrix.entries
            out["best_matrix"] = {"re": np.real(a).tolist(), "im": np.imag(a).tolist()}
        return out


def minority_margin(eigs: np.ndarray, inert: Inertia) -> float:
    """Smallest |eigenvalue| on the sign side counted by ``min(n+, n-)``.

    Pushing this toward zero moves an eigenvalue toward the sign change
    that lowers the bound.  Zero when that side is empty.
    """
    tau = inert.tol
    pos = eigs[eigs > tau]
    neg = -eigs[eigs < -tau]
    if inert.n_plus < inert.n_minus:
        side = pos
    elif inert.n_minus < inert.n_plus:
        side = neg
    else:
        side = np.concatenate([pos, neg])
    return float(side.min()) if side.size else 0.0


def _energy(bound: int, margin: float) -> float:
    # strictly increasing in margin and < bound + 1: same order as (bound, margin)
    return bound + margin / (1.0 + margin)


def search_weights(
    g: Graph,
    target: int,
    mode: str = "real",
    budget: int = 5000,
    seed: int = 0,
    *,
    rel_tol: float = ZERO_REL_TOL,
    trace: TextIO | None = None,
    debug: bool = False,
) -> WeightSearchResult:
    """Simulated annealing over edge weights, started at the 0/1 adjacency matrix.

    Every proposal perturbs one uniformly chosen edge weight with a Gaussian
    step (real mode: the value; hermitian mode: modulus and phase
    independently).  Points are ranked lexicographically by
    ``(inertia bound, minority margin)``; the temperature decays by 0.995 per
    step and the step size adapts to keep the acceptance rate moderate.
    ``budget`` counts eigen-decompositions, including the starting matrix.
    """
    if mode not in MODES:
        raise InvalidParameters(f"mode must be one of {MODES}, got {mode!r}")
    if int(budget) != budget or budget < 1:
        raise InvalidParameters(f"budget must be a positive integer, got {budget!r}")

    rng = np.random.default_rng(seed)
    edges = g.edges
    us = np.array([u for u, _ in edges], dtype=int)
    vs = np.array([v for _, v in edges], dtype=int)
    hermitian = mode == "hermitian"
    modulus = np.ones(len(edges))
    phase = np.zeros(len(edges))
    w = np.zeros((g.n, g.n), dtype=np.complex128 if hermitian else np.float64)
    w[us, vs] = 1.0
    w[vs, us] = 1.0

    def evaluate(mat: np.ndarray) -> tuple[int, float]:
        if debug:
            assert not validate_weight_matrix(g, mat), "search left the weight-matrix support"
        eigs = jacobi_eigenvalues(mat)
        inert = classify_spectrum(eigs, rel_tol)
        return inert.bound, minority_margin(eigs, inert)

    bound, margin = evaluate(w)
    evaluations = 1
    energy = _energy(bound, margin)
    best = (bound, margin, w.copy())
    history = [(evaluations, bound, margin)]
    temperature = INITIAL_TEMPERATURE
    sigma = INITIAL_SIGMA
    accepted_window = 0

    def emit(step: int) -> None:
        if trace is not None:
            trace.write(json.dumps({"step": step, "bound": bound, "margin": margin, "temperature": temperature}) + "\n")

    emit(0)
    while evaluations < budget and best[0] > target and edges:
        k = int(rng.integers(len(edges)))
        old_mod, old_phase = modulus[k], phase[k]
        new_mod = old_mod + sigma * rng.standard_normal()
        new_phase = old_phase
        if hermitian:
            new_phase = old_phase + sigma * rng.standard_normal()
            if new_mod < 0:
                new_mod, new_phase = -new_mod, new_phase + math.pi
            new_mod = min(new_mod, WEIGHT_CLAMP)
            new_phase = math.remainder(new_phase, 2 * math.pi)
            value = new_mod * complex(math.cos(new_phase), math.sin(new_phase))
        else:
            new_mod = min(max(new_mod, -WEIGHT_CLAMP), WEIGHT_CLAMP)
            value = new_mod
        u, v = us[k], vs[k]
        old_uv, old_vu = w[u, v], w[v, u]
        w[u, v] = value
        w[v, u] = np.conj(value)

        cand_bound, cand_margin = evaluate(w)
        evaluations += 1
        cand_energy = _energy(cand_bound, cand_margin)
        delta = cand_energy - energy
        if delta <= 0 or rng.random() < math.exp(-delta / max(temperature, 1e-300)):
            modulus[k], phase[k] = new_mod, new_phase
            bound, margin, energy = cand_bound, cand_margin, cand_energy
            accepted_window += 1
            if (bound, margin) < best[:2]:
                best = (bound, margin, w.copy())
                history.append((evaluations, bound, margin))
        else:
            w[u, v], w[v, u] = old_uv, old_vu

        temperature *= COOLING
        if (evaluations - 1) % ADAPT_EVERY == 0:
            rate = accepted_window / ADAPT_EVERY
            if rate > 0.4:
                sigma = min(sigma * 1.2, 5.0)
            elif rate < 0.2:
                sigma = max(sigma * 0.8, 1e-3)
            accepted_window = 0
        emit(evaluations - 1)

    best_bound, best_margin, best_w = best
    return WeightSearchResult(
        best_matrix=HermitianMatrix(best_w),
        best_bound=best_bound,
        target=target,
        reached_target=best_bound <= target,
        evaluations=evaluations,
        seed=seed,
        mode=mode,
        best_margin=best_margin,
        history=history,
    )


def _search_job(args):
    g, target, mode, budget, seed, rel_tol = args
    return search_weights(g, target, mode, budget, seed, rel_tol=rel_tol)


def search_restarts(
    g: Graph,
    target: int,
    mode: str = "real",
    budget: int = 5000,
    seeds: Iterable[int] = (0,),
    *,
    workers: int = 1,
    rel_tol: float = ZERO_REL_TOL,
) -> tuple[WeightSearchResult, list[WeightSearchResult]]:
    """Independent chains, one per seed.  Returns (best, all results in seed order).

    The best result has the lowest bound, then the lowest seed.
    """
    jobs = [(g, target, mode, budget, s, rel_tol) for s in seeds]
    if not jobs:
        raise InvalidParameters("at least one seed is required")
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_job, jobs))
    else:
        results = [_search_job(j) for j in jobs]
    best = min(results, key=lambda r: (r.best_bound, r.seed))
    return best, results


def bipartite_tight_weights(g: Graph) -> HermitianMatrix:
    """Weight 1 on a maximum matching, 0 elsewhere.

    The spectrum is ``+-1`` per matched edge and 0 otherwise, so the
    inertia bound equals ``n - matching size``, which is the independence
    number of a bipartite graph.
    """
    check = is_bipartite(g)
    if not check:
        raise InvalidInput(f"graph is not bipartite (odd cycle {list(check.odd_cycle)})")
    w = np.zeros((g.n, g.n))
    for u, v in maximum_matching_bipartite(g, check.parts):
        w[u, v] = w[v, u] = 1.0
    return HermitianMatrix(w)

