"""Bound chains and certification that the quantum independence number equals alpha.

Every bound collected here is an upper bound on alpha_q(G):

* the inertia bound for any valid Hermitian weighting;
* the ratio (Hoffman) bound for regular graphs and the Golubev bound for
  all graphs, because both bound theta(G);
* theta(G) itself;
* rank of the complement, since alpha_q(G) is the quantum clique number of
  the complement.

So ``alpha == floor(bound)`` for any of them pins alpha_q = alpha.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .bounds import (
    CAP_SLACK,
    BoundValue,
    golubev_bound,
    hoffman_bound,
    rank_bound_clique,
    validate_weight_matrix,
)
from .errors import InvalidInput, NumericalFailure, SizeLimitError
from .exact import MAX_EXACT_ORDER, independence_number
from .graph import Graph, complement, is_bipartite
from .linalg import ZERO_REL_TOL, HermitianMatrix, adjacency_matrix, inertia
from .theta import MAX_THETA_ORDER, lovasz_theta, theta_regular_cap
from .weights import bipartite_tight_weights, search_restarts

THETA_SLACK = 5e-3


class Certification(str, Enum):
    INERTIA_TIGHT = "INERTIA_TIGHT"
    HOFFMAN_FLOOR_TIGHT = "HOFFMAN_FLOOR_TIGHT"
    THETA_FLOOR_TIGHT = "THETA_FLOOR_TIGHT"
    UNKNOWN = "UNKNOWN"


@dataclass
class BoundReport:
    graph: str
    n: int
    m: int
    alpha: int
    alpha_witness: list[int]
    bounds: list[BoundValue]
    certification: Certification
    reason: str
    tolerances: dict
    weight_search: dict | None = None
    notes: list[str] = field(default_factory=list)

    def bound(self, name: str) -> BoundValue | None:
        return next((b for b in self.bounds if b.name == name), None)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "alpha_witness": self.alpha_witness,
            "bounds": [b.to_dict() for b in self.bounds],
            "certification": self.certification.value,
            "reason": self.reason,
            "tolerances": self.tolerances,
            "weight_search": self.weight_search,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, allow_nan=False)

    def to_table(self) -> str:
        lines = [
            f"graph            {self.graph}  (n={self.n}, m={self.m})",
            f"alpha            {self.alpha}   witness {self.alpha_witness}",
        ]
        for b in self.bounds:
            if b.applicable:
                exact = f"  = {b.exact}" if b.exact is not None and b.exact.denominator != 1 else ""
                lines.append(f"{b.name:<17}{b.value:.6f}  (cap {b.integer_cap}){exact}")
            else:
                lines.append(f"{b.name:<17}n/a  ({b.reason})")
        lines.append(f"certification    {self.certification.value}  {self.reason}")
        lines.extend(f"note             {note}" for note in self.notes)
        return "\n".join(lines)


def _inertia_value(name: str, w, rel_tol: float, **detail) -> BoundValue:
    inert = inertia(w, rel_tol)
    info = {"n_plus": inert.n_plus, "n_zero": inert.n_zero, "n_minus": inert.n_minus, "tau": inert.tol}
    info.update(detail)
    return BoundValue(name, float(inert.bound), exact=Fraction(inert.bound), detail=info)


def theta_floor(value: float, cap: BoundValue | None) -> int:
    """Integer cap for a numerical theta estimate.

    ``floor(value + 5e-3)``; if the slack alone pushed it over an integer
    ``k``, drop back to ``k - 1`` only when a certified cap is below ``k``.
    """
    f = math.floor(value + THETA_SLACK)
    if f > math.floor(value) and cap is not None and cap.applicable and cap.value < f:
        f -= 1
    return f


def certify_alpha_q(
    g: Graph,
    *,
    weights: HermitianMatrix | None = None,
    search_budget: int = 0,
    search_mode: str = "real",
    search_restarts_count: int = 1,
    seed: int = 0,
    workers: int = 1,
    theta: bool = True,
    theta_iters: int = 5000,
    theta_tol: float = 1e-4,
    zero_tol: float = ZERO_REL_TOL,
) -> BoundReport:
    """Compute alpha, the full bound chain, and the certification status.

    Weighted inertia is tried when the unweighted bound is not tight: a
    supplied ``weights`` matrix first, then the matching construction for
    bipartite graphs, then annealing if ``search_budget > 0``.
    Precedence: INERTIA_TIGHT, then HOFFMAN_FLOOR_TIGHT (ratio or Golubev
    bound), then THETA_FLOOR_TIGHT.
    """
    if g.n > MAX_EXACT_ORDER:
        raise SizeLimitError(f"reports need exact alpha, limited to n <= {MAX_EXACT_ORDER}")
    witness = independence_number(g)
    alpha = witness.size
    notes: list[str] = []
    bounds: list[BoundValue] = []
    search_info = None

    unweighted = _inertia_value("inertia", adjacency_matrix(g), zero_tol)
    bounds.append(unweighted)

    weighted = None
    if weights is not None:
        if validate_weight_matrix(g, weights):
            raise InvalidInput("supplied weight matrix is not supported on the graph's edges")
        weighted = _inertia_value("inertia_weighted", weights, zero_tol, source="supplied")
    elif unweighted.integer_cap > alpha:
        if g.m and is_bipartite(g):
            weighted = _inertia_value("inertia_weighted", bipartite_tight_weights(g), zero_tol,
                                      source="bipartite-matching")
        elif search_budget > 0 and g.m:
            best, results = search_restarts(
                g, alpha, search_mode, search_budget, range(seed, seed + search_restarts_count),
                workers=workers, rel_tol=zero_tol,
            )
            weighted = _inertia_value("inertia_weighted", best.best_matrix, zero_tol,
                                      source=f"search-{search_mode}", seed=best.seed)
            search_info = {
                "mode": search_mode,
                "budget": search_budget,
                "seeds": [r.seed for r in results],
                "best_bounds": [r.best_bound for r in results],
                "best_seed": best.seed,
                "reached_target": best.reached_target,
            }
    if weighted is not None:
        bounds.append(weighted)

    hoffman = hoffman_bound(g)
    golubev = golubev_bound(g)
    bounds += [hoffman, golubev]

    cap = theta_regular_cap(g)
    theta_value = None
    if not theta:
        bounds.append(BoundValue.not_applicable("theta", "skipped on request"))
    elif g.n > MAX_THETA_ORDER:
        bounds.append(BoundValue.not_applicable("theta", f"n > {MAX_THETA_ORDER}"))
    else:
        res = lovasz_theta(g, theta_iters, theta_tol)
        theta_value = BoundValue("theta", res.value, detail={"iterations": res.iterations,
                                                             "floor_with_slack": theta_floor(res.value, cap)})
        bounds.append(theta_value)

    rank_c = rank_bound_clique(complement(g), zero_tol)
    bounds.append(BoundValue(
        "rank_complement", rank_c.value, rank_c.applicable, rank_c.reason, rank_c.exact,
    ))

    for b in bounds:
        if b.applicable and b.integer_cap < alpha:
            raise NumericalFailure(f"soundness violated: alpha={alpha} exceeds {b.name} cap {b.integer_cap}")

    certification, reason = Certification.UNKNOWN, "no bound in the chain is tight"
    if unweighted.integer_cap == alpha:
        certification, reason = Certification.INERTIA_TIGHT, "unweighted inertia bound equals alpha"
    elif weighted is not None and weighted.integer_cap == alpha:
        certification = Certification.INERTIA_TIGHT
        reason = f"weighted inertia bound ({weighted.detail['source']}) equals alpha"
    elif hoffman.applicable and hoffman.integer_cap == alpha:
        certification, reason = Certification.HOFFMAN_FLOOR_TIGHT, "floor of the ratio bound equals alpha"
    elif golubev.applicable and golubev.integer_cap == alpha:
        certification, reason = Certification.HOFFMAN_FLOOR_TIGHT, "floor of the Golubev bound equals alpha"
    elif theta_value is not None and theta_value.detail["floor_with_slack"] == alpha:
        certification, reason = Certification.THETA_FLOOR_TIGHT, "floor of theta equals alpha"

    if g.m == 0:
        notes.append("edgeless graph: alpha = n trivially")

    return BoundReport(
        graph=g.label or "graph",
        n=g.n,
        m=g.m,
        alpha=alpha,
        alpha_witness=list(witness.vertices),
        bounds=bounds,
        certification=certification,
        reason=reason,
        tolerances={
            "zero_rel_tol": zero_tol,
            "cap_slack": CAP_SLACK,
            "theta_slack": THETA_SLACK,
            "theta_tol": theta_tol,
        },
        weight_search=search_info,
        notes=notes,
    )

