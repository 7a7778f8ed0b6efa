"""Lovász theta as a lambda-max minimisation.

theta(G) = min lambda_max(B) over real symmetric B with B[u, u] = 1 and
B[u, v] = 1 for every non-edge; entries on edges are free.  Every such B is
dual feasible, so its top eigenvalue is an upper bound on theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .bounds import BoundValue, hoffman_bound
from .errors import SizeLimitError
from .graph import Graph, is_regular
from .linalg import eigh_hermitian, jacobi_eigenvalues, njit

MAX_THETA_ORDER = 32
PATIENCE = 200
POWER_TOL = 1e-10
POWER_MAX_ITERS = 10000
# smoothing levels for the log-sum-exp polish, coarse to fine
SMOOTHING = (1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4)
POLISH_ITERS = 500


@dataclass
class ThetaResult:
    value: float
    iterations: int
    residual: float
    certificate_matrix: np.ndarray
    start_value: float = math.nan
    subgradient_value: float = math.nan
    # best-so-far estimate after every iteration
    history: list[float] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "iterations": self.iterations,
            "residual": self.residual,
            "start_value": self.start_value,
            "subgradient_value": self.subgradient_value,
        }


@njit(cache=True)
def _power_kernel(b, x, shift, tol, max_iters):
    n = b.shape[0]
    y = np.empty(n)
    lam = 0.0
    for it in range(max_iters):
        # y = (B + shift I) x
        for i in range(n):
            acc = shift * x[i]
            for j in range(n):
                acc += b[i, j] * x[j]
            y[i] = acc
        lam = 0.0
        norm = 0.0
        for i in range(n):
            lam += x[i] * y[i]
            norm += y[i] * y[i]
        norm = math.sqrt(norm)
        res = 0.0
        for i in range(n):
            r = y[i] - lam * x[i]
            res += r * r
        res = math.sqrt(res)
        for i in range(n):
            x[i] = y[i] / norm
        if res < tol:
            return lam - shift, it + 1
    return lam - shift, max_iters


def top_eigenpair(b: np.ndarray, x0: np.ndarray | None = None,
                  tol: float = POWER_TOL, max_iters: int = POWER_MAX_ITERS) -> tuple[float, np.ndarray, int]:
    """Largest eigenvalue and unit eigenvector of a real symmetric matrix.

    Power iteration on ``B + cI`` with ``c = 1 + max absolute row sum``,
    which makes the shifted matrix positive definite.  ``x0`` warm-starts
    the iteration.  The eigenvalue is the Rayleigh quotient of the last
    iterate, so it can only underestimate the true top eigenvalue.
    """
    n = b.shape[0]
    shift = 1.0 + float(np.max(np.abs(b).sum(axis=1)))
    x = np.ones(n) if x0 is None else np.array(x0, dtype=np.float64)
    norm = np.linalg.norm(x)
    x = x / norm if norm > 0 else np.ones(n) / math.sqrt(n)
    lam, iters = _power_kernel(np.ascontiguousarray(b, dtype=np.float64), x, shift, tol, max_iters)
    return float(lam), x, int(iters)


def _lambda_max(b: np.ndarray) -> float:
    return float(jacobi_eigenvalues(b)[-1])


def _uniform_start(g: Graph) -> tuple[np.ndarray, float]:
    """Best point on the line J + xA, by golden-section search (convex in x)."""
    j = np.ones((g.n, g.n))
    a = g.adjacency.astype(np.float64)
    lo, hi = -float(g.n), 0.0
    ratio = (math.sqrt(5) - 1) / 2
    x1, x2 = hi - ratio * (hi - lo), lo + ratio * (hi - lo)
    f1, f2 = _lambda_max(j + x1 * a), _lambda_max(j + x2 * a)
    for _ in range(80):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - ratio * (hi - lo)
            f1 = _lambda_max(j + x1 * a)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + ratio * (hi - lo)
            f2 = _lambda_max(j + x2 * a)
    x = (lo + hi) / 2
    b = j + x * a
    return b, _lambda_max(b)


def _smoothed_polish(b: np.ndarray, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
    """Refine the edge entries of ``b`` by minimising mu * log sum exp(lambda_i / mu).

    The smoothed function is within ``mu log n`` of lambda_max and
    differentiable, so L-BFGS makes progress where the subgradient method
    stalls on a repeated top eigenvalue.  Fixed entries are never touched.
    """
    base = b.copy()

    def build(y: np.ndarray) -> np.ndarray:
        m = base.copy()
        m[us, vs] = y
        m[vs, us] = y
        return m

    y = b[us, vs].copy()
    for mu in SMOOTHING:
        def objective(y, mu=mu):
            w, v = eigh_hermitian(build(y))
            v = np.real(v)
            z = np.exp((w - w[-1]) / mu)
            total = z.sum()
            weights = z / total
            grad = 2.0 * np.einsum("ij,j,ij->i", v[us], weights, v[vs])
            return w[-1] + mu * math.log(total), grad

        y = minimize(objective, y, jac=True, method="L-BFGS-B",
                     options={"maxiter": POLISH_ITERS, "gtol": 1e-9}).x
    return build(y)


def lovasz_theta(g: Graph, max_iters: int = 5000, tol: float = 1e-4, step_scale: float = 1.0,
                 polish: bool = True) -> ThetaResult:
    """Upper estimate of theta(G) by projected subgradient descent on lambda_max.

    Starts from the best ``J + xA`` (which is optimal for edge-transitive and
    strongly regular graphs), then steps ``B <- B - (c / sqrt(k)) * xx^T`` on
    edge positions, ``x`` the top eigenvector.  Stops after ``max_iters`` or
    once the best value has improved by less than ``tol`` over 200
    iterations.  The reported value is the Jacobi top eigenvalue of the best
    matrix, so it is a valid upper bound up to eigensolver error.
    """
    n = g.n
    if n > MAX_THETA_ORDER:
        raise SizeLimitError(f"theta limited to n <= {MAX_THETA_ORDER}, got {n}")
    if g.m == 0:
        return ThetaResult(float(n), 0, 0.0, np.ones((n, n)), float(n), float(n), [float(n)])

    us = np.array([u for u, _ in g.edges])
    vs = np.array([v for _, v in g.edges])
    b, start = _uniform_start(g)
    start_b = b.copy()
    best_b = b.copy()
    best = start
    history = [best]
    x = None
    residual = 0.0
    k = 0
    for k in range(1, max_iters + 1):
        lam, x, _ = top_eigenpair(b, x)
        if lam < best:
            residual = best - lam
            best = lam
            best_b = b.copy()
        history.append(best)
        if k >= PATIENCE and history[k - PATIENCE] - best < tol:
            break
        step = step_scale / math.sqrt(k)
        delta = step * x[us] * x[vs]
        b[us, vs] -= delta
        b[vs, us] -= delta

    value = _lambda_max(best_b)
    if value > start:
        # power-iteration underestimate picked a worse matrix
        value, best_b = start, start_b
    sub_value = value
    if polish:
        refined = _smoothed_polish(best_b, us, vs)
        refined_value = _lambda_max(refined)
        if refined_value < value:
            if refined_value < history[-1]:
                history.append(refined_value)
            value, best_b = refined_value, refined
    return ThetaResult(value, k, residual, best_b, start, sub_value, history)


def theta_regular_cap(g: Graph) -> BoundValue:
    """Ratio bound n|lambda_min| / (Delta + |lambda_min|), an upper bound on theta for regular graphs."""
    if is_regular(g) is None:
        return BoundValue.not_applicable("theta_regular_cap", "graph is not regular")
    h = hoffman_bound(g)
    if not h.applicable:
        return BoundValue.not_applicable("theta_regular_cap", h.reason)
    return BoundValue("theta_regular_cap", h.value, exact=h.exact)
