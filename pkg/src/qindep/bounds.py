"""Closed-form spectral upper bounds: inertia, Hoffman ratio, Golubev, rank."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InvalidInput
from .graph import Graph, complement, degrees, is_regular
from .linalg import (
    ZERO_REL_TOL,
    adjacency_matrix,
    as_hermitian,
    classify_spectrum,
    eigenvalues_hermitian,
    inertia,
    laplacian,
)

CAP_SLACK = 1e-9
WEIGHT_ATOL = 1e-12


@dataclass(frozen=True)
class BoundValue:
    """One upper bound.  ``integer_cap`` is ``floor(value + 1e-9)``.

    ``exact`` holds a rational value when the underlying eigenvalues are
    integers (within 1e-9), so closed forms can be compared exactly.
    """

    name: str
    value: float | None
    applicable: bool = True
    reason: str = ""
    exact: Fraction | None = None
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def integer_cap(self) -> int | None:
        if not self.applicable or self.value is None:
            return None
        return math.floor(self.value + CAP_SLACK)

    @classmethod
    def not_applicable(cls, name: str, reason: str) -> "BoundValue":
        return cls(name, None, applicable=False, reason=reason)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "integer_cap": self.integer_cap,
            "applicable": self.applicable,
            "reason": self.reason,
            "exact": None if self.exact is None else str(self.exact),
            "detail": self.detail,
        }


def _as_integer(x: float) -> int | None:
    r = round(x)
    return int(r) if abs(x - r) < 1e-9 else None


def inertia_bound(w, rel_tol: float = ZERO_REL_TOL) -> int:
    """``n0(W) + min(n+(W), n-(W))``."""
    return inertia(w, rel_tol).bound


def validate_weight_matrix(g: Graph, w, atol: float = WEIGHT_ATOL) -> list[tuple[int, int, complex]]:
    """Entries that must vanish but do not: the diagonal and every non-edge.

    An empty list means ``w`` is a valid weighted adjacency matrix of ``g``.
    """
    a = as_hermitian(w).entries
    if a.shape[0] != g.n:
        raise InvalidInput(f"weight matrix has dim {a.shape[0]}, graph has {g.n} vertices")
    forbidden = ~g.adjacency
    bad = np.argwhere(forbidden & (np.abs(a) > atol))
    return [(int(u), int(v), complex(a[u, v])) for u, v in bad if u <= v]


def hoffman_bound(g: Graph) -> BoundValue:
    deg = is_regular(g)
    if deg is None:
        return BoundValue.not_applicable("hoffman", "graph is not regular")
    if deg == 0:
        return BoundValue.not_applicable("hoffman", "graph has no edges")
    lam = abs(float(eigenvalues_hermitian(adjacency_matrix(g))[0]))
    value = g.n * lam / (deg + lam)
    k = _as_integer(lam)
    exact = Fraction(g.n * k, deg + k) if k is not None else None
    return BoundValue("hoffman", value, exact=exact)


def golubev_bound(g: Graph) -> BoundValue:
    mu = float(eigenvalues_hermitian(laplacian(g))[-1])
    if g.m == 0:
        return BoundValue.not_applicable("golubev", "graph has no edges (Laplacian spectral radius 0)")
    delta = min(degrees(g))
    value = g.n * (mu - delta) / mu
    k = _as_integer(mu)
    exact = Fraction(g.n * (k - delta), k) if k is not None else None
    return BoundValue("golubev", value, exact=exact)


def rank_bound_clique(g: Graph, rel_tol: float = ZERO_REL_TOL) -> BoundValue:
    """Adjacency rank, an upper bound on the quantum clique number."""
    if g.m == 0:
        return BoundValue.not_applicable("rank", "graph has no edges")
    r = inertia(adjacency_matrix(g), rel_tol).rank
    return BoundValue("rank", float(r), exact=Fraction(r))


@dataclass(frozen=True)
class ComplementInertia:
    n: int
    n_minus: int
    n_minus_complement: int

    @property
    def holds(self) -> bool:
        return self.n - 1 <= self.n_minus + self.n_minus_complement


def complement_inertia(g: Graph, rel_tol: float = ZERO_REL_TOL) -> ComplementInertia:
    a = classify_spectrum(eigenvalues_hermitian(adjacency_matrix(g)), rel_tol)
    b = classify_spectrum(eigenvalues_hermitian(adjacency_matrix(complement(g))), rel_tol)
    return ComplementInertia(g.n, a.n_minus, b.n_minus)


def complement_inertia_check(g: Graph, rel_tol: float = ZERO_REL_TOL) -> bool:
    """Whether ``n - 1 <= n-(A) + n-(complement A)``."""
    return complement_inertia(g, rel_tol).holds
