"""Checking quantum-independence certificates and projective packings.

A quantum certificate of size ``t`` assigns a d x d orthogonal projector
``P[u, i]`` to every vertex ``u`` and round ``i < t``.  It must satisfy

* completeness: ``sum_u P[u, i] = I`` for each ``i``;
* same-vertex orthogonality: ``tr(P[u, i]^* P[u, j]) = 0`` for ``i != j``;
* edge orthogonality: ``tr(P[u, i]^* P[v, j]) = 0`` for ``i != j``, ``uv`` an edge.

A projective packing assigns one projector ``P[u]`` per vertex with
``tr(P[u]^* P[v]) = 0`` on edges; its value is ``sum_u rank(P[u]) / d``.
Missing keys stand for the zero projector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Iterable, Mapping

import numpy as np

from .bounds import validate_weight_matrix
from .errors import InvalidInput, NumericalFailure, ParseError
from .exact import IndependentSetWitness
from .graph import Graph
from .linalg import HermitianMatrix, as_hermitian, eigh_hermitian

PROJECTOR_TOL = 1e-8
CONDITION_TOL = 1e-8
RANK_TOL = 1e-6
ISOTROPY_TOL = 1e-7

Key = Hashable  # vertex ``u`` or pair ``(u, i)``


class ProjectorFamily:
    """Projectors of a common dimension ``d`` keyed by ``u`` or ``(u, i)``."""

    def __init__(self, d: int, entries: Mapping[Key, object] | Iterable[tuple[Key, object]] = ()):
        if d < 1:
            raise InvalidInput(f"projector dimension must be >= 1, got {d}")
        self.d = d
        items = entries.items() if isinstance(entries, Mapping) else entries
        self._entries: dict[Key, HermitianMatrix] = {}
        for key, mat in items:
            h = as_hermitian(np.atleast_2d(np.asarray(mat)) if not isinstance(mat, HermitianMatrix) else mat)
            if h.dim != d:
                raise InvalidInput(f"projector for key {key!r} has dimension {h.dim}, expected {d}")
            self._entries[_norm_key(key)] = h

    @property
    def entries(self) -> dict[Key, HermitianMatrix]:
        return dict(self._entries)

    def keys(self):
        return self._entries.keys()

    def matrix(self, key: Key) -> np.ndarray:
        h = self._entries.get(_norm_key(key))
        return np.zeros((self.d, self.d)) if h is None else h.entries

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f"<ProjectorFamily d={self.d} keys={len(self)}>"

    # JSON: {"d": int, "entries": [{"vertex": u, "index": i?, "re": [[..]], "im": [[..]]}]}
    def to_json_dict(self) -> dict:
        out = []
        for key in sorted(self._entries, key=lambda k: k if isinstance(k, tuple) else (k, -1)):
            a = self._entries[key].entries
            item = {"vertex": key[0] if isinstance(key, tuple) else key}
            if isinstance(key, tuple):
                item["index"] = key[1]
            item["re"] = np.real(a).tolist()
            item["im"] = np.imag(a).tolist()
            out.append(item)
        return {"d": self.d, "entries": out}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ProjectorFamily":
        try:
            d = int(doc["d"])
            items = []
            for pos, item in enumerate(doc["entries"]):
                re = np.array(item["re"], dtype=float)
                im = np.array(item.get("im", np.zeros_like(re)), dtype=float)
                if re.shape != im.shape:
                    raise ParseError(f"entry {pos}: 're' and 'im' shapes differ")
                u = int(item["vertex"])
                key = (u, int(item["index"])) if item.get("index") is not None else u
                items.append((key, re + 1j * im if np.any(im) else re))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed projector family: {exc}") from exc
        return cls(d, items)

    @classmethod
    def from_json(cls, text: str) -> "ProjectorFamily":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
        return cls.from_json_dict(doc)

    @classmethod
    def load(cls, path: str | Path) -> "ProjectorFamily":
        return cls.from_json(Path(path).read_text())


def _norm_key(key: Key) -> Key:
    if isinstance(key, (tuple, list)):
        return (int(key[0]), int(key[1]))
    return int(key)


@dataclass(frozen=True)
class Violation:
    condition: str
    keys: tuple
    residual: float


@dataclass
class CertificateVerdict:
    violations: list[Violation] = field(default_factory=list)
    value: float | None = None

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "value": self.value,
            "violations": [
                {"condition": v.condition, "keys": [list(k) if isinstance(k, tuple) else k for k in v.keys],
                 "residual": v.residual}
                for v in self.violations
            ],
        }


def trace_inner(x: np.ndarray, y: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product ``tr(X^* Y)``."""
    return complex(np.vdot(x, y))


def projector_residual(p: np.ndarray) -> float:
    return float(np.linalg.norm(p @ p - p))


def _check_projectors(fam: ProjectorFamily, keys: Iterable[Key], out: list[Violation]) -> None:
    for key in keys:
        res = projector_residual(fam.matrix(key))
        if res >= PROJECTOR_TOL:
            out.append(Violation("projector", (key,), res))


def verify_quantum_certificate(g: Graph, t: int, fam: ProjectorFamily) -> CertificateVerdict:
    violations: list[Violation] = []
    d = fam.d
    for key in fam.keys():
        if not (isinstance(key, tuple) and 0 <= key[0] < g.n and 0 <= key[1] < t):
            violations.append(Violation("unknown-key", (key,), float("nan")))
    _check_projectors(fam, sorted(k for k in fam.keys() if isinstance(k, tuple)), violations)

    # stack[u, i] = P[u, i]
    stack = np.zeros((g.n, t, d, d), dtype=np.complex128)
    for key in fam.keys():
        if isinstance(key, tuple) and 0 <= key[0] < g.n and 0 <= key[1] < t:
            stack[key] = fam.matrix(key)
    eye = np.eye(d)
    for i in range(t):
        res = float(np.linalg.norm(stack[:, i].sum(axis=0) - eye))
        if res >= CONDITION_TOL:
            violations.append(Violation("completeness", (i,), res))
    # gram[u, i, v, j] = tr(P[u, i]^* P[v, j])
    gram = np.einsum("uiab,vjab->uivj", stack.conj(), stack)
    for u in range(g.n):
        for i in range(t):
            for j in range(i + 1, t):
                res = abs(gram[u, i, u, j])
                if res >= CONDITION_TOL:
                    violations.append(Violation("same-vertex", ((u, i), (u, j)), float(res)))
    for u, v in g.edges:
        for i in range(t):
            for j in range(t):
                if i != j:
                    res = abs(gram[u, i, v, j])
                    if res >= CONDITION_TOL:
                        violations.append(Violation("edge", ((u, i), (v, j)), float(res)))
    return CertificateVerdict(violations, float(t) if not violations else None)


def classical_certificate(g: Graph, s: IndependentSetWitness) -> ProjectorFamily:
    """d = 1 certificate: round ``i`` puts the scalar 1 on the i-th vertex of ``s``."""
    if not s.is_valid_for(g):
        raise InvalidInput(f"{list(s.vertices)} is not an independent set of the graph")
    one = np.ones((1, 1))
    return ProjectorFamily(1, {(u, i): one for i, u in enumerate(s.vertices)})


def collapse_to_packing(fam: ProjectorFamily, t: int, g: Graph | None = None) -> ProjectorFamily:
    """Per-vertex sums ``P[u] = sum_i P[u, i]``.

    The input is checked first: completely when ``g`` is given, otherwise
    for the graph-independent conditions (projectors, completeness,
    same-vertex orthogonality), which are what make each sum a projector.
    """
    if g is None:
        # edgeless graph on the mentioned vertices: graph-free conditions only
        n = 1 + max((k[0] for k in fam.keys() if isinstance(k, tuple)), default=0)
        g = Graph(np.zeros((n, n), dtype=bool))
    bad = verify_quantum_certificate(g, t, fam).violations
    if bad:
        first = bad[0]
        raise InvalidInput(f"not a valid quantum certificate: {first.condition} violated at {first.keys}")
    sums: dict[int, np.ndarray] = {}
    for u, i in sorted(fam.keys()):
        sums[u] = sums.get(u, 0) + fam.matrix((u, i))
    return ProjectorFamily(fam.d, sums)


def verify_projective_packing(g: Graph, fam: ProjectorFamily) -> CertificateVerdict:
    """Check a packing and compute its value ``sum_u rank(P[u]) / d``.

    Ranks are read off as rounded traces; a trace further than 1e-6 from
    an integer raises :class:`NumericalFailure`.
    """
    violations: list[Violation] = []
    keys = list(fam.keys())
    for key in keys:
        if isinstance(key, tuple) or not 0 <= key < g.n:
            violations.append(Violation("unknown-key", (key,), float("nan")))
    vertex_keys = sorted(k for k in keys if not isinstance(k, tuple) and 0 <= k < g.n)
    _check_projectors(fam, vertex_keys, violations)
    for u, v in g.edges:
        res = abs(trace_inner(fam.matrix(u), fam.matrix(v)))
        if res >= CONDITION_TOL:
            violations.append(Violation("edge", (u, v), res))
    total = 0
    for u in vertex_keys:
        tr = float(np.trace(fam.matrix(u)).real)
        r = round(tr)
        if abs(tr - r) >= RANK_TOL:
            raise NumericalFailure(f"trace of P[{u}] is not an integer; not a valid projector", abs(tr - r))
        total += r
    return CertificateVerdict(violations, total / fam.d)


def range_basis(p: np.ndarray) -> np.ndarray:
    """Orthonormal eigenvectors (columns) of a projector for eigenvalue 1."""
    w, v = eigh_hermitian(p)
    return v[:, w > 0.5]


def max_cross_overlap(p: np.ndarray, q: np.ndarray) -> float:
    """Largest ``|<psi_k|phi_l>|`` over eigenvectors spanning the two ranges."""
    a, b = range_basis(p), range_basis(q)
    if a.shape[1] == 0 or b.shape[1] == 0:
        return 0.0
    return float(np.max(np.abs(a.conj().T @ b)))


@dataclass
class IsotropyReport:
    isotropic: bool
    dimension: int
    gram_residual: float
    form_residual: float
    worst_pair: tuple | None = None

    def __bool__(self) -> bool:
        return self.isotropic


def isotropy_check(w, fam: ProjectorFamily, g: Graph) -> IsotropyReport:
    """Check that the vectors ``|u> (x) |psi_(u,k)>`` are orthonormal and
    isotropic for the form of ``W (x) I_d``.

    ``psi_(u,k)`` run over the spectral resolution of each ``P[u]``.
    ``worst_pair`` names the pair ``((u, k), (v, l))`` with the largest form
    value when the check fails.
    """
    wm = as_hermitian(w)
    if validate_weight_matrix(g, wm):
        raise InvalidInput("W is not a weighted adjacency matrix of the graph")
    d = fam.d
    labels, columns = [], []
    for u in sorted(k for k in fam.keys() if not isinstance(k, tuple)):
        basis = range_basis(fam.matrix(u))
        e = np.zeros(g.n)
        e[u] = 1.0
        for k in range(basis.shape[1]):
            labels.append((u, k))
            columns.append(np.kron(e, basis[:, k]))
    if not columns:
        return IsotropyReport(True, 0, 0.0, 0.0)
    psi = np.stack(columns, axis=1)
    big = np.kron(wm.entries, np.eye(d))
    gram = psi.conj().T @ psi
    form = psi.conj().T @ big @ psi
    gram_res = float(np.max(np.abs(gram - np.eye(len(labels)))))
    abs_form = np.abs(form)
    form_res = float(abs_form.max())
    ok = gram_res < ISOTROPY_TOL and form_res < ISOTROPY_TOL
    worst = None
    if not ok and form_res >= ISOTROPY_TOL:
        a, b = np.unravel_index(int(np.argmax(abs_form)), abs_form.shape)
        worst = (labels[a], labels[b])
    return IsotropyReport(ok, len(labels), gram_res, form_res, worst)
