"""Dense Hermitian eigenvalues by cyclic Jacobi, and inertia classification."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput, NumericalFailure
from .graph import Graph

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


HERMITIAN_ATOL = 1e-12
ZERO_REL_TOL = 1e-8
OFFDIAG_REL_TOL = 1e-12
MAX_SWEEPS = 100


class HermitianMatrix:
    """Square complex (or real) matrix with enforced conjugate symmetry.

    Input is accepted if it is Hermitian within ``1e-12`` entrywise and is
    then replaced by ``(M + M^*) / 2``.  Real input stays ``float64``.
    """

    def __init__(self, entries, atol: float = HERMITIAN_ATOL):
        a = np.array(entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise InvalidInput(f"expected a non-empty square matrix, got shape {a.shape}")
        if np.iscomplexobj(a):
            a = a.astype(np.complex128)
            dev = np.max(np.abs(a - a.conj().T))
            if dev > atol:
                raise InvalidInput(f"matrix is not Hermitian (max |M - M*| = {dev:.3e})")
            a = (a + a.conj().T) / 2
            if not np.any(a.imag):
                a = a.real.copy()
        else:
            a = a.astype(np.float64)
            dev = np.max(np.abs(a - a.T))
            if dev > atol:
                raise InvalidInput(f"matrix is not symmetric (max |M - M^T| = {dev:.3e})")
            a = (a + a.T) / 2
        if not np.all(np.isfinite(a)):
            raise InvalidInput("matrix has non-finite entries")
        a.setflags(write=False)
        self._a = a

    @property
    def dim(self) -> int:
        return self._a.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._a

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self._a)

    def __array__(self, dtype=None, copy=None):
        return self._a if dtype is None else self._a.astype(dtype)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self._a.shape == other._a.shape and np.array_equal(self._a, other._a)

    def __repr__(self) -> str:
        kind = "real" if self.is_real else "complex"
        return f"<HermitianMatrix dim={self.dim} {kind}>"


def as_hermitian(m) -> HermitianMatrix:
    return m if isinstance(m, HermitianMatrix) else HermitianMatrix(m)


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int
    tol: float

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def bound(self) -> int:
        """Maximal totally isotropic dimension ``n0 + min(n+, n-)``."""
        return self.n_zero + min(self.n_plus, self.n_minus)

    def counts(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)


@njit(cache=True)
def _offdiag_norm(a):
    n = a.shape[0]
    total = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                total += abs(a[i, j]) ** 2
    return math.sqrt(total)


@njit(cache=True)
def _jacobi_kernel(a, v, want_vectors, threshold, max_sweeps):
    """Cyclic row-by-row Jacobi on ``a`` in place.

    Each (p, q) rotation first removes the phase of ``a[p, q]`` and then
    applies the real symmetric rotation, i.e. ``a <- U^* a U`` with
    ``U = [[c, s], [-s d, c d]]``, ``d = conj(a_pq) / |a_pq|``.
    Returns (sweeps used, final off-diagonal norm); sweeps = -1 when
    the threshold was not reached.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = _offdiag_norm(a)
        if off < threshold:
            return sweep, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < 1e-300:
                    continue
                d = np.conj(apq) / r
                dc = np.conj(d)
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * d * akq
                    a[k, q] = s * akp + c * d * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * dc * aqk
                    a[q, k] = s * apk + c * dc * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if want_vectors:
                    for k in range(n):
                        vkp = v[k, p]
                        vkq = v[k, q]
                        v[k, p] = c * vkp - s * d * vkq
                        v[k, q] = s * vkp + c * d * vkq
    off = _offdiag_norm(a)
    if off < threshold:
        return max_sweeps, off
    return -1, off


def _run_jacobi(a: np.ndarray, want_vectors: bool, max_sweeps: int):
    work = np.array(a, dtype=np.complex128 if np.iscomplexobj(a) else np.float64, order="C")
    vecs = np.eye(work.shape[0], dtype=work.dtype)
    threshold = OFFDIAG_REL_TOL * (1.0 + np.linalg.norm(work))
    sweeps, off = _jacobi_kernel(work, vecs, want_vectors, threshold, max_sweeps)
    if sweeps < 0:
        raise NumericalFailure(f"Jacobi did not converge in {max_sweeps} sweeps", off)
    return np.diagonal(work).real.copy(), vecs


def jacobi_eigenvalues(a: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian ndarray, without input validation."""
    w, _ = _run_jacobi(a, False, max_sweeps)
    w.sort()
    return w


def eigenvalues_hermitian(m, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    return jacobi_eigenvalues(as_hermitian(m).entries, max_sweeps)


def eigh_hermitian(m, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors as columns."""
    w, v = _run_jacobi(as_hermitian(m).entries, True, max_sweeps)
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def classify_spectrum(eigs: np.ndarray, rel_tol: float = ZERO_REL_TOL) -> Inertia:
    """Count signs with the zero band ``|x| <= rel_tol * max(1, spectral radius)``."""
    eigs = np.asarray(eigs)
    radius = float(np.max(np.abs(eigs))) if eigs.size else 0.0
    tau = rel_tol * max(1.0, radius)
    n_plus = int(np.count_nonzero(eigs > tau))
    n_minus = int(np.count_nonzero(eigs < -tau))
    return Inertia(n_plus, eigs.size - n_plus - n_minus, n_minus, tau)


def inertia(m, rel_tol: float = ZERO_REL_TOL) -> Inertia:
    return classify_spectrum(eigenvalues_hermitian(m), rel_tol)


def adjacency_matrix(g: Graph) -> HermitianMatrix:
    return HermitianMatrix(g.adjacency.astype(np.float64))


def laplacian(g: Graph) -> HermitianMatrix:
    a = g.adjacency.astype(np.float64)
    return HermitianMatrix(np.diag(a.sum(axis=1)) - a)


def tensor_with_identity(m, d: int) -> HermitianMatrix:
    """``m (x) I_d``; vertex index is the slow coordinate."""
    if d < 1:
        raise InvalidInput(f"tensor dimension must be >= 1, got {d}")
    a = as_hermitian(m).entries
    return HermitianMatrix(np.kron(a, np.eye(d)))
