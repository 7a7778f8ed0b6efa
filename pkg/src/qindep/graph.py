"""Simple undirected graphs, standard constructions and structural metadata.

Vertices are always the dense integers ``0..n-1``.  Named constructions fix
their vertex order so that spectra and reports are reproducible:

* Kneser graphs list k-subsets of ``range(n)`` in lexicographic order;
* Paley graphs use integer order on Z_q;
* folded cubes use the binary order of length ``d-1`` strings;
* cartesian products order pairs ``(a, b)`` row-major as ``a * n_h + b``;
* line graphs order edges ``(u, v), u < v`` lexicographically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInput, InvalidParameters


class Graph:
    """Immutable simple graph on ``n >= 1`` vertices."""

    def __init__(self, adjacency, label: str | None = None):
        adj = np.array(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidInput(f"adjacency must be square, got shape {adj.shape}")
        if adj.shape[0] < 1:
            raise InvalidInput("a graph needs at least one vertex")
        if np.any(np.diag(adj)):
            raise InvalidInput("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise InvalidInput("adjacency must be symmetric")
        adj.setflags(write=False)
        self._adj = adj
        self._label = label

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> "Graph":
        if n < 1:
            raise InvalidParameters(f"vertex count must be positive, got {n}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj, label)

    @property
    def label(self) -> str | None:
        return self._label

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    @cached_property
    def m(self) -> int:
        return int(self._adj.sum()) // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return tuple(zip(us.tolist(), vs.tolist()))

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        masks = []
        for row in self._adj:
            mask = 0
            for v in np.flatnonzero(row).tolist():
                mask |= 1 << v
            masks.append(mask)
        return tuple(masks)

    def neighbors(self, u: int) -> list[int]:
        return np.flatnonzero(self._adj[u]).tolist()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def with_label(self, label: str | None) -> "Graph":
        return Graph(self._adj, label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.m}>"


# ---------------------------------------------------------------- constructions


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameters(f"complete graph needs n >= 1, got {n}")
    return Graph(~np.eye(n, dtype=bool), f"K{n}")


def make_empty(n: int) -> Graph:
    if n < 1:
        raise InvalidParameters(f"empty graph needs n >= 1, got {n}")
    return Graph(np.zeros((n, n), dtype=bool), f"empty{n}")


def make_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameters(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), f"P{n}")


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameters(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"C{n}")


def make_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameters(f"complete bipartite graph needs a, b >= 1, got {a}, {b}")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)), f"K{a},{b}")


def make_kneser(n: int, k: int) -> Graph:
    """Kneser graph K(n, k): k-subsets of range(n), adjacent when disjoint."""
    if k < 1 or n < 2 * k:
        raise InvalidParameters(f"Kneser graph needs n >= 2k >= 2, got n={n}, k={k}")
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    size = len(subsets)
    adj = np.zeros((size, size), dtype=bool)
    for i in range(size):
        for j in range(i + 1, size):
            if subsets[i].isdisjoint(subsets[j]):
                adj[i, j] = adj[j, i] = True
    return Graph(adj, f"Kneser({n},{k})")


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def make_paley(q: int) -> Graph:
    """Paley graph on Z_q for a prime q = 1 (mod 4)."""
    if not _is_prime(q) or q % 4 != 1:
        raise InvalidParameters(f"Paley graph needs a prime q = 1 mod 4, got {q}")
    residues = {(x * x) % q for x in range(1, q)}
    adj = np.zeros((q, q), dtype=bool)
    for u in range(q):
        for v in range(q):
            if u != v and (u - v) % q in residues:
                adj[u, v] = True
    return Graph(adj, f"Paley({q})")


def make_hypercube(d: int) -> Graph:
    if d < 1:
        raise InvalidParameters(f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    edges = ((u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b))
    return Graph.from_edges(n, edges, f"Q{d}")


def make_folded_cube(d: int) -> Graph:
    """Folded d-cube: length d-1 binary strings, Hamming distance 1 or d-1."""
    if d < 2:
        raise InvalidParameters(f"folded cube needs d >= 2, got {d}")
    bits = d - 1
    n = 1 << bits
    full = n - 1
    adj = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for b in range(bits):
            adj[u, u ^ (1 << b)] = True
        adj[u, u ^ full] = True
    return Graph(adj, f"folded{d}-cube")


def make_generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle 0..n-1, spokes i -- n+i, inner star polygon n+i -- n+(i+k)%n."""
    if n < 3 or not (1 <= k < n / 2):
        raise InvalidParameters(f"generalized Petersen graph needs n >= 3 and 1 <= k < n/2, got {n}, {k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges, f"GP({n},{k})")


def complement(g: Graph) -> Graph:
    adj = ~g.adjacency
    np.fill_diagonal(adj, False)
    label = None
    if g.label:
        label = g.label[len("complement(") : -1] if g.label.startswith("complement(") else f"complement({g.label})"
    return Graph(adj, label)


def line_graph(g: Graph) -> Graph:
    edges = g.edges
    if not edges:
        raise InvalidInput("line graph of a graph without edges is undefined")
    k = len(edges)
    adj = np.zeros((k, k), dtype=bool)
    for i in range(k):
        a, b = edges[i]
        for j in range(i + 1, k):
            c, d = edges[j]
            if a == c or a == d or b == c or b == d:
                adj[i, j] = adj[j, i] = True
    return Graph(adj, f"L({g.label})" if g.label else None)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    adj = np.kron(g.adjacency, np.eye(h.n, dtype=bool)) | np.kron(np.eye(g.n, dtype=bool), h.adjacency)
    label = f"{g.label}x{h.label}" if g.label and h.label else None
    return Graph(adj, label)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    adj = np.zeros((n, n), dtype=bool)
    adj[: g.n, : g.n] = g.adjacency
    adj[g.n :, g.n :] = h.adjacency
    return Graph(adj)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is vertex ``order[i]`` of ``g``."""
    idx = np.asarray(order)
    if sorted(idx.tolist()) != list(range(g.n)):
        raise InvalidInput("order must be a permutation of the vertices")
    return Graph(g.adjacency[np.ix_(idx, idx)], g.label)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph(upper | upper.T)


def random_bipartite_graph(a: int, b: int, p: float, rng: np.random.Generator) -> Graph:
    block = rng.random((a, b)) < p
    adj = np.zeros((a + b, a + b), dtype=bool)
    adj[:a, a:] = block
    adj[a:, :a] = block.T
    return Graph(adj)


# ---------------------------------------------------------------- metadata


def degrees(g: Graph) -> list[int]:
    return g.adjacency.sum(axis=1).astype(int).tolist()


def is_regular(g: Graph) -> int | None:
    """Common degree of a regular graph, ``None`` otherwise."""
    deg = degrees(g)
    return deg[0] if all(x == deg[0] for x in deg) else None


@dataclass(frozen=True)
class BipartiteCheck:
    bipartite: bool
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteCheck:
    """BFS 2-colouring; returns the colour classes or an odd cycle as witness."""
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartiteCheck(False, odd_cycle=_odd_cycle(u, v, parent, depth))
    left = tuple(u for u in range(g.n) if color[u] == 0)
    right = tuple(u for u in range(g.n) if color[u] == 1)
    return BipartiteCheck(True, parts=(left, right))


def _odd_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # u, v are BFS-tree vertices of equal colour joined by an edge
    path_u, path_v = [u], [v]
    while depth[path_u[-1]] > depth[path_v[-1]]:
        path_u.append(parent[path_u[-1]])
    while depth[path_v[-1]] > depth[path_u[-1]]:
        path_v.append(parent[path_v[-1]])
    while path_u[-1] != path_v[-1]:
        path_u.append(parent[path_u[-1]])
        path_v.append(parent[path_v[-1]])
    return tuple(path_u + path_v[-2::-1])


def girth(g: Graph) -> float:
    """Length of a shortest cycle (``inf`` for forests), by BFS from every vertex."""
    best = float("inf")
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best
