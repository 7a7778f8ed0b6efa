"""Exact combinatorial ground truth: independence number, clique number, matchings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidInput, SizeLimitError
from .graph import Graph, complement, is_bipartite

MAX_EXACT_ORDER = 64


@dataclass(frozen=True)
class IndependentSetWitness:
    size: int
    vertices: tuple[int, ...]

    def __post_init__(self):
        if self.size != len(self.vertices):
            raise InvalidInput("witness size does not match its vertex list")

    def is_valid_for(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        return not any(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def independence_number(g: Graph) -> IndependentSetWitness:
    """Maximum independent set by branch and bound.

    Branches on a maximum-degree vertex of the residual graph (lowest index
    on ties): take it (dropping its closed neighbourhood) or discard it.
    A branch is cut when ``|current| + |residual| <= best``.  Residual
    vertices of degree zero are always taken.
    """
    if g.n > MAX_EXACT_ORDER:
        raise SizeLimitError(f"exact independence number limited to n <= {MAX_EXACT_ORDER}, got {g.n}")
    nbr = g.neighbor_masks
    best_size = 0
    best_set = 0

    def search(residual: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set
        if size + residual.bit_count() <= best_size:
            return
        pick, pick_deg, isolated = -1, -1, 0
        for v in _bits(residual):
            deg = (nbr[v] & residual).bit_count()
            if deg == 0:
                isolated |= 1 << v
            elif deg > pick_deg:
                pick, pick_deg = v, deg
        if isolated:
            chosen |= isolated
            size += isolated.bit_count()
            residual &= ~isolated
        if pick < 0 or not residual:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        bit = 1 << pick
        search(residual & ~bit & ~nbr[pick], chosen | bit, size + 1)
        search(residual & ~bit, chosen, size)

    search((1 << g.n) - 1, 0, 0)
    vertices = tuple(_bits(best_set))
    return IndependentSetWitness(len(vertices), vertices)


def clique_number(g: Graph) -> int:
    return independence_number(complement(g)).size


def maximum_matching_bipartite(g: Graph, parts=None) -> list[tuple[int, int]]:
    """Maximum matching of a bipartite graph by Hopcroft-Karp.

    ``parts`` is a 2-colouring ``(left, right)``; computed when omitted.
    Returned edges are ``(left vertex, right vertex)`` sorted by left vertex.
    """
    if parts is None:
        check = is_bipartite(g)
        if not check:
            raise InvalidInput(f"graph is not bipartite (odd cycle {list(check.odd_cycle)})")
        parts = check.parts
    left, right = (list(p) for p in parts)
    side = {}
    for u in left:
        side[u] = 0
    for v in right:
        if v in side:
            raise InvalidInput(f"vertex {v} appears in both parts")
        side[v] = 1
    if len(side) != g.n:
        raise InvalidInput("parts must cover every vertex")
    for u, v in g.edges:
        if side[u] == side[v]:
            raise InvalidInput(f"edge ({u}, {v}) lies inside one part; graph is not bipartite for these parts")

    adj = {u: [v for v in g.neighbors(u)] for u in left}
    match_l: dict[int, int | None] = {u: None for u in left}
    match_r: dict[int, int | None] = {v: None for v in right}
    inf = g.n + 1

    def bfs() -> dict[int, int]:
        dist = {}
        queue = deque()
        for u in left:
            if match_l[u] is None:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w is None:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist if found else {}

    def dfs(u: int, dist: dict[int, int]) -> bool:
        for v in adj[u]:
            w = match_r[v]
            if w is None or (dist[w] == dist[u] + 1 and dfs(w, dist)):
                match_l[u], match_r[v] = v, u
                return True
        dist[u] = inf
        return False

    while True:
        dist = bfs()
        if not dist:
            break
        for u in left:
            if match_l[u] is None:
                dfs(u, dist)
    return sorted((u, v) for u, v in match_l.items() if v is not None)
