"""Named graphs and the ``family:param`` mini-language used by the CLI."""

from __future__ import annotations

from typing import Callable

from .errors import InvalidParameters
from .graph import (
    Graph,
    cartesian_product,
    complement,
    line_graph,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_folded_cube,
    make_generalized_petersen,
    make_hypercube,
    make_kneser,
    make_paley,
    make_path,
)


def _named(factory: Callable[[], Graph], name: str) -> Callable[[], Graph]:
    return lambda: factory().with_label(name)


# id -> (factory, description)
CATALOG: dict[str, tuple[Callable[[], Graph], str]] = {
    "c5": (_named(lambda: make_cycle(5), "c5"), "5-cycle (odd cycle, self-complementary)"),
    "c6": (_named(lambda: make_cycle(6), "c6"), "6-cycle (bipartite)"),
    "c7": (_named(lambda: make_cycle(7), "c7"), "7-cycle (odd cycle)"),
    "k5": (_named(lambda: make_complete(5), "k5"), "complete graph on 5 vertices"),
    "p4": (_named(lambda: make_path(4), "p4"), "path on 4 vertices (bipartite)"),
    "k3,3": (_named(lambda: make_complete_bipartite(3, 3), "k3,3"), "Thomsen graph K3,3"),
    "petersen": (_named(lambda: make_kneser(5, 2), "petersen"), "Petersen graph as Kneser(5,2)"),
    "clebsch": (_named(lambda: make_folded_cube(5), "clebsch"), "Clebsch graph as the folded 5-cube"),
    "clebsch-complement": (
        _named(lambda: complement(make_folded_cube(5)), "clebsch-complement"),
        "complement of the Clebsch graph",
    ),
    "paley13": (_named(lambda: make_paley(13), "paley13"), "Paley graph on 13 vertices"),
    "paley17": (_named(lambda: make_paley(17), "paley17"), "Paley graph on 17 vertices"),
    "folded7": (_named(lambda: make_folded_cube(7), "folded7"), "folded 7-cube (64 vertices)"),
    "folded7-complement": (
        _named(lambda: complement(make_folded_cube(7)), "folded7-complement"),
        "complement of the folded 7-cube (64 vertices)",
    ),
    "tesseract": (_named(lambda: make_hypercube(4), "tesseract"), "4-dimensional hypercube Q4"),
    "cuboctahedral": (
        _named(lambda: line_graph(make_hypercube(3)), "cuboctahedral"),
        "cuboctahedral graph, line graph of the cube",
    ),
    "octahedron": (
        _named(lambda: complement(_three_k2()), "octahedron"),
        "octahedron K2,2,2",
    ),
    "dodecahedron": (_named(lambda: make_generalized_petersen(10, 2), "dodecahedron"), "dodecahedral graph GP(10,2)"),
    "desargues": (_named(lambda: make_generalized_petersen(10, 3), "desargues"), "Desargues graph GP(10,3)"),
    "rook3": (
        _named(lambda: cartesian_product(make_complete(3), make_complete(3)), "rook3"),
        "K3 x K3 (3x3 rook's graph)",
    ),
    "line-rook3": (
        _named(lambda: line_graph(cartesian_product(make_complete(3), make_complete(3))), "line-rook3"),
        "line graph of K3 x K3 (18 vertices)",
    ),
}


def _three_k2() -> Graph:
    return Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])


_FAMILIES: dict[str, tuple[int, Callable[..., Graph]]] = {
    "cycle": (1, make_cycle),
    "complete": (1, make_complete),
    "empty": (1, make_empty),
    "path": (1, make_path),
    "hypercube": (1, make_hypercube),
    "folded": (1, make_folded_cube),
    "paley": (1, make_paley),
    "kneser": (2, make_kneser),
    "bipartite": (2, make_complete_bipartite),
    "gp": (2, make_generalized_petersen),
}


def catalog_names() -> list[str]:
    return list(CATALOG)


def get_graph(name: str) -> Graph:
    """Look up a catalog id (``petersen``) or a family string (``kneser:5:2``).

    A ``co-`` prefix takes the complement of whatever follows.
    """
    key = name.strip().lower()
    if key in CATALOG:
        return CATALOG[key][0]()
    if key.startswith("co-"):
        return complement(get_graph(key[3:])).with_label(key)
    family, *args = key.split(":")
    if family not in _FAMILIES:
        raise KeyError(f"unknown graph {name!r}; see 'catalog list'")
    arity, factory = _FAMILIES[family]
    if len(args) != arity:
        raise InvalidParameters(f"{family} takes {arity} integer parameter(s), e.g. {family}:{':'.join(['5'] * arity)}")
    try:
        params = [int(a) for a in args]
    except ValueError:
        raise InvalidParameters(f"non-integer parameter in {name!r}") from None
    return factory(*params).with_label(key)
