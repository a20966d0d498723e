"""Named small graphs, induced-subgraph search and structural class tests."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import kernels
from .expr import parse_expr
from .graph import Graph, VertexSet, complement, connected_components, induced_subgraph, mask_of, members


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph


# Names are graph expressions, so every entry can be rebuilt with parse_expr.
CATALOG_NAMES = (
    "P3", "P4", "P5", "C4", "C5", "K3", "2*K2", "3*K2",
    "K2+E1", "K2+E2", "P3+E1", "P4+E1", "K2,2+E1", "K1,3",
    "diamond", "paw", "cricket", "dart", "hourglass",
    "diamond+E1", "paw+E1", "C4+E1",
)

CATALOG: dict[str, Pattern] = {name: Pattern(name, parse_expr(name)) for name in CATALOG_NAMES}

ALIASES = {"K2,2": "C4", "K1,1,2": "diamond", "Y": "paw", "co-paw": "P3+E1",
           "K1,1,2+E1": "diamond+E1", "Y+E1": "paw+E1", "2K2": "2*K2", "3K2": "3*K2"}


def pattern(name: str) -> Pattern:
    """Catalog entry by name or alias (``"Y"``, ``"K2,2"``, ``"2K2"``...)."""
    key = ALIASES.get(name, name)
    try:
        return CATALOG[key]
    except KeyError:
        raise KeyError(f"no catalog pattern named {name!r}") from None


def _graph_of(p: Pattern | Graph | str) -> Graph:
    if isinstance(p, Pattern):
        return p.graph
    if isinstance(p, str):
        return pattern(p).graph
    return p


def find_induced(g: Graph, p: Pattern | Graph | str) -> VertexSet | None:
    """Vertex mask ``S`` with ``g[S]`` isomorphic to the pattern, or ``None``."""
    pg = _graph_of(p)
    image = kernels.induced_embedding(g.adj, g.n, pg.adj, pg.n)
    return None if image is None else mask_of(image)


def has_induced(g: Graph, p: Pattern | Graph | str) -> bool:
    return find_induced(g, p) is not None


def is_free_of(g: Graph, *patterns: Pattern | Graph | str) -> bool:
    return not any(has_induced(g, p) for p in patterns)


# ---------------------------------------------------------------- basic classes

def is_clique(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def is_empty(g: Graph) -> bool:
    return g.edge_count == 0


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Two-colouring ``(side0, side1)`` with each component's least vertex on side 0."""
    side = [-1] * g.n
    for comp in connected_components(g):
        root = members(comp)[0]
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in members(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    return (mask_of(v for v in range(g.n) if side[v] == 0),
            mask_of(v for v in range(g.n) if side[v] == 1))


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[i] & g.adj[j]) for i, j in g.edges())


def is_complete_bipartite(g: Graph) -> bool:
    """``K_{m,n}`` with ``m, n >= 1``."""
    parts = bipartition(g)
    if parts is None:
        return False
    a, b = (p.bit_count() for p in parts)
    return a >= 1 and b >= 1 and g.edge_count == a * b


def is_star(g: Graph) -> bool:
    """``K_{1,r}`` for ``r >= 1``, or the single vertex ``K1``."""
    if g.n == 1:
        return True
    parts = bipartition(g)
    return is_complete_bipartite(g) and min(p.bit_count() for p in parts) == 1


def is_disjoint_union_of_cliques(g: Graph) -> bool:
    return all(all(g.adj[v] | (1 << v) == comp for v in members(comp))
               for comp in connected_components(g))


def is_complete_multipartite(g: Graph) -> bool:
    """Complement is a disjoint union of cliques (admits ``K1`` and ``E_n``)."""
    return is_disjoint_union_of_cliques(complement(g))


def is_two_cliques(g: Graph) -> bool:
    """``K_r + K_s`` for some ``r, s >= 1``."""
    return len(connected_components(g)) == 2 and is_disjoint_union_of_cliques(g)


def _components(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, c) for c in connected_components(g)]


def is_disjoint_union_of_stars_and_cliques(g: Graph) -> bool:
    return all(is_clique(c) or is_star(c) for c in _components(g))


def is_paw_free(g: Graph) -> bool:
    return not has_induced(g, "paw")


def is_odd_hole_paw_free(g: Graph) -> bool:
    """Every component is bipartite or complete multipartite."""
    return all(is_bipartite(c) or is_complete_multipartite(c) for c in _components(g))


def is_odd_antihole_copaw_free(g: Graph) -> bool:
    return is_odd_hole_paw_free(complement(g))


FORBIDDEN_FOR_CONNECTED_CASE = ("P4", "cricket", "dart", "hourglass")


def is_connected_p4_cricket_dart_hourglass_free(g: Graph) -> bool:
    return len(connected_components(g)) == 1 and is_free_of(g, *FORBIDDEN_FOR_CONNECTED_CASE)


class ClassLabel(Enum):
    DisjointCliques = "disjoint union of cliques"
    CompleteMultipartite = "complete multipartite"
    CompleteBipartite = "complete bipartite"
    Clique = "clique"
    Empty = "empty"
    Star = "star"
    DisjointStarsAndCliques = "disjoint union of stars and cliques"
    Bipartite = "bipartite"
    TriangleFree = "triangle-free"
    PawFree = "paw-free"
    OddHolePawFree = "(odd hole, paw)-free"
    OddAntiholeCoPawFree = "(odd antihole, co-paw)-free"
    ConnectedP4CricketDartHourglassFree = "connected and (P4, cricket, dart, hourglass)-free"


_PREDICATES = {
    ClassLabel.DisjointCliques: is_disjoint_union_of_cliques,
    ClassLabel.CompleteMultipartite: is_complete_multipartite,
    ClassLabel.CompleteBipartite: is_complete_bipartite,
    ClassLabel.Clique: is_clique,
    ClassLabel.Empty: is_empty,
    ClassLabel.Star: is_star,
    ClassLabel.DisjointStarsAndCliques: is_disjoint_union_of_stars_and_cliques,
    ClassLabel.Bipartite: is_bipartite,
    ClassLabel.TriangleFree: is_triangle_free,
    ClassLabel.PawFree: is_paw_free,
    ClassLabel.OddHolePawFree: is_odd_hole_paw_free,
    ClassLabel.OddAntiholeCoPawFree: is_odd_antihole_copaw_free,
    ClassLabel.ConnectedP4CricketDartHourglassFree: is_connected_p4_cricket_dart_hourglass_free,
}


def classify_shape(g: Graph) -> set[ClassLabel]:
    return {label for label, test in _PREDICATES.items() if test(g)}
