"""All graphs of a given order up to isomorphism, by one-vertex extension."""

from __future__ import annotations

from functools import lru_cache

from . import kernels
from .graph import Graph, empty


def canonical_code(g: Graph) -> int:
    return kernels.canonical_code(g.adj, g.n)


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of ``n``-vertex graphs.

    Every graph on ``n`` vertices arises from some ``(n-1)``-vertex graph
    by adding vertex ``n-1`` with some neighbourhood, so extending each
    smaller representative in every way and deduplicating by canonical
    code is exhaustive. Output order follows the extension order.
    """
    if n == 1:
        return (empty(1),)
    seen: dict[int, Graph] = {}
    for base in graphs_of_order(n - 1):
        for nbhd in range(1 << (n - 1)):
            rows = tuple(row | ((nbhd >> v & 1) << (n - 1)) for v, row in enumerate(base.adj))
            g = Graph(n, rows + (nbhd,))
            seen.setdefault(canonical_code(g), g)
    return tuple(seen.values())


def graphs_up_to(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in graphs_of_order(k)]
