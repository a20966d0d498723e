"""Maximum cliques and the clique-based isomorphism test on ``wmp(g, h)``.

For two graphs of order ``n`` every clique of the weak modular product
uses distinct rows and distinct columns, so it has at most ``n`` vertices;
an ``n``-clique exists exactly when the graphs are isomorphic, and its
vertices ``(x, y)`` spell out the bijection ``x -> y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import SizeMismatch, SizeOutOfRange
from .graph import Graph, VertexSet, is_isomorphism, members
from .products import weak_modular_product


@dataclass(frozen=True)
class CliqueResult:
    size: int
    members: VertexSet

    def vertices(self) -> list[int]:
        return members(self.members)


@dataclass(frozen=True)
class IsoWitness:
    mapping: tuple[int, ...]

    def verify(self, g: Graph, h: Graph) -> bool:
        return is_isomorphism(g, h, self.mapping)


def max_clique(g: Graph) -> CliqueResult:
    """Exact maximum clique; ties go to the lexicographically smallest set."""
    mask = kernels.max_clique(g.adj, g.n)
    return CliqueResult(mask.bit_count(), mask)


def clique_number(g: Graph) -> int:
    return kernels.clique_number(g.adj, g.n)


ISO_LIMIT = 8


def iso_via_product(g: Graph, h: Graph) -> IsoWitness | None:
    if g.n != h.n:
        raise SizeMismatch(f"graphs of orders {g.n} and {h.n} are never isomorphic")
    if g.n > ISO_LIMIT:
        raise SizeOutOfRange(f"product of two order-{g.n} graphs exceeds the 64-vertex cap")
    prod = weak_modular_product(g, h)
    best = max_clique(prod.graph)
    if best.size < g.n:
        return None
    mapping = [0] * g.n
    for v in best.vertices():
        x, y = prod.coords(v)
        mapping[x] = y
    return IsoWitness(tuple(mapping))
