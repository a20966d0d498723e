"""Tensor and weak modular products.

Product vertex ``(x, y)`` has index ``x * n_right + y`` (row-major), so
row ``x`` holds the ``n_right`` vertices sharing the left coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeOutOfRange
from .graph import MAX_VERTICES, Graph, complement


@dataclass(frozen=True, slots=True)
class ProductGraph:
    graph: Graph
    n_left: int
    n_right: int

    def index(self, x: int, y: int) -> int:
        return x * self.n_right + y

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n_right)

    @property
    def n(self) -> int:
        return self.graph.n


def _check(g: Graph, h: Graph) -> None:
    if g.n * h.n > MAX_VERTICES:
        raise SizeOutOfRange(
            f"product of orders {g.n} and {h.n} exceeds {MAX_VERTICES} vertices")


def _spread(row: int, width: int, block: int) -> int:
    """Repeat ``block`` in every ``width``-bit slot selected by ``row``."""
    out = 0
    x = 0
    while row:
        if row & 1:
            out |= block << (x * width)
        row >>= 1
        x += 1
    return out


def _tensor_rows(g: Graph, h: Graph) -> list[int]:
    return [_spread(g.adj[x], h.n, h.adj[y]) for x in range(g.n) for y in range(h.n)]


def tensor_product(g: Graph, h: Graph) -> ProductGraph:
    """``(x,y) ~ (x',y')`` iff ``x ~ x'`` in ``g`` and ``y ~ y'`` in ``h``."""
    _check(g, h)
    return ProductGraph(Graph(g.n * h.n, tuple(_tensor_rows(g, h))), g.n, h.n)


def weak_modular_product(g: Graph, h: Graph) -> ProductGraph:
    """Tensor product of ``g, h`` united with that of their complements."""
    _check(g, h)
    same = _tensor_rows(g, h)
    co = _tensor_rows(complement(g), complement(h))
    return ProductGraph(Graph(g.n * h.n, tuple(a | b for a, b in zip(same, co))), g.n, h.n)


def wmp(g: Graph, h: Graph) -> Graph:
    """Shorthand for the plain graph of :func:`weak_modular_product`."""
    return weak_modular_product(g, h).graph
