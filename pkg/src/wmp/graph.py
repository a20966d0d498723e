"""Immutable simple graphs stored as one bitmask per adjacency row.

Vertices are ``0..n-1``. Row ``adj[i]`` has bit ``j`` set iff ``i ~ j``.
A *vertex set* is an ``int`` bitmask over the host graph's vertices; the
helpers :func:`mask_of` and :func:`members` convert to and from
iterables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EmptySelection, InvalidEdge, SizeOutOfRange

MAX_VERTICES = 64

VertexSet = int


def members(mask: int) -> list[int]:
    """Ascending list of the vertices set in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise SizeOutOfRange(f"vertex count {n} outside 1..{MAX_VERTICES}")


@dataclass(frozen=True, slots=True)
class Graph:
    """A finite simple graph on ``n`` vertices (1 <= n <= 64)."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise InvalidEdge(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidEdge(f"row {i} names a vertex >= {self.n}")
            if row >> i & 1:
                raise InvalidEdge(f"loop at vertex {i}")
            for j in members(row):
                if not self.adj[j] >> i & 1:
                    raise InvalidEdge(f"asymmetric adjacency between {i} and {j}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in members(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges; duplicates collapse."""
    _check_order(n)
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise InvalidEdge(f"loop edge ({i}, {j})")
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidEdge(f"edge ({i}, {j}) outside 0..{n - 1}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    _check_order(n)
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise SizeOutOfRange(f"cycle needs at least 3 vertices, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(*parts: int) -> Graph:
    """``K_{a,b,...}``; vertices are numbered part by part."""
    if not parts or any(p < 1 for p in parts):
        raise SizeOutOfRange(f"part sizes must be >= 1, got {parts}")
    n = sum(parts)
    _check_order(n)
    label = [k for k, p in enumerate(parts) for _ in range(p)]
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if label[i] != label[j]])


def complete_bipartite(m: int, n: int) -> Graph:
    return complete_multipartite(m, n)


_NAMED_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    # triangle 0,1,2 with a pendant vertex on 0
    "paw": (4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
    # K4 minus the edge {2, 3}
    "diamond": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    # triangle 0,1,2 with two pendant vertices on 0
    "cricket": (5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]),
    # diamond with a pendant vertex on a degree-3 vertex
    "dart": (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]),
    # two triangles sharing vertex 0
    "hourglass": (5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
}
_NAMED_EDGES["Y"] = _NAMED_EDGES["paw"]

NAMED_GRAPHS = tuple(_NAMED_EDGES)


def named(name: str) -> Graph:
    n, edges = _NAMED_EDGES[name]
    return build(n, edges)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` followed by ``h``; ``h``'s vertices are shifted by ``g.n``."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise SizeOutOfRange(f"disjoint union would have {n} > {MAX_VERTICES} vertices")
    return Graph(n, g.adj + tuple(row << g.n for row in h.adj))


def _as_mask(g: Graph, s: VertexSet | Iterable[int]) -> int:
    mask = s if isinstance(s, int) else mask_of(s)
    if mask & ~g.full_mask or mask < 0:
        raise InvalidEdge(f"vertex set {bin(mask)} exceeds host graph of order {g.n}")
    return mask


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> Graph:
    """``g[s]`` relabelled so the members of ``s`` keep their relative order."""
    mask = _as_mask(g, s)
    if not mask:
        raise EmptySelection("cannot induce on an empty vertex set")
    keep = members(mask)
    index = {v: k for k, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(index[u] for u in members(g.adj[v] & mask)))
    return Graph(len(keep), tuple(rows))


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex masks of the components, ordered by smallest member."""
    out = []
    unseen = g.full_mask
    while unseen:
        frontier = unseen & -unseen
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
        out.append(comp)
        unseen &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex bijection ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidEdge(f"not a permutation of 0..{g.n - 1}: {list(perm)}")
    return build(g.n, [(perm[i], perm[j]) for i, j in g.edges()])


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``g`` and the edge list indexing its vertices."""
    edges = g.edges()
    if not edges:
        raise EmptySelection("line graph of an edgeless graph has no vertices")
    if len(edges) > MAX_VERTICES:
        raise SizeOutOfRange(f"{len(edges)} edges exceed the {MAX_VERTICES}-vertex cap")
    pairs = []
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if set(edges[a]) & set(edges[b]):
                pairs.append((a, b))
    return build(len(edges), pairs), edges


def is_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    """Whether ``x -> mapping[x]`` preserves adjacency and non-adjacency."""
    if g.n != h.n or sorted(mapping) != list(range(h.n)):
        return False
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y) != h.has_edge(mapping[x], mapping[y]):
                return False
    return True


BRUTEFORCE_LIMIT = 8


def are_isomorphic_bruteforce(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """First isomorphism ``g -> h`` in lexicographic order, or ``None``.

    Partial assignments are abandoned as soon as a degree or adjacency
    check fails, so the witness is the lexicographically smallest
    permutation that an exhaustive scan would find.
    """
    if max(g.n, h.n) > BRUTEFORCE_LIMIT:
        raise SizeOutOfRange(f"brute-force isomorphism is capped at {BRUTEFORCE_LIMIT} vertices")
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return None
    n = g.n
    image = [0] * n
    used = 0

    def extend(x: int) -> bool:
        nonlocal used
        if x == n:
            return True
        for y in range(n):
            if used >> y & 1 or dh[y] != dg[x]:
                continue
            if any(g.has_edge(x, p) != h.has_edge(y, image[p]) for p in range(x)):
                continue
            image[x] = y
            used |= 1 << y
            if extend(x + 1):
                return True
            used &= ~(1 << y)
        return False

    return tuple(image) if extend(0) else None
