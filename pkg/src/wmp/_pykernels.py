"""Pure-Python search kernels; the reference for the compiled ``_ckernels``.

Every kernel takes adjacency as a sequence of ``int`` row masks plus the
vertex count, and must return exactly what the compiled twin returns.
"""

from __future__ import annotations

from typing import Sequence


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def odd_hole(adj: Sequence[int], n: int) -> list[int] | None:
    """Induced odd cycle of length >= 5, as a vertex sequence, or None.

    Induced paths are grown from their smallest vertex ``s`` using only
    larger vertices; a path closes when its new endpoint touches ``s``.
    Requiring the closing vertex to exceed the second vertex drops the
    mirrored copy of each cycle.
    """
    full = (1 << n) - 1
    for s in range(n):
        above = full & ~((2 << s) - 1)
        for p1 in _iter(adj[s] & above):
            found = _grow(adj, s, [s, p1], (1 << s) | (1 << p1), above)
            if found is not None:
                return found
    return None


def _iter(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _grow(adj, s, path, blocked, above):
    end = path[-1]
    s_bit = 1 << s
    for v in _iter(adj[end] & above & ~blocked):
        if adj[v] & s_bit:
            k = len(path) + 1
            if k >= 5 and k & 1 and v > path[1]:
                return path + [v]
            continue
        # end turns interior: its neighbours may no longer extend the path
        found = _grow(adj, s, path + [v], blocked | adj[end] | (1 << v), above)
        if found is not None:
            return found
    return None


def _color_classes(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``cand``; vertices listed by colour."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        q = rest
        while q:
            v = _low(q)
            q &= ~adj[v] & ~(1 << v)
            rest &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def clique_number(adj: Sequence[int], n: int) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order, bounds = _color_classes(adj, cand)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            v = order[idx]
            sub = cand & adj[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def max_clique(adj: Sequence[int], n: int) -> int:
    """Mask of the lexicographically smallest maximum clique."""
    target = clique_number(adj, n)

    def first(chosen: int, cand: int, need: int) -> int | None:
        if need == 0:
            return chosen
        while cand:
            if cand.bit_count() < need:
                return None
            _, bounds = _color_classes(adj, cand)
            if bounds[-1] < need:
                return None
            v = _low(cand)
            cand &= ~(1 << v)
            found = first(chosen | (1 << v), cand & adj[v], need - 1)
            if found is not None:
                return found
        return None

    return first(0, (1 << n) - 1, target)


def induced_embedding(adj: Sequence[int], n: int,
                      padj: Sequence[int], pn: int) -> list[int] | None:
    """Injective map ``pattern -> host`` preserving adjacency both ways.

    Pattern vertices are placed in index order onto ascending host
    candidates, so the first embedding found is the lexicographically
    smallest image tuple.
    """
    if pn > n:
        return None
    full = (1 << n) - 1
    hdeg = [row.bit_count() for row in adj]
    pdeg = [row.bit_count() for row in padj]
    image = [0] * pn

    def place(x: int, used: int) -> bool:
        if x == pn:
            return True
        cand = full & ~used
        for prev in range(x):
            if padj[x] >> prev & 1:
                cand &= adj[image[prev]]
            else:
                cand &= ~adj[image[prev]]
        for y in _iter(cand):
            if hdeg[y] < pdeg[x]:
                continue
            image[x] = y
            if place(x + 1, used | (1 << y)):
                return True
        return False

    return list(image) if place(0, 0) else None


def canonical_code(adj: Sequence[int], n: int) -> int:
    """Isomorphism-invariant code: minimum upper-triangle bit string.

    The minimum ranges over vertex orders that list vertices by
    ascending degree, so only orders within a degree class are searched;
    a branch is cut once its code prefix exceeds the best one so far.
    """
    by_degree = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))
    block = []
    for k, v in enumerate(by_degree):
        if k and adj[v].bit_count() == adj[by_degree[k - 1]].bit_count():
            block.append(block[-1] | (1 << v))
        else:
            block.append(1 << v)
    # each position may take any vertex of its degree class
    for k in range(n - 2, -1, -1):
        if adj[by_degree[k]].bit_count() == adj[by_degree[k + 1]].bit_count():
            block[k] = block[k + 1]
    total = n * (n - 1) // 2
    order = [0] * n
    best = -1

    def place(pos: int, used: int, prefix: int) -> None:
        nonlocal best
        if pos == n:
            if best < 0 or prefix < best:
                best = prefix
            return
        bits = (pos + 1) * pos // 2
        for v in _iter(block[pos] & ~used):
            code = prefix
            row = adj[v]
            for i in range(pos):
                code = code << 1 | (row >> order[i] & 1)
            if best >= 0 and bits and code > best >> (total - bits):
                continue
            order[pos] = v
            place(pos + 1, used | (1 << v), code)

    place(0, 0, 0)
    return best
