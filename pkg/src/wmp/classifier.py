"""Polynomial-time perfection test for weak modular products.

``classify(g, h)`` decides whether ``wmp(g, h)`` is perfect by matching the
pair against ten structural cases. Each case names a role for one factor
(``G_z``) and a condition on the other; orientation ``z = 0`` means ``g``
plays ``G_z``. Cases are tried in order 1..10, orientation 0 before 1, and
the first match is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import kernels
from . import patterns as pt
from .expr import parse_expr
from .graph import Graph, connected_components


@lru_cache(maxsize=None)
def _code(expr: str) -> tuple[int, int]:
    g = parse_expr(expr)
    return g.n, kernels.canonical_code(g.adj, g.n)


def _is(g: Graph, *exprs: str) -> bool:
    """Whether ``g`` is isomorphic to one of the named graphs."""
    mine = None
    for e in exprs:
        n, code = _code(e)
        if n != g.n:
            continue
        if mine is None:
            mine = kernels.canonical_code(g.adj, g.n)
        if mine == code:
            return True
    return False


def _case1(a: Graph, b: Graph) -> bool:
    return a.n <= 2


def _case2(a: Graph, b: Graph) -> bool:
    if not _is(a, "P4"):
        return False
    if pt.is_star(b) and b.n >= 2:
        return True
    comps = connected_components(b)
    k1_plus_clique = (len(comps) == 2 and pt.is_disjoint_union_of_cliques(b)
                      and min(c.bit_count() for c in comps) == 1)
    return k1_plus_clique or _is(b, "P4")


def _case3(a: Graph, b: Graph) -> bool:
    return _is(a, "C5") and _is(b, "P3", "K2+E1", "P4", "C5")


def _case4(a: Graph, b: Graph) -> bool:
    return pt.is_two_cliques(a) and pt.is_disjoint_union_of_stars_and_cliques(b)


def _case5(a: Graph, b: Graph) -> bool:
    return pt.is_complete_bipartite(a) and pt.is_connected_p4_cricket_dart_hourglass_free(b)


def _case6(a: Graph, b: Graph) -> bool:
    return pt.is_clique(a) and pt.is_odd_hole_paw_free(b)


def _case7(a: Graph, b: Graph) -> bool:
    return pt.is_empty(a) and pt.is_odd_antihole_copaw_free(b)


def _case8(a: Graph, b: Graph) -> bool:
    return pt.is_complete_multipartite(a) and pt.is_complete_multipartite(b)


def _case9(a: Graph, b: Graph) -> bool:
    return pt.is_disjoint_union_of_cliques(a) and pt.is_disjoint_union_of_cliques(b)


def _case10(a: Graph, b: Graph) -> bool:
    return pt.is_two_cliques(a) and pt.is_complete_bipartite(b)


CASES: dict[int, tuple[Callable[[Graph, Graph], bool], str]] = {
    1: (_case1, "one factor is K1, K2 or E2 and the other is arbitrary"),
    2: (_case2, "one factor is P4 and the other is a star K1,r, K_r + K1, or P4"),
    3: (_case3, "one factor is C5 and the other is P3, K2 + E1, P4 or C5"),
    4: (_case4, "one factor is K_r + K_s and the other is a disjoint union of stars and cliques"),
    5: (_case5, "one factor is K_m,n and the other is connected and (P4, cricket, dart, hourglass)-free"),
    6: (_case6, "one factor is K_n and the other is (odd hole, paw)-free"),
    7: (_case7, "one factor is E_n and the other is (odd antihole, co-paw)-free"),
    8: (_case8, "both factors are complete multipartite"),
    9: (_case9, "both factors are disjoint unions of cliques"),
    10: (_case10, "one factor is K_r + K_s and the other is K_m,n"),
}


@dataclass(frozen=True)
class Classification:
    perfect: bool
    case_id: int | None = None
    orientation: int | None = None
    # order and edge count of the factor in the G_z role, for explanations
    role_order: int | None = None
    role_edges: int | None = None

    @property
    def verdict(self) -> str:
        return "PERFECT" if self.perfect else "IMPERFECT"


def classify(g: Graph, h: Graph) -> Classification:
    for case_id, (test, _) in CASES.items():
        for z, (a, b) in enumerate(((g, h), (h, g))):
            if test(a, b):
                return Classification(True, case_id, z, a.n, a.edge_count)
    return Classification(False)


def _trivial_name(order: int, edges: int) -> str:
    if order == 1:
        return "K1"
    return "K2" if edges else "E2"


def explain(c: Classification) -> str:
    if not c.perfect:
        return ("IMPERFECT: no case matches; run the odd-hole oracle "
                "(`wmp oracle`) for an explicit odd hole or antihole witness")
    side = "left" if c.orientation == 0 else "right"
    text = f"PERFECT by case {c.case_id}: {CASES[c.case_id][1]}"
    if c.case_id == 1 and c.role_order is not None:
        text += f" (the {side} factor is {_trivial_name(c.role_order, c.role_edges)})"
    else:
        text += f" (the {side} factor plays the first role)"
    return text
