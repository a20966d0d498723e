"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed in
an "acceptance criteria" section at the end of the session.
"""

import random
import time

import conftest
from conftest import random_graph
from wmp import patterns as pt
from wmp.classifier import classify
from wmp.enumerate import canonical_code, graphs_up_to
from wmp.expr import parse_expr
from wmp.graph import (are_isomorphic_bruteforce, build, complement, connected_components,
                       cycle, is_connected, is_isomorphism, line_graph, mask_of, relabel)
from wmp.kozen import iso_via_product, max_clique
from wmp.perfection import find_odd_hole, is_perfect_oracle
from wmp.products import wmp
from wmp.sweep import run_sweep


def report(k: int, ok: bool, detail: str) -> None:
    conftest.ACCEPTANCE_LINES.append(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")
    print(conftest.ACCEPTANCE_LINES[-1])
    assert ok, detail


def augments(base, keep):
    """All one-vertex extensions of ``base`` satisfying ``keep``, up to isomorphism."""
    n = base.n
    seen = {}
    for nbrs in range(1 << n):
        g = build(n + 1, base.edges() + [(v, n) for v in range(n) if nbrs >> v & 1])
        if keep(g):
            seen.setdefault(canonical_code(g), g)
    return list(seen.values())


# 1 ---------------------------------------------------------------------------

def test_criterion_1_exhaustive_classification():
    start = time.perf_counter()
    rep = run_sweep(5, jobs=1)
    elapsed = time.perf_counter() - start
    ok = rep.ok and rep.classes == 52 and rep.pairs == 52 * 52
    report(1, ok, f"{rep.classes} classes (n <= 5), {rep.pairs} ordered pairs, "
                  f"{len(rep.mismatches)} mismatches, {elapsed:.1f}s")


# 2 ---------------------------------------------------------------------------

def _imperfect_with_valid_witness(g, h):
    p = wmp(g, h)
    v = is_perfect_oracle(p)
    return (not v.perfect) and v.witness.is_valid_for(p)


def test_criterion_2_imperfect_families():
    c5_aug = augments(cycle(5), pt.is_triangle_free)
    p4_aug = augments(parse_expr("P4"), pt.is_bipartite)
    pairs = []
    for a in c5_aug + p4_aug:
        pairs += [(a, parse_expr("P3")), (a, parse_expr("K2+E1"))]
    fixed = {
        "P3": ["cricket", "dart", "hourglass"],
        "K2+E1": ["K1,1,2", "Y", "P4+E1", "K2,2+E1", "P5"],
        "P4": ["2*K2", "Y", "K2,2", "K1,1,2"],
        "K2,2": ["P3+E1", "K2+E2"],
        "C5": ["K3", "2*K2", "K1,3", "K2,2"],
    }
    for left, rights in fixed.items():
        pairs += [(parse_expr(left), parse_expr(r)) for r in rights]
    pairs += [(parse_expr("P3"), parse_expr(r))
              for r in ["K2+E2", "P3+E1", "P5", "K1,1,2+E1", "3*K2"]]
    bad = [(g, h) for g, h in pairs if not _imperfect_with_valid_witness(g, h)]
    ok = not bad and len(c5_aug) > 0 and len(p4_aug) > 0
    report(2, ok, f"{len(pairs)} products imperfect with valid witnesses "
                  f"({len(c5_aug)} C5 augments, {len(p4_aug)} P4 augments), {len(bad)} failures")


# 3 ---------------------------------------------------------------------------

def test_criterion_3_perfect_families():
    pairs = [(parse_expr("C5"), parse_expr(e)) for e in ["C5", "P4", "P3", "K2+E1"]]
    two_cliques = [parse_expr(f"K{r}+K{s}") for r in range(1, 4) for s in range(r, 4)]
    for a in two_cliques:
        pairs += [(a, parse_expr(e)) for e in ["K1,3+K2", "K2+K2+K1", "K1,2+K3"]]
    bipartite_fail = 0
    for a in two_cliques:
        for m in range(1, 4):
            for n in range(m, 4):
                b = parse_expr(f"K{m},{n}")
                pairs.append((a, b))
                if not pt.is_bipartite(wmp(a, b)):
                    bipartite_fail += 1
    for r in range(1, 5):
        pairs += [(parse_expr("P4"), parse_expr(f"K1,{r}")), (parse_expr("P4"), parse_expr(f"K1+K{r}"))]
    imperfect = [(g, h) for g, h in pairs if not is_perfect_oracle(wmp(g, h)).perfect]
    ok = not imperfect and not bipartite_fail
    report(3, ok, f"{len(pairs)} products perfect, {len(imperfect)} failures, "
                  f"{bipartite_fail} non-bipartite two-clique x complete-bipartite products")


# 4 ---------------------------------------------------------------------------

# row x, column y of the product C5 x C5 -> the edge of M it corresponds to
EDGE_TABLE = [
    [(0, 1), (5, 6), (2, 8), (3, 9), (4, 7)],
    [(6, 7), (0, 2), (5, 9), (4, 8), (1, 3)],
    [(2, 3), (7, 9), (0, 4), (1, 5), (6, 8)],
    [(8, 9), (3, 4), (1, 7), (0, 6), (2, 5)],
    [(4, 5), (1, 8), (3, 6), (2, 7), (0, 9)],
]


def test_criterion_4_line_graph_identity():
    m = build(10, [e for row in EDGE_TABLE for e in row])
    parts = pt.bipartition(m)
    expected = {mask_of([0, 3, 5, 7, 8]), mask_of([1, 2, 4, 6, 9])}
    lm, edges = line_graph(m)
    index = {e: i for i, e in enumerate(edges)}
    mapping = [index[EDGE_TABLE[x][y]] for x in range(5) for y in range(5)]
    checks = {
        "25 edges": m.edge_count == 25,
        "bipartite with the stated parts": parts is not None and set(parts) == expected,
        "explicit map is an isomorphism": is_isomorphism(wmp(cycle(5), cycle(5)), lm, mapping),
    }
    failed = [k for k, v in checks.items() if not v]
    report(4, not failed, "M: " + ", ".join(f"{k} {'ok' if v else 'FAILED'}" for k, v in checks.items()))


# 5 ---------------------------------------------------------------------------

def _kozen_agrees(g, h):
    w = iso_via_product(g, h)
    truth = are_isomorphic_bruteforce(g, h) is not None
    bounded = max_clique(wmp(g, h)).size <= g.n
    return (w is not None) == truth and (w is None or w.verify(g, h)) and bounded, truth


def test_criterion_5_kozen_agreement():
    rng = random.Random(2024)
    pairs = []
    for n in range(1, 6):
        classes = [g for g in graphs_up_to(n) if g.n == n]
        for g in classes:
            for h in classes:
                perm = list(range(n))
                rng.shuffle(perm)
                pairs.append((g, relabel(h, perm)))
    exhaustive = len(pairs)
    for i in range(200):
        n = rng.choice((6, 7, 8))
        g = random_graph(rng, n)
        if i % 2 == 0:
            perm = list(range(n))
            rng.shuffle(perm)
            h = relabel(g, perm)
        else:
            # same order and size, so only structure can tell them apart
            all_edges = [(a, b) for a in range(n) for b in range(a + 1, n)]
            h = build(n, rng.sample(all_edges, g.edge_count))
        pairs.append((g, h))
    bad, positives = 0, 0
    for g, h in pairs:
        ok, truth = _kozen_agrees(g, h)
        bad += not ok
        positives += truth
    report(5, bad == 0, f"{exhaustive} exhaustive + 200 random pairs, {positives} isomorphic, "
                        f"{bad} disagreements or bound violations")


# 6 ---------------------------------------------------------------------------

def _components_ok(g, pred):
    from wmp.graph import induced_subgraph
    return all(pred(induced_subgraph(g, c)) for c in connected_components(g))


def test_criterion_6_recognizer_equivalences():
    graphs = graphs_up_to(7)
    failures = {name: 0 for name in ("cliques-vs-P3", "multipartite-vs-K2+E1", "bipartite-P4", "paw-free",
                                     "P4-paw-free-connected", "forbidden-four-vs-complement", "hole-paw-free", "antihole-copaw-free")}
    for g in graphs:
        if pt.is_disjoint_union_of_cliques(g) != (not pt.has_induced(g, "P3")):
            failures["cliques-vs-P3"] += 1
        if pt.is_complete_multipartite(g) != (not pt.has_induced(g, "K2+E1")):
            failures["multipartite-vs-K2+E1"] += 1
        if g.n >= 2 and is_connected(g) and pt.is_bipartite(g) and not pt.is_complete_bipartite(g) \
                and not pt.has_induced(g, "P4"):
            failures["bipartite-P4"] += 1
        paw_free = not pt.has_induced(g, "paw")
        if paw_free != _components_ok(g, lambda c: pt.is_triangle_free(c) or pt.is_complete_multipartite(c)):
            failures["paw-free"] += 1
        if is_connected(g) and pt.is_free_of(g, "P4", "paw") and not pt.is_complete_multipartite(g):
            failures["P4-paw-free-connected"] += 1
        if g.n >= 2:
            gc = complement(g)
            dual = pt.is_disjoint_union_of_stars_and_cliques(gc) and len(connected_components(gc)) >= 2
            if pt.is_connected_p4_cricket_dart_hourglass_free(g) != dual:
                failures["forbidden-four-vs-complement"] += 1
        if pt.is_odd_hole_paw_free(g) != (find_odd_hole(g) is None and paw_free):
            failures["hole-paw-free"] += 1
        gc = complement(g)
        if pt.is_odd_antihole_copaw_free(g) != (find_odd_hole(gc) is None and not pt.has_induced(g, "P3+E1")):
            failures["antihole-copaw-free"] += 1
    bad = {k: v for k, v in failures.items() if v}
    report(6, not bad, f"{len(graphs)} graphs (n <= 7), {len(failures)} equivalences, "
                       f"failures: {bad or 'none'}")


# 7 ---------------------------------------------------------------------------

def test_criterion_7_self_duality():
    fixtures = list(graphs_up_to(8))
    for left, right in [("C5", "C5"), ("C5", "K3"), ("P4", "K1,3"), ("K2+E1", "diamond"),
                        ("P3", "P5"), ("K2,2", "K2+E2"), ("K3+K2", "K2,3"), ("C5", "P4")]:
        fixtures.append(wmp(parse_expr(left), parse_expr(right)))
    bad = sum(is_perfect_oracle(g).perfect != is_perfect_oracle(complement(g)).perfect
              for g in fixtures)
    report(7, bad == 0, f"{len(fixtures)} graphs (all n <= 8 plus product fixtures), {bad} violations")
