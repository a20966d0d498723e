import itertools
import random

import pytest

from conftest import random_graph
from wmp import patterns as pt
from wmp.enumerate import graphs_up_to
from wmp.expr import parse_expr
from wmp.graph import build, complement, cycle, relabel
from wmp.perfection import (HoleKind, find_odd_hole, is_odd_hole, is_perfect_oracle)
from wmp.products import wmp


def brute_has_odd_hole(g):
    """Subset enumeration: some odd vertex set of size >= 5 induces a cycle."""
    for k in range(5, g.n + 1, 2):
        for subset in itertools.combinations(range(g.n), k):
            degs = [sum(g.has_edge(a, b) for b in subset) for a in subset]
            if all(d == 2 for d in degs):
                # 2-regular and connected means a single cycle
                seen, stack = {subset[0]}, [subset[0]]
                while stack:
                    v = stack.pop()
                    for u in subset:
                        if g.has_edge(v, u) and u not in seen:
                            seen.add(u)
                            stack.append(u)
                if len(seen) == k:
                    return True
    return False


@pytest.mark.parametrize("k", [5, 7, 9])
def test_odd_cycle_is_its_own_hole(k):
    w = find_odd_hole(cycle(k))
    assert w is not None and sorted(w.cycle) == list(range(k))
    assert is_odd_hole(cycle(k), w.cycle)


def test_bipartite_graphs_have_no_odd_hole():
    for expr in ["C6", "K3,4", "P7", "C8+C4", "K1,5"]:
        assert find_odd_hole(parse_expr(expr)) is None


def test_short_cycles_are_not_holes():
    assert find_odd_hole(parse_expr("K3")) is None
    assert find_odd_hole(parse_expr("C4")) is None


def test_p4_perfect():
    assert is_perfect_oracle(parse_expr("P4")).perfect


def test_c5_imperfect():
    v = is_perfect_oracle(cycle(5))
    assert not v.perfect
    assert v.witness.kind is HoleKind.HOLE and len(v.witness.cycle) == 5


def test_antihole_reported():
    g = complement(cycle(7))
    v = is_perfect_oracle(g)
    assert not v.perfect
    assert v.witness.kind is HoleKind.ANTIHOLE
    assert v.witness.is_valid_for(g)


def test_k2e1_diamond_product():
    v = is_perfect_oracle(wmp(parse_expr("K2+E1"), parse_expr("K1,1,2")))
    assert not v.perfect
    assert v.witness.is_valid_for(wmp(parse_expr("K2+E1"), parse_expr("K1,1,2")))


def test_verdict_invariant():
    for g in graphs_up_to(5):
        v = is_perfect_oracle(g)
        assert v.perfect == (v.witness is None)


def test_agrees_with_subset_enumeration():
    rng = random.Random(21)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 10))
        w = find_odd_hole(g)
        assert (w is not None) == brute_has_odd_hole(g)
        if w is not None:
            assert w.is_valid_for(g)


def test_witnesses_valid_on_products():
    rng = random.Random(2)
    for _ in range(100):
        p = wmp(random_graph(rng, rng.randint(1, 6)), random_graph(rng, rng.randint(1, 6)))
        v = is_perfect_oracle(p)
        if v.witness is not None:
            assert v.witness.is_valid_for(p)
            assert len(v.witness.cycle) % 2 == 1 and len(v.witness.cycle) >= 5


def test_is_odd_hole_rejects():
    c = cycle(5)
    assert not is_odd_hole(c, (0, 2, 1, 3, 4))
    assert not is_odd_hole(cycle(6), tuple(range(6)))
    assert not is_odd_hole(build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]), tuple(range(5)))


def test_triangle_free_nonbipartite_has_hole():
    graphs = list(graphs_up_to(8))
    rng = random.Random(31)
    graphs += [random_graph(rng, 9, rng.uniform(0.15, 0.45)) for _ in range(300)]
    hits = 0
    for g in graphs:
        if pt.is_triangle_free(g) and not pt.is_bipartite(g):
            w = find_odd_hole(g)
            assert w is not None and len(w.cycle) >= 5
            hits += 1
    assert hits > 100


def test_complementing_both_factors():
    rng = random.Random(41)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 5))
        h = random_graph(rng, rng.randint(1, 30 // g.n if g.n <= 30 else 1))
        assert (is_perfect_oracle(wmp(g, h)).perfect
                == is_perfect_oracle(wmp(complement(g), complement(h))).perfect)


def test_relabelling_invariance():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert is_perfect_oracle(g).perfect == is_perfect_oracle(relabel(g, perm)).perfect
