import itertools
import random

import pytest

from conftest import random_graph
from wmp.errors import SizeOutOfRange
from wmp.expr import parse_expr
from wmp.graph import are_isomorphic_bruteforce, build, complement, complete, cycle, empty
from wmp.products import tensor_product, weak_modular_product, wmp


def brute_edges(g, h, co=False):
    """Edge set of the product straight from the definition, on (x, y) pairs."""
    out = set()
    verts = list(itertools.product(range(g.n), range(h.n)))
    for (x, y), (x2, y2) in itertools.combinations(verts, 2):
        if x == x2 or y == y2:
            continue
        both = g.has_edge(x, x2) and h.has_edge(y, y2)
        neither = not g.has_edge(x, x2) and not h.has_edge(y, y2)
        if both or (co and neither):
            out.add(frozenset({(x, y), (x2, y2)}))
    return out


def coord_edges(p):
    return {frozenset({p.coords(a), p.coords(b)}) for a, b in p.graph.edges()}


def test_k2_tensor_k2():
    p = tensor_product(complete(2), complete(2))
    assert are_isomorphic_bruteforce(p.graph, parse_expr("2*K2")) is not None
    assert p.graph.edges() == [(0, 3), (1, 2)]


def test_c5_tensor_count():
    assert len(brute_edges(cycle(5), cycle(5))) == 50
    assert tensor_product(cycle(5), cycle(5)).graph.edge_count == 50


def test_c5_wmp_count():
    assert len(brute_edges(cycle(5), cycle(5), co=True)) == 100
    assert wmp(cycle(5), cycle(5)).edge_count == 100


@pytest.mark.parametrize("expr", ["K3", "P4", "C5", "K2+E1"])
def test_empty_tensor(expr):
    assert tensor_product(empty(3), parse_expr(expr)).graph.edge_count == 0


@pytest.mark.parametrize("expr", ["K3", "P4", "C5", "E4"])
def test_k1_product_is_edgeless(expr):
    h = parse_expr(expr)
    assert wmp(complete(1), h) == empty(h.n)


@pytest.mark.parametrize("expr", ["P4", "C5", "paw", "K2+E1", "K1,3"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_wmp_with_clique_is_tensor(expr, n):
    g = parse_expr(expr)
    assert wmp(g, complete(n)) == tensor_product(g, complete(n)).graph


def test_tensor_edge_count_formula():
    rng = random.Random(5)
    for _ in range(50):
        g, h = random_graph(rng, rng.randint(1, 7)), random_graph(rng, rng.randint(1, 7))
        assert tensor_product(g, h).graph.edge_count == 2 * g.edge_count * h.edge_count


def test_against_definition():
    rng = random.Random(9)
    for _ in range(60):
        g, h = random_graph(rng, rng.randint(1, 6)), random_graph(rng, rng.randint(1, 6))
        assert coord_edges(tensor_product(g, h)) == brute_edges(g, h)
        assert coord_edges(weak_modular_product(g, h)) == brute_edges(g, h, co=True)


def test_decomposition_is_disjoint_union():
    rng = random.Random(13)
    for _ in range(100):
        g, h = random_graph(rng, rng.randint(1, 8)), random_graph(rng, rng.randint(1, 8))
        same = set(tensor_product(g, h).graph.edges())
        co = set(tensor_product(complement(g), complement(h)).graph.edges())
        assert not same & co
        assert set(wmp(g, h).edges()) == same | co


def test_coordinate_swap_is_isomorphism():
    rng = random.Random(17)
    for _ in range(100):
        g, h = random_graph(rng, rng.randint(1, 8)), random_graph(rng, rng.randint(1, 8))
        gh, hg = weak_modular_product(g, h), weak_modular_product(h, g)
        swap = [hg.index(*reversed(gh.coords(v))) for v in range(gh.n)]
        for a, b in itertools.combinations(range(gh.n), 2):
            assert gh.graph.has_edge(a, b) == hg.graph.has_edge(swap[a], swap[b])


def test_complement_duality():
    rng = random.Random(19)
    for _ in range(100):
        g, h = random_graph(rng, rng.randint(1, 8)), random_graph(rng, rng.randint(1, 8))
        assert wmp(g, h) == wmp(complement(g), complement(h))


def test_no_row_or_column_edges():
    rng = random.Random(23)
    for _ in range(100):
        p = weak_modular_product(random_graph(rng, rng.randint(1, 8)), random_graph(rng, rng.randint(1, 8)))
        for a, b in p.graph.edges():
            (x, y), (x2, y2) = p.coords(a), p.coords(b)
            assert x != x2 and y != y2


def test_row_major_indexing():
    p = weak_modular_product(build(3, [(0, 1)]), cycle(4))
    assert (p.n_left, p.n_right, p.n) == (3, 4, 12)
    assert p.index(2, 1) == 9
    assert p.coords(9) == (2, 1)


def test_size_cap():
    with pytest.raises(SizeOutOfRange):
        weak_modular_product(complete(9), complete(8))
    with pytest.raises(SizeOutOfRange):
        tensor_product(complete(13), complete(5))
    assert weak_modular_product(cycle(8), cycle(8)).n == 64
