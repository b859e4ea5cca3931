import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongedge.graph import (
    GraphError,
    SimpleGraph,
    build_graph,
    caterpillar_cycle,
    caterpillar_path,
    complete_graph,
    conflict_graph,
    cycle_graph,
    find_thread,
    format_graph,
    generate,
    is_thread,
    lift_caterpillar,
    parse_graph,
    path_graph,
    peel_pendants,
    petersen_graph,
    star_graph,
)

from _graphs import random_graph


def test_build_path():
    g = build_graph([(0, 1), (1, 2)])
    assert g.vertex_count == 3 and g.edge_count == 2 and g.max_degree == 2


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(-1, 2)]])
def test_build_rejects(edges):
    with pytest.raises(GraphError):
        build_graph(edges)


def test_out_of_range_vertex():
    with pytest.raises(GraphError):
        SimpleGraph(2, [(0, 2)])


def test_caterpillar_cycle_counts():
    g = caterpillar_cycle(6, 4)
    assert g.vertex_count == 18 and g.edge_count == 18
    assert all(g.degree(v) == 4 for v in range(6))
    assert all(g.degree(v) == 1 for v in range(6, 18))


@pytest.mark.parametrize("kappa,delta", [(3, 2), (5, 3), (7, 5)])
def test_caterpillar_cycle_size_formula(kappa, delta):
    g = caterpillar_cycle(kappa, delta)
    assert g.vertex_count == g.edge_count == kappa * (delta - 1)


def test_petersen_shape():
    g = petersen_graph()
    assert (g.vertex_count, g.edge_count) == (10, 15)
    assert {g.degree(v) for v in range(10)} == {3}


def test_star():
    g = star_graph(4)
    assert g.vertex_count == 5 and g.is_star() and g.degree(0) == 4


def test_generate_dispatch():
    assert generate("cycle", 5) == cycle_graph(5)
    assert generate("caterpillar_path", 3, 4) == caterpillar_path(3, 4)
    with pytest.raises(ValueError):
        generate("cycle", 2)
    with pytest.raises(ValueError):
        generate("wheel", 5)


def test_peel_star():
    p = peel_pendants(star_graph(4))
    assert p.h.vertex_count == 1 and p.h.edge_count == 0
    assert p.pendant_map == {0: [1, 2, 3, 4]}


def test_peel_cycle_untouched():
    p = peel_pendants(cycle_graph(6))
    assert p.h == cycle_graph(6) and p.pendant_map == {}


def test_peel_caterpillar_cycle():
    p = peel_pendants(caterpillar_cycle(6, 4))
    assert p.h == cycle_graph(6)
    assert sum(map(len, p.pendant_map.values())) == 12


def test_peel_single_pass():
    # path 0-1-2-3: only 0 and 3 go, 1 and 2 become leaves of h and stay
    p = peel_pendants(path_graph(4))
    assert p.h.vertex_count == 2 and p.h.edge_count == 1


def test_thread_in_cycle_closes():
    t = find_thread(cycle_graph(7), 6)
    assert t is not None and t.closed and t.length == 6


def test_thread_caterpillar_cycle():
    g = caterpillar_cycle(6, 4)
    assert find_thread(g, 1) is None
    assert find_thread(peel_pendants(g).h, 5) is not None


def test_no_thread_in_k4():
    for length in range(1, 5):
        assert find_thread(complete_graph(4), length) is None


def _threads_bruteforce(g, length):
    """All vertex sequences of the right length passing is_thread."""
    found = []

    def extend(path):
        if len(path) == length + 2:
            if is_thread(g, path):
                found.append(tuple(path))
            return
        for w in g.adjacency[path[-1]]:
            extend(path + [w])

    for v in range(g.vertex_count):
        extend([v])
    return sorted(found)


def test_find_thread_matches_enumeration():
    rng = random.Random(7)
    for _ in range(150):
        g = random_graph(rng, rng.randint(3, 9), rng.choice([0.2, 0.3, 0.45]))
        for length in (1, 2, 3, 4):
            all_threads = _threads_bruteforce(g, length)
            t = find_thread(g, length)
            if not all_threads:
                assert t is None
            else:
                assert t is not None and t.path == all_threads[0]


def test_conflict_graph_examples():
    assert conflict_graph(path_graph(4)) == complete_graph(3)
    assert conflict_graph(cycle_graph(5)) == complete_graph(5)
    c6 = conflict_graph(cycle_graph(6))
    assert c6.vertex_count == 6 and {c6.degree(v) for v in range(6)} == {4}


def test_conflict_graph_definition():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 9), 0.35)
        cg = conflict_graph(g)
        for i, e in enumerate(g.edges):
            for j, f in enumerate(g.edges):
                if i < j:
                    near = bool(set(e) & set(f)) or any(g.has_edge(a, b) for a in e for b in f)
                    assert cg.has_edge(i, j) == near


def test_lift_caterpillar():
    cat = lift_caterpillar(caterpillar_path(3, 4), [0, 1, 2, 3, 4])
    assert cat.length == 3 and cat.internal == (1, 2, 3)
    assert cat.pendants == {1: (5, 6), 2: (7, 8), 3: (9, 10)}


def test_lift_caterpillar_rejects_branching():
    g = build_graph([(0, 1), (1, 2), (1, 3), (3, 4)])
    with pytest.raises(GraphError):
        lift_caterpillar(g, [0, 1, 2])


def test_parse_format_roundtrip_example():
    text = "# a triangle\ngraph 3 3\n\ne 0 1\ne 1 2\ne 0 2\n"
    g = parse_graph(text)
    assert g == complete_graph(3)
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize("text", ["graph 2 1\ne 0 2\n", "graph 3 2\ne 0 1\n", "e 0 1\n", "graph 2 1\nx 0 1\n"])
def test_parse_errors(text):
    with pytest.raises(GraphError):
        parse_graph(text)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(n, chosen)


@given(graphs())
def test_roundtrip_property(g):
    assert parse_graph(format_graph(g)) == g


@given(graphs())
def test_peel_accounting(g):
    p = peel_pendants(g)
    assert g.vertex_count == p.h.vertex_count + sum(map(len, p.pendant_map.values()))
    assert all(g.degree(p.original_ids[v]) != 1 for v in range(p.h.vertex_count))


@settings(max_examples=60)
@given(graphs(max_n=8), st.integers(1, 4))
def test_thread_invariants(g, length):
    t = find_thread(g, length)
    if t is not None:
        assert is_thread(g, t.path) and t.length == length
        assert all(g.degree(v) == 2 for v in t.path[1:-1])


def test_induced_relabels():
    g = cycle_graph(5)
    h, ids = g.induced([4, 0, 1])
    assert ids == [0, 1, 4] and h.edge_count == 2
    assert sorted(g.without([2]).edges) == [(0, 1), (0, 4), (3, 4)]


def test_equality_ignores_edge_order():
    a = SimpleGraph(3, [(0, 1), (1, 2)])
    b = SimpleGraph(3, [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
