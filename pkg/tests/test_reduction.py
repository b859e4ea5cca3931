import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongedge.coloring import exact_strong_chromatic_index, is_strong_coloring, strong_coloring_with
from strongedge.graph import (
    build_graph,
    caterpillar_cycle,
    complete_graph,
    cycle_graph,
    lift_caterpillar,
    path_graph,
    star_graph,
)
from strongedge.reduction import (
    AlgorithmMode,
    ExtensionError,
    PreconditionError,
    ReductionStuck,
    ReductionTrace,
    caterpillar_reduced_graph,
    check_preconditions,
    closed_walk_range_ok,
    color_caterpillar_cycle,
    cycle_coloring,
    extend_over_caterpillar,
    extend_pendant,
    replay_trace,
    strong_color_sparse,
)

from _graphs import from_nx, subdivided


def test_pendant_star_one_at_a_time():
    colors = {}
    for k in range(1, 5):
        g = star_graph(k)
        colors = extend_pendant(g, colors, 0, k, 7).colors
    assert [colors[(0, i)] for i in range(1, 5)] == [1, 2, 3, 4]


def test_pendant_least_free():
    g = build_graph([(0, 1), (0, 2)])  # x=0, y=1, z=2
    c = extend_pendant(g, {(0, 1): 1}, 0, 2, 7)
    assert c[(0, 2)] == 2


def test_pendant_rejects_non_leaf():
    g = path_graph(3)
    with pytest.raises(ExtensionError):
        extend_pendant(g, {(0, 1): 1}, 2, 1, 7)


def test_pendant_rejects_two_heavy_neighbours():
    g = build_graph([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    with pytest.raises(ExtensionError):
        extend_pendant(g, {}, 0, 5, 7)


def test_caterpillar_bare_path_kappa4():
    g = path_graph(9)  # u0..u8, l = 7
    spine = lift_caterpillar(g, list(range(9)))
    r = caterpillar_reduced_graph(g, spine)
    assert sorted(r.edges) == [(0, 1), (7, 8)]
    c = extend_over_caterpillar(g, spine, {(0, 1): 1, (7, 8): 2}, 4)
    assert is_strong_coloring(g, c) and c[(0, 1)] == 1 and c[(7, 8)] == 2
    assert max(c.colors.values()) <= 7


def test_caterpillar_too_short():
    g = path_graph(8)  # l = 6
    spine = lift_caterpillar(g, list(range(8)))
    with pytest.raises(ExtensionError):
        extend_over_caterpillar(g, spine, {(0, 1): 1, (6, 7): 2}, 4)


def test_caterpillar_missing_colours():
    g = path_graph(9)
    spine = lift_caterpillar(g, list(range(9)))
    with pytest.raises(ExtensionError):
        extend_over_caterpillar(g, spine, {(0, 1): 1}, 4)


def _subdivided_k4_spine(seed):
    rng = random.Random(seed)
    g = subdivided(rng, nx.complete_graph(4), 9, 3, p=0.5, depth=1)
    # vertices 0..3 are the branch vertices; the first path starts at 0
    path = [0]
    prev = None
    while len(path) < 11:
        here = path[-1]
        nxt = min(w for w in g.adjacency[here] if w != prev and g.degree(w) >= 2 and w not in path)
        prev = here
        path.append(nxt)
    return g, lift_caterpillar(g, path)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.permutations(range(1, 6)))
def test_caterpillar_kappa3_random_recolouring(seed, perm):
    g, spine = _subdivided_k4_spine(seed)
    assert spine.length == 9
    r = caterpillar_reduced_graph(g, spine)
    base = strong_color_sparse(r, AlgorithmMode("subcubic-girth41", 3)).coloring
    c = {e: perm[col - 1] for e, col in base.colors.items()}
    out = extend_over_caterpillar(g, spine, c, 3)
    assert is_strong_coloring(g, out) and max(out.colors.values()) <= 5
    assert {e: out.colors[e] for e in r.edges} == c


def test_caterpillar_closed_spine():
    # a 9-cycle hanging off vertex 0, which also carries two other edges
    edges = [(i, i + 1) for i in range(8)] + [(8, 0), (0, 9), (0, 10)]
    g = build_graph(edges)
    path = list(range(9)) + [0]
    spine = lift_caterpillar(g, path)
    r = caterpillar_reduced_graph(g, spine)
    c = strong_coloring_with(r, 7)
    out = extend_over_caterpillar(g, spine, c, 4)
    assert is_strong_coloring(g, out)


@pytest.mark.parametrize("kappa,delta", [(6, 4), (7, 4)])
def test_color_caterpillar_cycle_examples(kappa, delta):
    c = color_caterpillar_cycle(kappa, delta)
    assert is_strong_coloring(caterpillar_cycle(kappa, delta), c)
    assert c.num_colors <= 2 * delta - 1


def test_color_caterpillar_cycle_optimal_64():
    assert exact_strong_chromatic_index(caterpillar_cycle(6, 4)).value == 7


@pytest.mark.parametrize("kappa,delta", [(5, 4), (4, 3), (5, 3), (7, 5)])
def test_color_caterpillar_cycle_out_of_range(kappa, delta):
    with pytest.raises(ValueError):
        color_caterpillar_cycle(kappa, delta)


def test_color_caterpillar_cycle_whole_range():
    for delta in (3, 4, 5):
        for kappa in range(3, 13):
            if not closed_walk_range_ok(kappa, delta):
                continue
            g = caterpillar_cycle(kappa, delta)
            c = color_caterpillar_cycle(kappa, delta)
            assert is_strong_coloring(g, c) and max(c.colors.values()) <= 2 * delta - 1


def test_cycle_formula_against_exact():
    for m in range(3, 13):
        g = cycle_graph(m)
        seq = cycle_coloring(m)
        c = {(min(i, (i + 1) % m), max(i, (i + 1) % m)): col for i, col in enumerate(seq)}
        assert is_strong_coloring(g, c)
        assert len(set(seq)) == exact_strong_chromatic_index(g).value


def test_mode_validation():
    with pytest.raises(ValueError):
        AlgorithmMode("high-girth", 3)
    with pytest.raises(ValueError):
        AlgorithmMode("subcubic-mad", 4)
    with pytest.raises(ValueError):
        AlgorithmMode("planar", 4)
    assert AlgorithmMode("subcubic-girth41", 3).thread_length == 8
    assert AlgorithmMode("high-girth", 5).thread_length == 9


def _c40_with_pendants():
    edges = [(i, (i + 1) % 40) for i in range(40)]
    nxt = 40
    for i in range(0, 40, 5):
        edges += [(i, nxt), (i, nxt + 1)]
        nxt += 2
    return build_graph(edges)


def test_sparse_c40():
    g = _c40_with_pendants()
    res = strong_color_sparse(g, AlgorithmMode("high-girth", 4))
    assert all(c.ok for c in res.checks)
    assert is_strong_coloring(g, res.coloring) and max(res.coloring.colors.values()) <= 7


def test_sparse_caterpillar_cycle_terminal_case():
    g = caterpillar_cycle(7, 4)
    res = strong_color_sparse(g, AlgorithmMode("mad-based", 4))
    assert all(c.ok for c in res.checks)
    assert res.coloring.num_colors == 7 and is_strong_coloring(g, res.coloring)
    assert [s.kind for s in res.trace.steps] == ["exact-base", "cycle-caterpillar"]


def test_sparse_strict_precondition():
    with pytest.raises(PreconditionError) as err:
        strong_color_sparse(complete_graph(4), AlgorithmMode("high-girth", 4), strict=True)
    assert "girth" in str(err.value)


def test_sparse_advisory_still_verified():
    g = complete_graph(4)
    res = strong_color_sparse(g, AlgorithmMode("high-girth", 4))
    assert not all(c.ok for c in res.checks)
    assert is_strong_coloring(g, res.coloring) and max(res.coloring.colors.values()) <= 7


def test_sparse_degree_is_always_fatal():
    with pytest.raises(PreconditionError):
        strong_color_sparse(star_graph(5), AlgorithmMode("high-girth", 4))


def test_sparse_stuck_on_cubic():
    g = from_nx(nx.random_regular_graph(3, 20, seed=3))
    with pytest.raises(ReductionStuck) as err:
        strong_color_sparse(g, AlgorithmMode("subcubic-girth41", 3))
    assert err.value.graph.edge_count == 30


def test_preconditions_mad_variant():
    checks = {c.name: c for c in check_preconditions(caterpillar_cycle(7, 4), AlgorithmMode("mad-based", 4))}
    assert checks["mad"].ok and checks["odd_girth"].ok and checks["even_girth"].ok
    checks = {c.name: c for c in check_preconditions(caterpillar_cycle(5, 4), AlgorithmMode("mad-based", 4))}
    assert not checks["odd_girth"].ok


def test_trace_roundtrip_and_replay():
    g = subdivided(random.Random(5), nx.petersen_graph(), 8, 4)
    res = strong_color_sparse(g, AlgorithmMode("high-girth", 4))
    text = res.trace.format()
    again = ReductionTrace.parse(text)
    assert again.format() == text
    assert replay_trace(g, again, 4).colors == res.coloring.colors
    kinds = {s.kind for s in res.trace.steps}
    assert {"pendant-extension", "caterpillar"} <= kinds


def test_replay_with_pendant_path():
    g = _c40_with_pendants()
    g2 = build_graph(list(g.edges) + [(40, 56)])  # pendant path so a pendant step appears
    res = strong_color_sparse(g2, AlgorithmMode("high-girth", 4))
    trace = ReductionTrace.parse(res.trace.format())
    assert replay_trace(g2, trace, 4).colors == res.coloring.colors


def test_trace_header_mismatch():
    with pytest.raises(ValueError):
        ReductionTrace.parse("trace K=7 steps=2\nexact-base edges=0 colors=\n")
