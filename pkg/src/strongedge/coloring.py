"""Strong edge colourings: the verifier plus greedy and exact solvers."""
from __future__ import annotations

import io
from collections.abc import Mapping
from dataclasses import dataclass, field

from .graph import Edge, GraphError, SimpleGraph, conflict_graph


class ColoringError(ValueError):
    """Raised for partial or malformed colourings."""


@dataclass
class StrongColoring:
    """Total map from the edges of ``graph`` to colours ``1..palette``."""

    graph: SimpleGraph
    colors: dict[Edge, int]
    palette: int = 0

    def __post_init__(self):
        if not self.palette:
            self.palette = max(self.colors.values(), default=0)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))

    def __getitem__(self, edge: Edge) -> int:
        u, v = edge
        return self.colors[(u, v) if u < v else (v, u)]

    def restricted(self, g: SimpleGraph) -> StrongColoring:
        return StrongColoring(g, {e: self.colors[e] for e in g.edges}, self.palette)


def _as_map(c: StrongColoring | Mapping[Edge, int]) -> Mapping[Edge, int]:
    return c.colors if isinstance(c, StrongColoring) else c


def verify_strong_coloring(
    g: SimpleGraph, c: StrongColoring | Mapping[Edge, int]
) -> list[tuple[Edge, Edge]]:
    """Pairs of equally coloured edges that share a vertex or are joined by
    an edge; an empty list means ``c`` is a strong edge colouring.

    Checked class by class straight from the definition (every colour class
    must be an induced matching).
    """
    colors = _as_map(c)
    missing = [e for e in g.edges if e not in colors]
    if missing:
        raise ColoringError(f"colouring misses {len(missing)} edge(s), e.g. {missing[0]}")
    classes: dict[int, list[Edge]] = {}
    for e in g.edges:
        classes.setdefault(colors[e], []).append(e)
    bad = []
    for members in classes.values():
        for i, (a, b) in enumerate(members):
            for c2, d in members[i + 1:]:
                if {a, b} & {c2, d} or any(g.has_edge(p, q) for p in (a, b) for q in (c2, d)):
                    bad.append(((a, b), (c2, d)))
    return bad


def is_strong_coloring(g: SimpleGraph, c: StrongColoring | Mapping[Edge, int]) -> bool:
    return not verify_strong_coloring(g, c)


def greedy_strong_coloring(g: SimpleGraph) -> StrongColoring:
    """First-fit in edge-index order; never exceeds 2Δ(Δ-1)+1 colours."""
    cg = conflict_graph(g)
    col = [0] * g.edge_count
    for i in range(g.edge_count):
        used = {col[j] for j in cg.adjacency[i]}
        c = 1
        while c in used:
            c += 1
        col[i] = c
    return StrongColoring(g, dict(zip(g.edges, col)))


# -- exact solver --------------------------------------------------------------

def clique_lower_bound(g: SimpleGraph) -> list[Edge]:
    """Largest edge star pair: all edges at the two ends of one edge pairwise
    conflict, giving a clique of size deg(u) + deg(v) - 1."""
    best: list[Edge] = []
    for u, v in g.edges:
        if g.degree(u) + g.degree(v) - 1 > len(best):
            best = sorted(set(g.incident_edges(u)) | set(g.incident_edges(v)))
    return best


@dataclass
class ExactResult:
    value: int
    coloring: StrongColoring
    exact: bool
    lower_bound: int
    nodes: int = field(default=0)


class _Budget(Exception):
    pass


def _k_colour(adj: list[int], k: int, pre: dict[int, int], twins: list[list[int]],
             budget: list[int]) -> list[int] | None:
    """Backtracking search for a proper ``k``-colouring of the conflict graph.

    ``adj`` is bitmask adjacency and ``pre`` fixes some vertices. Vertices
    sharing a closed neighbourhood (``twins``, listed in index order) must
    get increasing colours; this loses nothing as long as no twin class
    meets ``pre`` partially. Branching picks the most saturated vertex.
    """
    m = len(adj)
    col = [0] * m
    sat = [0] * m  # bitmask of colours seen among neighbours
    group = {v: grp for grp in twins for v in grp}
    for v, c in pre.items():
        col[v] = c
        nb = adj[v]
        while nb:
            low = nb & -nb
            sat[low.bit_length() - 1] |= 1 << c
            nb ^= low
    deg = [a.bit_count() for a in adj]

    def rec(remaining: int) -> bool:
        if remaining == 0:
            return True
        budget[0] -= 1
        if budget[0] < 0:
            raise _Budget
        v = -1
        key = (-1, -1)
        for u in range(m):
            if not col[u]:
                kk = (sat[u].bit_count(), deg[u])
                if kk > key:
                    key, v = kk, u
        if key[0] >= k:
            return False
        lo, hi = 1, k
        for w in group.get(v, ()):
            if col[w]:
                if w < v:
                    lo = max(lo, col[w] + 1)
                else:
                    hi = min(hi, col[w] - 1)
        for c in range(lo, hi + 1):
            bit = 1 << c
            if sat[v] & bit:
                continue
            col[v] = c
            touched = []
            nb = adj[v]
            while nb:
                low = nb & -nb
                w = low.bit_length() - 1
                if not col[w] and not sat[w] & bit:
                    sat[w] |= bit
                    touched.append(w)
                nb ^= low
            if rec(remaining - 1):
                return True
            for w in touched:
                sat[w] &= ~bit
            col[v] = 0
        return False

    if rec(m - len(pre)):
        return col
    return None


def _search_setup(g: SimpleGraph):
    """Bitmask conflict adjacency, a maximal clique (pre-coloured 1..q) and
    the twin classes outside it."""
    cg = conflict_graph(g)
    adj = [sum(1 << j for j in a) for a in cg.adjacency]
    clique = [g.edge_index(*e) for e in clique_lower_bound(g)]
    common = ~0
    for v in clique:
        common &= adj[v]
    for v in range(len(adj)):
        if common >> v & 1:
            clique.append(v)
            common &= adj[v]
    pre = {v: i + 1 for i, v in enumerate(clique)}
    classes: dict[int, list[int]] = {}
    for v in range(len(adj)):
        if v not in pre:
            classes.setdefault(adj[v] | 1 << v, []).append(v)
    twins = [grp for grp in classes.values() if len(grp) > 1]
    return adj, pre, twins


def strong_coloring_with(g: SimpleGraph, k: int, budget: int = 200_000) -> StrongColoring | None:
    """A strong colouring with at most ``k`` colours, or ``None`` if none exists.

    Raises ``TimeoutError`` when the node budget runs out.
    """
    if g.edge_count == 0:
        return StrongColoring(g, {}, k)
    adj, pre, twins = _search_setup(g)
    if len(pre) > k:
        return None
    try:
        col = _k_colour(adj, k, pre, twins, [budget])
    except _Budget:
        raise TimeoutError(f"node budget {budget} exhausted deciding {k}-colourability") from None
    if col is None:
        return None
    return StrongColoring(g, dict(zip(g.edges, col)), k)


def exact_strong_chromatic_index(g: SimpleGraph, budget: int = 2_000_000) -> ExactResult:
    """Strong chromatic index with an optimal witness.

    Tries palettes upward from the clique bound; when ``budget`` search
    nodes are spent the greedy-or-better colouring is returned with
    ``exact=False``.
    """
    greedy = greedy_strong_coloring(g)
    if g.edge_count == 0:
        return ExactResult(0, greedy, True, 0)
    adj, pre, twins = _search_setup(g)
    lb = len(pre)
    left = [budget]
    for k in range(lb, greedy.num_colors):
        try:
            col = _k_colour(adj, k, pre, twins, left)
        except _Budget:
            return ExactResult(greedy.num_colors, greedy, False, k, budget)
        if col is not None:
            return ExactResult(k, StrongColoring(g, dict(zip(g.edges, col)), k), True, lb, budget - left[0])
    return ExactResult(greedy.num_colors, greedy, True, lb, budget - left[0])


def strong_chromatic_index_bruteforce(g: SimpleGraph) -> int:
    """Minimum number of induced matchings covering E(g), by enumerating all
    set partitions of the edges (restricted growth strings)."""
    edges = g.edges
    m = len(edges)
    if m > 10:
        raise ValueError("brute force is limited to 10 edges")
    if m == 0:
        return 0

    def compatible(e: Edge, f: Edge) -> bool:
        if set(e) & set(f):
            return False
        return not any(g.has_edge(p, q) for p in e for q in f)

    ok = [[compatible(edges[i], edges[j]) for j in range(m)] for i in range(m)]
    best = m

    def rec(i: int, blocks: list[list[int]]) -> None:
        nonlocal best
        if len(blocks) >= best:
            return
        if i == m:
            best = len(blocks)
            return
        for b in blocks:
            if all(ok[i][j] for j in b):
                b.append(i)
                rec(i + 1, blocks)
                b.pop()
        blocks.append([i])
        rec(i + 1, blocks)
        blocks.pop()

    rec(0, [])
    return best


# -- text format -------------------------------------------------------------

def format_coloring(c: StrongColoring) -> str:
    out = io.StringIO()
    out.write(f"coloring K={c.palette}\n")
    for (u, v) in c.graph.edges:
        out.write(f"c {u} {v} {c.colors[(u, v)]}\n")
    return out.getvalue()


def parse_coloring(text: str, g: SimpleGraph) -> StrongColoring:
    palette = None
    colors: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "trace" and palette is not None:
            break  # a reduction trace may follow the colouring
        if palette is None:
            if parts[0] != "coloring" or len(parts) != 2 or not parts[1].startswith("K="):
                raise ColoringError(f"line {lineno}: expected 'coloring K=<K>'")
            palette = int(parts[1][2:])
            continue
        if parts[0] != "c" or len(parts) != 4:
            raise ColoringError(f"line {lineno}: expected 'c <u> <v> <color>'")
        u, v, col = map(int, parts[1:])
        e = (u, v) if u < v else (v, u)
        if not g.has_edge(*e):
            raise GraphError(f"line {lineno}: ({u}, {v}) is not an edge of the graph")
        if e in colors:
            raise ColoringError(f"line {lineno}: edge {e} coloured twice")
        if not 1 <= col <= palette:
            raise ColoringError(f"line {lineno}: colour {col} outside 1..{palette}")
        colors[e] = col
    if palette is None:
        raise ColoringError("missing 'coloring' header")
    missing = [e for e in g.edges if e not in colors]
    if missing:
        raise ColoringError(f"colouring misses {len(missing)} edge(s), e.g. {missing[0]}")
    return StrongColoring(g, colors, palette)
