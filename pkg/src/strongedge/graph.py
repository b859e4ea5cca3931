"""Simple undirected graphs, small generators and structural helpers."""
from __future__ import annotations

import io
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import TextIO

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """A finite simple undirected graph on vertices ``0..vertex_count-1``.

    Instances are treated as immutable. ``edges`` is sorted, so an edge's
    position in it is a stable edge index.
    """

    __slots__ = ("vertex_count", "edges", "adjacency", "_index")

    def __init__(self, vertex_count: int, edges: Iterable[Edge] = ()):
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        seen: set[Edge] = set()
        for u, v in edges:
            if u < 0 or v < 0 or u >= vertex_count or v >= vertex_count:
                raise GraphError(f"edge ({u}, {v}) has an id outside 0..{vertex_count - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            e = _norm(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        self.vertex_count = vertex_count
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._index = {e: i for i, e in enumerate(self.edges)}

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.vertex_count}, m={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._index

    def edge_index(self, u: int, v: int) -> int:
        return self._index[_norm(u, v)]

    def incident_edges(self, v: int) -> list[Edge]:
        return [_norm(v, w) for w in self.adjacency[v]]

    def without(self, vertices: Iterable[int]) -> SimpleGraph:
        """Delete ``vertices`` (and their edges) but keep every vertex id."""
        gone = set(vertices)
        return SimpleGraph(
            self.vertex_count,
            [e for e in self.edges if e[0] not in gone and e[1] not in gone],
        )

    def induced(self, vertices: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns new->old ids."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        sub = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return SimpleGraph(len(keep), sub), keep

    def non_isolated(self) -> list[int]:
        return [v for v in range(self.vertex_count) if self.adjacency[v]]

    def components(self) -> list[list[int]]:
        """Connected components (isolated vertices included), each sorted."""
        seen = [False] * self.vertex_count
        out = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_star(self) -> bool:
        """True for K_{1,d} (d >= 1) possibly padded with isolated vertices."""
        active = self.non_isolated()
        if not active:
            return False
        centre = max(active, key=lambda v: (self.degree(v), -v))
        return self.degree(centre) == len(self.edges)


def build_graph(edge_list: Sequence[Edge], vertex_count: int | None = None) -> SimpleGraph:
    """Build a graph from an edge list; ``vertex_count`` defaults to max id + 1."""
    if any(u < 0 or v < 0 for u, v in edge_list):
        raise GraphError("vertex ids must be non-negative")
    if vertex_count is None:
        vertex_count = 1 + max((max(e) for e in edge_list), default=-1)
    return SimpleGraph(vertex_count, edge_list)


# -- generators --------------------------------------------------------------

def cycle_graph(k: int) -> SimpleGraph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return SimpleGraph(k, [(i, (i + 1) % k) for i in range(k)])


def star_graph(d: int) -> SimpleGraph:
    """K_{1,d} with centre 0."""
    if d < 1:
        raise ValueError("star needs d >= 1")
    return SimpleGraph(d + 1, [(0, i) for i in range(1, d + 1)])


def path_graph(m: int) -> SimpleGraph:
    """Path on ``m`` vertices (``m - 1`` edges)."""
    if m < 1:
        raise ValueError("path needs m >= 1")
    return SimpleGraph(m, [(i, i + 1) for i in range(m - 1)])


def complete_graph(m: int) -> SimpleGraph:
    return SimpleGraph(m, combinations(range(m), 2))


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def caterpillar_cycle(kappa: int, delta: int) -> SimpleGraph:
    """C_{kappa,delta}: cycle 0..kappa-1, each with ``delta - 2`` pendants.

    Pendants of spine vertex ``i`` are numbered consecutively after the spine.
    """
    if kappa < 3 or delta < 2:
        raise ValueError("caterpillar_cycle needs kappa >= 3 and delta >= 2")
    edges = [(i, (i + 1) % kappa) for i in range(kappa)]
    nxt = kappa
    for i in range(kappa):
        for _ in range(delta - 2):
            edges.append((i, nxt))
            nxt += 1
    return SimpleGraph(nxt, edges)


def caterpillar_path(length: int, delta: int) -> SimpleGraph:
    """Spine 0..length+1 whose ``length`` internal vertices carry ``delta - 2`` pendants."""
    if length < 1 or delta < 2:
        raise ValueError("caterpillar_path needs length >= 1 and delta >= 2")
    spine = length + 2
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(1, length + 1):
        for _ in range(delta - 2):
            edges.append((i, nxt))
            nxt += 1
    return SimpleGraph(nxt, edges)


_FAMILIES = {
    "cycle": cycle_graph,
    "star": star_graph,
    "path": path_graph,
    "complete": complete_graph,
    "petersen": petersen_graph,
    "caterpillar_cycle": caterpillar_cycle,
    "caterpillar_path": caterpillar_path,
}


def generate(family: str, *params: int) -> SimpleGraph:
    """Dispatch to a named generator, e.g. ``generate("caterpillar_cycle", 6, 4)``."""
    try:
        fn = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return fn(*params)


# -- structure ---------------------------------------------------------------

@dataclass(frozen=True)
class PeeledGraph:
    """Result of removing the degree-1 vertices of a graph once.

    ``h`` is relabelled to ``0..k-1``; ``original_ids[i]`` is the id in the
    source graph of vertex ``i`` of ``h``. ``pendant_map`` is keyed by
    source-graph ids.
    """

    h: SimpleGraph
    pendant_map: dict[int, list[int]]
    original_ids: list[int]


def peel_pendants(g: SimpleGraph) -> PeeledGraph:
    """Remove all degree-1 vertices of ``g`` in a single pass.

    A vertex that only becomes a leaf after the removal is kept.
    """
    leaves = [v for v in range(g.vertex_count) if g.degree(v) == 1]
    pendant_map: dict[int, list[int]] = {}
    for z in leaves:
        pendant_map.setdefault(g.adjacency[z][0], []).append(z)
    gone = set(leaves)
    h, ids = g.induced(v for v in range(g.vertex_count) if v not in gone)
    return PeeledGraph(h, pendant_map, ids)


@dataclass(frozen=True)
class Thread:
    """Path ``v0..v_{l+1}`` whose internal vertices have degree 2 in the host."""

    path: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.path) - 2

    @property
    def closed(self) -> bool:
        return self.path[0] == self.path[-1]


def is_thread(g: SimpleGraph, path: Sequence[int]) -> bool:
    if len(path) < 3:
        return False
    if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    if any(g.degree(v) != 2 for v in path[1:-1]):
        return False
    if path[0] == path[-1]:
        # a closed thread is a cycle, so it needs at least two internal vertices
        body = list(path[:-1])
        if len(body) < 3:
            return False
    else:
        body = list(path)
    return len(set(body)) == len(body)


def find_thread(g: SimpleGraph, length: int) -> Thread | None:
    """Lexicographically least ``length``-thread of ``g``, or ``None``."""
    if length < 1:
        raise ValueError("thread length must be positive")
    for v0 in range(g.vertex_count):
        for v1 in g.adjacency[v0]:
            if g.degree(v1) != 2:
                continue
            path = [v0, v1]
            ok = True
            while len(path) < length + 2:
                a, b = g.adjacency[path[-1]]
                nxt = b if a == path[-2] else a
                path.append(nxt)
                if len(path) < length + 2 and g.degree(nxt) != 2:
                    ok = False
                    break
            if ok and is_thread(g, path):
                return Thread(tuple(path))
    return None


def conflict_graph(g: SimpleGraph) -> SimpleGraph:
    """Graph on edge indices of ``g``; two edges conflict when they share a
    vertex or some edge of ``g`` touches both (square of the line graph)."""
    m = len(g.edges)
    pairs = set()
    for i, (u, v) in enumerate(g.edges):
        near = set()
        for x in (u, v):
            for y in g.adjacency[x]:
                near.add(_norm(x, y))
                for z in g.adjacency[y]:
                    near.add(_norm(y, z))
        for e in near:
            j = g.edge_index(*e)
            if j != i:
                pairs.add(_norm(i, j))
    return SimpleGraph(m, pairs)


# -- text format -------------------------------------------------------------

def parse_graph(text: str) -> SimpleGraph:
    """Parse the ``graph <n> <m>`` / ``e <u> <v>`` text format."""
    header = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if header is None:
                if parts[0] != "graph" or len(parts) != 3:
                    raise GraphError(f"line {lineno}: expected 'graph <n> <m>'")
                header = (int(parts[1]), int(parts[2]))
            elif parts[0] == "e" and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphError(f"line {lineno}: expected 'e <u> <v>'")
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"line {lineno}: {exc}") from None
    if header is None:
        raise GraphError("missing 'graph' header")
    n, m = header
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return SimpleGraph(n, edges)


def format_graph(g: SimpleGraph) -> str:
    out = io.StringIO()
    write_graph(g, out)
    return out.getvalue()


def write_graph(g: SimpleGraph, fh: TextIO) -> None:
    fh.write(f"graph {g.vertex_count} {g.edge_count}\n")
    for u, v in g.edges:
        fh.write(f"e {u} {v}\n")


def read_graph(path: str | Path) -> SimpleGraph:
    return parse_graph(Path(path).read_text())


@dataclass(frozen=True)
class CaterpillarSpine:
    """Spine ``u0..u_{l+1}`` plus the degree-1 neighbours of each internal vertex."""

    spine: tuple[int, ...]
    pendants: dict[int, tuple[int, ...]]

    @property
    def length(self) -> int:
        return len(self.spine) - 2

    @property
    def internal(self) -> tuple[int, ...]:
        return self.spine[1:-1]


def lift_caterpillar(g: SimpleGraph, path: Sequence[int]) -> CaterpillarSpine:
    """Attach to each internal vertex of ``path`` its degree-1 neighbours.

    Raises ``GraphError`` unless every internal vertex has exactly two
    non-pendant neighbours, namely its spine neighbours.
    """
    if len(path) < 3:
        raise GraphError("a caterpillar spine needs an internal vertex")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"spine step ({a}, {b}) is not an edge")
    pendants = {}
    for i in range(1, len(path) - 1):
        u = path[i]
        spine_nbrs = {path[i - 1], path[i + 1]}
        leaves = tuple(w for w in g.adjacency[u] if w not in spine_nbrs)
        if len(spine_nbrs) != 2 or any(g.degree(w) != 1 for w in leaves):
            raise GraphError(f"spine vertex {u} has a non-pendant neighbour off the spine")
        pendants[u] = leaves
    return CaterpillarSpine(tuple(path), pendants)
