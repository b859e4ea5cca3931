"""Girth split by cycle parity.

Missing cycle lengths are reported as ``math.inf``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graph import SimpleGraph

INF = math.inf


@dataclass(frozen=True)
class GirthProfile:
    girth: float
    odd_girth: float
    even_girth: float

    def as_dict(self) -> dict[str, int | None]:
        def fin(x: float) -> int | None:
            return None if x == INF else int(x)

        return {"girth": fin(self.girth), "odd_girth": fin(self.odd_girth), "even_girth": fin(self.even_girth)}


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle (BFS from every vertex)."""
    best = INF
    n = g.vertex_count
    for r in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in g.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def odd_girth(g: SimpleGraph) -> float:
    """Shortest odd cycle via BFS on the bipartite double cover.

    A shortest odd closed walk through a vertex always contains an odd cycle
    of no greater length, so minimising over roots is exact.
    """
    best = INF
    n = g.vertex_count
    for r in range(n):
        dist = {(r, 0): 0}
        queue = deque([(r, 0)])
        while queue:
            x, p = queue.popleft()
            d = dist[(x, p)]
            if d + 1 >= best:
                break
            for y in g.adjacency[x]:
                state = (y, 1 - p)
                if state not in dist:
                    dist[state] = d + 1
                    if state == (r, 1):
                        best = min(best, d + 1)
                    queue.append(state)
    return best


def _two_core(g: SimpleGraph) -> list[set[int]]:
    adj = [set(a) for a in g.adjacency]
    stack = [v for v in range(g.vertex_count) if len(adj[v]) == 1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            adj[w].discard(v)
            if len(adj[w]) == 1:
                stack.append(w)
        adj[v].clear()
    return adj


def even_girth(g: SimpleGraph) -> float:
    """Length of a shortest even cycle.

    Branch-and-bound search over simple cycles of the 2-core, each cycle
    rooted at its smallest vertex, pruned by BFS distance back to the root.
    """
    gi = girth(g)
    if gi == INF:
        return INF
    if gi % 2 == 0:
        return gi
    adj = _two_core(g)
    nbrs = [sorted(a) for a in adj]
    best = INF
    for s in range(g.vertex_count):
        if not nbrs[s]:
            continue
        # distances back to s inside the vertices >= s
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if y > s and y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        path = [s]
        on_path = {s}
        stack = [iter(nbrs[s])]
        while stack:
            advanced = False
            for y in stack[-1]:
                length = len(path) - 1
                if y == s:
                    if length >= 2 and (length + 1) % 2 == 0 and length + 1 < best:
                        best = length + 1
                    continue
                if y < s or y in on_path or y not in dist:
                    continue
                if length + 1 + dist[y] >= best:
                    continue
                path.append(y)
                on_path.add(y)
                stack.append(iter(nbrs[y]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())
        if best == gi + 1:
            break
    return best


def girth_profile(g: SimpleGraph) -> GirthProfile:
    return GirthProfile(girth(g), odd_girth(g), even_girth(g))
