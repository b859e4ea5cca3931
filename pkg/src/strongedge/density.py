"""Exact maximum average degree via a max-closure / min-cut test."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .graph import SimpleGraph


@dataclass(frozen=True)
class Density:
    """``numerator / denominator`` is the average degree of ``witness``.

    ``numerator`` is twice the edge count of the induced subgraph and
    ``denominator`` its vertex count, kept unreduced.
    """

    numerator: int
    denominator: int
    witness: tuple[int, ...]

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def induced_edge_count(g: SimpleGraph, vertices) -> int:
    s = set(vertices)
    return sum(1 for u, v in g.edges if u in s and v in s)


def _denser_than(g: SimpleGraph, t: Fraction) -> list[int] | None:
    """Vertex set whose induced average degree exceeds ``t``, if any.

    Picking an edge earns ``2q`` and requires both endpoints, each costing
    ``p`` (``t = p/q``); a positive maximum closure is a subgraph denser
    than ``t``.
    """
    p, q = t.numerator, t.denominator
    net = nx.DiGraph()
    for i, (u, v) in enumerate(g.edges):
        net.add_edge("s", ("e", i), capacity=2 * q)
        net.add_edge(("e", i), ("v", u))
        net.add_edge(("e", i), ("v", v))
    for v in range(g.vertex_count):
        net.add_edge(("v", v), "t", capacity=p)
    cut, (source_side, _) = nx.minimum_cut(net, "s", "t")
    if 2 * q * g.edge_count - cut <= 0:
        return None
    return sorted(node[1] for node in source_side if node != "s" and node[0] == "v")


def _candidates(g: SimpleGraph) -> list[Fraction]:
    cap = g.max_degree
    vals = set()
    for size in range(1, g.vertex_count + 1):
        top = min(g.edge_count, size * (size - 1) // 2, size * cap // 2)
        for e in range(top + 1):
            vals.add(Fraction(2 * e, size))
    return sorted(vals)


def mad(g: SimpleGraph) -> Density:
    """Maximum average degree over non-empty (induced) subgraphs, exactly.

    Binary search over the finite set of attainable ratios ``2e/v``; each
    probe is one min-cut.
    """
    if g.vertex_count == 0:
        raise ValueError("mad of the empty graph is undefined")
    if g.edge_count == 0:
        return Density(0, 1, (0,))
    cands = _candidates(g)
    lo, hi = 0, len(cands) - 1
    # invariant: cands[hi] is not exceeded by any subgraph
    while lo < hi:
        mid = (lo + hi) // 2
        if _denser_than(g, cands[mid]) is None:
            hi = mid
        else:
            lo = mid + 1
    best = cands[lo]
    witness = _denser_than(g, cands[lo - 1]) if lo > 0 else None
    assert witness, "a strictly lower candidate must be exceeded"
    num = 2 * induced_edge_count(g, witness)
    assert Fraction(num, len(witness)) == best
    return Density(num, len(witness), tuple(witness))


def mad_bruteforce(g: SimpleGraph) -> Fraction:
    """Exhaustive maximisation over all vertex subsets (small graphs only)."""
    n = g.vertex_count
    if n == 0:
        raise ValueError("mad of the empty graph is undefined")
    if n > 20:
        raise ValueError("exhaustive mad is limited to 20 vertices")
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    best = Fraction(0)
    for s in range(1, 1 << n):
        e = sum(1 for m in masks if s & m == m)
        best = max(best, Fraction(2 * e, s.bit_count()))
    return best


def exceeds(g: SimpleGraph, t: Fraction) -> bool:
    """True iff mad(g) > t, with a single min-cut."""
    return _denser_than(g, Fraction(t)) is not None

