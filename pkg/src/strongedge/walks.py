"""Special walks with prescribed or avoided end labels.

The constructive builder instantiates fixed label templates at the base
length (2n for n >= 4, 9 for n = 3) and grows longer walks by peeling the
last edge. ``dp_special_walk`` is an independent exact search used to
check it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .oddgraph import (
    OddGraph,
    SpecialWalk,
    SubsetVertex,
    WalkError,
    classify_pair,
    neighbor_via_label,
    walk_from_labels,
)

Mode = Literal["prescribed", "avoiding"]
Token = tuple[str, int]


@dataclass(frozen=True)
class WalkRequest:
    start: SubsetVertex
    end: SubsetVertex
    first_label: int
    last_label: int
    length: int
    mode: Mode = "prescribed"

    def __post_init__(self):
        if self.start.n != self.end.n:
            raise WalkError("start and end lie in different odd graphs")
        if self.first_label in self.start.members or not 1 <= self.first_label < 2 * self.n:
            raise WalkError(f"first label {self.first_label} is not on an edge at {{{self.start}}}")
        if self.last_label in self.end.members or not 1 <= self.last_label < 2 * self.n:
            raise WalkError(f"last label {self.last_label} is not on an edge at {{{self.end}}}")
        if self.length < 1:
            raise WalkError("walk length must be positive")
        if self.mode not in ("prescribed", "avoiding"):
            raise WalkError(f"unknown mode {self.mode!r}")

    @property
    def n(self) -> int:
        return self.start.n

    def satisfied_by(self, walk: SpecialWalk) -> bool:
        if walk.length != self.length or walk.start != self.start or walk.end != self.end:
            return False
        first, last = walk.labels[0], walk.labels[-1]
        if self.mode == "prescribed":
            return first == self.first_label and last == self.last_label
        return first != self.first_label and last != self.last_label


def base_length(n: int) -> int:
    """Shortest length at which every prescribed request is solvable."""
    if n < 3:
        raise ValueError("odd graph parameter must be >= 3")
    return 9 if n == 3 else 2 * n


def min_avoiding_length(n: int) -> int:
    return base_length(n) - 2


# -- label templates -----------------------------------------------------------

def _pairs(*pairs: tuple[Token, Token]) -> list[Token]:
    return [t for p in pairs for t in p]


def _run(c1: str, c2: str, lo: int, hi: int, shift: int = 0) -> list[Token]:
    """Pairs <c1_i, c2_{i-shift}> for i = lo..hi."""
    out: list[Token] = []
    for i in range(lo, hi + 1):
        out += [(c1, i), (c2, i - shift)]
    return out


def _template_large(n: int, k: int, case: str) -> list[Token] | None:
    """Label template of length 2n in O_n (n >= 4) with ``k`` shared elements."""
    z, y, s, x = "z", "y", "s", "x"
    if case == "zy":
        if k <= n - 4:
            return (_run(z, y, k + 1, n - 3) + [(s, 1), (y, n - 2)] + _run(s, s, 2, k + 1, 1)
                    + [(z, n - 2), (s, k + 1), (z, n - 1), (y, n - 1)])
        if k == n - 3:
            return ([(z, n - 2), (x, 1), (s, 1), (y, n - 2)] + _run(s, s, 2, k, 1)
                    + [(x, 1), (s, k), (z, n - 1), (y, n - 1)])
        if k == n - 2:
            return ([(z, n - 1), (y, n - 1), (s, 1), (x, 1)] + _run(s, s, 2, n - 3, 1)
                    + [(y, n - 1), (s, n - 3), (x, 1), (y, n - 1)])
        return None
    if case == "zs":
        if k == 0:
            return _run(z, y, 1, n - 2) + [(s, 1), (y, n - 1), (z, n - 1), (s, 1)]
        if k <= n - 3:
            return (_run(z, y, k + 1, n - 2) + [(s, 1), (y, n - 1)] + _run(s, s, 2, k + 1, 1)
                    + [(z, n - 1), (s, k + 1)])
        if k == n - 2:
            # the general sequence would open with s_1 here, not z_{k+1}
            return ([(z, n - 1), (x, 1), (s, 1), (y, n - 1), (s, 3), (s, 1)]
                    + _run(s, s, 4, n - 1, 1) + [(x, 1), (s, n - 1)])
        return None
    if case == "ss=":
        if k == 0:
            return [(s, 1), (y, 1)] + _run(z, y, 2, n - 1) + [(z, 1), (s, 1)]
        if k == 1:
            return [(s, 1), (x, 1)] + _run(z, y, 2, n - 1) + [(x, 1), (s, 1)]
        if k == 2:
            return ([(s, 1), (x, 1), (s, 3), (y, 3), (z, 3), (s, 3)] + _run(z, y, 4, n - 1)
                    + [(x, 1), (s, 1)])
        if k <= n - 2:
            return ([(s, 1), (x, 1), (s, 3), (y, k + 1)] + _run(s, s, 4, k + 1, 1)
                    + [(z, k + 1), (s, k + 1)] + _run(z, y, k + 2, n - 1) + [(x, 1), (s, 1)])
        return [(s, 1), (x, 2), (s, 2)] + _run(x, x, 3, k, 1) + [(s, 2), (x, k), (s, 1)]
    if case == "ss":
        if k == 1:
            return [(s, 1), (y, 2), (s, 2), (s, 1)] + _run(z, y, 3, n - 1) + [(z, 2), (s, 2)]
        if k == 2:
            return ([(s, 1), (y, 3), (s, 2), (s, 1), (s, 3), (s, 2)] + _run(z, y, 4, n - 1)
                    + [(z, 3), (s, 3)])
        if k <= n - 2:
            return ([(s, 1), (y, k + 1)] + _run(s, s, 2, k + 1, 1) + _run(z, y, k + 2, n - 1)
                    + [(z, k + 1), (s, k + 1)])
        if k == n - 1:
            return [(s, 2), (x, 2)] + _run(s, s, 3, k + 1, 1) + [(x, 2), (s, k + 1)]
        return None
    raise ValueError(case)


_TEMPLATES_O3: dict[tuple[int, str], list[Token]] = {
    (0, "zy"): _pairs((("z", 1), ("y", 1)), (("z", 2), ("y", 2)), (("s", 1), ("z", 1)),
                      (("y", 2), ("z", 2))) + [("y", 1)],
    (0, "zs"): _pairs((("z", 1), ("y", 1)), (("z", 2), ("y", 2)), (("y", 1), ("z", 1)),
                      (("y", 2), ("z", 2))) + [("s", 1)],
    (0, "ss="): _pairs((("s", 1), ("y", 1)), (("z", 2), ("y", 2)), (("y", 1), ("s", 1)),
                       (("y", 2), ("z", 2))) + [("s", 1)],
    (1, "zy"): _pairs((("z", 2), ("x", 1)), (("s", 2), ("z", 2)), (("x", 1), ("y", 2)),
                      (("s", 1), ("x", 1))) + [("y", 2)],
    (1, "zs"): _pairs((("z", 2), ("y", 2)), (("s", 2), ("x", 1)), (("y", 2), ("s", 2)),
                      (("s", 1), ("z", 2))) + [("s", 2)],
    (1, "ss"): _pairs((("s", 1), ("x", 1)), (("s", 2), ("s", 1)), (("x", 1), ("s", 2)),
                      (("s", 1), ("x", 1))) + [("s", 2)],
    (1, "ss="): _pairs((("s", 1), ("x", 1)), (("z", 2), ("y", 2)), (("s", 2), ("s", 1)),
                       (("y", 2), ("z", 2))) + [("s", 1)],
    (2, "ss"): _pairs((("s", 1), ("x", 1)), (("s", 3), ("x", 2)), (("x", 1), ("s", 3)),
                      (("s", 2), ("x", 1))) + [("s", 3)],
    (2, "ss="): _pairs((("s", 3), ("x", 1)), (("s", 2), ("x", 2)), (("x", 1), ("s", 3)),
                       (("s", 1), ("x", 1))) + [("s", 3)],
}


def template(n: int, k: int, case: str) -> list[Token] | None:
    """Role-token template for a base-length request, or ``None``.

    ``case`` is ``"zy"``, ``"zs"``, ``"ss"`` (distinct s-labels) or
    ``"ss="`` (equal s-labels), after reversal normalisation.
    """
    if n == 3:
        return _TEMPLATES_O3.get((k, case))
    return _template_large(n, k, case)


def _assign_roles(part, tokens: list[Token], first: int, last: int) -> dict[Token, int]:
    k = part.k
    n = k + len(part.y) + 1
    ranges = {"x": range(1, k + 1), "y": range(k + 1, n), "z": range(k + 1, n), "s": range(1, k + 2)}
    pools = {"x": part.x, "y": part.y, "z": part.z, "s": part.s}
    fixed = {tokens[0]: first}
    if tokens[-1] in fixed and fixed[tokens[-1]] != last:
        raise WalkError("template pins both ends to the same role")
    fixed[tokens[-1]] = last
    roles: dict[Token, int] = {}
    for cls, idx in ranges.items():
        pinned = {t: e for t, e in fixed.items() if t[0] == cls}
        if any(e not in pools[cls] for e in pinned.values()):
            raise WalkError("boundary label does not belong to the template's role class")
        free = iter(e for e in pools[cls] if e not in pinned.values())
        for i in idx:
            roles[(cls, i)] = pinned.get((cls, i)) if (cls, i) in pinned else next(free)
    return roles


def _case_of(part, first: int, last: int) -> str:
    c1 = "z" if first in part.z else "s"
    c2 = "y" if last in part.y else "s"
    if c1 == "s" and c2 == "s":
        return "ss=" if first == last else "ss"
    return c1 + c2


def _base_walk(start: SubsetVertex, end: SubsetVertex, first: int, last: int) -> SpecialWalk:
    part = classify_pair(start, end)
    case = _case_of(part, first, last)
    if case == "sy":
        return _base_walk(end, start, last, first).reversed()
    tokens = template(start.n, part.k, case)
    if tokens is None:
        raise WalkError(f"no template for k={part.k}, case {case}")
    roles = _assign_roles(part, tokens, first, last)
    walk = walk_from_labels(start, [roles[t] for t in tokens])
    if walk.end != end or walk.labels[0] != first or walk.labels[-1] != last:
        raise WalkError(f"template k={part.k} case {case} missed its target")  # pragma: no cover
    return walk


def construct_prescribed_walk(req: WalkRequest) -> SpecialWalk:
    """Walk of exactly ``req.length`` edges with the requested end labels.

    Needs ``length >= base_length(n)``; shorter requests may still be
    feasible and can be tried with :func:`dp_special_walk`.
    """
    if req.mode != "prescribed":
        raise WalkError("construct_prescribed_walk needs mode='prescribed'")
    n, base = req.n, base_length(req.n)
    if req.length < base:
        raise WalkError(f"length {req.length} is below the guaranteed length {base} for O_{n}")
    tail: list[SubsetVertex] = []
    end, last = req.end, req.last_label
    for _ in range(req.length - base):
        u = neighbor_via_label(end, last)
        tail.append(end)
        # any other edge at u keeps the walk non-backtracking; take the smallest
        last = min(lab for lab in u.complement() if lab != last)
        end = u
    walk = _base_walk(req.start, end, req.first_label, last)
    out = SpecialWalk(n, walk.vertices + tuple(reversed(tail)))
    assert req.satisfied_by(out)
    return out


def construct_avoiding_walk(req: WalkRequest) -> SpecialWalk:
    """Walk of exactly ``req.length`` edges whose first label differs from
    ``req.first_label`` and last label from ``req.last_label``.

    Built as the interior of a prescribed walk two edges longer.
    """
    if req.mode != "avoiding":
        raise WalkError("construct_avoiding_walk needs mode='avoiding'")
    lo = min_avoiding_length(req.n)
    if req.length < lo:
        raise WalkError(f"length {req.length} is below the guaranteed avoiding length {lo} for O_{req.n}")
    a = neighbor_via_label(req.start, req.first_label)
    b = neighbor_via_label(req.end, req.last_label)
    outer = construct_prescribed_walk(
        WalkRequest(a, b, req.first_label, req.last_label, req.length + 2)
    )
    out = SpecialWalk(req.n, outer.vertices[1:-1])
    assert req.satisfied_by(out)
    return out


# -- exact search -----------------------------------------------------------

@lru_cache(maxsize=8)
def _materialised(n: int) -> OddGraph:
    return OddGraph(n)


def dp_special_walk(req: WalkRequest) -> SpecialWalk | None:
    """Exact search over states (current vertex, label of the last edge).

    Consecutive labels must differ, which is exactly non-backtracking.
    Returns the lexicographically first walk found by layered search, or
    ``None`` when no walk satisfies the request.
    """
    og = _materialised(req.n)
    s, t = og.index[req.start], og.index[req.end]
    prescribed = req.mode == "prescribed"
    if prescribed:
        layer = {(og.step[s][req.first_label], req.first_label): None}
    else:
        layer = {(og.step[s][lab], lab): None for lab in og.labels
                 if og.step[s][lab] >= 0 and lab != req.first_label}
    layers = [layer]
    for _ in range(req.length - 1):
        nxt: dict[tuple[int, int], tuple[int, int]] = {}
        for state in sorted(layer):
            v, came = state
            for lab in og.labels:
                w = og.step[v][lab]
                if w >= 0 and lab != came and (w, lab) not in nxt:
                    nxt[(w, lab)] = state
        layer = nxt
        layers.append(layer)
    finals = sorted(st for st in layer if st[0] == t and (st[1] == req.last_label) == prescribed)
    if not finals:
        return None
    state = finals[0]
    path = [state]
    for lay in reversed(layers[1:]):
        state = lay[state]
        path.append(state)
    verts = (req.start,) + tuple(og.vertices[v] for v, _ in reversed(path))
    walk = SpecialWalk(req.n, verts)
    assert req.satisfied_by(walk)
    return walk


def closed_special_walk(w: SubsetVertex, length: int) -> SpecialWalk:
    """Closed walk of ``length`` edges through ``w``, non-backtracking also
    across the wrap."""
    n = w.n
    if length % 2 == 0:
        if length < 6:
            raise WalkError("closed even special walks need length >= 6")
    elif length < 2 * n - 1:
        raise WalkError(f"closed odd special walks in O_{n} need length >= {2 * n - 1}")
    labels = sorted(w.complement())
    for a in labels:
        for b in labels:
            if a == b:
                continue
            found = dp_special_walk(WalkRequest(w, w, a, b, length))
            if found is not None:
                return SpecialWalk(n, found.vertices, closed=True)
    raise RuntimeError(f"no closed {length}-special walk through {{{w}}} in O_{n}")


def dp_reachable(start: SubsetVertex, first_label: int, length: int) -> set[tuple[SubsetVertex, int]]:
    """Every (end, last label) reachable by a special walk of ``length``
    edges leaving ``start`` along ``first_label``; one search answers all
    prescribed requests sharing a start and first label."""
    og = _materialised(start.n)
    s = og.index[start]
    if og.step[s][first_label] < 0:
        raise WalkError(f"label {first_label} belongs to {{{start}}}")
    layer = {(og.step[s][first_label], first_label)}
    for _ in range(length - 1):
        layer = {(og.step[v][lab], lab) for v, came in layer for lab in og.labels
                 if lab != came and og.step[v][lab] >= 0}
    return {(og.vertices[v], lab) for v, lab in layer}
