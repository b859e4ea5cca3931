"""Reproducible checks of the sharpness of the walk lengths and of the
strong chromatic index of cycle caterpillars."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .coloring import exact_strong_chromatic_index, verify_strong_coloring
from .density import mad
from .girth import girth_profile
from .graph import caterpillar_cycle
from .oddgraph import SubsetVertex, WalkError
from .reduction import color_caterpillar_cycle
from .walks import (
    WalkRequest,
    _materialised,
    base_length,
    construct_prescribed_walk,
    dp_reachable,
    dp_special_walk,
)


@dataclass(frozen=True)
class AuditLine:
    name: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _none(n: int, start: str, end: str, l1: int, l2: int, length: int) -> bool:
    req = WalkRequest(SubsetVertex.parse(n, start), SubsetVertex.parse(n, end), l1, l2, length)
    return dp_special_walk(req) is None


def all_requests(n: int):
    """Every (start, end, first label, last label) tuple of O_n."""
    verts = _materialised(n).vertices
    for a, b in product(verts, repeat=2):
        for l1 in sorted(a.complement()):
            for l2 in sorted(b.complement()):
                yield a, b, l1, l2


def universality(n: int, length: int) -> tuple[int, int, int]:
    """(requests, builder successes, oracle-feasible) at ``length``.

    The oracle side runs one reachability search per (start, first label).
    """
    reach = {}
    for v in _materialised(n).vertices:
        for l1 in v.complement():
            reach[(v, l1)] = dp_reachable(v, l1, length)
    total = built = feasible = 0
    for a, b, l1, l2 in all_requests(n):
        total += 1
        feasible += (b, l2) in reach[(a, l1)]
        try:
            walk = construct_prescribed_walk(WalkRequest(a, b, l1, l2, length))
        except WalkError:
            continue
        built += walk.length == length and walk.start == a and walk.end == b
    return total, built, feasible


def sharpness_audit(n: int) -> list[AuditLine]:
    """Negative instances below the guaranteed length plus universality at it."""
    if n not in (3, 4):
        raise ValueError("sharpness audit covers n = 3 and n = 4 only")
    lines = []
    if n == 3:
        for length, (s, e, l1, l2) in [
            (6, ("1,2", "1,2", 5, 5)),
            (7, ("1,2", "1,2", 5, 3)),
            (8, ("1,2", "3,4", 5, 5)),
        ]:
            ok = _none(3, s, e, l1, l2, length)
            lines.append(AuditLine(f"O3 length {length} impossible",
                                   ok, f"{{{s}}} -> {{{e}}}, labels {l1}..{l2}: "
                                   + ("no walk" if ok else "walk found")))
    else:
        # first label outside both end sets: every even walk needs 2n edges
        evens = [(L, l2) for L in (2, 4, 6) for l2 in (1, 2, 3, 7)
                 if not _none(4, "1,2,3", "4,5,6", 7, l2, L)]
        lines.append(AuditLine("O4 even length 6 impossible", not evens,
                               "{1,2,3} -> {4,5,6}, first label 7, any last label: "
                               + ("no walk of length <= 6" if not evens else f"found {evens}")))
        odds = [L for L in (1, 3, 5, 7) if not _none(4, "1,2,3", "1,2,3", 7, 7, L)]
        lines.append(AuditLine("O4 odd length 7 impossible", not odds,
                               "{1,2,3} -> {1,2,3}, labels 7..7: "
                               + ("no walk of length <= 7" if not odds else f"found at {odds}")))
    base = base_length(n)
    total, built, feasible = universality(n, base)
    lines.append(AuditLine(f"O{n} length {base} universal", built == feasible == total,
                           f"{built}/{total} built, {feasible}/{total} feasible by search"))
    return lines


def cw_audit(kappa: int, delta: int, budget: int = 2_000_000) -> list[AuditLine]:
    """Colour C_{κ,Δ} along a closed walk and compare with the exact index."""
    palette = 2 * delta - 1
    g = caterpillar_cycle(kappa, delta)
    lines = []
    c = color_caterpillar_cycle(kappa, delta)
    bad = verify_strong_coloring(g, c)
    used = c.num_colors
    lines.append(AuditLine("walk colouring", not bad and used <= palette,
                           f"{used} colours, {len(bad)} conflicts"))
    res = exact_strong_chromatic_index(g, budget)
    tag = "" if res.exact else f" (budget exhausted, bounds {res.lower_bound}..{res.value})"
    lines.append(AuditLine(f"strong chromatic index = {palette}", res.exact and res.value == palette,
                           f"{res.value}{tag}"))
    prof = girth_profile(g)
    m = mad(g)
    lines.append(AuditLine("mad = 2", m.value == 2, f"{m}; girth profile {prof.as_dict()}"))
    return lines
