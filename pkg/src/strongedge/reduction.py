"""Strong (2Δ-1)-edge-colouring of sparse graphs by reducible configurations.

The graph is reduced one configuration at a time down to a base that is
coloured directly; the colouring is then extended back through the
reductions in reverse. Caterpillars are recoloured along a special walk
in the odd graph O_Δ whose labels give the spine colours.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .coloring import StrongColoring, strong_coloring_with, verify_strong_coloring
from .density import mad
from .girth import even_girth, girth, odd_girth
from .graph import (
    CaterpillarSpine,
    Edge,
    SimpleGraph,
    caterpillar_cycle,
    find_thread,
    lift_caterpillar,
    peel_pendants,
)
from .oddgraph import SpecialWalk, SubsetVertex
from .walks import WalkRequest, closed_special_walk, construct_prescribed_walk

log = logging.getLogger(__name__)

Variant = Literal["high-girth", "subcubic-girth41", "mad-based", "subcubic-mad"]
EXACT_BASE_EDGES = 24


class ExtensionError(RuntimeError):
    """An extension step could not produce a valid colouring."""


class PreconditionError(ValueError):
    """A theorem precondition failed in strict mode."""

    def __init__(self, message: str, checks: dict):
        super().__init__(message)
        self.checks = checks


class ReductionStuck(RuntimeError):
    """No configuration applies; carries the irreducible remainder."""

    def __init__(self, message: str, graph: SimpleGraph, trace: ReductionTrace):
        super().__init__(message)
        self.graph = graph
        self.trace = trace


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _conflicting(g: SimpleGraph, e: Edge) -> set[Edge]:
    near = set()
    for x in e:
        for y in g.adjacency[x]:
            near.add(_e(x, y))
            for z in g.adjacency[y]:
                near.add(_e(y, z))
    near.discard(e)
    return near


def _local_violations(g: SimpleGraph, colors: dict[Edge, int], new: list[Edge]) -> list[tuple[Edge, Edge]]:
    bad = []
    for e in new:
        for f in _conflicting(g, e):
            if f in colors and colors[f] == colors[e]:
                bad.append((e, f))
    return bad


def _colors_of(c) -> dict[Edge, int]:
    return dict(c.colors if isinstance(c, StrongColoring) else c)


# -- single extensions ---------------------------------------------------------

def extend_pendant(g: SimpleGraph, c, x: int, z: int, palette: int) -> StrongColoring:
    """Colour the pendant edge ``xz`` on top of a colouring ``c`` of ``g - z``.

    ``x`` may have at most one neighbour of degree >= 2 besides ``z``, so at
    most 2Δ-2 edges conflict with ``xz``; the least free colour is used.
    """
    if g.degree(z) != 1 or g.adjacency[z][0] != x:
        raise ExtensionError(f"vertex {z} is not a pendant of {x}")
    heavy = [w for w in g.adjacency[x] if w != z and g.degree(w) >= 2]
    if len(heavy) > 1:
        raise ExtensionError(f"pendant vertex {x} has {len(heavy)} non-pendant neighbours")
    colors = _colors_of(c)
    e = _e(x, z)
    used = {colors[f] for f in _conflicting(g, e) if f in colors}
    free = [k for k in range(1, palette + 1) if k not in used]
    if not free:
        raise ExtensionError(f"no free colour for {e} among {palette}")
    colors[e] = free[0]
    return StrongColoring(g, colors, palette)


def min_caterpillar_length(kappa: int) -> int:
    """Shortest reducible caterpillar spine (internal vertices) for O_kappa."""
    return 8 if kappa == 3 else 2 * kappa - 1


def caterpillar_removed(spine: CaterpillarSpine) -> list[int]:
    """Vertices deleted by the caterpillar reduction: the spine interior
    ``u2..u_{l-1}`` with its pendants and the pendants of ``u1`` and ``u_l``."""
    u = spine.spine
    gone = set(u[2:spine.length])
    for v in u[1:spine.length + 1]:
        gone.update(spine.pendants[v])
    gone -= {u[0], u[-1]}
    return sorted(gone)


def caterpillar_reduced_graph(g: SimpleGraph, spine: CaterpillarSpine) -> SimpleGraph:
    """``g`` minus :func:`caterpillar_removed`; vertex ids are kept."""
    return g.without(caterpillar_removed(spine))


def _complete(colors: set[int], size: int, palette: int) -> set[int]:
    out = set(colors)
    for k in range(1, palette + 1):
        if len(out) >= size:
            break
        out.add(k)
    return out


def extend_over_caterpillar(g: SimpleGraph, spine: CaterpillarSpine, c, kappa: int) -> StrongColoring:
    """Extend a strong (2κ-1)-colouring ``c`` of the reduced graph to ``g``.

    The colours at ``u0`` and ``u_{l+1}`` are completed to κ-sets A, B; a
    special walk in O_κ of length l+1 runs from the complement of A to the
    complement of B with the colours of the two kept spine edges as its end
    labels. Spine edge ``u_i u_{i+1}`` takes the walk's i-th label and the
    pendants at ``u_i`` the remaining labels at ``w_i``.
    """
    palette = 2 * kappa - 1
    length = spine.length
    if length < min_caterpillar_length(kappa):
        raise ExtensionError(
            f"a {length}-caterpillar is not reducible for {palette} colours "
            f"(needs >= {min_caterpillar_length(kappa)})"
        )
    if g.max_degree > kappa:
        raise ExtensionError(f"maximum degree {g.max_degree} exceeds {kappa}")
    r = caterpillar_reduced_graph(g, spine)
    colors = _colors_of(c)
    missing = [e for e in r.edges if e not in colors]
    if missing:
        raise ExtensionError(f"colouring of the reduced graph misses {missing[0]}")
    if any(not 1 <= colors[e] <= palette for e in r.edges):
        raise ExtensionError(f"colouring uses colours outside 1..{palette}")
    u = spine.spine
    at0 = {colors[f] for f in r.incident_edges(u[0])}
    at1 = {colors[f] for f in r.incident_edges(u[-1])}
    full = set(range(1, palette + 1))
    w0 = SubsetVertex.of(kappa, full - _complete(at0, kappa, palette))
    w1 = SubsetVertex.of(kappa, full - _complete(at1, kappa, palette))
    lam1 = colors[_e(u[0], u[1])]
    lam2 = colors[_e(u[length], u[length + 1])]
    walk = construct_prescribed_walk(WalkRequest(w0, w1, lam1, lam2, length + 1))
    labels = walk.labels
    new: list[Edge] = []
    for i in range(1, length):
        e = _e(u[i], u[i + 1])
        colors[e] = labels[i]
        new.append(e)
    for i in range(1, length + 1):
        spare = sorted(walk.vertices[i].complement() - {labels[i - 1], labels[i]})
        for p, col in zip(spine.pendants[u[i]], spare):
            e = _e(u[i], p)
            colors[e] = col
            new.append(e)
    bad = _local_violations(g, colors, new)
    if bad:
        raise ExtensionError(f"caterpillar extension conflicts at {bad[0]} (short cycle near the spine?)")
    return StrongColoring(g, colors, palette)


def _colour_along_closed_walk(g: SimpleGraph, cycle: list[int], walk: SpecialWalk) -> dict[Edge, int]:
    labels = walk.labels
    kappa = len(cycle)
    out = {}
    for i in range(kappa):
        out[_e(cycle[i], cycle[(i + 1) % kappa])] = labels[i]
    for i, v in enumerate(cycle):
        spare = sorted(walk.vertices[i].complement() - {labels[i - 1], labels[i]})
        leaves = [w for w in g.adjacency[v] if w not in (cycle[i - 1], cycle[(i + 1) % kappa])]
        if len(leaves) > len(spare):
            raise ExtensionError(f"cycle vertex {v} has more than {len(spare)} pendants")
        for p, col in zip(leaves, spare):
            out[_e(v, p)] = col
    return out


def closed_walk_range_ok(kappa: int, delta: int) -> bool:
    """Cycle lengths for which a closed κ-special walk exists in O_Δ."""
    if kappa % 2 == 0:
        return kappa >= 6 and delta >= 3
    return kappa >= 2 * delta - 1 and delta >= 4


def color_caterpillar_cycle(kappa: int, delta: int) -> StrongColoring:
    """Strong (2Δ-1)-colouring of C_{κ,Δ} read off a closed special walk."""
    if kappa % 2 == 0:
        if kappa < 6 or delta < 3:
            raise ValueError("even kappa needs kappa >= 6 and delta >= 3")
    elif kappa < 2 * delta - 1 or delta < 4:
        raise ValueError("odd kappa needs kappa >= 2*delta - 1 and delta >= 4")
    g = caterpillar_cycle(kappa, delta)
    start = SubsetVertex.of(delta, range(1, delta))
    walk = closed_special_walk(start, kappa)
    colors = _colour_along_closed_walk(g, list(range(kappa)), walk)
    return StrongColoring(g, colors, 2 * delta - 1)


def cycle_coloring(m: int) -> list[int]:
    """Colours of the edges of C_m in order: 3 colours when 3 | m, 5 for
    C_5, otherwise 4 (blocks 1,2,3 followed by one or two blocks 1,2,3,4)."""
    if m < 3:
        raise ValueError("cycle needs m >= 3")
    if m % 3 == 0:
        return [1, 2, 3] * (m // 3)
    if m == 5:
        return [1, 2, 3, 4, 5]
    fours = m % 3 if m % 3 == 1 else 2
    return [1, 2, 3] * ((m - 4 * fours) // 3) + [1, 2, 3, 4] * fours


# -- trace -------------------------------------------------------------------

@dataclass
class ReductionStep:
    """One configuration. ``data`` holds the witness, ``assigned`` the colours
    the step gives on the way back up."""

    kind: str
    data: dict
    assigned: dict[Edge, int] = field(default_factory=dict)

    def removed(self) -> list[int]:
        """Vertices the reduction deletes."""
        if self.kind == "pendant-extension":
            return [self.data["z"]]
        return list(self.data.get("removed", ()))

    def to_line(self) -> str:
        parts = [self.kind]
        for key, val in self.data.items():
            if isinstance(val, (list, tuple)):
                val = ",".join(map(str, val))
            parts.append(f"{key}={val}")
        cols = ",".join(f"{u}-{v}:{c}" for (u, v), c in sorted(self.assigned.items()))
        parts.append(f"colors={cols}")
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> ReductionStep:
        kind, *fields = line.split()
        data: dict = {}
        assigned: dict[Edge, int] = {}
        for tok in fields:
            key, _, val = tok.partition("=")
            if key == "colors":
                for item in filter(None, val.split(",")):
                    uv, _, col = item.partition(":")
                    a, _, b = uv.partition("-")
                    assigned[(int(a), int(b))] = int(col)
            elif key in ("spine", "removed", "cycle"):
                data[key] = [int(t) for t in val.split(",") if t]
            elif key == "method":
                data[key] = val
            else:
                data[key] = int(val)
        return cls(kind, data, assigned)


@dataclass
class ReductionTrace:
    """Steps in extension order: the base step first."""

    steps: list[ReductionStep] = field(default_factory=list)
    palette: int = 0

    def format(self) -> str:
        lines = [f"trace K={self.palette} steps={len(self.steps)}"]
        lines += [s.to_line() for s in self.steps]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> ReductionTrace:
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        head = dict(tok.split("=") for tok in lines[0].split()[1:])
        steps = [ReductionStep.from_line(ln) for ln in lines[1:]]
        if len(steps) != int(head["steps"]):
            raise ValueError("trace header step count mismatch")
        return cls(steps, int(head["K"]))


def _apply(g: SimpleGraph, step: ReductionStep, colors: dict[Edge, int], delta: int) -> dict[Edge, int]:
    """Colour the edges ``step`` reduced away; ``colors`` covers the rest."""
    palette = 2 * delta - 1
    d = step.data
    if step.kind in ("star-base", "exact-base"):
        return dict(step.assigned)
    if step.kind == "pendant-extension":
        return extend_pendant(g, colors, d["x"], d["z"], palette).colors
    if step.kind == "caterpillar":
        spine = lift_caterpillar(g, d["spine"])
        return extend_over_caterpillar(g, spine, colors, delta).colors
    if step.kind == "cycle-caterpillar":
        cycle = d["cycle"]
        out = dict(colors)
        if d["method"] == "formula":
            for i, col in enumerate(cycle_coloring(len(cycle))):
                out[_e(cycle[i], cycle[(i + 1) % len(cycle)])] = col
        elif d["method"] == "walk":
            start = SubsetVertex.of(delta, range(1, delta))
            out.update(_colour_along_closed_walk(g, cycle, closed_special_walk(start, len(cycle))))
        else:
            out.update(step.assigned)
        return out
    raise ValueError(f"unknown step kind {step.kind!r}")


def replay_trace(g: SimpleGraph, trace: ReductionTrace, delta: int) -> StrongColoring:
    """Recompute the colouring from the trace witnesses alone.

    The graph at each stage is rebuilt by deleting the recorded vertices;
    base colours are taken from the base step, every later colour is
    recomputed by the extension operations.
    """
    stages = [g]
    for step in reversed(trace.steps[1:]):
        stages.append(stages[-1].without(step.removed()))
    stages.reverse()  # stages[i] is the graph after undoing steps 1..i
    colors: dict[Edge, int] = {}
    for i, step in enumerate(trace.steps):
        colors = _apply(stages[i], step, colors, delta)
    return StrongColoring(g, colors, trace.palette)


# -- main algorithm --------------------------------------------------------------

@dataclass(frozen=True)
class AlgorithmMode:
    variant: Variant
    delta: int

    def __post_init__(self):
        if self.variant in ("high-girth", "mad-based"):
            if self.delta < 4:
                raise ValueError(f"{self.variant} needs delta >= 4")
        elif self.variant in ("subcubic-girth41", "subcubic-mad"):
            if self.delta != 3:
                raise ValueError(f"{self.variant} needs delta == 3")
        else:
            raise ValueError(f"unknown variant {self.variant!r}")

    @property
    def palette(self) -> int:
        return 2 * self.delta - 1

    @property
    def thread_length(self) -> int:
        return min_caterpillar_length(self.delta)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    measured: object
    required: str


def check_preconditions(g: SimpleGraph, mode: AlgorithmMode) -> list[Check]:
    """Measure the hypotheses of the theorem behind ``mode``."""
    d = mode.delta
    out = [Check("max_degree", g.max_degree <= d, g.max_degree, f"<= {d}")]
    if mode.variant in ("high-girth", "subcubic-girth41"):
        need = 10 * d - 4 if mode.variant == "high-girth" else 41
        gi = girth(g)
        out.append(Check("girth", gi >= need, gi, f">= {need}"))
        return out
    if mode.variant == "mad-based":
        eg, og = even_girth(g), odd_girth(g)
        out.append(Check("even_girth", eg >= 6, eg, ">= 6"))
        out.append(Check("odd_girth", og >= 2 * d - 1, og, f">= {2 * d - 1}"))
        bound = 2 + Fraction(1, 3 * d - 2)
    else:
        gi = girth(g)
        out.append(Check("girth", gi >= 8, gi, ">= 8"))
        bound = 2 + Fraction(2, 23)
    m = mad(g).value if g.vertex_count else Fraction(0)
    out.append(Check("mad", m < bound, m, f"< {bound}"))
    return out


@dataclass
class SparseResult:
    coloring: StrongColoring
    trace: ReductionTrace
    checks: list[Check]


def _find_pendant(g: SimpleGraph) -> tuple[int, int] | None:
    for z in range(g.vertex_count):
        if g.degree(z) != 1:
            continue
        x = g.adjacency[z][0]
        heavy = sum(1 for w in g.adjacency[x] if w != z and g.degree(w) >= 2)
        if heavy <= 1:
            return x, z
    return None


def _cycle_component(g: SimpleGraph) -> tuple[list[int], list[int]] | None:
    """A component that is a cycle with pendant edges, as (vertices, cycle order)."""
    for comp in g.components():
        if len(comp) < 3:
            continue
        core = [v for v in comp if g.degree(v) >= 2]
        core_set = set(core)
        if len(core) < 3:
            continue
        if any(sum(1 for w in g.adjacency[v] if w in core_set) != 2 for v in core):
            continue
        cycle = [core[0]]
        prev = None
        while True:
            here = cycle[-1]
            nxt = min(w for w in g.adjacency[here] if w in core_set and w != prev)
            if nxt == cycle[0]:
                break
            prev = here
            cycle.append(nxt)
        if len(cycle) == len(core):
            return comp, cycle
    return None


def strong_color_sparse(g: SimpleGraph, mode: AlgorithmMode, strict: bool = False) -> SparseResult:
    """Strong edge colouring of ``g`` with at most 2Δ-1 colours.

    Precondition failures are reported in the result (or raised with
    ``strict``); the reduction is attempted regardless. Raises
    :class:`ReductionStuck` when no configuration applies.
    """
    checks = check_preconditions(g, mode)
    failed = [c for c in checks if not c.ok]
    if failed and (strict or failed[0].name == "max_degree"):
        c = failed[0]
        raise PreconditionError(f"{c.name} = {c.measured}, required {c.required}", checks)
    for c in failed:
        log.warning("precondition %s = %s fails (%s); trying anyway", c.name, c.measured, c.required)

    delta, palette = mode.delta, mode.palette
    stages = [g]
    steps: list[ReductionStep] = []
    cur = g
    while True:
        if cur.edge_count == 0 or cur.is_star():
            base = ReductionStep("star-base" if cur.edge_count else "exact-base", {"edges": cur.edge_count},
                                 {e: i + 1 for i, e in enumerate(cur.edges)})
            break
        step = _cycle_step(cur, delta, allow_exact=False)
        if step is not None:
            steps.append(step)
            cur = cur.without(step.removed())
            stages.append(cur)
            continue
        if cur.edge_count <= EXACT_BASE_EDGES:
            try:
                found = strong_coloring_with(cur, palette)
            except TimeoutError:
                found = None
            if found is None:
                raise ReductionStuck(f"base graph with {cur.edge_count} edges not {palette}-colourable",
                                     cur, ReductionTrace(list(reversed(steps)), palette))
            base = ReductionStep("exact-base", {"edges": cur.edge_count}, dict(found.colors))
            break
        pend = _find_pendant(cur)
        if pend is not None:
            step = ReductionStep("pendant-extension", {"x": pend[0], "z": pend[1]})
        else:
            step = _cycle_step(cur, delta, allow_exact=True)
            if step is None:
                step = _caterpillar_step(cur, mode)
            if step is None:
                raise ReductionStuck("no pendant, cycle component or long thread",
                                     cur, ReductionTrace(list(reversed(steps)), palette))
        steps.append(step)
        cur = cur.without(step.removed())
        stages.append(cur)

    colors = dict(base.assigned)
    ordered = [base]
    for step, stage in zip(reversed(steps), reversed(stages[:-1])):
        before = set(colors)
        colors = _apply(stage, step, colors, delta)
        step.assigned = {e: c for e, c in colors.items() if e not in before}
        ordered.append(step)
    coloring = StrongColoring(g, colors, palette)
    bad = verify_strong_coloring(g, coloring)
    if bad or max(colors.values(), default=0) > palette:
        raise ExtensionError(f"extension produced an invalid colouring, e.g. {bad[:1]}")
    return SparseResult(coloring, ReductionTrace(ordered, palette), checks)


def _cycle_step(g: SimpleGraph, delta: int, allow_exact: bool) -> ReductionStep | None:
    found = _cycle_component(g)
    if found is None:
        return None
    comp, cycle = found
    kappa = len(cycle)
    pendants = len(comp) > kappa
    data = {"kappa": kappa, "delta": delta, "cycle": cycle, "removed": comp}
    if not pendants:
        data["method"] = "formula"
    elif closed_walk_range_ok(kappa, delta):
        data["method"] = "walk"
    else:
        sub, ids = g.induced(comp)
        if not allow_exact or sub.edge_count > EXACT_BASE_EDGES:
            return None
        try:
            found_col = strong_coloring_with(sub, 2 * delta - 1)
        except TimeoutError:
            found_col = None
        if found_col is None:
            return None
        data["method"] = "exact"
        step = ReductionStep("cycle-caterpillar", data)
        step.assigned = {_e(ids[u], ids[v]): c for (u, v), c in found_col.colors.items()}
        return step
    return ReductionStep("cycle-caterpillar", data)


def _caterpillar_step(g: SimpleGraph, mode: AlgorithmMode) -> ReductionStep | None:
    peeled = peel_pendants(g)
    thread = find_thread(peeled.h, mode.thread_length)
    if thread is None:
        return None
    path = [peeled.original_ids[v] for v in thread.path]
    spine = lift_caterpillar(g, path)
    return ReductionStep("caterpillar", {"length": spine.length, "spine": path,
                                         "removed": caterpillar_removed(spine)})
