"""The odd graph O_n with its edge labelling and special walks.

A vertex of O_n is an (n-1)-subset of {1, ..., 2n-1}; two vertices are
adjacent iff their subsets are disjoint, and the edge between them is
labelled by the one element missing from both.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

from .graph import SimpleGraph

DEFAULT_SIZE_CAP = 7


class WalkError(ValueError):
    """Raised when a walk or walk request is invalid."""


@dataclass(frozen=True, order=True)
class SubsetVertex:
    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("odd graph parameter must be >= 2")
        if len(self.members) != self.n - 1:
            raise ValueError(f"a vertex of O_{self.n} has {self.n - 1} elements, got {self.members}")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be strictly increasing")
        if self.members and (self.members[0] < 1 or self.members[-1] > 2 * self.n - 1):
            raise ValueError(f"members must lie in 1..{2 * self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> SubsetVertex:
        return cls(n, tuple(sorted(members)))

    @classmethod
    def parse(cls, n: int, text: str) -> SubsetVertex:
        """Parse ``"1,2,3"``."""
        return cls.of(n, (int(t) for t in text.split(",") if t.strip()))

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(1, 2 * self.n))

    @cached_property
    def mask(self) -> int:
        return sum(1 << e for e in self.members)

    def complement(self) -> frozenset[int]:
        """The n labels of the edges at this vertex."""
        return self.ground - set(self.members)

    def __contains__(self, element: int) -> bool:
        return element in self.members

    def __str__(self) -> str:
        return ",".join(map(str, self.members))


def _same_n(u: SubsetVertex, v: SubsetVertex) -> None:
    if u.n != v.n:
        raise ValueError(f"vertices from different odd graphs (O_{u.n}, O_{v.n})")


def adjacent(u: SubsetVertex, v: SubsetVertex) -> bool:
    _same_n(u, v)
    return not set(u.members) & set(v.members)


def edge_label(u: SubsetVertex, v: SubsetVertex) -> int:
    """The unique element of the ground set outside both subsets."""
    if not adjacent(u, v):
        raise WalkError(f"{{{u}}} and {{{v}}} are not adjacent")
    (label,) = u.ground - set(u.members) - set(v.members)
    return label


def neighbor_via_label(w: SubsetVertex, label: int) -> SubsetVertex:
    """The neighbour of ``w`` across the edge labelled ``label``."""
    if label in w.members:
        raise WalkError(f"label {label} belongs to {{{w}}}")
    if not 1 <= label <= 2 * w.n - 1:
        raise WalkError(f"label {label} outside 1..{2 * w.n - 1}")
    return SubsetVertex.of(w.n, w.ground - set(w.members) - {label})


class OddGraph:
    """Materialised O_n: vertices in lexicographic order plus a label table."""

    def __init__(self, n: int, size_cap: int = DEFAULT_SIZE_CAP):
        if n < 3:
            raise ValueError("odd graphs are supported for n >= 3")
        if n > size_cap:
            raise ValueError(
                f"O_{n} has {comb(2 * n - 1, n - 1)} vertices; above the size cap n <= {size_cap}"
            )
        self.n = n
        self.vertices = [SubsetVertex(n, c) for c in combinations(range(1, 2 * n), n - 1)]
        self.index = {v: i for i, v in enumerate(self.vertices)}
        by_mask = {v.mask: i for i, v in enumerate(self.vertices)}
        full = sum(1 << e for e in range(1, 2 * n))
        # step[i][label] = index of the neighbour of vertex i across `label`, or -1
        self.step = []
        for v in self.vertices:
            row = [-1] * (2 * n)
            for lab in range(1, 2 * n):
                if not v.mask >> lab & 1:
                    row[lab] = by_mask[full & ~v.mask & ~(1 << lab)]
            self.step.append(row)
        edges = [(i, j) for i, row in enumerate(self.step) for j in row if j > i]
        self.graph = SimpleGraph(len(self.vertices), edges)

    @property
    def labels(self) -> range:
        return range(1, 2 * self.n)

    def edge_labelling(self) -> dict[tuple[int, int], int]:
        """Label of every edge of ``self.graph``, keyed by vertex-index pair."""
        out = {}
        for i, row in enumerate(self.step):
            for lab, j in enumerate(row):
                if j > i:
                    out[(i, j)] = lab
        return out

    def vertex_table(self) -> list[str]:
        return [f"{i} {v}" for i, v in enumerate(self.vertices)]


def odd_graph(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> OddGraph:
    return OddGraph(n, size_cap)


# -- special walks ------------------------------------------------------------

@dataclass(frozen=True)
class SpecialWalk:
    """Walk ``w_0 .. w_L`` in O_n in which consecutive edges differ.

    ``closed`` additionally requires ``w_0 == w_L`` and distinct wrap edges.
    """

    n: int
    vertices: tuple[SubsetVertex, ...]
    closed: bool = False

    def __post_init__(self):
        self.validate()

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @cached_property
    def labels(self) -> tuple[int, ...]:
        return tuple(edge_label(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    @property
    def start(self) -> SubsetVertex:
        return self.vertices[0]

    @property
    def end(self) -> SubsetVertex:
        return self.vertices[-1]

    def validate(self) -> None:
        if not self.vertices:
            raise WalkError("a walk has at least one vertex")
        if any(v.n != self.n for v in self.vertices):
            raise WalkError("walk mixes vertices of different odd graphs")
        labels = self.labels  # raises on non-adjacent steps
        for i in range(1, len(labels)):
            if labels[i] == labels[i - 1]:
                raise WalkError(f"walk backtracks at step {i}")
        if self.closed:
            if self.vertices[0] != self.vertices[-1]:
                raise WalkError("closed walk does not return to its start")
            if len(labels) < 2 or labels[0] == labels[-1]:
                raise WalkError("closed walk backtracks across the wrap")

    def reversed(self) -> SpecialWalk:
        return SpecialWalk(self.n, self.vertices[::-1], self.closed)


def walk_from_labels(start: SubsetVertex, labels: Sequence[int], closed: bool = False) -> SpecialWalk:
    """Follow ``labels`` from ``start``.

    Every two consecutive steps are checked against the replacement rule:
    ``[w_{i+2}]`` is ``[w_i]`` with the second label replaced by the first.
    """
    verts = [start]
    for i, lab in enumerate(labels):
        if i and lab == labels[i - 1]:
            raise WalkError(f"labels {lab}, {lab} at steps {i - 1}, {i} backtrack")
        verts.append(neighbor_via_label(verts[-1], lab))
    for i in range(len(labels) - 1):
        x, y = labels[i], labels[i + 1]
        expect = (set(verts[i].members) - {y}) | {x}
        assert set(verts[i + 2].members) == expect, "replacement rule violated"
    return SpecialWalk(start.n, tuple(verts), closed)


@dataclass(frozen=True)
class PairPartition:
    """Roles of the ground elements relative to two vertices.

    ``x`` shared, ``y`` only in the first, ``z`` only in the second, ``s``
    in neither; each ascending.
    """

    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[int, ...]
    s: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.x)


def classify_pair(w0: SubsetVertex, wend: SubsetVertex) -> PairPartition:
    _same_n(w0, wend)
    a, b = set(w0.members), set(wend.members)
    return PairPartition(
        tuple(sorted(a & b)),
        tuple(sorted(a - b)),
        tuple(sorted(b - a)),
        tuple(sorted(w0.ground - a - b)),
    )


def shortest_even_distance(u: SubsetVertex, v: SubsetVertex) -> int:
    """Length of a shortest even walk between ``u`` and ``v``: twice the
    number of elements of ``u`` missing from ``v``."""
    _same_n(u, v)
    return 2 * len(set(u.members) - set(v.members))


def six_cycle_through(path: Sequence[SubsetVertex]) -> SpecialWalk:
    """A 6-cycle whose first three edges are those of the 3-path ``path``."""
    if len(path) != 4:
        raise WalkError("expected a path on four vertices")
    v1, v2, v3, v4 = path
    if len(set(path)) != 4:
        raise WalkError("vertices of a 3-path must be distinct")
    for a, b in zip(path, path[1:]):
        if not adjacent(a, b):
            raise WalkError(f"{{{a}}} and {{{b}}} are not adjacent")
    n = v1.n
    ground = v1.ground
    shared = set(v1.members) & set(v3.members)
    (x1,) = set(v1.members) - shared
    (x3,) = ground - set(v4.members) - set(v3.members)
    v5 = SubsetVertex.of(n, shared | {x3})
    v6 = SubsetVertex.of(n, ground - shared - {x1, x3})
    return SpecialWalk(n, (v1, v2, v3, v4, v5, v6, v1), closed=True)


# -- text format -------------------------------------------------------------

def format_walk(walk: SpecialWalk) -> str:
    head = f"oddwalk n={walk.n} len={walk.length} closed={int(walk.closed)}"
    verts = " ".join(str(v) for v in walk.vertices)
    labels = " ".join(map(str, walk.labels))
    return f"{head}\n{verts}\n{labels}\n"


def parse_walk(text: str) -> SpecialWalk:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) not in (2, 3) or not lines[0].startswith("oddwalk"):
        raise WalkError("expected 'oddwalk' header, vertex line and label line")
    fields = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    n, length, closed = int(fields["n"]), int(fields["len"]), fields["closed"] == "1"
    verts = tuple(SubsetVertex.parse(n, t) for t in lines[1].split())
    walk = SpecialWalk(n, verts, closed)
    if walk.length != length:
        raise WalkError(f"header says len={length}, walk has {walk.length} edges")
    labels = tuple(int(t) for t in lines[2].split()) if len(lines) == 3 else ()
    if labels != walk.labels:
        raise WalkError("label line disagrees with the vertices")
    return walk
