import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongedge.oddgraph import SubsetVertex, WalkError, odd_graph
from strongedge.walks import (
    WalkRequest,
    base_length,
    closed_special_walk,
    construct_avoiding_walk,
    construct_prescribed_walk,
    dp_reachable,
    dp_special_walk,
    template,
)


def V(n, text):
    return SubsetVertex.parse(n, text)


def req(n, a, b, l1, l2, length, mode="prescribed"):
    return WalkRequest(V(n, a), V(n, b), l1, l2, length, mode)


def enumerate_exists(r, rng):
    """Depth-first enumeration of every special walk, branches in random order."""
    def go(v, came, steps):
        if steps == r.length:
            ok_last = (came == r.last_label) if r.mode == "prescribed" else (came != r.last_label)
            return v == r.end and ok_last
        labels = [lab for lab in v.complement() if lab != came]
        rng.shuffle(labels)
        for lab in labels:
            if go(SubsetVertex.of(v.n, v.ground - set(v.members) - {lab}), lab, steps + 1):
                return True
        return False

    firsts = [r.first_label] if r.mode == "prescribed" else [x for x in r.start.complement() if x != r.first_label]
    return any(go(SubsetVertex.of(r.n, r.start.ground - set(r.start.members) - {f}), f, 1) for f in firsts)


def test_o4_case2_k0_labels():
    walk = construct_prescribed_walk(req(4, "1,2,3", "4,5,6", 4, 7, 8))
    assert walk.labels == (4, 1, 5, 2, 7, 3, 6, 7)


def test_o3_case1_labels():
    walk = construct_prescribed_walk(req(3, "1,2", "3,4", 3, 1, 9))
    assert walk.labels == (3, 1, 4, 2, 5, 3, 2, 4, 1)


def test_o3_length_ten():
    r = req(3, "1,2", "3,4", 3, 1, 10)
    assert r.satisfied_by(construct_prescribed_walk(r))
    assert dp_special_walk(r) is not None


@pytest.mark.parametrize("n,length", [(3, 8), (4, 7), (5, 9)])
def test_prescribed_below_threshold(n, length):
    a = SubsetVertex.of(n, range(1, n))
    lab = 2 * n - 1
    with pytest.raises(WalkError):
        construct_prescribed_walk(WalkRequest(a, a, lab, lab, length))


def test_request_validation():
    with pytest.raises(WalkError):
        req(3, "1,2", "3,4", 1, 5, 9)
    with pytest.raises(WalkError):
        req(3, "1,2", "3,4", 5, 3, 9)
    with pytest.raises(WalkError):
        req(3, "1,2", "3,4", 5, 5, 0)


def test_base_lengths():
    assert [base_length(n) for n in (3, 4, 5, 6)] == [9, 8, 10, 12]


def test_templates_exist_for_every_class():
    for n in (4, 5, 6):
        for k in range(n - 1):
            assert template(n, k, "zy") is not None


def test_avoiding_o4_example():
    r = req(4, "1,2,3", "1,2,3", 4, 4, 6, "avoiding")
    walk = construct_avoiding_walk(r)
    assert walk.labels[0] != 4 and walk.labels[-1] != 4 and walk.length == 6


def test_avoiding_o3_example():
    r = req(3, "1,2", "3,4", 5, 5, 7, "avoiding")
    assert r.satisfied_by(construct_avoiding_walk(r))
    assert dp_special_walk(r) is not None


def test_avoiding_below_threshold():
    with pytest.raises(WalkError):
        construct_avoiding_walk(req(4, "1,2,3", "1,2,3", 4, 4, 5, "avoiding"))


@pytest.mark.parametrize("args", [
    ("1,2", "1,2", 5, 5, 6),
    ("1,2", "1,2", 5, 3, 7),
    ("1,2", "3,4", 5, 5, 8),
])
def test_dp_negative_instances(args):
    assert dp_special_walk(req(3, *args)) is None


def test_dp_single_edge():
    walk = dp_special_walk(req(3, "1,2", "3,4", 5, 5, 1))
    assert walk.length == 1 and walk.labels == (5,)


def test_dp_matches_enumeration_o3():
    rng = random.Random(12)
    verts = odd_graph(3).vertices
    checked = 0
    for length in range(1, 13):
        for _ in range(40):
            a, b = rng.choice(verts), rng.choice(verts)
            l1, l2 = rng.choice(sorted(a.complement())), rng.choice(sorted(b.complement()))
            mode = rng.choice(["prescribed", "avoiding"])
            r = WalkRequest(a, b, l1, l2, length, mode)
            found = dp_special_walk(r)
            assert (found is not None) == enumerate_exists(r, rng)
            if found is not None:
                assert r.satisfied_by(found)
            checked += 1
    assert checked == 480


def test_dp_reachable_agrees_with_dp():
    rng = random.Random(4)
    og = odd_graph(4)
    for _ in range(60):
        a = rng.choice(og.vertices)
        l1 = rng.choice(sorted(a.complement()))
        length = rng.randint(1, 9)
        reach = dp_reachable(a, l1, length)
        for _ in range(5):
            b = rng.choice(og.vertices)
            l2 = rng.choice(sorted(b.complement()))
            assert ((b, l2) in reach) == (dp_special_walk(WalkRequest(a, b, l1, l2, length)) is not None)


def test_builder_agrees_with_dp_o3_all_base():
    og = odd_graph(3)
    for a in og.vertices:
        for l1 in a.complement():
            reach = dp_reachable(a, l1, 9)
            for b in og.vertices:
                for l2 in b.complement():
                    r = WalkRequest(a, b, l1, l2, 9)
                    assert r.satisfied_by(construct_prescribed_walk(r))
                    assert (b, l2) in reach


def test_closed_walk_examples():
    w = V(3, "1,2")
    five = closed_special_walk(w, 5)
    assert five.closed and five.length == 5 and len(set(five.vertices)) == 5
    six = closed_special_walk(w, 6)
    assert six.closed and six.start == w and six.labels[0] != six.labels[-1]
    with pytest.raises(WalkError):
        closed_special_walk(w, 4)
    with pytest.raises(WalkError):
        closed_special_walk(V(4, "1,2,3"), 5)


def test_no_closed_seven_walk_in_o3():
    # the Petersen graph has no 7-cycle, and at girth 5 a cyclically
    # non-backtracking closed 7-walk would have to be one
    with pytest.raises(RuntimeError):
        closed_special_walk(V(3, "1,2"), 7)


@pytest.mark.parametrize("n,length", [(3, 9), (3, 8), (4, 6), (4, 7), (4, 10), (5, 9)])
def test_closed_walk_range(n, length):
    w = SubsetVertex.of(n, range(1, n))
    walk = closed_special_walk(w, length)
    assert walk.closed and walk.length == length and walk.start == w


@st.composite
def requests(draw, ns=(4, 5, 6), extra=6, mode="prescribed"):
    n = draw(st.sampled_from(ns))
    ground = list(range(1, 2 * n))
    a = SubsetVertex.of(n, draw(st.permutations(ground))[: n - 1])
    b = SubsetVertex.of(n, draw(st.permutations(ground))[: n - 1])
    l1 = draw(st.sampled_from(sorted(a.complement())))
    l2 = draw(st.sampled_from(sorted(b.complement())))
    lo = base_length(n) if mode == "prescribed" else base_length(n) - 2
    length = draw(st.integers(lo, lo + extra))
    return WalkRequest(a, b, l1, l2, length, mode)


@settings(max_examples=300, deadline=None)
@given(requests())
def test_prescribed_property(r):
    walk = construct_prescribed_walk(r)
    assert r.satisfied_by(walk)
    assert all(x != y for x, y in zip(walk.labels, walk.labels[1:]))


@settings(max_examples=200, deadline=None)
@given(requests(ns=(3, 4, 5), mode="avoiding"))
def test_avoiding_property(r):
    walk = construct_avoiding_walk(r)
    assert r.satisfied_by(walk)
    assert walk.labels[0] != r.first_label and walk.labels[-1] != r.last_label
