"""Special walks in odd graphs with fixed end labels."""
from strongedge import (
    SubsetVertex,
    WalkRequest,
    construct_avoiding_walk,
    construct_prescribed_walk,
    dp_special_walk,
    odd_graph,
    sharpness_audit,
)
from strongedge.oddgraph import format_walk

# O_4: 35 vertices, the 3-subsets of {1..7}, joined when disjoint
og = odd_graph(4)
print(og.graph.vertex_count, og.graph.edge_count)

# each edge is labelled by the one element missing from both ends;
# the four labels at a vertex are exactly its complement
w = SubsetVertex.parse(4, "1,2,3")
print(sorted(w.complement()))

# a walk of length 8 from {1,2,3} to {4,5,6}, leaving along 4 and arriving along 7
req = WalkRequest(w, SubsetVertex.parse(4, "4,5,6"), 4, 7, 8)
walk = construct_prescribed_walk(req)
print(format_walk(walk))

# any longer length works too (the builder peels edges off the end)
for length in (9, 10, 13):
    print(length, construct_prescribed_walk(WalkRequest(w, w, 4, 5, length)).labels)

# the exhaustive search answers the same questions, including the infeasible ones
print(dp_special_walk(req).labels)
short = WalkRequest(SubsetVertex.parse(3, "1,2"), SubsetVertex.parse(3, "1,2"), 5, 3, 7)
print(dp_special_walk(short))  # None: seven steps are not enough in O_3

# avoiding walks: the end labels must differ from the given ones
avoid = WalkRequest(w, w, 4, 4, 6, "avoiding")
print(construct_avoiding_walk(avoid).labels)

# the guaranteed lengths cannot be shortened
for line in sharpness_audit(3):
    print(line)
