"""Cycles with pendant edges coloured by closed walks in O_delta."""
from strongedge import (
    caterpillar_cycle,
    color_caterpillar_cycle,
    exact_strong_chromatic_index,
    is_strong_coloring,
    mad,
)
from strongedge.girth import girth_profile

g = caterpillar_cycle(7, 4)  # a 7-cycle, every vertex with two extra leaves
print(g.vertex_count, g.edge_count, girth_profile(g).as_dict(), mad(g))

c = color_caterpillar_cycle(7, 4)
print(is_strong_coloring(g, c), c.num_colors)

# the closed-walk colouring is optimal: 2*delta - 1 colours are needed
for kappa, delta in [(6, 3), (6, 4), (8, 4), (9, 5)]:
    res = exact_strong_chromatic_index(caterpillar_cycle(kappa, delta))
    print(kappa, delta, res.value, res.exact)

# outside the supported range an odd cycle is too short for the walk
try:
    color_caterpillar_cycle(5, 4)
except ValueError as exc:
    print("refused:", exc)
