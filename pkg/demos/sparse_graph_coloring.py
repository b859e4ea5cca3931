"""Strong 7-edge-colouring of a subdivided Petersen graph with pendant trees."""
import random

from strongedge import AlgorithmMode, ReductionTrace, build_graph, replay_trace, strong_color_sparse
from strongedge.coloring import format_coloring, verify_strong_coloring
from strongedge.girth import girth_profile

rng = random.Random(1)

# subdivide every Petersen edge 8 times, then hang leaves wherever degree allows
outer = [(i, (i + 1) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
edges, nxt = [], 10
for u, v in outer + spokes + inner:
    prev = u
    for _ in range(8):
        edges.append((prev, nxt))
        prev, nxt = nxt, nxt + 1
    edges.append((prev, v))
degree = {}
for u, v in edges:
    degree[u] = degree.get(u, 0) + 1
    degree[v] = degree.get(v, 0) + 1
for v in range(nxt):
    if degree[v] < 4 and rng.random() < 0.4:
        edges.append((v, nxt))
        nxt += 1
g = build_graph(edges)
print(g.vertex_count, g.edge_count, g.max_degree, girth_profile(g).as_dict())

mode = AlgorithmMode("high-girth", 4)  # needs girth >= 36 for the guarantee
res = strong_color_sparse(g, mode)
for check in res.checks:
    print(check.name, check.measured, check.required, check.ok)
print("colours:", res.coloring.num_colors, "conflicts:", len(verify_strong_coloring(g, res.coloring)))

# the trace lists the reductions, base first; replaying it rebuilds the colouring
text = res.trace.format()
print("\n".join(text.splitlines()[:4]))
kinds = {}
for step in res.trace.steps:
    kinds[step.kind] = kinds.get(step.kind, 0) + 1
print(kinds)
again = replay_trace(g, ReductionTrace.parse(text), 4)
print(again.colors == res.coloring.colors)

print(format_coloring(res.coloring).splitlines()[:3])
