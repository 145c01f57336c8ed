"""Tour of the exhaustive explorer on a few small graphs.

Run with ``python demos/explore_small_graphs.py``.
"""

from recolour import (
    Uniform,
    complete_bipartite,
    complete_bipartite_minus_matching,
    components,
    distance,
    graph_stats,
    layered_example,
    metrics,
)


def show_metrics(name, g, k):
    m = metrics(g, Uniform(k), use_colour_symmetry=True)
    print(f"{name:>22}  k={k}  colourings={m.node_count:>6}  diameter={m.diameter}  radius={m.radius}")
    return m


print("Diameter and radius of the k-recolouring graph\n")
show_metrics("K_{2,3}", complete_bipartite(2, 3), 3)
show_metrics("K_{3,3} - M", complete_bipartite_minus_matching(3), 4)

g = layered_example()
s = graph_stats(g)
print(f"\nlayered graph: n={s.n} matching={s.matching_number} degeneracy={s.degeneracy}")
for k in (3, 4):
    m = show_metrics("layered graph", g, k)
a, b = m.witness_pair
res = distance(g, Uniform(4), a, b)
print(f"a diametral pair for k=4: {a} -> {b}, {res.distance} steps")
for step, (v, c) in enumerate(res.sequence.steps, 1):
    print(f"  step {step:>2}: vertex {v} -> colour {c}")

print("\nConnectivity of C_k(K_{m,m} - M)")
for m in (3, 4):
    row = []
    for k in (2, 3, 4, 5):
        row.append(f"k={k}:{components(complete_bipartite_minus_matching(m), Uniform(k)).count:>3}")
    print(f"  m={m}  components  " + "  ".join(row))
