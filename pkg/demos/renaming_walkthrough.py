"""Recolouring between two colourings that share their colour classes.

With one extra colour available every vertex moves at most twice, and the
total stays within floor(3n/2).

Run with ``python demos/renaming_walkthrough.py``.
"""

from recolour import Uniform, distance, optimal_renaming, path, verify_sequence
from recolour.renaming import build_renaming_digraph

g = path(6)
a = (1, 2, 3, 1, 2, 3)
b = (2, 3, 1, 2, 3, 1)  # classes rotate 1 -> 2 -> 3 -> 1
ell = 4

print("renaming digraph pieces:", build_renaming_digraph(a, b).decompose())
seq = optimal_renaming(g, a, b, ell)
rep = verify_sequence(g, Uniform(ell), seq, b)
print(f"sequence of {len(seq)} steps, valid={rep.valid}, moves per vertex {rep.per_vertex_counts}")
for state in seq.states():
    print("  ", state)
bfs = distance(g, Uniform(ell), a, b, with_sequence=False).distance
print(f"shortest possible: {bfs}; bound floor(3n/2) = {3 * g.n // 2}")
