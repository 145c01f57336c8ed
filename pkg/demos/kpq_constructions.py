"""Closed-form diameter intervals for C_k(K_{p,q}) next to BFS and the constructive sequences.

Run with ``python demos/kpq_constructions.py``.
"""

from recolour import KpqInstance, Uniform, diameter_interval, distance, extremal_pair, metrics, recolour_kpq
from recolour.kpq_theory import format_regime_table, regime_table

print("k p q  regime  interval   BFS diameter  far pair: BFS / constructed")
for k, p, q in [(3, 2, 3), (4, 1, 5), (4, 2, 4), (4, 3, 5), (5, 2, 3)]:
    inst = KpqInstance(p, q, k)
    iv = diameter_interval(inst)
    diam = metrics(inst.graph(), Uniform(k), use_colour_symmetry=True).diameter
    a, b, _ = extremal_pair(inst)
    bfs = distance(inst.graph(), Uniform(k), a, b, with_sequence=False).distance
    built = len(recolour_kpq(inst, a, b))
    span = f"[{iv.lower},{iv.upper}]"
    print(f"{k} {p} {q}  {iv.regime:<6}  {span:<9}  {diam:>12}  {bfs:>8} / {built}")

print("\nLarger instances are beyond BFS, but the formula and construction still apply:")
inst = KpqInstance(18, 18, 4)
a, b, shape = extremal_pair(inst)
print(f"  K_{{18,18}}, k=4: interval {diameter_interval(inst).to_dict()}")
print(f"  far pair uses {shape.a} colours on one side; constructed sequence has {len(recolour_kpq(inst, a, b))} steps")

print("\nRegime expressions for k=4, p=2 (tab separated, ready for plotting):")
print(format_regime_table(regime_table(4, 2, 12)), end="")
