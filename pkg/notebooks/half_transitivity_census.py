# %% [markdown]
# # Which members are half-transitive?
#
# For each admissible pair up to n = 60 we compute the full automorphism
# group, count orbits on vertices, edges and arcs, and compare |Aut| with 6n.
# Only n = 7 and n = 14 come out arc-transitive.

# %%
from collections import Counter

from halftrans.automorphism import arc_stabilizer_probe, automorphism_group, transitivity
from halftrans.construction import build
from halftrans.modular import enumerate_pairs

rows = []
for p in enumerate_pairs(60):
    g = build(p.n, p.a)
    G = automorphism_group(g)
    t = transitivity(g, G)
    probe, _ = arc_stabilizer_probe(g)
    rows.append((p.n, p.a, G.order(), G.order() // (6 * p.n), t.classification, probe))

print(f"{'n':>3} {'a':>3} {'|Aut|':>6} {'/6n':>4}  class            probe")
for n, a, order, ratio, kind, probe in rows:
    print(f"{n:3d} {a:3d} {order:6d} {ratio:4d}  {kind:16} {probe}")

# %%
print(Counter(kind for *_, kind, _ in rows))
