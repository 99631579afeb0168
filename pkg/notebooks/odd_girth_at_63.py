# %% [markdown]
# # Two graphs on 189 vertices
#
# n = 63 has four canonical pairs.  Gamma(63, 4) and Gamma(63, 22) are both
# half-transitive, yet they are not isomorphic: their shortest odd cycles
# have lengths 9 and 21.  The canonical forms agree with that.

# %%
from halftrans.automorphism import are_isomorphic, canonical_form
from halftrans.construction import build
from halftrans.modular import admissible_pairs
from halftrans.structure import girth, odd_girth, shortest_odd_cycle

print([p.as_tuple() for p in admissible_pairs(63)])

graphs = {a: build(63, a) for a in (4, 22)}
for a, g in graphs.items():
    cyc = shortest_odd_cycle(g)
    print(f"Gamma(63,{a}): girth {girth(g)}, odd girth {odd_girth(g)}")
    print("   ", " ".join(str(g.vertex(v)) for v in cyc))

# %%
print("isomorphic:", are_isomorphic(graphs[4], graphs[22]))
print("certificates differ:", canonical_form(graphs[4]) != canonical_form(graphs[22]))

# %% [markdown]
# Swapping a for b = a^2 gives the same graph every time (the map
# (i,j) -> (ai, -j) is an isomorphism), so the pairs are listed with a < b.

# %%
print(all(are_isomorphic(build(63, p.a), build(63, p.b)) for p in admissible_pairs(63)))
