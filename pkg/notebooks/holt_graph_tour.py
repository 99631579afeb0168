# %% [markdown]
# # A tour of Gamma(9, 4)
#
# The smallest member of the family with n divisible by 9 is the 27-vertex
# Holt graph.  We build it, look at its local structure, and compute its
# automorphism group from scratch.

# %%
from halftrans import analysis
from halftrans.automorphism import abg_group, automorphism_group, named_automorphisms, transitivity
from halftrans.construction import Vertex, build, neighbors
from halftrans.structure import girth, hamiltonian_cycle, shortest_cycle

g = build(9, 4)
print(g.num_vertices, "vertices,", g.num_edges, "edges, b =", g.b)
print("neighbours of (0,0):", [str(v) for v in neighbors(g, Vertex(0, 0))])

# %% [markdown]
# Girth 5, and a shortest cycle written in (i,j) labels.

# %%
print("girth", girth(g), [str(g.vertex(v)) for v in shortest_cycle(g)])

# %% [markdown]
# The search finds 54 automorphisms.  That is exactly the group generated by
# the three named maps, so nothing beyond them acts on this graph.

# %%
G = automorphism_group(g)
print("|Aut| =", G.order(), " search base:", G.search_base, G.search_orbit_sizes)
print("|<alpha, beta, gamma>| =", abg_group(9, 4).order())
print(transitivity(g, G))

alpha, beta, gamma = named_automorphisms(9, 4)
label = lambda v: str(g.vertex(v))
print("alpha =", alpha.cycle_notation(label))

# %%
cyc = hamiltonian_cycle(g)
print("Hamiltonian cycle:", " ".join(label(v) for v in cyc))

# %% [markdown]
# The same facts as a checked report.

# %%
report = analysis.analyze(9, 4)
for c in report["claims"]:
    print(f"{c['status']:5} {c['name']}")
