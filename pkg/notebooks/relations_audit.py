# %% [markdown]
# # Thirteen linear relations
#
# Each relation is an expression c1*a + c2*b + c0 evaluated mod n.  Across
# every canonical pair up to n = 200 only four (relation, n) combinations
# vanish.

# %%
from halftrans.modular import RELATIONS, audit_relations, enumerate_pairs

for label, *_ in RELATIONS:
    print(label, end="   ")
print()

hits = {}
for p in enumerate_pairs(200):
    for e in audit_relations(p.n, p.a):
        if e.holds:
            hits.setdefault(e.relation_id, []).append((p.n, p.a))
for rid, where in sorted(hits.items()):
    print(rid, RELATIONS[rid - 1][0], where)
