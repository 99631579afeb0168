import random

import pytest
from hypothesis import given, settings, strategies as st

from halftrans.automorphism import (
    BudgetExceeded,
    abg_group,
    arc_stabilizer_probe,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    cayley_regular_check,
    classify,
    find_automorphism,
    is_automorphism,
    naive_automorphisms,
    named_automorphisms,
    transitivity,
    verify_relations,
)
from halftrans.construction import build
from halftrans.groups import PermGroup, Permutation
from halftrans.modular import enumerate_pairs

# Frozen from networkx's VF2 isomorphism matcher (count of self-isomorphisms).
VF2_ORDERS = {(7, 2): 336, (9, 4): 54, (13, 3): 78, (14, 9): 672, (18, 7): 108, (19, 7): 114}


def test_alpha_on_holt(holt):
    alpha, beta, gamma = named_automorphisms(9, 4)
    assert alpha(holt.index(0, 0)) == holt.index(1, 0)
    assert alpha(holt.index(0, 1)) == holt.index(7, 1)
    assert (beta ** 3).is_identity() and (gamma ** 2).is_identity()
    assert (alpha.order(), beta.order(), gamma.order()) == (9, 3, 2)


def test_named_automorphisms_family_up_to_120():
    for p in enumerate_pairs(120):
        g = build(p.n, p.a)
        alpha, beta, gamma = named_automorphisms(p.n, p.a)
        assert all(is_automorphism(g, x) for x in (alpha, beta, gamma))
        assert verify_relations(alpha, beta, gamma, p.n, p.a)


def test_relations_detect_perturbation():
    alpha, beta, gamma = named_automorphisms(9, 4)
    swap = Permutation([1, 0] + list(range(2, 27)))
    bad = swap * alpha
    # relations are homogeneous in alpha, so powers of alpha still satisfy them
    assert verify_relations(alpha * alpha, beta, gamma, 9, 4)
    check = verify_relations(bad, beta, gamma, 9, 4)
    assert not check and check.failing
    assert not verify_relations(alpha, beta, beta, 9, 4)


@pytest.mark.parametrize("n, a, order", [(9, 4, 27), (13, 3, 39), (14, 9, 42)])
def test_cayley_regular(n, a, order):
    r = cayley_regular_check(n, a)
    assert r.regular and r.order == order


@pytest.mark.parametrize("pair, expected", sorted(VF2_ORDERS.items()))
def test_group_order_matches_vf2_oracle(pair, expected):
    G = automorphism_group(build(*pair))
    assert G.order() == expected
    # Schreier-Sims on the returned generators must agree with the search
    assert PermGroup(G.generators, G.degree).order() == expected


@pytest.mark.parametrize("n, a", [(7, 2), (9, 4)])
def test_group_order_matches_naive_enumeration(n, a):
    g = build(n, a)
    auts = naive_automorphisms(g)
    assert len(set(auts)) == len(auts) == automorphism_group(g).order()
    assert all(is_automorphism(g, p) for p in auts)


@pytest.mark.parametrize("n", [7, 9, 13, 14, 18, 19, 21, 26])
def test_order_matches_closure_of_own_generators(n):
    for p in enumerate_pairs(n, min_n=n):
        g = build(p.n, p.a)
        G = automorphism_group(g)
        assert all(is_automorphism(g, x) for x in G.generators)
        assert sum(1 for _ in G.elements()) == G.order()
        half = transitivity(g, G).classification == "half-transitive"
        assert (G.order() == abg_group(p.n, p.a).order()) == half


@pytest.mark.parametrize("n, a, kind", [
    (7, 2, "arc-transitive"),
    (14, 9, "arc-transitive"),
    (9, 4, "half-transitive"),
    (13, 3, "half-transitive"),
    (18, 7, "half-transitive"),
    (21, 4, "half-transitive"),
    (26, 3, "half-transitive"),
])
def test_transitivity(n, a, kind):
    g = build(n, a)
    rep = transitivity(g, automorphism_group(g))
    assert rep.classification == kind
    assert rep.vertex_orbits == 1 and rep.edge_orbits == 1
    assert rep.arc_orbits == (1 if kind == "arc-transitive" else 2)


def test_abg_group_order():
    for p in enumerate_pairs(40):
        assert abg_group(p.n, p.a).order() == 6 * p.n


def test_probe_examples():
    found, witness = arc_stabilizer_probe(build(7, 2))
    g = build(7, 2)
    assert found and is_automorphism(g, witness)
    assert witness(g.index(0, 0)) == g.index(0, 0)
    assert witness(g.index(g.b, 1)) == g.index(1, 2)
    assert arc_stabilizer_probe(build(9, 4)) == (False, None)


def test_probe_agrees_with_classification_up_to_40():
    for p in enumerate_pairs(40):
        g = build(p.n, p.a)
        found, _ = arc_stabilizer_probe(g)
        kind = transitivity(g, automorphism_group(g)).classification
        assert found == (kind == "arc-transitive")


def test_classify_table():
    assert classify(1, 1, 1) == "arc-transitive"
    assert classify(1, 1, 2) == "half-transitive"
    assert classify(1, 2, 4) == "vertex-only"
    assert classify(2, 1, 2) == "edge-only"
    assert classify(2, 2, 4) == "other"


def relabel_randomly(g, seed):
    images = list(range(g.num_vertices))
    random.Random(seed).shuffle(images)
    return g.relabeled(Permutation(images))


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([(7, 2), (9, 4), (13, 3), (14, 9), (19, 7), (21, 4)]), st.integers(0, 10**6))
def test_canonical_form_invariant_under_relabelling(pair, seed):
    g = build(*pair)
    assert canonical_form(relabel_randomly(g, seed)) == canonical_form(g)


def test_are_isomorphic_examples():
    assert are_isomorphic(build(7, 2), build(7, 4))
    assert not are_isomorphic(build(63, 4), build(63, 22))
    assert not are_isomorphic(build(7, 2), build(9, 4))
    g = build(9, 4)
    assert not are_isomorphic(g, g.with_extra_edges([(0, 13)]))


def test_find_automorphism_respects_pins(holt):
    p = find_automorphism(holt, [0], [holt.index(4, 1)])
    assert p is not None and is_automorphism(holt, p) and p(0) == holt.index(4, 1)
    with pytest.raises(ValueError):
        find_automorphism(holt, [0], [])


def test_search_budget():
    with pytest.raises(BudgetExceeded):
        automorphism_group(build(63, 4), budget=2)
