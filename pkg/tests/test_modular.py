from math import gcd

import pytest
from hypothesis import given, strategies as st

from halftrans.modular import (
    AdmissiblePair,
    InadmissibleError,
    RELATION_EXCEPTIONS,
    UnitGroupContext,
    admissible_pairs,
    audit_relations,
    check_admissible,
    enumerate_pairs,
    euler_phi,
    multiplicative_order,
    order3_elements,
    relation_violations,
)


def phi_by_counting(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def prime_factors(n):
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


@pytest.mark.parametrize("n, expected", [(1, 1), (7, 6), (63, 36)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected
    assert phi_by_counting(n) == expected


def test_euler_phi_rejects_zero():
    with pytest.raises(ValueError):
        euler_phi(0)


@given(st.integers(min_value=1, max_value=3000))
def test_euler_phi_matches_counting(n):
    assert euler_phi(n) == phi_by_counting(n)


@pytest.mark.parametrize("x, n, expected", [(1, 9, 1), (4, 9, 3), (2, 7, 3)])
def test_multiplicative_order_examples(x, n, expected):
    assert multiplicative_order(x, n) == expected
    powers = [pow(x, k, n) for k in range(1, expected + 1)]
    assert powers[-1] == 1 and 1 not in powers[:-1]


def test_multiplicative_order_rejects_non_unit():
    with pytest.raises(ValueError):
        multiplicative_order(3, 9)


@pytest.mark.parametrize("n, expected", [(8, []), (7, [2, 4]), (9, [4, 7])])
def test_order3_elements_examples(n, expected):
    assert order3_elements(n) == expected


def test_unit_group_context_invariants():
    for n in range(2, 300):
        ctx = UnitGroupContext.for_modulus(n)
        assert all(gcd(a, n) == 1 for a in ctx.order3)
        assert all(a * a % n in ctx.order3 for a in ctx.order3)
        assert (len(ctx.order3) == 0) == (ctx.phi % 3 != 0)


def test_order3_nonempty_iff_nine_or_prime_one_mod_three():
    for n in range(2, 501):
        brute = [a for a in range(2, n) if (a ** 3 - 1) % n == 0 and gcd(a, n) == 1]
        assert order3_elements(n) == brute
        form = n % 9 == 0 or any(p % 3 == 1 for p in prime_factors(n))
        assert bool(brute) == form, n


def test_admissible_pairs_examples():
    assert admissible_pairs(7) == [AdmissiblePair(7, 2, 4)]
    assert [p.as_tuple() for p in admissible_pairs(63)] == [(63, 4, 16), (63, 22, 43), (63, 25, 58), (63, 37, 46)]
    assert admissible_pairs(8) == []


def test_admissible_pairs_cover_all_units():
    for n in range(7, 400):
        pairs = admissible_pairs(n)
        covered = sorted({p.a for p in pairs} | {p.b for p in pairs})
        assert covered == order3_elements(n)
        for p in pairs:
            assert p.a < p.b and p.a * p.b % n == 1
            assert 2 <= p.a and p.b <= n - 2


def test_check_admissible_rejects():
    with pytest.raises(InadmissibleError):
        check_admissible(8, 3)
    with pytest.raises(InadmissibleError):
        check_admissible(7, 1)
    with pytest.raises(InadmissibleError):
        check_admissible(6, 1)
    assert check_admissible(7, 4).b == 2


def holding(n, a):
    return [e.relation_id for e in audit_relations(n, a) if e.holds]


def test_audit_relations_examples():
    assert holding(9, 4) == [2]
    assert 3 in holding(7, 2)
    assert holding(13, 3) == []


def test_audit_relations_13_by_hand():
    a, b, n = 3, 9, 13
    exprs = [2*a - 4*b, 2*a + 4*b, 4*a - 2*b, 4*a + 2*b, 2*a - 2*b, 2*a + 2*b, 4*a + 4,
             2*a + 6, 2*(a + b - 1), 2*(b - a + 1), 2*(a - b + 1), 2*(a + b + 2), 2*(a - b - 2)]
    entries = audit_relations(n, a)
    assert len(entries) == 13
    assert [e.lhs_value for e in entries] == [x % n for x in exprs]
    assert all(e.holds == (e.lhs_value == 0) for e in entries)


def test_audit_rejects_inadmissible():
    with pytest.raises(InadmissibleError):
        audit_relations(10, 3)


def test_relation_exceptions_exhaustive():
    seen = {}
    for p in enumerate_pairs(200):
        for rid in holding(p.n, p.a):
            seen.setdefault(rid, set()).add(p.n)
        assert relation_violations(p.n, audit_relations(p.n, p.a)) == []
    assert seen == {2: {9}, 3: {7, 14}, 4: {18}}
    assert {k: set(v) for k, v in RELATION_EXCEPTIONS.items()} == seen
