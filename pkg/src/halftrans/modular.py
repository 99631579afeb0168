"""Arithmetic in Z_n and its unit group.

Everything the graph family needs from number theory lives here: the totient,
multiplicative orders, the order-3 units that parametrise the family, the
canonical (a, a^2) pairs, and the thirteen forbidden linear relations used in
the arc-stabilizer case analysis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

MIN_MODULUS = 7


class InadmissibleError(ValueError):
    """Raised when (n, a) does not define a member of the family."""


def euler_phi(n: int) -> int:
    """Euler's totient by trial division."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def multiplicative_order(x: int, n: int) -> int:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    x %= n
    if gcd(x, n) != 1:
        raise ValueError(f"{x} is not a unit mod {n}")
    if n == 1:
        return 1
    k, y = 1, x
    while y != 1:
        y = (y * x) % n
        k += 1
    return k


def order3_elements(n: int) -> list[int]:
    """All a with a^3 = 1 (mod n) and a != 1, ascending."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if euler_phi(n) % 3:
        return []
    return [a for a in range(2, n) if gcd(a, n) == 1 and pow(a, 3, n) == 1]


@dataclass(frozen=True)
class UnitGroupContext:
    n: int
    phi: int
    order3: tuple[int, ...]

    @classmethod
    def for_modulus(cls, n: int) -> "UnitGroupContext":
        return cls(n=n, phi=euler_phi(n), order3=tuple(order3_elements(n)))


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    n: int
    a: int
    b: int = field(compare=False)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n, self.a, self.b)


def check_admissible(n: int, a: int) -> AdmissiblePair:
    """Validate (n, a) and return the pair with b = a^2 mod n.

    Either orientation of an inverse pair is accepted; the returned pair keeps
    the caller's a (so Gamma(n, a) and Gamma(n, a^2) stay distinguishable).
    """
    if n < MIN_MODULUS:
        raise InadmissibleError(f"n must be >= {MIN_MODULUS}, got {n}")
    if not 0 <= a < n:
        raise InadmissibleError(f"a must lie in [0, {n}), got {a}")
    if gcd(a, n) != 1 or a == 1 or pow(a, 3, n) != 1:
        raise InadmissibleError(f"{a} is not a unit of order 3 mod {n}")
    return AdmissiblePair(n, a, (a * a) % n)


def admissible_pairs(n: int) -> list[AdmissiblePair]:
    """One canonical pair (a < a^2 mod n) per inverse pair of order-3 units."""
    if n < MIN_MODULUS:
        return []
    pairs = []
    for a in order3_elements(n):
        b = (a * a) % n
        if a < b:
            pairs.append(AdmissiblePair(n, a, b))
    return pairs


def enumerate_pairs(max_n: int, min_n: int = MIN_MODULUS) -> list[AdmissiblePair]:
    out: list[AdmissiblePair] = []
    for n in range(max(min_n, MIN_MODULUS), max_n + 1):
        out.extend(admissible_pairs(n))
    return out


# (label, coefficient of a, coefficient of b, constant); each is tested as
# coeff_a*a + coeff_b*b + const == 0 (mod n).
RELATIONS: tuple[tuple[str, int, int, int], ...] = (
    ("2a-4b", 2, -4, 0),
    ("2a+4b", 2, 4, 0),
    ("4a-2b", 4, -2, 0),
    ("4a+2b", 4, 2, 0),
    ("2a-2b", 2, -2, 0),
    ("2a+2b", 2, 2, 0),
    ("4a+4", 4, 0, 4),
    ("2a+6", 2, 0, 6),
    ("2(a+b-1)", 2, 2, -2),
    ("2(b-a+1)", -2, 2, 2),
    ("2(a-b+1)", 2, -2, 2),
    ("2(a+b+2)", 2, 2, 4),
    ("2(a-b-2)", 2, -2, -4),
)

# Documented exceptions: relation id -> moduli where it is allowed to vanish.
RELATION_EXCEPTIONS: dict[int, frozenset[int]] = {
    2: frozenset({9}),
    3: frozenset({7, 14}),
    4: frozenset({18}),
}


@dataclass(frozen=True)
class RelationAuditEntry:
    relation_id: int
    expression: str
    lhs_value: int
    holds: bool

    def to_dict(self) -> dict:
        return {
            "relation_id": self.relation_id,
            "expression": self.expression,
            "lhs_value": self.lhs_value,
            "holds": self.holds,
        }


def audit_relations(n: int, a: int) -> list[RelationAuditEntry]:
    pair = check_admissible(n, a)
    entries = []
    for idx, (label, ca, cb, c0) in enumerate(RELATIONS, start=1):
        value = (ca * pair.a + cb * pair.b + c0) % n
        entries.append(RelationAuditEntry(idx, label, value, value == 0))
    return entries


def relation_violations(n: int, entries: list[RelationAuditEntry]) -> list[int]:
    """Ids of relations that vanish where no documented exception allows it.

    The exception table assumes the canonical orientation a < a^2 mod n; with
    the inverse orientation relations 1 and 3 swap roles.
    """
    return [
        e.relation_id
        for e in entries
        if e.holds and n not in RELATION_EXCEPTIONS.get(e.relation_id, frozenset())
    ]
