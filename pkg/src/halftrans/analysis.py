"""Full per-pair analysis: structure, automorphisms, relation audit, and a
checklist of the family's known properties, serialised to versioned JSON."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from typing import Optional

import jsonschema

from .automorphism import (
    abg_group,
    arc_stabilizer_probe,
    automorphism_group,
    cayley_regular_check,
    is_automorphism,
    named_automorphisms,
    transitivity,
    verify_relations,
)
from .construction import GammaGraph, build
from .modular import audit_relations, check_admissible, relation_violations
from .structure import BudgetExceeded, DEFAULT_HAMILTON_BUDGET, analyze_structure

SCHEMA_VERSION = 1
EXCEPTIONAL_N = frozenset({7, 14})

_INT = {"type": "integer"}
_BOOL = {"type": "boolean"}
_INTS = {"type": "array", "items": _INT}


def _obj(props: dict, required=None) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": False,
    }


REPORT_SCHEMA = _obj({
    "schema_version": {"const": SCHEMA_VERSION},
    "pair": _obj({"n": _INT, "a": _INT, "b": _INT}),
    "graph": _obj({"vertices": _INT, "edges": _INT}),
    "structure": _obj({
        "bipartite": _BOOL,
        "bipartition": {"oneOf": [{"type": "null"}, {"type": "array", "items": _INTS}]},
        "chromatic": {"type": ["integer", "null"]},
        "coloring": {"oneOf": [{"type": "null"}, _INTS]},
        "girth": _INT,
        "odd_girth": {"type": ["integer", "null"]},
        "triangle_free": _BOOL,
        "has_4cycle": _BOOL,
        "has_6cycle": _BOOL,
        "hamiltonian_status": {"enum": ["found", "budget_exceeded", "skipped"]},
        "hamiltonian_cycle": {"oneOf": [{"type": "null"}, _INTS]},
    }),
    "automorphism": _obj({
        "status": {"enum": ["ok", "budget_exceeded", "skipped"]},
        "order": {"type": ["integer", "null"]},
        "abg_order": _INT,
        "base": {"oneOf": [{"type": "null"}, _INTS]},
        "basic_orbit_sizes": {"oneOf": [{"type": "null"}, _INTS]},
        "named_relations": _BOOL,
        "cayley_regular": _BOOL,
        "arc_stabilizer_probe": {"type": ["boolean", "null"]},
    }),
    "transitivity": {"oneOf": [{"type": "null"}, _obj({
        "vertex_orbits": _INT,
        "edge_orbits": _INT,
        "arc_orbits": _INT,
        "classification": {"type": "string"},
    })]},
    "aut_order": {"type": ["integer", "null"]},
    "relations_audit": {"type": "array", "items": _obj({
        "relation_id": _INT,
        "expression": {"type": "string"},
        "lhs_value": _INT,
        "holds": _BOOL,
    })},
    "claims": {"type": "array", "items": _obj({
        "name": {"type": "string"},
        "status": {"enum": ["PASS", "FAIL", "SKIP", "BUDGET"]},
        "kind": {"enum": ["theorem", "observation"]},
        "detail": {"type": "string"},
    })},
    "timings_ms": {"type": "object", "additionalProperties": {"type": "number"}},
})


class _Timer:
    def __init__(self):
        self.ms: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.ms[name] = round((time.perf_counter() - t0) * 1000.0, 3)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def expected_girth(n: int) -> Optional[int]:
    """Girth where a closed form is known; None otherwise (e.g. n = 21)."""
    if n % 2 == 0:
        return 6
    if n % 9 == 0:
        return 5 if n == 9 else 6
    if _is_prime(n) and n % 3 == 1:
        return 3
    return None


def _claim(claims: list, name: str, ok: Optional[bool], detail: str = "",
           kind: str = "theorem", status: Optional[str] = None) -> None:
    if status is None:
        status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
    claims.append({"name": name, "status": status, "kind": kind, "detail": detail})


def analyze(n: int, a: int, *, graph: Optional[GammaGraph] = None,
            skip_aut: bool = False, skip_hamiltonian: bool = False,
            budget: int = DEFAULT_HAMILTON_BUDGET) -> dict:
    """Run every stage on Gamma(n, a) and return the report as a plain dict.

    ``graph`` overrides the constructed graph (used to feed deliberately
    corrupted inputs through the same checks).
    """
    pair = check_admissible(n, a)
    timer = _Timer()
    claims: list[dict] = []

    with timer.stage("construction"):
        g = graph if graph is not None else build(n, a)
    regular = all(len(nbrs) == 4 for nbrs in g.adjacency) and g.num_edges == 6 * n
    _claim(claims, "tetravalent with 6n edges", regular,
           f"{g.num_vertices} vertices, {g.num_edges} edges")

    with timer.stage("structure"):
        s = analyze_structure(g, hamiltonian=not skip_hamiltonian, budget=budget)
    even = n % 2 == 0
    _claim(claims, "bipartite iff n even", s.bipartite == even, f"bipartite={s.bipartite}")
    chi_ok = None
    if s.chromatic is not None:
        chi_ok = s.chromatic == (2 if even else 3)
    _claim(claims, "chromatic number 2 (n even) or 3 (n odd)", chi_ok, f"chi={s.chromatic}")
    _claim(claims, "no 4-cycle", not s.has_4cycle)
    _claim(claims, "has a 6-cycle", s.has_6cycle)
    _claim(claims, "girth at most 6", s.girth <= 6, f"girth={s.girth}")
    eg = expected_girth(n)
    _claim(claims, "girth matches closed form", None if eg is None else s.girth == eg,
           f"girth={s.girth}, expected={eg}")
    _claim(claims, "triangle-free when 9 | n", s.triangle_free if n % 9 == 0 else None)
    if even:
        _claim(claims, "Hamiltonian cycle for odd n", None, "n even: not asserted")
    elif s.hamiltonian_status == "found":
        _claim(claims, "Hamiltonian cycle for odd n", True, f"length {len(s.hamiltonian_cycle)}")
    elif s.hamiltonian_status == "budget_exceeded":
        _claim(claims, "Hamiltonian cycle for odd n", None, "search budget exhausted",
               status="BUDGET")
    else:
        _claim(claims, "Hamiltonian cycle for odd n", None, "skipped")

    with timer.stage("relations"):
        entries = audit_relations(n, a)
    bad = relation_violations(n, entries)
    _claim(claims, "forbidden relations vanish only at documented exceptions",
           not bad if pair.a < pair.b else None,
           f"violations={bad}" if pair.a < pair.b else "non-canonical orientation")

    aut = {
        "status": "skipped", "order": None, "abg_order": 6 * n, "base": None,
        "basic_orbit_sizes": None, "named_relations": False, "cayley_regular": False,
        "arc_stabilizer_probe": None,
    }
    trans = None
    with timer.stage("named_automorphisms"):
        alpha, beta, gamma = named_automorphisms(n, a)
        named_ok = all(is_automorphism(g, p) for p in (alpha, beta, gamma))
        rel = verify_relations(alpha, beta, gamma, n, a)
        reg = cayley_regular_check(n, a)
        aut["abg_order"] = abg_group(n, a).order()
        aut["named_relations"] = bool(rel) and named_ok
        aut["cayley_regular"] = reg.regular
    _claim(claims, "alpha, beta, gamma are automorphisms of orders n, 3, 2", named_ok)
    _claim(claims, "alpha*beta=beta*alpha^(a^2), alpha*gamma=gamma*alpha^-1, beta*gamma=gamma*beta",
           bool(rel), rel.failing or "")
    _claim(claims, "<alpha, beta> acts regularly (Cayley graph)", reg.regular, f"|H|={reg.order}")

    if not skip_aut:
        try:
            with timer.stage("automorphism_group"):
                G = automorphism_group(g, budget=budget)
                trans = transitivity(g, G)
            with timer.stage("arc_stabilizer_probe"):
                probe, _ = arc_stabilizer_probe(g, budget=budget)
            aut.update(status="ok", order=G.order(), base=G.search_base,
                       basic_orbit_sizes=G.search_orbit_sizes, arc_stabilizer_probe=probe)
        except BudgetExceeded:
            aut["status"] = "budget_exceeded"
    if trans is not None:
        expected = "arc-transitive" if n in EXCEPTIONAL_N else "half-transitive"
        _claim(claims, "arc-transitive iff n in {7, 14}, else half-transitive",
               trans.classification == expected, trans.classification)
        _claim(claims, "arc-stabilizer probe agrees with classification",
               aut["arc_stabilizer_probe"] == (trans.classification == "arc-transitive"))
        if trans.classification == "half-transitive":
            _claim(claims, "Aut = <alpha, beta, gamma> (order 6n)",
                   aut["order"] == aut["abg_order"], f"|Aut|={aut['order']}", kind="observation")
    elif aut["status"] == "budget_exceeded":
        _claim(claims, "arc-transitive iff n in {7, 14}, else half-transitive", None,
               "search budget exhausted", status="BUDGET")

    return {
        "schema_version": SCHEMA_VERSION,
        "pair": {"n": n, "a": a, "b": pair.b},
        "graph": {"vertices": g.num_vertices, "edges": g.num_edges},
        "structure": {
            "bipartite": s.bipartite,
            "bipartition": None if s.bipartition is None else [list(c) for c in s.bipartition],
            "chromatic": s.chromatic,
            "coloring": None if s.coloring is None else list(s.coloring),
            "girth": s.girth,
            "odd_girth": s.odd_girth,
            "triangle_free": s.triangle_free,
            "has_4cycle": s.has_4cycle,
            "has_6cycle": s.has_6cycle,
            "hamiltonian_status": s.hamiltonian_status,
            "hamiltonian_cycle": s.hamiltonian_cycle,
        },
        "automorphism": aut,
        "transitivity": None if trans is None else trans.to_dict(),
        "aut_order": aut["order"],
        "relations_audit": [e.to_dict() for e in entries],
        "claims": claims,
        "timings_ms": timer.ms,
    }


def failed_claims(report: dict) -> list[dict]:
    return [c for c in report["claims"] if c["status"] == "FAIL" and c["kind"] == "theorem"]


def dumps(report: dict) -> str:
    jsonschema.validate(report, REPORT_SCHEMA)
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> dict:
    """Parse and validate a report; unknown or missing fields are rejected."""
    report = json.loads(text)
    jsonschema.validate(report, REPORT_SCHEMA)
    return report
