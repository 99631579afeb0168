"""Command-line front end.

    halftrans enumerate --max-n 63 [--format csv|json]
    halftrans analyze --n 9 --a 4 [--json] [--skip-aut] [--skip-hamiltonian] [--budget N]
    halftrans audit --max-n 20 [--json] [--skip-aut] [--aut-max-n 60] [--budget N]
    halftrans probe --n 7 --a 2 [--json]
    halftrans export --n 9 --a 4 --format graph6 --out holt.g6
    halftrans relations --n 9 --a 4 | --max-n 200

Exit codes: 0 success, 1 usage error, 2 a checked property failed,
3 a required search ran out of budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import analysis
from .automorphism import arc_stabilizer_probe
from .construction import FORMATS, build, export
from .modular import (
    InadmissibleError,
    audit_relations,
    enumerate_pairs,
    relation_violations,
)
from .structure import DEFAULT_HAMILTON_BUDGET, BudgetExceeded

EXIT_OK, EXIT_USAGE, EXIT_CLAIM, EXIT_BUDGET = 0, 1, 2, 3
MAX_ENUMERATE_N = 10000
MAX_AUDIT_N = 200
AUDIT_BUDGET = 10**5


class UsageError(Exception):
    pass


def _workers() -> int:
    raw = os.environ.get("HALFTRANS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"HALFTRANS_THREADS must be an integer, got {raw!r}")


def _need(args, *names):
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"{args.command} requires {' '.join(missing)}")


def _vertex_label(n: int):
    return lambda v: f"{v % n},{v // n}"


# enumerate


def cmd_enumerate(args, out) -> int:
    _need(args, "max_n")
    if args.max_n > MAX_ENUMERATE_N:
        raise UsageError(f"--max-n must be <= {MAX_ENUMERATE_N}")
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    pairs = enumerate_pairs(args.max_n)
    fmt = args.format or "csv"
    if fmt == "json" or args.json:
        out.write(json.dumps([{"n": p.n, "a": p.a, "b": p.b} for p in pairs], indent=2) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "a", "b"])
        for p in pairs:
            w.writerow(p.as_tuple())
    else:
        raise UsageError(f"enumerate supports --format csv|json, not {fmt}")
    return EXIT_OK


# analyze


def _report_exit(report: dict) -> int:
    if analysis.failed_claims(report):
        return EXIT_CLAIM
    if report["automorphism"]["status"] == "budget_exceeded":
        return EXIT_BUDGET
    return EXIT_OK


def _print_report(report: dict, out) -> None:
    p, s, t = report["pair"], report["structure"], report["transitivity"]
    out.write(f"Gamma({p['n']},{p['a']})  b={p['b']}  "
              f"{report['graph']['vertices']} vertices, {report['graph']['edges']} edges\n")
    out.write(f"  bipartite={s['bipartite']} chromatic={s['chromatic']} girth={s['girth']} "
              f"odd_girth={s['odd_girth']} hamiltonian={s['hamiltonian_status']}\n")
    if t is not None:
        out.write(f"  |Aut|={report['aut_order']} orbits v/e/a={t['vertex_orbits']}/"
                  f"{t['edge_orbits']}/{t['arc_orbits']} -> {t['classification']}\n")
    else:
        out.write(f"  automorphism search: {report['automorphism']['status']}\n")
    for c in report["claims"]:
        tag = "" if c["kind"] == "theorem" else " (observation)"
        detail = f"  [{c['detail']}]" if c["detail"] else ""
        out.write(f"  {c['status']:6} {c['name']}{tag}{detail}\n")


def cmd_analyze(args, out) -> int:
    _need(args, "n", "a")
    report = analysis.analyze(args.n, args.a, skip_aut=args.skip_aut,
                              skip_hamiltonian=args.skip_hamiltonian,
                              budget=args.budget or DEFAULT_HAMILTON_BUDGET)
    text = analysis.dumps(report)
    if args.out:
        _write(args.out, text.encode())
    if args.json:
        out.write(text)
    else:
        _print_report(report, out)
    return _report_exit(report)


# audit

AUDIT_COLUMNS = ("regular", "bip_iff_even", "no_4cycle", "has_6cycle", "girth_form",
                 "triangle_free", "hamiltonian", "relations", "named_aut", "class")

_CLAIM_COLUMN = {
    "tetravalent with 6n edges": "regular",
    "bipartite iff n even": "bip_iff_even",
    "no 4-cycle": "no_4cycle",
    "has a 6-cycle": "has_6cycle",
    "girth matches closed form": "girth_form",
    "triangle-free when 9 | n": "triangle_free",
    "Hamiltonian cycle for odd n": "hamiltonian",
    "forbidden relations vanish only at documented exceptions": "relations",
    "alpha, beta, gamma are automorphisms of orders n, 3, 2": "named_aut",
    "arc-transitive iff n in {7, 14}, else half-transitive": "class",
}


def corrupted_graph(n: int, a: int):
    """Gamma(n, a) plus one edge from (0,0) to the first vertex at distance 3."""
    g = build(n, a)
    dist = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    target = min(v for v, d in dist.items() if d == 3)
    return g.with_extra_edges([(0, target)])


def _audit_row(job) -> dict:
    n, a, skip_aut, skip_ham, budget, corrupt = job
    graph = corrupted_graph(n, a) if corrupt else None
    report = analysis.analyze(n, a, graph=graph, skip_aut=skip_aut,
                              skip_hamiltonian=skip_ham, budget=budget)
    cells = {col: "-" for col in AUDIT_COLUMNS}
    for c in report["claims"]:
        col = _CLAIM_COLUMN.get(c["name"])
        if col is not None:
            cells[col] = {"PASS": "PASS", "FAIL": "FAIL", "SKIP": "-", "BUDGET": "BUDGET"}[c["status"]]
    t = report["transitivity"]
    return {
        "n": n,
        "a": a,
        "b": report["pair"]["b"],
        "girth": report["structure"]["girth"],
        "odd_girth": report["structure"]["odd_girth"],
        "aut_order": report["aut_order"],
        "classification": None if t is None else t["classification"],
        "checks": cells,
        "status": "FAIL" if analysis.failed_claims(report) else "PASS",
    }


def run_audit(max_n: int, *, skip_aut: bool = False, aut_max_n: int = 60,
              skip_hamiltonian: bool = False, budget: int = AUDIT_BUDGET,
              corrupt_n: Optional[int] = None, workers: int = 1) -> list[dict]:
    jobs = []
    for p in enumerate_pairs(max_n):
        jobs.append((p.n, p.a, skip_aut or p.n > aut_max_n, skip_hamiltonian, budget,
                     corrupt_n == p.n))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_audit_row, jobs))
    return [_audit_row(j) for j in jobs]


def cmd_audit(args, out) -> int:
    _need(args, "max_n")
    if not 1 <= args.max_n <= MAX_AUDIT_N:
        raise UsageError(f"--max-n must lie in [1, {MAX_AUDIT_N}]")
    rows = run_audit(args.max_n, skip_aut=args.skip_aut, aut_max_n=args.aut_max_n,
                     skip_hamiltonian=args.skip_hamiltonian,
                     budget=args.budget or AUDIT_BUDGET,
                     corrupt_n=args.inject_fault, workers=_workers())
    if args.json:
        out.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    else:
        header = ["n", "a", "b", "girth", "odd_girth", "aut_order", "classification",
                  *AUDIT_COLUMNS, "status"]
        table = [header]
        for r in rows:
            table.append([str(r["n"]), str(r["a"]), str(r["b"]), str(r["girth"]),
                          str(r["odd_girth"] if r["odd_girth"] is not None else "none"),
                          str(r["aut_order"] if r["aut_order"] is not None else "-"),
                          r["classification"] or "-",
                          *(r["checks"][c] for c in AUDIT_COLUMNS), r["status"]])
        widths = [max(len(row[k]) for row in table) for k in range(len(header))]
        for row in table:
            out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n")
        fails = sum(r["status"] == "FAIL" for r in rows)
        out.write(f"{len(rows)} pairs, {fails} FAIL\n")
    return EXIT_CLAIM if any(r["status"] == "FAIL" for r in rows) else EXIT_OK


# probe


def cmd_probe(args, out) -> int:
    _need(args, "n", "a")
    g = build(args.n, args.a)
    try:
        found, witness = arc_stabilizer_probe(g, budget=args.budget or DEFAULT_HAMILTON_BUDGET)
    except BudgetExceeded as exc:
        out.write(f"budget_exceeded: {exc}\n")
        return EXIT_BUDGET
    label = _vertex_label(g.n)
    cycles = witness.cycle_notation(label) if witness is not None else None
    if args.json:
        doc = {"n": g.n, "a": g.a, "b": g.b, "found": found, "witness": cycles,
               "witness_images": None if witness is None else list(witness.images)}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"Gamma({g.n},{g.a}): automorphism fixing (0,0) with ({g.b},1) -> (1,2): "
                  f"{'found' if found else 'none'}\n")
        if found:
            out.write(f"witness: {cycles}\n")
    return EXIT_OK


# export


def _write(path: str, data: bytes) -> None:
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}")


def cmd_export(args, out) -> int:
    _need(args, "n", "a")
    fmt = args.format or "graph6"
    if fmt not in FORMATS:
        raise UsageError(f"export supports --format {'|'.join(FORMATS)}, not {fmt}")
    g = build(args.n, args.a)
    data = export(g, fmt)
    if fmt == "graph6":
        data += b"\n"
    if args.out:
        _write(args.out, data)
        out.write(f"wrote {args.out}: {g.num_vertices} vertices, {g.num_edges} edges\n")
    else:
        out.write(data.decode())
    return EXIT_OK


# relations


def cmd_relations(args, out) -> int:
    if args.n is not None:
        _need(args, "a")
        targets = [(args.n, args.a)]
    else:
        _need(args, "max_n")
        targets = [(p.n, p.a) for p in enumerate_pairs(args.max_n)]
    rows = []
    bad_total = 0
    for n, a in targets:
        entries = audit_relations(n, a)
        bad = relation_violations(n, entries) if (a * a) % n > a else []
        bad_total += len(bad)
        rows.append({"n": n, "a": a, "holding": [e.relation_id for e in entries if e.holds],
                     "violations": bad, "entries": [e.to_dict() for e in entries]})
    if args.json:
        out.write(json.dumps(rows, indent=2) + "\n")
    elif args.n is not None:
        for e in rows[0]["entries"]:
            out.write(f"{e['relation_id']:2d}  {e['expression']:10}  = {e['lhs_value']:4d} (mod {args.n})"
                      f"  {'HOLDS' if e['holds'] else 'fails'}\n")
    else:
        for r in rows:
            if r["holding"]:
                out.write(f"n={r['n']} a={r['a']}: holds {r['holding']}"
                          f"{' VIOLATION ' + str(r['violations']) if r['violations'] else ''}\n")
        out.write(f"{len(rows)} pairs, {bad_total} violations\n")
    return EXIT_CLAIM if bad_total else EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "analyze": cmd_analyze,
    "audit": cmd_audit,
    "probe": cmd_probe,
    "export": cmd_export,
    "relations": cmd_relations,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="halftrans", description="Analyse the graphs Gamma(n, a).")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--n", type=int)
    parser.add_argument("--a", type=int)
    parser.add_argument("--max-n", type=int)
    parser.add_argument("--format")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--skip-aut", action="store_true")
    parser.add_argument("--skip-hamiltonian", action="store_true")
    parser.add_argument("--budget", type=int)
    parser.add_argument("--out")
    parser.add_argument("--aut-max-n", type=int, default=60,
                        help="audit: largest n that gets the automorphism stage")
    parser.add_argument("--inject-fault", type=int, metavar="N",
                        help="audit self-test: add a stray edge to every graph with this n")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.budget is not None and args.budget <= 0:
            raise UsageError("--budget must be positive")
        return COMMANDS[args.command](args, out)
    except (UsageError, InadmissibleError) as exc:
        print(f"halftrans: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
