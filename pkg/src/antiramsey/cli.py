"""Command-line entry point: ``antiramsey <subcommand> ...``.

Exit codes: 0 all checks passed, 1 failure (refutation, bad input, failed
criterion), 2 indeterminate (search budget exhausted).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from math import comb
from pathlib import Path

from . import audit as audit_mod
from .coloring import EdgeColoring, format_coloring, parse_coloring, representative_subgraph
from .constructions import (
    CERTIFIED_FREE, CERTIFIED_RAINBOW_FREE, INDETERMINATE, lb_coloring, verify_construction,
)
from .formulas import formula_rows
from .hypergraph import ParseError, format_hypergraph, parse_hypergraph
from .oracles import OracleLimitError, brute_ar, brute_ex
from .patterns import DEFAULT_BUDGET, PatternSpec, loose_cycle, loose_path
from .structure import decompose, edge_class_counts, greedy_core_detect, shadow_degree_split, tau_small_pairs

EXIT_OK, EXIT_FAIL, EXIT_INDETERMINATE = 0, 1, 2


def int_range(text: str) -> list[int]:
    """``"4..6"`` -> [4, 5, 6]; ``"3,5"`` -> [3, 5]; ``"7"`` -> [7]."""
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def family(text: str) -> list[PatternSpec]:
    return [PatternSpec.parse(x) for x in text.split(",") if x.strip()]


def _emit(obj, out=None):
    text = json.dumps(obj, sort_keys=True, indent=1) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    sys.stdout.write(text)


def _verdict_code(verdict: str) -> int:
    if verdict in (CERTIFIED_FREE, CERTIFIED_RAINBOW_FREE):
        return EXIT_OK
    return EXIT_INDETERMINATE if verdict == INDETERMINATE else EXIT_FAIL


def cmd_formulas(args):
    rows = formula_rows(int_range(args.n), int_range(args.r), int_range(args.k))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "r", "k", "ar_loose", "ar_linear", "ex_loose_path", "ex_linear_path", "applicability"])
    w.writerows(rows)
    if args.out:
        Path(args.out).write_text(buf.getvalue(), encoding="utf-8")
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_construct(args):
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    lb = lb_coloring(args.n, args.r, args.k)
    stem = f"lb_n{args.n}_r{args.r}_k{args.k}"
    col_path = outdir / f"{stem}.col"
    col_path.write_text(format_coloring(lb.coloring), encoding="utf-8")
    cert = verify_construction(lb, [loose_path(args.k), loose_cycle(args.k)], args.budget, args.workers)
    data = cert.to_json()
    data["coloring_file"] = col_path.name
    data["core"] = [v + 1 for v in lb.core]
    _emit(data, outdir / f"{stem}.cert.json")
    return _verdict_code(cert.verdict)


def _load(path: str):
    text = Path(path).read_text(encoding="utf-8")
    header = next((ln.split("#", 1)[0].split() for ln in text.splitlines()
                   if ln.split("#", 1)[0].strip()), [])
    if len(header) == 3:
        return parse_coloring(text)
    return parse_hypergraph(text)


def cmd_verify(args):
    obj = _load(args.file)
    expected = None
    if args.certificate:
        cert_json = json.loads(Path(args.certificate).read_text(encoding="utf-8"))
        specs = [PatternSpec.parse(s["spec"]) for s in cert_json["searches"]]
        expected = cert_json["verdict"]
    elif args.family:
        specs = family(args.family)
    else:
        raise SystemExit("verify needs --family or --certificate")
    cert = verify_construction(obj, specs, args.budget, args.workers)
    data = cert.to_json()
    if expected is not None:
        data["matches_certificate"] = expected == cert.verdict
    _emit(data, args.out)
    if expected is not None and expected != cert.verdict:
        return EXIT_FAIL
    return _verdict_code(cert.verdict)


def _oracle(args, fn):
    start = time.perf_counter()
    res = fn(args.n, args.r, family(args.family), limit=args.limit, workers=args.workers)
    data = res.to_json()
    data["stats"].pop("seconds", None)
    data["wall_seconds"] = round(time.perf_counter() - start, 3)
    if args.out and res.witness is not None:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        if isinstance(res.witness, EdgeColoring):
            path = outdir / f"ar_n{args.n}_r{args.r}_witness.col"
            path.write_text(format_coloring(res.witness), encoding="utf-8")
        else:
            path = outdir / f"ex_n{args.n}_r{args.r}_witness.hg"
            path.write_text(format_hypergraph(res.witness), encoding="utf-8")
        data["witness_path"] = str(path)
        data.pop("witness")
    _emit(data)
    return EXIT_OK


def cmd_oracle_ex(args):
    return _oracle(args, brute_ex)


def cmd_oracle_ar(args):
    return _oracle(args, brute_ar)


def cmd_analyze(args):
    obj = _load(args.file)
    h = representative_subgraph(obj) if isinstance(obj, EdgeColoring) else obj
    if args.core:
        core = [v - 1 for v in int_range(args.core)]
    else:
        core = list(greedy_core_detect(h, args.t))
    dec = decompose(h, core, args.tau)
    counts = edge_class_counts(h, core, dec.S_bar)
    e1 = [e for e in dec.reduced.edge_sets() if len(dec.S_bar.intersection(e)) == 1]
    split = shadow_degree_split(e1, dec.S)
    data = {
        "n": h.n, "r": h.r, "edges": len(h), "tau": args.tau,
        "core": [v + 1 for v in sorted(core)],
        "S": [v + 1 for v in sorted(dec.S)],
        "small_pairs": [[u + 1, v + 1] for u, v in tau_small_pairs(h, core, args.tau)],
        "cross": counts.cross, "missing": counts.missing,
        "E_i": list(counts.by_s_bar), "F_1": counts.f1, "F_2plus": counts.f2plus,
        "identities": {
            "cross_plus_missing": counts.cross + counts.missing,
            "expected": len(core) * comb(h.n - len(core), h.r - 1),
            "E_i_sum": sum(counts.by_s_bar), "reduced_edges": counts.reduced_edges,
            "E_1_bound": split.bound(h.n), "E_1": len(e1),
        },
    }
    _emit(data, args.out)
    ids = data["identities"]
    ok = ids["cross_plus_missing"] == ids["expected"] and ids["E_i_sum"] == ids["reduced_edges"]
    return EXIT_OK if ok else EXIT_FAIL


def cmd_audit(args):
    results = audit_mod.run_audit(args.grid, args.seed, args.workers)
    if not args.skip_determinism:
        results.append(audit_mod.determinism_check(args.grid, args.seed, args.workers, reference=results))
    for res in results:
        print(res.line(), file=sys.stderr)
    values = audit_mod.values_json(results)
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "audit.json").write_text(values + "\n", encoding="utf-8")
        (outdir / "audit_timing.json").write_text(audit_mod.timing_json(results) + "\n", encoding="utf-8")
    sys.stdout.write(values + "\n")
    return EXIT_OK if all(res.ok for res in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antiramsey", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def search_opts(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node expansions per search")
        sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("formulas", help="closed-form values as CSV")
    sp.add_argument("--n", required=True)
    sp.add_argument("--r", required=True)
    sp.add_argument("--k", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_formulas)

    sp = sub.add_parser("construct", help="lower-bound coloring plus certificate")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--out", default=".")
    search_opts(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="certify a coloring or hypergraph file")
    sp.add_argument("file")
    sp.add_argument("--family", help="e.g. loose-path:4,loose-cycle:4")
    sp.add_argument("--certificate", help="certificate JSON to re-check")
    sp.add_argument("--out")
    search_opts(sp)
    sp.set_defaults(func=cmd_verify)

    for name, fn, limit in (("oracle-ex", cmd_oracle_ex, 40), ("oracle-ar", cmd_oracle_ar, 12)):
        sp = sub.add_parser(name, help="exact brute-force oracle")
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--family", required=True)
        sp.add_argument("--limit", type=int, default=limit, help="max edges of K_n^r")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--out", help="directory for the witness file")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("analyze", help="core/crossing/E_i diagnostics")
    sp.add_argument("file")
    sp.add_argument("--core", help="1-based core vertices, e.g. 1,2")
    sp.add_argument("--t", type=int, default=1, help="core size for greedy detection")
    sp.add_argument("--tau", type=int, default=1)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("audit", help="run the acceptance checks")
    sp.add_argument("--grid", choices=sorted(audit_mod.GRIDS), default="small")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out")
    sp.add_argument("--skip-determinism", action="store_true")
    sp.set_defaults(func=cmd_audit)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OracleLimitError, ValueError) as exc:
        sys.stdout.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
