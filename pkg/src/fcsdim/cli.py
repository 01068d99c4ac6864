"""Command-line front end: ``fcsdim <subcommand> ...``.

Exit codes: 0 success, 2 usage or parameter error, 3 search budget
exceeded, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field

from fcsdim import __version__
from fcsdim import closedform as cf
from fcsdim import io as gio
from fcsdim import resolvability as res
from fcsdim.generators import (
    DEFAULT_LAYOUT,
    LAYOUTS,
    FcsParams,
    LabelError,
    LabeledGraph,
    ParameterError,
    alternate_edge_landmarks,
    audit,
    build_complete,
    build_cycle,
    build_fcs,
    build_path,
    corner_landmarks,
    parse_label,
)
from fcsdim.graph import GraphError, all_pairs_distances

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4

BASELINE_BUILDERS = {"path": build_path, "cycle": build_cycle, "complete": build_complete}


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: list[str]
    params: dict
    results: dict
    duration: float = 0.0
    version: str = __version__
    schema_version: int = gio.SCHEMA_VERSION
    lines: list[str] = field(default_factory=list, repr=False)

    def to_json(self) -> str:
        body = asdict(self)
        body.pop("lines")
        return json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _fcs_from(args) -> tuple[FcsParams, LabeledGraph]:
    params = FcsParams(args.a, args.b, args.c)
    return params, build_fcs(params, args.layout)


def _params_dict(params: FcsParams, layout: str) -> dict:
    return {"a": params.a, "b": params.b, "c": params.c, "layout": layout}


def _label_list(lg: LabeledGraph, ids) -> list[str]:
    return [str(lg.labels[x]) for x in ids]


def _describe_pair(lg: LabeledGraph, mode: str, pair) -> list[str]:
    if mode == res.VERTEX:
        return _label_list(lg, pair)
    return [lg.format_edge(lg.graph.edges[e]) for e in pair]


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# --- subcommands -----------------------------------------------------------

def cmd_generate(args, report: RunReport) -> int:
    params, lg = _fcs_from(args)
    header = _params_dict(params, args.layout)
    report.params = header
    text = {"edgelist": gio.to_edgelist, "dot": gio.to_dot, "json": gio.to_json}[args.format](lg, header)
    if args.output:
        _write(args.output, text)
        print(f"wrote {lg.graph.edge_count} edges to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    report.results = {"vertices": lg.graph.vertex_count, "edges": lg.graph.edge_count}
    return EXIT_OK


def cmd_audit(args, report: RunReport) -> int:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            lg, meta = gio.read_edgelist(fh.read(), args.input)
        try:
            params = FcsParams(int(meta["a"]), int(meta["b"]), int(meta["c"]))
        except KeyError:
            params = FcsParams(args.a, args.b, args.c)
    else:
        params, lg = _fcs_from(args)
    au = audit(lg, params)
    disc = au.discrepancies(params)
    report.params = _params_dict(params, args.layout)
    report.results = {"audit": asdict(au), "expected": au.expected(params),
                      "discrepancies": {k: list(v) for k, v in disc.items()}}
    for key, want in au.expected(params).items():
        got = getattr(au, key)
        report.lines.append(f"{key:18s} {got!s:>6}  expected {want!s:>6}  {'ok' if got == want else 'MISMATCH'}")
    report.lines.append("audit: " + ("all invariants hold" if not disc else f"{len(disc)} discrepancies"))
    return EXIT_OK


def _certify_target(args) -> tuple[LabeledGraph, dict]:
    if args.family:
        if args.n is None:
            raise UsageError("--family requires --n")
        return BASELINE_BUILDERS[args.family](args.n), {"family": args.family, "n": args.n}
    params, lg = _fcs_from(args)
    return lg, _params_dict(params, args.layout)


def cmd_certify(args, report: RunReport) -> int:
    lg, params = _certify_target(args)
    report.params = params
    result = res.certify_dimension(lg.graph, None, args.mode, args.max_size,
                                   threads=args.threads, prune=not args.no_prune)
    report.results = {
        "mode": args.mode,
        "dimension": result.dimension,
        "witness": _label_list(lg, result.witness),
        "refuted_sizes": result.refuted_sizes,
        "searched": {str(k): {"checked": c, "pruned": p} for k, (c, p) in result.searched.items()},
        "max_size": result.max_size,
        "backend": result.backend,
    }
    for size, (c, p) in result.searched.items():
        report.lines.append(f"size {size}: refuted ({c} subsets compared, {p} pruned)")
    report.lines.append(f"refuted sizes = {result.refuted_sizes}")
    if result.exceeded:
        report.lines.append(f"budget exceeded: no resolving set of size <= {result.max_size}")
        return EXIT_BUDGET
    report.lines.append(f"witness = {', '.join(_label_list(lg, result.witness))}")
    report.lines.append(f"dimension = {result.dimension}")
    return EXIT_OK


def _parse_set(lg: LabeledGraph, text: str) -> list[int]:
    ids = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            ids.append(lg.id_of(parse_label(tok)))
        except LabelError as exc:
            raise UsageError(f"bad landmark {tok!r}: {exc}") from None
    if len(set(ids)) != len(ids):
        raise UsageError(f"landmark set {text!r} repeats a vertex")
    return ids


def _check_one(lg: LabeledGraph, dm, ids, mode: str) -> dict:
    r = res.is_resolving(lg.graph, ids, mode, dm)
    out = {"set": _label_list(lg, ids), "mode": mode, "resolving": r.resolving,
           "independent": res.is_independent(lg.graph, ids),
           "minimal": res.check_minimality(lg.graph, ids, mode, dm) if r.resolving else None}
    if not r.resolving:
        out["unresolved_pair"] = _describe_pair(lg, mode, r.pair)
    return out


def _check_lines(result: dict) -> list[str]:
    minimal = "n/a" if result["minimal"] is None else str(result["minimal"]).lower()
    lines = [f"set = {','.join(result['set'])}  mode = {result['mode']}",
             f"resolving = {str(result['resolving']).lower()}",
             f"independent = {str(result['independent']).lower()}",
             f"minimal = {minimal}"]
    if "unresolved_pair" in result:
        lines.append("unresolved pair = " + " / ".join(result["unresolved_pair"]))
    return lines


def cmd_check(args, report: RunReport) -> int:
    params, lg = _fcs_from(args)
    report.params = _params_dict(params, args.layout)
    dm = all_pairs_distances(lg.graph)
    modes = res.MODES if args.mode == "both" else (args.mode,)
    if args.set:
        sets = {"given": _parse_set(lg, args.set)}
    else:
        sets = {"corner": lg.ids_of(corner_landmarks(lg)),
                "alternate": lg.ids_of(alternate_edge_landmarks(lg))}
    checks = []
    for name, ids in sets.items():
        for mode in modes:
            result = _check_one(lg, dm, ids, mode)
            result["name"] = name
            checks.append(result)
            report.lines += _check_lines(result)
    report.results = {"checks": checks}
    return EXIT_OK


def _errata_text(reports: list[cf.ErrataReport]) -> str:
    lines = []
    for rep in reports:
        p = rep.params
        lines.append(f"# errata mode={rep.mode} a={p.a} b={p.b} c={p.c}")
        for e in rep.entries + rep.nonexistent:
            pred = "-" if e.predicted is None else ",".join(map(str, e.predicted))
            orc = "-" if e.oracle is None else ",".join(map(str, e.oracle))
            lines.append(f"{e.family}\t{e.obj}\t({p.a},{p.b},{p.c})\t{pred}\t{orc}\t{e.status}"
                         f"\t{e.expression}\t{e.note}".rstrip())
        for gap in rep.coverage_gaps:
            lines.append(f"-\t{gap}\t({p.a},{p.b},{p.c})\t-\t-\tno family")
    return "\n".join(lines) + "\n"


def cmd_errata(args, report: RunReport) -> int:
    params, lg = _fcs_from(args)
    report.params = _params_dict(params, args.layout)
    modes = res.MODES if args.mode == "both" else (args.mode,)
    reports = [cf.verify_formulas(lg, params, m) for m in modes]
    payload = {"reports": []}
    for rep in reports:
        counts = rep.family_counts()
        payload["reports"].append({
            "mode": rep.mode,
            "status_counts": rep.status_counts(),
            "family_counts": counts,
            "coverage_gaps": rep.coverage_gaps,
            "nonexistent_edges": len(rep.nonexistent),
            "errata": [e.to_dict() for e in rep.errata],
            "table_issues": [asdict(i) for i in cf.lint_tables(rep.mode)],
        })
        report.lines.append(f"[{rep.mode}] {rep.covered} objects covered, gaps {len(rep.coverage_gaps)}")
        for fam, c in counts.items():
            report.lines.append(f"  {fam:4s} match={c['match']:3d} mismatch={c['mismatch']:3d} "
                                f"untranscribable={c['untranscribable']:3d} uncovered={c['uncovered']:3d}")
        report.lines.append("  totals " + " ".join(f"{k}={v}" for k, v in rep.status_counts().items()))
        for e in rep.nonexistent:
            report.lines.append(f"  nonexistent edge: {e.obj}")
        for i in payload["reports"][-1]["table_issues"]:
            report.lines.append(f"  table {i['kind']}: {i['family']} pieces {i['pieces']} "
                                f"first at (a,b,c,d)={tuple(i['example'])}")
    if args.span:
        verdicts = []
        for m in modes:
            for v in cf.span_audit(m, builder=lambda p: build_fcs(p, args.layout)):
                verdicts.append({"mode": m, "family": v.family, "piece": v.piece,
                                 "expression": v.expression, "checked": v.checked,
                                 "mismatched": v.mismatched, "verdict": v.verdict})
                report.lines.append(f"  span {m:6s} {v.family:4s} #{v.piece} {v.verdict:26s} {v.expression}")
        payload["span"] = verdicts
    report.results = payload
    if args.out:
        _write(args.out + ".tsv", _errata_text(reports))
        _write(args.out + ".json", json.dumps({"schema_version": gio.SCHEMA_VERSION, **payload},
                                              indent=2, sort_keys=True) + "\n")
        report.lines.append(f"wrote {args.out}.tsv and {args.out}.json")
    return EXIT_OK


def cmd_baseline(args, report: RunReport) -> int:
    rows = []
    failed = False
    report.params = {"n_min": args.n_min, "n_max": args.n_max}
    for family, builder in BASELINE_BUILDERS.items():
        for n in range(args.n_min, args.n_max + 1):
            lg = builder(n)
            expected = {"path": 1, "cycle": 2, "complete": n - 1}[family]
            got = {m: res.certify_dimension(lg.graph, None, m, threads=args.threads).dimension
                   for m in res.MODES}
            ok = got[res.VERTEX] == expected and got[res.EDGE] == expected
            failed |= not ok
            rows.append({"family": family, "n": n, "dim": got[res.VERTEX],
                         "edim": got[res.EDGE], "expected": expected, "ok": ok})
            report.lines.append(f"{lg.name:4s} dim={got[res.VERTEX]} edim={got[res.EDGE]} "
                                f"expected={expected} {'ok' if ok else 'MISMATCH'}")
    report.results = {"baselines": rows, "all_ok": not failed}
    return EXIT_OK


# --- argument parsing ------------------------------------------------------

def _add_fcs_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=int, default=4)
    p.add_argument("--b", type=int, default=4)
    p.add_argument("--c", type=int, default=4)
    p.add_argument("--layout", choices=sorted(LAYOUTS), default=DEFAULT_LAYOUT,
                   help="family lengths (default: %(default)s)")


def _add_report_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="print the run report as JSON")
    p.add_argument("--report", metavar="PATH", help="also write the JSON run report to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fcsdim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"fcsdim {__version__}")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads for exhaustive search (default: CPU count)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads for exhaustive search (default: CPU count)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="write the labeled graph")
    _add_fcs_args(p)
    p.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist")
    p.add_argument("--output", "-o", metavar="PATH")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("audit", parents=[common], help="check vertex/edge/degree/face counts")
    _add_fcs_args(p)
    p.add_argument("--input", metavar="EDGELIST", help="audit a previously written edgelist")
    _add_report_args(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("certify", parents=[common], help="exhaustively determine the (edge) metric dimension")
    _add_fcs_args(p)
    p.add_argument("--family", choices=sorted(BASELINE_BUILDERS), help="certify a baseline family instead")
    p.add_argument("--n", type=int)
    p.add_argument("--mode", choices=res.MODES, default=res.VERTEX)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--no-prune", action="store_true", help="disable the unresolved-pair prune")
    _add_report_args(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("check", parents=[common], help="test a landmark set (default: both corner sets)")
    _add_fcs_args(p)
    p.add_argument("--set", metavar="LABELS", help="comma-separated labels such as p1:1,r1:1,r2:7")
    p.add_argument("--mode", choices=res.MODES + ("both",), default="both")
    _add_report_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("errata", parents=[common], help="diff the printed code tables against the distance oracle")
    _add_fcs_args(p)
    p.add_argument("--mode", choices=res.MODES + ("both",), default="both")
    p.add_argument("--out", metavar="PREFIX", help="write PREFIX.tsv and PREFIX.json")
    p.add_argument("--span", action="store_true", help="add per-piece verdicts over several sizes")
    _add_report_args(p)
    p.set_defaults(func=cmd_errata)

    p = sub.add_parser("baseline", parents=[common], help="dim and edim of paths, cycles and complete graphs")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=8)
    _add_report_args(p)
    p.set_defaults(func=cmd_baseline)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    report = RunReport(command=["fcsdim", *argv], params={}, results={})
    start = time.perf_counter()
    try:
        code = args.func(args, report)
    except (ParameterError, UsageError, LabelError) as exc:
        print(f"fcsdim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"fcsdim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fcsdim: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    report.duration = round(time.perf_counter() - start, 6)
    if args.command != "generate":
        if getattr(args, "json", False):
            sys.stdout.write(report.to_json())
        else:
            sys.stdout.write("\n".join(report.lines) + "\n")
            sys.stdout.write(f"duration = {report.duration:.3f} s\n")
        if getattr(args, "report", None):
            try:
                _write(args.report, report.to_json())
            except OSError as exc:
                print(f"fcsdim: I/O error: {exc}", file=sys.stderr)
                return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
