"""Command-line front end.

Exit status: 0 success / found / true, 1 infeasible / false, 2 budget
exceeded or unknown, 64 usage error. Data goes to stdout, diagnostics to
stderr. Long vectors and sequences may be passed as ``@path``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import bivariate, core, feasibility, hadamard, marginals, oracle, orbits

SCHEMA = 1
EXIT_OK, EXIT_FALSE, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 64

EXIT_FOR_VERDICT = {
    feasibility.Verdict.FOUND: EXIT_OK,
    feasibility.Verdict.EXHAUSTED: EXIT_FALSE,
    feasibility.Verdict.PRUNED: EXIT_FALSE,
    feasibility.Verdict.BUDGET: EXIT_UNKNOWN,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


def parse_vector(text: str) -> tuple[int, ...]:
    body = _read_arg(text).replace(",", " ").split()
    if not body:
        raise UsageError("empty vector")
    try:
        return tuple(int(v) for v in body)
    except ValueError as exc:
        raise UsageError(f"bad vector: {exc}") from None


def parse_seq(text: str) -> core.BinarySequence:
    try:
        return core.parse_sequence(_read_arg(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _json(obj: dict) -> str:
    return json.dumps({"schema": SCHEMA, **obj}) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _text(rows) -> str:
    rows = [[str(c) for c in row] for row in rows]
    widths = [max(len(r[j]) for r in rows if j < len(r)) for j in range(max(map(len, rows)))]
    return "".join(" ".join(c.rjust(widths[j]) for j, c in enumerate(row)) + "\n" for row in rows)


def _grid(rows, fmt: str) -> str:
    return _csv(rows) if fmt == "csv" else _text(rows)


def cmd_autocorr(args):
    prof = core.autocorrelation(parse_seq(args.seq))
    if args.format == "json":
        return EXIT_OK, _json(prof.to_json())
    rows = [["i", *range(1, prof.m + 1)], ["sigma", *prof.sigma], ["d", *prof.d]]
    return EXIT_OK, _grid(rows, args.format)


def cmd_canonicalize(args):
    form = orbits.path_representative(parse_seq(args.seq))
    if args.format == "json":
        return EXIT_OK, _json(form.to_json())
    rows = [["sequence", "shift", "unique"], [core.format_sequence(form.sequence), form.shift, str(form.is_unique).lower()]]
    return EXIT_OK, _grid(rows, args.format)


def cmd_marginal(args):
    if args.x is not None:
        c = marginals.marginal(args.n, args.k, args.i, args.x)
        if args.format == "json":
            return EXIT_OK, _json({"n": args.n, "k": args.k, "i": args.i, "x": args.x, "count": str(c)})
        return EXIT_OK, f"{c}\n"
    table = marginals.marginal_table(args.n, args.k, args.i)
    if args.format == "json":
        return EXIT_OK, _json(table.to_json())
    return EXIT_OK, _grid([["i", *range(args.k + 1)], [args.i, *table.counts]], args.format)


def cmd_joint(args):
    if (args.x is None) != (args.y is None):
        raise UsageError("--x and --y go together")
    if args.x is not None:
        c = bivariate.joint_count(args.n, args.k, args.x, args.y)
        if args.format == "json":
            return EXIT_OK, _json({"n": args.n, "k": args.k, "x": args.x, "y": args.y, "count": str(c)})
        return EXIT_OK, f"{c}\n"
    jc = bivariate.joint_table(args.n, args.k)
    if args.format == "json":
        return EXIT_OK, _json(jc.to_json())
    rows = [["x\\y", *range(args.k + 1)]]
    for x in range(args.k + 1):
        rows.append([x, *(jc.table.get((x, y), 0) for y in range(args.k + 1))])
    return EXIT_OK, _grid(rows, args.format)


def cmd_refine(args):
    ref = marginals.orbit_refinement(args.n, args.k, args.i)
    if args.format == "json":
        return EXIT_OK, _json({**ref.to_json(), "total": str(ref.total)})
    return EXIT_OK, _grid([["i", *range(args.k), "total"], [args.i, *ref.b, ref.total]], args.format)


def cmd_mode(args):
    ma = marginals.mode_analysis(args.n, args.k)
    ratios = [str(q) for q in ma.ratios]
    if args.format == "json":
        return EXIT_OK, _json({"n": ma.n, "k": ma.k, "peak_r": ma.peak_r, "peak_x": ma.peak_x, "ratios": ratios, "ties": list(ma.ties)})
    rows = [["r", *range(1, ma.k)], ["ratio", *ratios], ["peak_r", ma.peak_r], ["ties", *ma.ties]]
    return EXIT_OK, _grid(rows, args.format)


def cmd_enumerate(args):
    dist = oracle.enumerate_joint(args.n, args.k, ceiling=args.ceiling)
    if args.format == "json":
        return EXIT_OK, dist.to_jsonl()
    rows = [[*(f"sigma{i}" for i in range(1, dist.m + 1)), "count"]]
    rows += [[*s, dist.bins[s]] for s in sorted(dist.bins)]
    return EXIT_OK, _grid(rows, args.format)


def _spec(args) -> feasibility.TargetSpec:
    try:
        return feasibility.TargetSpec(args.n, args.k, parse_vector(args.d))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_check(args):
    res = feasibility.check_necessary(_spec(args))
    verdict = res.verdict.value if isinstance(res.verdict, feasibility.Verdict) else res.verdict
    status = EXIT_OK if res.ok else EXIT_FALSE
    if args.format == "json":
        return status, _json({"verdict": verdict, "certificate": res.certificate, "passed": list(res.passed)})
    line = verdict if res.ok else f"{verdict}: {res.certificate}"
    return status, line + "\n"


def _heuristic_params(args) -> feasibility.HeuristicParams:
    return feasibility.HeuristicParams(seed=args.seed, restarts=args.restarts, max_steps=args.max_steps)


def _outcome(out: feasibility.SearchOutcome, fmt: str, err):
    print(f"elapsed {out.stats.elapsed:.3f}s", file=err)
    if fmt == "json":
        return EXIT_FOR_VERDICT[out.verdict], _json(out.to_json(with_timing=False))
    lines = [out.verdict.value]
    if out.witness is not None:
        lines.append(core.format_sequence(out.witness))
    if out.certificate:
        lines.append(out.certificate)
    return EXIT_FOR_VERDICT[out.verdict], "\n".join(lines) + "\n"


def cmd_search(args, err):
    spec = _spec(args)
    if args.heuristic:
        out = feasibility.search_heuristic(spec, _heuristic_params(args))
    else:
        out = feasibility.search_exact(spec, budget=args.budget)
    return _outcome(out, args.format, err)


def cmd_supplement(args, err):
    f1 = parse_seq(args.f1)
    params = _heuristic_params(args) if args.heuristic else None
    out = feasibility.supplement_search(f1, args.constant, args.k2, budget=args.budget, heuristic=params)
    return _outcome(out, args.format, err)


def cmd_hadamard_build(args, err):
    fx = hadamard.load_fixture(args.fixture)
    if "sequences" not in fx and "completion" not in fx:
        triple = hadamard.fixture_triple(fx)
        need = hadamard.deficit(fx["target_constant"], triple.sequences)
        print("fixture has no fourth sequence; reporting the required autocorrelation", file=err)
        return EXIT_UNKNOWN, _json({"n": fx["n"], "deficit": list(need)})
    q = hadamard.fixture_quadruple(fx)
    h = hadamard.build_goethals_seidel(q)
    ok = hadamard.verify_hadamard(h)
    print(f"order {h.shape[0]}, hadamard {str(ok).lower()}", file=err)
    if args.out:
        Path(args.out).write_text(hadamard.format_sign_matrix(h))
    if args.format == "json":
        body = _json({"order": int(h.shape[0]), "hadamard": ok, "rows": hadamard.format_sign_matrix(h).split()})
    else:
        body = "" if args.out else hadamard.format_sign_matrix(h)
    return (EXIT_OK if ok else EXIT_FALSE), body


def cmd_hadamard_verify(args):
    h = hadamard.parse_sign_matrix(_read_arg("@" + args.path))
    ok = hadamard.verify_hadamard(h)
    if args.format == "json":
        return (EXIT_OK if ok else EXIT_FALSE), _json({"order": int(h.shape[0]), "hadamard": ok})
    return (EXIT_OK if ok else EXIT_FALSE), f"{str(ok).lower()}\n"


def golden_tables() -> dict:
    return {
        "table1": {"n": 15, "k": 6, "rows": {i: marginals.marginal_counts(15, 6, i) for i in (1, 3, 5)}},
        "table2": {"n": 15, "k": 7, "rows": {i: marginals.orbit_refinement(15, 7, i).b for i in (3, 4, 5)}},
        "refinement_21_10": {"n": 21, "k": 10, "rows": {1: marginals.orbit_refinement(21, 10, 1).b}},
        "refinement_21_8": {"n": 21, "k": 8, "rows": {1: marginals.orbit_refinement(21, 8, 1).b}},
    }


def cmd_tables(args):
    if not args.paper:
        raise UsageError("tables: only --paper is available")
    tables = golden_tables()
    if args.format == "json":
        obj = {
            name: {"n": t["n"], "k": t["k"], "rows": {str(i): [str(c) for c in row] for i, row in t["rows"].items()}}
            for name, t in tables.items()
        }
        return EXIT_OK, _json(obj)
    blocks = []
    for name, t in tables.items():
        width = max(len(r) for r in t["rows"].values())
        rows = [[name, f"n={t['n']}", f"k={t['k']}"], ["i", *range(width), "total"]]
        rows += [[i, *row, sum(row)] for i, row in t["rows"].items()]
        blocks.append(_grid(rows, args.format))
    return EXIT_OK, "\n".join(blocks)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = _Parser(prog="convnum", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("autocorr", parents=[common], help="autocorrelation profile of a sequence")
    s.add_argument("seq")
    s = sub.add_parser("canonicalize", parents=[common], help="path representative of the rotation orbit")
    s.add_argument("seq")

    s = sub.add_parser("marginal", parents=[common], help="subsets by incidences at distance i")
    for name in ("--n", "--k", "--i"):
        s.add_argument(name, type=int, required=True)
    s.add_argument("--x", type=int)

    s = sub.add_parser("joint", parents=[common], help="subsets by incidences at distances 1 and 2")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--x", type=int)
    s.add_argument("--y", type=int)

    s = sub.add_parser("refine", parents=[common], help="orbit counts by incidences (gcd(n,k)=1)")
    for name in ("--n", "--k", "--i"):
        s.add_argument(name, type=int, required=True)

    s = sub.add_parser("mode", parents=[common], help="mode of the coprime-distance marginal")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("enumerate", parents=[common], help="brute-force joint profile distribution")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--ceiling", type=int, default=oracle.DEFAULT_CEILING)

    s = sub.add_parser("check", parents=[common], help="necessary conditions for a target vector")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", required=True, help="comma-separated raw vector or @path")

    search_opts = _Parser(add_help=False)
    mode = search_opts.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--heuristic", action="store_true")
    search_opts.add_argument("--budget", type=int, help="node limit for the exact search")
    search_opts.add_argument("--seed", type=int, default=0)
    search_opts.add_argument("--restarts", type=int, default=100)
    search_opts.add_argument("--max-steps", type=int)

    s = sub.add_parser("search", parents=[common, search_opts], help="find a sequence with a given profile")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", required=True, help="comma-separated raw vector or @path")

    s = sub.add_parser("supplement", parents=[common, search_opts], help="complete f1 to a constant sum")
    s.add_argument("--f1", required=True)
    s.add_argument("--constant", type=int, required=True)
    s.add_argument("--k2", type=int, required=True)

    s = sub.add_parser("hadamard", help="Goethals-Seidel construction and verification")
    hsub = s.add_subparsers(dest="action", required=True, parser_class=_Parser)
    b = hsub.add_parser("build", parents=[common])
    b.add_argument("--fixture", required=True, help="fixture path or bundled name (gs19, gs79, gs167)")
    b.add_argument("--out", help="write the +/- matrix here instead of stdout")
    v = hsub.add_parser("verify", parents=[common])
    v.add_argument("path")

    s = sub.add_parser("tables", parents=[common], help="reproduce the published tables")
    s.add_argument("--paper", action="store_true")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        handlers = {
            "autocorr": cmd_autocorr,
            "canonicalize": cmd_canonicalize,
            "marginal": cmd_marginal,
            "joint": cmd_joint,
            "refine": cmd_refine,
            "mode": cmd_mode,
            "enumerate": cmd_enumerate,
            "check": cmd_check,
            "tables": cmd_tables,
        }
        if args.command in handlers:
            status, body = handlers[args.command](args)
        elif args.command == "search":
            status, body = cmd_search(args, err)
        elif args.command == "supplement":
            status, body = cmd_supplement(args, err)
        elif args.action == "build":
            status, body = cmd_hadamard_build(args, err)
        else:
            status, body = cmd_hadamard_verify(args)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    out.write(body)
    return status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
