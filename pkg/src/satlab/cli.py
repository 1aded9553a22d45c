"""Command-line front end.

Data goes to stdout, diagnostics to stderr; every subcommand is
deterministic given its flags.  Exit codes: 0 success / all asserted
bounds hold, 1 an asserted bound failed, 2 usage error, 3 I/O or parse
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from math import comb

from . import bounds as bnd
from .canon import canonical_form
from .counting import BipartitePattern, count_cliques, count_cycles, count_embeddings
from .counting import count_k4_minus, count_kab, count_stars
from .errors import EmptyDomainError, Graph6ParseError, InputError, SatlabError
from .families import FamilySpec, make
from .graph6 import from_graph6, to_graph6
from .graphs import Graph
from .patterns import parse_pattern, pattern_graph
from .process import estimate_expected_count, run_ffree_process
from .saturation import is_h_saturated, is_ks_saturated
from .search import (
    min_count_over_saturated,
    saturated_classes,
)

_NON_ASSERTED_ROWS = {"kr_min_small_n"}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _resolve_threads(args)
        return args.func(args)
    except (InputError, EmptyDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Graph6ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except SatlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _resolve_threads(args) -> None:
    # reserved concurrency cap; execution is currently single-process
    raw = getattr(args, "threads", None)
    if raw is None:
        raw = os.environ.get("SATLAB_THREADS")
    if raw is not None:
        try:
            value = int(raw)
        except ValueError as exc:
            raise InputError(f"bad thread count {raw!r}") from exc
        if value < 1:
            raise InputError(f"thread count must be >= 1, got {value}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satlab",
        description="Exact desk-scale tools for K_s-saturated graphs.",
    )
    parser.add_argument("--threads", type=int, help="worker cap (reserved; runs single-process)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("construct", help="emit a named family graph as graph6")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("count", help="count pattern copies in graph6 input")
    p.add_argument(
        "--pattern",
        required=True,
        choices=["star", "kab", "clique", "cycle", "k4minus", "embed"],
    )
    p.add_argument("--t", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--g6", help="explicit pattern graph for --pattern embed")
    p.add_argument("-i", "--input")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("check", help="saturation report for graph6 input")
    p.add_argument("--sat", required=True, choices=["ks", "pattern"])
    p.add_argument("--s", type=int)
    p.add_argument("--pattern", help="pattern token for --sat pattern")
    p.add_argument("-i", "--input")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("search", help="exact sat(n, H, F) by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", required=True, help="counted pattern (mini-language)")
    p.add_argument("--f", required=True, help="forbidden pattern: 'ks' (with --s) or a token")
    p.add_argument("--s", type=int)
    p.add_argument("--shard", help="i/k: keep canonical forms with hash %% k == i")
    p.add_argument("-i", "--input", help="graph6 file as the enumeration source")
    p.add_argument("--max-extremal", type=int, default=100)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("process", help="random maximal-K_s-free process statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--count", default="k_2", help="counted pattern (default k_2: edges)")
    p.add_argument("--dump-traces", help="write one JSON trace per line to this file")
    p.set_defaults(func=_cmd_process)

    p = sub.add_parser("verify", help="per-instance bound sweep over saturated graphs")
    p.add_argument(
        "--suite",
        required=True,
        choices=["kkko", "k4minus", "prop21", "formulas", "all"],
    )
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def _read_graphs(path: str | None) -> list[Graph]:
    if path is None:
        lines = sys.stdin.read().splitlines()
    else:
        with open(path, "r", encoding="ascii") as f:
            lines = f.read().splitlines()
    graphs = []
    for line in lines:
        line = line.strip()
        if line:
            graphs.append(from_graph6(line))
    if not graphs:
        raise InputError("no graphs in input")
    return graphs


def _emit(text: str, path: str | None) -> None:
    if path is None:
        print(text)
    else:
        with open(path, "w", encoding="ascii") as f:
            f.write(text + "\n")


def _cmd_construct(args) -> int:
    params = {}
    for key in ("n", "s", "a", "b"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    g = make(FamilySpec(args.family, params))
    _emit(to_graph6(g), args.output)
    return 0


def _cmd_count(args) -> int:
    graphs = _read_graphs(args.input)

    def need(name: str) -> int:
        value = getattr(args, name)
        if value is None:
            raise InputError(f"--pattern {args.pattern} requires --{name}")
        return value

    if args.pattern == "star":
        t = need("t")
        label, counter = f"k_1_{t}", lambda g: count_stars(g, t)
    elif args.pattern == "kab":
        a, b = need("a"), need("b")
        pat = BipartitePattern(a, b)
        label, counter = f"k_{pat.a}_{pat.b}", lambda g: count_kab(g, pat)
    elif args.pattern == "clique":
        r = need("r")
        label, counter = f"k_{r}", lambda g: count_cliques(g, r)
    elif args.pattern == "cycle":
        r = need("r")
        label, counter = f"c_{r}", lambda g: count_cycles(g, r)
    elif args.pattern == "k4minus":
        label, counter = "k4minus", count_k4_minus
    else:
        if not args.g6:
            raise InputError("--pattern embed requires --g6 <graph6>")
        pat = from_graph6(args.g6)
        label, counter = f"g6:{args.g6}", lambda g: count_embeddings(g, pat)

    for g in graphs:
        print(
            json.dumps(
                {"graph": to_graph6(g), "pattern": label, "count": counter(g)},
                sort_keys=True,
            )
        )
    return 0


def _report_json(report) -> dict:
    return {
        "is_free": report.is_free,
        "is_saturated": report.is_saturated,
        "free_violation": sorted(report.free_violation) if report.free_violation else None,
        "saturation_violation": list(report.saturation_violation)
        if report.saturation_violation
        else None,
    }


def _cmd_check(args) -> int:
    graphs = _read_graphs(args.input)
    if args.sat == "ks":
        if args.s is None:
            raise InputError("--sat ks requires --s")
        reports = [(g, is_ks_saturated(g, args.s)) for g in graphs]
        label = f"k_{args.s}"
    else:
        if not args.pattern:
            raise InputError("--sat pattern requires --pattern")
        h = pattern_graph(parse_pattern(args.pattern))
        reports = [(g, is_h_saturated(g, h)) for g in graphs]
        label = args.pattern
    for g, rep in reports:
        out = {"graph": to_graph6(g), "pattern": label}
        out.update(_report_json(rep))
        print(json.dumps(out, sort_keys=True))
    return 0


def _cmd_search(args) -> int:
    f = args.f
    if f == "ks":
        if args.s is None:
            raise InputError("--f ks requires --s")
        f = f"k_{args.s}"
    shard = None
    if args.shard:
        try:
            idx, total = args.shard.split("/")
            shard = (int(idx), int(total))
        except ValueError as exc:
            raise InputError(f"bad --shard {args.shard!r}; expected i/k") from exc
    source = iter(_read_graphs(args.input)) if args.input else None
    record = min_count_over_saturated(
        args.n, args.h, f, shard=shard, source=source, max_extremal=args.max_extremal
    )
    print(record.to_json())
    return 0


def _cmd_process(args) -> int:
    stats = estimate_expected_count(args.n, f"k_{args.s}", args.count, args.trials, args.seed)
    print(stats.to_json())
    if args.dump_traces:
        with open(args.dump_traces, "w", encoding="ascii") as fh:
            for i in range(args.trials):
                trace = run_ffree_process(args.n, f"k_{args.s}", args.seed + i)
                fh.write(trace.to_json() + "\n")
    return 0


def _verify_rows(suite: str, n_max: int, s: int) -> list[bnd.BoundReport]:
    rows: list[bnd.BoundReport] = []
    do_kkko = suite in ("kkko", "all")
    do_k4 = suite in ("k4minus", "all")
    do_p21 = suite in ("prop21", "all")
    do_forms = suite in ("formulas", "all")
    for n in range(s, n_max + 1):
        pairs = saturated_classes(n, ("clique", s))
        for g, _form in pairs:
            if do_kkko:
                rows.extend(bnd.check_kkko(g, s))
            if do_k4:
                rows.extend(bnd.check_k4minus_chain(g, s))
            if do_p21:
                for t in (3, 4):
                    rows.append(bnd.check_star_bound(g, s, t))
        if do_forms:
            rows.extend(_formula_rows(n, s, pairs))
    return rows


def _formula_rows(n: int, s: int, pairs) -> list[bnd.BoundReport]:
    from .families import ehm_graph

    rows = []
    ehm_form = canonical_form(ehm_graph(n, s))
    min_edges = min(g.edge_count() for g, _ in pairs)
    edge_minimizers = sorted(form for g, form in pairs if g.edge_count() == min_edges)
    expected = bnd.ehm_edges(n, s)
    rows.append(
        bnd.BoundReport(
            name="ehm_edges",
            lhs=min_edges,
            rhs=expected,
            holds=min_edges == expected and edge_minimizers == [ehm_form],
            equality=min_edges == expected,
            context={"n": n, "s": s},
        )
    )
    if s >= 4:
        counts = {form: count_stars(g, 2) for g, form in pairs}
        min_k12 = min(counts.values())
        k12_minimizers = sorted(f for f, c in counts.items() if c == min_k12)
        expected = bnd.k12_min(n, s)
        rows.append(
            bnd.BoundReport(
                name="k12_min",
                lhs=min_k12,
                rhs=expected,
                holds=min_k12 == expected and k12_minimizers == [ehm_form],
                equality=min_k12 == expected,
                context={"n": n, "s": s},
            )
        )
    else:
        min_k12 = min(count_stars(g, 2) for g, _ in pairs)
        lower = bnd.k12_k3_lower(n)
        upper = comb(n - 1, 2)
        rows.append(
            bnd.BoundReport(
                name="k12_k3_window",
                lhs=min_k12,
                rhs=lower,
                holds=(min_k12 >= lower - 1e-9) and (min_k12 <= upper),
                equality=False,
                context={"n": n, "s": s},
            )
        )
    if s >= 4:
        for r in range(3, s):
            min_kr = min(count_cliques(g, r) for g, _ in pairs)
            expected = bnd.kr_min(n, r, s)
            rows.append(
                bnd.BoundReport(
                    name="kr_min_small_n",
                    lhs=min_kr,
                    rhs=expected,
                    holds=min_kr == expected,
                    equality=min_kr == expected,
                    context={"n": n, "s": s, "t": r},
                )
            )
    return rows


def _cmd_verify(args) -> int:
    rows = _verify_rows(args.suite, args.n_max, args.s)
    writer = csv.writer(sys.stdout)
    print(bnd.CSV_SCHEMA_COMMENT)
    writer.writerow(bnd.CSV_HEADER)
    violations = 0
    for row in rows:
        writer.writerow(row.csv_row())
        if not row.holds and row.name not in _NON_ASSERTED_ROWS:
            violations += 1
    if violations:
        print(f"{violations} asserted bound(s) violated", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
