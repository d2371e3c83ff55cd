"""Batch command-line front end.

Subcommands: count, enumerate, verify, asymptotics, optimize, construct,
render, tables.  Data goes to stdout, diagnostics to stderr.  Identical
requests produce byte-identical output: fields are emitted in fixed order,
reals at 15 significant digits and arbitrary-precision integers as decimal
strings.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
3 guard-limit refusal from an inner module.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance, asymptotics, doublechain, oracle, recurrences, render
from .geometry import PartitionClass, parse_partition
from .oracle import GuardLimitError

_CLASSES = {
    "ncp": PartitionClass.NCP,
    "ncpws": PartitionClass.NCPWS,
    "ordered": PartitionClass.ORDERED,
    "ordered2": PartitionClass.ORDERED2,
}


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _cmd_count(args) -> int:
    table = recurrences.table_for_class(args.partition_class, args.n_max)
    if args.format == "csv":
        _write(table.to_csv(), args.out)
    else:
        _write(_json(table.to_json()), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    cls = _CLASSES[args.partition_class]
    total = 0
    lines = []
    for part in oracle.enumerate_partitions(args.n, cls, args.variant):
        total += 1
        if args.jsonl:
            lines.append(json.dumps(part.to_json(), separators=(",", ":")))
        else:
            lines.append(json.dumps(part.to_json()["paths"], separators=(",", ":")))
    _write("\n".join(lines) + ("\n" if lines else ""), args.out)
    if not args.jsonl:
        print(f"total {total}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    results = acceptance.run_quick() if args.quick else acceptance.run_all()
    failed = 0
    for result in results:
        print(result.line())
        for detail in result.details:
            print(f"    {detail}")
        failed += not result.passed
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return 1 if failed else 0


def _cmd_asymptotics(args) -> int:
    if args.relation:
        relation = asymptotics.RELATIONS[args.relation]
    elif args.coeffs:
        relation = asymptotics.AlgebraicRelation.from_coefficient_list(
            json.loads(args.coeffs)
        )
    else:
        print("asymptotics: give a relation name or --coeffs", file=sys.stderr)
        return 2
    result = asymptotics.bender_growth(relation)
    if args.format == "text":
        _write(
            f"relation {result.relation}: r = {result.r:.15g}, s = {result.s:.15g}, "
            f"growth = {result.growth:.15g}\n",
            args.out,
        )
    else:
        _write(_json(result.to_json()), args.out)
    return 0


def _cmd_optimize(args) -> int:
    result = asymptotics.optimize_alpha(args.beta, args.gamma, args.c)
    _write(_json(result.to_json()), args.out)
    return 0


def _cmd_construct(args) -> int:
    op = args.operation
    if op == "count-polygonizations":
        if args.n_upper is None or args.n_lower is None:
            raise ValueError("count-polygonizations needs --n-upper and --n-lower")
        config = doublechain.DoubleChainConfig(args.n_upper, args.n_lower)
        out: dict = {"n_upper": config.n_upper, "n_lower": config.n_lower}
        if args.method in ("exact", "both"):
            out["exact"] = str(doublechain.count_polygonizations_exact(config))
        if args.method in ("geometric", "both"):
            out["geometric"] = str(doublechain.count_polygonizations_geometric(config))
        _write(_json(out), args.out)
        return 0
    if op == "ab-family":
        if args.i is None:
            raise ValueError("ab-family needs --i")
        config = None
        if args.n_upper and args.n_lower:
            config = doublechain.DoubleChainConfig(args.n_upper, args.n_lower)
        fam_a, fam_b = doublechain.ab_family(args.i, config)
        out = {"i": args.i, "a_size": str(len(fam_a)), "b_size": str(len(fam_b))}
        if args.full:
            out["a"] = [g.to_json() for g in fam_a]
            out["b"] = [g.to_json() for g in fam_b]
        _write(_json(out), args.out)
        return 0

    data = json.loads(_read(getattr(args, "in")))
    if op == "decompose":
        graph = doublechain.ChainGraph.from_json(data)
        pu, pl, k = doublechain.decompose_polygonization(graph)
        _write(_json({"upper": pu.to_json(), "lower": pl.to_json(), "k": k}), args.out)
        return 0
    if op in ("compose", "hamiltonian"):
        for key in ("upper", "lower"):
            if key not in data:
                raise ValueError(f"{op} input needs an '{key}' partition")
        pu = parse_partition(data["upper"])
        pl = parse_partition(data["lower"])
        if op == "compose":
            outcome = doublechain.compose_pair(pu, pl)
            _write(_json(outcome.to_json()), args.out)
        else:
            graph = doublechain.build_hamiltonian_path(pu, pl)
            _write(_json(graph.to_json()), args.out)
        return 0
    if op == "close":
        graph = doublechain.ChainGraph.from_json(data)
        closed = doublechain.close_to_polygonization(graph)
        _write(_json(closed.to_json()), args.out)
        return 0
    raise AssertionError(f"unhandled construct operation {op}")


def _cmd_render(args) -> int:
    data = json.loads(_read(getattr(args, "in")))
    if args.kind == "chain":
        graph = doublechain.ChainGraph.from_json(data)
        svg = render.chain_graph_svg(graph)
    else:
        svg = render.partition_svg(parse_partition(data))
    _write(svg, args.out)
    return 0


def _cmd_tables(args) -> int:
    g = recurrences.gfh_tables(11)[0]
    gs = recurrences.gs_tables(11)[0]
    go = recurrences.go_tables(11)[0]
    rows = []
    ok = True
    header = f"{'n':>3} {'g(n)':>9} {'ref':>9} {'gs(n)':>8} {'ref':>8} {'go(n)':>8} {'ref':>8}  check"
    rows.append(header)
    rows.append("-" * len(header))
    for n in range(1, 12):
        refs = (
            acceptance.REFERENCE_G[n - 1],
            acceptance.REFERENCE_GS[n - 1],
            acceptance.REFERENCE_GO[n - 1],
        )
        got = (g[n], gs[n], go[n])
        verdict = "PASS" if got == refs else "FAIL"
        ok &= got == refs
        rows.append(
            f"{n:>3} {got[0]:>9} {refs[0]:>9} {got[1]:>8} {refs[1]:>8} "
            f"{got[2]:>8} {refs[2]:>8}  {verdict}"
        )
    rows.append("all rows match" if ok else "MISMATCH against reference tables")
    _write("\n".join(rows) + "\n", args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossfree",
        description=(
            "Exact counts, brute-force enumeration, growth constants and "
            "double-chain constructions for non-crossing path partitions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print a counting table")
    p.add_argument("--class", dest="partition_class", default="ncp",
                   choices=("ncp", "ncpws", "ordered"))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="stream every partition of a class")
    p.add_argument("--class", dest="partition_class", default="ncp",
                   choices=tuple(_CLASSES))
    p.add_argument("--variant", default="A", choices=("A", "B", "C"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jsonl", action="store_true",
                   help="one canonical partition JSON per line")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--quick", action="store_true",
                   help="small oracle sizes and low residual order")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("asymptotics", help="dominant branch point of a relation")
    p.add_argument("relation", nargs="?", choices=tuple(asymptotics.RELATIONS))
    p.add_argument("--coeffs", default=None,
                   help="JSON list of [z_degree, w_degree, coefficient] rows")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_asymptotics)

    p = sub.add_parser("optimize", help="entropy-exponent maximizer")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--c", type=float, default=0.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("construct", help="double-chain operations, JSON in/out")
    p.add_argument("operation", choices=(
        "decompose", "compose", "hamiltonian", "close", "ab-family",
        "count-polygonizations"))
    p.add_argument("--in", default=None, help="input JSON file ('-' for stdin)")
    p.add_argument("--out", default=None)
    p.add_argument("--n-upper", type=int, default=None)
    p.add_argument("--n-lower", type=int, default=None)
    p.add_argument("--i", type=int, default=None, help="step for ab-family")
    p.add_argument("--full", action="store_true", help="include family members")
    p.add_argument("--method", choices=("exact", "geometric", "both"), default="both")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("render", help="SVG of a chain graph or partition")
    p.add_argument("--kind", choices=("chain", "partition"), required=True)
    p.add_argument("--in", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("tables", help="counting tables against the reference rows")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardLimitError as exc:
        print(f"crossfree: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"crossfree: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
