"""Command-line interface.

Data commands print canonical JSON (stable byte-for-byte across runs) on
stdout; verification commands additionally print a human-readable summary on
stderr.  Exit status: 0 success or verification pass, 1 verification failure,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import chromatic, closedform, equivalence, verify
from .errors import BudgetExceededError, ParseError, SignedChromError, UsageError
from .graphs import (
    SignedGraph,
    all_positive,
    complete_graph,
    fixture,
    fixture_names,
    format_graph,
    graph_to_dict,
    parse_graph,
)
from .poly import pair_to_json, unipoly_to_json

FORMAT_VERSION = 1


def _emit(args, payload: dict, text_lines=None) -> None:
    if args.output == "text" and text_lines is not None:
        for line in text_lines:
            print(line)
        return
    payload = {"format": FORMAT_VERSION, **payload}
    print(json.dumps(payload, indent=2))


def _load_graph_file(path: str) -> SignedGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e


def _resolve_underlying(name: str) -> SignedGraph:
    """petersen | complete:N | a fixture name | a .sg file path."""
    if name.startswith("complete:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad vertex count in {name!r}") from None
        if n < 0:
            raise UsageError(f"bad vertex count in {name!r}")
        return complete_graph(n, 1)
    try:
        return all_positive(fixture(name))
    except SignedChromError:
        pass
    return all_positive(_load_graph_file(name))


def cmd_chrom(args) -> int:
    g = _load_graph_file(args.file)
    if args.bivariate:
        pair = chromatic.bivariate_pair(g, max_edges=args.subset_budget)
    else:
        pair = chromatic.chromatic_pair(g, max_edges=args.subset_budget)
    _emit(
        args,
        {"bivariate": args.bivariate, **pair_to_json(pair)},
        [f"even: {pair.even}", f"odd: {pair.odd}"],
    )
    return 0


def cmd_oracle(args) -> int:
    g = _load_graph_file(args.file)
    spec = chromatic.make_colour_spec(args.lam, args.mu)
    count = chromatic.count_colourings_oracle(g, spec, budget=args.oracle_budget)
    _emit(args, {"lambda": args.lam, "mu": args.mu, "count": str(count)}, [str(count)])
    return 0


def cmd_closed_form(args) -> int:
    pair = closedform.join_pair(args.family, args.l, args.m, args.n)
    _emit(
        args,
        {
            "family": args.family,
            "l": args.l,
            "m": args.m,
            "n": args.n,
            **pair_to_json(pair),
        },
        [f"even: {pair.even}", f"odd: {pair.odd}"],
    )
    return 0


def cmd_identities(args) -> int:
    report = closedform.identity_suite(args.max)
    if args.output == "text":
        for line in report.lines():
            print(line)
    else:
        _emit(args, report.to_dict())
        for line in report.lines():
            print(line, file=sys.stderr)
    return 0 if report.all_pass else 1


def _parse_code(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"bad threshold code {text!r}") from None


def cmd_threshold(args) -> int:
    code = _parse_code(args.code)
    pair = chromatic.threshold_bivariate(code)
    payload = {
        "code": list(code),
        **pair_to_json(pair),
        "even_univariate": unipoly_to_json(pair.even.substitute_y(0)),
        "odd_univariate": unipoly_to_json(pair.odd.substitute_y(0)),
    }
    _emit(
        args,
        payload,
        [
            f"even: {pair.even}",
            f"odd: {pair.odd}",
            f"even at y=0: {pair.even.substitute_y(0)}",
            f"odd at y=0: {pair.odd.substitute_y(0)}",
        ],
    )
    return 0


def cmd_enumerate(args) -> int:
    underlying = _resolve_underlying(args.underlying)
    mode = "switching_iso" if args.mode == "switch" else "iso"
    # the orbit space has its own hard budget; --subset-budget can only shrink it
    orbit_budget = min(args.subset_budget, equivalence.DEFAULT_ORBIT_EDGE_BUDGET)
    inventory = equivalence.enumerate_classes(underlying, mode, max_edges=orbit_budget)
    classes = []
    for idx, rep in enumerate(inventory.representatives):
        pair = chromatic.chromatic_pair(rep, max_edges=args.subset_budget)
        classes.append(
            {
                "mask": inventory.representative_masks[idx],
                "orbit_size": inventory.orbit_sizes[idx],
                "edges": graph_to_dict(rep)["edges"],
                **pair_to_json(pair),
            }
        )
    payload = {
        "underlying": graph_to_dict(inventory.underlying),
        "mode": mode,
        "class_count": inventory.class_count,
        "classes": classes,
    }
    if args.spot_check:
        rng = random.Random(args.seed)
        size = 1 << inventory.underlying.m
        mismatches = 0
        for _ in range(args.spot_check):
            mask = rng.randrange(size)
            cls = inventory.mask_to_class[mask]
            member = equivalence.graph_from_mask(inventory.underlying, mask)
            pair = chromatic.chromatic_pair(member, max_edges=args.subset_budget)
            rep_pair = {"even": classes[cls]["even"], "odd": classes[cls]["odd"]}
            if pair_to_json(pair) != rep_pair:
                mismatches += 1
        payload["spot_check"] = {
            "samples": args.spot_check,
            "seed": args.seed,
            "mismatches": mismatches,
        }
    lines = [f"{inventory.class_count} classes ({mode})"]
    lines += [
        f"class {i}: mask={c['mask']} orbit_size={c['orbit_size']}"
        for i, c in enumerate(classes)
    ]
    if args.spot_check:
        lines.append(f"spot check: {payload['spot_check']}")
        _emit(args, payload, lines)
        return 0 if payload["spot_check"]["mismatches"] == 0 else 1
    _emit(args, payload, lines)
    return 0


def cmd_search_cochromatic(args) -> int:
    underlying = _resolve_underlying(args.underlying)
    orbit_budget = min(args.subset_budget, equivalence.DEFAULT_ORBIT_EDGE_BUDGET)
    report = verify.search_cochromatic(underlying, max_edges=orbit_budget)
    groups = report.details.get("cochromatic_groups", [])
    _emit(args, report.to_dict(), [report.summary(), f"co-chromatic groups: {len(groups)}"])
    if args.output != "text":
        print(report.summary(), file=sys.stderr)
    return 0 if report.passed else 1


_CONJECTURES = {
    "cochromatic-complete": (verify.verify_conj_cochromatic_complete, 6, 7),
    "threshold": (verify.verify_conj_threshold, 8, 12),
    "bivariate-complete": (verify.verify_conj_complete_bivariate, 6, 7),
}


def cmd_verify(args) -> int:
    runner, default_max, stretch_max = _CONJECTURES[args.conjecture]
    n_max = args.max if args.max is not None else (stretch_max if args.stretch else default_max)
    report = runner(n_max)
    _emit(args, report.to_dict(), [report.summary()])
    if args.output != "text":
        print(report.summary(), file=sys.stderr)
    return 0 if report.passed else 1


def cmd_reproduce_tables(args) -> int:
    report = verify.reproduce_tables()
    lines = [report.summary()] + [
        f"  {check['name']}: {check['status']}" for check in report.details["checks"]
    ]
    _emit(args, report.to_dict(), lines)
    if args.output != "text":
        print(report.summary(), file=sys.stderr)
        for check in report.details["checks"]:
            print(f"  {check['name']}: {check['status']}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_fixtures(args) -> int:
    g = fixture(args.name)
    if args.output == "text":
        sys.stdout.write(format_graph(g))
    else:
        _emit(args, {"name": args.name, **graph_to_dict(g)})
    return 0


def _add_common_flags(parser: argparse.ArgumentParser, *, top: bool) -> None:
    # On subparsers the defaults are suppressed so values given before the
    # subcommand are not clobbered; flags work in either position.
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    parser.add_argument(
        "--output", choices=("json", "text"), default=d("json"),
        help="output format for data commands (default json)",
    )
    parser.add_argument(
        "--subset-budget", type=int, default=d(chromatic.DEFAULT_SUBSET_BUDGET),
        metavar="E", help="max edge count for 2^E subset enumeration",
    )
    parser.add_argument(
        "--oracle-budget", type=int, default=d(chromatic.DEFAULT_ORACLE_BUDGET),
        metavar="N", help="max colour-function count for the brute-force oracle",
    )
    parser.add_argument(
        "--seed", type=int, default=d(0), help="seed for randomized spot checks"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedchrom",
        description="Exact even/odd chromatic polynomials of signed graphs.",
    )
    _add_common_flags(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chrom", help="chromatic pair of a graph file")
    p.add_argument("file")
    p.add_argument("--bivariate", action="store_true")
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_chrom)

    p = sub.add_parser("oracle", help="brute-force proper colouring count")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--mu", type=int, default=0)
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("closed-form", help="closed-form join family pair")
    p.add_argument("--family", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("identities", help="check the nine family identities")
    p.add_argument("--max", type=int, default=3, metavar="P")
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("threshold", help="bivariate pair of a threshold code")
    p.add_argument("--code", required=True, help="comma-separated entries in {-1,0,1}")
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("enumerate", help="signature classes of an underlying graph")
    p.add_argument("--underlying", required=True,
                   help="petersen | complete:N | fixture name | .sg file")
    p.add_argument("--mode", choices=("iso", "switch"), required=True)
    p.add_argument("--spot-check", type=int, default=0, metavar="K",
                   help="verify K random signatures against their class pair")
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search-cochromatic",
                       help="co-chromatic class groups over an underlying graph")
    p.add_argument("--underlying", required=True,
                   help="petersen | complete:N | fixture name | .sg file")
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_search_cochromatic)

    p = sub.add_parser("verify", help="run a conjecture verifier")
    p.add_argument("--conjecture", choices=tuple(_CONJECTURES), required=True)
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--stretch", action="store_true",
                   help="default to the largest supported bound instead of the desk-scale one")
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce-tables", help="recompute all published tables")
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_reproduce_tables)

    p = sub.add_parser("fixtures", help="print a built-in graph")
    p.add_argument("--name", required=True,
                   help="one of: " + ", ".join(fixture_names()))
    _add_common_flags(p, top=False)
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, BudgetExceededError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SignedChromError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
