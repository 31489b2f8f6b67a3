"""``hyperind`` command line: JSON reports on stdout, HGR files in and out.

Exit status: 0 on success, 1 when a checked inequality or identity fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .algorithms import bounds_table, dlr_reduce, randomized_greedy
from .errors import HyperindError
from .exact import (
    claim1_sweep,
    claim3_sweep,
    default_workers,
    exact_distribution,
    expectation_report,
    independence_number,
    uniform_shadow_expectation,
)
from .generators import KINDS, GenSpec, generate
from .hgr import read_hgr, serialize_hgr, write_hgr
from .measure import derive_params
from .sampler import ChainConfig, chain_seeds, run_chain, run_chains, tv_distance

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _clean(obj):
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, Path):
        return str(obj)
    return obj


def manifest(args: argparse.Namespace) -> dict:
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "func", "seed")}
    return {
        "command": args.command,
        "inputs": inputs,
        "seed": getattr(args, "seed", None),
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def emit(args, report: dict, out=None) -> None:
    out = out or sys.stdout
    json.dump(_clean({"manifest": manifest(args), "report": report}), out, indent=2, sort_keys=False)
    out.write("\n")


def _load(args):
    return read_hgr(args.file)


def cmd_check(args) -> int:
    H = _load(args)
    report = {"n": H.n, "r": H.r, "m": H.m, "max_degree": H.max_degree, **H.sparsity.to_dict()}
    emit(args, report)
    return EXIT_OK


def cmd_alpha(args) -> int:
    H = _load(args)
    alpha, witness = independence_number(H, cap=args.cap)
    emit(args, {"alpha": alpha, "witness": witness.vertices()})
    return EXIT_OK


def cmd_bounds(args) -> int:
    H = _load(args)
    alpha = None
    if args.exact:
        alpha, _ = independence_number(H, cap=args.cap)
    table = bounds_table(H.n, H.r, H.max_degree, g=args.g, exact_alpha=alpha)
    if args.text:
        sys.stdout.write(table.to_text())
    else:
        emit(args, table.to_dict())
    return EXIT_OK


def cmd_weights(args) -> int:
    H = _load(args)
    params = derive_params(H.r, args.d)
    table = exact_distribution(H, params, cap=args.cap, workers=default_workers())
    if args.csv:
        table.write_csv(args.csv)
    exp = expectation_report(H, params, table=table)
    emit(args, {"params": params.to_dict(), "distribution": table.summary(), "expectations": exp.to_dict()})
    return EXIT_OK


def cmd_verify(args) -> int:
    H = _load(args)
    params = derive_params(H.r, args.d)
    table = exact_distribution(H, params, cap=args.cap, workers=default_workers())
    c1 = claim1_sweep(H, params, tol=args.claim1_tol, cap=args.cap)
    report = {
        "claim1_checked": c1.checked,
        "claim1_violations": c1.violations,
        "claim1_max_violation": c1.max_violation,
        "claim1_tol": args.claim1_tol,
        "claim3_tol": args.claim3_tol,
    }
    failed = c1.violations > 0
    if H.sparsity.locally_sparse:
        c3 = claim3_sweep(H, params, table=table)
        report["claim3_max_gap"] = c3.max_gap
        report["claim3"] = c3.to_dict()
        report["claim4_limit"] = 1 + 1 / (2**H.r - 1)
        failed = failed or c3.max_gap > args.claim3_tol
    else:
        report["claim3_max_gap"] = None
        report["claim3_skipped"] = "hypergraph has a 2- or 3-cycle"
    report["passed"] = not failed
    emit(args, report)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_sample(args) -> int:
    H = _load(args)
    params = derive_params(H.r, args.d)
    config = ChainConfig(args.burn, args.samples, args.thin, args.seed)
    if args.chains > 1:
        workers = min(default_workers(), args.chains)
        rep = run_chains(H, params, config, chains=args.chains, workers=workers)
    else:
        rep = run_chain(H, params, config, trace_path=args.trace)
    report = rep.to_dict()
    if args.tv:
        table = exact_distribution(H, params, cap=args.cap)
        report["tv_distance"] = tv_distance(rep.frequencies, table)
    emit(args, report)
    return EXIT_OK


def cmd_greedy(args) -> int:
    H = _load(args)
    sizes = [randomized_greedy(H, s).size for s in chain_seeds(args.seed, args.trials)]
    hist = Counter(sizes)
    report = {
        "trials": args.trials,
        "mean": sum(sizes) / len(sizes) if sizes else None,
        "min": min(sizes, default=None),
        "max": max(sizes, default=None),
        "histogram": {str(k): hist[k] for k in sorted(hist)},
    }
    if args.exact:
        alpha, _ = independence_number(H, cap=args.cap)
        report["alpha"] = alpha
        report["max_within_alpha"] = max(sizes, default=0) <= alpha
    emit(args, report)
    return EXIT_OK


def cmd_reduce(args) -> int:
    H = _load(args)
    p = "auto" if args.auto or args.p is None else args.p
    red = dlr_reduce(H, p, args.seed)
    if args.output:
        write_hgr(red.sub, args.output)
        emit(
            args,
            {
                "p": red.p,
                "degenerate_p": red.degenerate_p,
                "kept": red.kept.vertices(),
                "n": red.sub.n,
                "m": red.sub.m,
                "max_degree": red.sub.max_degree,
            },
        )
    else:
        if red.degenerate_p:
            print("hyperind: warning: automatic p is >= 1; keeping every vertex", file=sys.stderr)
        sys.stdout.write(serialize_hgr(red.sub))
    return EXIT_OK


def cmd_gen(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "r", "d", "m", "length", "seed")}
    H = generate(GenSpec(args.kind, params))
    if args.output:
        write_hgr(H, args.output)
        emit(args, {"kind": args.kind, "n": H.n, "m": H.m, "r": H.r, "max_degree": H.max_degree})
    else:
        sys.stdout.write(serialize_hgr(H))
    return EXIT_OK


def cmd_conjecture3(args) -> int:
    H = _load(args)
    emit(args, uniform_shadow_expectation(H, cap=args.cap).to_dict())
    return EXIT_OK


def _positive_float(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperind", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", type=Path)
        p.set_defaults(func=func)
        return p

    with_file("check", cmd_check, "cycle/sparsity classification")

    p = with_file("alpha", cmd_alpha, "exact independence number")
    p.add_argument("--cap", type=int, default=64)

    p = with_file("bounds", cmd_bounds, "closed-form lower bounds for the file's n, r, max degree")
    p.add_argument("--g", type=int, default=None, help="girth parameter for the large-girth interval")
    p.add_argument("--exact", action="store_true", help="also compute exact alpha and ratio columns")
    p.add_argument("--text", action="store_true", help="aligned plain-text table instead of JSON")
    p.add_argument("--cap", type=int, default=64)

    p = with_file("weights", cmd_weights, "exact distribution and expectations")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--csv", type=Path, default=None, help="dump (bitmask, log_prob) rows")
    p.add_argument("--cap", type=int, default=24)

    p = with_file("verify", cmd_verify, "Claim 1 and Claim 3 sweeps")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--claim1-tol", type=float, default=1e-12)
    p.add_argument("--claim3-tol", type=float, default=1e-9)
    p.add_argument("--cap", type=int, default=24)

    p = with_file("sample", cmd_sample, "Glauber chain estimates")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--burn", type=int, default=100)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--thin", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--chains", type=int, default=1)
    p.add_argument("--tv", action="store_true", help="TV distance to the exact distribution")
    p.add_argument("--trace", type=Path, default=None, help="per-sample CSV trace (step, bitmask, z)")
    p.add_argument("--cap", type=int, default=24)

    p = with_file("greedy", cmd_greedy, "randomized greedy size distribution")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", action="store_true", help="compare against exact alpha")
    p.add_argument("--cap", type=int, default=64)

    p = with_file("reduce", cmd_reduce, "random vertex subsampling")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--p", type=_positive_float, default=None)
    g.add_argument("--auto", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", type=Path, default=None)

    p = sub.add_parser("gen", help="generate an instance as HGR")
    p.add_argument("kind", choices=KINDS)
    for flag in ("n", "r", "d", "m", "length"):
        p.add_argument(f"--{flag}", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", type=Path, default=None)
    p.set_defaults(func=cmd_gen)

    p = with_file("conjecture3", cmd_conjecture3, "uniform-measure shadow expectation")
    p.add_argument("--cap", type=int, default=24)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"hyperind: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HyperindError, ValueError, OSError) as exc:
        print(f"hyperind: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
