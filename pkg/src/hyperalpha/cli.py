"""Command-line front end: compute, generate, verify.

Exit codes: 0 success, 1 internal error or ensemble violations, 2 validation
error, 3 size-guard violation. Ensemble reports stream as one JSON object
per line followed by a summary object; all randomness derives from --seed
with per-instance seeds split as SeedSequence((seed, index)).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import traceback
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import bounds as bounds_mod
from . import report as report_mod
from .combinatorics import clique_expansion, diameter, isoperimetric_number, lambda2
from .errors import GuardError, InfeasibleModel, ValidationError
from .hypergraph import generate, nonuniform_random, parse, serialize
from .solver import SolverConfig, analytic_connectivity

THREADS_ENV = "HYPERALPHA_THREADS"


def _solver_config(args) -> SolverConfig:
    return SolverConfig(
        restarts=args.restarts,
        max_iterations=args.max_iterations,
        objective_tolerance=args.tol,
        seed=args.seed,
    )


def _add_solver_flags(p):
    p.add_argument("--restarts", type=int, default=16)
    p.add_argument("--max-iterations", type=int, default=10_000)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)


def _read_instance(args):
    with open(args.infile, "r", encoding="utf-8") as fh:
        return parse(fh.read(), allow_singletons=args.allow_singletons)


def cmd_compute(args) -> int:
    H = _read_instance(args)
    config = _solver_config(args)
    if args.what == "alpha":
        doc = report_mod.alpha_to_dict(analytic_connectivity(H, config))
    elif args.what == "iso":
        doc = {"isoperimetric": report_mod.cut_to_dict(isoperimetric_number(H))}
    elif args.what == "diameter":
        d = diameter(H)
        doc = {"diameter": "infinite" if math.isinf(d) else int(d)}
    elif args.what == "lambda2":
        doc = {"lambda2": lambda2(clique_expansion(H))}
    elif args.what == "bounds":
        doc = report_mod.report_to_dict(bounds_mod.verify(H, config))
    else:
        doc = report_mod.report_to_dict(bounds_mod.verify(H, config))
        doc["alpha_detail"] = report_mod.alpha_to_dict(
            analytic_connectivity(H, config))
    sys.stdout.write(report_mod.render(doc, args.format))
    return 0


def _parse_size_weights(text):
    weights = {}
    for item in text.split(","):
        size, _, weight = item.partition(":")
        weights[int(size)] = float(weight) if weight else 1.0
    return weights


def cmd_generate(args) -> int:
    kwargs = {"n": args.n, "seed": args.seed}
    if args.k is not None:
        kwargs["k"] = args.k
    if args.edges is not None:
        kwargs["edges"] = args.edges
    if args.overlap is not None:
        kwargs["overlap"] = args.overlap
    if args.size_weights is not None:
        kwargs["size_weights"] = _parse_size_weights(args.size_weights)
    H = generate(args.model, **kwargs)
    text = serialize(H)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def _parse_range(text):
    lo, _, hi = text.partition(":")
    lo, hi = int(lo), int(hi or lo)
    if lo > hi:
        raise ValidationError(f"empty range {text!r}")
    return lo, hi


def _ensemble_instance(seed, index, n_range, size_range):
    """Instance for slot `index`; all draws come from SeedSequence((seed, index))."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, index)))
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    sizes = [s for s in range(size_range[0], size_range[1] + 1) if 2 <= s <= n]
    if not sizes:
        raise InfeasibleModel(f"no feasible edge sizes for n={n}")
    capacity = sum(math.comb(n, s) for s in sizes)
    edge_count = int(rng.integers(2, max(3, n) + 1))
    edge_count = min(edge_count, capacity)
    child_seed = int(rng.integers(0, 2 ** 62))
    return nonuniform_random(n, {s: 1.0 for s in sizes}, edge_count, seed=child_seed)


def cmd_verify(args) -> int:
    n_range = _parse_range(args.n_range)
    size_range = _parse_range(args.size_range)
    config = SolverConfig(restarts=args.restarts,
                          max_iterations=args.max_iterations,
                          objective_tolerance=args.tol, seed=args.seed)
    threads = max(1, int(os.environ.get(THREADS_ENV, "1")))

    def run_one(index):
        try:
            H = _ensemble_instance(args.seed, index, n_range, size_range)
            return index, bounds_mod.verify(H, config), None
        except (ValidationError, GuardError) as exc:
            return index, None, exc

    if threads == 1:
        results = [run_one(i) for i in range(args.count)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_one, range(args.count)))
    results.sort(key=lambda r: r[0])

    holds = violated = not_applicable = skipped = 0
    worst = None
    for index, rep, exc in results:
        if rep is None:
            skipped += 1
            print(f"warning: instance {index} skipped: {exc}", file=sys.stderr)
            continue
        doc = report_mod.report_to_dict(rep)
        doc = {"index": index, **doc}
        sys.stdout.write(report_mod.dumps(doc) + "\n")
        for check in rep.checks:
            if check.status == bounds_mod.HOLDS:
                holds += 1
            elif check.status == bounds_mod.VIOLATED:
                violated += 1
            else:
                not_applicable += 1
            if check.slack is not None and (worst is None or check.slack < worst[2]):
                worst = (index, check.name, check.slack)
    summary = {
        "summary": {
            "instances": args.count,
            "skipped": skipped,
            "holds": holds,
            "violated": violated,
            "not_applicable": not_applicable,
            "worst_slack": None if worst is None else
                {"index": worst[0], "name": worst[1], "slack": worst[2]},
        }
    }
    sys.stdout.write(report_mod.dumps(summary) + "\n")
    return 0 if violated == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperalpha",
        description="Connectivity of general hypergraphs via tensor Laplacian "
                    "forms, with combinatorial invariants and bound checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute quantities for one instance")
    p.add_argument("--what", required=True,
                   choices=["alpha", "iso", "diameter", "lambda2", "bounds", "all"])
    p.add_argument("--in", dest="infile", required=True, metavar="PATH")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--allow-singletons", action="store_true")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="write a generated instance file")
    p.add_argument("--model", required=True,
                   choices=["complete", "uniform-random", "nonuniform-random",
                            "hyperpath"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--edges", type=int)
    p.add_argument("--overlap", type=int)
    p.add_argument("--size-weights", metavar="S:W,S:W,...")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, metavar="PATH")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check bound inequalities on an ensemble")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n-range", default="4:6", metavar="LO:HI")
    p.add_argument("--size-range", default="3:4", metavar="LO:HI")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
