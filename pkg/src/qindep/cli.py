"""Command-line interface: ``qindep <command> ...``.

Graph arguments are catalog ids (``petersen``), family strings
(``kneser:5:2``, ``co-cycle:7``) or files (``@graph.g6``, ``@graph.dimacs``).
Exit codes: 0 ok, 1 computation failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .catalog import CATALOG, get_graph
from .certificates import ProjectorFamily, verify_projective_packing, verify_quantum_certificate
from .errors import NumericalFailure, QIndepError
from .exact import independence_number
from .graph import Graph
from .graphio import emit_dimacs, emit_graph6, read_graph_file
from .linalg import ZERO_REL_TOL
from .report import certify_alpha_q
from .theta import lovasz_theta, theta_regular_cap
from .weights import MODES, search_restarts, search_weights


class UsageError(Exception):
    pass


def load_graph(arg: str) -> Graph:
    if arg.startswith("@"):
        path = arg[1:]
        try:
            return read_graph_file(path)
        except FileNotFoundError:
            raise UsageError(f"file not found: {path}") from None
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return get_graph(arg)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False)


def cmd_catalog(args) -> int:
    if args.json:
        out = []
        for name, (factory, desc) in CATALOG.items():
            g = factory()
            out.append({"id": name, "n": g.n, "m": g.m, "description": desc})
        print(_dump(out))
    else:
        for name, (factory, desc) in CATALOG.items():
            g = factory()
            print(f"{name:<20} n={g.n:<3} m={g.m:<5} {desc}")
    return 0


def _report_kwargs(args) -> dict:
    return dict(
        search_budget=args.budget if args.search else 0,
        search_mode=args.mode,
        search_restarts_count=args.restarts,
        seed=args.seed,
        workers=args.jobs,
        theta=not args.no_theta,
        theta_iters=args.theta_iters,
        zero_tol=args.tol_zero,
    )


def cmd_bounds(args) -> int:
    report = certify_alpha_q(load_graph(args.graph), **_report_kwargs(args))
    print(report.to_json() if args.json else report.to_table())
    return 0


def cmd_certify(args) -> int:
    report = certify_alpha_q(load_graph(args.graph), **_report_kwargs(args))
    if args.json:
        print(report.to_json())
    else:
        print(report.certification.value)
        print(f"alpha = {report.alpha}; {report.reason}", file=sys.stderr)
    return 0


def cmd_search(args) -> int:
    g = load_graph(args.graph)
    target = args.target if args.target is not None else independence_number(g).size
    if args.trace:
        if args.restarts != 1:
            raise UsageError("--trace needs a single chain (--restarts 1)")
        with open(args.trace, "w") as fh:
            best = search_weights(g, target, args.mode, args.budget, args.seed, rel_tol=args.tol_zero, trace=fh)
        results = [best]
    else:
        best, results = search_restarts(
            g, target, args.mode, args.budget, range(args.seed, args.seed + args.restarts),
            workers=args.jobs, rel_tol=args.tol_zero,
        )
    if args.save_matrix:
        a = best.best_matrix.entries
        with open(args.save_matrix, "w") as fh:
            fh.write(_dump({"re": np.real(a).tolist(), "im": np.imag(a).tolist()}) + "\n")
    if args.json:
        print(_dump({
            "graph": g.label or "graph",
            "target": target,
            "best": best.to_dict(),
            "runs": [r.to_dict() for r in results],
        }))
    else:
        for r in results:
            flag = "reached" if r.reached_target else "not reached"
            print(f"seed {r.seed:<4} bound {r.best_bound:<3} target {target:<3} {flag:<12} evals {r.evaluations}")
        print(f"best: bound {best.best_bound} (seed {best.seed}, mode {best.mode})")
    return 0


def cmd_theta(args) -> int:
    g = load_graph(args.graph)
    res = lovasz_theta(g, args.iters, args.tol)
    cap = theta_regular_cap(g)
    if args.json:
        out = res.to_dict()
        out["graph"] = g.label or "graph"
        out["regular_cap"] = cap.value if cap.applicable else None
        print(_dump(out))
    else:
        print(f"theta <= {res.value:.6f}  ({res.iterations} iterations)")
        if cap.applicable:
            print(f"ratio-bound cap {cap.value:.6f}")
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    try:
        fam = ProjectorFamily.load(args.family)
    except FileNotFoundError:
        raise UsageError(f"file not found: {args.family}") from None
    if args.quantum:
        if args.t is None:
            raise UsageError("--quantum needs --t")
        verdict = verify_quantum_certificate(g, args.t, fam)
        kind = "quantum certificate"
    else:
        verdict = verify_projective_packing(g, fam)
        kind = "projective packing"
    if args.json:
        print(_dump(verdict.to_dict()))
    else:
        status = "VALID" if verdict.valid else "INVALID"
        value = f", value {verdict.value:g}" if verdict.value is not None else ""
        print(f"{kind}: {status}{value}")
        for v in verdict.violations[:20]:
            print(f"  {v.condition} at {v.keys}: residual {v.residual:.3e}")
    return 0


def cmd_export(args) -> int:
    g = load_graph(args.graph)
    print(emit_graph6(g) if args.format == "g6" else emit_dimacs(g), end="\n" if args.format == "g6" else "")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--tol-zero", type=float, default=ZERO_REL_TOL,
                        help="relative zero-eigenvalue threshold (default %(default)g)")
    common.add_argument("--seed", type=int, default=0)

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--mode", choices=MODES, default="real")
    search.add_argument("--budget", type=int, default=5000, help="evaluations per chain")
    search.add_argument("--restarts", type=int, default=1, help="chains with seeds seed..seed+R-1")
    search.add_argument("--jobs", type=int, default=1, help="worker processes for restarts")

    parser = argparse.ArgumentParser(prog="qindep", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="named graphs")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=cmd_catalog)

    for name, func, text in (("bounds", cmd_bounds, "bound chain for a graph"),
                             ("certify", cmd_certify, "certify alpha_q = alpha")):
        p = sub.add_parser(name, parents=[common, search], help=text)
        p.add_argument("graph")
        p.add_argument("--search", action="store_true", help="anneal weights if the inertia bound is not tight")
        p.add_argument("--no-theta", action="store_true", help="skip the theta computation")
        p.add_argument("--theta-iters", type=int, default=5000)
        p.set_defaults(func=func)

    p = sub.add_parser("search-weights", parents=[common, search], help="anneal a weight matrix")
    p.add_argument("graph")
    p.add_argument("--target", type=int, help="bound to aim for (default: alpha)")
    p.add_argument("--trace", metavar="FILE", help="write a JSON-lines trace of the chain")
    p.add_argument("--save-matrix", metavar="FILE", help="write the best matrix as JSON")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("theta", parents=[common], help="Lovasz theta estimate")
    p.add_argument("graph")
    p.add_argument("--iters", type=int, default=5000)
    p.add_argument("--tol", type=float, default=1e-4)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("verify-certificate", parents=[common], help="check a projector family")
    p.add_argument("graph")
    p.add_argument("family", help="JSON projector family")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--packing", action="store_true", help="projective packing (default)")
    kind.add_argument("--quantum", action="store_true", help="quantum independence certificate")
    p.add_argument("--t", type=int, help="certificate size for --quantum")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="write a graph as graph6 or DIMACS")
    p.add_argument("graph")
    p.add_argument("--format", choices=["g6", "dimacs"], default="g6")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qindep: error: {exc}", file=sys.stderr)
        return 2
    except NumericalFailure as exc:
        print(f"qindep: computation failed: {exc}", file=sys.stderr)
        return 1
    except QIndepError as exc:
        print(f"qindep: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
