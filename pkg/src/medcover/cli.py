"""Command-line pipeline: reduce graphs, solve medians, certify bounds,
extract covers, and sweep the whole chain against the oracles.

Outputs are JSON for single runs and CSV for sweeps; both are deterministic
for a fixed seed and config (dict keys sorted, floats via repr, fixed row
order), so repeated runs are byte-identical and diffable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .config import DEFAULT_CONFIG
from .costs import (
    closed_form_median_cost,
    cluster_points,
    extra_cost,
    weiszfeld,
)
from .covers import SoundnessReport, soundness_assemble
from .decomposition import (
    certify_lower_bound,
    decompose,
    trace_to_dict,
)
from .errors import MedcoverError
from .graphs import Graph, bridge_structure, classify, is_star, parse_edge_list
from .oracle import (
    min_vertex_cover,
    opt_continuous,
    opt_discrete,
    oracle_report_to_dict,
    random_triangle_free,
)
from .reduction import (
    auto_no_regime,
    instance_from_json,
    instance_to_json,
    parse_hyperedges,
    predict_gap_graph,
    reduce_graph,
    reduce_hypergraph,
)
from .suites import run_all


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read_text(path))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _num(x: object) -> object:
    """JSON-friendly number: exact rationals become their float value (the
    exact string is carried separately where it matters)."""
    if isinstance(x, Fraction):
        return float(x)
    return x


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_reduce(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    inst = reduce_graph(g, k=args.k, objective=args.objective)
    pred = predict_gap_graph(g.num_edges, args.k, args.objective, args.delta)
    if args.out:
        _emit(instance_to_json(inst), args.out)
    payload = {
        "instance_points": len(inst.points),
        "dimension": inst.dimension,
        "yes_cost": pred.yes_cost,
        "no_cost_lower": pred.no_cost_lower,
        "parameters": dict(pred.parameters),
        "auto_no_regime": auto_no_regime(g, args.k),
        "out": args.out,
    }
    sys.stdout.write(_json(payload))
    return 0


def cmd_hyper_reduce(args: argparse.Namespace) -> int:
    h = parse_hyperedges(_read_text(args.graph), d=args.d, k=args.k)
    inst = reduce_hypergraph(h)
    if args.out:
        _emit(instance_to_json(inst), args.out)
    payload = {
        "d": h.d,
        "num_vertices": h.num_vertices,
        "hyperedges": len(h.hyperedges),
        "candidate_centers": len(inst.candidate_centers or ()),
        "out": args.out,
    }
    sys.stdout.write(_json(payload))
    return 0


def cmd_median(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    sol = weiszfeld(cluster_points(g), tolerance=args.tol)
    closed = closed_form_median_cost(g)
    payload = {
        "cost": sol.cost,
        "center": list(sol.center),
        "iterations": sol.iterations,
        "converged": sol.converged,
        "closed_form": closed,
    }
    if not is_star(g):
        extra = extra_cost(g, "median", tolerance=args.tol)
        payload["extra_cost"] = {"value": _num(extra.value), "basis": extra.basis}
    _emit(_json(payload), args.out)
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cls = classify(g)
    payload: dict = {"class": cls.describe(), "edges": g.num_edges}
    if is_star(g):
        payload["note"] = "stars need no decomposition; their cost is the closed form"
        payload["safe"] = None
        payload["ultra_safe"] = None
    else:
        trace = decompose(g, "safe")
        cert = certify_lower_bound(g, "safe")
        payload["safe"] = {
            "trace": trace_to_dict(trace),
            "bound": cert.bound,
            "derivation": [[label, v] for label, v in cert.derivation],
        }
        if bridge_structure(g) is None:
            ucert = certify_lower_bound(g, "ultra_safe")
            utrace = decompose(g, "ultra_safe")
            payload["ultra_safe"] = {
                "trace": trace_to_dict(utrace),
                "bound": ucert.bound,
                "derivation": [[label, v] for label, v in ucert.derivation],
            }
        else:
            payload["ultra_safe"] = None
            payload["note"] = "bridge graph: ultra-safe mode not applicable"
    _emit(_json(payload), args.out)
    return 0


def _pad_blocks(blocks: list[list[int]], want: int) -> list[list[int]]:
    """Split blocks (largest first, last element peeled off) until there are
    exactly `want`; splitting never raises clustering cost, so the padded
    partition is still optimal-or-better."""
    blocks = [sorted(b) for b in blocks]
    while len(blocks) < want:
        big = max(range(len(blocks)), key=lambda i: (len(blocks[i]), -i))
        if len(blocks[big]) < 2:
            raise MedcoverError("cannot pad partition: all blocks are singletons")
        blocks.append([blocks[big].pop()])
    return blocks


def _report_payload(rep: SoundnessReport) -> dict:
    return {
        "t1": rep.t1,
        "t2": rep.t2,
        "t3": rep.t3,
        "t4": rep.t4,
        "total_cover_size": rep.total_cover_size,
        "cover": sorted(rep.cover),
        "procedures_path": rep.procedures_path,
        "epsilon": rep.epsilon_delta[0],
        "delta": rep.epsilon_delta[1],
        "beta": rep.beta,
        "predicted_ceiling": rep.predicted_ceiling,
        "per_cluster": [
            {
                "cover": sorted(c.cover),
                "size": c.size,
                "bound_kind": c.bound_kind,
                "bound_value": _num(c.bound_value),
                "delta_used": _num(c.delta_used),
            }
            for c in rep.per_cluster
        ],
    }


def cmd_cover(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    blocks_needed = math.ceil(args.beta * args.k)
    if blocks_needed > g.num_edges:
        raise MedcoverError(
            f"ceil(beta*k) = {blocks_needed} blocks exceed the {g.num_edges} edges"
        )
    oracle = opt_continuous(
        reduce_graph(g, k=blocks_needed, objective=args.objective)
    )
    blocks = _pad_blocks([list(b) for b in oracle.partition], blocks_needed)
    rep = soundness_assemble(
        g, blocks, k=args.k, beta=args.beta, objective=args.objective, delta=args.delta
    )
    payload = _report_payload(rep)
    payload["oracle_cost"] = oracle.optimal_cost
    payload["min_vertex_cover"] = (
        len(min_vertex_cover(g)) if g.num_edges <= 24 else None
    )
    _emit(_json(payload), args.out)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    text = _read_text(args.graph)
    if text.lstrip().startswith("{"):
        inst = instance_from_json(text)
        rep = opt_discrete(inst) if inst.candidate_centers else opt_continuous(inst)
    else:
        if args.k is None:
            raise MedcoverError("--k is required when the input is an edge list")
        g = parse_edge_list(text)
        rep = opt_continuous(reduce_graph(g, k=args.k, objective=args.objective))
    _emit(_json(oracle_report_to_dict(rep)), args.out)
    return 0


def cmd_verify_lemmas(args: argparse.Namespace) -> int:
    if args.tol <= 0:
        raise MedcoverError("tolerance must be positive")
    report = run_all(max_edges=args.max_edges, seed=args.seed, trials=args.trials)
    _emit(_json(report), args.out)
    if not report["all_passed"]:
        for s in report["suites"]:
            for f in s["failures"]:
                sys.stderr.write(f"{s['name']}: {f}\n")
        return 1
    return 0


_SWEEP_FIELDS = (
    "trial",
    "seed",
    "n",
    "m",
    "k",
    "blocks",
    "median_yes",
    "median_opt",
    "median_complete",
    "means_yes",
    "means_opt",
    "means_complete",
    "opt_at_blocks",
    "beta_monotone",
    "cover_size",
    "cover_valid",
    "cover_le_2k",
    "procedures_path",
)


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = []
    produced = 0
    attempt = 0
    while produced < args.trials and attempt < args.trials * 50:
        seed_i = args.seed * 10_000 + attempt
        attempt += 1
        g = random_triangle_free(args.n, args.d, seed=seed_i)
        if not 2 <= g.num_edges <= args.max_edges:
            continue
        m = g.num_edges
        k = len(min_vertex_cover(g))
        blocks_needed = math.ceil(args.beta * k)
        med = opt_continuous(reduce_graph(g, k=k, objective="median"))
        mea = opt_continuous(reduce_graph(g, k=k, objective="means"))
        row: dict[str, object] = {
            "trial": produced,
            "seed": seed_i,
            "n": g.num_vertices,
            "m": m,
            "k": k,
            "blocks": blocks_needed,
            "median_yes": repr(m - k / 2),
            "median_opt": repr(med.optimal_cost),
            "median_complete": str(med.optimal_cost <= m - k / 2 + 1e-6).lower(),
            "means_yes": repr(float(m - k)),
            "means_opt": repr(mea.optimal_cost),
            "means_complete": str(mea.optimal_cost <= m - k + 1e-9).lower(),
        }
        if blocks_needed <= m:
            base = med if args.objective == "median" else mea
            ob = opt_continuous(
                reduce_graph(g, k=blocks_needed, objective=args.objective)
            )
            row["opt_at_blocks"] = repr(ob.optimal_cost)
            row["beta_monotone"] = str(
                ob.optimal_cost <= base.optimal_cost + 1e-9
            ).lower()
            blocks = _pad_blocks([list(b) for b in ob.partition], blocks_needed)
            rep = soundness_assemble(
                g, blocks, k=k, beta=args.beta,
                objective=args.objective, delta=args.delta,
            )
            row["cover_size"] = rep.total_cover_size
            row["cover_valid"] = "true"
            row["cover_le_2k"] = str(
                rep.total_cover_size <= 2 * k - 2 * args.delta * k + 1e-9
            ).lower()
            row["procedures_path"] = rep.procedures_path
        else:
            for field in ("opt_at_blocks", "beta_monotone", "cover_size",
                          "cover_valid", "cover_le_2k", "procedures_path"):
                row[field] = ""
        rows.append(row)
        produced += 1
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_SWEEP_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    _emit(buf.getvalue(), args.out)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="medcover",
        description="Vertex-cover-to-clustering reductions with certified "
        "bounds, constructive cover extraction, and exhaustive oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    cfg = DEFAULT_CONFIG

    p = sub.add_parser("reduce", help="embed an edge list as a clustering instance")
    p.add_argument("--graph", required=True, help="edge-list file (one 'u v' per line)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--objective", choices=("median", "means"), default="median")
    p.add_argument("--delta", type=float, default=cfg.delta)
    p.add_argument("--out", help="write the instance JSON here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("hyper-reduce", help="embed a d-uniform hyperedge list")
    p.add_argument("--graph", required=True, help="hyperedge file (one vertex list per line)")
    p.add_argument("--d", type=int, default=None, help="hyperedge size (inferred if omitted)")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--out", help="write the instance JSON here")
    p.set_defaults(func=cmd_hyper_reduce)

    p = sub.add_parser("median", help="1-median of a graph's embedded points")
    p.add_argument("--graph", required=True)
    p.add_argument("--tol", type=float, default=cfg.weiszfeld_tol)
    p.add_argument("--out")
    p.set_defaults(func=cmd_median)

    p = sub.add_parser("decompose", help="safe-pair decomposition and certified bounds")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("cover", help="oracle clustering, then cover extraction")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--objective", choices=("median", "means"), default="median")
    p.add_argument("--beta", type=float, default=cfg.beta)
    p.add_argument("--delta", type=float, default=cfg.delta)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("oracle", help="exact optimum (instance JSON or edge list)")
    p.add_argument("--graph", required=True, help="instance JSON or edge-list file")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--objective", choices=("median", "means"), default="median")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify-lemmas", help="run every property suite")
    p.add_argument("--max-edges", type=int, default=5)
    p.add_argument("--seed", type=int, default=cfg.seed)
    p.add_argument("--trials", type=int, default=12)
    p.add_argument("--tol", type=float, default=cfg.tolerance)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("sweep", help="randomized end-to-end sweep, CSV report")
    p.add_argument("--n", type=int, default=8, help="vertices per sampled graph")
    p.add_argument("--d", type=int, default=3, help="max degree of sampled graphs")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--beta", type=float, default=cfg.beta)
    p.add_argument("--delta", type=float, default=cfg.delta)
    p.add_argument("--objective", choices=("median", "means"), default="median")
    p.add_argument("--seed", type=int, default=cfg.seed)
    p.add_argument("--max-edges", type=int, default=12,
                   help="skip sampled graphs with more edges (oracle limit)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MedcoverError, OSError, ValueError, json.JSONDecodeError) as ex:
        sys.stderr.write(f"error: {ex}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
