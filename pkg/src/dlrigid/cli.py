"""Command-line front end.

Exit codes: 0 success, 2 unreadable input, 3 violated precondition,
4 internal theorem violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .construction import Mode, decompose, random_construct, random_construct_sized, replay
from .errors import FormatError, GraphError, PreconditionViolated, ReplayPreconditionFailure, TheoremViolation
from .formats import (
    certificate_from_json,
    certificate_to_json,
    dumps,
    graph_to_json,
    load_graph,
    load_json,
    realisation_to_json,
    separation_to_json,
)
from .global_rigidity import build_witness
from .graph import EdgeKind, MixedGraph
from .rank_matroid import MatroidView
from .realisation import Domain, congruence_residual, equivalence_residual, generic_realisation
from .separations import is_k_connected, two_separations
from .structure import ear_decomposition_mixed, matroid_components

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_THEOREM = 4


def analyze(g: MixedGraph, seed: int = 0, trials: int = 3, ears: bool = False, separations: bool = False) -> dict:
    view = MatroidView(g, trials=trials, seed=seed)
    n, m = g.n, g.m
    comps = matroid_components(view) if m else []
    rank = view.rank() if m else 0
    rigid = n <= 1 or rank == 2 * n - 2
    m_connected = m >= 2 and len(comps) == 1
    if m >= 2 and rank == m - 1 and len(comps) == 1:
        circuit = "mixed" if g.is_mixed() else "pure"
    else:
        circuit = "none"
    two_connected = is_k_connected(g, 2)
    seps = two_separations(g) if two_connected else None
    dbal = None if seps is None else all(s.direction_balanced for s in seps)
    lbal = None if seps is None else all(s.length_balanced for s in seps)
    if g.is_mixed() and m_connected:
        globally_rigid = dbal
    elif len(g.length_edges) == 1:
        globally_rigid = rigid
    else:
        globally_rigid = None
    report = {
        "counts": {"vertices": n, "direction": len(g.direction_edges), "length": len(g.length_edges)},
        "rank": rank,
        "independent": rank == m,
        "circuit": circuit,
        "m_connected": m_connected,
        "matroid_components": len(comps),
        "rigid": rigid,
        "redundantly_rigid": rigid and all(len(c) > 1 for c in comps),
        "two_connected": two_connected,
        "direction_balanced": dbal,
        "length_balanced": lbal,
        "globally_rigid": globally_rigid,
        "oracle": {"primes": [str(p) for p in view.primes], "trials": trials, "seed": seed},
    }
    if ears:
        dec = ear_decomposition_mixed(view)
        items = dec.to_json()
        for i, item in enumerate(items):
            _, ys = dec.vertex_split(i)
            item["new_vertices"] = len(ys)
        report["ears"] = items
    if separations:
        if seps is None:
            raise PreconditionViolated("separations need a 2-connected graph")
        report["separations"] = [separation_to_json(s) for s in seps]
    return report


def export_dot(g: MixedGraph) -> str:
    lines = ["graph G {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for e in sorted(g.edges, key=lambda e: e.key):
        style = "dashed" if e.kind is EdgeKind.DIRECTION else "solid"
        lines.append(f'  "{e.u}" -- "{e.v}" [style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def witness(g: MixedGraph, seed: int = 0) -> dict:
    p = generic_realisation(g, seed=seed, domain=Domain.RATIONAL)
    q, sep = build_witness(g, p)
    return {
        "realisation_p": realisation_to_json(p),
        "realisation_q": realisation_to_json(q),
        "separation": separation_to_json(sep),
        "residuals": {
            "equivalence": equivalence_residual(g, p, q),
            "congruence": congruence_residual(p, q),
        },
    }


def _cmd_analyze(args) -> str:
    g = load_graph(args.path)
    return dumps(analyze(g, args.seed, args.trials, args.ears, args.separations))


def _cmd_certify(args) -> str:
    g = load_graph(args.path)
    cert = decompose(MatroidView(g, trials=args.trials, seed=args.seed), Mode(args.mode))
    return dumps(certificate_to_json(cert))


def _cmd_replay(args) -> str:
    cert = certificate_from_json(load_json(args.path))
    return dumps(graph_to_json(replay(cert)))


def _cmd_generate(args) -> str:
    if args.vertices is not None:
        g, cert = random_construct_sized(args.seed, args.vertices, Mode(args.mode), args.add_rate)
    else:
        g, cert = random_construct(args.seed, args.moves, Mode(args.mode))
    return dumps({"graph": graph_to_json(g), "certificate": certificate_to_json(cert)})


def _cmd_witness(args) -> str:
    return dumps(witness(load_graph(args.path), args.seed))


def _cmd_export_dot(args) -> str:
    return export_dot(load_graph(args.path))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dlrigid", description="Direction-length rigidity toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def oracle_flags(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=3)

    p = sub.add_parser("analyze", help="report counts and verdicts for a graph")
    p.add_argument("path", help="graph file (JSON or text), '-' for stdin")
    p.add_argument("--ears", action="store_true")
    p.add_argument("--separations", action="store_true")
    oracle_flags(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("certify", help="emit a construction certificate")
    p.add_argument("path")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.DIRECTION_BALANCED.value)
    oracle_flags(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("replay", help="rebuild a graph from a certificate")
    p.add_argument("path")
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("generate", help="random graph with its certificate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--moves", type=int, default=8)
    p.add_argument("--vertices", type=int, help="grow to exactly this many vertices instead of counting moves")
    p.add_argument("--add-rate", type=float, default=0.0, help="chance of an extra edge after each growth step")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.DIRECTION_BALANCED.value)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("witness", help="equivalent but non-congruent realisation")
    p.add_argument("path")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("export-dot", help="Graphviz rendering")
    p.add_argument("path")
    p.set_defaults(func=_cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (FormatError, GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"parse error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionViolated, ReplayPreconditionFailure) as exc:
        print(f"precondition error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
