"""Command-line interface.

Exit codes: 0 success, 1 negative answer (not colourable / not a cograph),
2 usage or parse error.  Exit-1 results always carry a machine-readable
witness (a P4 or a box-cograph certificate) when one exists.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from .certificate import BoxCertificate, certify_non_colourable
from .cotree import (
    Cotree,
    P4Witness,
    build_cotree,
    cotree_to_json,
    cotree_to_text,
)
from .ferrers import (
    build_ferrers,
    build_ferrers_fast,
    build_ferrers_naive,
    render_ascii,
    render_svg,
)
from .generate import deep_alternating_cotree, random_cotree
from .graphs import Graph, GraphFormatError, parse_edge_list, parse_graph6
from .oracle import (
    BudgetExceededError,
    OracleBudget,
    kappa_hat_oracle,
    lambda_hat_oracle,
)
from .sequences import (
    KLColouring,
    bichromatic_number,
    cochromatic_number,
    is_kl_colourable,
    kappa_hat,
    kappa_hat_fast,
    kappa_hat_naive,
    lambda_hat,
    lambda_hat_naive,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args: argparse.Namespace) -> Graph:
    text = _read_input(args.input)
    if args.format == "g6":
        return parse_graph6(text)
    return parse_edge_list(text)


def _p4_payload(g: Graph, w: P4Witness) -> str:
    return json.dumps({"p4": [g.label(v) for v in w.vertices()]})


def _cert_payload(g: Graph, cert: BoxCertificate) -> str:
    vs = sorted(cert.vertices)
    members = frozenset(vs)
    edges = [
        [g.label(u), g.label(v)]
        for u, v in g.edges()
        if u in members and v in members
    ]
    return json.dumps(
        {
            "k": cert.k,
            "l": cert.l,
            "vertices": [g.label(v) for v in vs],
            "induced_edges": edges,
        }
    )


def _colouring_payload(g: Graph, col: KLColouring) -> str:
    return json.dumps(
        {
            "independent_sets": [
                sorted(g.label(v) for v in part) for part in col.independent_parts
            ],
            "cliques": [
                sorted(g.label(v) for v in part) for part in col.clique_parts
            ],
        }
    )


def _need_cotree(g: Graph) -> Cotree:
    built = build_cotree(g)
    if isinstance(built, P4Witness):
        print(_p4_payload(g, built))
        raise SystemExit(EXIT_NEGATIVE)
    return built


def cmd_recognize(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    built = build_cotree(g)
    if isinstance(built, P4Witness):
        print(_p4_payload(g, built))
        return EXIT_NEGATIVE
    print(cotree_to_json(built) if args.json else cotree_to_text(built))
    return EXIT_OK


def _cmd_sequence(args: argparse.Namespace, which: str) -> int:
    g = _load_graph(args)
    if args.oracle:
        budget = OracleBudget(max_vertices=args.budget)
        fn = kappa_hat_oracle if which == "kappa" else lambda_hat_oracle
        print(fn(g, budget).to_text())
        return EXIT_OK
    t = _need_cotree(g)
    if which == "kappa":
        seq = kappa_hat_naive(t) if args.naive else kappa_hat_fast(t)
    else:
        seq = lambda_hat_naive(t) if args.naive else lambda_hat(t)
    print(seq.to_text())
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    t = _need_cotree(g)
    if is_kl_colourable(kappa_hat(t), args.k, args.l):
        print(json.dumps({"colourable": True, "k": args.k, "l": args.l}))
        return EXIT_OK
    result = certify_non_colourable(t, args.k, args.l)
    assert isinstance(result, BoxCertificate)
    print(_cert_payload(g, result))
    return EXIT_NEGATIVE


def cmd_certify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    t = _need_cotree(g)
    result = certify_non_colourable(t, args.k, args.l)
    if isinstance(result, BoxCertificate):
        print(_cert_payload(g, result))
        return EXIT_NEGATIVE
    print(_colouring_payload(g, result))
    return EXIT_OK


def cmd_ferrers(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    t = _need_cotree(g)
    f = build_ferrers(t)
    if args.style == "svg":
        print(render_svg(f))
    elif args.style == "json":
        print(json.dumps([[f.label(v) for v in row] for row in f.rows]))
    else:
        print(render_ascii(f))
    return EXIT_OK


def cmd_params(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if args.oracle:
        seq = kappa_hat_oracle(g, OracleBudget(max_vertices=args.budget))
    else:
        seq = kappa_hat(_need_cotree(g))
    print(
        json.dumps(
            {
                "chi": seq[0] if len(seq) else 0,
                "theta": len(seq),
                "bichromatic": bichromatic_number(seq) if len(seq) else 0,
                "cochromatic": cochromatic_number(seq) if len(seq) else 0,
            }
        )
    )
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    print("n,naive_ms,fast_ms")
    for n in args.sizes:
        for _ in range(args.trials):
            if args.adversarial:
                t = deep_alternating_cotree(n)
            else:
                t = random_cotree(n, rng)
            if args.algorithm == "kappa":
                naive_fn, fast_fn = kappa_hat_naive, kappa_hat_fast
            else:
                naive_fn, fast_fn = build_ferrers_naive, build_ferrers_fast
            t0 = time.perf_counter()
            naive_out = naive_fn(t)
            t1 = time.perf_counter()
            fast_out = fast_fn(t)
            t2 = time.perf_counter()
            if args.algorithm == "kappa" and naive_out != fast_out:
                print("variant mismatch", file=sys.stderr)
                return EXIT_NEGATIVE
            print(f"{n},{(t1 - t0) * 1000:.3f},{(t2 - t1) * 1000:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klcograph",
        description="(k,l)-colourability of cographs: sequences, witnesses, diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="input file, or - for standard input")
        p.add_argument(
            "--format", choices=("edges", "g6"), default="edges",
            help="edge-list (default) or graph6",
        )

    p = sub.add_parser("recognize", help="build the cotree or report a P4")
    add_input(p)
    p.add_argument("--json", action="store_true", help="emit the cotree as JSON")
    p.set_defaults(fn=cmd_recognize)

    for name in ("kappa", "lambda"):
        p = sub.add_parser(name, help=f"print the {name} sequence")
        add_input(p)
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--fast", action="store_true", default=True)
        mode.add_argument("--naive", action="store_true")
        mode.add_argument(
            "--oracle", action="store_true",
            help="brute force; works on non-cographs within the budget",
        )
        p.add_argument("--budget", type=int, default=12)
        p.set_defaults(fn=lambda a, which=name: _cmd_sequence(a, which))

    p = sub.add_parser("check", help="decide (k,l)-colourability")
    add_input(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-l", type=int, required=True)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("certify", help="colouring or box-cograph certificate")
    add_input(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-l", type=int, required=True)
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("ferrers", help="Ferrers diagram representation")
    add_input(p)
    style = p.add_mutually_exclusive_group()
    style.add_argument(
        "--ascii", dest="style", action="store_const", const="ascii", default="ascii"
    )
    style.add_argument("--svg", dest="style", action="store_const", const="svg")
    style.add_argument("--json", dest="style", action="store_const", const="json")
    p.set_defaults(fn=cmd_ferrers)

    p = sub.add_parser("params", help="chi, theta, bichromatic, cochromatic")
    add_input(p)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--budget", type=int, default=12)
    p.set_defaults(fn=cmd_params)

    p = sub.add_parser("bench", help="naive vs fast timing table (CSV)")
    p.add_argument("--sizes", type=int, nargs="+", default=[1024, 2048, 4096])
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--adversarial", action="store_true")
    p.add_argument("--algorithm", choices=("kappa", "ferrers"), default="kappa")
    p.set_defaults(fn=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (GraphFormatError, BudgetExceededError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
