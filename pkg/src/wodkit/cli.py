"""Command-line front end.

Exit codes: ``decide``, ``verify`` and ``check-cert`` return 0 for yes, 1 for
no; every command returns 2 on usage, I/O or guard errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds, kernel, miner, reductions
from .errors import WodError
from .graph import format_graph, parse_graph, read_graph
from .harness import REDUCTIONS, default_suite, verify_reduction

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _fmt_set(vs) -> str:
    return "{" + ", ".join(str(v) for v in sorted(vs)) + "}"


def _print_cert(cert, as_json: bool) -> None:
    if as_json:
        print(json.dumps(cert.to_json(), sort_keys=True))
        return
    print(cert.value)
    print(f"witness: {_fmt_set(cert.witness)}")
    if cert.kind == "wod":
        print(f"dominated: {_fmt_set(cert.dominated)}")
    else:
        print(f"closure: {_fmt_set(cert.closure)}")


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    if args.command == "kappa":
        _print_cert(kernel.kappa(g, force=args.force), args.json)
    elif args.command == "kappa-prime":
        _print_cert(kernel.kappa_prime(g, force=args.force), args.json)
    else:
        value, cert = kernel.kappa_q(g, force=args.force)
        if args.json:
            print(json.dumps({"kappa_q": value, "certificate": cert.to_json()}, sort_keys=True))
        else:
            print(value)
            print(f"evidence: {cert.kind}")
            print(f"witness: {_fmt_set(cert.witness)}")
    return 0


def cmd_greedy(args) -> int:
    g = read_graph(args.graph)
    _print_cert(bounds.greedy_wod(g), args.json)
    return 0


def cmd_decide(args) -> int:
    g = read_graph(args.graph)
    cert = None
    if args.problem == "wod-atleast":
        answer, cert = bounds.decide_kappa_at_least(g, args.k, force=args.force)
    elif args.problem == "nonwod-atmost":
        answer, cert = bounds.decide_kappa_prime_at_most(g, args.k, force=args.force)
    else:
        answer = bounds.decide_kappa_q_at_least(g, args.k, force=args.force)
    print("yes" if answer else "no")
    if cert is not None:
        print(json.dumps(cert.to_json(), sort_keys=True))
    return EXIT_YES if answer else EXIT_NO


def cmd_reduce(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    name = args.reduction
    if name == "oddset-to-wod":
        out = reductions.reduce_oddset_to_wod(reductions.parse_oddset(text, args.k))
    elif name == "kq-to-oddset":
        inst = reductions.reduce_kq_to_oddset(parse_graph(text), args.k)
        labels = [f"label {lab} {v}" for lab, v in sorted(inst.labels.items(), key=lambda kv: kv[1])]
        r = " ".join(str(v) for v in sorted(inst.side_r))
        body = format_graph(inst.graph, [f"reduction: {name}", f"R: {r}", f"k: {inst.k}", *labels])
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(body)
        print(f"order {inst.graph.order} parameter {inst.k} |R| {len(inst.side_r)} |B| {len(inst.side_b)}")
        return 0
    else:
        build = {
            "wod-to-nonwod": reductions.reduce_wod_to_nonwod,
            "nonwod-to-bipartite": reductions.reduce_nonwod_to_bipartite,
            "nonwod-to-kq": reductions.reduce_nonwod_to_kq,
        }[name]
        out = build(parse_graph(text), args.k)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(format_graph(out.graph, out.comments(name)))
    print(f"order {out.graph.order} parameter {out.parameter} question {out.question} {out.threshold}")
    return 0


def cmd_verify(args) -> int:
    suite = default_suite(args.reduction, args.max_n, args.max_k, args.random, args.seed)
    report = verify_reduction(args.reduction, suite, budget=args.budget, workers=args.threads)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=1, sort_keys=True)
    print(
        f"{report.reduction}: {report.agreed}/{report.total} agreed, "
        f"{len(report.skipped)} skipped, {len(report.counterexamples)} counterexamples"
    )
    return EXIT_YES if report.ok else EXIT_NO


def cmd_mine(args) -> int:
    result = miner.mine(
        args.n,
        ratio=Fraction(args.ratio),
        trials=args.trials,
        seed=args.seed,
        edge_prob=Fraction(args.edge_prob),
        force=args.force,
        workers=args.threads,
    )
    if args.output:
        result.write(args.output)
    hist = " ".join(f"{k}:{v}" for k, v in sorted(result.histogram.items()))
    print(f"histogram {hist}")
    print(f"best kappa_q {result.best.kappa_q} (trial {result.best.trial})")
    frac = Fraction(len(result.hits), result.trials)
    print(f"hits {len(result.hits)}/{result.trials} with kappa_q <= {result.threshold} ({float(frac):.4f})")
    return 0


def cmd_check_cert(args) -> int:
    g = read_graph(args.graph)
    with open(args.cert, encoding="utf-8") as fh:
        data = json.load(fh)
    if "certificate" in data:
        data = data["certificate"]
    ok = kernel.verify_certificate(g, kernel.certificate_from_json(data))
    print("valid" if ok else "invalid")
    return EXIT_YES if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wodkit", description="Weak odd domination toolkit")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for verify/mine")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("kappa", "kappa-prime", "kappa-q"):
        p = sub.add_parser(name, help=f"exact {name} with certificate")
        p.add_argument("graph")
        p.add_argument("--json", action="store_true")
        p.add_argument("--force", action="store_true", help="lift the exact-solver order guard")
        p.set_defaults(func=cmd_solve)

    p = sub.add_parser("greedy", help="greedy WOD certificate")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("decide", help="FPT decision procedures")
    p.add_argument("problem", choices=["wod-atleast", "nonwod-atmost", "kq-atleast"])
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("reduce", help="build a reduction gadget")
    p.add_argument("reduction", choices=sorted(REDUCTIONS))
    p.add_argument("input")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="cross-check a reduction on small instances")
    p.add_argument("reduction", choices=sorted(REDUCTIONS))
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-k", type=int, default=2)
    p.add_argument("--random", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, help="node cap per bounded search")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mine", help="search random graphs for small kappa_Q")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--ratio", default="811/1000")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", default="1/2")
    p.add_argument("--force", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("check-cert", help="re-verify a certificate")
    p.add_argument("graph")
    p.add_argument("cert")
    p.set_defaults(func=cmd_check_cert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        args.threads = os.cpu_count() or 1
    if getattr(args, "k", 0) is None and args.command == "reduce" and args.reduction != "oddset-to-wod":
        parser.error("reduce needs -k")
    try:
        return args.func(args)
    except (WodError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
