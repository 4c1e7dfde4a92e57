"""Command-line entry point.

Run a stream::

    wedcs stream.txt --epsilon 0.3 --oracle --validate --checkpoint-every 100

Generate one::

    wedcs --gen random-bipartite --seed 7 --n-left 50 --n-right 50 -m 600 -o s.txt
    wedcs --gen lowerbound --gamma 3 --sidecar h.txt -o lb.txt

Replay a static instance with its H listing through the validators::

    wedcs lb.txt --replay-h h.txt --oracle
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .fractional import verify_feasibility_and_slackness
from .harness import InputError, RunConfig, RunResult, decimal12, run_stream
from .hk import max_matching_size
from .oracles import validate_edcs
from .snapshot import Snapshot
from .streams import (
    StreamError,
    format_sidecar,
    format_stream,
    insert_then_delete,
    lowerbound_stream,
    parse_sidecar,
    parse_stream,
    random_bipartite,
)

EXIT_OK, EXIT_AUDIT, EXIT_INPUT = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wedcs", description=__doc__.splitlines()[0])
    p.add_argument("stream", nargs="?", help="stream file ('-' or omitted for stdin)")
    p.add_argument("--epsilon", default="0.5")
    p.add_argument("--beta", type=int, help="override beta = ceil(36/eps^2)")
    p.add_argument("--visit-cap", type=int, help="override ceil(2 beta^2 / eps)")
    p.add_argument("--mode", choices=("frac", "int"))
    p.add_argument("--deletions", action="store_true")
    p.add_argument("--oracle", action="store_true", help="audit against exact matching numbers")
    p.add_argument("--validate", action="store_true", help="certify EDCS and slackness")
    p.add_argument("--checkpoint-every", type=int, metavar="K")
    p.add_argument("--backend", choices=("auto", "python", "cython"), default="auto")
    p.add_argument("-o", "--output", help="write output here instead of stdout")

    g = p.add_argument_group("generation")
    g.add_argument("--gen", choices=("random-bipartite", "insert-then-delete", "lowerbound"))
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n-left", type=int, default=10)
    g.add_argument("--n-right", type=int, default=10)
    g.add_argument("-m", type=int, default=20, help="number of edge insertions")
    g.add_argument("--rate", type=float, default=0.2, help="fraction of vertices deleted")
    g.add_argument("--gamma", type=int, default=2)
    g.add_argument("--sidecar", help="lowerbound: write the H listing here")
    g.add_argument("--replay-h", metavar="SIDECAR", help="validate the stream's graph with this H")
    return p


def _generate(args, out) -> int:
    if args.gen == "random-bipartite":
        header, events = random_bipartite(args.n_left, args.n_right, args.m, args.seed)
        note = f"random-bipartite n_left={args.n_left} n_right={args.n_right} m={args.m} seed={args.seed}"
    elif args.gen == "insert-then-delete":
        header, events = insert_then_delete(args.n_left, args.n_right, args.m, args.rate, args.seed)
        note = (
            f"insert-then-delete n_left={args.n_left} n_right={args.n_right} m={args.m} "
            f"rate={args.rate} seed={args.seed}"
        )
    else:
        header, events, h_edges = lowerbound_stream(args.gamma)
        note = f"lowerbound gamma={args.gamma} beta={2 * args.gamma**2}"
        if args.sidecar:
            with open(args.sidecar, "w") as fh:
                fh.write(format_sidecar(header, h_edges))
    out.write(format_stream(header, events, note))
    return EXIT_OK


def _replay(args, header, events, out) -> int:
    with open(args.replay_h) as fh:
        h_edges = parse_sidecar(fh, header)
    edges = [(e.u, e.v) for e in events if e.kind == "ie"]
    n_left = header.n_left if header.bipartite else None
    beta = args.beta or RunConfig(epsilon=args.epsilon).params().beta
    snap = Snapshot.build(header.n, beta, edges, h_edges, n_left=n_left)
    edcs = validate_edcs(snap, "all")
    slack = verify_feasibility_and_slackness(snap, "all")
    report = {
        "beta": beta,
        "edcsPass": edcs.passed,
        "slacknessPass": slack.passed,
        "fSize": decimal12(slack.f_size),
        "xSize": decimal12(slack.x_size),
    }
    ok = edcs.passed and slack.passed
    if args.oracle and header.bipartite:
        report["muH"] = max_matching_size(header.n, snap.h, n_left)
        report["muG"] = max_matching_size(header.n, edges, n_left)
    out.write(json.dumps(report) + "\n")
    for msg in slack.failures():
        print(msg, file=sys.stderr)
    return EXIT_OK if ok else EXIT_AUDIT


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if args.gen:
            return _generate(args, out)
        if args.stream in (None, "-"):
            header, events = parse_stream(sys.stdin)
        else:
            with open(args.stream) as fh:
                header, events = parse_stream(fh)
        if args.replay_h:
            return _replay(args, header, events, out)
        config = RunConfig(
            epsilon=args.epsilon,
            beta=args.beta,
            visit_cap=args.visit_cap,
            mode=args.mode,
            deletions=args.deletions,
            oracle=args.oracle,
            validate=args.validate,
            checkpoint_every=args.checkpoint_every,
            backend=args.backend,
        )
        result = RunResult()
        for rec in run_stream(config, header, events, result):
            out.write(rec.to_json() + "\n")
        for msg in result.failures:
            print(f"audit: {msg}", file=sys.stderr)
        return EXIT_OK if result.ok else EXIT_AUDIT
    except (StreamError, InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
