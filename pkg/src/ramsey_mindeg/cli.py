"""Command-line entry point.

Exit codes:
  0   success (for ``oracle``: the graph arrows)
  1   ``oracle`` found a counterexample colouring
  2   domain error (bad hypotheses, budget exceeded, malformed input)
  64  usage error (unknown subcommand, bad or conflicting flags)
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .constructions import construct_example_large_n, construct_example_tight_n
from .errors import RamseyError
from .graph import EdgeColouring, Graph, parse_graph6, to_graph6
from .oracle import arrows, tightness_sweep
from .paths import decompose
from .transversal import MultipartiteView, find_independent_transversal, haxell_condition_holds
from .witness import arrow_witness, triangle_arrow_witness

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64

log = logging.getLogger("ramsey_mindeg")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(name):
    def check(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be positive")
        return value

    return check


def _read_text(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    p = Path(value)
    if p.is_file():
        return p.read_text()
    return value


def _load_graph(value: str) -> Graph:
    return parse_graph6(_read_text(value).strip())


def _load_json(value: str):
    text = _read_text(value)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise RamseyError(f"invalid JSON: {exc}") from None


def _emit(obj) -> None:
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> int:
    if args.example == "tight":
        if args.k is not None or args.n is not None:
            raise UsageError("--k and --n only apply to --example large")
        inst = construct_example_tight_n(args.r, args.t)
    else:
        if args.k is None or args.n is None:
            raise UsageError("--example large needs --k and --n")
        inst = construct_example_large_n(args.r, args.t, args.k, args.n)
    g6 = to_graph6(inst.graph)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "graph.g6").write_text(g6 + "\n")
        (out / "colouring.json").write_text(inst.colouring.dumps() + "\n")
        (out / "parts.json").write_text(json.dumps(inst.parts_json()) + "\n")
    if args.figure:
        from .plotting import draw_colouring

        draw_colouring(inst.colouring, args.figure, inst.parts,
                       title=f"{args.example} example, r={args.r}, t={args.t}, n={inst.graph.n}")
    if args.format == "g6":
        print(g6)
    elif args.format == "dot":
        sys.stdout.write(inst.graph.to_dot(inst.colouring))
    else:
        _emit({
            "graph6": g6,
            "n": inst.graph.n,
            "colouring": inst.colouring.to_json(),
            **inst.parts_json(),
        })
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _load_graph(args.graph)
    _emit(decompose(g, args.d).to_json())
    return EXIT_OK


def cmd_transversal(args) -> int:
    g = _load_graph(args.graph)
    data = _load_json(args.parts)
    parts = data["parts"] if isinstance(data, dict) else data
    mv = MultipartiteView.of(g, parts)
    out = {"r": args.r, "parts": [list(p) for p in mv.parts]}
    verdict = haxell_condition_holds(mv, args.r)
    if verdict is True:
        out["condition"] = True
    else:
        out["condition"] = False
        out["violation"] = {"S": list(verdict[0]), "X": list(verdict[1])}
    cert = find_independent_transversal(mv, args.r)
    out["transversal"] = list(cert.vertices) if cert is not None else None
    _emit(out)
    return EXIT_OK


def cmd_witness(args) -> int:
    g = _load_graph(args.graph)
    c = EdgeColouring.from_json(g, _load_json(args.colouring))
    if args.k is not None:
        if args.r != 3:
            raise UsageError("--k selects the triangle extractor and needs --r 3")
        trace = triangle_arrow_witness(g, c, args.t, args.k, diagnostic=args.diagnostic)
    else:
        trace = arrow_witness(g, c, args.r, args.t, diagnostic=args.diagnostic)
    if args.format == "dot":
        sys.stdout.write(g.to_dot(c))
    else:
        _emit(trace.to_json())
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    verdict = arrows(g, args.r, args.t, threads=args.threads,
                     deterministic=not args.fast, budget=args.budget)
    _emit(verdict.to_json())
    return EXIT_OK if verdict.arrows else EXIT_COUNTEREXAMPLE


def cmd_sweep(args) -> int:
    report = tightness_sweep(args.r, args.t, args.n, threads=args.threads,
                             samples=args.samples, seed=args.seed)
    if args.figure:
        from .plotting import plot_sweep

        plot_sweep(report, args.figure)
    _emit(report.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramsey-mindeg", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="extremal non-arrowing constructions")
    p.add_argument("--example", choices=["tight", "large"], required=True)
    p.add_argument("--r", type=_positive("r"), required=True)
    p.add_argument("--t", type=_positive("t"), required=True)
    p.add_argument("--k", type=_positive("k"))
    p.add_argument("--n", type=_positive("n"))
    p.add_argument("--format", choices=["json", "dot", "g6"], default="json")
    p.add_argument("--out-dir", help="write graph.g6, colouring.json and parts.json here")
    p.add_argument("--figure", help="render the coloured graph to this image file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", help="Hamiltonian decomposition or long-path escape")
    p.add_argument("--graph", required=True, help="graph6 string, file, or - for stdin")
    p.add_argument("--d", type=_positive("d"), required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("transversal", help="independent transversal condition and search")
    p.add_argument("--graph", required=True)
    p.add_argument("--parts", required=True, help='JSON list of parts, or {"parts": [...]}')
    p.add_argument("--r", type=_positive("r"), required=True)
    p.set_defaults(func=cmd_transversal)

    p = sub.add_parser("witness", help="certificate for a colouring inside the hypotheses")
    p.add_argument("--graph", required=True)
    p.add_argument("--colouring", required=True, help='JSON {"n": ..., "red": [[u, v], ...]}')
    p.add_argument("--r", type=_positive("r"), required=True)
    p.add_argument("--t", type=_positive("t"), required=True)
    p.add_argument("--k", type=_positive("k"), help="use the triangle extractor with this k")
    p.add_argument("--diagnostic", action="store_true", help="also run the exhaustive condition checks")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("oracle", help="exhaustive check over all 2-colourings")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", type=_positive("r"), required=True)
    p.add_argument("--t", type=_positive("t"), required=True)
    p.add_argument("--threads", type=_positive("threads"), default=1)
    p.add_argument("--budget", type=_positive("budget"), default=24, help="maximum edge count")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--deterministic", action="store_true", help="report the lowest-index counterexample (default)")
    mode.add_argument("--fast", action="store_true", help="stop at the first counterexample any worker finds")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="tightness of the degree threshold at n=(r-1)(t-1)+1")
    p.add_argument("--r", type=_positive("r"), required=True)
    p.add_argument("--t", type=_positive("t"), required=True)
    p.add_argument("--n", type=_positive("n"))
    p.add_argument("--threads", type=_positive("threads"), default=1)
    p.add_argument("--samples", type=_positive("samples"), default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--figure", help="render the sweep report to this image file")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RamseyError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
