"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import graphs, ltris, partitions, tensors, verify, words

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class Config:
    command: str
    n: int | None = None
    m: int | None = None
    format: str = "text"
    out: str | None = None
    budget: int = verify.DEFAULT_BUDGET


def _emit(lines: Iterable[str], out: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _family(n: int, m: int, what: str) -> list:
    if m % n:
        return []
    ws = words.enumerate_balanced(n, m // n)
    if what == "words":
        return ws
    if what == "graphs":
        return [graphs.word_to_graph(w, n) for w in ws]
    return [ltris.word_to_tableau(w, n) for w in ws]


def _show(obj, n: int, fmt: str) -> str:
    if isinstance(obj, graphs.WaveGraph):
        return _dumps(obj.to_json() if fmt == "json" else [list(c) for c in obj.components])
    if isinstance(obj, ltris.StandardTableau):
        return _dumps(obj.to_json())
    return _dumps(list(obj)) if fmt == "json" else words.format_word(obj, n)


def cmd_dim(cfg: Config, args) -> int:
    _emit([str(partitions.invariant_dimension(cfg.n, cfg.m))], cfg.out)
    return EXIT_OK


def cmd_count(cfg: Config, args) -> int:
    _emit([str(len(_family(cfg.n, cfg.m, args.what)))], cfg.out)
    return EXIT_OK


def cmd_enumerate(cfg: Config, args) -> int:
    if cfg.m % cfg.n:
        print(f"warning: {cfg.n} does not divide {cfg.m}; nothing to enumerate", file=sys.stderr)
    _emit((_show(x, cfg.n, cfg.format) for x in _family(cfg.n, cfg.m, args.what)), cfg.out)
    return EXIT_OK


def _parse_value(kind: str, text: str, n: int | None):
    if kind == "word":
        w = words.parse_word(text)
        n = n or (max(w) if w else None)
        if n is None:
            raise ValueError("cannot infer n from an empty word; pass --n")
        return words.check_balanced(w, n), n
    if kind == "graph":
        g = graphs.check_valid(graphs.WaveGraph.from_json(text))
        return g, g.n
    t = ltris.StandardTableau(tuple(tuple(r) for r in json.loads(text)))
    return t, len(t.rows[0]) if t.rows else n


def cmd_convert(cfg: Config, args) -> int:
    value, n = _parse_value(args.source, args.value, cfg.n)
    if args.source == "graph":
        w = graphs.graph_to_word(value)
    elif args.source == "tableau":
        w = ltris.tableau_to_word(value)
    else:
        w = value
    if args.target == "word":
        result = w
    elif args.target == "graph":
        result = graphs.word_to_graph(w, n)
    else:
        result = ltris.word_to_tableau(w, n)
    _emit([_show(result, n, cfg.format)], cfg.out)
    return EXIT_OK


def cmd_basis(cfg: Config, args) -> int:
    if cfg.m % cfg.n:
        print(f"warning: {cfg.n} does not divide {cfg.m}; the invariant space is zero", file=sys.stderr)
    out = (_dumps(tensors.invariant_tensor(g).to_json()) for g in graphs.enumerate_graphs(cfg.n, cfg.m))
    _emit(out, cfg.out)
    return EXIT_OK


def cmd_verify(cfg: Config, args) -> int:
    try:
        cert = verify.certify(cfg.n, cfg.m, oracle=args.oracle, budget=cfg.budget)
    except verify.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if cfg.format == "json":
        _emit([cert.dumps()], cfg.out)
    else:
        lines = [f"n={cfg.n} m={cfg.m} graphs={len(cert.graphs)}"]
        for s in cert.sections:
            extra = ""
            if s.name == "independence":
                extra = f" size={s.details['size']} det={s.details['determinant']}"
            elif s.name == "spanning":
                d = s.details
                extra = (f" oracle={d['oracle_dimension']} formula={d['formula_dimension']}"
                         f" graphs={d['graphs']} rank={d['rank']}")
            lines.append(f"{s.name}: {'pass' if s.passed else 'fail'}{extra}")
        lines.append(f"verdict: {'pass' if cert.passed else 'fail'}")
        _emit(lines, cfg.out)
    return EXIT_OK if cert.passed else EXIT_INVALID


def cmd_decompose(cfg: Config, args) -> int:
    rows = partitions.decompose(cfg.n, cfg.m)
    total = 0
    if cfg.format == "json":
        out = []
        for lam, mult in rows:
            dim = partitions.dim_irrep(lam, cfg.n)
            total += mult * dim
            out.append({"lambda": list(lam), "tau": list(partitions.tau(lam, cfg.m, cfg.n)),
                        "multiplicity": mult, "dim": dim})
        payload = {"n": cfg.n, "m": cfg.m, "components": out, "total": total,
                   "expected": cfg.n ** cfg.m}
        _emit([_dumps(payload)], cfg.out)
    else:
        lines = ["lambda\ttau\tmultiplicity\tdim"]
        for lam, mult in rows:
            dim = partitions.dim_irrep(lam, cfg.n)
            total += mult * dim
            lines.append(f"{_dumps(list(lam))}\t{_dumps(list(partitions.tau(lam, cfg.m, cfg.n)))}"
                         f"\t{mult}\t{dim}")
        lines.append(f"total {total} = {cfg.n}^{cfg.m} = {cfg.n ** cfg.m}"
                     if total == cfg.n ** cfg.m else f"total {total} != {cfg.n ** cfg.m}")
        _emit(lines, cfg.out)
    return EXIT_OK if total == cfg.n ** cfg.m else EXIT_INVALID


def cmd_ltris(cfg: Config, args) -> int:
    w = words.parse_word(args.word)
    n = cfg.n or (max(w) if w else 1)
    lines, state, err = ltris.transcript(w, n)
    if err is None:
        lines.append(f"moves={state.moves} cleared={state.cleared} "
                     f"final=({','.join(map(str, state.heights))})")
        if words.is_balanced(w, n):
            lines.append(f"tableau={_dumps(state.record().to_json())}")
    _emit(lines, cfg.out)
    if err is not None:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_render(cfg: Config, args) -> int:
    if args.graph:
        g = graphs.WaveGraph.from_json(args.graph)
    else:
        w = words.parse_word(args.word)
        g = graphs.word_to_graph(w, cfg.n or (max(w) if w else 2))
    svg = graphs.render(g, "svg")
    _emit([svg.rstrip("\n")], cfg.out)
    return EXIT_OK


COMMANDS = {
    "dim": cmd_dim, "count": cmd_count, "enumerate": cmd_enumerate, "convert": cmd_convert,
    "basis": cmd_basis, "verify": cmd_verify, "decompose": cmd_decompose, "ltris": cmd_ltris,
    "render": cmd_render,
}
NEEDS_NM = {"dim", "count", "enumerate", "basis", "verify", "decompose"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="dimension of V (SL(n))")
    size = common.add_mutually_exclusive_group()
    size.add_argument("--m", type=int, help="number of tensor factors")
    size.add_argument("--k", type=int, help="number of waves; m = n*k")
    common.add_argument("--format", choices=["text", "json", "svg"], default="text")
    common.add_argument("--out", help="write data to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="wavebasis", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dim", parents=[common], help="dimension of the invariant space")
    for name, helptext in (("count", "count a family"), ("enumerate", "list a family in word order")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--what", choices=["words", "graphs", "tableaux"], default="words")
    p = sub.add_parser("convert", parents=[common], help="convert between words, graphs and tableaux")
    p.add_argument("--from", dest="source", choices=["word", "graph", "tableau"], required=True)
    p.add_argument("--to", dest="target", choices=["word", "graph", "tableau"], required=True)
    p.add_argument("--value", required=True)
    sub.add_parser("basis", parents=[common], help="emit every t_G as JSON lines")
    p = sub.add_parser("verify", parents=[common], help="certify the wave-graph basis")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force dimension oracle")
    p.add_argument("--budget", type=int, default=verify.DEFAULT_BUDGET,
                   help="largest n^m the oracle may touch (default 3^8)")
    sub.add_parser("decompose", parents=[common], help="decompose the m-th tensor power")
    p = sub.add_parser("ltris", parents=[common], help="replay an L-tris game record")
    p.add_argument("--word", required=True)
    p = sub.add_parser("render", parents=[common], help="draw a wave graph as SVG")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word")
    src.add_argument("--graph", help="components as JSON, e.g. [[1,2,4],[3,5,6]]")
    return parser


def parse_config(parser: argparse.ArgumentParser, argv: Sequence[str] | None):
    args = parser.parse_args(argv)
    m = args.m
    if args.k is not None:
        if args.n is None:
            parser.error("--k needs --n")
        m = args.n * args.k
    cfg = Config(args.command, args.n, m, args.format, args.out, getattr(args, "budget", verify.DEFAULT_BUDGET))
    if args.command in NEEDS_NM and (cfg.n is None or cfg.m is None):
        parser.error(f"{args.command} needs --n and --m (or --k)")
    if cfg.n is not None and cfg.n < (1 if args.command == "ltris" else 2):
        parser.error("--n must be at least 2")
    if cfg.m is not None and cfg.m < 0:
        parser.error("--m must be nonnegative")
    if cfg.budget < 1:
        parser.error("--budget must be at least 1")
    return cfg, args


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    cfg, args = parse_config(parser, argv)
    try:
        return COMMANDS[cfg.command](cfg, args)
    except verify.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
