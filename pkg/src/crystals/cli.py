"""Command-line surface: enumeration, graph building, verification, expansion.

Exit codes: 0 success, 1 verification found violations, 2 invalid input
(shape, parse, or truncation risk), 3 I/O failure, 4 vertex budget
exceeded.  Counts and summaries go to stdout, diagnostics to stderr, and
machine-readable output is JSON.  Every file written ends with a trailing
newline.  Output bytes never depend on the thread count.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .axioms import (
    Verdict,
    check_01_components,
    check_02_components,
    check_queer_regular,
    check_stembridge,
)
from .config import Config
from .errors import ClosureBudgetExceeded, CrystalError, ParseError
from .graph import (
    CrystalGraph,
    character,
    components,
    export_dot,
    export_json,
    highest_weights,
    import_json,
    tensor_graphs,
)
from .models import (
    queer_graph,
    queer_standard_graph,
    shifted_graph,
    young_graph,
)
from .shifted import enumerate_yamanouchi, lower, raise_
from .symfunc import product_expand, render_expansion, schur, schur_p, schur_p_to_schur
from .tableaux import (
    enumerate_ssht,
    enumerate_ssyt,
    parse_shifted,
    parse_young,
    render_tableau,
)
from .young import lower as young_lower
from .young import raise_ as young_raise

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_BUDGET = 4


def parse_shape(text: str) -> tuple[int, ...]:
    """Parse a comma-separated weakly descending shape like ``"3,1"``.

    Raises:
        ParseError: empty, non-integer, non-positive, or increasing input.
    """
    parts = [p.strip() for p in text.split(",")]
    values = []
    for part in parts:
        if not part.isdigit() or int(part) < 1:
            raise ParseError(f"shape parts must be positive integers, got {text!r}")
        values.append(int(part))
    if any(a < b for a, b in zip(values, values[1:])):
        raise ParseError(f"shape must be descending, got {text!r}")
    return tuple(values)


def _config(args: argparse.Namespace) -> Config:
    kwargs = {}
    if args.max_vertices is not None:
        kwargs["max_vertices"] = args.max_vertices
    if args.threads is not None:
        kwargs["threads"] = args.threads
    if args.output_dir is not None:
        kwargs["output_dir"] = Path(args.output_dir)
    return Config(**kwargs)


def _out_path(args: argparse.Namespace, out: str) -> Path:
    path = Path(out)
    if not path.is_absolute():
        path = _config(args).output_dir / path
    return path


def _format_weight(weight: tuple[int, ...]) -> str:
    return "(" + ",".join(str(w) for w in weight) + ")"


def cmd_enum(args: argparse.Namespace) -> int:
    shape = parse_shape(args.shape)
    enumerators: dict[str, Callable] = {
        "ssyt": enumerate_ssyt,
        "ssht": enumerate_ssht,
        "yam": enumerate_yamanouchi,
    }
    tableaux = enumerators[args.kind](shape, args.n)
    lines = "".join(render_tableau(t) + "\n" for t in tableaux)
    if args.out:
        _out_path(args, args.out).write_text(lines, encoding="utf-8")
    else:
        sys.stdout.write(lines)
    print(len(tableaux))
    return EXIT_OK


def _load_graph(path: str) -> CrystalGraph:
    return import_json(Path(path).read_text(encoding="utf-8"))


def _build_model(args: argparse.Namespace) -> CrystalGraph:
    config = _config(args)
    if args.model == "tensor":
        if not args.left or not args.right:
            raise ParseError("tensor model needs --left and --right graph files")
        return tensor_graphs(
            _load_graph(args.left), _load_graph(args.right), queer=args.queer
        )
    if args.model == "standard":
        if args.n is None:
            raise ParseError("standard model needs --n")
        return queer_standard_graph(args.n)
    if args.shape is None or args.n is None:
        raise ParseError(f"{args.model} model needs --shape and --n")
    shape = parse_shape(args.shape)
    builders = {
        "young": young_graph,
        "shifted": shifted_graph,
        "queer": queer_graph,
    }
    return builders[args.model](shape, args.n, config)


def cmd_graph(args: argparse.Namespace) -> int:
    graph = _build_model(args)
    payload = export_dot(graph) if args.format == "dot" else export_json(graph)
    _out_path(args, args.out).write_text(payload, encoding="utf-8")
    counts = graph.edge_counts()
    print(f"vertices: {len(graph)}")
    print(
        "edges:",
        " ".join(f"{color}:{counts[color]}" for color in sorted(counts, key=str))
        or "none",
    )
    print(f"components: {len(components(graph))}")
    weights = sorted(
        graph.weight_of(vid) for vid in highest_weights(graph)
    )
    print("highest weights:", " ".join(_format_weight(w) for w in weights))
    return EXIT_OK


_CHECKERS: dict[str, Callable[..., Verdict]] = {
    "stembridge": check_stembridge,
    "queer": check_queer_regular,
    "components01": check_01_components,
    "components02": check_02_components,
}


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _load_graph(args.input)
    checker = _CHECKERS[args.axioms]
    if args.axioms in ("stembridge", "queer"):
        verdict = checker(graph, exhaustive=args.mode == "exhaustive")
    else:
        verdict = checker(graph)
    print(json.dumps(verdict.to_dict(), indent=2))
    return EXIT_OK if verdict.ok else EXIT_VIOLATIONS


def cmd_expand(args: argparse.Namespace) -> int:
    gamma = parse_shape(args.gamma)
    expansion = schur_p_to_schur(gamma, args.n)
    print(render_expansion(expansion, "s"))
    return EXIT_OK


def cmd_product(args: argparse.Namespace) -> int:
    gamma = parse_shape(args.gamma)
    delta = parse_shape(args.delta)
    expansion = product_expand(gamma, delta, args.n)
    print(render_expansion(expansion, "P"))
    return EXIT_OK


def cmd_char(args: argparse.Namespace) -> int:
    if args.model == "standard":
        polynomial = character(queer_standard_graph(args.n))
    else:
        if args.shape is None:
            raise ParseError(f"{args.model} model needs --shape")
        shape = parse_shape(args.shape)
        if args.model == "young":
            polynomial = schur(shape, args.n)
        else:
            polynomial = schur_p(shape, args.n)
    print(polynomial.render())
    return EXIT_OK


def cmd_string(args: argparse.Namespace) -> int:
    if args.kind == "ssyt":
        tableau = parse_young(args.tableau, args.n)
        move_up, move_down = young_raise, young_lower
    else:
        tableau = parse_shifted(args.tableau, args.n)
        move_up, move_down = raise_, lower
    top = tableau
    while (above := move_up(top, args.i)) is not None:
        top = above
    current = top
    while current is not None:
        print(render_tableau(current))
        current = move_down(current, args.i)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystals",
        description="Tableau crystals: enumeration, graphs, verification.",
    )
    parser.add_argument(
        "--max-vertices", type=int, default=None, help="vertex budget for graph closure"
    )
    parser.add_argument(
        "--threads", type=int, default=None, help="worker threads for graph closure"
    )
    parser.add_argument(
        "--output-dir", default=None, help="directory for relative output paths"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="enumerate tableaux, one per line")
    p.add_argument("kind", choices=("ssyt", "ssht", "yam"))
    p.add_argument("--shape", required=True, help='comma-separated, e.g. "3,1"')
    p.add_argument("--n", type=int, required=True, help="largest entry value")
    p.add_argument("--out", help="write tableaux here instead of stdout")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("graph", help="build a crystal graph file")
    p.add_argument(
        "--model",
        required=True,
        choices=("young", "shifted", "queer", "standard", "tensor"),
    )
    p.add_argument("--shape", help='comma-separated, e.g. "3,1"')
    p.add_argument("--n", type=int, help="alphabet size")
    p.add_argument("--left", help="left factor graph JSON (tensor model)")
    p.add_argument("--right", help="right factor graph JSON (tensor model)")
    p.add_argument(
        "--queer", action="store_true", help="include 0-edges in the tensor"
    )
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("--out", required=True, help="output file")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="check axioms on a graph JSON file")
    p.add_argument("--input", required=True, help="graph JSON file")
    p.add_argument(
        "--axioms",
        required=True,
        choices=("stembridge", "queer", "components01", "components02"),
    )
    p.add_argument(
        "--mode", choices=("exhaustive", "fast"), default="exhaustive"
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", help="expand a shifted-basis element")
    p.add_argument("--gamma", required=True, help='strict shape, e.g. "3,1"')
    p.add_argument(
        "--n", type=int, default=None, help="assert faithfulness in n variables"
    )
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("product", help="expand a product in the shifted basis")
    p.add_argument("--gamma", required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("char", help="print a character polynomial")
    p.add_argument(
        "--model",
        required=True,
        choices=("young", "shifted", "queer", "standard"),
    )
    p.add_argument("--shape", help="required except for the standard model")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("string", help="print the full i-string through a tableau")
    p.add_argument("--kind", choices=("ssyt", "ssht"), default="ssht")
    p.add_argument("--tableau", required=True, help='e.g. "[[1,1,2\'],[2]]"')
    p.add_argument("--i", type=int, required=True, help="operator color (>= 1)")
    p.add_argument("--n", type=int, default=None, help="optional alphabet bound")
    p.set_defaults(func=cmd_string)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ClosureBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CrystalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
