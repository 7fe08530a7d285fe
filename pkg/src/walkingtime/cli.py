"""Command-line front end.

Subcommands::

    run          edge list -> embedding file (the full pipeline)
    gol-gen      generate the two-glider Game of Life dataset
    lambda-hist  histogram the window-extension gap statistic
    plot         2-d embedding file (+ label colors) -> SVG scatter

Exit codes: 0 success, 2 malformed input data, 3 bad configuration or
flags, 4 runtime failure.
"""

from __future__ import annotations

import argparse
import sys

from . import gol
from .embedding import TrainConfig, load_embeddings
from .graph import ParseError, format_edge_list, parse_input
from .lambda_diag import format_histogram_csv, quantile_summary, sample_gap_histogram
from .pipeline import PipelineConfig, atomic_write_text, run_walkingtime
from .plotting import emit_scatter, format_label_colors, read_label_colors
from .walker import WalkConfig

__all__ = ["ConfigError", "build_parser", "main"]

EXIT_PARSE = 2
EXIT_CONFIG = 3
EXIT_RUNTIME = 4


class ConfigError(ValueError):
    """Bad flags or parameter values; maps to exit code 3."""


class _Parser(argparse.ArgumentParser):
    # surface argparse complaints as ConfigError so exit codes stay ours
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="walkingtime", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[], help="embed a temporal edge list")
    run.add_argument("--input", required=True, help="edge-list file (I/P/S records)")
    run.add_argument("--output", required=True, help="embedding file to write")
    run.add_argument("--lambda", dest="window_extension", type=float, required=True,
                     help="symmetric window extension applied to every edge interval")
    run.add_argument("--walk-length", type=int, default=80, help="steps per walk")
    run.add_argument("--walks-per-node", type=int, default=10)
    run.add_argument("--window", type=int, default=10, help="skip-gram context radius")
    run.add_argument("--iters", type=int, default=5, help="training epochs")
    run.add_argument("--p", type=float, default=1.0, help="return bias divisor")
    run.add_argument("--q", type=float, default=1.0, help="exploration bias divisor")
    run.add_argument("--dim", type=int, default=128, help="embedding dimension")
    run.add_argument("--negatives", type=int, default=5, help="noise nodes per pair")
    run.add_argument("--lr", type=float, default=0.025, help="initial learning rate")
    run.add_argument("--mode", choices=("exact", "rejection"), default="rejection",
                     help="step sampler (rejection is the fast path)")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--threads", type=int, default=1,
                     help="walk-sampling workers; never affects results")

    gen = sub.add_parser("gol-gen", help="generate the two-glider dataset")
    gen.add_argument("--steps", type=int, required=True,
                     help="number of board states (time labels 0..steps-1)")
    gen.add_argument("--output", help="edge-list path (default: stdout)")
    gen.add_argument("--labels", help="optional label,color CSV path")
    gen.add_argument("--neighborhood", choices=("moore8", "vonneumann4"),
                     default="moore8", help="grid adjacency used for edges")
    gen.add_argument("--seed", type=int, default=0,
                     help="accepted for interface uniformity; generation is deterministic")

    hist = sub.add_parser("lambda-hist", help="gap-statistic histogram")
    hist.add_argument("--input", required=True, help="edge-list file")
    hist.add_argument("--samples", type=int, required=True)
    hist.add_argument("--bias-distinct-pairs", action="store_true",
                      help="require sampled edge pairs to join distinct node pairs")
    hist.add_argument("--bins", type=int, default=None,
                      help="fixed bin count (default: Freedman-Diaconis)")
    hist.add_argument("--seed", type=int, default=0)
    hist.add_argument("--output", help="CSV path (default: stdout)")

    plot = sub.add_parser("plot", help="SVG scatter of a 2-d embedding")
    plot.add_argument("--embeddings", required=True, help="embedding file (dim 2)")
    plot.add_argument("--labels", help="label,color CSV; unlabeled nodes render gray")
    plot.add_argument("--output", help="SVG path (default: stdout)")
    return parser


def _emit(path: str | None, text: str) -> None:
    if path:
        atomic_write_text(path, text)
    else:
        sys.stdout.write(text)


def _cmd_run(args) -> int:
    try:
        walk = WalkConfig(
            walk_length=args.walk_length,
            walks_per_node=args.walks_per_node,
            p=args.p,
            q=args.q,
            seed=args.seed,
            mode=args.mode,
        )
        train = TrainConfig(
            window=args.window,
            epochs=args.iters,
            dim=args.dim,
            negatives=args.negatives,
            lr_initial=args.lr,
            seed=args.seed,
        )
        cfg = PipelineConfig(
            input_path=args.input,
            output_path=args.output,
            window_extension=args.window_extension,
            walk=walk,
            train=train,
            threads=args.threads,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    run_walkingtime(cfg)
    return 0


def _cmd_gol_gen(args) -> int:
    if args.steps < 1:
        raise ConfigError("--steps must be >= 1")
    red, blue = gol.paper_initial_config()
    trace = gol.simulate(red | blue, args.steps)
    graph = gol.boards_to_temporal_graph(trace, neighborhood=args.neighborhood)
    _emit(args.output, format_edge_list(graph))
    if args.labels:
        colors = gol.node_color_labels(trace, red, blue)
        atomic_write_text(args.labels, format_label_colors(colors))
    print(
        f"[walkingtime] gol-gen steps = {args.steps} neighborhood = {args.neighborhood} "
        f"nodes = {graph.num_nodes} multi_edges = {graph.num_edges}",
        file=sys.stderr,
    )
    return 0


def _cmd_lambda_hist(args) -> int:
    if args.samples < 1:
        raise ConfigError("--samples must be >= 1")
    if args.bins is not None and args.bins < 1:
        raise ConfigError("--bins must be >= 1")
    with open(args.input, "r", encoding="utf-8") as fh:
        graph = parse_input(fh.read())
    hist = sample_gap_histogram(
        graph,
        n_samples=args.samples,
        bias_distinct_pairs=args.bias_distinct_pairs,
        seed=args.seed,
        bins=args.bins if args.bins is not None else "fd",
    )
    _emit(args.output, format_histogram_csv(hist))
    print(f"[walkingtime] lambda-hist {quantile_summary(hist)}", file=sys.stderr)
    return 0


def _cmd_plot(args) -> int:
    with open(args.embeddings, "r", encoding="utf-8") as fh:
        labels, coords = load_embeddings(fh.read())
    colors = None
    if args.labels:
        with open(args.labels, "r", encoding="utf-8") as fh:
            colors = read_label_colors(fh.read())
    _emit(args.output, emit_scatter(labels, coords, colors))
    return 0


_COMMANDS = {
    "run": _cmd_run,
    "gol-gen": _cmd_gol_gen,
    "lambda-hist": _cmd_lambda_hist,
    "plot": _cmd_plot,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"walkingtime: input parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, ValueError) as exc:
        print(f"walkingtime: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SystemExit:
        raise
    except FileNotFoundError as exc:
        print(f"walkingtime: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"walkingtime: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
