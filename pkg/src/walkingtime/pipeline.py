"""End-to-end embedding pipeline: edge list in, embedding file out.

Chains the uniform-graph transformation, corpus sampling, and skip-gram
training, writing results atomically (temp file + rename) so failed runs
leave no partial output.  A manifest of every parameter and count needed to
reproduce the run goes to standard error.
"""

from __future__ import annotations

import os
import sys
import tempfile
from dataclasses import dataclass

from .embedding import EmbeddingMatrix, TrainConfig, save_embeddings, train_skipgram
from .graph import parse_input, transform_graph
from .walker import WalkConfig, WalkCorpus, sample_corpus

__all__ = ["PipelineConfig", "atomic_write_text", "run_walkingtime"]


@dataclass(frozen=True)
class PipelineConfig:
    """Everything one run needs: paths, window extension, phase configs."""

    input_path: str
    output_path: str
    window_extension: float
    walk: WalkConfig
    train: TrainConfig
    threads: int = 1

    def __post_init__(self):
        if self.window_extension < 0:
            raise ValueError("window extension (lambda) must be >= 0")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


def atomic_write_text(path: str, text: str) -> None:
    """Write text to path via a same-directory temp file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _count_pairs(corpus: WalkCorpus, window: int) -> int:
    total = 0
    for walk in corpus.walks:
        n = len(walk.nodes)
        for off in range(1, min(window, n - 1) + 1):
            total += 2 * (n - off)
    return total


def _manifest(stream, entries) -> None:
    for key, value in entries:
        print(f"[walkingtime] {key} = {value}", file=stream)


def run_walkingtime(cfg: PipelineConfig) -> EmbeddingMatrix:
    """Run the full pipeline and write the embedding file.

    Reads the edge list at cfg.input_path, widens every edge interval by
    cfg.window_extension, samples cfg.walk.walks_per_node time-respecting
    walks per node, trains skip-gram embeddings, and writes them to
    cfg.output_path.  Deterministic for fixed seeds and any thread count.
    """
    with open(cfg.input_path, "r", encoding="utf-8") as fh:
        text = fh.read()
    raw = parse_input(text)
    g = transform_graph(raw, cfg.window_extension)
    corpus = sample_corpus(g, cfg.walk, threads=cfg.threads)
    emb = train_skipgram(corpus, cfg.train, n_nodes=g.num_nodes)
    atomic_write_text(cfg.output_path, save_embeddings(emb, g.labels))
    _manifest(
        sys.stderr,
        [
            ("input", cfg.input_path),
            ("output", cfg.output_path),
            ("lambda", cfg.window_extension),
            ("walk_length", cfg.walk.walk_length),
            ("walks_per_node", cfg.walk.walks_per_node),
            ("p", cfg.walk.p),
            ("q", cfg.walk.q),
            ("mode", cfg.walk.mode),
            ("window", cfg.train.window),
            ("iters", cfg.train.epochs),
            ("dim", cfg.train.dim),
            ("negatives", cfg.train.negatives),
            ("lr_initial", cfg.train.lr_initial),
            ("seed", cfg.walk.seed),
            ("threads", cfg.threads),
            ("nodes", g.num_nodes),
            ("multi_edges", g.num_edges),
            ("walks", len(corpus)),
            ("training_pairs", _count_pairs(corpus, cfg.train.window)),
        ],
    )
    return emb
