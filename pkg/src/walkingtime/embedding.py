"""Skip-gram with negative sampling over walk corpora.

Walks act as sentences: every ordered pair of nodes within a window becomes
a (center, context) training example, and each example is opposed by a few
noise nodes drawn from the corpus unigram distribution raised to 0.75.  One
input vector and one context vector are kept per node; the input vectors
are the embedding.

Training is plain sequential SGD over per-epoch shuffles of the pair list,
with the learning rate decaying linearly to 1/100 of its initial value over
the full run.  The update loop is JIT-compiled (corpora from long walks
reach tens of millions of pairs per epoch) but is strictly sequential, so
results are bitwise reproducible for a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np
from numba import njit

from .alias import AliasTable
from .walker import WalkCorpus

__all__ = [
    "EmbeddingFormatError",
    "EmbeddingMatrix",
    "NoPairsError",
    "TrainConfig",
    "extract_pairs",
    "init_matrices",
    "load_embeddings",
    "mean_pair_loss",
    "node_frequencies",
    "save_embeddings",
    "sgns_pair_loss_and_grads",
    "train_skipgram",
]


class NoPairsError(ValueError):
    """Raised when a corpus yields no context pairs at all."""


class EmbeddingFormatError(ValueError):
    """Raised when an embedding document does not match its header."""


@dataclass(frozen=True)
class TrainConfig:
    """Skip-gram training parameters.

    ``window`` is the context radius around each walk position, ``epochs``
    the number of passes over the shuffled pair list, ``dim`` the embedding
    dimension.  Defaults for the noise terms and learning rate follow the
    usual word-embedding practice.
    """

    window: int
    epochs: int
    dim: int
    negatives: int = 5
    lr_initial: float = 0.025
    seed: int = 0

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.negatives < 1:
            raise ValueError("negatives must be >= 1")
        if not self.lr_initial > 0:
            raise ValueError("lr_initial must be > 0")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass
class EmbeddingMatrix:
    """Input and context vectors, one row per node; inputs are the output."""

    input_vectors: np.ndarray
    context_vectors: np.ndarray

    @property
    def vectors(self) -> np.ndarray:
        return self.input_vectors


def extract_pairs(corpus: WalkCorpus, window: int) -> Iterator[tuple[int, int]]:
    """Yield (center, context) for every in-window position pair.

    For each walk and each position i, emits (u_i, u_j) for all j != i with
    |i - j| <= window.  Walks with a single node contribute nothing.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    for walk in corpus.walks:
        nodes = walk.nodes
        n = len(nodes)
        for i in range(n):
            for j in range(max(0, i - window), min(n, i + window + 1)):
                if j != i:
                    yield nodes[i], nodes[j]


def _pair_arrays(corpus: WalkCorpus, window: int) -> tuple[np.ndarray, np.ndarray]:
    # vectorized pair construction; same multiset as extract_pairs, grouped
    # by offset instead of by position (order is irrelevant: training
    # reshuffles every epoch)
    centers, contexts = [], []
    for walk in corpus.walks:
        arr = np.asarray(walk.nodes, dtype=np.int32)
        for off in range(1, min(window, arr.size - 1) + 1):
            head, tail = arr[:-off], arr[off:]
            centers.append(head)
            contexts.append(tail)
            centers.append(tail)
            contexts.append(head)
    if not centers:
        return (np.empty(0, dtype=np.int32), np.empty(0, dtype=np.int32))
    return np.concatenate(centers), np.concatenate(contexts)


def node_frequencies(corpus: WalkCorpus, n_nodes: int) -> np.ndarray:
    """Token counts per node over every walk in the corpus."""
    counts = np.zeros(n_nodes, dtype=np.int64)
    for walk in corpus.walks:
        counts += np.bincount(np.asarray(walk.nodes, dtype=np.int64), minlength=n_nodes)
    return counts


def _sigmoid(x):
    return 1.0 / (1.0 + np.exp(-np.clip(x, -500.0, 500.0)))


def sgns_pair_loss_and_grads(center_vec, context_vec, negative_vecs):
    """Loss and gradients of one skip-gram example with negative sampling.

    loss = -log sigma(c.v) - sum_k log sigma(-n_k.v).  Returns
    (loss, (g_center, g_context, g_negatives)) where each gradient matches
    the shape of its vector.  ``negative_vecs`` is a (k, d) array; k may be
    zero.
    """
    v = np.asarray(center_vec, dtype=np.float64)
    c = np.asarray(context_vec, dtype=np.float64)
    negs = np.asarray(negative_vecs, dtype=np.float64).reshape(-1, v.size)
    s_pos = float(c @ v)
    loss = float(np.logaddexp(0.0, -s_pos))
    coef_pos = _sigmoid(s_pos) - 1.0
    g_center = coef_pos * c
    g_context = coef_pos * v
    if negs.shape[0]:
        s_neg = negs @ v
        loss += float(np.logaddexp(0.0, s_neg).sum())
        coef_neg = _sigmoid(s_neg)
        g_center = g_center + coef_neg @ negs
        g_negatives = coef_neg[:, None] * v
    else:
        g_negatives = np.zeros((0, v.size))
    return loss, (g_center, g_context, g_negatives)


def init_matrices(n_nodes: int, dim: int, seed: int) -> EmbeddingMatrix:
    """Word2vec-style start: inputs uniform in [-0.5/d, 0.5/d], contexts 0."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0x1]))
    inputs = (rng.random((n_nodes, dim)) - 0.5) / dim
    return EmbeddingMatrix(inputs, np.zeros((n_nodes, dim)))


@njit(cache=True, inline="always")
def _mix64(state):
    # splitmix64: cheap, seedable, good enough to drive the noise draws
    state = state + np.uint64(0x9E3779B97F4A7C15)
    z = state
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    z = z ^ (z >> np.uint64(31))
    return state, z


# word2vec-style sigmoid lookup; saturated dots contribute hard 0/1
_SIG_BOUND = 8.0
_SIG_CELLS = 4096
_SIG_TABLE = 1.0 / (
    1.0 + np.exp(-((np.arange(_SIG_CELLS) + 0.5) / _SIG_CELLS * 2.0 - 1.0) * _SIG_BOUND)
)


@njit(cache=True)
def _sgns_epoch(
    in_vecs,
    ctx_vecs,
    centers,
    contexts,
    sig_table,
    noise_accept,
    noise_alias,
    negatives,
    lr0,
    t_start,
    t_total,
    state,
):
    n = centers.shape[0]
    d = in_vecs.shape[1]
    k_noise = noise_accept.shape[0]
    cells = sig_table.shape[0]
    scale = cells / (2.0 * _SIG_BOUND)
    grad = np.zeros(d)
    t = t_start
    for k in range(n):
        c = np.int64(centers[k])
        lr = lr0 * (1.0 - 0.99 * t / t_total)
        t += 1
        for dd in range(d):
            grad[dd] = 0.0
        for s in range(negatives + 1):
            if s == 0:
                target = np.int64(contexts[k])
                label = 1.0
            else:
                state, z1 = _mix64(state)
                cell = np.int64(z1 % np.uint64(k_noise))
                state, z2 = _mix64(state)
                coin = (z2 >> np.uint64(11)) * (1.0 / 9007199254740992.0)
                target = cell if coin < noise_accept[cell] else noise_alias[cell]
                label = 0.0
            dot = 0.0
            for dd in range(d):
                dot += in_vecs[c, dd] * ctx_vecs[target, dd]
            if dot >= _SIG_BOUND:
                f = 1.0
            elif dot <= -_SIG_BOUND:
                f = 0.0
            else:
                f = sig_table[np.int64((dot + _SIG_BOUND) * scale)]
            g = (label - f) * lr
            for dd in range(d):
                grad[dd] += g * ctx_vecs[target, dd]
                ctx_vecs[target, dd] += g * in_vecs[c, dd]
        for dd in range(d):
            in_vecs[c, dd] += grad[dd]
    return state


def train_skipgram(
    corpus: WalkCorpus,
    cfg: TrainConfig,
    n_nodes: int | None = None,
    epoch_callback: Callable[[int, EmbeddingMatrix], None] | None = None,
) -> EmbeddingMatrix:
    """Train node embeddings on the walk corpus.

    ``n_nodes`` fixes the matrix row count; when omitted it is inferred as
    max node id + 1, which undercounts graphs with trailing isolated nodes,
    so pipelines should pass the true node count.  ``epoch_callback`` (if
    given) receives (epoch index, live matrices) after each pass, which is
    how loss curves are recorded without slowing the main loop.

    Raises :class:`NoPairsError` when no walk is long enough to produce a
    single context pair; longer walks or more walks per node fix that.
    """
    if not corpus.walks:
        raise NoPairsError("empty corpus: no walks to train on")
    if n_nodes is None:
        seen = [max(w.nodes) for w in corpus.walks if w.nodes]
        if not seen:
            raise NoPairsError("corpus contains only empty walks")
        n_nodes = 1 + max(seen)
    centers, contexts = _pair_arrays(corpus, cfg.window)
    if centers.size == 0:
        raise NoPairsError(
            "corpus produced no context pairs; increase walk_length or walks_per_node"
        )
    noise = node_frequencies(corpus, n_nodes).astype(np.float64) ** 0.75
    table = AliasTable(noise)
    emb = init_matrices(n_nodes, cfg.dim, cfg.seed)
    state = np.uint64(
        np.random.SeedSequence([cfg.seed, 0x2]).generate_state(1, dtype=np.uint64)[0]
    )
    shuffle_rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, 0x4]))
    total = cfg.epochs * centers.size
    for epoch in range(cfg.epochs):
        # shuffled copies keep the hot loop sequential in memory
        perm = shuffle_rng.permutation(centers.size)
        state = np.uint64(state)  # the kernel hands back a python int
        state = _sgns_epoch(
            emb.input_vectors,
            emb.context_vectors,
            centers[perm],
            contexts[perm],
            _SIG_TABLE,
            table.accept,
            table.alias,
            cfg.negatives,
            cfg.lr_initial,
            epoch * centers.size,
            total,
            state,
        )
        if epoch_callback is not None:
            epoch_callback(epoch, emb)
    if not np.all(np.isfinite(emb.input_vectors)) or not np.all(
        np.isfinite(emb.context_vectors)
    ):
        raise FloatingPointError("training produced non-finite embedding entries")
    return emb


def mean_pair_loss(
    emb: EmbeddingMatrix,
    corpus: WalkCorpus,
    window: int,
    negatives: int = 5,
    seed: int = 0,
) -> float:
    """Mean skip-gram loss over all pairs, with a fixed negative draw.

    Negatives come from the same unigram^0.75 distribution but a dedicated
    eval seed, so snapshots of the matrices across epochs are compared
    against identical noise.  Vectorized; intended for small corpora.
    """
    centers, contexts = _pair_arrays(corpus, window)
    if centers.size == 0:
        raise NoPairsError("corpus produced no context pairs")
    n_nodes = emb.input_vectors.shape[0]
    table = AliasTable(node_frequencies(corpus, n_nodes).astype(np.float64) ** 0.75)
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0x3]))
    negs = table.sample(rng, centers.size * negatives).reshape(centers.size, negatives)
    v = emb.input_vectors[centers]
    s_pos = np.einsum("nd,nd->n", v, emb.context_vectors[contexts])
    s_neg = np.einsum("nd,nkd->nk", v, emb.context_vectors[negs])
    loss = np.logaddexp(0.0, -s_pos) + np.logaddexp(0.0, s_neg).sum(axis=1)
    return float(loss.mean())


def save_embeddings(emb, labels: list[str]) -> str:
    """Serialize embeddings: header ``<rows> <dim>``, one labeled row each.

    Values use 17 significant digits, so save -> load round-trips float64
    exactly.  Accepts an :class:`EmbeddingMatrix` or a bare 2-d array.
    """
    vecs = emb.input_vectors if isinstance(emb, EmbeddingMatrix) else np.asarray(emb)
    if vecs.ndim != 2:
        raise ValueError("embeddings must be a 2-d matrix")
    rows, dim = vecs.shape
    if len(labels) != rows:
        raise ValueError(f"{rows} rows but {len(labels)} labels")
    lines = [f"{rows} {dim}"]
    for label, row in zip(labels, vecs):
        lines.append(label + " " + " ".join(format(x, ".17g") for x in row))
    return "\n".join(lines) + "\n"


def load_embeddings(text: str) -> tuple[list[str], np.ndarray]:
    """Parse an embedding document back into (labels, vectors)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise EmbeddingFormatError("empty embedding document")
    header = lines[0].split()
    if len(header) != 2:
        raise EmbeddingFormatError(f"bad header: {lines[0]!r}")
    try:
        rows, dim = int(header[0]), int(header[1])
    except ValueError:
        raise EmbeddingFormatError(f"bad header: {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != rows:
        raise EmbeddingFormatError(f"header claims {rows} rows, found {len(body)}")
    labels = []
    vectors = np.zeros((rows, dim))
    for i, line in enumerate(body):
        parts = line.split()
        if len(parts) != dim + 1:
            raise EmbeddingFormatError(f"row {i}: expected {dim} values, got {len(parts) - 1}")
        labels.append(parts[0])
        try:
            vectors[i] = [float(tok) for tok in parts[1:]]
        except ValueError:
            raise EmbeddingFormatError(f"row {i}: non-numeric value") from None
    return labels, vectors
