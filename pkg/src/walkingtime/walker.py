"""Time-respecting biased random walks over a temporal multigraph.

A walk carries a set of *active edges*, seeded with everything incident on
the start node.  A step from ``u`` to ``w`` is admissible only through an
active edge joining the pair, and afterwards the active set is rebuilt as
the edges at ``w`` that temporally intersect an active edge incident on
``w``.  Earlier edges therefore gate later ones: reachability depends on
where the walk has been and through which time windows it traveled.

Steps are biased the node2vec way with parameters ``p`` (return) and ``q``
(exploration), classified against the previous node by temporal-topological
proximity.  Two samplers are provided: ``exact`` draws from the normalized
weight distribution, ``rejection`` visits candidates in random order and
retains by class probability, falling back to alias sampling over the exact
weights after a full unretained pass.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .alias import AliasTable
from .graph import TemporalGraph, intervals_intersect, restrict_node, restrict_pair

__all__ = [
    "ActiveEdgeSet",
    "InvalidStepError",
    "Walk",
    "WalkConfig",
    "WalkCorpus",
    "advance_active",
    "format_corpus",
    "initial_active",
    "sample_corpus",
    "sample_step_exact",
    "sample_step_rejection",
    "sample_walk",
    "step_candidates",
    "transition_distribution",
    "validate_walk",
]


class InvalidStepError(ValueError):
    """Raised when advancing the active set through an inadmissible step."""


@dataclass(frozen=True)
class WalkConfig:
    """Parameters of the walk-sampling phase.

    ``walk_length`` counts steps, so a walk that is not cut short visits
    ``walk_length + 1`` nodes.  ``mode`` selects the exact sampler or the
    rejection fast path.  The window extension is applied when building the
    graph, before any walking, and is not repeated here.
    """

    walk_length: int
    walks_per_node: int
    p: float
    q: float
    seed: int = 0
    mode: str = "rejection"

    def __post_init__(self):
        if self.walk_length < 1:
            raise ValueError("walk_length must be >= 1")
        if self.walks_per_node < 1:
            raise ValueError("walks_per_node must be >= 1")
        if not (self.p > 0 and self.q > 0):
            raise ValueError("p and q must be > 0")
        if self.mode not in ("exact", "rejection"):
            raise ValueError(f"mode must be 'exact' or 'rejection', got {self.mode!r}")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass(frozen=True)
class ActiveEdgeSet:
    """Edges usable at one step of a walk."""

    step_index: int
    active_edge_ids: frozenset[int]

    def __len__(self) -> int:
        return len(self.active_edge_ids)


@dataclass
class Walk:
    """A sampled node sequence; cut short when no step was admissible."""

    nodes: list[int]
    terminated_early: bool = False

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass
class WalkCorpus:
    """All sampled walks, ordered by (start node, replicate)."""

    walks: list[Walk] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.walks)

    def __iter__(self):
        return iter(self.walks)


def initial_active(g: TemporalGraph, u0: int) -> ActiveEdgeSet:
    """Step-0 active set: every edge incident on the start node."""
    if not 0 <= u0 < g.num_nodes:
        raise KeyError(f"unknown node id: {u0}")
    return ActiveEdgeSet(0, frozenset(g.adjacency[u0]))


# ---------------------------------------------------------------------------
# shared stepping internals; the public operations and the walk loop all go
# through these, so there is exactly one implementation of each rule


def _candidate_edges(g: TemporalGraph, active_ids, u: int) -> dict[int, list[int]]:
    """Map candidate -> active edge ids whose endpoint pair is {u, candidate}.

    A self-loop {u, u} contributes u itself as a candidate; active edges not
    incident on u contribute nothing.  Candidate order is canonical
    (ascending edge id), so downstream draws are reproducible.
    """
    edges = g.edges
    out: dict[int, list[int]] = {}
    for eid in sorted(active_ids):
        e = edges[eid]
        if e.u == u:
            out.setdefault(e.v, []).append(eid)
        elif e.v == u:
            out.setdefault(e.u, []).append(eid)
    return out


def _advance_ids(g: TemporalGraph, active_ids, u_next: int) -> list[int]:
    edges = g.edges
    anchor = [edges[i] for i in active_ids if edges[i].incident(u_next)]
    if not anchor:
        raise InvalidStepError(f"no active edge incident on node {u_next}")
    new_ids = []
    for eid in g.adjacency[u_next]:
        e = edges[eid]
        for a in anchor:
            if max(a.start, e.start) <= min(a.end, e.end):
                new_ids.append(eid)
                break
    return new_ids


def _temporal_distance_one(g: TemporalGraph, w: int, u_prev: int, connecting_eids) -> bool:
    """True iff any edge joining {w, u_prev} intersects any active edge
    joining the current node and w (the weight-1 proximity class)."""
    pair_eids = g.pair_edge_ids(w, u_prev)
    if not pair_eids:
        return False
    edges = g.edges
    for pe in pair_eids:
        p_start, p_end = edges[pe].start, edges[pe].end
        for ae in connecting_eids:
            e = edges[ae]
            if max(p_start, e.start) <= min(p_end, e.end):
                return True
    return False


def _class_weights(g, cand: dict[int, list[int]], u_prev: int, p: float, q: float):
    weights = []
    for w, eids in cand.items():
        if w == u_prev:
            weights.append(1.0 / p)
        elif _temporal_distance_one(g, w, u_prev, eids):
            weights.append(1.0)
        else:
            weights.append(1.0 / q)
    return weights


def _draw_exact(g, cand, u_prev, p, q, rng) -> int:
    nodes = list(cand)
    if u_prev is None or len(nodes) == 1:
        return nodes[int(rng.integers(len(nodes)))] if len(nodes) > 1 else nodes[0]
    weights = _class_weights(g, cand, u_prev, p, q)
    r = rng.random() * sum(weights)
    acc = 0.0
    for w, wt in zip(nodes, weights):
        acc += wt
        if r < acc:
            return w
    return nodes[-1]  # guard against rounding at the top of the cdf


def _draw_rejection(g, cand, u_prev, p, q, rng) -> int:
    nodes = list(cand)
    k = len(nodes)
    if u_prev is None or k == 1:
        return nodes[int(rng.integers(k))] if k > 1 else nodes[0]
    keep_prev = min(1.0, 1.0 / p)
    keep_far = min(1.0, 1.0 / q)
    # incremental Fisher-Yates: visit candidates in uniform random order,
    # stopping at the first retention
    for m in range(k):
        pick = m + int(rng.integers(k - m))
        nodes[m], nodes[pick] = nodes[pick], nodes[m]
        w = nodes[m]
        if w == u_prev:
            keep = keep_prev
        elif keep_far >= 1.0 or _temporal_distance_one(g, w, u_prev, cand[w]):
            keep = 1.0
        else:
            keep = keep_far
        if keep >= 1.0 or rng.random() < keep:
            return w
    # full pass with nothing retained: exact draw over the class weights,
    # which were already determined for every candidate above
    nodes = list(cand)
    return nodes[AliasTable(_class_weights(g, cand, u_prev, p, q)).draw(rng)]


# ---------------------------------------------------------------------------
# public operations


def step_candidates(g: TemporalGraph, active: ActiveEdgeSet, u_i: int) -> set[int]:
    """Nodes reachable in one step: those joined to u_i by an active edge.

    Revisiting the previous node is possible exactly when an active edge
    still joins it to u_i; there is no implicit staying in place, so u_i is
    a candidate only via an explicit self-loop.
    """
    return set(_candidate_edges(g, active.active_edge_ids, u_i))


def advance_active(g: TemporalGraph, active: ActiveEdgeSet, u_next: int) -> ActiveEdgeSet:
    """Active set after stepping to u_next.

    Keeps every edge incident on u_next whose interval intersects at least
    one currently-active edge incident on u_next.  The caller must only
    advance to a member of :func:`step_candidates`; stepping to a node with
    no incident active edge raises :class:`InvalidStepError`.
    """
    new_ids = _advance_ids(g, active.active_edge_ids, u_next)
    return ActiveEdgeSet(active.step_index + 1, frozenset(new_ids))


def transition_distribution(
    g: TemporalGraph,
    active: ActiveEdgeSet,
    u_prev: int | None,
    u_i: int,
    p: float,
    q: float,
) -> dict[int, float]:
    """Normalized step distribution over the current candidates.

    Unnormalized weights: 1/p for returning to u_prev, 1 for candidates at
    temporal-topological distance one from u_prev, 1/q otherwise.  On the
    first step (u_prev is None) the distribution is uniform.  An empty dict
    signals a dead end.
    """
    if not (p > 0 and q > 0):
        raise ValueError("p and q must be > 0")
    cand = _candidate_edges(g, active.active_edge_ids, u_i)
    if not cand:
        return {}
    if u_prev is None:
        share = 1.0 / len(cand)
        return {w: share for w in cand}
    weights = _class_weights(g, cand, u_prev, p, q)
    total = sum(weights)
    return {w: wt / total for w, wt in zip(cand, weights)}


def sample_step_exact(
    g: TemporalGraph,
    active: ActiveEdgeSet,
    u_prev: int | None,
    u_i: int,
    p: float,
    q: float,
    rng: np.random.Generator,
) -> int | None:
    """Draw the next node from the exact transition distribution.

    Returns None at a dead end.
    """
    if not (p > 0 and q > 0):
        raise ValueError("p and q must be > 0")
    cand = _candidate_edges(g, active.active_edge_ids, u_i)
    if not cand:
        return None
    return _draw_exact(g, cand, u_prev, p, q, rng)


def sample_step_rejection(
    g: TemporalGraph,
    active: ActiveEdgeSet,
    u_prev: int | None,
    u_i: int,
    p: float,
    q: float,
    rng: np.random.Generator,
) -> int | None:
    """Draw the next node via rejection sampling over the candidates.

    Candidates are visited in uniformly random order and retained with
    probability min(1, 1/p) for u_prev, 1 for the distance-one class, and
    min(1, 1/q) otherwise.  A full pass with no retention falls back to an
    alias draw over the exact class weights, so a legal candidate is always
    returned.  Returns None at a dead end.
    """
    if not (p > 0 and q > 0):
        raise ValueError("p and q must be > 0")
    cand = _candidate_edges(g, active.active_edge_ids, u_i)
    if not cand:
        return None
    return _draw_rejection(g, cand, u_prev, p, q, rng)


def sample_walk(g: TemporalGraph, v: int, cfg: WalkConfig, rng: np.random.Generator) -> Walk:
    """One biased walk of up to cfg.walk_length steps starting at v.

    The walk ends early only when no candidate exists, which can happen
    solely at the start (an isolated node yields the single-node walk): once
    a step is taken, the arrival edge stays active, so the previous node
    always remains reachable.
    """
    if not 0 <= v < g.num_nodes:
        raise KeyError(f"unknown node id: {v}")
    draw = _draw_exact if cfg.mode == "exact" else _draw_rejection
    active = list(g.adjacency[v])
    nodes = [v]
    u_prev: int | None = None
    u = v
    p, q = cfg.p, cfg.q
    for _ in range(cfg.walk_length):
        cand = _candidate_edges(g, active, u)
        if not cand:
            return Walk(nodes, terminated_early=True)
        w = draw(g, cand, u_prev, p, q, rng)
        active = _advance_ids(g, active, w)
        nodes.append(w)
        u_prev, u = u, w
    return Walk(nodes, terminated_early=False)


def _walk_rng(seed: int, v: int, replicate: int) -> np.random.Generator:
    # independent stream per (seed, start node, replicate); never depends on
    # scheduling, so corpora are reproducible for any worker count
    return np.random.default_rng(np.random.SeedSequence([seed, v, replicate]))


def sample_corpus(g: TemporalGraph, cfg: WalkConfig, threads: int = 1) -> WalkCorpus:
    """cfg.walks_per_node walks from every node, in (node, replicate) order.

    Deterministic for a fixed (graph, cfg.seed) regardless of ``threads``.
    """
    tasks = [(v, r) for v in range(g.num_nodes) for r in range(cfg.walks_per_node)]

    def one(task: tuple[int, int]) -> Walk:
        v, r = task
        return sample_walk(g, v, cfg, _walk_rng(cfg.seed, v, r))

    if threads <= 1:
        walks = [one(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            walks = list(pool.map(one, tasks, chunksize=32))
    return WalkCorpus(walks)


def validate_walk(g: TemporalGraph, walk, cfg: WalkConfig | None = None) -> bool:
    """Replay the active-edge recursion and accept iff every step passes.

    Works straight from the set-level definitions (restriction operators
    over the full edge list) and shares no stepping logic with the
    samplers, so it can serve as an independent check of their output.
    Accepts a :class:`Walk` or a bare node sequence; a single-node walk is
    trivially valid.
    """
    nodes = list(walk.nodes) if isinstance(walk, Walk) else list(walk)
    if not nodes:
        return False
    if any(not 0 <= v < g.num_nodes for v in nodes):
        return False
    if cfg is not None and len(nodes) > cfg.walk_length + 1:
        return False
    active = restrict_node(g.edges, nodes[0])
    for u, w in zip(nodes, nodes[1:]):
        if not restrict_pair(active, u, w):
            return False
        anchor = restrict_node(active, w)
        active = [
            e
            for e in restrict_node(g.edges, w)
            if any(intervals_intersect(e.start, e.end, a.start, a.end) for a in anchor)
        ]
    return True


def format_corpus(corpus: WalkCorpus, labels: list[str]) -> str:
    """Debug/interop dump: one walk per line, space-separated node labels."""
    return "\n".join(" ".join(labels[v] for v in w.nodes) for w in corpus.walks) + (
        "\n" if corpus.walks else ""
    )
