"""Shared fixtures and independent oracles.

Everything here re-derives walk admissibility and step weights straight
from the set-level definitions, deliberately sharing no code with the
package's samplers, so tests can cross-check the two.
"""

from __future__ import annotations

import numpy as np

from walkingtime.graph import InputTemporalGraph, TemporalEdge, TemporalGraph


def overlap(a1, b1, a2, b2):
    return max(a1, a2) <= min(b1, b2)


def graph_from_edges(n_nodes, edges):
    """TemporalGraph from (u, v, start, end) tuples, labels n0..n{k}."""
    labels = [f"n{i}" for i in range(n_nodes)]
    temporal = [TemporalEdge(u, v, float(a), float(b), i) for i, (u, v, a, b) in enumerate(edges)]
    return TemporalGraph(labels, temporal)


def random_input_graph(rng, max_nodes=8, max_edges=20, with_persist=True):
    """Random three-family edge data on a dyadic time lattice.

    Times are multiples of 1/4 in a small range, so interval arithmetic in
    tests (window widening, gap statistics) is exact in float64.
    """
    n = int(rng.integers(2, max_nodes + 1))
    g = InputTemporalGraph(labels=[f"n{i}" for i in range(n)])
    n_edges = int(rng.integers(1, max_edges + 1))
    for _ in range(n_edges):
        u = int(rng.integers(n))
        v = int(rng.integers(n))
        kind = rng.random()
        if with_persist and kind < 0.1:
            g.persist_edges.append((u, v))
        elif kind < 0.55:
            t = int(rng.integers(0, 41)) / 4.0
            g.point_edges.append((u, v, t))
        else:
            a = int(rng.integers(0, 40)) / 4.0
            b = a + int(rng.integers(1, 17)) / 4.0
            g.interval_edges.append((u, v, a, b))
    return g


# --- definitional oracles -------------------------------------------------


def bf_initial_active(g, u0):
    return [e for e in g.edges if u0 in (e.u, e.v)]


def bf_advance(g, active, u_next):
    anchor = [e for e in active if u_next in (e.u, e.v)]
    return [
        e
        for e in g.edges
        if u_next in (e.u, e.v)
        and any(overlap(e.start, e.end, a.start, a.end) for a in anchor)
    ]


def bf_candidates(g, active, u):
    out = set()
    for v in range(g.num_nodes):
        if any({e.u, e.v} == {u, v} for e in active):
            out.add(v)
    return out


def bf_transition_distribution(g, active, u_prev, u, p, q):
    """Step distribution recomputed from scratch (three weight classes)."""
    cands = sorted(bf_candidates(g, active, u))
    if not cands:
        return {}
    if u_prev is None:
        return {w: 1.0 / len(cands) for w in cands}
    raw = {}
    for w in cands:
        if w == u_prev:
            raw[w] = 1.0 / p
        else:
            connecting = [e for e in active if {e.u, e.v} == {u, w}]
            joins_prev = [e for e in g.edges if {e.u, e.v} == {w, u_prev}]
            if any(
                overlap(e1.start, e1.end, e2.start, e2.end)
                for e1 in connecting
                for e2 in joins_prev
            ):
                raw[w] = 1.0
            else:
                raw[w] = 1.0 / q
    total = sum(raw.values())
    return {w: x / total for w, x in raw.items()}


def reachable_nodes(g, start, max_steps):
    """Nodes visited by any admissible walk of at most max_steps steps.

    Breadth-first over (node, active edge set) states; two walks reaching
    the same state have identical futures, so deduplication is sound.
    """
    start_state = (start, frozenset(e.eid for e in bf_initial_active(g, start)))
    seen_states = {start_state}
    frontier = [start_state]
    reached = {start}
    edges_by_id = {e.eid: e for e in g.edges}
    for _ in range(max_steps):
        next_frontier = []
        for node, active_ids in frontier:
            active = [edges_by_id[i] for i in active_ids]
            for w in bf_candidates(g, active, node):
                state = (w, frozenset(e.eid for e in bf_advance(g, active, w)))
                if state not in seen_states:
                    seen_states.add(state)
                    next_frontier.append(state)
                    reached.add(w)
        frontier = next_frontier
        if not frontier:
            break
    return reached


def state_transitions(g, start, max_steps):
    """All (u, w) steps realizable within max_steps, via the same search."""
    start_state = (start, frozenset(e.eid for e in bf_initial_active(g, start)))
    seen_states = {start_state}
    frontier = [start_state]
    steps = set()
    edges_by_id = {e.eid: e for e in g.edges}
    for _ in range(max_steps):
        next_frontier = []
        for node, active_ids in frontier:
            active = [edges_by_id[i] for i in active_ids]
            for w in bf_candidates(g, active, node):
                steps.add((node, w))
                state = (w, frozenset(e.eid for e in bf_advance(g, active, w)))
                if state not in seen_states:
                    seen_states.add(state)
                    next_frontier.append(state)
        frontier = next_frontier
        if not frontier:
            break
    return steps


def empirical_counts(draws, support):
    counts = {w: 0 for w in support}
    for d in draws:
        counts[d] += 1
    return counts


def chisquare_pvalue(observed, expected_probs, n):
    from scipy import stats

    keys = sorted(expected_probs)
    f_obs = np.array([observed[k] for k in keys], dtype=float)
    f_exp = np.array([expected_probs[k] * n for k in keys])
    if len(keys) < 2:
        return 1.0
    return float(stats.chisquare(f_obs, f_exp).pvalue)
