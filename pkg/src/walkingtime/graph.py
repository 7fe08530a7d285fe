"""Temporal multigraph data model.

Edge data arrives in three flavors: interval edges carrying an explicit
[start, end] span, time-point edges carrying a single timestamp, and
persistent edges with no temporal information at all.  ``transform_graph``
folds all three into one uniform interval-labeled multigraph, widening each
edge's span by a user-chosen window extension so that interactions separated
by a latent lag can still overlap in time.

All intervals are closed on both ends; two intervals intersect iff
``max(a1, a2) <= min(b1, b2)``.  Persistent edges map to ``(-inf, inf)``,
which intersects everything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

INF = math.inf


class ParseError(ValueError):
    """Raised when an edge-list document is malformed."""


def intervals_intersect(a1: float, b1: float, a2: float, b2: float) -> bool:
    """Closed-interval intersection test: [a1,b1] meets [a2,b2]."""
    return max(a1, a2) <= min(b1, b2)


class TemporalEdge(NamedTuple):
    """One undirected multi-edge with a closed time interval."""

    u: int
    v: int
    start: float
    end: float
    eid: int

    def joins(self, a: int, b: int) -> bool:
        """True iff the unordered endpoint pair equals {a, b}."""
        return {self.u, self.v} == {a, b}

    def incident(self, a: int) -> bool:
        return self.u == a or self.v == a


class StaticGraph(NamedTuple):
    """Plain undirected graph: node ids plus unlabeled edge pairs."""

    nodes: set[int]
    edges: set[tuple[int, int]]


class _SymbolTable:
    """Bidirectional node-label table; ids are dense, first-seen order."""

    def __init__(self):
        self.labels: list[str] = []
        self._index: dict[str, int] = {}

    def intern(self, label: str) -> int:
        idx = self._index.get(label)
        if idx is None:
            idx = len(self.labels)
            self._index[label] = idx
            self.labels.append(label)
        return idx

    def id_of(self, label: str) -> int:
        return self._index[label]

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in self._index


@dataclass
class InputTemporalGraph:
    """Raw three-family edge data, prior to the uniform transformation.

    ``interval_edges`` hold (u, v, start, end) with finite start < end,
    ``point_edges`` hold (u, v, t) with finite t, ``persist_edges`` hold
    (u, v).  Node ids are dense ints; ``labels[i]`` recovers the external
    label of node i.  Duplicates are preserved: this is a multigraph.
    """

    labels: list[str] = field(default_factory=list)
    interval_edges: list[tuple[int, int, float, float]] = field(default_factory=list)
    point_edges: list[tuple[int, int, float]] = field(default_factory=list)
    persist_edges: list[tuple[int, int]] = field(default_factory=list)

    @property
    def num_nodes(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.interval_edges) + len(self.point_edges) + len(self.persist_edges)


class TemporalGraph:
    """Uniform interval-labeled multigraph with a per-node adjacency index.

    Immutable once built (construct via :func:`transform_graph`); safe to
    share across any number of concurrent walkers.  ``adjacency[v]`` lists
    the ids of edges incident on v, sorted by interval start; parallel
    (u, v, interval) triples stay distinct edges.
    """

    def __init__(self, labels: list[str], edges: list[TemporalEdge]):
        self.labels = list(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self.edges = list(edges)
        n = len(self.labels)
        adjacency: list[list[int]] = [[] for _ in range(n)]
        pair_index: dict[tuple[int, int], list[int]] = {}
        for e in self.edges:
            adjacency[e.u].append(e.eid)
            if e.v != e.u:
                adjacency[e.v].append(e.eid)
            pair_index.setdefault(_pair_key(e.u, e.v), []).append(e.eid)
        for eids in adjacency:
            eids.sort(key=lambda i: self.edges[i].start)
        self.adjacency = adjacency
        self._pair_index = pair_index

    @property
    def num_nodes(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def node_id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node label: {label!r}") from None

    def incident(self, v: int) -> list[TemporalEdge]:
        """Edges incident on v, in adjacency (interval-start) order."""
        if not 0 <= v < self.num_nodes:
            raise KeyError(f"unknown node id: {v}")
        return [self.edges[i] for i in self.adjacency[v]]

    def pair_edge_ids(self, a: int, b: int) -> list[int]:
        """Ids of all edges whose unordered endpoint pair is {a, b}."""
        return self._pair_index.get(_pair_key(a, b), [])


def _pair_key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def _parse_time(token: str, lineno: int) -> float:
    try:
        t = float(token)
    except ValueError:
        raise ParseError(f"line {lineno}: non-numeric time {token!r}") from None
    if not math.isfinite(t):
        raise ParseError(f"line {lineno}: non-finite time {token!r}")
    return t


def parse_input(text: str) -> InputTemporalGraph:
    """Parse an edge-list document into an :class:`InputTemporalGraph`.

    Format, one record per line, whitespace separated::

        I <u> <v> <t_start> <t_end>   interval edge, t_start < t_end
        P <u> <v> <t>                 time-point edge
        S <u> <v>                     persistent edge

    Lines starting with ``#`` are comments; blank lines are skipped.  Node
    labels are arbitrary non-whitespace tokens, interned in first-seen
    order.  Malformed lines raise :class:`ParseError` naming the line.
    """
    table = _SymbolTable()
    g = InputTemporalGraph()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "I":
            if len(parts) != 5:
                raise ParseError(f"line {lineno}: interval edge needs 4 fields, got {len(parts) - 1}")
            u, v = table.intern(parts[1]), table.intern(parts[2])
            a = _parse_time(parts[3], lineno)
            b = _parse_time(parts[4], lineno)
            if a >= b:
                raise ParseError(f"line {lineno}: interval start {a!r} >= end {b!r}")
            g.interval_edges.append((u, v, a, b))
        elif kind == "P":
            if len(parts) != 4:
                raise ParseError(f"line {lineno}: point edge needs 3 fields, got {len(parts) - 1}")
            u, v = table.intern(parts[1]), table.intern(parts[2])
            g.point_edges.append((u, v, _parse_time(parts[3], lineno)))
        elif kind == "S":
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: persistent edge needs 2 fields, got {len(parts) - 1}")
            g.persist_edges.append((table.intern(parts[1]), table.intern(parts[2])))
        else:
            raise ParseError(f"line {lineno}: unknown record type {kind!r}")
    g.labels = table.labels
    return g


def format_edge_list(g: InputTemporalGraph) -> str:
    """Serialize an :class:`InputTemporalGraph` back to edge-list text."""
    lines = []
    for u, v, a, b in g.interval_edges:
        lines.append(f"I {g.labels[u]} {g.labels[v]} {_fmt(a)} {_fmt(b)}")
    for u, v, t in g.point_edges:
        lines.append(f"P {g.labels[u]} {g.labels[v]} {_fmt(t)}")
    for u, v in g.persist_edges:
        lines.append(f"S {g.labels[u]} {g.labels[v]}")
    return "\n".join(lines) + ("\n" if lines else "")


def _fmt(x: float) -> str:
    return format(x, ".17g")


def transform_graph(g: InputTemporalGraph, window_extension: float) -> TemporalGraph:
    """Build the uniform multigraph, widening every edge by the extension.

    Each interval edge [a, b] becomes [a - w, b + w]; each time-point edge t
    becomes [t - w, t + w]; each persistent edge becomes (-inf, inf).
    Multiplicity is preserved exactly, so the output edge count equals the
    sum of the three input family counts.  ``window_extension`` must be
    non-negative; 0 leaves interval edges unchanged and turns point edges
    into degenerate [t, t] intervals.
    """
    if window_extension < 0:
        raise ValueError(f"window extension must be >= 0, got {window_extension}")
    w = float(window_extension)
    edges = []
    eid = 0
    for u, v, a, b in g.interval_edges:
        edges.append(TemporalEdge(u, v, a - w, b + w, eid))
        eid += 1
    for u, v, t in g.point_edges:
        edges.append(TemporalEdge(u, v, t - w, t + w, eid))
        eid += 1
    for u, v in g.persist_edges:
        edges.append(TemporalEdge(u, v, -INF, INF, eid))
        eid += 1
    return TemporalGraph(g.labels, edges)


def restrict_node(edges: Iterable[TemporalEdge], v: int) -> list[TemporalEdge]:
    """All multi-edges incident on v."""
    return [e for e in edges if e.u == v or e.v == v]


def restrict_pair(edges: Iterable[TemporalEdge], v: int, u: int) -> list[TemporalEdge]:
    """All multi-edges whose unordered endpoint pair equals {v, u}.

    For v == u this is non-empty only when explicit self-loops exist.
    """
    want = {v, u}
    return [e for e in edges if {e.u, e.v} == want]


def static_union(g: TemporalGraph) -> StaticGraph:
    """Collapse the multigraph to a simple graph, dropping time labels."""
    pairs = {_pair_key(e.u, e.v) for e in g.edges}
    return StaticGraph(set(range(g.num_nodes)), pairs)
