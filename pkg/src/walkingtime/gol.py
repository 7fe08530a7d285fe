"""Game of Life test-data generator.

Two gliders on an unbounded board supply a dynamical system whose temporal
graph has known ground truth: one glider's cells should embed apart from
the other's.  Boards are sparse sets of live (x, y) cells (y grows
downward); the update rule is the standard birth-on-3 / survive-on-2-or-3
over the Moore 8-neighborhood.

``boards_to_temporal_graph`` turns a simulated trace into time-point edges:
one node per cell ever live, one edge labeled t per pair of neighboring
cells simultaneously live at step t.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .graph import InputTemporalGraph

__all__ = [
    "Cell",
    "boards_to_temporal_graph",
    "cell_label",
    "gol_step",
    "node_color_labels",
    "paper_initial_config",
    "simulate",
]

Cell = tuple[int, int]

# offsets covering each unordered neighbor pair exactly once
_PAIR_OFFSETS = {
    "moore8": ((1, 0), (0, 1), (1, 1), (1, -1)),
    "vonneumann4": ((1, 0), (0, 1)),
}

# the two-glider setup: a southeast-bound glider and a mirrored
# southwest-bound one aimed across its path
GLIDER_SE = frozenset({(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)})
GLIDER_SW = frozenset({(53, 5), (52, 6), (54, 7), (53, 7), (52, 7)})


def paper_initial_config() -> tuple[frozenset, frozenset]:
    """The reference two-glider board as (red cells, blue cells)."""
    return GLIDER_SE, GLIDER_SW


def gol_step(cells: Iterable[Cell]) -> set[Cell]:
    """One Life update on a sparse unbounded board."""
    cells = set(cells)
    neighbor_counts = Counter(
        (x + dx, y + dy)
        for x, y in cells
        for dx in (-1, 0, 1)
        for dy in (-1, 0, 1)
        if (dx, dy) != (0, 0)
    )
    return {c for c, n in neighbor_counts.items() if n == 3 or (n == 2 and c in cells)}


def simulate(initial: Iterable[Cell], steps: int) -> list[set[Cell]]:
    """Board states for time labels 0..steps-1 (the initial board is t=0)."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    boards = [set(initial)]
    for _ in range(steps - 1):
        boards.append(gol_step(boards[-1]))
    return boards


def cell_label(cell: Cell) -> str:
    """Node label for a grid cell, e.g. (12, -3) -> '12_-3'."""
    return f"{cell[0]}_{cell[1]}"


def boards_to_temporal_graph(
    trace: list[set[Cell]], neighborhood: str = "moore8"
) -> InputTemporalGraph:
    """Convert a board trace to time-point edge data.

    Emits edge (u, v, t) exactly when cells u and v are grid neighbors and
    both live at step t; cells never live contribute nothing, and there are
    no self-edges.  ``neighborhood`` picks the adjacency used for edge
    creation: "moore8" (diagonals included, the certified default) or
    "vonneumann4".
    """
    try:
        offsets = _PAIR_OFFSETS[neighborhood]
    except KeyError:
        raise ValueError(
            f"neighborhood must be one of {sorted(_PAIR_OFFSETS)}, got {neighborhood!r}"
        ) from None
    labels: list[str] = []
    index: dict[Cell, int] = {}

    def intern(cell: Cell) -> int:
        idx = index.get(cell)
        if idx is None:
            idx = len(labels)
            index[cell] = idx
            labels.append(cell_label(cell))
        return idx

    point_edges = []
    for t, board in enumerate(trace):
        for cell in sorted(board):
            intern(cell)
        for x, y in sorted(board):
            for dx, dy in offsets:
                other = (x + dx, y + dy)
                if other in board:
                    point_edges.append((index[(x, y)], index[other], float(t)))
    g = InputTemporalGraph(labels=labels)
    g.point_edges = point_edges
    return g


def node_color_labels(
    trace: list[set[Cell]],
    red_cells: Iterable[Cell],
    blue_cells: Iterable[Cell],
) -> dict[str, str]:
    """Attribute trace cells to glider trajectories.

    Each seed pattern is re-simulated alone for the trace length; cells
    touched only by the red run map to "red", only by the blue run to
    "blue", and by both to "yellow".  Cells of the trace reachable by
    neither solo run (possible only if the patterns interact) are left
    unlabeled.  Keys are node labels as produced by :func:`cell_label`.
    """
    steps = len(trace)
    red_traj = set().union(*simulate(red_cells, steps))
    blue_traj = set().union(*simulate(blue_cells, steps))
    seen = set().union(*trace) if trace else set()
    colors = {}
    for cell in sorted(seen):
        in_red = cell in red_traj
        in_blue = cell in blue_traj
        if in_red and in_blue:
            colors[cell_label(cell)] = "yellow"
        elif in_red:
            colors[cell_label(cell)] = "red"
        elif in_blue:
            colors[cell_label(cell)] = "blue"
    return colors
