"""Temporal graph embeddings from time-respecting biased random walks.

Pipeline: parse heterogeneous temporal edge data, widen every edge interval
by a symmetric window extension, sample walks constrained by the active-edge
recursion, and train skip-gram embeddings on the walk corpus.
"""

from .alias import AliasTable
from .embedding import (
    EmbeddingFormatError,
    EmbeddingMatrix,
    NoPairsError,
    TrainConfig,
    extract_pairs,
    init_matrices,
    load_embeddings,
    mean_pair_loss,
    node_frequencies,
    save_embeddings,
    sgns_pair_loss_and_grads,
    train_skipgram,
)
from .gol import (
    boards_to_temporal_graph,
    cell_label,
    gol_step,
    node_color_labels,
    paper_initial_config,
    simulate,
)
from .graph import (
    InputTemporalGraph,
    ParseError,
    StaticGraph,
    TemporalEdge,
    TemporalGraph,
    format_edge_list,
    intervals_intersect,
    parse_input,
    restrict_node,
    restrict_pair,
    static_union,
    transform_graph,
)
from .lambda_diag import (
    GapSamplingError,
    LambdaHistogram,
    pair_gap_statistic,
    sample_gap_histogram,
)
from .pipeline import PipelineConfig, run_walkingtime
from .plotting import emit_scatter, format_label_colors, read_label_colors
from .walker import (
    ActiveEdgeSet,
    InvalidStepError,
    Walk,
    WalkConfig,
    WalkCorpus,
    advance_active,
    format_corpus,
    initial_active,
    sample_corpus,
    sample_step_exact,
    sample_step_rejection,
    sample_walk,
    step_candidates,
    transition_distribution,
    validate_walk,
)

__version__ = "0.1.0"
