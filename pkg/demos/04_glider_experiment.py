# The two-glider experiment, end to end.
#
# Two Game of Life gliders travel toward each other's path and cross it at
# different times.  The temporal graph of simultaneous neighbor contacts is
# spatially connected at the crossover, yet time-respecting walks can never
# leak from one trajectory into the other: the crossover cells are busy at
# times ~24 steps apart, far beyond the +-2 reach of a unit window
# extension.  Embeddings trained on such walks keep the trajectories apart.
#
# This script runs a reduced setup (80 simulation steps, shorter walks) so
# it finishes in a few seconds; raise STEPS/WALK_LENGTH to 200/480 for the
# full-scale version.

import numpy as np

from walkingtime import (
    TrainConfig,
    WalkConfig,
    emit_scatter,
    node_color_labels,
    paper_initial_config,
    sample_corpus,
    simulate,
    train_skipgram,
    transform_graph,
)
from walkingtime.gol import boards_to_temporal_graph

STEPS = 80
WALK_LENGTH = 160
SEED = 4

red, blue = paper_initial_config()
trace = simulate(red | blue, STEPS)
raw = boards_to_temporal_graph(trace)
colors = node_color_labels(trace, red, blue)
print(f"{STEPS} boards -> {raw.num_nodes} nodes, {raw.num_edges} contact edges")
print(f"colors: { {c: sum(1 for v in colors.values() if v == c) for c in ('red', 'blue', 'yellow')} }")

g = transform_graph(raw, 1.0)
cfg = WalkConfig(walk_length=WALK_LENGTH, walks_per_node=10,
                 p=10_000.0, q=1 / 10_000.0, seed=SEED)
corpus = sample_corpus(g, cfg)
print(f"sampled {len(corpus)} walks")

emb = train_skipgram(corpus, TrainConfig(window=10, epochs=5, dim=2, seed=SEED),
                     n_nodes=g.num_nodes)

# nearest-centroid check on the two trajectories (crossover cells excluded)
index = {lab: i for i, lab in enumerate(g.labels)}
vec = emb.input_vectors
reds = np.array([index[l] for l, c in colors.items() if c == "red"])
blues = np.array([index[l] for l, c in colors.items() if c == "blue"])
c_red, c_blue = vec[reds].mean(0), vec[blues].mean(0)
hits = sum(np.linalg.norm(vec[i] - c_red) <= np.linalg.norm(vec[i] - c_blue) for i in reds)
hits += sum(np.linalg.norm(vec[i] - c_blue) < np.linalg.norm(vec[i] - c_red) for i in blues)
print(f"nearest-centroid accuracy: {hits / (len(reds) + len(blues)):.3f}")

svg = emit_scatter(g.labels, vec, colors)
with open("glider_embedding.svg", "w") as fh:
    fh.write(svg)
print("wrote glider_embedding.svg")
