"""Random-walk subgraph extraction and random edge deletion.

All randomness flows through an explicit RngHandle; nothing touches global
RNG state, so a seed fully determines every sample and each experiment round
can own an independent handle.
"""

from __future__ import annotations

import random

from .graph import Graph, GraphError


class RngHandle:
    """Seeded random generator; the same seed replays the same draws.

    A handle is stateful and must not be shared across threads; derive
    independent handles instead.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self.generator = random.Random(self.seed)

    def derive(self, offset: int) -> "RngHandle":
        """Fresh handle with seed + offset, e.g. one per experiment round."""
        return RngHandle(self.seed + int(offset))

    def choice(self, seq):
        return self.generator.choice(seq)

    def random(self) -> float:
        return self.generator.random()

    def __repr__(self) -> str:
        return f"RngHandle(seed={self.seed})"


def random_walk_sample(g: Graph, size: int, rng: RngHandle,
                       max_iter: int = 100) -> Graph:
    """Induced subgraph on `size` nodes collected by a random walk.

    The walk starts at a uniform random node and repeatedly moves to a
    uniform random neighbor (or a uniform random node of the whole graph
    when the current node is isolated). Steps that revisit known nodes
    count toward a stagnation counter; after max_iter stagnant steps the
    walk jumps to a uniform random not-yet-collected node (the jump target
    itself is only collected once the walk steps onto it through the usual
    rule). The counter resets on progress and on jumps. If every node is
    already collected the walk stops early with what it has.
    """
    if size <= 0:
        raise GraphError(f"sample size must be positive, got {size}")
    if size > g.num_nodes:
        raise GraphError(f"sample size {size} exceeds graph size {g.num_nodes}")

    all_nodes = list(g.nodes)
    current = rng.choice(all_nodes)
    visited = [current]
    visited_set = {current}
    stagnant = 0

    while len(visited) < size:
        nbrs = g.neighbors(current)
        nxt = rng.choice(nbrs) if nbrs else rng.choice(all_nodes)
        if nxt not in visited_set:
            visited.append(nxt)
            visited_set.add(nxt)
            stagnant = 0
        else:
            stagnant += 1
        if stagnant >= max_iter:
            potential = sorted(set(all_nodes) - visited_set)
            if not potential:
                break
            nxt = rng.choice(potential)
            stagnant = 0
        current = nxt

    return g.induced_subgraph(visited)


def delete_edges_randomly(g: Graph, p: float, rng: RngHandle) -> Graph:
    """Drop each edge independently with probability p; nodes are untouched.

    Edges are drawn in canonical order, so the handle's seed pins the result.
    """
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"deletion probability must be in [0, 1], got {p}")
    kept = [e for e in g.edges if rng.random() >= p]
    edge_w = None
    if g.edge_weights is not None:
        kept_set = set(kept)
        edge_w = {e: w for e, w in g.edge_weights.items() if e in kept_set}
    return Graph(g.num_nodes, kept, node_weights=g.node_weights,
                 edge_weights=edge_w, original_labels=g.original_labels)
