"""Line-graph transformation with provenance back to the original edges.

The line graph L(G) has one node per edge of G, with two nodes adjacent iff
the originating edges share an endpoint. Each original node of degree d
therefore becomes a d-clique, which is what makes line graphs useful as
denser, more surface-like stand-ins for the original network.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .graph import Graph, GraphError


@dataclass(frozen=True)
class LineGraphResult:
    """A line graph plus the map from its node ids to the original edges."""

    graph: Graph
    node_origin: dict


def line_graph(g: Graph) -> LineGraphResult:
    """Build L(G). New node ids follow the lexicographic order of g.edges.

    The node_origin map records new id -> originating (u, v) pair, and the
    returned graph's original_labels carry "u-v" strings (using the parent's
    labels when it has any). Construction is quadratic in the largest degree,
    which is accepted: each degree-d node emits its d-choose-2 clique edges.
    """
    if g.num_edges == 0:
        raise GraphError("line graph of an edgeless graph is undefined here")
    edge_index = {e: i for i, e in enumerate(g.edges)}
    incident: list[list[int]] = [[] for _ in range(g.num_nodes)]
    for e, i in edge_index.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)

    new_edges = []
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                new_edges.append((ids[a], ids[b]))

    def label(v: int) -> str:
        if g.original_labels and v in g.original_labels:
            return g.original_labels[v]
        return str(v)

    labels = {i: f"{label(u)}-{label(v)}" for (u, v), i in edge_index.items()}
    lg = Graph(g.num_edges, new_edges, original_labels=labels)
    origin = {i: e for e, i in edge_index.items()}
    return LineGraphResult(graph=lg, node_origin=origin)


def edge_pair_count(g: Graph) -> int:
    """Number of adjacent edge pairs, sum over nodes of C(deg, 2).

    This is |E(L(G))|, kept as an independent size oracle for line_graph.
    """
    return sum(g.degree(v) * (g.degree(v) - 1) // 2 for v in g.nodes)


def write_origin_csv(result: LineGraphResult, path) -> None:
    """Write the provenance map as `new_id,orig_u,orig_v` lines."""
    path = Path(path)
    with path.open("w") as fh:
        fh.write("new_id,orig_u,orig_v\n")
        for i in sorted(result.node_origin):
            u, v = result.node_origin[i]
            fh.write(f"{i},{u},{v}\n")
