"""Generators for regularly tiled rings and their lifted 3D tori.

The triangular ring is a fixed 18-node instance (a hexagonal ring of
equilateral triangles); the square frame and the mixed hexagon/square/triangle
tiling are the other flat one-hole shapes. ``lift_to_3d`` duplicates a flat
ring and joins corresponding nodes, which is the torus used throughout the
alignment experiments. Coordinates are plotting metadata only and never feed
any algorithm.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .graph import Graph, GraphError, canonical_pair

# Hexagonal ring of triangles: inner hexagon 0..5, outer ring 6..17
# (ids are the manual construction's 1..18 shifted down by one).
TRIANGULAR_RING_EDGES: tuple[tuple[int, int], ...] = tuple(sorted(
    (u - 1, v - 1) if u < v else (v - 1, u - 1)
    for u, v in [
        (1, 2), (1, 6), (1, 7), (1, 8), (1, 9),
        (2, 9), (2, 10), (2, 11), (2, 3),
        (3, 11), (3, 12), (3, 13), (3, 4),
        (4, 13), (4, 14), (4, 15), (4, 5),
        (5, 15), (5, 16), (5, 17), (5, 6),
        (6, 17), (6, 18), (6, 7), (7, 8),
        (7, 18), (8, 9), (9, 10), (10, 11),
        (11, 12), (12, 13), (13, 14), (14, 15),
        (15, 16), (16, 17), (17, 18),
    ]
))

_TRIANGULAR_RING_POSITIONS = {
    0: (1, 1), 1: (2, 0), 2: (1, -1), 3: (-1, -1), 4: (-2, 0), 5: (-1, 1),
    6: (0, 2), 7: (2, 2), 8: (3, 1), 9: (4, 0), 10: (3, -1), 11: (2, -2),
    12: (0, -2), 13: (-2, -2), 14: (-3, -1), 15: (-4, 0), 16: (-3, 1),
    17: (-2, 2),
}


def triangular_ring_2d() -> Graph:
    """The 18-node, 36-edge triangulated hexagonal ring."""
    return Graph(18, TRIANGULAR_RING_EDGES)


def triangular_ring_positions() -> dict[int, tuple[float, float]]:
    """Plotting coordinates of the triangular ring's nodes."""
    return {v: (float(x), float(y)) for v, (x, y) in _TRIANGULAR_RING_POSITIONS.items()}


def square_frame_2d(side: int) -> Graph:
    """Boundary cycle of a side x side node grid (a square frame with one hole).

    side >= 3 so a hole exists; the result is the cycle on 4*(side-1) nodes,
    numbered in row-major grid order.
    """
    if side < 3:
        raise GraphError(f"side must be >= 3 to enclose a hole, got {side}")
    boundary = [(r, c) for r in range(side) for c in range(side)
                if r in (0, side - 1) or c in (0, side - 1)]
    index = {p: i for i, p in enumerate(boundary)}
    edges = []
    for r, c in boundary:
        for q in ((r, c + 1), (r + 1, c)):
            if q in index:
                edges.append((index[(r, c)], index[q]))
    return Graph(len(boundary), edges)


def square_frame_positions(side: int) -> dict[int, tuple[float, float]]:
    boundary = [(r, c) for r in range(side) for c in range(side)
                if r in (0, side - 1) or c in (0, side - 1)]
    return {i: (float(c), float(-r)) for i, (r, c) in enumerate(boundary)}


def mixed_tiling_2d() -> Graph:
    """Hexagon ringed by six squares, with six triangles filling the gaps.

    Nodes 0..5 are the central hexagon; square i on hexagon edge (i, i+1)
    adds outer corners 6+2i (above vertex i) and 7+2i (above vertex i+1).
    The 60-degree gap at each hexagon vertex is closed by one triangle edge
    between the adjacent squares' outer corners. 18 nodes, 30 edges.
    """
    edges = []
    for i in range(6):
        j = (i + 1) % 6
        a_i, b_i = 6 + 2 * i, 7 + 2 * i
        edges.append((i, j))            # hexagon boundary
        edges.append((i, a_i))          # square sides
        edges.append((j, b_i))
        edges.append((a_i, b_i))        # square outer side
        b_prev = 7 + 2 * ((i - 1) % 6)
        edges.append((b_prev, a_i))     # gap triangle's outer edge
    return Graph(18, edges)


def mixed_tiling_positions() -> dict[int, tuple[float, float]]:
    pos = {}
    for i in range(6):
        angle = math.pi / 3 * i
        pos[i] = (math.cos(angle), math.sin(angle))
    for i in range(6):
        j = (i + 1) % 6
        (xi, yi), (xj, yj) = pos[i], pos[j]
        # outward unit normal of hexagon edge (i, j)
        nx, ny = (xi + xj) / 2, (yi + yj) / 2
        norm = math.hypot(nx, ny)
        nx, ny = nx / norm, ny / norm
        pos[6 + 2 * i] = (xi + nx, yi + ny)
        pos[7 + 2 * i] = (xj + nx, yj + ny)
    return pos


def lift_to_3d(g2d: Graph) -> Graph:
    """Two copies of g2d joined by one vertical edge per node.

    Node v of the flat graph becomes v (bottom) and v + N (top), so
    N' = 2N and |E'| = 2|E| + N. Weights and labels carry over to both
    copies; vertical edges are unweighted.
    """
    n = g2d.num_nodes
    edges = list(g2d.edges)
    edges += [(u + n, v + n) for u, v in g2d.edges]
    edges += [(v, v + n) for v in range(n)]
    node_w = None
    if g2d.node_weights is not None:
        node_w = dict(g2d.node_weights)
        node_w.update({v + n: w for v, w in g2d.node_weights.items()})
    edge_w = None
    if g2d.edge_weights is not None:
        edge_w = dict(g2d.edge_weights)
        edge_w.update({(u + n, v + n): w for (u, v), w in g2d.edge_weights.items()})
    labels = None
    if g2d.original_labels is not None:
        labels = dict(g2d.original_labels)
        labels.update({v + n: lab + "+top" for v, lab in g2d.original_labels.items()})
    return Graph(2 * n, edges, node_weights=node_w, edge_weights=edge_w,
                 original_labels=labels)


def lift_positions(positions, offset=(10.0, 3.0)) -> dict[int, tuple[float, float]]:
    """Plotting coordinates for a lifted graph: the top copy is shifted."""
    n = len(positions)
    out = {v: (float(x), float(y)) for v, (x, y) in positions.items()}
    out.update({v + n: (x + offset[0], y + offset[1]) for v, (x, y) in positions.items()})
    return out


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cliques of g, each as an ascending triple, lexicographically sorted."""
    out = []
    for u, v in g.edges:
        for w in g.neighbors(u):
            if w > v and g.has_edge(v, w):
                out.append((u, v, w))
    return sorted(out)


def triangulate_prisms(g: Graph, prisms) -> Graph:
    """Split each prism of a lifted triangular tiling into tetrahedra.

    Every prism is a (bottom, top) pair of corresponding node triples: both
    triples must be triangles of g and bottom[i] must be joined to top[i].
    Three diagonals bottom[i] -> top[(i+1) % 3] are added per prism; a
    diagonal that already exists (a shared face triangulated twice the same
    way) is simply not duplicated.
    """
    new_edges = set(g.edges)
    for bottom, top in prisms:
        bottom, top = tuple(bottom), tuple(top)
        if len(bottom) != 3 or len(top) != 3:
            raise GraphError(f"prism faces must be node triples: {bottom}, {top}")
        for tri in (bottom, top):
            for a, b in combinations(tri, 2):
                if not g.has_edge(a, b):
                    raise GraphError(f"{tri} is not a triangle of the graph")
        for i in range(3):
            if not g.has_edge(bottom[i], top[i]):
                raise GraphError(
                    f"prism faces {bottom}/{top} do not correspond: "
                    f"no vertical edge ({bottom[i]}, {top[i]})")
        for i in range(3):
            new_edges.add(canonical_pair(bottom[i], top[(i + 1) % 3]))
    return Graph(g.num_nodes, sorted(new_edges), node_weights=g.node_weights,
                 edge_weights=g.edge_weights, original_labels=g.original_labels)


@dataclass(frozen=True)
class TorusSpec:
    """Recipe for a tiled ring or torus.

    prism_triangulated requires a lifted triangular tiling.
    """

    tiling: str = "triangular"
    lifted: bool = False
    prism_triangulated: bool = False

    def __post_init__(self):
        if self.tiling not in ("triangular", "square", "mixed"):
            raise GraphError(f"unknown tiling {self.tiling!r}")
        if self.prism_triangulated and not (self.tiling == "triangular" and self.lifted):
            raise GraphError("prism triangulation requires a lifted triangular tiling")


def build_torus(spec: TorusSpec, square_side: int = 4) -> Graph:
    """Materialize a TorusSpec; `square_side` only applies to square tiling."""
    if spec.tiling == "triangular":
        flat = triangular_ring_2d()
    elif spec.tiling == "square":
        flat = square_frame_2d(square_side)
    else:
        flat = mixed_tiling_2d()
    if not spec.lifted:
        return flat
    lifted = lift_to_3d(flat)
    if not spec.prism_triangulated:
        return lifted
    n = flat.num_nodes
    prisms = [(tri, tuple(v + n for v in tri)) for tri in triangles(flat)]
    return triangulate_prisms(lifted, prisms)


def write_layout_json(g: Graph, positions, path) -> None:
    """Write nodes with coordinates and the edge list as JSON for plotting."""
    payload = {
        "nodes": [{"id": v, "x": positions[v][0], "y": positions[v][1]}
                  for v in g.nodes],
        "edges": [[u, v] for u, v in g.edges],
    }
    Path(path).write_text(json.dumps(payload, indent=2))
