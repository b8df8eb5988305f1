"""Signature matrices (degree and Ricci modes), assignment, and scoring.

Both alignment flavors share one shape: an N x m matrix whose row for node v
lists a feature of v's neighbors in ascending order, zero-padded on the
right, with m the common maximum degree of the graph pair. Degree mode (DMC)
uses neighbor degrees; Ricci mode (RMC) swaps in the neighbors' Forman-Ricci
node curvatures. Rows are compared by Euclidean distance and matched with an
exact minimum-cost assignment solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from pathlib import Path

import numpy as np

from .graph import Graph, GraphError
from .curvature import node_curvatures


@dataclass(frozen=True)
class SignatureMatrix:
    """Per-node feature rows of one graph.

    rows[i] belongs to node_order[i]; entries are ascending with zero padding
    on the right, so node i has exactly deg(i) feature slots. mode is
    "degree" or "ricci".
    """

    rows: np.ndarray
    node_order: tuple
    mode: str

    @property
    def width(self) -> int:
        return self.rows.shape[1]


@dataclass(frozen=True)
class Assignment:
    """A bijective node mapping between two graphs and its total cost."""

    mapping: dict
    total_cost: float


def common_max_degree(g1: Graph, g2: Graph) -> int:
    """Maximum degree across both graphs: the shared signature width m."""
    return max(g1.max_degree(), g2.max_degree())


def _signature_rows(g: Graph, m: int, features) -> np.ndarray:
    if m < g.max_degree():
        raise GraphError(f"width {m} is below the maximum degree {g.max_degree()}")
    rows = np.zeros((g.num_nodes, m), dtype=np.int64)
    for v in g.nodes:
        vals = sorted(features[w] for w in g.neighbors(v))
        rows[v, :len(vals)] = vals
    return rows


def degree_matrix(g: Graph, m: int) -> SignatureMatrix:
    """Rows of sorted neighbor degrees, zero-padded to width m."""
    degrees = [g.degree(v) for v in g.nodes]
    return SignatureMatrix(rows=_signature_rows(g, m, degrees),
                           node_order=tuple(g.nodes), mode="degree")


def ricci_matrix(g: Graph, m: int) -> SignatureMatrix:
    """Rows of sorted neighbor node curvatures, zero-padded to width m.

    Same dimensions as the degree matrix: a row still has deg(v) feature
    slots, they just hold curvatures. Unweighted graphs only, which keeps
    every entry an exact integer.
    """
    if not g.is_unweighted:
        raise GraphError("ricci signature matrices are defined for unweighted graphs")
    return SignatureMatrix(rows=_signature_rows(g, m, node_curvatures(g)),
                           node_order=tuple(g.nodes), mode="ricci")


def cost_matrix(m1: SignatureMatrix, m2: SignatureMatrix) -> np.ndarray:
    """Pairwise Euclidean distances between rows of two signature matrices.

    Squared distances are accumulated in integer arithmetic, so an entry is
    exactly 0.0 iff the two rows are identical.
    """
    if m1.width != m2.width:
        raise GraphError(f"signature widths differ: {m1.width} vs {m2.width}")
    if m1.mode != m2.mode:
        raise GraphError(f"signature modes differ: {m1.mode} vs {m2.mode}")
    a, b = m1.rows, m2.rows
    sq = (a * a).sum(axis=1)[:, None] + (b * b).sum(axis=1)[None, :] - 2 * (a @ b.T)
    return np.sqrt(np.maximum(sq, 0).astype(np.float64))


def hungarian(cost) -> Assignment:
    """Exact minimum-cost perfect assignment on a square cost matrix.

    Shortest-augmenting-path implementation (the O(n^3) potential form of
    the Hungarian method). Rows are processed in ascending order and column
    ties resolve to the lowest index, so the result is deterministic.
    Requires finite nonnegative entries.
    """
    c = np.asarray(cost, dtype=np.float64)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise GraphError(f"cost matrix must be square, got shape {c.shape}")
    if not np.isfinite(c).all():
        raise GraphError("cost matrix contains non-finite entries")
    if c.size and c.min() < 0:
        raise GraphError("cost matrix contains negative entries")

    n = c.shape[0]
    u = np.zeros(n, dtype=np.float64)       # row potentials
    v = np.zeros(n + 1, dtype=np.float64)   # column potentials, last is virtual
    col_row = np.full(n + 1, -1, dtype=np.int64)  # matched row per column

    for i in range(n):
        col_row[n] = i
        j0 = n
        minv = np.full(n, np.inf)
        way = np.full(n, n, dtype=np.int64)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = col_row[j0]
            free = ~used[:n]
            reduced = c[i0] - u[i0] - v[:n]
            better = free & (reduced < minv)
            minv = np.where(better, reduced, minv)
            way = np.where(better, j0, way)
            candidates = np.where(free, minv, np.inf)
            j1 = int(np.argmin(candidates))
            delta = candidates[j1]
            used_cols = np.flatnonzero(used)
            u[col_row[used_cols]] += delta
            v[used_cols] -= delta
            minv = np.where(free, minv - delta, minv)
            j0 = j1
            if col_row[j0] == -1:
                break
        while j0 != n:
            j1 = int(way[j0])
            col_row[j0] = col_row[j1]
            j0 = j1

    mapping = {int(col_row[j]): j for j in range(n)}
    total = float(sum(c[r, j] for r, j in mapping.items()))
    return Assignment(mapping=mapping, total_cost=total)


def align(g1: Graph, g2: Graph, mode: str = "ricci") -> Assignment:
    """Full alignment: signature matrices at the common width, cost, solve.

    The graphs must have the same node count; the returned mapping sends
    g1 node ids to g2 node ids.
    """
    if g1.num_nodes != g2.num_nodes:
        raise GraphError(
            f"graphs must have equal node counts, got {g1.num_nodes} and {g2.num_nodes}")
    if mode not in ("degree", "ricci"):
        raise GraphError(f"mode must be 'degree' or 'ricci', got {mode!r}")
    m = common_max_degree(g1, g2)
    build = degree_matrix if mode == "degree" else ricci_matrix
    return hungarian(cost_matrix(build(g1, m), build(g2, m)))


def score_alignment(a: Assignment) -> tuple[int, float]:
    """Count of fixed points (node mapped to its own id) and the percentage."""
    correct = sum(1 for src, dst in a.mapping.items() if src == dst)
    if not a.mapping:
        return 0, 0.0
    return correct, 100.0 * correct / len(a.mapping)


def _neighbor_degree_signature(g: Graph, v: int) -> list[list[int]]:
    return [sorted(g.degree(x) for x in g.neighbors(w)) for w in g.neighbors(v)]


def are_nodes_equivalent(g: Graph, u: int, v: int) -> bool:
    """Geometric equivalence test for low-degree nodes.

    True iff both nodes have degree 1, 2, or 3 and some permutation of u's
    per-neighbor sorted neighbor-degree lists equals v's. Used when counting
    alignment hits geometrically instead of by node id.
    """
    if g.degree(u) not in (1, 2, 3) or g.degree(v) not in (1, 2, 3):
        return False
    sig_u = _neighbor_degree_signature(g, u)
    sig_v = _neighbor_degree_signature(g, v)
    return any(list(perm) == sig_v for perm in permutations(sig_u))


def write_assignment_csv(a: Assignment, cost, path) -> None:
    """Write `g1_node,g2_node,row_cost` lines in g1 node order."""
    c = np.asarray(cost, dtype=np.float64)
    path = Path(path)
    with path.open("w") as fh:
        fh.write("g1_node,g2_node,row_cost\n")
        for src in sorted(a.mapping):
            dst = a.mapping[src]
            fh.write(f"{src},{dst},{c[src, dst]}\n")
