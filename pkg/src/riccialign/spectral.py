"""Graph Laplacian, labeled signature vectors, and the curvature identity.

Everything here stays in exact integer arithmetic: for every node i of an
unweighted graph,

    Ric(v_i) - (L s^T)_i = 2 deg(v_i) (1 - deg(v_i))

holds with equality, where L = D - A and s is the labeled signature vector
of v_i. That residual is the module's main export.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, GraphError
from .curvature import node_curvature


def laplacian(g: Graph) -> np.ndarray:
    """Dense integer Laplacian L = D - A (degree diagonal minus adjacency)."""
    n = g.num_nodes
    lap = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        lap[u, v] = -1
        lap[v, u] = -1
        lap[u, u] += 1
        lap[v, v] += 1
    return lap


def labeled_signature_vector(g: Graph, i: int) -> np.ndarray:
    """Length-N vector s with s_l = deg(v_l) for neighbors of i, deg(v_i) otherwise.

    The self slot l = i takes the "otherwise" branch, i.e. deg(v_i).
    """
    d_i = g.degree(i)
    s = np.full(g.num_nodes, d_i, dtype=np.int64)
    for l in g.neighbors(i):
        s[l] = g.degree(l)
    return s


def curvature_laplacian_residual(g: Graph, i: int) -> int:
    """Ric(v_i) - (L s^T)_i, computed with the actual matrix product.

    For unweighted graphs this equals 2 deg(v_i) (1 - deg(v_i)) exactly;
    weighted graphs are rejected.
    """
    if not g.is_unweighted:
        raise GraphError("the curvature-Laplacian identity only holds unweighted")
    s = labeled_signature_vector(g, i)
    return int(node_curvature(g, i) - (laplacian(g) @ s)[i])


def curvature_laplacian_holds(g: Graph) -> bool:
    """Check the identity at every node of an unweighted graph."""
    if not g.is_unweighted:
        raise GraphError("the curvature-Laplacian identity only holds unweighted")
    lap = laplacian(g)
    for i in g.nodes:
        s = labeled_signature_vector(g, i)
        d = g.degree(i)
        if node_curvature(g, i) - int((lap[i] @ s)) != 2 * d * (1 - d):
            return False
    return True
