"""Undirected graphs with dense integer node ids, plus file ingestion.

Graphs are immutable after construction: node ids are always the dense range
0..N-1, edges are stored as canonical (min, max) pairs, and optional positive
node/edge weights default to 1. Immutability makes concurrent reads safe and
keeps every downstream matrix row order reproducible.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path


class GraphError(ValueError):
    """Structural violation: bad node id, self-loop, nonpositive weight, ..."""


class GraphMLError(GraphError):
    """The file is not a readable undirected GraphML document."""


class DirectedGraphError(GraphMLError):
    """The GraphML document declares directed edges."""


def canonical_pair(u: int, v: int) -> tuple[int, int]:
    """Return the (min, max) form of an edge; self-loops are rejected."""
    if u == v:
        raise GraphError(f"self-loop at node {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected graph on nodes 0..N-1.

    Parameters
    ----------
    num_nodes:
        Node count N; nodes are exactly 0..N-1.
    edges:
        Iterable of id pairs. Pairs are canonicalized and deduplicated;
        self-loops and out-of-range endpoints raise GraphError.
    node_weights, edge_weights:
        Optional strictly positive weights. Absent means unweighted
        (equivalently: all weights 1).
    original_labels:
        Optional map id -> string recording where a node came from
        (GraphML id, parent-graph id, originating edge, ...).
    """

    __slots__ = ("num_nodes", "edges", "node_weights", "edge_weights",
                 "original_labels", "_adj", "_edge_set")

    def __init__(self, num_nodes, edges, node_weights=None, edge_weights=None,
                 original_labels=None):
        if num_nodes < 0:
            raise GraphError(f"negative node count {num_nodes}")
        self.num_nodes = int(num_nodes)

        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for u, v in edges:
            pair = canonical_pair(int(u), int(v))
            if not (0 <= pair[0] and pair[1] < self.num_nodes):
                raise GraphError(f"edge {pair} has an endpoint outside 0..{self.num_nodes - 1}")
            if pair in seen:
                continue
            seen.add(pair)
            adj[pair[0]].append(pair[1])
            adj[pair[1]].append(pair[0])

        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self._edge_set = frozenset(seen)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

        if node_weights is not None:
            node_weights = {int(v): float(w) for v, w in node_weights.items()}
            for v, w in node_weights.items():
                self._require_node(v)
                if w <= 0:
                    raise GraphError(f"nonpositive weight {w} on node {v}")
        if edge_weights is not None:
            edge_weights = {canonical_pair(*e): float(w) for e, w in edge_weights.items()}
            for e, w in edge_weights.items():
                if e not in self._edge_set:
                    raise GraphError(f"weight given for missing edge {e}")
                if w <= 0:
                    raise GraphError(f"nonpositive weight {w} on edge {e}")
        self.node_weights = node_weights
        self.edge_weights = edge_weights
        self.original_labels = dict(original_labels) if original_labels else None

    # -- basic accessors ---------------------------------------------------

    @property
    def nodes(self) -> range:
        return range(self.num_nodes)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def _require_node(self, v: int) -> None:
        if not (0 <= v < self.num_nodes):
            raise GraphError(f"unknown node id {v} (graph has {self.num_nodes} nodes)")

    def degree(self, v: int) -> int:
        """Number of incident edges of v."""
        self._require_node(v)
        return len(self._adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Adjacent node ids in ascending order."""
        self._require_node(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    # -- weights -----------------------------------------------------------

    @property
    def is_unweighted(self) -> bool:
        """True when every node and edge weight is (implicitly) 1."""
        if self.node_weights and any(w != 1.0 for w in self.node_weights.values()):
            return False
        if self.edge_weights and any(w != 1.0 for w in self.edge_weights.values()):
            return False
        return True

    def node_weight(self, v: int) -> float:
        self._require_node(v)
        if self.node_weights is None:
            return 1.0
        return self.node_weights.get(v, 1.0)

    def edge_weight(self, u: int, v: int) -> float:
        pair = canonical_pair(u, v)
        if pair not in self._edge_set:
            raise GraphError(f"no edge {pair}")
        if self.edge_weights is None:
            return 1.0
        return self.edge_weights.get(pair, 1.0)

    # -- structure ---------------------------------------------------------

    def is_connected(self) -> bool:
        """True iff the graph has a single connected component (N >= 1)."""
        if self.num_nodes == 0:
            raise GraphError("connectivity is undefined for the empty graph")
        seen = bytearray(self.num_nodes)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    stack.append(y)
        return count == self.num_nodes

    def induced_subgraph(self, keep) -> "Graph":
        """Subgraph on `keep` with all internal edges, relabeled to 0..k-1.

        Kept nodes are relabeled in ascending parent-id order; each new node's
        original_labels entry records the parent label (or the parent id when
        the parent graph is unlabeled).
        """
        keep = sorted(set(keep))
        for v in keep:
            self._require_node(v)
        index = {v: i for i, v in enumerate(keep)}
        sub_edges = [(index[u], index[v]) for u, v in self.edges
                     if u in index and v in index]
        labels = {}
        for v, i in index.items():
            if self.original_labels and v in self.original_labels:
                labels[i] = self.original_labels[v]
            else:
                labels[i] = str(v)
        node_w = None
        if self.node_weights is not None:
            node_w = {index[v]: w for v, w in self.node_weights.items() if v in index}
        edge_w = None
        if self.edge_weights is not None:
            edge_w = {(index[u], index[v]): w for (u, v), w in self.edge_weights.items()
                      if u in index and v in index}
        return Graph(len(keep), sub_edges, node_weights=node_w,
                     edge_weights=edge_w, original_labels=labels)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.num_nodes == other.num_nodes
                and self.edges == other.edges
                and self.node_weights == other.node_weights
                and self.edge_weights == other.edge_weights)

    def __hash__(self):
        return hash((self.num_nodes, self.edges))

    def __repr__(self) -> str:
        return f"Graph(num_nodes={self.num_nodes}, num_edges={self.num_edges})"


def from_edge_list(pairs, n: int | None = None) -> Graph:
    """Build a graph from id pairs, inferring N = max id + 1 unless given.

    Passing `n` larger than any referenced id adds isolated nodes.
    """
    pairs = [(int(u), int(v)) for u, v in pairs]
    max_ref = max((max(u, v) for u, v in pairs), default=-1)
    if n is None:
        n = max_ref + 1
    elif n < max_ref + 1:
        raise GraphError(f"n={n} is smaller than max referenced id {max_ref}")
    return Graph(n, pairs)


# -- GraphML ingestion (read-only, undirected subset) -----------------------

_GRAPHML_NS = "{http://graphml.graphdrawing.org/xmlns}"


def _local_name(tag) -> str:
    return tag.rsplit("}", 1)[-1] if isinstance(tag, str) else ""


def load_graphml(path) -> Graph:
    """Read an undirected GraphML file.

    Nodes are relabeled to 0..N-1 in document order; the original string ids
    are kept in ``original_labels``. Only node ids and edge endpoints are
    read; other attributes are ignored. Self-loops and duplicate edges in the
    file are dropped. A directed edge declaration (``edgedefault="directed"``
    or a per-edge ``directed="true"``) raises DirectedGraphError.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"no such GraphML file: {path}")
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as exc:
        raise GraphMLError(f"malformed XML in {path}: {exc}") from exc

    graph_el = None
    for el in root.iter():
        if _local_name(el.tag) == "graph":
            graph_el = el
            break
    if graph_el is None:
        raise GraphMLError(f"no <graph> element in {path}")
    if graph_el.get("edgedefault", "undirected").lower() == "directed":
        raise DirectedGraphError(f"{path} declares edgedefault=\"directed\"")

    ids: dict[str, int] = {}
    for el in graph_el.iter():
        if _local_name(el.tag) == "node":
            raw = el.get("id")
            if raw is None:
                raise GraphMLError("node element without id attribute")
            if raw not in ids:
                ids[raw] = len(ids)

    edges: list[tuple[int, int]] = []
    for el in graph_el.iter():
        if _local_name(el.tag) != "edge":
            continue
        if el.get("directed", "false").lower() == "true":
            raise DirectedGraphError(f"{path} contains a directed edge")
        src, dst = el.get("source"), el.get("target")
        if src is None or dst is None:
            raise GraphMLError("edge element without source/target")
        if src not in ids or dst not in ids:
            raise GraphMLError(f"edge references unknown node id {src!r} or {dst!r}")
        if src == dst:
            continue
        edges.append((ids[src], ids[dst]))

    labels = {i: raw for raw, i in ids.items()}
    return Graph(len(ids), edges, original_labels=labels)


# -- plain edge-list text format --------------------------------------------

def read_edge_list(path) -> Graph:
    """Read the `u v` per-line format, with `#` comments and optional `n=<N>`."""
    path = Path(path)
    n = None
    pairs = []
    with path.open() as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("n="):
                n = int(line[2:])
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"{path}:{lineno}: expected 'u v', got {line!r}")
            pairs.append((int(parts[0]), int(parts[1])))
    return from_edge_list(pairs, n=n)


def write_edge_list(g: Graph, path) -> None:
    """Write a graph in the edge-list text format, with an `n=` header."""
    path = Path(path)
    with path.open("w") as fh:
        fh.write(f"n={g.num_nodes}\n")
        for u, v in g.edges:
            fh.write(f"{u} {v}\n")
