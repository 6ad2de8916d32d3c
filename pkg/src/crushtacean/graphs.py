"""Painted graphs, rotation systems, faces and duals.

A painted graph is an undirected simple graph together with a distinguished
edge subset (the "painted" edges).  Everything downstream (validation,
knot-circle tracing, cut enumeration, symmetry classification) is built on
the three primitives in this module: a canonical immutable graph value, a
rotation system describing a sphere embedding, and the face structure that
a rotation system induces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .errors import (
    GraphFormatError,
    InvalidRotationError,
    NonplanarError,
    PreconditionError,
)

GRAPH_FORMAT = "painted-graph/1"

Edge = tuple[int, int]
# Rotation system: one row per vertex, the incident edge indices in cyclic
# order.  Rows are canonically rotated to start at the smallest edge index.
Rotation = tuple[tuple[int, ...], ...]
# A dart is a directed edge (tail, head, edge_index).
Dart = tuple[int, int, int]


@dataclass(frozen=True)
class PaintedGraph:
    """Immutable graph with a painted edge subset.

    Invariants (enforced by the ``painted_graph`` factory): edges are
    loop-free, duplicate-free, stored as (u, v) with u < v in ascending
    order; painted indices are ascending and in range; every vertex is
    incident to at least one edge.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    painted: tuple[int, ...]

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(row) for row in inc)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(row)) for row in adj)

    @cached_property
    def painted_set(self) -> frozenset[int]:
        return frozenset(self.painted)

    def is_painted(self, edge: int) -> bool:
        return edge in self.painted_set

    def painted_pairs(self) -> tuple[Edge, ...]:
        return tuple(self.edges[i] for i in self.painted)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def other_end(self, edge: int, v: int) -> int:
        u, w = self.edges[edge]
        return w if v == u else u

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def painted_graph(
    vertex_count: int,
    edges: Iterable[Sequence[int]],
    painted: Iterable[Sequence[int]] = (),
) -> PaintedGraph:
    """Build a canonical PaintedGraph from loose edge/painted pair lists.

    ``painted`` is given as edge pairs (any endpoint order); they must all
    occur in ``edges``.  Raises GraphFormatError on structural problems.
    """
    if vertex_count < 1:
        raise GraphFormatError("vertex_count must be at least 1")
    norm: list[Edge] = []
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphFormatError(f"edge ({u},{v}) out of range")
        norm.append((u, v) if u < v else (v, u))
    if len(set(norm)) != len(norm):
        raise GraphFormatError("duplicate edge")
    norm.sort()
    index = {e: i for i, e in enumerate(norm)}
    seen = [False] * vertex_count
    for u, v in norm:
        seen[u] = seen[v] = True
    if not all(seen):
        missing = seen.index(False)
        raise GraphFormatError(f"isolated vertex {missing}")
    painted_idx: set[int] = set()
    for p in painted:
        u, v = int(p[0]), int(p[1])
        key = (u, v) if u < v else (v, u)
        if key not in index:
            raise GraphFormatError(f"painted pair {key} is not an edge")
        if index[key] in painted_idx:
            raise GraphFormatError(f"painted pair {key} listed twice")
        painted_idx.add(index[key])
    return PaintedGraph(vertex_count, tuple(norm), tuple(sorted(painted_idx)))


def relabel(g: PaintedGraph, perm: Sequence[int]) -> PaintedGraph:
    """Apply a vertex relabeling (perm[old] = new) and re-canonicalize."""
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    painted = [(perm[u], perm[v]) for u, v in g.painted_pairs()]
    return painted_graph(g.vertex_count, edges, painted)


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructReport:
    vertex_count: int
    edge_count: int
    simple: bool
    connected: bool
    cubic: bool
    degree_min: int
    degree_max: int


def _is_connected(adj: Sequence[Sequence[int]], alive: Sequence[bool]) -> bool:
    start = -1
    total = 0
    for v, ok in enumerate(alive):
        if ok:
            total += 1
            if start < 0:
                start = v
    if total <= 1:
        return True
    stack = [start]
    seen = {start}
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if alive[w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == total


def validate_basic(g: PaintedGraph) -> StructReport:
    """Report simple/connected/cubic structure.  Never raises."""
    degs = [g.degree(v) for v in range(g.vertex_count)]
    # The factory already rejects loops and duplicates, so within the type
    # simplicity always holds; recomputed here so the report stands alone.
    simple = len(set(g.edges)) == len(g.edges) and all(u != v for u, v in g.edges)
    connected = _is_connected(g.adjacency, [True] * g.vertex_count)
    return StructReport(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        simple=simple,
        connected=connected,
        cubic=all(d == 3 for d in degs),
        degree_min=min(degs),
        degree_max=max(degs),
    )


def _has_bridge(g: PaintedGraph, skip: frozenset[int]) -> bool:
    """Iterative bridge detection on the graph minus the ``skip`` edges.

    Returns True if the surviving graph is disconnected or has a bridge.
    """
    n = g.vertex_count
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(g.edges):
        if i in skip:
            continue
        nbrs[u].append((v, i))
        nbrs[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    timer = 0
    # DFS from vertex 0; stack holds (vertex, parent_edge, iterator index).
    stack: list[list[int]] = [[0, -1, 0]]
    disc[0] = low[0] = timer
    timer += 1
    visited = 1
    while stack:
        frame = stack[-1]
        v, pedge, it = frame
        if it < len(nbrs[v]):
            frame[2] += 1
            w, eidx = nbrs[v][it]
            if eidx == pedge:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                visited += 1
                stack.append([w, eidx, 0])
            else:
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                parent = stack[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] > disc[parent]:
                    return True  # the edge into v is a bridge
    return visited != n


def is_k_connected(g: PaintedGraph, k: int) -> bool:
    """Vertex k-connectivity for k in {1, 2, 3}.

    Non-cubic inputs use exhaustive removal of vertex subsets of size < k
    (instances are desk scale).  Cubic inputs with k = 3 use the classical
    equivalence of vertex and edge connectivity for cubic graphs and test
    3-edge-connectivity by bridge sweeps, which stays fast on the large
    iterated-expansion members.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    if g.vertex_count <= k:
        raise PreconditionError(f"need more than {k} vertices")
    adj = g.adjacency
    if not _is_connected(adj, [True] * g.vertex_count):
        return False
    if k == 1:
        return True
    cubic = all(g.degree(v) == 3 for v in range(g.vertex_count))
    if k == 3 and cubic:
        if _has_bridge(g, frozenset()):
            return False
        return not any(_has_bridge(g, frozenset((i,))) for i in range(g.edge_count))
    alive = [True] * g.vertex_count
    for a in range(g.vertex_count):
        alive[a] = False
        if k == 2:
            if not _is_connected(adj, alive):
                return False
        else:
            for b in range(a + 1, g.vertex_count):
                alive[b] = False
                if not _is_connected(adj, alive):
                    return False
                alive[b] = True
        alive[a] = True
    return True


# ---------------------------------------------------------------------------
# embeddings, faces, duals
# ---------------------------------------------------------------------------


def _canon_row(row: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic sequence to start at its smallest entry."""
    if not row:
        return ()
    k = row.index(min(row))
    return tuple(row[k:]) + tuple(row[:k])


def planar_embed(g: PaintedGraph) -> Rotation:
    """Planarity test returning a rotation system, not just a boolean.

    Raises NonplanarError for non-planar input.  The embedding comes from
    the left-right planarity algorithm; rows are reduced to canonical
    cyclic form so equal graphs embed identically run to run.
    """
    if not _is_connected(g.adjacency, [True] * g.vertex_count):
        raise PreconditionError("planar_embed requires a connected graph")
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges)
    ok, emb = nx.check_planarity(G, counterexample=False)
    if not ok:
        raise NonplanarError("graph is not planar")
    data = emb.get_data()
    rows = []
    for v in range(g.vertex_count):
        idx = g.edge_index
        row = [idx[(v, w)] if v < w else idx[(w, v)] for w in data[v]]
        rows.append(_canon_row(row))
    return tuple(rows)


def check_rotation(g: PaintedGraph, rot: Rotation) -> None:
    """Raise InvalidRotationError unless rot matches g structurally."""
    if len(rot) != g.vertex_count:
        raise InvalidRotationError("rotation has wrong number of vertices")
    for v in range(g.vertex_count):
        if sorted(rot[v]) != sorted(g.incident[v]):
            raise InvalidRotationError(f"rotation at vertex {v} does not list its incident edges")


@dataclass(frozen=True)
class FaceSet:
    """Faces traced from a rotation system.

    Each face is a closed walk of darts (tail, head, edge_index).  The face
    tracing convention is fixed: the dart after (u, v) is the successor of
    the reversed dart's edge in the rotation at v.
    """

    faces: tuple[tuple[Dart, ...], ...]

    def __len__(self) -> int:
        return len(self.faces)

    @cached_property
    def dart_face(self) -> dict[tuple[int, int], int]:
        """Map (tail, edge_index) -> face id."""
        out: dict[tuple[int, int], int] = {}
        for fid, walk in enumerate(self.faces):
            for tail, _head, e in walk:
                out[(tail, e)] = fid
        return out

    @cached_property
    def edge_faces(self) -> dict[int, tuple[int, ...]]:
        """Map edge index -> the face ids on its two sides."""
        out: dict[int, list[int]] = {}
        for fid, walk in enumerate(self.faces):
            for _tail, _head, e in walk:
                out.setdefault(e, []).append(fid)
        return {e: tuple(fids) for e, fids in out.items()}

    def face_sizes(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.faces)


def faces(g: PaintedGraph, rot: Rotation) -> FaceSet:
    """Trace all faces of the embedding given by rot."""
    check_rotation(g, rot)
    pos: list[dict[int, int]] = [
        {e: i for i, e in enumerate(rot[v])} for v in range(g.vertex_count)
    ]
    seen: set[tuple[int, int]] = set()
    walks: list[tuple[Dart, ...]] = []
    starts = sorted(
        (u, e) for e in range(g.edge_count) for u in g.edges[e]
    )
    for u0, e0 in starts:
        if (u0, e0) in seen:
            continue
        walk: list[Dart] = []
        u, e = u0, e0
        while (u, e) not in seen:
            seen.add((u, e))
            v = g.other_end(e, u)
            walk.append((u, v, e))
            row = rot[v]
            e2 = row[(pos[v][e] + 1) % len(row)]
            u, e = v, e2
        walks.append(_canon_walk(walk))
    walks.sort()
    return FaceSet(tuple(walks))


def _canon_walk(walk: list[Dart]) -> tuple[Dart, ...]:
    k = walk.index(min(walk))
    return tuple(walk[k:]) + tuple(walk[:k])


def dual(g: PaintedGraph, rot: Rotation) -> tuple[PaintedGraph, tuple[int, ...]]:
    """Planar dual plus edge correspondence.

    Returns (dual_graph, corr) where corr[primal_edge] = dual_edge.  The
    dual's painted set is the image of the primal painted set, so the
    correspondence records which dual edges cross painted primal edges.
    Requires every primal edge to separate two distinct faces that do not
    already share another edge (true for all 3-connected inputs here);
    otherwise the dual is not simple and a PreconditionError is raised.
    """
    fs = faces(g, rot)
    ef = fs.edge_faces
    dual_edges: list[Edge] = []
    for e in range(g.edge_count):
        fids = ef[e]
        if len(fids) != 2 or fids[0] == fids[1]:
            raise PreconditionError(f"edge {e} does not separate two distinct faces")
        a, b = sorted(fids)
        dual_edges.append((a, b))
    if len(set(dual_edges)) != len(dual_edges):
        raise PreconditionError("dual has parallel edges (primal 2-edge cut)")
    painted_pairs = [dual_edges[i] for i in g.painted]
    dg = painted_graph(len(fs.faces), dual_edges, painted_pairs)
    corr = tuple(dg.edge_index[e] for e in dual_edges)
    return dg, corr


# ---------------------------------------------------------------------------
# serialization (painted-graph/1)
# ---------------------------------------------------------------------------


def serialize_graph(g: PaintedGraph, rot: Rotation | None = None) -> str:
    """Canonical JSON; equal graphs produce byte-identical output."""
    doc: dict = {
        "format": GRAPH_FORMAT,
        "vertices": g.vertex_count,
        "edges": [list(e) for e in g.edges],
        "painted": list(g.painted),
    }
    if rot is not None:
        check_rotation(g, rot)
        doc["rotation"] = [list(_canon_row(row)) for row in rot]
    return json.dumps(doc, separators=(",", ":"))


def parse_graph(text: str | bytes) -> tuple[PaintedGraph, Rotation | None]:
    """Parse painted-graph/1 JSON.  Raises GraphFormatError on any defect."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError("top-level JSON value must be an object")
    if doc.get("format") != GRAPH_FORMAT:
        raise GraphFormatError(f"expected format {GRAPH_FORMAT!r}")
    try:
        n = int(doc["vertices"])
        raw_edges = [(int(e[0]), int(e[1])) for e in doc["edges"]]
        raw_painted = [int(i) for i in doc["painted"]]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise GraphFormatError(f"malformed field: {exc}") from exc
    for i in raw_painted:
        if not (0 <= i < len(raw_edges)):
            raise GraphFormatError(f"painted index {i} out of range")
    painted_pairs = [raw_edges[i] for i in raw_painted]
    g = painted_graph(n, raw_edges, painted_pairs)
    rot: Rotation | None = None
    if "rotation" in doc and doc["rotation"] is not None:
        try:
            rows = [tuple(int(i) for i in row) for row in doc["rotation"]]
        except (TypeError, ValueError) as exc:
            raise GraphFormatError(f"malformed rotation: {exc}") from exc
        # rotation rows refer to the caller's edge order; remap to canonical
        remap = {i: g.edge_index[e if e[0] < e[1] else (e[1], e[0])] for i, e in enumerate(raw_edges)}
        try:
            rot = tuple(_canon_row([remap[i] for i in row]) for row in rows)
            check_rotation(g, rot)
        except (KeyError, InvalidRotationError) as exc:
            raise GraphFormatError(f"rotation does not match graph: {exc}") from exc
    return g, rot
