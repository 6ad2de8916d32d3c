"""Validation and symmetry classification of painted cubic planar graphs.

A crushtacean here is a cubic, planar, 3-connected simple graph on at
least four vertices whose painted edges form a perfect matching.  Such a
graph encodes a flat fully augmented link: painted edges stand for
crossing circles, and the knot circles can be read off by tracing arcs
alongside painted edges through the faces of the embedding.  The
classification report translates combinatorial facts about the graph
(painting-preserving automorphisms, painted counts of 3-edge cuts,
region adjacency) into statements about the orientation-preserving
symmetry group of the encoded link.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .automorphism import automorphisms, find_isomorphism
from .errors import NonplanarError, PreconditionError
from .graphs import (
    Edge,
    FaceSet,
    PaintedGraph,
    Rotation,
    dual,
    faces,
    planar_embed,
    validate_basic,
)
from .groups import GroupId, identify

# fixed rule identifiers used in report JSON (wire format, golden-file stable)
CIT_MONOMORPHISM = "Thm 1.1"
CIT_DICTIONARY = "Cor 1.2"
CIT_SCREEN = "Lem 5.5"
CIT_BORROMEAN = "Sec 5.1"
CIT_PRETZEL = "Thm 5.2"
CIT_PRETZEL3_COMPLEMENT = "Sec 5.2"
CIT_OCHAIN = "Thm 5.3"

NOTE_NONTRIVIAL_CUTS = (
    "b-prime criterion ranges over non-trivial 3-edge cuts only; vertex stars"
    " (always once-painted) are excluded"
)

SCREEN_NOT_SIGNATURE = "not_signature"
SCREEN_INCONCLUSIVE = "inconclusive"


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrushtaceanReport:
    valid: bool
    reasons: tuple[str, ...]


def _matching_ok(g: PaintedGraph) -> bool:
    ends: set[int] = set()
    for u, v in g.painted_pairs():
        if u in ends or v in ends:
            return False
        ends.add(u)
        ends.add(v)
    return len(ends) == g.vertex_count


def _dual_simple(g: PaintedGraph, fs: FaceSet) -> bool:
    """For cubic connected planar g this is equivalent to 3-connectivity.

    A dual loop is a bridge, parallel dual edges are a 2-edge cut, and for
    cubic graphs vertex connectivity equals edge connectivity.
    """
    seen: set[tuple[int, int]] = set()
    for e in range(g.edge_count):
        fids = fs.edge_faces.get(e, ())
        if len(fids) != 2 or fids[0] == fids[1]:
            return False
        key = (min(fids), max(fids))
        if key in seen:
            return False
        seen.add(key)
    return True


def validate_crushtacean(g: PaintedGraph) -> CrushtaceanReport:
    """Full admission check; returns a verdict with machine-stable reasons."""
    reasons: list[str] = []
    struct = validate_basic(g)
    if struct.vertex_count < 4:
        reasons.append("too_few_vertices")
    if not struct.cubic:
        reasons.append("not_cubic")
    if not struct.connected:
        reasons.append("disconnected")
    elif struct.cubic and struct.vertex_count >= 4:
        try:
            rot = planar_embed(g)
        except NonplanarError:
            reasons.append("nonplanar")
        else:
            if not _dual_simple(g, faces(g, rot)):
                reasons.append("not_3_connected")
    if not _matching_ok(g):
        reasons.append("painted_not_perfect_matching")
    return CrushtaceanReport(valid=not reasons, reasons=tuple(reasons))


def _require_valid(g: PaintedGraph) -> None:
    report = validate_crushtacean(g)
    if not report.valid:
        raise PreconditionError(f"not a valid crushtacean: {', '.join(report.reasons)}")


# ---------------------------------------------------------------------------
# nerve
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NerveReport:
    is_triangulation: bool
    one_painted_per_triangle: bool


def nerve_check(g: PaintedGraph, rot: Rotation | None = None) -> NerveReport:
    """Check the planar dual is a sphere triangulation whose triangles each
    cross exactly one painted edge.

    Dual faces correspond to primal vertices, so the triangle condition is
    that every dual face has three sides (primal degree 3filtered by the
    cubic check) and distinct dual faces share at most one edge (primal
    simplicity); the painted condition says every vertex star contains
    exactly one painted edge.
    """
    _require_valid(g)
    if rot is None:
        rot = planar_embed(g)
    dg, _corr = dual(g, rot)  # raises if the dual degenerates; also asserts simplicity
    assert dg.edge_count == g.edge_count
    three_sided = all(len(g.incident[v]) == 3 for v in range(g.vertex_count))
    share_at_most_one = len(set(g.edges)) == g.edge_count
    one_painted = all(
        sum(1 for e in g.incident[v] if g.is_painted(e)) == 1
        for v in range(g.vertex_count)
    )
    return NerveReport(
        is_triangulation=three_sided and share_at_most_one,
        one_painted_per_triangle=one_painted,
    )


# ---------------------------------------------------------------------------
# knot circles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KnotCircle:
    """A closed alternating walk: arcs[i] -> segments[i] -> arcs[i+1] -> ...

    An arc (painted_edge, face_id) runs beside the painted edge on the given
    face's side; a segment is the unpainted edge carrying the walk to the
    next arc.
    """

    arcs: tuple[tuple[int, int], ...]
    segments: tuple[int, ...]


@dataclass(frozen=True)
class KnotStructure:
    circles: tuple[KnotCircle, ...]
    # one entry per painted edge: (painted_edge_index, (circle_id, circle_id))
    crossing_links: tuple[tuple[int, tuple[int, int]], ...]

    @property
    def knot_circle_count(self) -> int:
        return len(self.circles)

    @property
    def crossing_circle_count(self) -> int:
        return len(self.crossing_links)


def knot_circles(g: PaintedGraph, rot: Rotation | None = None) -> KnotStructure:
    """Trace the knot circles of the encoded link.

    Each painted edge contributes two parallel arcs, one per adjacent face;
    each unpainted edge carries exactly one connecting segment.  Circles are
    traversal orbits of the arc-segment gluing, emitted in canonical order.
    """
    _require_valid(g)
    if rot is None:
        rot = planar_embed(g)
    fs = faces(g, rot)
    arc_eps: dict[tuple[int, int], list[tuple[int, int]]] = {}
    ep_arc: dict[tuple[int, int], tuple[int, int]] = {}
    for fid, walk in enumerate(fs.faces):
        m = len(walk)
        for i in range(m):
            _u1, v1, e1 = walk[i]
            _u2, _v2, e2 = walk[(i + 1) % m]
            # corner at v1 between e1 and e2 inside face fid
            if g.is_painted(e1) and not g.is_painted(e2):
                arc, ep = (e1, fid), (v1, e2)
            elif g.is_painted(e2) and not g.is_painted(e1):
                arc, ep = (e2, fid), (v1, e1)
            else:
                continue
            arc_eps.setdefault(arc, []).append(ep)
            assert ep not in ep_arc, "endpoint reused; painting is not a matching"
            ep_arc[ep] = arc
    for arc, eps in arc_eps.items():
        assert len(eps) == 2, f"arc {arc} has {len(eps)} endpoints"
        eps.sort()

    circles: list[KnotCircle] = []
    arc_circle: dict[tuple[int, int], int] = {}
    for start in sorted(arc_eps):
        if start in arc_circle:
            continue
        cid = len(circles)
        arcs = [start]
        segments: list[int] = []
        arc_circle[start] = cid
        ep = arc_eps[start][0]
        while True:
            v, x = ep
            v2 = g.other_end(x, v)
            segments.append(x)
            nxt = ep_arc[(v2, x)]
            if nxt == start:
                break
            arcs.append(nxt)
            arc_circle[nxt] = cid
            a, b = arc_eps[nxt]
            ep = a if b == (v2, x) else b
        circles.append(KnotCircle(tuple(arcs), tuple(segments)))

    links = []
    for e in g.painted:
        f1, f2 = sorted(fs.edge_faces[e])
        pair = tuple(sorted((arc_circle[(e, f1)], arc_circle[(e, f2)])))
        links.append((e, pair))
    return KnotStructure(tuple(circles), tuple(links))


# ---------------------------------------------------------------------------
# 3-edge cuts and the b-prime criterion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeCut:
    edges: tuple[int, int, int]
    painted_count: int


def _cuts_via_dual(g: PaintedGraph, rot: Rotation) -> set[tuple[int, int, int]]:
    """Minimal 3-edge cuts of a 3-edge-connected planar graph are exactly
    the triangles of its dual; facial dual triangles are the vertex stars."""
    dg, corr = dual(g, rot)
    inv = {d: p for p, d in enumerate(corr)}
    nbrs = [set(row) for row in dg.adjacency]
    out: set[tuple[int, int, int]] = set()
    for d_idx, (a, b) in enumerate(dg.edges):
        for c in nbrs[a] & nbrs[b]:
            if c <= b:
                continue
            e1 = inv[d_idx]
            e2 = inv[dg.edge_index[(min(a, c), max(a, c))]]
            e3 = inv[dg.edge_index[(min(b, c), max(b, c))]]
            out.add(tuple(sorted((e1, e2, e3))))
    return out


def _bridges(g: PaintedGraph, skip: tuple[int, int]) -> list[int]:
    """All bridges of g minus two edges (disconnection impossible here
    because callers guarantee 3-edge-connectivity)."""
    n = g.vertex_count
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(g.edges):
        if i in skip:
            continue
        nbrs[u].append((v, i))
        nbrs[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    out: list[int] = []
    timer = 0
    stack: list[list[int]] = [[0, -1, 0]]
    disc[0] = low[0] = timer
    timer += 1
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
                stack.append([w, eidx, 0])
            else:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    out.append(pedge)
    return out


def _cuts_via_pairs(g: PaintedGraph) -> set[tuple[int, int, int]]:
    out: set[tuple[int, int, int]] = set()
    for i, j in combinations(range(g.edge_count), 2):
        for b in _bridges(g, (i, j)):
            out.add(tuple(sorted((i, j, b))))
    return out


def three_edge_cuts(g: PaintedGraph) -> tuple[EdgeCut, ...]:
    """All non-trivial 3-edge cuts with their painted counts.

    Requires cubic 3-connected input (then every disconnecting triple is a
    minimal cut).  Planar inputs go through the dual-triangle route; the
    rare non-planar caller falls back to edge-pair removal plus bridge
    detection.
    """
    if any(g.degree(v) != 3 for v in range(g.vertex_count)):
        raise PreconditionError("three_edge_cuts requires a cubic graph")
    try:
        rot = planar_embed(g)
    except NonplanarError:
        triples = _cuts_via_pairs(g)
    else:
        triples = _cuts_via_dual(g, rot)
    cuts = []
    for triple in sorted(triples):
        ends = [set(g.edges[e]) for e in triple]
        if ends[0] & ends[1] & ends[2]:
            continue  # vertex star: trivial cut
        painted = sum(1 for e in triple if g.is_painted(e))
        cuts.append(EdgeCut(triple, painted))
    return tuple(cuts)


@dataclass(frozen=True)
class BPrimeVerdict:
    tag: str  # "b_prime" | "b_composite" | "borromean_special"
    witness: tuple[Edge, ...] | None = None
    note: str | None = None


def classify_bprime(g: PaintedGraph) -> BPrimeVerdict:
    """Decide b-primeness from painted counts of non-trivial 3-edge cuts.

    A once-painted non-trivial cut witnesses b-compositeness; if every
    non-trivial cut is thrice-painted the graph is b-prime.  The Borromean
    crushtacean is neither and is special-cased before the criterion.
    """
    _require_valid(g)
    if g.vertex_count == 4 and _is_borromean(g):
        return BPrimeVerdict("borromean_special")
    for cut in three_edge_cuts(g):
        if cut.painted_count < 3:
            witness = tuple(g.edges[e] for e in cut.edges)
            return BPrimeVerdict("b_composite", witness=witness)
    return BPrimeVerdict("b_prime", note=NOTE_NONTRIVIAL_CUTS)


def _is_borromean(g: PaintedGraph) -> bool:
    from .families import gamma_borromean

    return find_isomorphism(g, gamma_borromean(), respect_painting=True) is not None


# ---------------------------------------------------------------------------
# signature screen
# ---------------------------------------------------------------------------


def has_universal_region(g: PaintedGraph, rot: Rotation | None = None) -> bool:
    """Is some face edge-adjacent to every other face?"""
    if rot is None:
        rot = planar_embed(g)
    fs = faces(g, rot)
    k = len(fs.faces)
    adjacent: list[set[int]] = [set() for _ in range(k)]
    for fids in fs.edge_faces.values():
        if len(fids) == 2 and fids[0] != fids[1]:
            a, b = fids
            adjacent[a].add(b)
            adjacent[b].add(a)
    return any(len(adjacent[f]) == k - 1 for f in range(k))


def signature_screen(seed: PaintedGraph, rot: Rotation | None = None) -> str:
    """Screen the link encoded by the seed's cycle expansion.

    No universal region in the seed certifies the expanded link is not a
    signature link; a universal region leaves the question open.
    """
    if has_universal_region(seed, rot):
        return SCREEN_INCONCLUSIVE
    return SCREEN_NOT_SIGNATURE


# ---------------------------------------------------------------------------
# reflection multiplicity and the full report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReflectionMultiplicity:
    tag: str  # "unique" | "borromean" | "pretzel" | "o_chain"
    n: int | None
    surface_count: int


def _face_multiset(g: PaintedGraph) -> tuple[int, ...]:
    """Sorted face sizes; an isomorphism invariant for 3-connected planar
    graphs since their sphere embedding is unique."""
    return tuple(sorted(faces(g, planar_embed(g)).face_sizes()))


def detect_reflection_multiplicity(g: PaintedGraph) -> ReflectionMultiplicity:
    """Match g against the exceptional families with several reflection
    surfaces; everything else has exactly one."""
    from .families import gamma_ochain, gamma_pretzel

    _require_valid(g)
    if g.vertex_count == 4 and _is_borromean(g):
        return ReflectionMultiplicity("borromean", None, 3)
    if g.vertex_count % 2 == 0 and g.vertex_count >= 6:
        fm = _face_multiset(g)
        n = g.vertex_count // 2
        if n >= 3:
            p = gamma_pretzel(n)
            if fm == _face_multiset(p) and find_isomorphism(g, p, True) is not None:
                return ReflectionMultiplicity("pretzel", n, 2)
        m = (g.vertex_count - 2) // 2
        if m >= 2:
            o = gamma_ochain(m)
            if fm == _face_multiset(o) and find_isomorphism(g, o, True) is not None:
                return ReflectionMultiplicity("o_chain", m, 2)
    return ReflectionMultiplicity("unique", None, 1)


@dataclass(frozen=True)
class SymEstimate:
    status: str  # "exact" | "lower_bound" | "order_only" | "unknown"
    group: GroupId | None = None
    order: int | None = None
    citation: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "group": None if self.group is None else str(self.group),
            "order": self.order,
            "citation": self.citation,
        }


UNKNOWN = SymEstimate("unknown")


@dataclass(frozen=True)
class ClassificationReport:
    crushtacean_valid: bool
    reasons: tuple[str, ...] = ()
    vertices: int = 0
    edges: int = 0
    painted: int = 0
    aut_order: int | None = None
    aut_p_order: int | None = None
    group_id: GroupId | None = None
    b_prime: BPrimeVerdict | None = None
    reflection: ReflectionMultiplicity | None = None
    signature_screen: str | None = None
    sym_plus_link: SymEstimate = UNKNOWN
    sym_plus_complement: SymEstimate = UNKNOWN
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        gid = self.group_id
        return {
            "format": "crushtacean-report/1",
            "crushtacean_valid": self.crushtacean_valid,
            "reasons": list(self.reasons),
            "vertices": self.vertices,
            "edges": self.edges,
            "painted": self.painted,
            "aut_order": self.aut_order,
            "aut_p_order": self.aut_p_order,
            "group_id": None if gid is None else str(gid),
            "group_alias": None if gid is None else gid.geometric_alias(),
            "b_prime": None
            if self.b_prime is None
            else {
                "tag": self.b_prime.tag,
                "witness": None
                if self.b_prime.witness is None
                else [list(e) for e in self.b_prime.witness],
                "note": self.b_prime.note,
            },
            "reflection": None
            if self.reflection is None
            else {
                "tag": self.reflection.tag,
                "n": self.reflection.n,
                "surface_count": self.reflection.surface_count,
            },
            "signature_screen": self.signature_screen,
            "sym_plus_link": self.sym_plus_link.to_json_dict(),
            "sym_plus_complement": self.sym_plus_complement.to_json_dict(),
            "notes": list(self.notes),
        }


def _family_sym_group(n: int) -> GroupId:
    """Shared symmetry-group shape of the chain families at parameter n."""
    if n % 2 == 0:
        return GroupId.dihedral_x_z2(2 * n)
    return GroupId.dihedral(4 * n)


def symmetry_report(
    g: PaintedGraph,
    expansion_seed: PaintedGraph | None = None,
) -> ClassificationReport:
    """Classify the orientation-preserving symmetries of the encoded link.

    When g is an iterated-expansion member, passing the graph it was
    expanded from unlocks the not-a-signature-link screen and with it the
    complement determination; without provenance the complement is Unknown
    outside the exceptional families.
    """
    check = validate_crushtacean(g)
    if not check.valid:
        return ClassificationReport(
            crushtacean_valid=False,
            reasons=check.reasons,
            vertices=g.vertex_count,
            edges=g.edge_count,
            painted=len(g.painted),
        )

    aut = automorphisms(g, respect_painting=False)
    aut_p = automorphisms(g, respect_painting=True)
    gid = identify(aut_p)
    bp = classify_bprime(g)
    refl = detect_reflection_multiplicity(g)

    screen = SCREEN_INCONCLUSIVE
    notes: list[str] = []
    if expansion_seed is not None:
        from .families import cycle_expand

        expanded, _rot = cycle_expand(expansion_seed, planar_embed(expansion_seed))
        if find_isomorphism(expanded, g, respect_painting=True) is None:
            raise PreconditionError("expansion_seed does not expand to the given graph")
        screen = signature_screen(expansion_seed)
        notes.append("expansion provenance verified against supplied seed")

    if refl.tag == "borromean":
        link = SymEstimate("exact", GroupId.exceptional("S4"), 24, CIT_BORROMEAN)
        comp = SymEstimate("exact", GroupId.exceptional("S4"), 24, CIT_BORROMEAN)
    elif refl.tag == "pretzel":
        n = refl.n or 0
        link = SymEstimate("exact", _family_sym_group(n), 8 * n, CIT_PRETZEL)
        if n >= 4:
            comp = SymEstimate("exact", _family_sym_group(n), 8 * n, CIT_PRETZEL)
        else:
            comp = SymEstimate("order_only", None, 96, CIT_PRETZEL3_COMPLEMENT)
    elif refl.tag == "o_chain":
        n = refl.n or 0
        link = SymEstimate("exact", _family_sym_group(n), 8 * n, CIT_OCHAIN)
        comp = SymEstimate("exact", _family_sym_group(n), 8 * n, CIT_OCHAIN)
    elif bp.tag == "b_prime":
        link = SymEstimate("exact", gid, aut_p.order, CIT_DICTIONARY)
        if screen == SCREEN_NOT_SIGNATURE:
            comp = SymEstimate("exact", gid, aut_p.order, CIT_DICTIONARY)
            notes.append(f"complement transfer via screen ({CIT_SCREEN})")
        else:
            comp = UNKNOWN
    else:
        link = SymEstimate("lower_bound", gid, aut_p.order, CIT_MONOMORPHISM)
        comp = UNKNOWN

    if bp.note:
        notes.append(bp.note)

    return ClassificationReport(
        crushtacean_valid=True,
        reasons=(),
        vertices=g.vertex_count,
        edges=g.edge_count,
        painted=len(g.painted),
        aut_order=aut.order,
        aut_p_order=aut_p.order,
        group_id=gid,
        b_prime=bp,
        reflection=refl,
        signature_screen=screen,
        sym_plus_link=link,
        sym_plus_complement=comp,
        notes=tuple(notes),
    )
