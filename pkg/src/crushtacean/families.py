"""Named crushtaceans, symmetry-seed constructors, and cycle expansion.

Three painted families are built directly: the Borromean crushtacean, the
pretzel chain (prism with painted rungs), and the alternating chain whose
painting-preserving symmetry group is always the Klein four-group.  On top
of these, :func:`cycle_expand` blows every vertex of a plane graph up into
a cycle, painting the images of the original edges; iterating it produces
arbitrarily large crushtaceans whose painted symmetries copy the seed's
full symmetry group, which is how :func:`generate_family` manufactures
links with a prescribed orientation-preserving symmetry group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automorphism import automorphisms
from .classify import (
    SCREEN_NOT_SIGNATURE,
    has_universal_region,
    signature_screen,
    validate_crushtacean,
)
from .errors import CatalogMissError, PreconditionError
from .graphs import (
    Edge,
    PaintedGraph,
    Rotation,
    _canon_row,
    check_rotation,
    faces,
    painted_graph,
    planar_embed,
)
from .groups import GroupId, identify

# ---------------------------------------------------------------------------
# painted families
# ---------------------------------------------------------------------------


def gamma_borromean() -> PaintedGraph:
    """The 4-vertex crushtacean of the Borromean rings: K4 with a painted
    perfect matching."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return painted_graph(4, edges, painted=[(0, 1), (2, 3)])


def gamma_pretzel(n: int) -> PaintedGraph:
    """Chain of n crossing circles in a cycle: the n-prism with every rung
    painted.  Vertices 0..n-1 are the top cycle, n..2n-1 the bottom."""
    if n < 3:
        raise ValueError("pretzel chain needs at least three links")
    edges: list[Edge] = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    rungs = [(i, n + i) for i in range(n)]
    return painted_graph(2 * n, edges + rungs, painted=rungs)


def gamma_ochain(n: int) -> PaintedGraph:
    """Chain of n circles closed off by one extra crossing circle.

    Take the n-prism with painted rungs, cut the top and bottom edges of
    one square face, and fuse each side's loose ends into a new vertex;
    the painted edge p0 between the two new vertices is then the unique
    painted edge meeting both triangular faces.  The painting-preserving
    symmetry group is the Klein four-group for every n.

    Layout: top path vertices 0..n-1, bottom path n..2n-1, fused vertices
    x = 2n (left, joining top 0 and bottom n) and y = 2n+1 (right).
    """
    if n < 2:
        raise ValueError("chain needs at least two links")
    x, y = 2 * n, 2 * n + 1
    edges: list[Edge] = [(i, i + 1) for i in range(1, n - 1)]  # top path 1..n-1
    edges += [(n - 1, 0)]  # top wrap back to 0
    edges += [(n + i, n + i + 1) for i in range(1, n - 1)]  # bottom path
    edges += [(2 * n - 1, n)]
    edges += [(0, x), (n, x), (1, y), (n + 1, y)]
    rungs = [(i, n + i) for i in range(n)]
    painted = rungs + [(x, y)]
    g = painted_graph(2 * n + 2, edges + rungs + [(x, y)], painted=painted)

    # structural self-check: exactly two triangles, and p0 is the unique
    # painted edge touching both of them
    rot = planar_embed(g)
    fs = faces(g, rot)
    tri = [
        {d[0] for d in walk} for walk, s in zip(fs.faces, fs.face_sizes()) if s == 3
    ]
    assert len(tri) == 2, f"expected 2 triangles, found {len(tri)}"
    meets_both = [
        e
        for e in g.painted
        if set(g.edges[e]) & tri[0] and set(g.edges[e]) & tri[1]
    ]
    assert meets_both == [g.edge_index[(x, y)]]
    assert validate_crushtacean(g).valid
    return g


# ---------------------------------------------------------------------------
# unpainted symmetry seeds
# ---------------------------------------------------------------------------


def wheel(n: int) -> PaintedGraph:
    """Cycle 0..n-1 plus a hub n joined to every rim vertex."""
    if n < 3:
        raise ValueError("wheel needs a rim of at least three vertices")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return painted_graph(n + 1, edges)


def prism(n: int) -> PaintedGraph:
    return painted_graph(2 * n, gamma_pretzel(n).edges) if n >= 3 else _reject(n)


def _reject(n: int) -> PaintedGraph:
    raise ValueError(f"prism/antiprism parameter must be >= 3, got {n}")


def antiprism(n: int) -> PaintedGraph:
    """Two n-cycles, bottom vertex n+i joined to top i and i+1."""
    if n < 3:
        _reject(n)
    edges: list[Edge] = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [((i + 1) % n, n + i) for i in range(n)]
    return painted_graph(2 * n, edges)


def tetrahedron() -> PaintedGraph:
    return painted_graph(4, gamma_borromean().edges)


def cube() -> PaintedGraph:
    return prism(4)


_DODECAHEDRON_LCF = (10, 7, 4, -4, -7, 10, -4, 7, -7, 4) * 2


def dodecahedron() -> PaintedGraph:
    edges = {(i, (i + 1) % 20) for i in range(20)}
    for i, a in enumerate(_DODECAHEDRON_LCF):
        j = (i + a) % 20
        edges.add((min(i, j), max(i, j)))
    edges = {(min(u, v), max(u, v)) for u, v in edges}
    assert len(edges) == 30
    return painted_graph(20, sorted(edges))


def seed_catalog(target: GroupId) -> list[tuple[str, PaintedGraph]]:
    """Seeds whose full automorphism group realizes the target; every
    candidate is re-verified through the automorphism engine before being
    returned, so a miss yields an empty list."""
    cands: list[tuple[str, PaintedGraph]] = []
    kind, n = target.kind, target.n
    if kind == "dihedral" and n >= 4:
        cands.append((f"wheel{n}", wheel(n)))
        if n % 2 == 0 and n >= 6:
            m = n // 2
            if m % 2 == 1:
                cands.append((f"prism{m}", prism(m)))
            if m >= 4:
                cands.append((f"antiprism{m}", antiprism(m)))
    elif kind == "dihedral_x_z2" and n % 2 == 0 and n >= 6:
        cands.append((f"prism{n}", prism(n)))
    elif kind == "S4":
        cands.append(("tetrahedron", tetrahedron()))
    elif kind == "S4xZ2":
        cands.extend([("cube", cube()), ("antiprism3", antiprism(3))])
    elif kind == "A5xZ2":
        cands.append(("dodecahedron", dodecahedron()))
    out = []
    for name, g in cands:
        if identify(automorphisms(g, respect_painting=False)) == target:
            out.append((name, g))
    return out


# ---------------------------------------------------------------------------
# cycle expansion
# ---------------------------------------------------------------------------


def cycle_expand(
    g: PaintedGraph, rot: Rotation | None = None
) -> tuple[PaintedGraph, Rotation]:
    """Blow each vertex up into a cycle following its rotation; images of
    the original edges are painted.

    Each edge-end of the input becomes a vertex of the output, joined to
    its two rotation neighbours around the same input vertex and, by a
    painted edge, to the opposite end of the same input edge.  The output
    rotation is checked to be a sphere embedding.  Input painting, if any,
    is ignored.  Requires minimum degree 3 (smaller degrees would create
    loops or parallel edges).
    """
    if rot is None:
        rot = planar_embed(g)
    else:
        check_rotation(g, rot)
    if any(g.degree(v) < 3 for v in range(g.vertex_count)):
        raise PreconditionError("cycle expansion requires minimum degree 3")

    idx: dict[tuple[int, int], int] = {}
    for v in range(g.vertex_count):
        for e in rot[v]:
            idx[(v, e)] = len(idx)

    def norm(a: int, b: int) -> Edge:
        return (a, b) if a < b else (b, a)

    edges: list[Edge] = []
    painted: list[Edge] = []
    for e, (u, v) in enumerate(g.edges):
        pe = norm(idx[(u, e)], idx[(v, e)])
        edges.append(pe)
        painted.append(pe)
    for v in range(g.vertex_count):
        row = rot[v]
        d = len(row)
        for i in range(d):
            edges.append(norm(idx[(v, row[i])], idx[(v, row[(i + 1) % d])]))

    out = painted_graph(2 * g.edge_count, edges, painted=painted)
    rows: list[tuple[int, ...]] = []
    for v in range(g.vertex_count):
        row = rot[v]
        d = len(row)
        for i, e in enumerate(row):
            xv = idx[(v, e)]
            u = g.other_end(e, v)
            pe = out.edge_index[norm(xv, idx[(u, e)])]
            cn = out.edge_index[norm(xv, idx[(v, row[(i + 1) % d])])]
            cp = out.edge_index[norm(xv, idx[(v, row[(i - 1) % d])])]
            rows.append(_canon_row((pe, cn, cp)))
    rot_out = tuple(rows)
    fs = faces(out, rot_out)
    assert len(fs.faces) == out.edge_count - out.vertex_count + 2, (
        "expansion rotation is not a sphere embedding"
    )
    return out, rot_out


# ---------------------------------------------------------------------------
# family generation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    """One iterated expansion, with the graph it was expanded from (its
    provenance certificate for the signature screen)."""

    depth: int
    graph: PaintedGraph
    rotation: Rotation
    parent: PaintedGraph
    certified_not_signature: bool


def generate_family(
    seed: PaintedGraph, count: int, *, verify: bool = True
) -> tuple[FamilyMember, ...]:
    """Iterated cycle expansions of the seed whose painted symmetry group
    copies the seed's full symmetry group.

    The first expansion is dropped when the seed has a universal region
    (its screen is inconclusive there), so every returned member carries a
    not-a-signature-link certificate.  With ``verify`` each member is
    re-validated and its painted symmetry group re-identified against the
    seed's.
    """
    if count < 1:
        raise ValueError("count must be positive")
    seed_rot = planar_embed(seed)
    target = identify(automorphisms(seed, respect_painting=False)) if verify else None
    members: list[FamilyMember] = []
    cur, cur_rot = seed, seed_rot
    depth = 0
    skip_first = has_universal_region(seed, seed_rot)
    while len(members) < count:
        cert = signature_screen(cur, cur_rot) == SCREEN_NOT_SIGNATURE
        nxt, nxt_rot = cycle_expand(cur, cur_rot)
        depth += 1
        if not (depth == 1 and skip_first):
            if verify:
                report = validate_crushtacean(nxt)
                assert report.valid, f"expansion invalid: {report.reasons}"
                got = identify(automorphisms(nxt, respect_painting=True))
                assert got == target, f"painted symmetry drifted: {got} != {target}"
            members.append(FamilyMember(depth, nxt, nxt_rot, cur, cert))
        cur, cur_rot = nxt, nxt_rot
    return tuple(members)


def family_from_target(
    target: GroupId, count: int, *, verify: bool = True
) -> tuple[str, tuple[FamilyMember, ...]]:
    """Pick a catalog seed realizing the target group and expand it."""
    seeds = seed_catalog(target)
    if not seeds:
        raise CatalogMissError(f"no catalog seed with symmetry group {target}")
    name, seed = seeds[0]
    return name, generate_family(seed, count, verify=verify)
