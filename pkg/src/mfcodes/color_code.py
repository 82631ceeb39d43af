"""Majorana color codes on a cylinder.

Construction
------------
The cylinder lattice is built by truncating a layered "skeleton" graph whose
nodes become the F0 faces.  The skeleton has R nodes per layer arranged in a
ring, L layers, and two extra nodes ext0/ext1 that stand for the patched
holes.  Every skeleton edge end (a half-edge) becomes one lattice vertex, the
half-edges around a node are joined into a polygon (for ext0/ext1 that
polygon is the boundary cycle), and every skeleton edge becomes an edge
between its two half-edges.  The faces of the skeleton become the remaining
(F1) faces.  Each lattice vertex then has degree 3 and every face has even
length.

Layer l has ``down`` edges towards layer l-1 and ``up`` edges towards l+1,
alternating (1, 3), (3, 1), ... so interior nodes are hexagons; when L is
odd the last layer is (1, 1), a square.  With horizontal ring edges a layer
node has degree down + up + 2.

Bookkeeping: |F0| = R L, |gamma0| = |gamma1| = R and
|V| = 2R + R * (6 (L - L mod 2) + 4 (L mod 2)).

Coordinates: x is periodic with extent 3R, y runs from 0 (gamma0) to
3L+1 (gamma1).  Modes are numbered by (y, x).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import networkx as nx

from .errors import (EvenR, InconsistencyDetected, InvalidSurface, NotAPath,
                     PathDoesNotConnectExternalFaces, RTooSmall, TooLarge)
from .geometry import Layout
from .gf2 import BitMatrix, CosetSearch, from_indices, kernel_basis
from .majorana import MajoranaCode, MajoranaOperator, majorana_form, min_weight_logical, validate

EXT0, EXT1 = "ext0", "ext1"


@dataclass(frozen=True)
class SurfaceGraph:
    positions: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    boundaries: tuple[tuple[int, ...], ...]  # () for closed surfaces, else (gamma0, gamma1)
    extent: tuple[int | None, int | None] = (None, None)
    periodic: tuple[bool, bool] = (True, False)

    @property
    def num_vertices(self) -> int:
        return len(self.positions)

    @property
    def gamma0(self) -> tuple[int, ...]:
        return self.boundaries[0] if self.boundaries else ()

    @property
    def gamma1(self) -> tuple[int, ...]:
        return self.boundaries[1] if len(self.boundaries) > 1 else ()

    def layout(self) -> Layout:
        return Layout(self.positions, self.periodic, self.extent)

    def boundary_vertices(self) -> set[int]:
        return {u for b in self.boundaries for u in b}

    def vertex_faces(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.positions]
        for fi, f in enumerate(self.faces):
            for u in set(f):
                out[u].append(fi)
        return out

    def edge_faces(self) -> dict[frozenset, list]:
        """Edge -> adjacent faces; boundary cycles appear as ('ext', alpha)."""
        out: dict[frozenset, list] = {frozenset(e): [] for e in self.edges}
        cycles = [(fi, f) for fi, f in enumerate(self.faces)]
        cycles += [(("ext", a), b) for a, b in enumerate(self.boundaries)]
        for key, cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                out.setdefault(frozenset((a, b)), []).append(key)
        return out

    def to_json(self) -> str:
        return json.dumps({
            "vertices": [list(p) for p in self.positions],
            "edges": [list(e) for e in self.edges],
            "faces": [list(f) for f in self.faces],
            "boundaries": [list(b) for b in self.boundaries],
            "extent": list(self.extent),
            "periodic": list(self.periodic),
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SurfaceGraph":
        d = json.loads(text)
        return cls(tuple(map(tuple, d["vertices"])), tuple(map(tuple, d["edges"])),
                   tuple(map(tuple, d["faces"])), tuple(map(tuple, d["boundaries"])),
                   tuple(d["extent"]), tuple(d["periodic"]))


# ---------------------------------------------------------------------------
# construction


def layer_types(L: int) -> list[tuple[int, int]]:
    types = [(1, 3) if l % 2 == 0 else (3, 1) for l in range(L)]
    if L % 2:
        types[-1] = (1, 1)
    return types


def build_cylinder(R: int, L: int) -> SurfaceGraph:
    """Hexagonal cylinder with R vertices on each boundary and L rows of F0 faces."""
    if R % 2 == 0:
        raise EvenR(f"R must be odd (boundary cycles need odd length), got {R}")
    if R < 3:
        raise RTooSmall(f"R must be at least 3, got {R}")
    if L < 1:
        raise ValueError("L must be at least 1")
    types = layer_types(L)
    period = 3 * R

    # half-edges: key -> position; rotation lists per skeleton node (counter-clockwise)
    pos: dict[tuple, tuple[int, int]] = {}
    rotation: dict = {}
    twin: dict[tuple, tuple] = {}

    def link(a, b):
        twin[a], twin[b] = b, a

    for l, (down, up) in enumerate(types):
        for i in range(R):
            node = (l, i)
            dn = [(node, "d", s) for s in range(down)]
            upk = [(node, "u", s) for s in range(up)]
            for s, h in enumerate(dn):
                pos[h] = (3 * i + 1 if down == 1 else 3 * i + s, 3 * l + 1)
            for s, h in enumerate(upk):
                pos[h] = (3 * i + 1 if up == 1 else 3 * i + s, 3 * l + 3)
            west, east = (node, "w", 0), (node, "e", 0)
            pos[west], pos[east] = (3 * i, 3 * l + 2), (3 * i + 2, 3 * l + 2)
            rotation[node] = [east] + upk[::-1] + [west] + dn
    for l in range(L):
        for i in range(R):
            link(((l, i), "e", 0), ((l, (i + 1) % R), "w", 0))
    for i in range(R):
        h = (EXT0, "f", i)
        pos[h] = (3 * i + 1, 0)
        link(h, ((0, i), "d", 0))
        h = (EXT1, "f", i)
        pos[h] = (3 * i + 1, 3 * L + 1)
        link(h, ((L - 1, i), "u", 0))
    rotation[EXT0] = [(EXT0, "f", i) for i in reversed(range(R))]
    rotation[EXT1] = [(EXT1, "f", i) for i in range(R)]
    for l in range(L - 1):
        gap = types[l][1]
        for i in range(R):
            if gap == 1:
                link(((l, i), "u", 0), ((l + 1, i), "d", 0))
            else:
                link(((l, i), "u", 0), ((l + 1, i), "d", 1))
                link(((l, i), "u", 1), ((l + 1, i), "d", 2))
                link(((l, i), "u", 2), ((l + 1, (i + 1) % R), "d", 0))

    order = sorted(pos, key=lambda h: (pos[h][1], pos[h][0]))
    vid = {h: k for k, h in enumerate(order)}
    succ = {}
    for node, hs in rotation.items():
        for a, b in zip(hs, hs[1:] + hs[:1]):
            succ[a] = b

    edges = set()
    polygons = {}
    for node, hs in rotation.items():
        polygons[node] = tuple(vid[h] for h in hs)
        for a, b in zip(hs, hs[1:] + hs[:1]):
            edges.add(tuple(sorted((vid[a], vid[b]))))
    for a, b in twin.items():
        edges.add(tuple(sorted((vid[a], vid[b]))))

    # faces of the skeleton: walk h -> twin(h) -> succ(twin(h)) ...
    seen = set()
    f1_faces = []
    for start in order:
        if start in seen:
            continue
        cyc, h = [], start
        while h not in seen:
            seen.add(h)
            t = twin[h]
            cyc += [vid[h], vid[t]]
            h = succ[t]
        if h != start:  # pragma: no cover
            raise InconsistencyDetected("face walk did not close")
        f1_faces.append(tuple(cyc))

    f0_faces = [polygons[(l, i)] for l in range(L) for i in range(R)]
    nodes = R * L + 2
    if nodes - len(twin) // 2 + len(f1_faces) != 2:
        raise InconsistencyDetected("skeleton embedding is not spherical")  # pragma: no cover
    faces = tuple(sorted(f0_faces + f1_faces, key=lambda f: (min(f), f)))
    positions = tuple(pos[h] for h in order)
    return SurfaceGraph(positions, tuple(sorted(edges)), faces,
                        (polygons[EXT0], polygons[EXT1]), (period, None), (True, False))


def build_hex_torus(lx: int, ly: int) -> SurfaceGraph:
    """The brick-wall torus of the catalog fixture as a closed surface graph."""
    w, h = 6 * lx, 2 * ly

    def vid(x, y):
        return (y % h) * w + (x % w)

    edges = set()
    for y in range(h):
        for x in range(w):
            edges.add(tuple(sorted((vid(x, y), vid(x + 1, y)))))
            if (x + y) % 2 == 0:
                edges.add(tuple(sorted((vid(x, y), vid(x, y + 1)))))
    faces = []
    for y in range(h):
        for x in range(w):
            if (x + y) % 2 == 0:
                faces.append((vid(x, y), vid(x + 1, y), vid(x + 2, y),
                              vid(x + 2, y + 1), vid(x + 1, y + 1), vid(x, y + 1)))
    positions = tuple((v % w, v // w) for v in range(w * h))
    return SurfaceGraph(positions, tuple(sorted(edges)), tuple(faces), (), (w, h), (True, True))


# ---------------------------------------------------------------------------
# validation


class SurfaceViolation(NamedTuple):
    condition: str  # G1..G4, cellular, euler
    detail: str


def validate_surface(G: SurfaceGraph) -> list[SurfaceViolation]:
    """Conditions G1-G4 plus cellularity; an empty list means valid."""
    out = []
    nv = G.num_vertices
    if nv % 2:
        out.append(SurfaceViolation("G1", f"{nv} vertices"))
    deg = [0] * nv
    for a, b in G.edges:
        deg[a] += 1
        deg[b] += 1
    for u, d in enumerate(deg):
        if d != 3:
            out.append(SurfaceViolation("G2", f"vertex {u} has degree {d}"))
    for fi, f in enumerate(G.faces):
        if len(f) % 2:
            out.append(SurfaceViolation("G3", f"face {fi} has length {len(f)}"))
    if len(G.boundaries) != 2:
        out.append(SurfaceViolation("G4", f"expected 2 boundary cycles, found {len(G.boundaries)}"))
    for a, b in enumerate(G.boundaries):
        if len(b) % 2 == 0:
            out.append(SurfaceViolation("G4", f"boundary {a} has even length {len(b)}"))
    ef = G.edge_faces()
    edge_set = {frozenset(e) for e in G.edges}
    for e, fs in ef.items():
        if e not in edge_set:
            out.append(SurfaceViolation("cellular", f"cycle step {sorted(e)} is not an edge"))
        elif len(fs) != 2:
            out.append(SurfaceViolation("cellular", f"edge {sorted(e)} borders {len(fs)} faces"))
    chi = nv - len(G.edges) + len(G.faces)
    if len(G.boundaries) == 2 and chi != 0:
        out.append(SurfaceViolation("euler", f"V - E + F = {chi}, a cylinder needs 0"))
    return out


def _require_valid(G: SurfaceGraph) -> None:
    bad = validate_surface(G)
    if bad:
        raise InvalidSurface("; ".join(f"{v.condition}: {v.detail}" for v in bad[:5]))


# ---------------------------------------------------------------------------
# code and logicals


def face_code(G: SurfaceGraph, check: bool = True) -> MajoranaCode:
    """One mode per vertex and one generator per face."""
    if check:
        _require_valid(G)
    n = G.num_vertices
    code = MajoranaCode(n, BitMatrix(tuple(from_indices(f) for f in G.faces), n), G.layout())
    bad = validate(code)
    if bad:
        raise InvalidSurface(f"face operators do not form a code: {bad[0].detail}")
    return code


def boundary_logicals(G: SurfaceGraph) -> tuple[MajoranaOperator, MajoranaOperator]:
    _require_valid(G)
    n = G.num_vertices
    return (MajoranaOperator.from_indices(G.gamma0, n), MajoranaOperator.from_indices(G.gamma1, n))


@dataclass(frozen=True)
class FacePartition:
    F0: frozenset[int]
    F1: frozenset[int]


def _partition_by_kernel(G: SurfaceGraph) -> FacePartition:
    # x_f with sum_f x_f [u in f] = 0 for every vertex u
    incidence = BitMatrix(tuple(from_indices(fs) for fs in G.vertex_faces()), len(G.faces))
    ker = kernel_basis(incidence).rows
    if len(ker) != 1:
        raise InconsistencyDetected(f"face dependency space has dimension {len(ker)}, expected 1")
    x = ker[0]
    f1 = frozenset(f for f in range(len(G.faces)) if (x >> f) & 1)
    return FacePartition(frozenset(range(len(G.faces))) - f1, f1)


def _partition_by_propagation(G: SurfaceGraph, start: int) -> FacePartition:
    """Fix both faces at a boundary vertex to 1, then repeatedly solve single unknowns."""
    vf = G.vertex_faces()
    if start not in G.boundary_vertices():
        raise ValueError(f"start vertex {start} is not on the boundary")
    x: dict[int, int] = {f: 1 for f in vf[start]}
    queue = list(range(G.num_vertices))
    changed = True
    while changed:
        changed = False
        for u in queue:
            unknown = [f for f in vf[u] if f not in x]
            if len(unknown) == 1:
                x[unknown[0]] = sum(x[f] for f in vf[u] if f in x) % 2
                changed = True
    if len(x) != len(G.faces):
        raise InconsistencyDetected("propagation did not reach every face")
    for u in range(G.num_vertices):
        if sum(x[f] for f in vf[u]) % 2:
            raise InconsistencyDetected(f"propagation violates the constraint at vertex {u}")
    f1 = frozenset(f for f, b in x.items() if b)
    return FacePartition(frozenset(range(len(G.faces))) - f1, f1)


def check_partition(G: SurfaceGraph, part: FacePartition) -> list[str]:
    """Vertex conditions: two F1 faces everywhere, one F0 face off the boundary."""
    bnd = G.boundary_vertices()
    errs = []
    for u, fs in enumerate(G.vertex_faces()):
        n1 = sum(f in part.F1 for f in fs)
        n0 = sum(f in part.F0 for f in fs)
        if n1 != 2:
            errs.append(f"vertex {u} has {n1} F1 faces")
        if u not in bnd and n0 != 1:
            errs.append(f"interior vertex {u} has {n0} F0 faces")
    return errs


def partition_faces(G: SurfaceGraph, start: int | None = None) -> FacePartition:
    """The unique F0/F1 split, from linear algebra, cross-checked by propagation."""
    _require_valid(G)
    part = _partition_by_kernel(G)
    start = G.gamma0[0] if start is None else start
    if _partition_by_propagation(G, start) != part:
        raise InconsistencyDetected("propagation disagrees with the kernel solution")
    errs = check_partition(G, part)
    if errs:
        raise InconsistencyDetected("; ".join(errs[:5]))
    return part


# ---------------------------------------------------------------------------
# derived graphs


def _owner(G: SurfaceGraph, part: FacePartition) -> list:
    """Skeleton node of each vertex: its F0 face, or the external face it borders."""
    owner: list = [None] * G.num_vertices
    for f in part.F0:
        for u in G.faces[f]:
            owner[u] = f
    for a, b in enumerate(G.boundaries):
        for u in b:
            owner[u] = EXT0 if a == 0 else EXT1
    return owner


def e0_edges(G: SurfaceGraph, part: FacePartition) -> list[tuple[int, int]]:
    """Edges whose two adjacent faces are both in F1."""
    out = []
    ef = G.edge_faces()
    for a, b in G.edges:
        fs = ef[frozenset((a, b))]
        if len(fs) == 2 and all(isinstance(f, int) and f in part.F1 for f in fs):
            out.append((a, b))
    return out


def derived_g0(G: SurfaceGraph, part: FacePartition | None = None) -> nx.MultiGraph:
    """Nodes F0 + {ext0, ext1}; one edge per E0 edge, keyed by the lattice edge."""
    part = partition_faces(G) if part is None else part
    owner = _owner(G, part)
    g = nx.MultiGraph()
    g.add_nodes_from(sorted(part.F0))
    g.add_nodes_from([EXT0, EXT1])
    for a, b in e0_edges(G, part):
        g.add_edge(owner[a], owner[b], key=(a, b))
    return g


def derived_g1(G: SurfaceGraph, part: FacePartition | None = None,
               faces: Iterable[int] | None = None) -> nx.Graph:
    """Nodes F1 (optionally restricted), joined across every E0 edge."""
    part = partition_faces(G) if part is None else part
    keep = set(part.F1) if faces is None else set(faces) & set(part.F1)
    ef = G.edge_faces()
    g = nx.Graph()
    g.add_nodes_from(sorted(keep))
    for a, b in e0_edges(G, part):
        f, h = ef[frozenset((a, b))]
        if f in keep and h in keep:
            g.add_edge(f, h)
    return g


def string_logical(G: SurfaceGraph, path: Sequence[tuple[int, int]],
                   part: FacePartition | None = None) -> MajoranaOperator:
    """Product of c_u c_v over the lattice edges (u, v) of a skeleton path ext0 -> ext1."""
    part = partition_faces(G) if part is None else part
    owner = _owner(G, part)
    e0 = {frozenset(e) for e in e0_edges(G, part)}
    if not path:
        raise PathDoesNotConnectExternalFaces("empty path")
    at = EXT0
    support = 0
    for k, (a, b) in enumerate(path):
        if frozenset((a, b)) not in e0:
            raise NotAPath(f"step {k}: ({a}, {b}) is not an E0 edge")
        if owner[a] == at:
            at = owner[b]
        elif owner[b] == at:
            at = owner[a]
        elif k == 0:
            raise PathDoesNotConnectExternalFaces(f"path starts at {owner[a]!r}/{owner[b]!r}, not ext0")
        else:
            raise NotAPath(f"step {k}: ({a}, {b}) does not continue from {at!r}")
        support ^= (1 << a) | (1 << b)
    if at != EXT1:
        raise PathDoesNotConnectExternalFaces(f"path ends at {at!r}, not ext1")
    return MajoranaOperator(support, G.num_vertices)


def shortest_string_path(G: SurfaceGraph, part: FacePartition | None = None,
                         avoid: Iterable[tuple[int, int]] = ()) -> list[tuple[int, int]]:
    """Fewest-edge skeleton path ext0 -> ext1 as lattice edges (deterministic)."""
    g = derived_g0(G, part)
    skip = {frozenset(e) for e in avoid}
    simple = nx.Graph()
    simple.add_nodes_from(g.nodes)
    for a, b, key in sorted(g.edges(keys=True), key=lambda t: t[2]):
        if frozenset(key) in skip or simple.has_edge(a, b):
            continue
        simple.add_edge(a, b, key=key)
    nodes = nx.shortest_path(simple, EXT0, EXT1)
    return [simple.edges[a, b]["key"] for a, b in zip(nodes, nodes[1:])]


def disjoint_path_count(G: SurfaceGraph, part: FacePartition | None = None) -> int:
    """Maximum number of edge-disjoint skeleton paths between the external faces.

    Distinct E0 edges use disjoint vertex pairs, so the strings are disjoint
    and any odd logical needs at least this many modes.
    """
    g = derived_g0(G, part)
    flow = nx.DiGraph()
    for a, b in g.edges():
        for s, t in ((a, b), (b, a)):
            cap = flow.edges[s, t]["capacity"] + 1 if flow.has_edge(s, t) else 1
            flow.add_edge(s, t, capacity=cap)
    return int(nx.maximum_flow_value(flow, EXT0, EXT1))


# ---------------------------------------------------------------------------
# colorability


def face_adjacency(G: SurfaceGraph, faces: Iterable[int] | None = None) -> nx.Graph:
    keep = set(range(len(G.faces))) if faces is None else set(faces)
    g = nx.Graph()
    g.add_nodes_from(sorted(keep))
    for fs in G.edge_faces().values():
        ints = [f for f in fs if isinstance(f, int) and f in keep]
        if len(ints) == 2 and ints[0] != ints[1]:
            g.add_edge(*ints)
    return g


def three_color(g: nx.Graph, limit: int = 2_000_000) -> dict | None:
    """Backtracking vertex 3-coloring, most-constrained node first; None if impossible."""
    colors: dict = {}
    steps = 0

    def pick():
        best, key = None, None
        for v in g.nodes:
            if v in colors:
                continue
            used = {colors[u] for u in g[v] if u in colors}
            k = (-len(used), -g.degree(v))
            if key is None or k < key:
                best, key = v, k
        return best

    def solve() -> bool:
        nonlocal steps
        v = pick()
        if v is None:
            return True
        steps += 1
        if steps > limit:
            raise TooLarge("3-coloring search exceeded its step budget")
        used = {colors[u] for u in g[v] if u in colors}
        for c in range(3):
            if c not in used:
                colors[v] = c
                if solve():
                    return True
                del colors[v]
        return False

    return dict(colors) if solve() else None


def seam_faces(G: SurfaceGraph, column: int = 0) -> set[int]:
    """Faces touching the vertex column x in [3c, 3c + 2]; removing them cuts the cylinder open."""
    lo, hi = 3 * column, 3 * column + 2
    return {fi for fi, f in enumerate(G.faces) if any(lo <= G.positions[u][0] <= hi for u in f)}


@dataclass
class ColorabilityReport:
    g1_bipartite: bool | None
    three_colorable: bool
    cut_g1_bipartite: bool | None = None
    cut_three_colorable: bool | None = None
    removed_faces: list[int] = field(default_factory=list)


def colorability(G: SurfaceGraph, cut_column: int | None = 0) -> ColorabilityReport:
    """Face 3-colorability of the whole surface and of a cut-open piece.

    With a boundary, the F1 graph (bipartite iff 3-colorable) is reported
    alongside a direct backtracking search; closed surfaces get the direct
    search only.
    """
    closed = not G.boundaries
    if closed:
        col = three_color(face_adjacency(G)) is not None
        return ColorabilityReport(None, col)
    _require_valid(G)
    part = partition_faces(G)
    bip = nx.is_bipartite(derived_g1(G, part))
    col = three_color(face_adjacency(G)) is not None
    if bip != col:
        raise InconsistencyDetected("F1 bipartiteness disagrees with direct 3-coloring")
    report = ColorabilityReport(bip, col)
    if cut_column is not None:
        removed = seam_faces(G, cut_column)
        rest = set(range(len(G.faces))) - removed
        report.removed_faces = sorted(removed)
        report.cut_g1_bipartite = nx.is_bipartite(derived_g1(G, part, rest))
        report.cut_three_colorable = three_color(face_adjacency(G, rest)) is not None
    return report


# ---------------------------------------------------------------------------
# scaling


@dataclass
class ScalingRow:
    R: int
    L: int
    modes: int
    d: int | None
    l_even: int | None
    min_odd_weight: int | None
    disjoint_paths: int
    boundary_weight: int
    l_even_exact: bool = True

    def csv(self) -> str:
        def fmt(v):
            return "exhausted" if v is None else str(v)
        return f"{self.R},{self.L},{self.modes},{fmt(self.d)},{fmt(self.l_even)},{fmt(self.min_odd_weight)}"


CSV_HEADER = "R,L,modes,d,l_even,min_odd_weight"


def cylinder_row(R: int, L: int, max_weight: int | None = None) -> ScalingRow:
    from .majorana import l_even as _l_even

    G = build_cylinder(R, L)
    code = face_code(G)
    part = partition_faces(G)
    best = min_weight_logical(code, max_weight)
    odd = CosetSearch(code.centralizer(), code.generators, parity="odd").run(max_weight)
    ev = _l_even(code)
    return ScalingRow(R, L, code.modes, None if best is None else best.weight, ev.value,
                      None if odd is None else odd[0], disjoint_path_count(G, part),
                      len(G.gamma0), ev.exact)


def scaling_experiment(R_list: Iterable[int], L_list: Iterable[int], max_weight: int | None = None,
                       mode_cap: int = 200) -> list[ScalingRow]:
    """One row per (R, L) in input order.  Instances above ``mode_cap`` raise TooLarge."""
    rows = []
    for R in R_list:
        for L in L_list:
            n = cylinder_modes(R, L)
            if n > mode_cap:
                raise TooLarge(f"R={R}, L={L} has {n} modes, above the cap of {mode_cap}")
            rows.append(cylinder_row(R, L, max_weight))
    return rows


def cylinder_modes(R: int, L: int) -> int:
    return 2 * R + R * sum(d + u + 2 for d, u in layer_types(L))


def anticommute(a: MajoranaOperator, b: MajoranaOperator) -> bool:
    return majorana_form(a.support, b.support) == 1

