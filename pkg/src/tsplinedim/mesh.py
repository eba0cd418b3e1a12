"""T-mesh construction, validation, classification and face counts.

A T-mesh is entered as a bare list of axis-aligned rational rectangles; all
edges and vertices are derived by fragmenting cell sides at every corner
point that lands on them, then deduplicating the fragments across adjacent
cells.  Coordinates are exact rationals throughout, so incidence tests never
depend on tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DanglingGeometry,
    DisconnectedDomain,
    DomainNotSimplyConnected,
    OverlappingCells,
)

HORIZONTAL = "h"
VERTICAL = "v"

CROSSING = "crossing"
T_VERTEX = "t-vertex"
BOUNDARY = "boundary"
CORNER = "corner"


def as_fraction(value):
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class Vertex:
    id: int
    x: Fraction
    y: Fraction
    kind: str
    h_edges: tuple[int, ...]
    v_edges: tuple[int, ...]

    @property
    def position(self):
        return (self.x, self.y)

    @property
    def interior(self):
        return self.kind in (CROSSING, T_VERTEX)

    @property
    def degree(self):
        return len(self.h_edges) + len(self.v_edges)


@dataclass(frozen=True)
class Edge:
    id: int
    start: int  # vertex id at (lo) end: left for horizontal, bottom for vertical
    end: int
    direction: str
    interior: bool
    cells: tuple[int, ...]
    coord: Fraction  # supporting-line coordinate: y for horizontal, x for vertical
    lo: Fraction
    hi: Fraction

    @property
    def horizontal(self):
        return self.direction == HORIZONTAL


@dataclass(frozen=True)
class Cell:
    id: int
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction
    boundary_edges: tuple[int, ...]  # counter-clockwise from the bottom-left corner

    @property
    def rect(self):
        return (self.x0, self.y0, self.x1, self.y1)

    def contains(self, x, y):
        """True when (x, y) lies in the closed cell."""
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1


@dataclass(frozen=True)
class FaceCounts:
    f2: int
    f1: int
    f1o: int
    f1h: int
    f1v: int
    f0: int
    f0o: int
    f0plus: int
    f0T: int
    f0b: int
    corners: int

    @property
    def euler(self):
        return self.f2 - self.f1o + self.f0o


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of the counting-identity checks.

    ``nbf_*`` entries are None when the domain is not a rectangle with four
    corner vertices (the identities are only claimed there).
    """

    euler_ok: bool
    rectangular: bool
    nbf_f2_ok: bool | None
    nbf_f1_ok: bool | None
    nbf_f0_ok: bool | None

    @property
    def all_ok(self):
        nbf = (self.nbf_f2_ok, self.nbf_f1_ok, self.nbf_f0_ok)
        return self.euler_ok and all(v is None or v for v in nbf)


class TMesh:
    """Immutable planar T-mesh with classified faces.

    Canonical ids: vertices sorted by (y, x), cells by (y0, x0), edges by
    their (start, end) coordinate tuples, so identical input cell lists give
    identical meshes.
    """

    def __init__(self, cells, edges, vertices, nodes_x, nodes_y, boundary_cycle):
        self.cells: tuple[Cell, ...] = cells
        self.edges: tuple[Edge, ...] = edges
        self.vertices: tuple[Vertex, ...] = vertices
        self.nodes_x: tuple[Fraction, ...] = nodes_x
        self.nodes_y: tuple[Fraction, ...] = nodes_y
        self.boundary_cycle: tuple[int, ...] = boundary_cycle
        self._vertex_at = {(v.x, v.y): v.id for v in vertices}
        self.interior_edges = tuple(e.id for e in edges if e.interior)
        self.interior_vertices = tuple(v.id for v in vertices if v.interior)

    def vertex_at(self, x, y):
        """Vertex id at an exact position, or None."""
        return self._vertex_at.get((as_fraction(x), as_fraction(y)))

    def cell_rects(self):
        return [c.rect for c in self.cells]

    def cell_containing(self, x, y):
        """Cell whose open interior contains (x, y), or None."""
        x, y = as_fraction(x), as_fraction(y)
        for c in self.cells:
            if c.x0 < x < c.x1 and c.y0 < y < c.y1:
                return c
        return None

    @property
    def bbox(self):
        return (
            min(c.x0 for c in self.cells),
            min(c.y0 for c in self.cells),
            max(c.x1 for c in self.cells),
            max(c.y1 for c in self.cells),
        )


def _normalize_rects(rectangles):
    rects = []
    for rect in rectangles:
        x0, y0, x1, y1 = (as_fraction(v) for v in rect)
        if x0 >= x1 or y0 >= y1:
            raise ValueError(f"degenerate rectangle {rect!r}")
        rects.append((x0, y0, x1, y1))
    if not rects:
        raise ValueError("cell list is empty")
    rects.sort(key=lambda r: (r[1], r[0], r[3], r[2]))
    return rects


def _format_rect(rect):
    return "[" + ", ".join(str(v) for v in rect) + "]"


def _check_overlaps(rects):
    for i in range(len(rects)):
        x0, y0, x1, y1 = rects[i]
        for j in range(i + 1, len(rects)):
            a0, b0, a1, b1 = rects[j]
            if x0 < a1 and a0 < x1 and y0 < b1 and b0 < y1:
                raise OverlappingCells(
                    f"cells {_format_rect(rects[i])} and {_format_rect(rects[j])} overlap"
                )


def build_mesh(rectangles):
    """Build a validated TMesh from rational rectangles with disjoint interiors."""
    rects = _normalize_rects(rectangles)
    _check_overlaps(rects)

    corners = set()
    for x0, y0, x1, y1 in rects:
        corners.update(((x0, y0), (x1, y0), (x0, y1), (x1, y1)))
    xs_at_y: dict[Fraction, list[Fraction]] = {}
    ys_at_x: dict[Fraction, list[Fraction]] = {}
    for x, y in corners:
        xs_at_y.setdefault(y, []).append(x)
        ys_at_x.setdefault(x, []).append(y)
    for lst in xs_at_y.values():
        lst.sort()
    for lst in ys_at_x.values():
        lst.sort()

    # Fragment each cell side at every corner point on it; key fragments by
    # (direction, line coordinate, span) and collect adjacent cells.
    fragments: dict[tuple, list[tuple[int, str]]] = {}

    def side(cell_id, direction, coord, lo, hi, which):
        pts = xs_at_y[coord] if direction == HORIZONTAL else ys_at_x[coord]
        span = [p for p in pts if lo <= p <= hi]
        for a, b in zip(span, span[1:]):
            fragments.setdefault((direction, coord, a, b), []).append((cell_id, which))

    for ci, (x0, y0, x1, y1) in enumerate(rects):
        side(ci, HORIZONTAL, y0, x0, x1, "bottom")
        side(ci, HORIZONTAL, y1, x0, x1, "top")
        side(ci, VERTICAL, x0, y0, y1, "left")
        side(ci, VERTICAL, x1, y0, y1, "right")

    for key, owners in fragments.items():
        if len(owners) > 2:
            raise OverlappingCells(f"edge fragment {key} claimed by {len(owners)} cells")

    # Vertices: fragment endpoints, sorted by (y, x).
    points = set()
    for direction, coord, a, b in fragments:
        if direction == HORIZONTAL:
            points.update(((a, coord), (b, coord)))
        else:
            points.update(((coord, a), (coord, b)))
    ordered_points = sorted(points, key=lambda p: (p[1], p[0]))
    vid_at = {p: i for i, p in enumerate(ordered_points)}

    edge_keys = sorted(
        fragments,
        key=lambda k: (k[1], k[2], k[1], k[3]) if k[0] == HORIZONTAL else (k[2], k[1], k[3], k[1]),
    )
    edge_records = []
    h_edges_of: dict[int, list[int]] = {}
    v_edges_of: dict[int, list[int]] = {}
    for eid, key in enumerate(edge_keys):
        direction, coord, lo, hi = key
        if direction == HORIZONTAL:
            start, end = vid_at[(lo, coord)], vid_at[(hi, coord)]
        else:
            start, end = vid_at[(coord, lo)], vid_at[(coord, hi)]
        cells_here = tuple(sorted(ci for ci, _ in fragments[key]))
        interior = len(cells_here) == 2
        edge_records.append((eid, start, end, direction, interior, cells_here, coord, lo, hi))
        bucket = h_edges_of if direction == HORIZONTAL else v_edges_of
        bucket.setdefault(start, []).append(eid)
        bucket.setdefault(end, []).append(eid)

    # Classify vertices; incidence anomalies are reported only after the
    # connectivity and Euler checks, which give more specific errors.
    boundary_touch = set()
    for eid, start, end, direction, interior, cells_here, coord, lo, hi in edge_records:
        if not interior:
            boundary_touch.update((start, end))
    vertices = []
    anomalies = []
    for vid, (x, y) in enumerate(ordered_points):
        h_list = tuple(sorted(h_edges_of.get(vid, ())))
        v_list = tuple(sorted(v_edges_of.get(vid, ())))
        if not h_list or not v_list:
            anomalies.append(f"vertex ({x}, {y}) misses a horizontal or vertical edge")
        degree = len(h_list) + len(v_list)
        if vid in boundary_touch:
            n_boundary = sum(1 for eid in h_list + v_list if not edge_records[eid][4])
            if n_boundary != 2:
                anomalies.append(f"boundary vertex ({x}, {y}) has {n_boundary} boundary edges")
            has_h_bdry = any(not edge_records[eid][4] for eid in h_list)
            has_v_bdry = any(not edge_records[eid][4] for eid in v_list)
            kind = CORNER if (has_h_bdry and has_v_bdry) else BOUNDARY
        elif degree == 4:
            kind = CROSSING
        elif degree == 3:
            kind = T_VERTEX
        else:
            anomalies.append(f"interior vertex ({x}, {y}) has degree {degree}")
            kind = T_VERTEX
        vertices.append(Vertex(vid, x, y, kind, h_list, v_list))
    vertices = tuple(vertices)

    edges = tuple(
        Edge(eid, start, end, direction, interior, cells_here, coord, lo, hi)
        for eid, start, end, direction, interior, cells_here, coord, lo, hi in edge_records
    )

    # Cell boundary cycles, counter-clockwise from the bottom-left corner.
    per_cell: dict[int, dict[str, list[int]]] = {ci: {} for ci in range(len(rects))}
    for e in edges:
        for ci, which in fragments[(e.direction, e.coord, e.lo, e.hi)]:
            per_cell[ci].setdefault(which, []).append(e.id)
    cells = []
    for ci, (x0, y0, x1, y1) in enumerate(rects):
        sides = per_cell[ci]
        order = lambda eids: sorted(eids, key=lambda i: edges[i].lo)
        cycle = (
            order(sides["bottom"])
            + order(sides["right"])
            + list(reversed(order(sides["top"])))
            + list(reversed(order(sides["left"])))
        )
        cells.append(Cell(ci, x0, y0, x1, y1, tuple(cycle)))
    cells = tuple(cells)

    # Dual connectivity over shared interior edges.
    adjacency: dict[int, set[int]] = {ci: set() for ci in range(len(cells))}
    for e in edges:
        if e.interior:
            a, b = e.cells
            adjacency[a].add(b)
            adjacency[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adjacency[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(cells):
        raise DisconnectedDomain(f"{len(cells) - len(seen)} cells unreachable in the dual graph")

    f2 = len(cells)
    f1o = sum(1 for e in edges if e.interior)
    f0o = sum(1 for v in vertices if v.interior)
    if f2 - f1o + f0o != 1:
        raise DomainNotSimplyConnected(f"Euler count f2 - f1o + f0o = {f2 - f1o + f0o} != 1")
    if anomalies:
        raise DanglingGeometry("; ".join(anomalies))

    boundary_cycle = _walk_boundary(edges, vertices)

    nodes_x = tuple(sorted({e.coord for e in edges if e.direction == VERTICAL}))
    nodes_y = tuple(sorted({e.coord for e in edges if e.direction == HORIZONTAL}))
    return TMesh(cells, edges, vertices, nodes_x, nodes_y, boundary_cycle)


def _walk_boundary(edges, vertices):
    boundary = [e for e in edges if not e.interior]
    at_vertex: dict[int, list[int]] = {}
    for e in boundary:
        at_vertex.setdefault(e.start, []).append(e.id)
        at_vertex.setdefault(e.end, []).append(e.id)
    start_vertex = min(at_vertex)
    cycle = []
    prev_vertex = start_vertex
    edge = edges[min(at_vertex[start_vertex])]
    while True:
        cycle.append(edge.id)
        nxt = edge.end if edge.start == prev_vertex else edge.start
        if nxt == start_vertex:
            break
        candidates = [i for i in at_vertex[nxt] if i != edge.id]
        if len(candidates) != 1:
            raise DanglingGeometry(f"boundary walk stuck at vertex {nxt}")
        prev_vertex = nxt
        edge = edges[candidates[0]]
    if len(cycle) != len(boundary):
        raise DomainNotSimplyConnected("boundary edges form more than one cycle")
    return tuple(cycle)


def stats(mesh):
    """Face counts of a valid mesh."""
    f2 = len(mesh.cells)
    f1 = len(mesh.edges)
    f1h = sum(1 for e in mesh.edges if e.interior and e.direction == HORIZONTAL)
    f1v = sum(1 for e in mesh.edges if e.interior and e.direction == VERTICAL)
    f0 = len(mesh.vertices)
    f0plus = sum(1 for v in mesh.vertices if v.kind == CROSSING)
    f0T = sum(1 for v in mesh.vertices if v.kind == T_VERTEX)
    corners = sum(1 for v in mesh.vertices if v.kind == CORNER)
    f0b = sum(1 for v in mesh.vertices if not v.interior)
    return FaceCounts(
        f2=f2,
        f1=f1,
        f1o=f1h + f1v,
        f1h=f1h,
        f1v=f1v,
        f0=f0,
        f0o=f0plus + f0T,
        f0plus=f0plus,
        f0T=f0T,
        f0b=f0b,
        corners=corners,
    )


def is_rectangular_domain(mesh):
    """True when the cell union is exactly its bounding box."""
    x0, y0, x1, y1 = mesh.bbox
    area = sum((c.x1 - c.x0) * (c.y1 - c.y0) for c in mesh.cells)
    counts = stats(mesh)
    return area == (x1 - x0) * (y1 - y0) and counts.corners == 4


def check_counting_identities(mesh):
    """Euler identity on any mesh; the three rectangle-domain identities when applicable."""
    counts = stats(mesh)
    euler_ok = counts.euler == 1
    rectangular = is_rectangular_domain(mesh)
    if not rectangular:
        return IdentityReport(euler_ok, False, None, None, None)
    half = Fraction(1, 2)
    nbf_f2 = counts.f2 == counts.f0plus + half * counts.f0T + half * counts.f0b - 1
    nbf_f1 = counts.f1o == 2 * counts.f0plus + 3 * half * counts.f0T + half * counts.f0b - 2
    nbf_f0 = counts.f0o == counts.f0plus + counts.f0T
    return IdentityReport(euler_ok, True, nbf_f2, nbf_f1, nbf_f0)
