"""Maximal segments, the interior subset, blocking, orderings and weights."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .mesh import HORIZONTAL


@dataclass(frozen=True)
class MaxSegment:
    """Maximal run of collinear, connected interior edges."""

    id: int
    direction: str
    coord: Fraction  # supporting-line coordinate
    lo: Fraction
    hi: Fraction
    edges: tuple[int, ...]  # ordered along the segment
    vertices: tuple[int, ...]  # every mesh vertex on the segment, ordered
    interior: bool  # True iff the segment does not meet the domain boundary

    @property
    def horizontal(self):
        return self.direction == HORIZONTAL

    def contains_point(self, x, y):
        if self.horizontal:
            return y == self.coord and self.lo <= x <= self.hi
        return x == self.coord and self.lo <= y <= self.hi


class SegmentAnalysis:
    def __init__(self, mesh, segments):
        self.mesh = mesh
        self.segments: tuple[MaxSegment, ...] = segments
        self.mis = tuple(s.id for s in segments if s.interior)
        self.mis_h = tuple(s.id for s in segments if s.interior and s.horizontal)
        self.mis_v = tuple(s.id for s in segments if s.interior and not s.horizontal)
        self.segment_of_edge = {}
        self._through: dict[tuple[int, str], int] = {}
        self._vertex_sets: dict[int, frozenset[int]] = {}
        self._mis_at_vertex: dict[int, tuple[int, ...]] = {}
        for seg in segments:
            for eid in seg.edges:
                self.segment_of_edge[eid] = seg.id
            for vid in seg.vertices:
                self._through[(vid, seg.direction)] = seg.id
            self._vertex_sets[seg.id] = frozenset(seg.vertices)
        for sid in self.mis:
            for vid in segments[sid].vertices:
                self._mis_at_vertex.setdefault(vid, ())
                self._mis_at_vertex[vid] += (sid,)

    def segment_through(self, vertex_id, direction):
        """Maximal segment of the given direction through a vertex, or None."""
        return self._through.get((vertex_id, direction))

    def vertex_on(self, vertex_id, segment_id):
        return vertex_id in self._vertex_sets[segment_id]

    def interior_segments_at(self, vertex_id):
        return self._mis_at_vertex.get(vertex_id, ())


def analyze_segments(mesh):
    """Group interior edges into maximal segments (one segment per connected run)."""
    by_line: dict[tuple[str, Fraction], list] = {}
    for eid in mesh.interior_edges:
        e = mesh.edges[eid]
        by_line.setdefault((e.direction, e.coord), []).append(e)

    raw = []
    for (direction, coord), line_edges in by_line.items():
        line_edges.sort(key=lambda e: e.lo)
        run = [line_edges[0]]
        for e in line_edges[1:]:
            if e.lo == run[-1].hi:
                run.append(e)
            else:
                raw.append((direction, coord, run))
                run = [e]
        raw.append((direction, coord, run))

    raw.sort(key=lambda item: (item[0], item[1], item[2][0].lo))
    segments = []
    for sid, (direction, coord, run) in enumerate(raw):
        verts = [run[0].start] + [e.end for e in run]
        vobjs = [mesh.vertices[v] for v in verts]
        interior = vobjs[0].interior and vobjs[-1].interior
        assert all(v.interior for v in vobjs[1:-1]), "segment pinched on the boundary"
        segments.append(
            MaxSegment(
                id=sid,
                direction=direction,
                coord=coord,
                lo=run[0].lo,
                hi=run[-1].hi,
                edges=tuple(e.id for e in run),
                vertices=tuple(verts),
                interior=interior,
            )
        )
    return SegmentAnalysis(mesh, tuple(segments))


def blocking(analysis):
    """Directed pairs (a, b): segment a blocks segment b.

    a blocks b when an end point of b lies strictly inside a; only interior
    segments participate.
    """
    pairs = []
    for sid in analysis.mis:
        seg = analysis.segments[sid]
        inner = set(seg.vertices[1:-1])
        for other_id in analysis.mis:
            if other_id == sid:
                continue
            other = analysis.segments[other_id]
            if other.vertices[0] in inner or other.vertices[-1] in inner:
                pairs.append((sid, other_id))
    return tuple(pairs)


@dataclass(frozen=True)
class Ordering:
    """Injective ranking of the interior segments.

    source is "appearance" (from a subdivision history), "topological"
    (blocking order) or "canonical" (fallback when blocking has a cycle).
    """

    index: dict[int, int] = field(default_factory=dict)
    source: str = "topological"
    cyclic: bool = False

    def rank(self, segment_id):
        return self.index[segment_id]


def default_ordering(analysis, history=None):
    """Appearance order when a history is supplied, else blocking-topological.

    Cyclic blocking falls back to the canonical segment order and sets the
    ``cyclic`` flag.
    """
    if history is not None:
        from .hierarchy import appearance_ordering

        return appearance_ordering(history, analysis)
    mis = list(analysis.mis)
    succ = {}
    indeg = {sid: 0 for sid in mis}
    for a, b in blocking(analysis):
        succ.setdefault(a, []).append(b)
        indeg[b] += 1
    order = []
    ready = sorted(sid for sid in mis if indeg[sid] == 0)
    while ready:
        sid = ready.pop(0)
        order.append(sid)
        for nxt in succ.get(sid, ()):
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                ready.append(nxt)
        ready.sort()
    if len(order) != len(mis):
        return Ordering({sid: i + 1 for i, sid in enumerate(sorted(mis))}, "canonical", True)
    return Ordering({sid: i + 1 for i, sid in enumerate(order)}, "topological", False)


@dataclass(frozen=True)
class SegmentWeight:
    vertices: tuple[int, ...]  # counted vertices: not on any later interior segment
    count: int
    weight: int


def segment_weight(analysis, dist, degree, ordering, segment_id):
    """Counted vertex set, its size, and the weight of one interior segment.

    A vertex of the segment is counted unless it lies on another interior
    segment with a larger ordering rank.  Each counted vertex contributes its
    transversal multiplicity: degree minus smoothness of the crossing line,
    clamped at zero (orders at or above the degree pin nothing).
    """
    m, n = degree
    seg = analysis.segments[segment_id]
    rank = ordering.index[segment_id]
    kept = []
    for vid in seg.vertices:
        covered = any(
            other != segment_id and ordering.index[other] > rank
            for other in analysis.interior_segments_at(vid)
        )
        if not covered:
            kept.append(vid)
    if seg.horizontal:
        weight = sum(max(0, m - dist.horizontal_order(analysis.mesh.vertices[v].x)) for v in kept)
    else:
        weight = sum(max(0, n - dist.vertical_order(analysis.mesh.vertices[v].y)) for v in kept)
    return SegmentWeight(tuple(kept), len(kept), weight)


def is_weighted(analysis, dist, degree, ordering, k, kp):
    """True iff every horizontal interior segment has weight >= k and every
    vertical one weight >= kp (vacuously true without interior segments)."""
    for sid in analysis.mis_h:
        if segment_weight(analysis, dist, degree, ordering, sid).weight < k:
            return False
    for sid in analysis.mis_v:
        if segment_weight(analysis, dist, degree, ordering, sid).weight < kp:
            return False
    return True
