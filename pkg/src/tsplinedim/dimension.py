"""Closed-form dimension results: the combinatorial term, shifted-power
dimension counts, defect bounds, exactness certificates and the final report."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import DegreeOutOfRange, DuplicatePoints
from .segments import analyze_segments, default_ordering, is_weighted, segment_weight
from .smoothness import quotient_dims

SEARCH_LIMIT = 8  # exhaustive ordering minimization up to this many interior segments

CERT_NO_MIS = "no-MIS"
CERT_WEIGHTED = "weighted"
CERT_SMALL_WEIGHTS = "small-weights-equality"
CERT_HIERARCHICAL = "hierarchical-degree"
CERT_ORACLE = "oracle"
CERT_NONE = "none"


def apolar_dim(n, points):
    """Dimension of a sum of shifted-power multiple spaces in degree <= n.

    ``points`` lists (a_i, d_i) pairs; the span of all (u - a_i)^{d_i} times
    degree <= n - d_i polynomials has dimension min(n + 1, sum(n - d_i + 1)).
    """
    seen = set()
    total = 0
    for a, d in points:
        if a in seen:
            raise DuplicatePoints(f"point {a} repeated")
        seen.add(a)
        if not 0 <= d <= n:
            raise DegreeOutOfRange(f"exponent {d} outside [0, {n}]")
        total += n - d + 1
    if not points:
        return 0
    return min(n + 1, total)


def shifted_power_codim(n, points):
    """Companion value: codimension (n + 1 - sum(n - d_i + 1)) clamped at 0."""
    return max(0, n + 1 - sum(n - d + 1 for _, d in points))


def combinatorial_term(mesh, dist, degree):
    """Alternating sum of quotient dimensions over cells, interior edges and
    interior vertices; the topology-only part of the spline space dimension."""
    total = 0
    for cell in mesh.cells:
        total += quotient_dims(dist, degree, cell)
    for eid in mesh.interior_edges:
        total -= quotient_dims(dist, degree, mesh.edges[eid])
    for vid in mesh.interior_vertices:
        total += quotient_dims(dist, degree, mesh.vertices[vid])
    return total


@dataclass(frozen=True)
class SegmentContribution:
    segment: int
    weight: int
    contribution: int


@dataclass(frozen=True)
class DefectBound:
    total: int
    per_segment: tuple[SegmentContribution, ...]


def h_upper_bound(analysis, dist, degree, ordering):
    """Upper bound for the homology defect under a fixed segment ordering.

    Each horizontal interior segment contributes (m + 1 - weight)_+ times the
    transversal factor (n - r), and symmetrically for vertical segments.
    """
    m, n = degree
    parts = []
    total = 0
    for sid in analysis.mis:
        seg = analysis.segments[sid]
        w = segment_weight(analysis, dist, degree, ordering, sid).weight
        if seg.horizontal:
            r = dist.vertical_order(seg.coord)
            contribution = max(0, m + 1 - w) * max(0, n - r)
        else:
            r = dist.horizontal_order(seg.coord)
            contribution = max(0, m - r) * max(0, n + 1 - w)
        parts.append(SegmentContribution(sid, w, contribution))
        total += contribution
    return DefectBound(total, tuple(parts))


def search_ordering(analysis, dist, degree):
    """Exhaustively minimize the defect bound over segment orderings.

    Only attempted when there are at most SEARCH_LIMIT interior segments (the
    bound is valid for every ordering, so the minimum is the sharpest
    certified value).  Returns the lexicographically smallest minimizer.
    """
    from .segments import Ordering

    mis = sorted(analysis.mis)
    if len(mis) > SEARCH_LIMIT:
        return None
    best = None
    best_perm = None
    for perm in permutations(mis):
        ordering = Ordering({sid: i + 1 for i, sid in enumerate(perm)}, "search", False)
        total = h_upper_bound(analysis, dist, degree, ordering).total
        if best is None or total < best:
            best = total
            best_perm = perm
    return Ordering({sid: i + 1 for i, sid in enumerate(best_perm)}, "search", False)


@dataclass(frozen=True)
class Certificate:
    name: str
    h: int | None  # exact defect when the certificate pins it


def exactness_certificate(analysis, dist, degree, ordering, history=None):
    """Strongest applicable exactness statement for the defect.

    In order: no interior segments; (m+1, n+1)-weighted; all weights small
    enough that the bound is attained; hierarchical mesh with constant
    smoothness and degrees at least 2r+1.  Otherwise "none".
    """
    m, n = degree
    if not analysis.mis:
        return Certificate(CERT_NO_MIS, 0)
    if is_weighted(analysis, dist, degree, ordering, m + 1, n + 1):
        return Certificate(CERT_WEIGHTED, 0)
    small = all(
        segment_weight(analysis, dist, degree, ordering, sid).weight <= m + 1
        for sid in analysis.mis_h
    ) and all(
        segment_weight(analysis, dist, degree, ordering, sid).weight <= n + 1
        for sid in analysis.mis_v
    )
    if small:
        return Certificate(CERT_SMALL_WEIGHTS, h_upper_bound(analysis, dist, degree, ordering).total)
    if history is not None:
        constant = dist.is_constant()
        if constant is not None:
            r, rp = constant
            if m >= 2 * r + 1 and n >= 2 * rp + 1:
                return Certificate(CERT_HIERARCHICAL, 0)
    return Certificate(CERT_NONE, None)


@dataclass(frozen=True)
class DimensionReport:
    combinatorial: int
    h_lower: int
    h_upper: int
    dim_lower: int
    dim_upper: int
    certificate: str
    ordering: dict[int, int]
    ordering_source: str
    cyclic_blocking: bool
    per_segment: tuple[SegmentContribution, ...]
    dim_exact: int | None = None
    h_exact: int | None = None

    def to_json_dict(self):
        payload = {
            "combinatorial": self.combinatorial,
            "h_lower": self.h_lower,
            "h_upper": self.h_upper,
            "dim_lower": self.dim_lower,
            "dim_upper": self.dim_upper,
            "certificate": self.certificate,
            "ordering": {str(sid): rank for sid, rank in sorted(self.ordering.items())},
            "per_mis": [
                {"id": p.segment, "omega": p.weight, "contribution": p.contribution}
                for p in self.per_segment
            ],
        }
        if self.dim_exact is not None:
            payload["dim"] = self.dim_exact
            payload["h"] = self.h_exact
        return payload


def dimension_bounds(mesh, dist, degree, ordering_policy="auto", history=None, analysis=None):
    """Combinatorial term plus certified defect interval for one spline space.

    ordering_policy "auto" takes the appearance order when a history is
    given, else the blocking-topological order; "search" additionally
    minimizes the bound over all orderings when few segments are present.
    """
    if analysis is None:
        analysis = analyze_segments(mesh)
    ordering = default_ordering(analysis, history)
    if ordering_policy == "search":
        found = search_ordering(analysis, dist, degree)
        if found is not None and (
            h_upper_bound(analysis, dist, degree, found).total
            < h_upper_bound(analysis, dist, degree, ordering).total
        ):
            ordering = found
    elif ordering_policy != "auto":
        raise ValueError(f"unknown ordering policy {ordering_policy!r}")

    term = combinatorial_term(mesh, dist, degree)
    bound = h_upper_bound(analysis, dist, degree, ordering)
    certificate = exactness_certificate(analysis, dist, degree, ordering, history)
    if certificate.h is not None:
        h_lo = h_hi = certificate.h
    else:
        h_lo, h_hi = 0, bound.total
    return DimensionReport(
        combinatorial=term,
        h_lower=h_lo,
        h_upper=h_hi,
        dim_lower=term + h_lo,
        dim_upper=term + h_hi,
        certificate=certificate.name,
        ordering=dict(ordering.index),
        ordering_source=ordering.source,
        cyclic_blocking=ordering.cyclic,
        per_segment=bound.per_segment,
    )
