"""Hierarchical T-meshes: cell splits, replayable histories, appearance
ordering of interior segments, and the weighted subdivision rule."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CoordinateOnCellBoundary, HistoryMismatch, UnknownCell
from .mesh import HORIZONTAL, VERTICAL, as_fraction, build_mesh
from .segments import Ordering, analyze_segments, segment_weight
from .smoothness import resolve_smoothness

NEW_MIS = "new-MIS"
EXTENDED_MIS = "extended-MIS"
BOUNDARY_REACHING = "boundary-reaching"


@dataclass(frozen=True)
class SplitEvent:
    cell: int  # canonical cell id in the mesh state just before the event
    direction: str  # direction of the inserted edge: "h" or "v"
    coord: Fraction
    kind: str = "split"  # "split" | "wsplit" | "ext"
    rule: tuple[int, int] | None = None  # (k, k') recorded on wsplit events


@dataclass
class SubdivisionHistory:
    """Initial rectangle plus an ordered list of elementary splits.

    Replaying the events from the initial rectangle reproduces the mesh
    exactly; weighted splits record their extension hops as further
    elementary events, so replay never needs the rule parameters.
    """

    initial: tuple[Fraction, Fraction, Fraction, Fraction]
    events: list[SplitEvent] = field(default_factory=list)

    def copy(self):
        return SubdivisionHistory(self.initial, list(self.events))

    def replay(self):
        mesh = build_mesh([self.initial])
        for ev in self.events:
            mesh = _apply_event(mesh, ev)
        return mesh


@dataclass(frozen=True)
class SplitOutcome:
    mesh: object
    segment: object  # maximal segment of .mesh containing the new edge
    classification: str


def initial_mesh(x0, y0, x1, y1):
    initial = (as_fraction(x0), as_fraction(y0), as_fraction(x1), as_fraction(y1))
    return build_mesh([initial]), SubdivisionHistory(initial)


def _split_rects(mesh, cell_id, direction, coord):
    if not 0 <= cell_id < len(mesh.cells):
        raise UnknownCell(f"no cell with id {cell_id}")
    cell = mesh.cells[cell_id]
    coord = as_fraction(coord)
    rect = "[" + ", ".join(str(v) for v in cell.rect) + "]"
    if direction == VERTICAL:
        if not cell.x0 < coord < cell.x1:
            raise CoordinateOnCellBoundary(f"x={coord} not inside cell {cell_id} {rect}")
        halves = [(cell.x0, cell.y0, coord, cell.y1), (coord, cell.y0, cell.x1, cell.y1)]
    elif direction == HORIZONTAL:
        if not cell.y0 < coord < cell.y1:
            raise CoordinateOnCellBoundary(f"y={coord} not inside cell {cell_id} {rect}")
        halves = [(cell.x0, cell.y0, cell.x1, coord), (cell.x0, coord, cell.x1, cell.y1)]
    else:
        raise ValueError(f"bad direction {direction!r}")
    rects = [c.rect for c in mesh.cells if c.id != cell_id]
    rects.extend(halves)
    return rects, cell


def _apply_event(mesh, event):
    rects, _ = _split_rects(mesh, event.cell, event.direction, event.coord)
    return build_mesh(rects)


def _cut_extent(cell, direction):
    return (cell.y0, cell.y1) if direction == VERTICAL else (cell.x0, cell.x1)


def _containing_segment(analysis, direction, coord, at):
    for seg in analysis.segments:
        if seg.direction == direction and seg.coord == coord and seg.lo <= at <= seg.hi:
            return seg
    return None


def _classify(old_analysis, segment):
    if not segment.interior:
        return BOUNDARY_REACHING
    for old in old_analysis.segments:
        if (
            old.interior
            and old.direction == segment.direction
            and old.coord == segment.coord
            and old.lo <= segment.hi
            and segment.lo <= old.hi
        ):
            return EXTENDED_MIS
    return NEW_MIS


def split_cell(mesh, history, cell_id, direction, coord, kind="split", rule=None):
    """Split one cell along a horizontal or vertical line strictly inside it.

    Existing edges met by the new segment's end points are re-fragmented by
    the rebuild; the history (when given) records the elementary event.
    """
    rects, cell = _split_rects(mesh, cell_id, direction, coord)
    new_mesh = build_mesh(rects)
    if history is not None:
        history.events.append(SplitEvent(cell_id, direction, as_fraction(coord), kind, rule))
    lo, hi = _cut_extent(cell, direction)
    midpoint = (lo + hi) / 2
    segment = _containing_segment(analyze_segments(new_mesh), direction, as_fraction(coord), midpoint)
    classification = _classify(analyze_segments(mesh), segment)
    return SplitOutcome(new_mesh, segment, classification)


def _extension_target(mesh, segment, at_hi):
    """Cell entered when the segment is prolonged past one of its end points."""
    vid = segment.vertices[-1] if at_hi else segment.vertices[0]
    v = mesh.vertices[vid]
    for cell in mesh.cells:
        if segment.horizontal:
            edge_hit = cell.x0 == v.x if at_hi else cell.x1 == v.x
            inside = cell.y0 < segment.coord < cell.y1
        else:
            edge_hit = cell.y0 == v.y if at_hi else cell.y1 == v.y
            inside = cell.x0 < segment.coord < cell.x1
        if edge_hit and inside:
            return cell
    raise AssertionError(f"no cell continues segment {segment.id} past vertex {vid}")


def weighted_split(mesh, history, cell_id, direction, coord, smoothness, degree, k, kp):
    """Split a cell, then extend the new segment until the weighted rule holds.

    After the split, if the containing maximal segment is interior, it is
    prolonged one transversal hop at a time (high end first, then
    alternating) until it either reaches the domain boundary or its weight
    under the appearance ordering is at least k (horizontal) / kp (vertical).
    Every hop splits the cell it crosses and is recorded in the history.
    """
    if history is None:
        raise ValueError("the weighted rule needs a history for the appearance ordering")
    coord = as_fraction(coord)
    old_analysis = analyze_segments(mesh)
    outcome = split_cell(mesh, history, cell_id, direction, coord, kind="wsplit", rule=(k, kp))
    lo, hi = _cut_extent(mesh.cells[cell_id], direction)
    probe = (lo + hi) / 2
    threshold = k if direction == HORIZONTAL else kp

    current = outcome.mesh
    at_hi = True
    while True:
        analysis = analyze_segments(current)
        segment = _containing_segment(analysis, direction, coord, probe)
        if not segment.interior:
            break
        dist = resolve_smoothness(smoothness, current)
        ordering = appearance_ordering(history, analysis)
        if segment_weight(analysis, dist, degree, ordering, segment.id).weight >= threshold:
            break
        target = _extension_target(current, segment, at_hi)
        hop = split_cell(current, history, target.id, direction, coord, kind="ext")
        current = hop.mesh
        at_hi = not at_hi

    final_analysis = analyze_segments(current)
    segment = _containing_segment(final_analysis, direction, coord, probe)
    return SplitOutcome(current, segment, _classify(old_analysis, segment))


def _replay_segment_births(history):
    """Replay a history tracking, per interior segment of the final mesh, the
    index of the event that first created it (merges keep the earliest)."""
    mesh = build_mesh([history.initial])
    records = []  # dicts: direction, coord, lo, hi, birth
    for idx, ev in enumerate(history.events):
        outcome = split_cell(mesh, None, ev.cell, ev.direction, ev.coord)
        seg = outcome.segment
        touching = [
            r
            for r in records
            if r["direction"] == seg.direction
            and r["coord"] == seg.coord
            and r["lo"] <= seg.hi
            and seg.lo <= r["hi"]
        ]
        records = [r for r in records if r not in touching]
        if seg.interior:
            birth = min([idx] + [r["birth"] for r in touching])
            records.append(
                {
                    "direction": seg.direction,
                    "coord": seg.coord,
                    "lo": seg.lo,
                    "hi": seg.hi,
                    "birth": birth,
                }
            )
        mesh = outcome.mesh
    return mesh, records


def appearance_ordering(history, analysis):
    """Order interior segments by the event that created each of them.

    Raises HistoryMismatch when the history does not replay to the analyzed
    mesh or a segment cannot be matched to a replay record.
    """
    mesh, records = _replay_segment_births(history)
    if sorted(mesh.cell_rects()) != sorted(analysis.mesh.cell_rects()):
        raise HistoryMismatch("history does not replay to the analyzed mesh")
    births = []
    for sid in analysis.mis:
        seg = analysis.segments[sid]
        match = [
            r
            for r in records
            if r["direction"] == seg.direction
            and r["coord"] == seg.coord
            and r["lo"] == seg.lo
            and r["hi"] == seg.hi
        ]
        if len(match) != 1:
            raise HistoryMismatch(f"segment {sid} has no unique replay record")
        births.append((match[0]["birth"], sid))
    births.sort()
    return Ordering({sid: i + 1 for i, (_, sid) in enumerate(births)}, "appearance", False)


def new_isolated_segment_count(history):
    """Number of events that introduce a new interior segment carrying no
    interior vertex at the moment of its creation.

    This is the slack term of the hierarchical biquadratic dimension bound.
    """
    mesh = build_mesh([history.initial])
    count = 0
    for ev in history.events:
        outcome = split_cell(mesh, None, ev.cell, ev.direction, ev.coord)
        if outcome.classification == NEW_MIS and len(outcome.segment.vertices) == 2:
            count += 1
        mesh = outcome.mesh
    return count
