"""Text formats: "tmesh v1" mesh files and "tsub v1" subdivision histories.

Rationals are printed as ``p/q`` (plain integer when q = 1) so files
round-trip losslessly; ``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadRational, TmeshSyntaxError, UnknownDirective, UnknownNode
from .hierarchy import SplitEvent, SubdivisionHistory, split_cell, weighted_split
from .mesh import build_mesh
from .smoothness import SmoothnessDistribution, constant_distribution


def format_rational(value):
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_rational(token, line=None):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise BadRational(f"cannot parse rational {token!r}", line) from exc


def _parse_int(token, line):
    try:
        return int(token)
    except ValueError as exc:
        raise TmeshSyntaxError(f"expected an integer, got {token!r}", line) from exc


def _significant_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


@dataclass(frozen=True)
class MeshDocument:
    """Parsed tmesh file: cells plus optional smoothness declarations."""

    cells: tuple
    default_smooth: tuple[int, int] | None = None
    smooth_h: tuple = ()
    smooth_v: tuple = ()
    history: object | None = field(default=None, compare=False)

    @staticmethod
    def make(cells, default_smooth=None, smooth_h=(), smooth_v=(), history=None):
        cells = tuple(sorted(tuple(Fraction(v) for v in rect) for rect in cells))
        smooth_h = tuple(sorted((Fraction(k), int(v)) for k, v in dict(smooth_h).items()))
        smooth_v = tuple(sorted((Fraction(k), int(v)) for k, v in dict(smooth_v).items()))
        return MeshDocument(cells, default_smooth, smooth_h, smooth_v, history)


def parse_tmesh(text):
    lines = _significant_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise TmeshSyntaxError("empty file: missing 'tmesh 1' header")
    if header != ["tmesh", "1"]:
        raise TmeshSyntaxError("expected header 'tmesh 1'", number)

    cells = []
    default_smooth = None
    smooth_h = {}
    smooth_v = {}
    for number, tokens in lines:
        directive, args = tokens[0], tokens[1:]
        if directive == "cell":
            if len(args) != 4:
                raise TmeshSyntaxError("cell needs 4 coordinates", number)
            x0, y0, x1, y1 = (parse_rational(t, number) for t in args)
            if x0 >= x1 or y0 >= y1:
                raise TmeshSyntaxError("degenerate rectangle", number)
            cells.append((x0, y0, x1, y1))
        elif directive == "smooth":
            if len(args) != 3 or args[0] not in ("h", "v"):
                raise TmeshSyntaxError("usage: smooth h|v <node> <order>", number)
            node = parse_rational(args[1], number)
            order = _parse_int(args[2], number)
            if order < 0:
                raise TmeshSyntaxError("smoothness order must be nonnegative", number)
            (smooth_h if args[0] == "h" else smooth_v)[node] = order
        elif directive == "default-smooth":
            if len(args) != 2:
                raise TmeshSyntaxError("usage: default-smooth <r> <r'>", number)
            default_smooth = (_parse_int(args[0], number), _parse_int(args[1], number))
            if min(default_smooth) < 0:
                raise TmeshSyntaxError("smoothness order must be nonnegative", number)
        else:
            raise UnknownDirective(f"unknown directive {directive!r}", number)
    return MeshDocument.make(cells, default_smooth, smooth_h, smooth_v)


def format_tmesh(doc):
    out = ["tmesh 1"]
    if doc.default_smooth is not None:
        out.append(f"default-smooth {doc.default_smooth[0]} {doc.default_smooth[1]}")
    for node, order in doc.smooth_h:
        out.append(f"smooth h {format_rational(node)} {order}")
    for node, order in doc.smooth_v:
        out.append(f"smooth v {format_rational(node)} {order}")
    for x0, y0, x1, y1 in doc.cells:
        out.append(
            f"cell {format_rational(x0)} {format_rational(y0)}"
            f" {format_rational(x1)} {format_rational(y1)}"
        )
    return "\n".join(out) + "\n"


def document_mesh(doc):
    return build_mesh(doc.cells)


def document_smoothness(doc, mesh, override=None):
    """Distribution from the file declarations, or from an (r, r') override.

    Returns None when the document declares nothing and no override is given.
    """
    if override is not None:
        return constant_distribution(mesh, *override)
    if doc.default_smooth is None and not doc.smooth_h and not doc.smooth_v:
        return None
    r_h = {}
    r_v = {}
    if doc.default_smooth is not None:
        r, rp = doc.default_smooth
        r_h = {x: r for x in mesh.nodes_x}
        r_v = {y: rp for y in mesh.nodes_y}
    for node, order in doc.smooth_h:
        if node not in mesh.nodes_x:
            raise UnknownNode(f"smooth h {format_rational(node)}: not a node of the mesh")
        r_h[node] = order
    for node, order in doc.smooth_v:
        if node not in mesh.nodes_y:
            raise UnknownNode(f"smooth v {format_rational(node)}: not a node of the mesh")
        r_v[node] = order
    return SmoothnessDistribution(mesh, r_h, r_v)


def parse_tsub(text):
    lines = _significant_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise TmeshSyntaxError("empty file: missing 'tsub 1' header")
    if header != ["tsub", "1"]:
        raise TmeshSyntaxError("expected header 'tsub 1'", number)

    initial = None
    events = []
    for number, tokens in lines:
        directive, args = tokens[0], tokens[1:]
        if directive == "init":
            if initial is not None:
                raise TmeshSyntaxError("duplicate init line", number)
            if len(args) != 4:
                raise TmeshSyntaxError("init needs 4 coordinates", number)
            x0, y0, x1, y1 = (parse_rational(t, number) for t in args)
            if x0 >= x1 or y0 >= y1:
                raise TmeshSyntaxError("degenerate initial rectangle", number)
            initial = (x0, y0, x1, y1)
        elif directive in ("split", "wsplit"):
            if initial is None:
                raise TmeshSyntaxError("split before init", number)
            expect = 3 if directive == "split" else 5
            if len(args) != expect or args[1] not in ("h", "v"):
                raise TmeshSyntaxError(f"usage: {directive} <cell-id> h|v <coord>"
                                       + ("" if directive == "split" else " <k> <k'>"), number)
            cell = _parse_int(args[0], number)
            coord = parse_rational(args[2], number)
            if directive == "split":
                events.append(SplitEvent(cell, args[1], coord))
            else:
                rule = (_parse_int(args[3], number), _parse_int(args[4], number))
                events.append(SplitEvent(cell, args[1], coord, kind="wsplit", rule=rule))
        else:
            raise UnknownDirective(f"unknown directive {directive!r}", number)
    if initial is None:
        raise TmeshSyntaxError("missing init line")
    return SubdivisionHistory(initial, events)


def format_tsub(history):
    """Write a history as elementary split lines (weighted splits are stored
    already expanded, so the file replays without rule parameters)."""
    x0, y0, x1, y1 = history.initial
    out = [
        "tsub 1",
        f"init {format_rational(x0)} {format_rational(y0)}"
        f" {format_rational(x1)} {format_rational(y1)}",
    ]
    for ev in history.events:
        out.append(f"split {ev.cell} {ev.direction} {format_rational(ev.coord)}")
    return "\n".join(out) + "\n"


def apply_history(history, smoothness=None, degree=None, rule=None):
    """Execute a parsed history; returns (mesh, elementary history).

    ``wsplit`` events run the weighted rule and need ``smoothness`` and
    ``degree``.  When ``rule`` is given, plain splits are run through the
    weighted rule with that (k, k') as well.
    """
    mesh = build_mesh([history.initial])
    expanded = SubdivisionHistory(history.initial)
    for ev in history.events:
        use_rule = ev.rule if ev.kind == "wsplit" else rule
        if use_rule is not None:
            if smoothness is None or degree is None:
                raise ValueError("weighted splits need a smoothness and a degree")
            outcome = weighted_split(
                mesh, expanded, ev.cell, ev.direction, ev.coord,
                smoothness, degree, use_rule[0], use_rule[1],
            )
        else:
            outcome = split_cell(mesh, expanded, ev.cell, ev.direction, ev.coord)
        mesh = outcome.mesh
    return mesh, expanded
