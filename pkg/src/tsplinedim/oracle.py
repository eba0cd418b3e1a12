"""Exact rational brute-force computations for spline space dimensions.

Everything here assembles constraint matrices over the rationals and reduces
dimension questions to exact ranks: the spline space itself as the kernel of
the smoothness-difference map, and the homology defect three independent
ways.  These are the oracles the combinatorial formulas are tested against.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from .dimension import apolar_dim, combinatorial_term
from .errors import DegreeOutOfRange, DuplicatePoints
from .linalg import SparseRationalMatrix, int_matrix_rank, rational_rank
from .mesh import as_fraction
from .segments import analyze_segments
from .smoothness import quotient_dims


def build_spline_system(mesh, dist, degree):
    """Constraint matrix whose kernel is the spline space.

    One column per (cell, monomial s^i t^j); for each interior edge the rows
    are the coefficients of the cell-difference in the shifted basis at the
    edge's supporting line, truncated to the smoothness order.  The sign
    convention takes the lower-id cell positively.
    """
    m, n = degree
    block = (m + 1) * (n + 1)
    col_labels = [(c.id, i, j) for c in mesh.cells for i in range(m + 1) for j in range(n + 1)]

    row_labels = []
    rows_per_edge = {}
    for eid in mesh.interior_edges:
        e = mesh.edges[eid]
        if e.horizontal:
            r = dist.vertical_order(e.coord)
            span = [(i, l) for i in range(m + 1) for l in range(min(r, n) + 1)]
        else:
            r = dist.horizontal_order(e.coord)
            span = [(k, j) for k in range(min(r, m) + 1) for j in range(n + 1)]
        rows_per_edge[eid] = (len(row_labels), span)
        row_labels.extend((eid,) + idx for idx in span)

    matrix = SparseRationalMatrix(len(row_labels), len(col_labels), row_labels, col_labels)
    for eid in mesh.interior_edges:
        e = mesh.edges[eid]
        offset, span = rows_per_edge[eid]
        low, high = e.cells
        a = e.coord
        for sign, cell in ((1, low), (-1, high)):
            base = cell * block
            if e.horizontal:
                # rows (i, l): coefficient of s^i (t-a)^l in the difference
                for pos, (i, l) in enumerate(span):
                    for j in range(l, n + 1):
                        matrix.add(offset + pos, base + i * (n + 1) + j, sign * comb(j, l) * a ** (j - l))
            else:
                for pos, (k, j) in enumerate(span):
                    for i in range(k, m + 1):
                        matrix.add(offset + pos, base + i * (n + 1) + j, sign * comb(i, k) * a ** (i - k))
    return matrix


def spline_dimension_exact(mesh, dist, degree):
    """dim of the spline space: columns minus rank of the constraint system."""
    system = build_spline_system(mesh, dist, degree)
    return system.ncols - rational_rank(system)


def h_exact(mesh, dist, degree):
    """Homology defect as (exact dimension) minus (combinatorial term)."""
    value = spline_dimension_exact(mesh, dist, degree) - combinatorial_term(mesh, dist, degree)
    assert value >= 0, "defect must be nonnegative"
    return value


def _monomial_coeffs_of_shift(a, k):
    """Coefficients c[i] with (u - a)^k = sum c[i] u^i."""
    return [comb(k, i) * (-a) ** (k - i) for i in range(k + 1)]


def h_via_h0(mesh, dist, degree):
    """Defect from the constraint-ideal complex at the vertex level.

    Dimension of the direct sum of vertex ideals minus the rank of the
    boundary map restricted to the edge ideals, all in ambient monomial
    coordinates (the image lies inside the vertex ideals automatically).
    """
    m, n = degree
    block = (m + 1) * (n + 1)

    interior_vs = list(mesh.interior_vertices)
    v_offset = {vid: i * block for i, vid in enumerate(interior_vs)}
    target_dim = sum(block - quotient_dims(dist, degree, mesh.vertices[vid]) for vid in interior_vs)

    columns = []
    for eid in mesh.interior_edges:
        e = mesh.edges[eid]
        a = e.coord
        if e.horizontal:
            r = dist.vertical_order(a)
            basis = [(i, l) for l in range(r + 1, n + 1) for i in range(m + 1)]
        else:
            r = dist.horizontal_order(a)
            basis = [(k, j) for k in range(r + 1, m + 1) for j in range(n + 1)]
        for idx in basis:
            # monomial expansion of the ideal basis element
            mono = {}
            if e.horizontal:
                i, l = idx
                for j, c in enumerate(_monomial_coeffs_of_shift(a, l)):
                    mono[i * (n + 1) + j] = Fraction(c)
            else:
                k, j = idx
                for i, c in enumerate(_monomial_coeffs_of_shift(a, k)):
                    mono[i * (n + 1) + j] = Fraction(c)
            col = {}
            for sign, vid in ((-1, e.start), (1, e.end)):
                if not mesh.vertices[vid].interior:
                    continue
                base = v_offset[vid]
                for slot, c in mono.items():
                    col[base + slot] = col.get(base + slot, Fraction(0)) + sign * c
            if col:
                columns.append(col)

    rank = rational_rank(columns)
    return target_dim - rank


def h_via_mis_presentation(mesh, dist, degree, analysis=None):
    """Defect from the interior-segment presentation.

    One free block per interior segment (polynomials of the complementary
    bidegree) modulo, for every interior vertex on at least one interior
    segment, the cross relation between its horizontal and vertical segment
    symbols; symbols of boundary-reaching segments are zero.
    """
    m, n = degree
    if analysis is None:
        analysis = analyze_segments(mesh)

    offsets = {}
    widths = {}
    total = 0
    for sid in analysis.mis:
        seg = analysis.segments[sid]
        if seg.horizontal:
            r = dist.vertical_order(seg.coord)
            shape = (m + 1, max(0, n - r))
        else:
            r = dist.horizontal_order(seg.coord)
            shape = (max(0, m - r), n + 1)
        offsets[sid] = total
        widths[sid] = shape
        total += shape[0] * shape[1]

    rows = []
    for vid in mesh.interior_vertices:
        v = mesh.vertices[vid]
        seg_h = analysis.segment_through(vid, "h")
        seg_v = analysis.segment_through(vid, "v")
        in_h = seg_h in offsets
        in_v = seg_v in offsets
        if not (in_h or in_v):
            continue
        rh = dist.horizontal_order(v.x)
        rv = dist.vertical_order(v.y)
        qa, qb = m - rh - 1, n - rv - 1
        if qa < 0 or qb < 0:
            continue
        for alpha in range(qa + 1):
            for beta in range(qb + 1):
                row = {}
                if in_v:
                    # [vertical segment] times (t - y)^{rv+1} s^alpha t^beta
                    _, height = widths[seg_v]
                    for l, c in enumerate(_monomial_coeffs_of_shift(v.y, rv + 1)):
                        col = offsets[seg_v] + alpha * height + (beta + l)
                        row[col] = row.get(col, Fraction(0)) + c
                if in_h:
                    _, height = widths[seg_h]
                    for i, c in enumerate(_monomial_coeffs_of_shift(v.x, rh + 1)):
                        col = offsets[seg_h] + (alpha + i) * height + beta
                        row[col] = row.get(col, Fraction(0)) - c
                row = {c: val for c, val in row.items() if val}
                if row:
                    rows.append(row)

    return total - rational_rank(rows)


def d1_full_row_rank(mesh, dist, degree):
    """Surjectivity of the vertex-level map of the quotient complex.

    Columns are edge-quotient basis elements, rows vertex-quotient basis
    elements; the map must have full row rank on every valid mesh.
    """
    m, n = degree
    v_offset = {}
    total_rows = 0
    v_shape = {}
    for vid in mesh.interior_vertices:
        v = mesh.vertices[vid]
        rh = min(dist.horizontal_order(v.x), m)
        rv = min(dist.vertical_order(v.y), n)
        v_offset[vid] = total_rows
        v_shape[vid] = (rh, rv)
        total_rows += (rh + 1) * (rv + 1)

    columns = []
    for eid in mesh.interior_edges:
        e = mesh.edges[eid]
        a = e.coord
        if e.horizontal:
            r = min(dist.vertical_order(a), n)
            basis = [(i, l) for i in range(m + 1) for l in range(r + 1)]
        else:
            r = min(dist.horizontal_order(a), m)
            basis = [(k, j) for k in range(r + 1) for j in range(n + 1)]
        for idx in basis:
            col = {}
            for sign, vid in ((-1, e.start), (1, e.end)):
                if not mesh.vertices[vid].interior:
                    continue
                v = mesh.vertices[vid]
                ph, pv = v_shape[vid]
                base = v_offset[vid]
                if e.horizontal:
                    i, l = idx  # s^i (t-a)^l at vertex (x0, a): expand s^i around x0
                    if l > pv:
                        continue
                    for p in range(min(i, ph) + 1):
                        c = comb(i, p) * v.x ** (i - p)
                        slot = base + p * (pv + 1) + l
                        col[slot] = col.get(slot, Fraction(0)) + sign * c
                else:
                    k, j = idx  # (s-a)^k t^j at vertex (a, y0): expand t^j around y0
                    if k > ph:
                        continue
                    for q in range(min(j, pv) + 1):
                        c = comb(j, q) * v.y ** (j - q)
                        slot = base + k * (pv + 1) + q
                        col[slot] = col.get(slot, Fraction(0)) + sign * c
            if col:
                columns.append(col)

    return rational_rank(columns) == total_rows


def _shift_power(a, d):
    """Dense coefficient list of (u - a)^d, ascending powers."""
    coeffs = [Fraction(1)]
    for _ in range(d):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] -= a * c
            nxt[i + 1] += c
        coeffs = nxt
    return coeffs


_SHIFT_INT_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def _shift_power_ints(a, d):
    """Integer coefficients of (u - a)^d for integer a, memoized."""
    key = (a, d)
    cached = _SHIFT_INT_CACHE.get(key)
    if cached is None:
        cached = tuple(comb(d, i) * (-a) ** (d - i) for i in range(d + 1))
        _SHIFT_INT_CACHE[key] = cached
    return cached


def apolar_dim_bruteforce(n, points, ds):
    """Rank of the shifted-power generator matrix; the oracle for apolar_dim.

    Also verifies the orthogonality characterization: every multiple of the
    complementary product of degree <= n is apolar-orthogonal to every
    generator.
    """
    if len(points) != len(ds):
        raise ValueError("points and exponents must pair up")
    seen = set()
    for a, d in zip(points, ds):
        if a in seen:
            raise DuplicatePoints(f"point {a} repeated")
        seen.add(a)
        if not 0 <= d <= n:
            raise DegreeOutOfRange(f"exponent {d} outside [0, {n}]")

    all_int = all(isinstance(a, int) for a in points)
    generators = []
    if all_int:
        for a, d in zip(points, ds):
            base = _shift_power_ints(int(a), d)
            pad = n - d
            for j in range(pad + 1):
                generators.append([0] * j + list(base) + [0] * (pad - j))
        int_rows = generators
    else:
        for a, d in zip(points, ds):
            base = _shift_power(as_fraction(a), d)
            pad = n - d
            for j in range(pad + 1):
                generators.append([Fraction(0)] * j + base + [Fraction(0)] * (pad - j))
        int_rows = []
        for row in generators:
            denom = 1
            for v in row:
                denom = denom * v.denominator // gcd(denom, v.denominator)
            int_rows.append([int(v * denom) for v in row])
    rank = int_matrix_rank(int_rows, max_rank=n + 1)

    # Orthogonality cross-check: every degree <= n multiple of the
    # complementary product pairs to zero with every generator under the
    # apolar form (reversed coefficients with alternating signs; pairing a
    # polynomial against (u - a)^n evaluates it at a).  Scaled by
    # lcm of the binomials so integer inputs stay in integer arithmetic.
    total = sum(n - d + 1 for d in ds)
    if points and total <= n:
        one = 1 if all_int else Fraction(1)
        product = [one]
        for a, d in zip(points, ds):
            factor = _shift_power_ints(a, n - d + 1) if all_int else _shift_power(as_fraction(a), n - d + 1)
            product = _poly_mul(product, factor)
        scale = 1
        for i in range(n + 1):
            c = comb(n, i)
            scale = scale * c // gcd(scale, c)
        weights = [(-1) ** i * (scale // comb(n, i)) for i in range(n + 1)]
        zero = 0 if all_int else Fraction(0)
        for k in range(n - (len(product) - 1) + 1):
            shifted = [zero] * k + list(product)
            shifted += [zero] * (n + 1 - len(shifted))
            for g in generators:
                inner = sum(w * gi * shifted[n - i] for i, (w, gi) in enumerate(zip(weights, g)))
                assert inner == 0, "apolar orthogonality violated"

    return rank


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def verify_apolar_agreement(n, points, ds):
    """True when the closed form and the brute-force rank coincide."""
    return apolar_dim(n, list(zip(points, ds))) == apolar_dim_bruteforce(n, points, ds)
