"""Sparse exact-rational matrices and fraction-free rank computation.

All ranks in this package are computed over the rationals with integer
arithmetic only: every row is scaled to a primitive integer vector and
elimination uses cross-multiplication followed by content removal, so no
floating point and no tolerance enters anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class SparseRationalMatrix:
    """Rational matrix stored as (row, col) -> Fraction, zeros omitted.

    Row and column labels tie indices back to (face, monomial) pairs for
    diagnostics and the ``--dump-matrix`` output; they play no role in the
    arithmetic.
    """

    def __init__(self, nrows, ncols, row_labels=None, col_labels=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], Fraction] = {}
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    def set(self, row, col, value):
        if not 0 <= row < self.nrows or not 0 <= col < self.ncols:
            raise IndexError((row, col))
        value = Fraction(value)
        if value:
            self.entries[(row, col)] = value
        else:
            self.entries.pop((row, col), None)

    def add(self, row, col, value):
        current = self.entries.get((row, col), Fraction(0))
        self.set(row, col, current + value)

    def get(self, row, col):
        return self.entries.get((row, col), Fraction(0))

    @property
    def nnz(self):
        return len(self.entries)

    def rows(self):
        """Entries grouped by row index, as {col: Fraction} dicts."""
        grouped: dict[int, dict[int, Fraction]] = {}
        for (r, c), v in self.entries.items():
            grouped.setdefault(r, {})[c] = v
        return grouped

    def rank(self):
        return rational_rank(self)

    def dump_triplets(self):
        """Text form: header ``rows cols`` then sorted ``r c num/den`` lines."""
        lines = [f"{self.nrows} {self.ncols}"]
        for (r, c) in sorted(self.entries):
            v = self.entries[(r, c)]
            lines.append(f"{r} {c} {v.numerator}/{v.denominator}")
        return "\n".join(lines) + "\n"


def _primitive_int_row(row):
    """Scale a {col: Fraction} row to a content-free {col: int} row."""
    denom = 1
    for v in row.values():
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = {c: int(v * denom) for c, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def rational_rank(matrix):
    """Exact rank over Q via sparse fraction-free elimination.

    Pivots are chosen Markowitz-style (sparsest column, then sparsest row in
    it) with index tie-breaks, so the elimination order is deterministic.
    """
    if isinstance(matrix, SparseRationalMatrix):
        raw_rows = list(matrix.rows().values())
    else:
        raw_rows = [dict(r) for r in matrix]
    rows = [_primitive_int_row(r) for r in raw_rows if r]

    col_rows: dict[int, set[int]] = {}
    for i, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(i)

    rank = 0
    while col_rows:
        pivot_col = None
        best = None
        for c, live in col_rows.items():
            count = len(live)
            if best is None or count < best or (count == best and c < pivot_col):
                best = count
                pivot_col = c
        candidates = col_rows[pivot_col]
        pivot_row = None
        best = None
        for i in candidates:
            size = len(rows[i])
            if best is None or size < best or (size == best and i < pivot_row):
                best = size
                pivot_row = i
        piv = rows[pivot_row]
        a = piv[pivot_col]
        rank += 1

        for j in list(candidates):
            if j == pivot_row:
                continue
            old = rows[j]
            b = old[pivot_col]
            new = {}
            for c, v in old.items():
                if c != pivot_col:
                    new[c] = v * a
            for c, v in piv.items():
                if c == pivot_col:
                    continue
                nv = new.get(c, 0) - v * b
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            for c in old:
                if c != pivot_col:
                    col_rows[c].discard(j)
            rows[j] = new
            for c in new:
                col_rows.setdefault(c, set()).add(j)

        for c in piv:
            live = col_rows.get(c)
            if live is not None:
                live.discard(pivot_row)
                if not live:
                    del col_rows[c]
        rows[pivot_row] = {}
        col_rows.pop(pivot_col, None)
        for c in [c for c, live in col_rows.items() if not live]:
            del col_rows[c]

    return rank


def int_matrix_rank(rows, max_rank=None):
    """Rank of a list of dense integer rows; early exit at ``max_rank``.

    Incremental fraction-free echelon reduction with content removal; used by
    the shifted-power brute-force oracle where matrices are tiny but very
    numerous.
    """
    echelon = []  # (pivot index, row list, leading value)
    rank = 0
    for row in rows:
        row = list(row)
        for piv_idx, piv_row, lead in echelon:
            coeff = row[piv_idx]
            if coeff:
                row = [r * lead - p * coeff for r, p in zip(row, piv_row)]
        lead_idx = next((k for k, v in enumerate(row) if v), None)
        if lead_idx is None:
            continue
        g = 0
        for v in row:
            g = gcd(g, v)
        if g > 1:
            row = [v // g for v in row]
        echelon.append((lead_idx, row, row[lead_idx]))
        rank += 1
        if max_rank is not None and rank >= max_rank:
            return rank
    return rank
