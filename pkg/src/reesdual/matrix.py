"""Rectangular matrices of polynomials with per-column bidegree metadata.

Columns of the matrices produced by the dual constructions are
bihomogeneous of constant bidegree, so every minor is zero or
bihomogeneous; the declared column bidegrees are validated on
construction when given.  Determinants use cofactor expansion along the
column with the most zero entries, memoizing sub-minors, which is
plenty at the small sizes these pipelines produce.
"""

from .poly import Poly, ZERO_BIDEGREE


class PolyMatrix:
    def __init__(self, vars, entries, col_bidegrees=None, field=None):
        self.vars = vars
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            for p in row:
                if p.vars != vars:
                    raise ValueError("entry over a different variable set")
        if field is None and self.rows and self.cols:
            field = self.entries[0][0].field
        self.field = field
        self.col_bidegrees = tuple(col_bidegrees) if col_bidegrees else None
        if self.col_bidegrees is not None:
            if len(self.col_bidegrees) != self.cols:
                raise ValueError("one declared bidegree per column expected")
            for j, want in enumerate(self.col_bidegrees):
                if want is None:
                    continue
                for i in range(self.rows):
                    got = self.entries[i][j].bidegree()
                    if got is None or got != want:
                        raise ValueError(
                            f"entry ({i},{j}) is not bihomogeneous of "
                            f"bidegree {want.pair()}"
                        )
        self._det_cache = {}

    @classmethod
    def zero(cls, vars, rows, cols, field):
        z = Poly.zero(vars, field)
        return cls(vars, [[z] * cols for _ in range(rows)], field=field)

    def entry(self, i, j):
        return self.entries[i][j]

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def hstack(self, other):
        if other.rows != self.rows:
            raise ValueError("row counts differ")
        entries = [
            self.entries[i] + other.entries[i] for i in range(self.rows)
        ]
        bidegs = None
        if self.col_bidegrees is not None and other.col_bidegrees is not None:
            bidegs = self.col_bidegrees + other.col_bidegrees
        return PolyMatrix(self.vars, entries, bidegs, field=self.field)

    def delete_row(self, i):
        entries = [row for r, row in enumerate(self.entries) if r != i]
        return PolyMatrix(self.vars, entries, self.col_bidegrees, field=self.field)

    def submatrix(self, row_indices, col_indices):
        entries = [
            [self.entries[i][j] for j in col_indices] for i in row_indices
        ]
        bidegs = None
        if self.col_bidegrees is not None:
            bidegs = [self.col_bidegrees[j] for j in col_indices]
        return PolyMatrix(self.vars, entries, bidegs, field=self.field)

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if self.rows == 0:
            return Poly.const(self.vars, 1, self.field)
        return self._minor(tuple(range(self.rows)), tuple(range(self.cols)))

    def _minor(self, rows, cols):
        key = (rows, cols)
        cached = self._det_cache.get(key)
        if cached is not None:
            return cached
        n = len(rows)
        if n == 1:
            value = self.entries[rows[0]][cols[0]]
        elif n == 2:
            a, b = self.entries[rows[0]][cols[0]], self.entries[rows[0]][cols[1]]
            c, d = self.entries[rows[1]][cols[0]], self.entries[rows[1]][cols[1]]
            value = a * d - b * c
        else:
            zero_count = [
                sum(1 for i in rows if self.entries[i][j].is_zero())
                for j in cols
            ]
            jbest = max(range(n), key=lambda j: zero_count[j])
            col = cols[jbest]
            rest = cols[:jbest] + cols[jbest + 1 :]
            value = Poly.zero(self.vars, self.field)
            for pos, i in enumerate(rows):
                e = self.entries[i][col]
                if e.is_zero():
                    continue
                sub = self._minor(rows[:pos] + rows[pos + 1 :], rest)
                term = e * sub
                # cofactor sign from both the row and column positions
                value = (
                    value + term if (pos + jbest) % 2 == 0 else value - term
                )
        self._det_cache[key] = value
        return value

    def maximal_minors(self):
        """All r x r minors (r = row count) as (column-tuple, Poly) pairs."""
        from itertools import combinations

        if self.cols < self.rows:
            return []
        return [
            (cols, self._minor(tuple(range(self.rows)), cols))
            for cols in combinations(range(self.cols), self.rows)
        ]

    def row_times(self, row):
        """The 1 x cols product [row] * self for a sequence of polys."""
        if len(row) != self.rows:
            raise ValueError("row vector length must equal row count")
        out = []
        for j in range(self.cols):
            acc = Poly.zero(self.vars, self.field)
            for i in range(self.rows):
                acc = acc + row[i] * self.entries[i][j]
            out.append(acc)
        return out

    def scalar_left_mul(self, scalars):
        """(scalars) * self for a rectangular array of field scalars."""
        nrows = len(scalars)
        for srow in scalars:
            if len(srow) != self.rows:
                raise ValueError("scalar matrix width must equal row count")
        entries = []
        for i in range(nrows):
            row = []
            for j in range(self.cols):
                acc = Poly.zero(self.vars, self.field)
                for k in range(self.rows):
                    acc = acc + self.entries[k][j].scale(scalars[i][k])
                row.append(acc)
            entries.append(row)
        return PolyMatrix(self.vars, entries, self.col_bidegrees, field=self.field)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.vars == other.vars
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.vars, self.entries))

    def to_strings(self):
        return [[str(p) for p in row] for row in self.entries]

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"
