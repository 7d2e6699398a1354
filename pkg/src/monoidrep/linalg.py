"""Exact dense linear algebra over cyclotomic fields.

Elimination is fraction-free in the Bareiss style (two-term cross products
divided exactly by the previous pivot), which keeps intermediate entries from
swelling; a normalized RREF is derived from it so nullspace bases and solves
are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CYC_ONE, CYC_ZERO, CycNum, cyc


class ExactMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [list(map(cyc, row)) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        assert all(len(r) == self.cols for r in self.data)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zeros(r: int, c: int) -> "ExactMatrix":
        m = ExactMatrix([[CYC_ZERO] * c for _ in range(r)])
        m.cols = c
        return m

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        m = ExactMatrix.zeros(n, n)
        for i in range(n):
            m.data[i][i] = CYC_ONE
        return m

    @staticmethod
    def column(values) -> "ExactMatrix":
        return ExactMatrix([[v] for v in values])

    def copy(self) -> "ExactMatrix":
        return ExactMatrix([row[:] for row in self.data])

    # -- basic algebra ----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for ra, rb in zip(self.data, other.data) for a, b in zip(ra, rb))
        )

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s) -> "ExactMatrix":
        s = cyc(s)
        return ExactMatrix([[s * a for a in row] for row in self.data])

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        assert self.cols == other.rows, "shape mismatch %dx%d * %dx%d" % (
            self.rows,
            self.cols,
            other.rows,
            other.cols,
        )
        ocols = list(zip(*other.data))
        out = []
        for row in self.data:
            orow = []
            for col in ocols:
                s = CYC_ZERO
                for a, b in zip(row, col):
                    if a and b:
                        s = s + a * b
                orow.append(s)
            out.append(orow)
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        if self.rows == 0 or self.cols == 0:
            return ExactMatrix.zeros(self.cols, self.rows)
        return ExactMatrix([list(col) for col in zip(*self.data)])

    def trace(self) -> CycNum:
        assert self.rows == self.cols
        s = CYC_ZERO
        for i in range(self.rows):
            s = s + self.data[i][i]
        return s

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        out = ExactMatrix.zeros(self.rows * other.rows, self.cols * other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.data[i][j]
                if not a:
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        b = other.data[k][l]
                        if b:
                            out.data[i * other.rows + k][j * other.cols + l] = a * b
        return out

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        assert self.rows == other.rows
        return ExactMatrix([ra + rb for ra, rb in zip(self.data, other.data)])

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        assert self.cols == other.cols
        return ExactMatrix(self.data + other.data)

    def vec(self) -> list[CycNum]:
        """Row-major flattening."""
        return [a for row in self.data for a in row]

    def is_zero(self) -> bool:
        return all(not a for row in self.data for a in row)

    def __repr__(self):
        return "ExactMatrix(%s)" % self.data

    # -- elimination -----------------------------------------------------

    def rref(self):
        """Return (rref ExactMatrix, pivot column list)."""
        m = [row[:] for row in self.data]
        rows, cols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        prev = CYC_ONE
        piv_rows: list[int] = []
        for c in range(cols):
            pr = None
            for i in range(r, rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                m[r], m[pr] = m[pr], m[r]
            pivot = m[r][c]
            # Bareiss step: fraction-free cross products, exact division by prev
            for i in range(rows):
                if i == r or not m[i][c]:
                    continue
                fi = m[i][c]
                for j in range(cols):
                    m[i][j] = (pivot * m[i][j] - fi * m[r][j]) / prev
            prev = pivot
            pivots.append(c)
            piv_rows.append(r)
            r += 1
        # normalize pivot rows to 1 for a canonical reduced echelon form
        for r, c in zip(piv_rows, pivots):
            pv = m[r][c]
            inv = pv.inverse()
            m[r] = [inv * x for x in m[r]]
        out = ExactMatrix.zeros(rows, cols)
        out.data = m
        return out, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list["ExactMatrix"]:
        """Deterministic basis (column vectors) of the right kernel."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [CYC_ZERO] * self.cols
            v[f] = CYC_ONE
            for r, c in enumerate(pivots):
                v[c] = -red.data[r][f]
            basis.append(ExactMatrix.column(v))
        return basis

    def solve(self, rhs: "ExactMatrix") -> "ExactMatrix | None":
        """A particular solution X of self*X = rhs, or None if inconsistent.

        Free variables are set to zero, so the result is deterministic.
        """
        assert self.rows == rhs.rows
        aug = self.hstack(rhs)
        red, pivots = aug.rref()
        n = self.cols
        for c in pivots:
            if c >= n:
                return None
        piv_row = {c: r for r, c in enumerate(pivots)}
        out = ExactMatrix.zeros(n, rhs.cols)
        for c, r in piv_row.items():
            for j in range(rhs.cols):
                out.data[c][j] = red.data[r][n + j]
        return out

    def inverse(self) -> "ExactMatrix":
        assert self.rows == self.cols
        sol = self.solve(ExactMatrix.identity(self.rows))
        if sol is None or (self * sol) != ExactMatrix.identity(self.rows):
            raise ZeroDivisionError("matrix is singular")
        return sol

    def column_space_basis(self) -> list[int]:
        """Indices of a deterministic set of independent columns."""
        return self.rref()[1]

    def submatrix_columns(self, cols) -> "ExactMatrix":
        return ExactMatrix([[row[c] for c in cols] for row in self.data])


class SpanTracker:
    """Incremental row span with exact reduction; used for algebra closures."""

    def __init__(self, width: int):
        self.width = width
        self.rows: dict[int, list[CycNum]] = {}  # pivot column -> normalized row

    def reduce(self, vec: list[CycNum]) -> list[CycNum]:
        v = list(vec)
        for c, row in self.rows.items():
            if v[c]:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert a vector; True if it enlarged the span."""
        v = self.reduce([cyc(x) for x in vec])
        for c in range(self.width):
            if v[c]:
                inv = v[c].inverse()
                v = [inv * a for a in v]
                for c2, row in self.rows.items():
                    if row[c]:
                        f = row[c]
                        self.rows[c2] = [a - f * b for a, b in zip(row, v)]
                self.rows[c] = v
                return True
        return False

    def contains(self, vec) -> bool:
        return all(not a for a in self.reduce([cyc(x) for x in vec]))

    @property
    def dim(self) -> int:
        return len(self.rows)


def matrices_span_dim(mats) -> int:
    tracker = None
    for m in mats:
        if tracker is None:
            tracker = SpanTracker(m.rows * m.cols)
        tracker.add(m.vec())
    return tracker.dim if tracker else 0


def from_fraction_rows(rows) -> ExactMatrix:
    return ExactMatrix([[Fraction(x) for x in row] for row in rows])


def nullspace(m: ExactMatrix) -> list[ExactMatrix]:
    return m.nullspace()


def solve_linear(m: ExactMatrix, rhs: ExactMatrix) -> ExactMatrix | None:
    return m.solve(rhs)
