"""Dense exact linear algebra over a FieldSpec.

Everything is small (dimensions a few hundred at most), so matrices are
row-major lists of lists of exact scalars and elimination is plain Gaussian
with deterministic pivoting (first nonzero entry in column order).  Kernel
bases are returned in reduced echelon form of the kernel subspace, which
makes every derived basis canonical and reproducible.
"""

from __future__ import annotations

from .field import FieldSpec, same_field


class Matrix:
    __slots__ = ("field", "rows", "cols", "a")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if entries is None:
            z = field.zero
            self.a = [[z] * cols for _ in range(rows)]
        else:
            if len(entries) != rows or any(len(r) != cols for r in entries):
                raise ValueError("entry grid does not match %dx%d" % (rows, cols))
            self.a = [list(r) for r in entries]

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        m = cls(field, n, n)
        for i in range(n):
            m.a[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field: FieldSpec, cols: list) -> "Matrix":
        n = len(cols[0])
        m = cls(field, n, len(cols))
        for j, c in enumerate(cols):
            for i in range(n):
                m.a[i][j] = c[i]
        return m

    def column(self, j: int) -> list:
        return [self.a[i][j] for i in range(self.rows)]

    def row(self, i: int) -> list:
        return list(self.a[i])

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, self.a)

    def transpose(self) -> "Matrix":
        t = Matrix(self.field, self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                t.a[j][i] = self.a[i][j]
        return t

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.a == other.a
        )

    def __add__(self, other):
        same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in add")
        out = Matrix(self.field, self.rows, self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out.a[i][j] = self.a[i][j] + other.a[i][j]
        return out

    def __sub__(self, other):
        return self + other.scaled(-self.field.one)

    def scaled(self, c) -> "Matrix":
        out = Matrix(self.field, self.rows, self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out.a[i][j] = c * self.a[i][j]
        return out

    def __mul__(self, other: "Matrix") -> "Matrix":
        same_field(self.field, other.field)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in mul: %dx%d * %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        zero = self.field.zero
        out = Matrix(self.field, self.rows, other.cols)
        for i in range(self.rows):
            arow = self.a[i]
            orow = out.a[i]
            for k in range(self.cols):
                c = arow[k]
                if not c:
                    continue
                brow = other.a[k]
                for j in range(other.cols):
                    if brow[j]:
                        orow[j] = orow[j] + c * brow[j]
        return out

    def apply(self, v: list) -> list:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("vector length %d != cols %d" % (len(v), self.cols))
        out = [self.field.zero] * self.rows
        for i in range(self.rows):
            s = self.field.zero
            arow = self.a[i]
            for j, x in enumerate(v):
                if x:
                    s = s + arow[j] * x
            out[i] = s
        return out

    def left_apply(self, v: list) -> list:
        """Row vector times matrix."""
        if len(v) != self.rows:
            raise ValueError("vector length %d != rows %d" % (len(v), self.rows))
        out = [self.field.zero] * self.cols
        for i, x in enumerate(v):
            if not x:
                continue
            arow = self.a[i]
            for j in range(self.cols):
                if arow[j]:
                    out[j] = out[j] + x * arow[j]
        return out

    def kron(self, other: "Matrix") -> "Matrix":
        same_field(self.field, other.field)
        out = Matrix(self.field, self.rows * other.rows, self.cols * other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                c = self.a[i][j]
                if not c:
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        if other.a[k][l]:
                            out.a[i * other.rows + k][j * other.cols + l] = c * other.a[k][l]
        return out

    def is_zero(self) -> bool:
        return all(not x for row in self.a for x in row)

    def __repr__(self):
        return "Matrix(%r, %d, %d)" % (self.field, self.rows, self.cols)


def _rref(m: Matrix):
    """Reduced row echelon form (in place on a copy); returns (rref, pivot cols)."""
    a = [list(r) for r in m.a]
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    out = Matrix(m.field, rows, cols, a)
    return out, pivots


def rank(m: Matrix) -> int:
    return len(_rref(m)[1])


def row_space_basis(rows: list, field: FieldSpec, ncols: int) -> list:
    """Canonical (RREF) basis of the span of the given row vectors."""
    if not rows:
        return []
    m = Matrix(field, len(rows), ncols, rows)
    r, pivots = _rref(m)
    return [r.row(i) for i in range(len(pivots))]


def kernel_basis(m: Matrix) -> list:
    """Canonical basis of the right null space {v : m v = 0}.

    The returned vectors are the reduced echelon basis of the kernel
    subspace, so the output is deterministic.
    """
    r, pivots = _rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [m.field.zero] * m.cols
        v[fc] = m.field.one
        for i, pc in enumerate(pivots):
            v[pc] = -r.a[i][fc]
        basis.append(v)
    return row_space_basis(basis, m.field, m.cols)


def solve_linear(m: Matrix, b: list):
    """One solution of m x = b (pivot-free coordinates zero), or None."""
    if len(b) != m.rows:
        raise ValueError("rhs length mismatch")
    aug = Matrix(m.field, m.rows, m.cols + 1)
    for i in range(m.rows):
        aug.a[i][: m.cols] = m.a[i]
        aug.a[i][m.cols] = b[i]
    r, pivots = _rref(aug)
    if m.cols in pivots:
        return None
    x = [m.field.zero] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = r.a[i][m.cols]
    return x


def mat_inverse(m: Matrix):
    """Inverse of a square matrix, or None when singular."""
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    aug = Matrix(m.field, n, 2 * n)
    for i in range(n):
        aug.a[i][:n] = m.a[i]
        aug.a[i][n + i] = m.field.one
    r, pivots = _rref(aug)
    if pivots != list(range(n)):
        return None
    inv = Matrix(m.field, n, n)
    for i in range(n):
        inv.a[i] = r.a[i][n:]
    return inv


def in_span(vectors: list, v: list, field: FieldSpec) -> bool:
    """Is v in the span of the given vectors?"""
    if not vectors:
        return all(not x for x in v)
    m = Matrix.from_columns(field, vectors)
    return solve_linear(m, v) is not None


def same_span(a: list, b: list, field: FieldSpec, n: int) -> bool:
    """Do two lists of vectors span the same subspace of k^n?"""
    return row_space_basis(a, field, n) == row_space_basis(b, field, n)
