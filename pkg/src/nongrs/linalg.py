"""Dense exact linear algebra over a finite field.

Matrices store canonical integer values row-major and are immutable.  All
eliminations pick the first usable pivot column left to right, and kernel
bases / solutions are returned in reduced echelon form, so every derived
object is byte-stable across runs.
"""

from __future__ import annotations

from .fields import Field, FieldElement
from .symfunc import EvalSet, _point_values

# Per-dimension cap; this is a desk-scale toolkit.
MAX_DIMENSION = 1 << 16


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows, cols: int | None = None):
        data = []
        for row in rows:
            vals = []
            for x in row:
                if isinstance(x, FieldElement):
                    if x.field != field:
                        raise ValueError("matrix entries must share one field")
                    vals.append(x.value)
                else:
                    vals.append(field.canon(int(x)))
            data.append(tuple(vals))
        if data:
            ncols = len(data[0])
            if cols is not None and cols != ncols:
                raise ValueError("declared column count does not match rows")
        elif cols is None:
            raise ValueError("a zero-row matrix needs an explicit column count")
        else:
            ncols = cols
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        if ncols == 0:
            raise ValueError("matrix needs at least one column")
        if len(data) > MAX_DIMENSION or ncols > MAX_DIMENSION:
            raise ValueError(f"matrix dimension exceeds {MAX_DIMENSION}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "data", tuple(data))

    def __setattr__(self, *_):
        raise AttributeError("matrices are immutable")

    # -- basic views ------------------------------------------------------
    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.data[i][j])

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols} over q={self.field.q}: {body})"

    # -- construction helpers ----------------------------------------------
    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        return Matrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.data))

    def stack(self, other: "Matrix") -> "Matrix":
        if other.field != self.field or other.cols != self.cols:
            raise ValueError("stack needs same field and column count")
        return Matrix(self.field, self.data + other.data, cols=self.cols)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        col_idx = list(col_idx)
        return Matrix(
            self.field,
            [[self.data[i][j] for j in col_idx] for i in row_idx],
            cols=len(col_idx),
        )

    def drop_column(self, j: int) -> "Matrix":
        keep = [c for c in range(self.cols) if c != j]
        return self.submatrix(range(self.rows), keep)

    def mul(self, other: "Matrix") -> "Matrix":
        if other.field != self.field or self.cols != other.rows:
            raise ValueError("incompatible shapes")
        f = self.field
        bt = list(zip(*other.data)) if other.data else [() for _ in range(other.cols)]
        out = []
        for arow in self.data:
            out.append(
                [_dot(f, arow, bcol) for bcol in bt]
            )
        return Matrix(f, out, cols=other.cols)

    def vec_mul(self, vec) -> list[FieldElement]:
        """Matrix-vector product M v^T as a list of elements."""
        f = self.field
        vals = [f.element(x).value for x in vec]
        if len(vals) != self.cols:
            raise ValueError("vector length must equal column count")
        return [FieldElement(f, _dot(f, r, vals)) for r in self.data]

    # -- rank / rref / determinant / kernel / solve -------------------------
    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        mat, pivots = rref_ints(self.field, self.data)
        return Matrix(self.field, mat, cols=self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(rref_ints(self.field, self.data)[1])

    def determinant(self) -> FieldElement:
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        return FieldElement(self.field, det_ints(self.field, self.data))

    def kernel_basis(self) -> "Matrix":
        """Reduced-echelon basis of {x : M x^T = 0}.

        Row count is cols - rank (possibly zero).  The standard free-column
        basis is put through one more reduction so the result is the unique
        reduced echelon basis of the kernel.
        """
        rows = kernel_ints(self.field, self.data, self.cols)
        if not rows:
            return Matrix(self.field, [], cols=self.cols)
        reduced, _ = rref_ints(self.field, rows)
        return Matrix(self.field, reduced)

    def solve(self, target) -> list[FieldElement] | None:
        """One solution of M x^T = t, or None when inconsistent.

        Pivots are chosen left to right and free variables set to zero, so
        the solution is supported on the earliest usable columns.
        """
        f = self.field
        t = [f.element(x).value for x in target]
        if len(t) != self.rows:
            raise ValueError("target length must equal row count")
        aug = [row + (tv,) for row, tv in zip(self.data, t)]
        mat, pivots = rref_ints(f, aug)
        if self.cols in pivots:
            return None
        sol = [0] * self.cols
        for i, pc in enumerate(pivots):
            sol[pc] = mat[i][self.cols]
        return [FieldElement(f, v) for v in sol]

    # -- JSON ----------------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "field": self.field.spec_dict(),
            "rows": self.rows,
            "cols": self.cols,
            "data": [list(r) for r in self.data],
        }

    @staticmethod
    def from_dict(d: dict) -> "Matrix":
        from .fields import field_from_spec

        field = field_from_spec(d["field"])
        m = Matrix(field, d["data"], cols=d["cols"])
        if m.rows != d["rows"]:
            raise ValueError("declared shape does not match data")
        return m


def _dot(f: Field, a, b) -> int:
    if f.kind == "prime":
        return sum(x * y for x, y in zip(a, b)) % f.p
    acc = 0
    for x, y in zip(a, b):
        acc = f.add(acc, f.mul(x, y))
    return acc


# ---------------------------------------------------------------------------
# int-level elimination kernels
# ---------------------------------------------------------------------------

def rref_ints(f: Field, rows) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column list)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = f.inv(mat[rank][col])
        if inv != 1:
            mat[rank] = [f.mul(inv, x) for x in mat[rank]]
        prow = mat[rank]
        for r in range(nrows):
            if r != rank and mat[r][col]:
                c = mat[r][col]
                mrow = mat[r]
                for j in range(col, ncols):
                    if prow[j]:
                        mrow[j] = f.sub(mrow[j], f.mul(c, prow[j]))
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return [tuple(r) for r in mat[:rank]] + [tuple(r) for r in mat[rank:]], pivots


def kernel_ints(f: Field, rows, ncols: int) -> list[tuple]:
    """Standard free-column basis of the right kernel (not yet reduced)."""
    mat, pivots = rref_ints(f, rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = f.neg(mat[i][free])
        basis.append(tuple(vec))
    return basis


def rank_ints(f: Field, rows) -> int:
    return len(rref_ints(f, rows)[1])


def det_ints(f: Field, rows) -> int:
    """Exact determinant by Gaussian elimination; closed forms for n <= 3."""
    n = len(rows)
    if f.kind == "prime":
        p = f.p
        if n == 1:
            return rows[0][0] % p
        if n == 2:
            (a, b), (c, d) = rows
            return (a * d - b * c) % p
        if n == 3:
            (a, b, c), (d, e, g), (h, i, j) = rows
            return (a * (e * j - g * i) - b * (d * j - g * h) + c * (d * i - e * h)) % p
        return _det_gauss_prime(p, rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return f.sub(f.mul(a, d), f.mul(b, c))
    if n == 3:
        (a, b, c), (d, e, g), (h, i, j) = rows
        t1 = f.mul(a, f.sub(f.mul(e, j), f.mul(g, i)))
        t2 = f.mul(b, f.sub(f.mul(d, j), f.mul(g, h)))
        t3 = f.mul(c, f.sub(f.mul(d, i), f.mul(e, h)))
        return f.add(f.sub(t1, t2), t3)
    return _det_gauss_generic(f, rows)


def _det_gauss_prime(p: int, rows) -> int:
    mat = [list(r) for r in rows]
    n = len(mat)
    det = 1
    for c in range(n):
        piv = None
        for r in range(c, n):
            if mat[r][c]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        pivval = mat[c][c]
        det = det * pivval % p
        inv = pow(pivval, p - 2, p)
        crow = mat[c]
        for r in range(c + 1, n):
            factor = mat[r][c] * inv % p
            if factor:
                rrow = mat[r]
                for j in range(c, n):
                    rrow[j] = (rrow[j] - factor * crow[j]) % p
    return det % p


def _det_gauss_generic(f: Field, rows) -> int:
    mat = [list(r) for r in rows]
    n = len(mat)
    det = 1
    negate = False
    for c in range(n):
        piv = None
        for r in range(c, n):
            if mat[r][c]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            negate = not negate
        det = f.mul(det, mat[c][c])
        inv = f.inv(mat[c][c])
        crow = mat[c]
        for r in range(c + 1, n):
            factor = f.mul(mat[r][c], inv)
            if factor:
                rrow = mat[r]
                for j in range(c, n):
                    rrow[j] = f.sub(rrow[j], f.mul(factor, crow[j]))
    return f.neg(det) if negate else det


# ---------------------------------------------------------------------------
# Vandermonde-family builders
# ---------------------------------------------------------------------------

def vandermonde(points) -> Matrix:
    """n x n matrix with rows a^0, a^1, ..., a^(n-1)."""
    field, vals = _point_values(points)
    n = len(vals)
    return Matrix(field, [[field.pow(a, e) for a in vals] for e in range(n)])


def vandermonde_dropped_row(points, r: int) -> Matrix:
    """n x n Vandermonde with the a^(n-r) row removed and a^n appended.

    Its determinant factors as det(vandermonde) * e_r over the points.
    """
    field, vals = _point_values(points)
    n = len(vals)
    if not 1 <= r <= n - 1:
        raise ValueError(f"need 1 <= r <= n-1, got r={r}")
    exps = [e for e in range(n + 1) if e != n - r]
    return Matrix(field, [[field.pow(a, e) for a in vals] for e in exps])


def vandermonde_power_row(points, h: int) -> Matrix:
    """n x n matrix with rows a^0, ..., a^(n-2) and final row a^h.

    For h >= n-1 its determinant factors as det(vandermonde) * h_{h-n+1}.
    """
    field, vals = _point_values(points)
    n = len(vals)
    if h < 0:
        raise ValueError("need h >= 0")
    exps = list(range(n - 1)) + [h]
    return Matrix(field, [[field.pow(a, e) for a in vals] for e in exps])


def row_space_equal(a: Matrix, b: Matrix) -> bool:
    """True iff the two matrices span the same row space."""
    if a.field != b.field or a.cols != b.cols:
        raise ValueError("row spaces live in the same ambient space only")
    ra = a.rank()
    rb = b.rank()
    if ra != rb:
        return False
    return a.stack(b).rank() == ra
