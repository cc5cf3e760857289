"""Exact dense linear algebra over Scalar for small dimensions (<= 49).

Provides vectors (plain lists of Scalar), a Matrix class, Gauss-Jordan
reduction, kernels, characteristic polynomials, and a Subspace type whose
canonical reduced-row-echelon representation makes subspace equality a
plain comparison.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar

__all__ = [
    "Matrix", "Subspace", "vec", "dot", "vadd", "vsub", "vscale",
    "is_zero_vec", "rref", "kernel", "rank", "char_poly", "solve",
]

Vec = list[Scalar]


def vec(*entries) -> Vec:
    return [Scalar.of(x) for x in entries]


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def vadd(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vec:
    return [a + b for a, b in zip(u, v)]


def vsub(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vec:
    return [a - b for a, b in zip(u, v)]


def vscale(c: Scalar, u: Sequence[Scalar]) -> Vec:
    return [c * a for a in u]


def is_zero_vec(u: Sequence[Scalar]) -> bool:
    return not any(u)


class Matrix:
    """Dense matrix of Scalars, column-action convention (M @ column)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        self.rows = [[Scalar.of(x) for x in r] for r in rows]
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, n: int, m: int) -> "Matrix":
        return cls([[ZERO] * m for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Scalar]]) -> "Matrix":
        return cls([[col[i] for col in cols] for i in range(len(cols[0]))])

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vec:
        return list(self.rows[i])

    def column(self, j: int) -> Vec:
        return [r[j] for r in self.rows]

    def __add__(self, o: "Matrix") -> "Matrix":
        return Matrix([vadd(a, b) for a, b in zip(self.rows, o.rows)])

    def __sub__(self, o: "Matrix") -> "Matrix":
        return Matrix([vsub(a, b) for a, b in zip(self.rows, o.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        c = Scalar.of(c)
        return Matrix([[c * x for x in r] for r in self.rows])

    def __matmul__(self, o: "Matrix") -> "Matrix":
        n, k = self.shape
        k2, m = o.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {o.shape}")
        ocols = [o.column(j) for j in range(m)]
        out = []
        for r in self.rows:
            out.append([dot(r, col) for col in ocols])
        return Matrix(out)

    def apply(self, v: Sequence[Scalar]) -> Vec:
        n, m = self.shape
        if len(v) != m:
            raise ValueError("vector length mismatch")
        return [dot(r, v) for r in self.rows]

    def transpose(self) -> "Matrix":
        n, m = self.shape
        return Matrix([[self.rows[i][j] for i in range(n)] for j in range(m)])

    def trace(self) -> Scalar:
        acc = ZERO
        for i, r in enumerate(self.rows):
            acc = acc + r[i]
        return acc

    def flatten(self) -> Vec:
        return [x for r in self.rows for x in r]

    @classmethod
    def from_flat(cls, flat: Sequence[Scalar], n: int, m: int) -> "Matrix":
        return cls([list(flat[i * m:(i + 1) * m]) for i in range(n)])

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def __eq__(self, o) -> bool:
        return isinstance(o, Matrix) and self.rows == o.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __repr__(self):
        return "Matrix([" + ",\n        ".join(
            "[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        piv = None
        for r in range(prow, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[prow], work[piv] = work[piv], work[prow]
        inv = work[prow][col].inverse()
        work[prow] = [inv * x for x in work[prow]]
        for r in range(len(work)):
            if r != prow and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[prow])]
        pivots.append(col)
        prow += 1
        if prow == len(work):
            break
    return work[:prow], pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[0])


def kernel(rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> "Subspace":
    """Canonical basis of {x : A x = 0} for A given by rows."""
    if ncols is None:
        if not rows:
            raise ValueError("need ncols for an empty system")
        ncols = len(rows[0])
    red, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in zip(red, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return Subspace.span(basis, ncols)


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> Vec | None:
    """One solution of A x = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    ncols = len(rows[0])
    sol = [ZERO] * ncols
    for r, pc in zip(red, pivots):
        if pc == ncols:
            return None
        sol[pc] = r[ncols]
    return sol


class Subspace:
    """Subspace of Scalar^n held as canonical RREF rows.

    Canonicalisation makes equality of subspaces equality of
    representations; all constructors reduce their input.
    """

    __slots__ = ("n", "rows", "pivots")

    def __init__(self, n: int, rows: list[Vec], pivots: list[int], _trusted=False):
        if not _trusted:
            rows, pivots = rref(rows)
        self.n = n
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def span(cls, vectors: Sequence[Sequence[Scalar]], n: int) -> "Subspace":
        for v in vectors:
            if len(v) != n:
                raise ValueError("ambient dimension mismatch")
        rows, pivots = rref(vectors)
        return cls(n, rows, pivots, _trusted=True)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, [], [], _trusted=True)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span([[ONE if i == j else ZERO for j in range(n)]
                         for i in range(n)], n)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[Scalar]) -> Vec:
        """Residual of v after elimination against the basis."""
        out = list(v)
        for r, pc in zip(self.rows, self.pivots):
            f = out[pc]
            if f:
                out = [x - f * y for x, y in zip(out, r)]
        return out

    def contains(self, v: Sequence[Scalar]) -> bool:
        if len(v) != self.n:
            raise ValueError("ambient dimension mismatch")
        return is_zero_vec(self.reduce(v))

    def coords(self, v: Sequence[Scalar]) -> Vec | None:
        """Coefficients of v on the canonical basis, or None if outside."""
        cs = [v[pc] for pc in self.pivots]
        residual = list(v)
        for c, r in zip(cs, self.rows):
            if c:
                residual = [x - c * y for x, y in zip(residual, r)]
        if not is_zero_vec(residual):
            return None
        return cs

    def _require_same_ambient(self, other: "Subspace"):
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")

    def sum(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        return Subspace.span(self.rows + other.rows, self.n)

    __or__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        """U cap W via the kernel of the stacked coefficient system."""
        self._require_same_ambient(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.n)
        # columns: coefficients (a | b) with sum a_i u_i - sum b_j w_j = 0
        k1, k2 = self.dim, other.dim
        sys_rows = []
        for c in range(self.n):
            sys_rows.append([self.rows[i][c] for i in range(k1)]
                            + [-other.rows[j][c] for j in range(k2)])
        ker = kernel(sys_rows, k1 + k2)
        vecs = []
        for comb in ker.rows:
            v = [ZERO] * self.n
            for i in range(k1):
                if comb[i]:
                    v = [x + comb[i] * y for x, y in zip(v, self.rows[i])]
            vecs.append(v)
        return Subspace.span(vecs, self.n)

    __and__ = intersect

    def complement(self) -> "Subspace":
        """Orthogonal complement under the standard dot product."""
        if not self.rows:
            return Subspace.full(self.n)
        return kernel(self.rows, self.n)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._require_same_ambient(other)
        return all(self.contains(r) for r in other.rows)

    __ge__ = contains_subspace

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def __eq__(self, o) -> bool:
        if not isinstance(o, Subspace):
            return NotImplemented
        return self.n == o.n and self.pivots == o.pivots and self.rows == o.rows

    def __hash__(self):
        return hash((self.n, tuple(self.pivots)))

    def basis(self) -> list[Vec]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


def char_poly(m: Matrix) -> list[Scalar]:
    """Monic characteristic polynomial det(lambda*I - M).

    Returned as coefficients in ascending degree, [c0, ..., c_{n-1}, 1],
    computed by the Faddeev-LeVerrier recursion (exact over the field).
    """
    n, n2 = m.shape
    if n != n2:
        raise ValueError("characteristic polynomial of a non-square matrix")
    coeffs = [ONE]  # leading coefficient, degree n
    mk = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk
        ck = -(mk.trace() / Scalar.of(k))
        coeffs.append(ck)
        if k < n:
            mk = mk + Matrix.identity(n).scale(ck)
    return list(reversed(coeffs))


def poly_from_roots_squared(squares: Sequence[int]) -> list[Scalar]:
    """lambda * prod(lambda^2 + s) for s in squares, ascending coefficients."""
    poly = [ZERO, ONE]  # lambda
    for s in squares:
        # multiply by (lambda^2 + s)
        ssc = Scalar.of(s)
        out = [ZERO] * (len(poly) + 2)
        for i, c in enumerate(poly):
            out[i + 2] = out[i + 2] + c
            out[i] = out[i] + ssc * c
        poly = out
    return poly
