"""The derivation algebra of (R^7, x) as concrete 7x7 matrices.

The algebra is constructed as the kernel of the linear system expressing
the Leibniz rule d(x cross y) = d(x) cross y + x cross d(y) on all 21
unordered basis pairs (a 147-equation system in the 49 matrix entries).
Skew-adjointness is not imposed; it emerges from the solve and is kept
as a verification.

Also houses the named operator families: the two-argument derivations
D(x, y) built inside the octonions, the lambda/rho operators attached to
a frame, the Killing form, and normalizer/centralizer solves.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .cross7 import Octonion, basis_vector, cross, oct_associator
from .linalg import (Matrix, Subspace, Vec, commutator, dot, kernel, vadd,
                     vscale, vsub)
from .scalar import ONE, ZERO, Scalar

__all__ = ["G2", "Frame", "derivation_algebra", "d_operator",
           "lambda_operator", "rho_operator"]


def _leibniz_rows() -> list[Vec]:
    """Rows of the 147 x 49 system; unknown (r, c) is flat index 7*r + c."""
    e = [basis_vector(i) for i in range(7)]
    rows = []
    for i, j in combinations(range(7), 2):
        target = cross(e[i], e[j])
        for m in range(7):
            row = [ZERO] * 49
            # d(e_i x e_j) component m
            for c in range(7):
                if target[c]:
                    row[7 * m + c] = row[7 * m + c] + target[c]
            # - d(e_i) x e_j - e_i x d(e_j), component m
            for r in range(7):
                v = cross(e[r], e[j])
                if v[m]:
                    row[7 * r + i] = row[7 * r + i] - v[m]
                w = cross(e[i], e[r])
                if w[m]:
                    row[7 * r + j] = row[7 * r + j] - w[m]
            rows.append(row)
    return rows


class G2:
    """The 14-dimensional derivation algebra with cached structure data."""

    def __init__(self):
        self.space = kernel(_leibniz_rows(), 49)
        self.dim = self.space.dim
        self.basis = [Matrix.from_flat(row, 7, 7) for row in self.space.rows]
        self._brackets: list[list[Vec]] | None = None
        self._killing: Matrix | None = None
        self._trace_form: Matrix | None = None

    # -- membership and coordinates -----------------------------------

    def contains(self, m: Matrix) -> bool:
        return self.space.contains(m.flatten())

    def coords(self, m: Matrix) -> Vec:
        c = self.space.coords(m.flatten())
        if c is None:
            raise ValueError("matrix is not a derivation of the cross product")
        return c

    def mat(self, coords: Sequence[Scalar]) -> Matrix:
        flat = [ZERO] * 49
        for c, row in zip(coords, self.space.rows):
            if c:
                flat = [x + c * y for x, y in zip(flat, row)]
        return Matrix.from_flat(flat, 7, 7)

    def subspace_from_matrices(self, mats: Sequence[Matrix]) -> Subspace:
        """Span of the given members, in basis coordinates."""
        return Subspace.span([self.coords(m) for m in mats], self.dim)

    # -- bracket structure ---------------------------------------------

    def bracket_coords(self) -> list[list[Vec]]:
        """sc[i][j] = coordinates of [b_i, b_j]."""
        if self._brackets is None:
            n = self.dim
            sc: list[list[Vec]] = [[None] * n for _ in range(n)]  # type: ignore
            zero = [ZERO] * n
            for i in range(n):
                sc[i][i] = list(zero)
            for i in range(n):
                for j in range(i + 1, n):
                    c = self.coords(commutator(self.basis[i], self.basis[j]))
                    sc[i][j] = c
                    sc[j][i] = [-x for x in c]
            self._brackets = sc
        return self._brackets

    def ad(self, i: int) -> Matrix:
        """ad(b_i) on basis coordinates: column j is coords([b_i, b_j])."""
        sc = self.bracket_coords()
        return Matrix.from_columns([sc[i][j] for j in range(self.dim)])

    def killing_form(self) -> Matrix:
        """kappa(b_i, b_j) = tr(ad b_i ad b_j) on the adjoint representation."""
        if self._killing is None:
            sc = self.bracket_coords()
            n = self.dim
            k = Matrix.zeros(n, n)
            for i in range(n):
                for j in range(i, n):
                    # tr(ad_i ad_j) = sum_{p,q} sc[j][p][q] * sc[i][q][p]
                    acc = ZERO
                    for p in range(n):
                        row = sc[j][p]
                        for q in range(n):
                            if row[q] and sc[i][q][p]:
                                acc = acc + row[q] * sc[i][q][p]
                    k.rows[i][j] = acc
                    k.rows[j][i] = acc
            self._killing = k
        return self._killing

    def trace_form(self) -> Matrix:
        """The 7-dimensional trace form tr(b_i b_j), kept alongside kappa."""
        if self._trace_form is None:
            n = self.dim
            t = Matrix.zeros(n, n)
            for i in range(n):
                for j in range(i, n):
                    v = (self.basis[i] @ self.basis[j]).trace()
                    t.rows[i][j] = v
                    t.rows[j][i] = v
            self._trace_form = t
        return self._trace_form

    def killing(self, m1: Matrix, m2: Matrix) -> Scalar:
        c1 = self.coords(m1)
        c2 = self.coords(m2)
        k = self.killing_form()
        acc = ZERO
        for i, a in enumerate(c1):
            if not a:
                continue
            row = k.rows[i]
            for j, b in enumerate(c2):
                if b and row[j]:
                    acc = acc + a * b * row[j]
        return acc

    def killing_trace_ratio(self) -> Scalar:
        """Observed constant kappa / tr-form; recorded, not asserted."""
        k = self.killing_form()
        t = self.trace_form()
        for i in range(self.dim):
            for j in range(self.dim):
                if t.rows[i][j]:
                    return k.rows[i][j] / t.rows[i][j]
        raise ArithmeticError("trace form vanished")  # unreachable

    # -- normalizer / centralizer ---------------------------------------

    def _action_on(self, s: Subspace) -> list[list[Vec]]:
        """beta[t][r] = coords([b_t, m_r]) for the basis rows m_r of s."""
        mats = [self.mat(row) for row in s.rows]
        return [[self.coords(commutator(b, m)) for m in mats] for b in self.basis]

    def normalizer(self, s: Subspace) -> Subspace:
        """{d : [d, s] <= s}, one linear solve in basis coordinates."""
        self._check_subspace(s)
        if s.dim == 0:
            return Subspace.full(self.dim)
        beta = self._action_on(s)
        rows = []
        for r in range(s.dim):
            residuals = [s.reduce(beta[t][r]) for t in range(self.dim)]
            for c in range(self.dim):
                rows.append([residuals[t][c] for t in range(self.dim)])
        return kernel(rows, self.dim)

    def centralizer(self, s: Subspace) -> Subspace:
        """{d : [d, s] = 0}."""
        self._check_subspace(s)
        if s.dim == 0:
            return Subspace.full(self.dim)
        beta = self._action_on(s)
        rows = []
        for r in range(s.dim):
            for c in range(self.dim):
                rows.append([beta[t][r][c] for t in range(self.dim)])
        return kernel(rows, self.dim)

    def _check_subspace(self, s: Subspace):
        if s.n != self.dim:
            raise ValueError("subspace must live in basis coordinates")


@lru_cache(maxsize=1)
def derivation_algebra() -> G2:
    """The cached algebra instance; construction is deterministic."""
    g2 = G2()
    if g2.dim != 14:
        raise AssertionError(f"derivation algebra has dimension {g2.dim}")
    return g2


def d_operator(x: Sequence[Scalar], y: Sequence[Scalar]) -> Matrix:
    """The derivation z -> [[x,y],z] + 3(x,z,y), octonion arithmetic.

    The real part of the result vanishes identically on pure arguments;
    this is checked, and the restriction to R^7 is returned.
    """
    ox = Octonion.pure(x)
    oy = Octonion.pure(y)
    comm = ox * oy - oy * ox
    cols = []
    for c in range(7):
        oz = Octonion.pure(basis_vector(c))
        val = (comm * oz - oz * comm) + _scale_oct(oct_associator(ox, oz, oy), 3)
        if val.re:
            raise AssertionError("derivation has a real component")
        cols.append(val.im)
    return Matrix.from_columns(cols)


def _scale_oct(o: Octonion, k: int) -> Octonion:
    ks = Scalar.of(k)
    return Octonion(ks * o.re, vscale(ks, o.im))


class Frame:
    """An orthonormal associative triple {i, j, k = i x j} plus a unit l
    orthogonal to it; carries the derived basis {i, j, k, l, ixl, jxl, kxl}."""

    __slots__ = ("i", "j", "k", "l", "vectors")

    def __init__(self, i: Sequence[Scalar], j: Sequence[Scalar],
                 l: Sequence[Scalar]):
        i = [Scalar.of(x) for x in i]
        j = [Scalar.of(x) for x in j]
        l = [Scalar.of(x) for x in l]
        k = cross(i, j)
        vectors = [i, j, k, l, cross(i, l), cross(j, l), cross(k, l)]
        for a in range(7):
            for b in range(a, 7):
                expected = ONE if a == b else ZERO
                if dot(vectors[a], vectors[b]) != expected:
                    raise ValueError("frame is not orthonormal")
        self.i, self.j, self.k, self.l = i, j, k, l
        self.vectors = vectors

    @classmethod
    def standard(cls) -> "Frame":
        """The desk frame i = e1, j = e2, l = e3 (so k = e4)."""
        return cls(basis_vector(0), basis_vector(1), basis_vector(2))

    def matrix(self) -> Matrix:
        """Columns are the frame basis; orthonormal, so inverse = transpose."""
        return Matrix.from_columns(self.vectors)

    def in_v(self, a: Sequence[Scalar]) -> bool:
        span = Subspace.span([self.i, self.j, self.k], 7)
        return span.contains(list(a))


def _operator_from_images(frame: Frame, images: list[Vec]) -> Matrix:
    f = frame.matrix()
    im = Matrix.from_columns(images)
    return im @ f.transpose()


def lambda_operator(a: Sequence[Scalar], frame: Frame) -> Matrix:
    """lambda_a: kills V, l -> a x l, v x l -> (a x v) x l - <v,a> l."""
    a = [Scalar.of(x) for x in a]
    if not frame.in_v(a):
        raise ValueError("lambda argument must lie in the associative triple")
    zero = [ZERO] * 7
    images = [list(zero), list(zero), list(zero), cross(a, frame.l)]
    for v in (frame.i, frame.j, frame.k):
        images.append(vsub(cross(cross(a, v), frame.l),
                           vscale(dot(v, a), frame.l)))
    return _operator_from_images(frame, images)


def rho_operator(a: Sequence[Scalar], frame: Frame) -> Matrix:
    """rho_a: v -> 2 a x v, l -> -a x l, v x l -> (a x v) x l + <v,a> l."""
    a = [Scalar.of(x) for x in a]
    if not frame.in_v(a):
        raise ValueError("rho argument must lie in the associative triple")
    two = Scalar.of(2)
    images = [vscale(two, cross(a, v)) for v in (frame.i, frame.j, frame.k)]
    images.append(vscale(-ONE, cross(a, frame.l)))
    for v in (frame.i, frame.j, frame.k):
        images.append(vadd(cross(cross(a, v), frame.l),
                           vscale(dot(v, a), frame.l)))
    return _operator_from_images(frame, images)
