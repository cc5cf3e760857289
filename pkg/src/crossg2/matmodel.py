"""Projection model of the 8-dimensional symmetric space and the 3x3 models.

The rank-3 symmetric idempotents of R^7 form the Grassmannian; those whose
fixed space is an associative subalgebra form the submanifold studied here.
Tangent spaces are obtained by solving the linearised constraint systems
exactly.  A tangent element restricted to the fixed space V0 is recorded as
a 3x4 row matrix over the bases {i, j, k} of V0 and {v0..v3} of the
complement; dropping the first column identifies the eight-dimensional
tangent triple system with traceless 3x3 matrices carrying the twisted
product {m1,m2,m3} = [m1,m2,m3] + gamma(m1,m2,m3).
"""

from __future__ import annotations

from typing import Sequence

from .cross7 import basis_vector, cross
from .g2alg import G2, Frame, derivation_algebra
from .linalg import (Matrix, Subspace, Vec, char_poly, dot, is_zero_vec,
                     kernel, solve)
from .lts import LtsCarrier, TripleSystem, triple_in_lie
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "Projection", "projection_onto", "in_ms_prime", "gr3_tangent",
    "ms_tangent", "row_matrix", "from_row_matrix", "matches_template",
    "m34_triple", "m34_system", "m34_template_basis", "LiftMap",
    "alpha", "sl3_triple", "to_sl3", "from_sl3", "metric", "d_st",
    "sl3_system", "sl3_full_carrier", "sl3_catalog", "curvature_check",
    "metric_gram_is_positive_definite",
]


class Projection:
    """A symmetric idempotent 7x7 matrix of trace 3."""

    __slots__ = ("mat",)

    def __init__(self, mat: Matrix):
        if mat.shape != (7, 7):
            raise ValueError("projection must be 7x7")
        if mat @ mat != mat:
            raise ValueError("matrix is not idempotent")
        if mat != mat.transpose():
            raise ValueError("matrix is not symmetric")
        if mat.trace() != Scalar.of(3):
            raise ValueError("trace must be exactly 3")
        self.mat = mat

    def complement_map(self) -> Matrix:
        return Matrix.identity(7) - self.mat

    def fixed_space(self) -> Subspace:
        return kernel((self.mat - Matrix.identity(7)).rows, 7)

    def kernel_space(self) -> Subspace:
        return kernel(self.mat.rows, 7)


def projection_onto(space: Subspace) -> Projection:
    """Orthogonal projection onto a 3-dimensional subspace, exact."""
    from .catalog import matrix_inverse
    b = Matrix(space.rows)
    gram_inv = matrix_inverse(b @ b.transpose())
    return Projection(b.transpose() @ gram_inv @ b)


def in_ms_prime(p: Projection) -> bool:
    """Whether the trilinear form vanishes on (im P, im P, ker P)."""
    e = [basis_vector(i) for i in range(7)]
    pc = p.complement_map()
    px = [p.mat.apply(v) for v in e]
    qx = [pc.apply(v) for v in e]
    for i in range(7):
        for j in range(7):
            cij = cross(px[i], px[j])
            if is_zero_vec(cij):
                continue
            for k in range(7):
                if dot(cij, qx[k]):
                    return False
    return True


def _gr3_rows(p: Projection) -> list[Vec]:
    """Linearised constraints: dP + Pd = d and d symmetric (trace is implied)."""
    pm = p.mat
    rows: list[Vec] = []
    for m in range(7):
        for c in range(7):
            row = [ZERO] * 49
            for k in range(7):
                row[7 * m + k] = row[7 * m + k] + pm.rows[k][c]
                row[7 * k + c] = row[7 * k + c] + pm.rows[m][k]
            row[7 * m + c] = row[7 * m + c] - ONE
            rows.append(row)
    for r in range(7):
        for c in range(r + 1, 7):
            row = [ZERO] * 49
            row[7 * r + c] = ONE
            row[7 * c + r] = -ONE
            rows.append(row)
    return rows


def gr3_tangent(p: Projection) -> Subspace:
    """12-dimensional tangent space at p, flattened to R^49."""
    return kernel(_gr3_rows(p), 49)


def ms_tangent(p: Projection, frame: Frame) -> Subspace:
    """8-dimensional tangent space of the associative locus at p.

    Adds to the Grassmannian constraints the Leibniz rule on the pairs of
    the fixed-space frame {i, j, k}.
    """
    fixed = p.fixed_space()
    for f in (frame.i, frame.j, frame.k):
        if not fixed.contains(f):
            raise ValueError("frame does not span the fixed space of p")
    e = [basis_vector(i) for i in range(7)]
    rows = _gr3_rows(p)
    for x, y in ((frame.i, frame.j), (frame.i, frame.k), (frame.j, frame.k)):
        target = cross(x, y)
        for m in range(7):
            row = [ZERO] * 49
            for c in range(7):
                if target[c]:
                    row[7 * m + c] = row[7 * m + c] + target[c]
            for r in range(7):
                v = cross(e[r], y)
                w = cross(x, e[r])
                for c in range(7):
                    if x[c] and v[m]:
                        row[7 * r + c] = row[7 * r + c] - x[c] * v[m]
                    if y[c] and w[m]:
                        row[7 * r + c] = row[7 * r + c] - y[c] * w[m]
            rows.append(row)
    return kernel(rows, 49)


def frame_v_basis(frame: Frame) -> list[Vec]:
    """v0 = l, v1 = i x l, v2 = j x l, v3 = k x l."""
    return [frame.l, cross(frame.i, frame.l), cross(frame.j, frame.l),
            cross(frame.k, frame.l)]


def row_matrix(d: Matrix, frame: Frame) -> Matrix:
    """3x4 coordinates of d restricted to V0: entry (r, c) = <d f_r, v_c>."""
    vs = frame_v_basis(frame)
    out = []
    for f in (frame.i, frame.j, frame.k):
        img = d.apply(f)
        out.append([dot(img, v) for v in vs])
    return Matrix(out)


def from_row_matrix(rm: Matrix, frame: Frame) -> Matrix:
    """The self-adjoint odd extension of the row-matrix data."""
    if rm.shape != (3, 4):
        raise ValueError("row matrix must be 3x4")
    vs = frame_v_basis(frame)
    fs = [frame.i, frame.j, frame.k]
    out = Matrix.zeros(7, 7)
    for r in range(3):
        for c in range(4):
            coeff = rm.rows[r][c]
            if not coeff:
                continue
            for a in range(7):
                for b in range(7):
                    term = coeff * (vs[c][a] * fs[r][b] + fs[r][a] * vs[c][b])
                    if term:
                        out.rows[a][b] = out.rows[a][b] + term
    return out


def matches_template(rm: Matrix) -> bool:
    """Third row must be (a2-b1, a3+b0, b3-a0, -a1-b2) of the first two."""
    a = rm.rows[0]
    b = rm.rows[1]
    expected = [a[2] - b[1], a[3] + b[0], b[3] - a[0], -a[1] - b[2]]
    return rm.rows[2] == expected


def m34_triple(a: Matrix, b: Matrix, c: Matrix) -> Matrix:
    """a b^t c - b a^t c + c b^t a - c a^t b on 3x4 blocks."""
    for m in (a, b, c):
        if m.shape != (3, 4):
            raise ValueError("arguments must be 3x4")
    at, bt = a.transpose(), b.transpose()
    return (a @ bt @ c) - (b @ at @ c) + (c @ bt @ a) - (c @ at @ b)


def m34_system() -> TripleSystem:
    def triple(x: Vec, y: Vec, z: Vec) -> Vec:
        return m34_triple(Matrix.from_flat(x, 3, 4), Matrix.from_flat(y, 3, 4),
                          Matrix.from_flat(z, 3, 4)).flatten()
    return TripleSystem("m34", 12, triple)


def m34_template_basis() -> list[Matrix]:
    """The eight block matrices spanning the template space."""
    def eij(i: int, j: int, sign: int = 1) -> Matrix:
        m = Matrix.zeros(3, 4)
        m.rows[i - 1][j - 1] = Scalar.of(sign)
        return m

    return [
        eij(1, 1) - eij(3, 3), eij(1, 2) - eij(3, 4),
        eij(1, 3) + eij(3, 1), eij(1, 4) + eij(3, 2),
        eij(2, 1) + eij(3, 2), eij(2, 2) - eij(3, 1),
        eij(2, 3) - eij(3, 4), eij(2, 4) + eij(3, 3),
    ]


class LiftMap:
    """The linear bijection from tangent elements to odd derivations.

    A tangent element d determines a unique odd derivation agreeing with it
    on V0; the bijection intertwines the two triple products up to one
    global sign, fixed empirically at construction from an exhaustive basis
    sweep and recorded as `sign`.
    """

    def __init__(self, v, frame: Frame, g2: G2 | None = None):
        from .catalog import grading
        g2 = g2 or derivation_algebra()
        self.g2 = g2
        self.frame = frame
        odd = grading(v, g2).odd
        self.m4v_mats = [g2.mat(r) for r in odd.rows]
        self.m4v_space = odd
        p = projection_onto(v.space)
        self.tangent = ms_tangent(p, frame)
        if self.tangent.dim != 8:
            raise AssertionError("tangent space does not have dimension 8")
        # columns of the solve: values of the odd basis on the frame of V0
        sysrows = []
        for f in (frame.i, frame.j, frame.k):
            images = [m.apply(f) for m in self.m4v_mats]
            for comp in range(7):
                sysrows.append([img[comp] for img in images])
        if kernel(sysrows, len(self.m4v_mats)).dim != 0:
            raise AssertionError("odd derivations are not determined by V0 values")
        self._sysrows = sysrows
        self.basis = [Matrix.from_flat(r, 7, 7) for r in self.tangent.rows]
        self.lifted = [self.lift(m) for m in self.basis]
        lift_coords = [g2.coords(m) for m in self.lifted]
        if Subspace.span(lift_coords, g2.dim) != odd:
            raise AssertionError("lift image does not fill the odd part")
        self.sign = self._fix_sign()

    def lift(self, d: Matrix) -> Matrix:
        rhs = []
        for f in (self.frame.i, self.frame.j, self.frame.k):
            rhs.extend(d.apply(f))
        x = solve(self._sysrows, rhs)
        if x is None:
            raise ValueError("element does not lift to an odd derivation")
        out = Matrix.zeros(7, 7)
        for coeff, m in zip(x, self.m4v_mats):
            if coeff:
                out = out + m.scale(coeff)
        for f in (self.frame.i, self.frame.j, self.frame.k):
            if out.apply(f) != d.apply(f):
                raise AssertionError("lift does not restrict correctly")
        return out

    def _fix_sign(self) -> int:
        sign = 0
        for x in range(8):
            for y in range(8):
                for z in range(8):
                    lhs = self.lift(triple_in_lie(self.basis[x], self.basis[y],
                                                  self.basis[z]))
                    rhs = triple_in_lie(self.lifted[x], self.lifted[y],
                                        self.lifted[z])
                    if lhs.is_zero() and rhs.is_zero():
                        continue
                    if sign == 0:
                        if lhs == rhs:
                            sign = 1
                        elif lhs == -rhs:
                            sign = -1
                        else:
                            raise AssertionError("lift is not a triple morphism "
                                                 "up to a global sign")
                    else:
                        expected = rhs if sign == 1 else -rhs
                        if lhs != expected:
                            raise AssertionError("global sign is not constant")
        if sign == 0:
            raise AssertionError("triple product vanished identically")
        return sign


def alpha(m: Matrix) -> Vec:
    """Antisymmetric-part extraction (a23-a32, a31-a13, a12-a21)."""
    if m.shape != (3, 3):
        raise ValueError("alpha expects a 3x3 matrix")
    r = m.rows
    return [r[1][2] - r[2][1], r[2][0] - r[0][2], r[0][1] - r[1][0]]


def _outer(u: Vec, w: Vec) -> Matrix:
    return Matrix([[a * b for b in w] for a in u])


def _sl3_triple_raw(m1: Matrix, m2: Matrix, m3: Matrix) -> Matrix:
    t1, t2, t3 = m1.transpose(), m2.transpose(), m3.transpose()
    bracket = (m1 @ t2 @ m3) - (m2 @ t1 @ m3) + (m3 @ t2 @ m1) - (m3 @ t1 @ m2)
    a1, a2, a3 = alpha(m1), alpha(m2), alpha(m3)
    gamma = ((_outer(a1, a2) - _outer(a2, a1)) @ m3
             + _outer(a3, a2) @ m1 - _outer(a3, a1) @ m2)
    return bracket + gamma


def sl3_triple(m1: Matrix, m2: Matrix, m3: Matrix) -> Matrix:
    """{m1, m2, m3} on traceless 3x3 matrices; tracelessness is enforced."""
    for m in (m1, m2, m3):
        if m.shape != (3, 3):
            raise ValueError("arguments must be 3x3")
        if m.trace():
            raise ValueError("arguments must be traceless")
    out = _sl3_triple_raw(m1, m2, m3)
    if out.trace():
        raise AssertionError("triple product left the traceless space")
    return out


def to_sl3(rm: Matrix) -> Matrix:
    """Forget the first column of a template row matrix."""
    if rm.shape != (3, 4):
        raise ValueError("expected a 3x4 row matrix")
    if not matches_template(rm):
        raise ValueError("row matrix does not satisfy the template relations")
    return Matrix([r[1:] for r in rm.rows])


def from_sl3(m: Matrix) -> Matrix:
    """Inverse of to_sl3: prepend the alpha column."""
    a = alpha(m)
    return Matrix([[a[r]] + list(m.rows[r]) for r in range(3)])


def metric(m1: Matrix, m2: Matrix) -> Scalar:
    """alpha(m1).alpha(m2) + tr(m1 m2^t)."""
    return dot(alpha(m1), alpha(m2)) + (m1 @ m2.transpose()).trace()


def d_st(s: Scalar | int, t: Scalar | int) -> Matrix:
    """The two-parameter family spanning the 2-dimensional subsystem."""
    s = Scalar.of(s)
    t = Scalar.of(t)
    r15_3 = Scalar(0, 0, 0, 1, 3)  # sqrt(15)/3 = sqrt(5/3)
    m2 = Scalar.of(-2)
    return Matrix([
        [m2 * s, ZERO, ZERO],
        [-r15_3 * t, s, t],
        [r15_3 * s, -t, s],
    ])


def sl3_system() -> TripleSystem:
    def triple(x: Vec, y: Vec, z: Vec) -> Vec:
        return _sl3_triple_raw(Matrix.from_flat(x, 3, 3),
                               Matrix.from_flat(y, 3, 3),
                               Matrix.from_flat(z, 3, 3)).flatten()
    return TripleSystem("sl3-twisted", 9, triple)


def _span_carrier(mats: Sequence[Matrix], name: str) -> LtsCarrier:
    carrier = LtsCarrier(sl3_system(),
                         Subspace.span([m.flatten() for m in mats], 9), name)
    carrier.struct()
    return carrier


def sl3_full_carrier() -> LtsCarrier:
    """All traceless 3x3 matrices as a carrier of the twisted product."""
    basis = []
    m = Matrix.zeros(3, 3); m.rows[0][0] = ONE; m.rows[1][1] = -ONE; basis.append(m)
    m = Matrix.zeros(3, 3); m.rows[1][1] = ONE; m.rows[2][2] = -ONE; basis.append(m)
    for r in range(3):
        for c in range(3):
            if r != c:
                m = Matrix.zeros(3, 3)
                m.rows[r][c] = ONE
                basis.append(m)
    return _span_carrier(basis, "sl3")


def sl3_catalog(kind: str) -> LtsCarrier:
    """The four families: sphere (dim 2), sym5, col4, refl4; plus refl4's
    metric orthocomplement gotro, itself closed."""
    def eij(r: int, c: int, sign: int = 1) -> Matrix:
        m = Matrix.zeros(3, 3)
        m.rows[r][c] = Scalar.of(sign)
        return m

    if kind == "sphere":
        mats = [d_st(1, 0), d_st(0, 1)]
    elif kind == "sym5":
        mats = [eij(0, 0) - eij(1, 1), eij(1, 1) - eij(2, 2),
                eij(0, 1) + eij(1, 0), eij(0, 2) + eij(2, 0),
                eij(1, 2) + eij(2, 1)]
    elif kind == "col4":
        # first row zero: rows (0,0,0), (b1,b2,b3), (b0,b3,-b2)
        mats = [eij(2, 0), eij(1, 0), eij(1, 1) - eij(2, 2),
                eij(1, 2) + eij(2, 1)]
    elif kind == "refl4":
        # diag-plus-lower-block family (s1, 0, 0; 0, s2, s3; 0, s4, -s1-s2)
        mats = [eij(0, 0) - eij(2, 2), eij(1, 1) - eij(2, 2),
                eij(1, 2), eij(2, 1)]
    elif kind == "gotro":
        mats = [eij(0, 1), eij(0, 2), eij(1, 0), eij(2, 0)]
    else:
        raise ValueError(f"unknown catalogue kind {kind!r}")
    return _span_carrier(mats, kind)


def curvature_check(grid_range: int = 2) -> dict:
    """Exact verification of the sphere-family identities on an integer grid.

    For all s_i, t_i in {-grid_range..grid_range}:
      {d_{s1,t1}, d_{s2,t2}, d_{s3,t3}} = (2/3)(s1 t2 - s2 t1) d_{t3,-s3}
      <d1,d3> d2 - <d2,d3> d1 = -(28/3)(s1 t2 - s2 t1) d_{t3,-s3}
    With R = -{.,.,.} the curvature-form ratio is (-2/3)/(-28/3) = 1/14.
    """
    rng = range(-grid_range, grid_range + 1)
    mats = {(s, t): d_st(s, t) for s in rng for t in rng}
    two_thirds = Scalar.rational(2, 3)
    minus_28_3 = Scalar.rational(-28, 3)
    for (s1, t1), m1 in mats.items():
        for (s2, t2), m2 in mats.items():
            for (s3, t3), m3 in mats.items():
                cross_coeff = Scalar.of(s1 * t2 - s2 * t1)
                target = d_st(t3, -s3)
                trip = _sl3_triple_raw(m1, m2, m3)
                if trip != target.scale(two_thirds * cross_coeff):
                    return {"triple_coefficient_ok": False,
                            "witness": (s1, t1, s2, t2, s3, t3)}
                lhs = m2.scale(metric(m1, m3)) - m1.scale(metric(m2, m3))
                if lhs != target.scale(minus_28_3 * cross_coeff):
                    return {"metric_identity_ok": False,
                            "witness": (s1, t1, s2, t2, s3, t3)}
    ratio = Scalar.rational(-2, 3) / Scalar.rational(-28, 3)
    return {"triple_coefficient_ok": True, "metric_identity_ok": True,
            "curvature_over_metric_form": ratio}


def metric_gram_is_positive_definite(mats: Sequence[Matrix]) -> bool:
    """Leading principal minors of the Gram matrix are all positive."""
    n = len(mats)
    gram = Matrix([[metric(a, b) for b in mats] for a in mats])
    for k in range(1, n + 1):
        sub = Matrix([row[:k] for row in gram.rows[:k]])
        cp = char_poly(sub)
        det = cp[0] if k % 2 == 0 else -cp[0]
        if det.sign() <= 0:
            return False
    return True
