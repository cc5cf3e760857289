import random

import pytest

from crossg2 import lts, matmodel
from crossg2.cross7 import basis_vector
from crossg2.linalg import Matrix, Subspace
from crossg2.scalar import ONE, ZERO, Scalar

E = [basis_vector(i) for i in range(7)]


@pytest.fixture(scope="module")
def proj(v_std):
    return matmodel.projection_onto(v_std.space)


@pytest.fixture(scope="module")
def tangent(proj, frame):
    return matmodel.ms_tangent(proj, frame)


def test_projection_invariants(proj):
    p = proj.mat
    assert p @ p == p
    assert p == p.transpose()
    assert p.trace() == Scalar.of(3)
    with pytest.raises(ValueError):
        matmodel.Projection(Matrix.identity(7))


def test_in_ms_prime(proj):
    assert matmodel.in_ms_prime(proj)
    bad = matmodel.projection_onto(Subspace.span([E[0], E[1], E[2]], 7))
    assert not matmodel.in_ms_prime(bad)


def test_gr3_tangent(proj):
    t = matmodel.gr3_tangent(proj)
    assert t.dim == 12
    fixed = proj.fixed_space()
    kerp = proj.kernel_space()
    for row in t.rows:
        d = Matrix.from_flat(row, 7, 7)
        assert d == d.transpose()
        assert d.trace() == ZERO
        for fv in fixed.rows:
            assert kerp.contains(d.apply(fv))


def test_ms_tangent_dim_and_template(tangent, frame):
    assert tangent.dim == 8
    for row in tangent.rows:
        d = Matrix.from_flat(row, 7, 7)
        rm = matmodel.row_matrix(d, frame)
        assert matmodel.matches_template(rm)
        assert matmodel.from_row_matrix(rm, frame) == d


def test_dk_closed_form(tangent, frame):
    # d(k) = (a2-b1)v0 + (a3+b0)v1 - (a0-b3)v2 - (a1+b2)v3
    vs = matmodel.frame_v_basis(frame)
    for row in tangent.rows:
        d = Matrix.from_flat(row, 7, 7)
        rm = matmodel.row_matrix(d, frame)
        a, b = rm.rows[0], rm.rows[1]
        expected = [ZERO] * 7
        for coeff, v in zip([a[2] - b[1], a[3] + b[0], -(a[0] - b[3]),
                             -(a[1] + b[2])], vs):
            expected = [u + coeff * w for u, w in zip(expected, v)]
        assert d.apply(frame.k) == expected


def test_v_basis_in_standard_frame(frame):
    vs = matmodel.frame_v_basis(frame)
    assert vs[0] == E[2]
    assert vs[1] == E[6]
    assert vs[2] == E[4]
    assert vs[3] == [-t for t in E[5]]


def test_m34_triple_examples():
    a = Matrix.zeros(3, 4); a.rows[0][0] = ONE      # e11
    b = Matrix.zeros(3, 4); b.rows[0][1] = ONE      # e12
    assert matmodel.m34_triple(a, b, b) == a
    c = Matrix.zeros(3, 4); c.rows[2][2] = ONE
    assert matmodel.m34_triple(a, a, c).is_zero()


def test_m34_template_basis_closes():
    basis = matmodel.m34_template_basis()
    space = Subspace.span([m.flatten() for m in basis], 12)
    assert space.dim == 8
    carrier = lts.LtsCarrier(matmodel.m34_system(), space)
    assert carrier.is_closed()


def test_row_matrix_intertwines_m34(tangent, frame):
    rng = random.Random(3)
    mats = [Matrix.from_flat(r, 7, 7) for r in tangent.rows]
    rms = [matmodel.row_matrix(d, frame) for d in mats]
    for _ in range(30):
        x, y, z = (rng.randrange(8) for _ in range(3))
        lhs = matmodel.row_matrix(lts.triple_in_lie(mats[x], mats[y], mats[z]),
                                  frame)
        assert lhs == matmodel.m34_triple(rms[x], rms[y], rms[z])


def test_lift(ws):
    lift = ws.lift
    assert lift.sign == -1
    d = lift.basis[0]
    lifted = lift.lift(d)
    for f in (lift.frame.i, lift.frame.j, lift.frame.k):
        assert lifted.apply(f) == d.apply(f)
    assert ws.g2.contains(lifted)


def test_alpha():
    sym = Matrix([[ONE, ONE, ZERO], [ONE, ZERO, ONE], [ZERO, ONE, -ONE]])
    assert matmodel.alpha(sym) == [ZERO, ZERO, ZERO]
    e12 = Matrix.zeros(3, 3); e12.rows[0][1] = ONE
    assert matmodel.alpha(e12) == [ZERO, ZERO, ONE]
    e23 = Matrix.zeros(3, 3); e23.rows[1][2] = ONE
    e32 = Matrix.zeros(3, 3); e32.rows[2][1] = ONE
    assert matmodel.alpha(e23 - e32) == [Scalar.of(2), ZERO, ZERO]


def test_sl3_triple_rules():
    m = matmodel.d_st(1, 0)
    m2 = matmodel.d_st(0, 1)
    assert matmodel.sl3_triple(m, m, m2).is_zero()
    with pytest.raises(ValueError):
        matmodel.sl3_triple(Matrix.identity(3), m, m2)


def test_sphere_family_coefficient():
    # {d_s1t1, d_s2t2, d_s3t3} = (2/3)(s1 t2 - s2 t1) d_{t3, -s3}
    two_thirds = Scalar.rational(2, 3)
    for s1, t1, s2, t2, s3, t3 in ((1, 0, 0, 1, 1, 0), (2, -1, 1, 1, 0, 2),
                                   (1, 1, 1, 1, 2, 1)):
        lhs = matmodel.sl3_triple(matmodel.d_st(s1, t1), matmodel.d_st(s2, t2),
                                  matmodel.d_st(s3, t3))
        coeff = two_thirds * Scalar.of(s1 * t2 - s2 * t1)
        assert lhs == matmodel.d_st(t3, -s3).scale(coeff)


def test_to_sl3_symmetric_image():
    # a0 = b0 = 0 with a2 = b1 gives a symmetric traceless image
    a1, a2, a3 = Scalar.of(2), Scalar.of(-1), Scalar.of(3)
    b2, b3 = Scalar.of(5), Scalar.of(-2)
    rm = Matrix([[ZERO, a1, a2, a3],
                 [ZERO, a2, b2, b3],
                 [a2 - a2, a3 + ZERO, b3 - ZERO, -a1 - b2]])
    assert matmodel.matches_template(rm)
    m = matmodel.to_sl3(rm)
    assert m == m.transpose()
    assert m.trace() == ZERO


def test_to_sl3_roundtrip(tangent, frame):
    for row in tangent.rows:
        rm = matmodel.row_matrix(Matrix.from_flat(row, 7, 7), frame)
        m = matmodel.to_sl3(rm)
        assert matmodel.from_sl3(m) == rm
        assert matmodel.to_sl3(matmodel.from_sl3(m)) == m
    bad = Matrix.zeros(3, 4)
    bad.rows[2][0] = ONE
    with pytest.raises(ValueError):
        matmodel.to_sl3(bad)


def test_metric_examples():
    e12 = Matrix.zeros(3, 3); e12.rows[0][1] = ONE
    e21 = Matrix.zeros(3, 3); e21.rows[1][0] = ONE
    assert matmodel.metric(e12 + e21, e12 - e21) == ZERO
    m = matmodel.d_st(1, 1)
    assert matmodel.metric(m, m).sign() > 0
    basis = [Matrix.from_flat(r, 3, 3)
             for r in matmodel.sl3_full_carrier().space.rows]
    assert matmodel.metric_gram_is_positive_definite(basis)


def test_curvature_check():
    report = matmodel.curvature_check(1)
    assert report["triple_coefficient_ok"]
    assert report["metric_identity_ok"]
    assert report["curvature_over_metric_form"] == Scalar.rational(1, 14)


def test_sl3_catalog_dims_and_closure():
    for kind, dim in (("sphere", 2), ("sym5", 5), ("col4", 4), ("refl4", 4),
                      ("gotro", 4)):
        c = matmodel.sl3_catalog(kind)
        assert c.dim == dim
        assert c.is_closed()
    with pytest.raises(ValueError):
        matmodel.sl3_catalog("nope")


def test_refl4_orthogonal_to_gotro():
    refl = matmodel.sl3_catalog("refl4")
    gotro = matmodel.sl3_catalog("gotro")
    for a in refl.space.rows:
        for b in gotro.space.rows:
            assert matmodel.metric(Matrix.from_flat(a, 3, 3),
                                   Matrix.from_flat(b, 3, 3)) == ZERO


def test_sphere_matches_adapted_intersection(ws, frame):
    t1 = ws.t_carrier("T1")
    images = []
    for row in t1.space.rows:
        d = Matrix.from_flat(row, 7, 7)
        m = matmodel.to_sl3(matmodel.row_matrix(d, frame))
        s = m.rows[0][0] / Scalar.of(-2)
        t = m.rows[1][2]
        assert m == matmodel.d_st(s, t)
        images.append(m.flatten())
    assert Subspace.span(images, 9) == matmodel.sl3_catalog("sphere").space
