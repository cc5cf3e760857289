import random
from itertools import combinations

import pytest

from crossg2.cross7 import basis_vector, cross
from crossg2.g2alg import Frame, d_operator, lambda_operator, rho_operator
from crossg2.linalg import Matrix, Subspace, commutator, is_zero_vec
from crossg2.scalar import ZERO, Scalar

E = [basis_vector(i) for i in range(7)]


def test_dimension_and_skewness(g2):
    assert g2.dim == 14
    for b in g2.basis:
        assert (b + b.transpose()).is_zero()


def test_leibniz_on_basis(g2):
    for b in g2.basis:
        for i, j in combinations(range(7), 2):
            lhs = b.apply(cross(E[i], E[j]))
            rhs = [u + v for u, v in zip(cross(b.apply(E[i]), E[j]),
                                         cross(E[i], b.apply(E[j])))]
            assert lhs == rhs


def test_membership_and_coords(g2):
    rng = random.Random(2)
    coords = [Scalar.of(rng.randint(-3, 3)) for _ in range(14)]
    m = g2.mat(coords)
    assert g2.contains(m)
    assert g2.coords(m) == coords
    assert not g2.contains(Matrix.identity(7))
    with pytest.raises(ValueError):
        g2.coords(Matrix.identity(7))


def test_bracket_closure(g2):
    sc = g2.bracket_coords()
    for i in range(14):
        assert all(not x for x in sc[i][i])
    m = commutator(g2.basis[0], g2.basis[5])
    assert g2.contains(m)


def test_d_operator_examples(g2):
    rng = random.Random(6)
    x = [Scalar.of(rng.randint(-3, 3)) for _ in range(7)]
    assert d_operator(x, x).is_zero()
    d12 = d_operator(E[0], E[1])
    assert d12.apply(E[0]) == [Scalar.of(4) * t for t in E[1]]
    assert g2.contains(d12)


def test_d_cyclic_sum():
    for i, j, k in combinations(range(7), 3):
        s = (d_operator(cross(E[i], E[j]), E[k])
             + d_operator(cross(E[j], E[k]), E[i])
             + d_operator(cross(E[k], E[i]), E[j]))
        assert s.is_zero()


def test_frame_validation():
    fr = Frame.standard()
    assert fr.k == E[3]
    with pytest.raises(ValueError):
        Frame(E[0], E[0], E[2])            # repeated vector: not orthonormal
    with pytest.raises(ValueError):
        Frame(E[0], E[1], E[3])            # l inside V


def test_lambda_rho_values_and_brackets(g2, frame):
    lam = {name: lambda_operator(v, frame)
           for name, v in (("i", frame.i), ("j", frame.j), ("k", frame.k))}
    rho = {name: rho_operator(v, frame)
           for name, v in (("i", frame.i), ("j", frame.j), ("k", frame.k))}
    assert is_zero_vec(lam["i"].apply(frame.i))
    assert lam["i"].apply(frame.l) == cross(frame.i, frame.l)
    assert rho["i"].apply(frame.j) == [Scalar.of(2) * t for t in frame.k]
    two = Scalar.of(2)
    for m in list(lam.values()) + list(rho.values()):
        assert g2.contains(m)
    vecs = {"i": frame.i, "j": frame.j, "k": frame.k}
    for na, a in vecs.items():
        for nb, b in vecs.items():
            axb = cross(a, b)
            assert commutator(lam[na], lam[nb]) == lambda_operator(axb, frame).scale(two)
            assert commutator(lam[na], rho[nb]).is_zero()
            assert commutator(rho[na], rho[nb]) == rho_operator(axb, frame).scale(two)


def test_lambda_rejects_outside_v(frame):
    with pytest.raises(ValueError):
        lambda_operator(frame.l, frame)


def test_killing(g2, tds):
    kf = g2.killing_form()
    assert kf == kf.transpose()
    assert g2.killing_trace_ratio() == Scalar.of(4)
    d = g2.basis[3]
    assert g2.killing(d, d).sign() < 0
    zero = Matrix.zeros(7, 7)
    assert g2.killing(zero, d) == ZERO


def test_normalizer_and_centralizer(g2, tds):
    full = Subspace.full(14)
    assert g2.normalizer(full) == full
    h = tds.space
    assert g2.normalizer(h) == h
    assert g2.centralizer(h).dim == 0
    assert g2.centralizer(full).dim == 0   # the algebra has trivial centre
