import random

import pytest

from crossg2.linalg import (Matrix, Subspace, char_poly, commutator, kernel,
                            poly_from_roots_squared, rank, solve)
from crossg2.scalar import ONE, ZERO, Scalar

def rand_rows(rng, r, c):
    return [[Scalar.of(rng.randint(-4, 4)) for _ in range(c)] for _ in range(r)]


def test_kernel_examples():
    assert kernel([[ZERO] * 3 for _ in range(3)], 3).dim == 3
    assert kernel(Matrix.identity(7).rows, 7).dim == 0
    sel = [[ONE] + [ZERO] * 6]
    ker = kernel(sel, 7)
    assert ker.dim == 6
    e2 = [ZERO, ONE] + [ZERO] * 5
    assert ker.contains(e2)


def test_rank_nullity():
    rng = random.Random(11)
    for _ in range(25):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = rand_rows(rng, r, c)
        assert rank(rows) + kernel(rows, c).dim == c


def test_subspace_examples():
    e = [[ONE if i == j else ZERO for j in range(7)] for i in range(7)]
    u = Subspace.span([e[0], e[1]], 7)
    w = Subspace.span([e[1], e[2]], 7)
    assert u.intersect(w) == Subspace.span([e[1]], 7)
    assert Subspace.span([e[0]], 7).sum(Subspace.span([e[1]], 7)) == u
    assert u.contains([a + b for a, b in zip(e[0], e[1])])
    assert not u.contains(e[2])


def test_subspace_dimension_law():
    rng = random.Random(5)
    for _ in range(25):
        a = Subspace.span(rand_rows(rng, rng.randint(0, 4), 7), 7)
        b = Subspace.span(rand_rows(rng, rng.randint(0, 4), 7), 7)
        assert a.dim + b.dim == a.sum(b).dim + a.intersect(b).dim


def test_canonical_idempotence():
    rng = random.Random(9)
    for _ in range(10):
        s = Subspace.span(rand_rows(rng, 3, 7), 7)
        assert Subspace.span(s.rows, 7) == s


def test_complement():
    rng = random.Random(3)
    for _ in range(10):
        s = Subspace.span(rand_rows(rng, rng.randint(0, 5), 7), 7)
        c = s.complement()
        assert s.dim + c.dim == 7
        for u in s.rows:
            for v in c.rows:
                acc = ZERO
                for a, b in zip(u, v):
                    acc = acc + a * b
                assert acc == ZERO


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        Subspace.span([[ONE, ZERO]], 2).sum(Subspace.span([[ONE]], 1))


def test_solve():
    a = [[ONE, ONE], [ONE, -ONE]]
    x = solve(a, [Scalar.of(3), ONE])
    assert x == [Scalar.of(2), ONE]
    assert solve([[ONE, ONE], [ONE, ONE]], [ZERO, ONE]) is None


def test_char_poly_examples():
    assert char_poly(Matrix.identity(2)) == [ONE, Scalar.of(-2), ONE]
    d = Matrix([[ZERO, ZERO, ZERO], [ZERO, Scalar.of(2), ZERO],
                [ZERO, ZERO, Scalar.of(-2)]])
    assert char_poly(d) == [ZERO, Scalar.of(-4), ZERO, ONE]


def test_char_poly_product_helper():
    # lambda (l^2+1)(l^2+4)(l^2+9) = l^7 + 14 l^5 + 49 l^3 + 36 l
    assert poly_from_roots_squared([1, 4, 9]) == [
        ZERO, Scalar.of(36), ZERO, Scalar.of(49), ZERO, Scalar.of(14),
        ZERO, ONE]


def test_char_poly_is_invariant_under_similarity():
    rng = random.Random(2)
    a = Matrix(rand_rows(rng, 4, 4))
    # conjugate by an invertible integer matrix with unit determinant
    p = Matrix([[ONE, ONE, ZERO, ZERO], [ZERO, ONE, ZERO, ZERO],
                [ZERO, ZERO, ONE, Scalar.of(2)], [ZERO, ZERO, ZERO, ONE]])
    pinv = Matrix([[ONE, -ONE, ZERO, ZERO], [ZERO, ONE, ZERO, ZERO],
                   [ZERO, ZERO, ONE, Scalar.of(-2)], [ZERO, ZERO, ZERO, ONE]])
    assert p @ pinv == Matrix.identity(4)
    assert char_poly(p @ a @ pinv) == char_poly(a)


def test_matrix_ops():
    a = Matrix([[ONE, Scalar.of(2)], [ZERO, ONE]])
    b = Matrix([[ONE, ZERO], [ONE, ONE]])
    assert (a @ b).rows[0][0] == Scalar.of(3)
    assert commutator(a, a).is_zero()
    assert a.transpose().rows[0][1] == ZERO
    assert a.apply([ONE, ONE]) == [Scalar.of(3), ONE]
    assert Matrix.from_flat(a.flatten(), 2, 2) == a
