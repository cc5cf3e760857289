import random

import pytest

from crossg2 import catalog, lts
from crossg2.cross7 import basis_vector
from crossg2.g2alg import lambda_operator, rho_operator
from crossg2.linalg import Matrix, Subspace, char_poly, commutator, is_zero_vec
from crossg2.scalar import ONE, ZERO, Scalar

E = [basis_vector(i) for i in range(7)]


def test_is_associative():
    assert catalog.is_associative(Subspace.span([E[0], E[1], E[3]], 7))
    assert not catalog.is_associative(Subspace.span([E[0], E[1], E[2]], 7))
    assert not catalog.is_associative(Subspace.span([E[0], E[1]], 7))


def test_assoc_from_pair():
    rng = random.Random(13)
    for _ in range(10):
        v = catalog.random_assoc(rng)
        assert catalog.is_associative(v.space)
    with pytest.raises(ValueError):
        catalog.AssocSubalg.from_pair(E[0], E[0])


def test_theta(v_std):
    th = catalog.theta_map(v_std)
    assert th.apply(E[0]) == E[0]
    assert th.apply(E[2]) == [-t for t in E[2]]
    assert th @ th == Matrix.identity(7)
    assert th == v_std.projection().scale(Scalar.of(2)) - Matrix.identity(7)


def test_grading(v_std, g2, grading_std, frame):
    assert grading_std.even.dim == 6
    assert grading_std.odd.dim == 8
    assert catalog.verify_grading(grading_std, g2)
    mats = [lambda_operator(a, frame) for a in (frame.i, frame.j, frame.k)]
    mats += [rho_operator(a, frame) for a in (frame.i, frame.j, frame.k)]
    assert g2.subspace_from_matrices(mats) == grading_std.even


def test_annihilator(g2):
    ann = catalog.annihilator_subalg(E[2], g2)
    assert ann.dim == 8
    for r in ann.rows:
        assert is_zero_vec(g2.mat(r).apply(E[2]))
    assert catalog.annihilator_subalg([Scalar.of(2) * t for t in E[2]], g2) == ann
    with pytest.raises(ValueError):
        catalog.annihilator_subalg([ZERO] * 7, g2)


def test_principal_tds(tds, g2, grading_std):
    hs = tds.matrices()
    for i in range(3):
        assert commutator(hs[i], hs[(i + 1) % 3]) == hs[(i + 2) % 3]
    assert char_poly(tds.h1) == [ZERO, Scalar.of(36), ZERO, Scalar.of(49),
                                 ZERO, Scalar.of(14), ZERO, ONE]
    assert g2.normalizer(tds.space) == tds.space
    assert grading_std.even.contains(g2.coords(tds.h1))
    assert grading_std.odd.contains(g2.coords(tds.h2))
    assert grading_std.odd.contains(g2.coords(tds.h3))


def test_is_adapted(tds, v_std, g2, grading_std):
    assert catalog.is_adapted(tds.space, v_std, g2)
    assert tds.space.intersect(grading_std.odd).dim == 2
    # a non-adapted associative subalgebra exists among random draws
    rng = random.Random(100)
    found = False
    for _ in range(60):
        v = catalog.random_assoc(rng)
        if not catalog.is_adapted(tds.space, v, g2):
            found = True
            break
    assert found


def test_is_adapted_rejects_non_principal(v_std, g2, frame):
    lam_span = g2.subspace_from_matrices(
        [lambda_operator(a, frame) for a in (frame.i, frame.j, frame.k)])
    with pytest.raises(ValueError):
        catalog.is_adapted(lam_span, v_std, g2)


def test_maximal_lts_dims(ws):
    for kind, dim in (("T1", 2), ("T2", 5), ("T3", 4), ("T4", 4)):
        carrier = ws.t_carrier(kind)
        assert carrier.dim == dim
        assert carrier.is_closed()
        assert lts.check_axioms(carrier).all_pass()


def test_maximal_lts_t1_is_span_of_h2_h3(ws, tds):
    t1 = ws.t_carrier("T1")
    expected = Subspace.span([tds.h2.flatten(), tds.h3.flatten()], 49)
    assert t1.space == expected


def test_maximal_lts_preconditions(v_std, g2, frame):
    with pytest.raises(ValueError):
        catalog.maximal_lts(v_std, "T2", l=frame.i, g2=g2)   # i not in V-perp
    with pytest.raises(ValueError):
        catalog.maximal_lts(v_std, "T3", i=frame.l, g2=g2)   # l not in V
    w_disjoint = catalog.AssocSubalg.from_pair(
        [x + y for x, y in zip(E[2], E[0])], E[4])
    prof = catalog.intersection_profile(v_std, w_disjoint)
    if prof[0] == 0:
        with pytest.raises(ValueError):
            catalog.maximal_lts(v_std, "T4", w=w_disjoint, g2=g2)
    with pytest.raises(ValueError):
        catalog.maximal_lts(v_std, "bogus")


def test_envelopes(ws):
    dims = {kind: lts.envelope_dim(ws.t_carrier(kind))
            for kind in ("T1", "T2", "T3", "T4")}
    assert dims == {"T1": 3, "T2": 8, "T3": 8, "T4": 6}


def test_intersection_profile(ws, v_std):
    assert catalog.intersection_profile(v_std, v_std) == (3, 0, 0, 4)
    assert catalog.intersection_profile(v_std, ws.w_std) == (1, 2, 2, 2)
    rng = random.Random(77)
    allowed = {(3, 0, 0, 4), (1, 2, 2, 2), (1, 0, 0, 2), (0, 1, 1, 1),
               (0, 0, 0, 1)}
    for _ in range(50):
        w = catalog.random_assoc(rng)
        assert catalog.intersection_profile(v_std, w) in allowed


def test_pasapa_equivalence(v_std):
    thv = v_std.theta()
    rng = random.Random(31)
    for _ in range(30):
        w = catalog.random_assoc(rng)
        if w.space == v_std.space:
            continue
        thw = w.theta()
        commute = thv @ thw == thw @ thv
        invariant = all(v_std.space.contains(thw.apply(r))
                        for r in v_std.space.rows)
        assert commute == invariant


def test_maximality_probe(ws):
    rng = random.Random(42)
    report = catalog.maximality_probe(ws.t_carrier("T2"), ws.m4v, 10, rng)
    assert report.all_passed()
    assert report.trials == 10 and report.passes == 10


def test_probe_determinism(ws):
    r1 = catalog.maximality_probe(ws.t_carrier("T1"), ws.m4v, 5,
                                  random.Random(99))
    r2 = catalog.maximality_probe(ws.t_carrier("T1"), ws.m4v, 5,
                                  random.Random(99))
    assert (r1.passes, r1.failures) == (r2.passes, r2.failures)


def test_probe_finds_non_maximal_witness(ws, tds):
    line = lts.LtsCarrier(catalog.GL7,
                          Subspace.span([tds.h2.flatten()], 49), "line")
    report = catalog.maximality_probe(line, ws.m4v, 1, random.Random(0),
                                      extra_candidates=[tds.h3.flatten()])
    assert not report.all_passed()
    assert report.failures[0][1] == 2


def test_probe_rejects_full_carrier(ws):
    with pytest.raises(ValueError):
        catalog.maximality_probe(ws.m4v, ws.m4v, 1, random.Random(0))
