"""Associative subalgebras of (R^7, x) and the triple-system catalogue.

The even/odd split of the derivation algebra induced by an associative
3-dimensional subspace V, the order-two automorphism theta_V, the
annihilator subalgebras, the explicit 3-dimensional simple subalgebra of
the principal type, adaptedness tests, the four intersection families
T1-T4 inside the odd part, and the maximality probe.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .cross7 import basis_vector, cross
from .g2alg import G2, Frame, d_operator, derivation_algebra
from .linalg import Matrix, Subspace, Vec, char_poly, commutator, kernel, rref
from .lts import LtsCarrier, generated_subtriple, matrix_lts
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "AssocSubalg", "Grading", "PrincipalTds", "ProbeReport",
    "is_associative", "theta_map", "grading", "verify_grading",
    "annihilator_subalg", "principal_tds", "is_adapted", "maximal_lts",
    "intersection_profile", "maximality_probe", "random_assoc",
    "gl7_carrier", "mapping_space",
]

GL7 = matrix_lts(7)


def matrix_inverse(m: Matrix) -> Matrix:
    n, n2 = m.shape
    if n != n2:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)]
           for i, r in enumerate(m.rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix([r[n:] for r in red[:n]])


def is_associative(v: Subspace) -> bool:
    """dim 3 and the cross product of basis pairs stays inside."""
    if v.n != 7:
        raise ValueError("expected a subspace of R^7")
    if v.dim != 3:
        return False
    for a, b in combinations(v.rows, 2):
        if not v.contains(cross(a, b)):
            return False
    return True


class AssocSubalg:
    """A 3-dimensional subspace closed under the cross product."""

    __slots__ = ("space", "frame")

    def __init__(self, space: Subspace, frame: Frame | None = None):
        if not is_associative(space):
            raise ValueError("subspace is not a 3-dimensional associative subalgebra")
        if frame is not None:
            fspan = Subspace.span([frame.i, frame.j, frame.k], 7)
            if fspan != space:
                raise ValueError("frame does not span the subalgebra")
        self.space = space
        self.frame = frame
        # the induced split of R^7: V x V-perp <= V-perp, V-perp x V-perp <= V
        comp = space.complement()
        for a in space.rows:
            for b in comp.rows:
                if not comp.contains(cross(a, b)):
                    raise AssertionError("V x V-perp leaves the complement")
        for a in comp.rows:
            for b in comp.rows:
                if not space.contains(cross(a, b)):
                    raise AssertionError("V-perp x V-perp leaves V")

    @classmethod
    def from_frame(cls, frame: Frame) -> "AssocSubalg":
        return cls(Subspace.span([frame.i, frame.j, frame.k], 7), frame)

    @classmethod
    def standard(cls) -> "AssocSubalg":
        """V = <e1, e2, e4> with the desk frame (l = e3)."""
        return cls.from_frame(Frame.standard())

    @classmethod
    def from_pair(cls, u: Sequence[Scalar], w: Sequence[Scalar]) -> "AssocSubalg":
        """span{u, w, u x w}: associative for any independent u, w."""
        uxw = cross(list(u), list(w))
        space = Subspace.span([list(u), list(w), uxw], 7)
        if space.dim != 3:
            raise ValueError("vectors do not span a 3-dimensional subalgebra")
        return cls(space)

    def projection(self) -> Matrix:
        """Orthogonal projection onto V (exact; no normalisation needed)."""
        b = Matrix(self.space.rows)            # 3 x 7
        gram_inv = matrix_inverse(b @ b.transpose())
        return b.transpose() @ gram_inv @ b

    def theta(self) -> Matrix:
        """theta_V = 2 pi_V - 1: +id on V, -id on the complement."""
        return self.projection().scale(Scalar.of(2)) - Matrix.identity(7)

    def complement(self) -> Subspace:
        return self.space.complement()


def theta_map(v: AssocSubalg) -> Matrix:
    """theta_V, verified to be an order-two automorphism of the product."""
    th = v.theta()
    if th @ th != Matrix.identity(7):
        raise AssertionError("theta is not an involution")
    e = [basis_vector(i) for i in range(7)]
    for i in range(7):
        for j in range(i + 1, 7):
            lhs = th.apply(cross(e[i], e[j]))
            rhs = cross(th.apply(e[i]), th.apply(e[j]))
            if lhs != rhs:
                raise AssertionError("theta is not an algebra automorphism")
    return th


def random_assoc(rng: random.Random) -> AssocSubalg:
    """Random associative subalgebra from small-integer spanning vectors."""
    while True:
        u = [Scalar.of(rng.randint(-3, 3)) for _ in range(7)]
        w = [Scalar.of(rng.randint(-3, 3)) for _ in range(7)]
        try:
            return AssocSubalg.from_pair(u, w)
        except ValueError:
            continue


@dataclass
class Grading:
    """Commutant/anticommutant split of the derivation algebra under theta."""

    even: Subspace  # basis coordinates; dimension 6
    odd: Subspace   # basis coordinates; dimension 8


def _conjugation_matrix(g2: G2, th: Matrix) -> Matrix:
    cols = [g2.coords(th @ b @ th) for b in g2.basis]
    return Matrix.from_columns(cols)


def grading(v: AssocSubalg, g2: G2 | None = None) -> Grading:
    """Even/odd parts as eigenspaces of conjugation by theta_V."""
    g2 = g2 or derivation_algebra()
    conj = _conjugation_matrix(g2, v.theta())
    ident = Matrix.identity(g2.dim)
    even = kernel((conj - ident).rows, g2.dim)
    odd = kernel((conj + ident).rows, g2.dim)
    if even.dim + odd.dim != g2.dim:
        raise AssertionError("conjugation is not an involution on the algebra")
    return Grading(even, odd)


def verify_grading(g: Grading, g2: G2 | None = None) -> bool:
    """[even,even] <= even, [even,odd] <= odd, [odd,odd] <= even on bases."""
    g2 = g2 or derivation_algebra()
    emats = [g2.mat(r) for r in g.even.rows]
    omats = [g2.mat(r) for r in g.odd.rows]
    for a in emats:
        for b in emats:
            if not g.even.contains(g2.coords(commutator(a, b))):
                return False
        for b in omats:
            if not g.odd.contains(g2.coords(commutator(a, b))):
                return False
    for a in omats:
        for b in omats:
            if not g.even.contains(g2.coords(commutator(a, b))):
                return False
    return True


def mapping_space(source: Subspace, target: Subspace,
                  g2: G2 | None = None) -> Subspace:
    """{d : d(source) <= target} in basis coordinates, one linear solve."""
    g2 = g2 or derivation_algebra()
    rows = []
    for s in source.rows:
        images = [b.apply(s) for b in g2.basis]
        residuals = [target.reduce(img) for img in images]
        for comp in range(7):
            rows.append([residuals[t][comp] for t in range(g2.dim)])
    return kernel(rows, g2.dim)


def annihilator_subalg(u: Sequence[Scalar], g2: G2 | None = None) -> Subspace:
    """{d : d(u) = 0} in basis coordinates; a subalgebra of dimension 8."""
    g2 = g2 or derivation_algebra()
    u = [Scalar.of(x) for x in u]
    if not any(u):
        raise ValueError("annihilator of the zero vector is the whole algebra")
    images = [b.apply(u) for b in g2.basis]
    rows = [[images[t][r] for t in range(g2.dim)] for r in range(7)]
    return kernel(rows, g2.dim)


@dataclass
class PrincipalTds:
    """A 3-dimensional simple subalgebra acting irreducibly on R^7."""

    h1: Matrix
    h2: Matrix
    h3: Matrix
    space: Subspace  # basis coordinates
    frame: Frame

    def matrices(self) -> list[Matrix]:
        return [self.h1, self.h2, self.h3]


def _expected_char(s: Scalar) -> list[Scalar]:
    """lambda (lambda^2 + s)(lambda^2 + 4 s)(lambda^2 + 9 s), ascending."""
    c1 = Scalar.of(36) * s * s * s
    c3 = Scalar.of(49) * s * s
    c5 = Scalar.of(14) * s
    return [ZERO, c1, ZERO, c3, ZERO, c5, ZERO, ONE]


def principal_eigenstructure(m: Matrix) -> Scalar | None:
    """The scale s if char(m) = lambda prod(lambda^2 + k^2 s), else None."""
    cp = char_poly(m)
    if len(cp) != 8:
        return None
    s = cp[5] / Scalar.of(14)
    if s.sign() <= 0:
        return None
    return s if cp == _expected_char(s) else None


def principal_tds(frame: Frame, g2: G2 | None = None) -> PrincipalTds:
    """The explicit principal triple built from the two-argument derivations.

    Construction invariants are verified and violations abort loudly; this
    guards against transcription errors in the radical coefficients.
    """
    g2 = g2 or derivation_algebra()
    i, j, k, l = frame.i, frame.j, frame.k, frame.l
    ixl = cross(i, l)
    h1 = (d_operator(l, ixl).scale(Scalar.rational(4, 6))
          + d_operator(j, k).scale(Scalar.rational(5, 6)))
    h2 = (d_operator(i, ixl).scale(Scalar(0, 1, 0, 0, 4))        # r6/4
          + (d_operator(l, j) + d_operator(ixl, k)).scale(Scalar(0, 0, 1, 0, 12)))  # r10/12
    h3 = (d_operator(i, l).scale(Scalar(0, -1, 0, 0, 4))
          + (d_operator(l, k) - d_operator(ixl, j)).scale(Scalar(0, 0, 1, 0, 12)))
    hs = [h1, h2, h3]
    for idx in range(3):
        if commutator(hs[idx], hs[(idx + 1) % 3]) != hs[(idx + 2) % 3]:
            raise AssertionError(f"[h{idx+1}, h{idx+2}] != h{idx+3}")
    if principal_eigenstructure(h1) != ONE:
        raise AssertionError("h1 does not have the expected eigenvalue ladder")
    space = g2.subspace_from_matrices(hs)
    if space.dim != 3:
        raise AssertionError("generators are linearly dependent")
    if g2.normalizer(space) != space:
        raise AssertionError("the subalgebra is not self-normalizing")
    return PrincipalTds(h1, h2, h3, space, frame)


def _is_subalgebra(space: Subspace, g2: G2) -> bool:
    mats = [g2.mat(r) for r in space.rows]
    for a, b in combinations(mats, 2):
        if not space.contains(g2.coords(commutator(a, b))):
            return False
    return True


class AdaptednessError(AssertionError):
    """The homogeneity and intersection-dimension criteria disagreed."""


def is_adapted(h: Subspace, v: AssocSubalg, g2: G2 | None = None) -> bool:
    """Whether the 3-dimensional principal subalgebra h splits along V's grading.

    Both characterisations are computed: homogeneity (the odd projection
    (d - theta d theta)/2 stays inside h) and the intersection dimension
    dim(h cap odd) = 2.  They must agree; a disagreement is an internal
    consistency failure, not a result.
    """
    g2 = g2 or derivation_algebra()
    if h.dim != 3 or not _is_subalgebra(h, g2):
        raise ValueError("adaptedness is defined for 3-dimensional subalgebras")
    mats = [g2.mat(r) for r in h.rows]
    if not any(principal_eigenstructure(m) for m in mats):
        raise ValueError("subalgebra fails the principal eigenvalue-ladder check")
    th = v.theta()
    half = Scalar.rational(1, 2)
    homogeneous = True
    for m in mats:
        p = (m - th @ m @ th).scale(half)
        if not h.contains(g2.coords(p)):
            homogeneous = False
            break
    odd = grading(v, g2).odd
    by_dimension = h.intersect(odd).dim == 2
    if homogeneous != by_dimension:
        raise AdaptednessError(
            f"homogeneity says {homogeneous}, intersection dimension says {by_dimension}")
    return homogeneous


def gl7_carrier(space14: Subspace, g2: G2, name: str) -> LtsCarrier:
    """Carrier over flattened gl(7) from a coordinate subspace."""
    flat = [g2.mat(r).flatten() for r in space14.rows]
    return LtsCarrier(GL7, Subspace.span(flat, 49), name)


_EXPECTED_DIMS = {"T1": 2, "T2": 5, "T3": 4, "T4": 4}


def maximal_lts(v: AssocSubalg, kind: str, *, tds: PrincipalTds | None = None,
                l: Sequence[Scalar] | None = None,
                i: Sequence[Scalar] | None = None,
                w: AssocSubalg | None = None,
                g2: G2 | None = None) -> LtsCarrier:
    """The four maximal families inside the odd part, as closed carriers.

    T1: h cap odd for an adapted principal subalgebra h.
    T2: {d in odd : d(l) = 0} for 0 != l in the orthogonal complement of V.
    T3: {d in odd : d(i) = 0} for 0 != i in V.
    T4: even(W) cap odd(V) for an associative W meeting both V and its
        complement.
    """
    g2 = g2 or derivation_algebra()
    odd = grading(v, g2).odd
    if kind == "T1":
        if tds is None:
            raise ValueError("kind T1 needs the principal subalgebra")
        if not is_adapted(tds.space, v, g2):
            raise ValueError("principal subalgebra is not adapted to V")
        space = tds.space.intersect(odd)
    elif kind == "T2":
        if l is None or not any(l):
            raise ValueError("kind T2 needs a nonzero vector")
        if not v.complement().contains(list(l)):
            raise ValueError("kind T2 needs the vector orthogonal to V")
        space = annihilator_subalg(l, g2).intersect(odd)
    elif kind == "T3":
        if i is None or not any(i):
            raise ValueError("kind T3 needs a nonzero vector")
        if not v.space.contains(list(i)):
            raise ValueError("kind T3 needs the vector inside V")
        space = annihilator_subalg(i, g2).intersect(odd)
    elif kind == "T4":
        if w is None:
            raise ValueError("kind T4 needs an associative subalgebra W")
        if w.space.intersect(v.space).dim == 0:
            raise ValueError("kind T4 needs W meeting V")
        if w.space.intersect(v.complement()).dim == 0:
            raise ValueError("kind T4 needs W meeting the complement of V")
        space = grading(w, g2).even.intersect(odd)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if space.dim != _EXPECTED_DIMS[kind]:
        raise AssertionError(
            f"{kind} has dimension {space.dim}, expected {_EXPECTED_DIMS[kind]}")
    carrier = gl7_carrier(space, g2, kind)
    carrier.struct()  # closure certificate
    return carrier


def intersection_profile(v: AssocSubalg, w: AssocSubalg) -> tuple[int, int, int, int]:
    """(dim V cap W, dim V cap W-perp, dim V-perp cap W, dim V-perp cap W-perp)."""
    vp = v.complement()
    wp = w.complement()
    return (v.space.intersect(w.space).dim,
            v.space.intersect(wp).dim,
            vp.intersect(w.space).dim,
            vp.intersect(wp).dim)


@dataclass
class ProbeReport:
    trials: int
    passes: int
    failures: list[tuple[Vec, int]]  # (adjoined coordinates, closure dimension)
    seed_note: str

    def all_passed(self) -> bool:
        return self.passes == self.trials and not self.failures


def maximality_probe(t: LtsCarrier, ambient: LtsCarrier, trials: int,
                     rng: random.Random,
                     extra_candidates: Sequence[Vec] = ()) -> ProbeReport:
    """Adjoin elements outside T and close; maximality predicts full closure.

    Random candidates have small integer coordinates (range +-3) in the
    ambient basis, rejecting members of T.  Extra candidates, when given,
    are flat ambient vectors probed before the random ones.
    """
    if not ambient.space.contains_subspace(t.space):
        raise ValueError("probe needs T inside the ambient carrier")
    if t.space.dim >= ambient.space.dim:
        raise ValueError("probe needs a proper subsystem")
    passes = 0
    failures: list[tuple[Vec, int]] = []
    candidates: list[Vec] = [list(c) for c in extra_candidates]
    produced = 0
    while produced < trials:
        if candidates:
            x = candidates.pop(0)
        else:
            coords = [Scalar.of(rng.randint(-3, 3)) for _ in range(ambient.dim)]
            x = ambient.element(coords)
        if t.space.contains(x):
            continue
        produced += 1
        seed = Subspace.span(t.space.rows + [x], t.system.dim)
        closed = generated_subtriple(seed, ambient)
        if closed == ambient.space:
            passes += 1
        else:
            failures.append((x, closed.dim))
    return ProbeReport(trials, passes, failures,
                       seed_note="small-integer coordinates, range +-3")
