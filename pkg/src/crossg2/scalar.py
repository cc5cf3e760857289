"""Exact arithmetic in the real field Q(sqrt6, sqrt10).

Elements are written on the fixed basis {1, r6, r10, r15} where
r6 = sqrt(6), r10 = sqrt(10) and r15 = sqrt(15) = r6*r10/2.  The basis
is closed under multiplication:

    r6*r10 = 2*r15,   r6*r15 = 3*r10,   r10*r15 = 5*r6.

Internally a value is stored as four integer numerators over one common
positive denominator, reduced so that gcd(na, nb, nc, nd, q) = 1.  This
keeps bulk arithmetic (structure-constant tensors, closure loops) fast
while staying exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

__all__ = ["Scalar", "ZERO", "ONE", "SQRT6", "SQRT10", "SQRT15"]


def _gcd5(a: int, b: int, c: int, d: int, e: int) -> int:
    g = gcd(a, b)
    if g == 1:
        return 1
    g = gcd(g, c)
    if g == 1:
        return 1
    g = gcd(g, d)
    if g == 1:
        return 1
    return gcd(g, e)


class Scalar:
    """An element na/q + (nb/q)*r6 + (nc/q)*r10 + (nd/q)*r15."""

    __slots__ = ("na", "nb", "nc", "nd", "q")

    def __init__(self, na: int, nb: int, nc: int, nd: int, q: int = 1):
        if q == 0:
            raise ZeroDivisionError("zero denominator")
        if q < 0:
            na, nb, nc, nd, q = -na, -nb, -nc, -nd, -q
        g = _gcd5(abs(na), abs(nb), abs(nc), abs(nd), q)
        if g > 1:
            na //= g; nb //= g; nc //= g; nd //= g; q //= g
        self.na = na; self.nb = nb; self.nc = nc; self.nd = nd; self.q = q

    # -- constructors -------------------------------------------------

    @classmethod
    def of(cls, x: "Scalar | int | Fraction") -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls(x, 0, 0, 0, 1)
        if isinstance(x, Fraction):
            return cls(x.numerator, 0, 0, 0, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    @classmethod
    def rational(cls, p: int, q: int = 1) -> "Scalar":
        return cls(p, 0, 0, 0, q)

    @classmethod
    def from_coeffs(cls, a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> "Scalar":
        q = 1
        for f in (a, b, c, d):
            q = q * f.denominator // gcd(q, f.denominator)
        return cls(a.numerator * (q // a.denominator),
                   b.numerator * (q // b.denominator),
                   c.numerator * (q // c.denominator),
                   d.numerator * (q // d.denominator), q)

    # -- rational coordinates on {1, r6, r10, r15} --------------------

    @property
    def a(self) -> Fraction:
        return Fraction(self.na, self.q)

    @property
    def b(self) -> Fraction:
        return Fraction(self.nb, self.q)

    @property
    def c(self) -> Fraction:
        return Fraction(self.nc, self.q)

    @property
    def d(self) -> Fraction:
        return Fraction(self.nd, self.q)

    # -- ring operations ----------------------------------------------

    def __add__(self, o):
        if not isinstance(o, Scalar):
            o = Scalar.of(o)
        q1, q2 = self.q, o.q
        if q1 == q2:
            return Scalar(self.na + o.na, self.nb + o.nb,
                          self.nc + o.nc, self.nd + o.nd, q1)
        return Scalar(self.na * q2 + o.na * q1, self.nb * q2 + o.nb * q1,
                      self.nc * q2 + o.nc * q1, self.nd * q2 + o.nd * q1,
                      q1 * q2)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.na, -self.nb, -self.nc, -self.nd, self.q)

    def __sub__(self, o):
        if not isinstance(o, Scalar):
            o = Scalar.of(o)
        return self + (-o)

    def __rsub__(self, o):
        return Scalar.of(o) + (-self)

    def __mul__(self, o):
        if not isinstance(o, Scalar):
            o = Scalar.of(o)
        a1, b1, c1, d1 = self.na, self.nb, self.nc, self.nd
        a2, b2, c2, d2 = o.na, o.nb, o.nc, o.nd
        return Scalar(
            a1 * a2 + 6 * b1 * b2 + 10 * c1 * c2 + 15 * d1 * d2,
            a1 * b2 + b1 * a2 + 5 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 3 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + 2 * (b1 * c2 + c1 * b2),
            self.q * o.q)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Multiplicative inverse via the three Galois conjugates."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        na, nb, nc, nd, q = self.na, self.nb, self.nc, self.nd, self.q
        c1 = Scalar(na, -nb, nc, -nd, q)   # r6 -> -r6 (and r15 -> -r15)
        c2 = Scalar(na, nb, -nc, -nd, q)   # r10 -> -r10 (and r15 -> -r15)
        c3 = Scalar(na, -nb, -nc, nd, q)   # both flipped
        num = c1 * c2 * c3
        norm = self * num
        if norm.nb or norm.nc or norm.nd:
            raise ArithmeticError("field norm is not rational")  # unreachable
        return num * Scalar(norm.q, 0, 0, 0, norm.na)

    def __truediv__(self, o):
        if not isinstance(o, Scalar):
            o = Scalar.of(o)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return Scalar.of(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons ----------------------------------------------------

    def __eq__(self, o) -> bool:
        if isinstance(o, int):
            o = Scalar.of(o)
        if not isinstance(o, Scalar):
            return NotImplemented
        return (self.na == o.na and self.nb == o.nb and self.nc == o.nc
                and self.nd == o.nd and self.q == o.q)

    def __hash__(self):
        return hash((self.na, self.nb, self.nc, self.nd, self.q))

    def __bool__(self) -> bool:
        return bool(self.na or self.nb or self.nc or self.nd)

    def sign(self) -> int:
        """Sign under the real embedding, certified by interval refinement.

        The rational intervals around r6, r10, r15 are narrowed until the
        interval around the value excludes zero; a nonzero element of a real
        number field has nonzero embedding, so this terminates.
        """
        if not self:
            return 0
        na, nb, nc, nd = self.na, self.nb, self.nc, self.nd
        if nb == 0 and nc == 0 and nd == 0:
            return 1 if na > 0 else -1
        scale = 100  # 10**k
        while True:
            lo = na * scale
            hi = lo
            for coeff, radicand in ((nb, 6), (nc, 10), (nd, 15)):
                if coeff == 0:
                    continue
                rlo = isqrt(radicand * scale * scale)
                rhi = rlo + 1
                if coeff > 0:
                    lo += coeff * rlo
                    hi += coeff * rhi
                else:
                    lo += coeff * rhi
                    hi += coeff * rlo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            scale *= scale

    def __lt__(self, o):
        return (self - Scalar.of(o)).sign() < 0

    def __le__(self, o):
        return (self - Scalar.of(o)).sign() <= 0

    def __gt__(self, o):
        return (self - Scalar.of(o)).sign() > 0

    def __ge__(self, o):
        return (self - Scalar.of(o)).sign() >= 0

    # -- text format ----------------------------------------------------

    def show(self) -> str:
        """Canonical form "p/q + p/q*r6 + p/q*r10 + p/q*r15".

        Each coordinate is printed as its own reduced fraction.
        """
        parts = []
        for num, tag in ((self.na, ""), (self.nb, "*r6"),
                         (self.nc, "*r10"), (self.nd, "*r15")):
            parts.append(f"{Fraction(num, self.q)}{tag}")
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        coeffs = {"": Fraction(0), "r6": Fraction(0),
                  "r10": Fraction(0), "r15": Fraction(0)}
        for raw in text.replace("- ", "+ -").split("+"):
            term = raw.strip()
            if not term:
                continue
            if "*" in term:
                num, tag = term.split("*")
            elif term in ("r6", "r10", "r15"):
                num, tag = "1", term
            elif term in ("-r6", "-r10", "-r15"):
                num, tag = "-1", term[1:]
            else:
                num, tag = term, ""
            tag = tag.strip()
            if tag not in coeffs:
                raise ValueError(f"bad radical tag {tag!r} in {text!r}")
            coeffs[tag] += Fraction(num.strip())
        return cls.from_coeffs(coeffs[""], coeffs["r6"], coeffs["r10"], coeffs["r15"])

    def __str__(self):
        return self.show()

    def __repr__(self):
        return f"Scalar({self.show()})"

    def __float__(self):
        # debug aid only; all library decisions are exact
        return (self.na + self.nb * 6 ** 0.5 + self.nc * 10 ** 0.5
                + self.nd * 15 ** 0.5) / self.q


ZERO = Scalar(0, 0, 0, 0)
ONE = Scalar(1, 0, 0, 0)
SQRT6 = Scalar(0, 1, 0, 0)
SQRT10 = Scalar(0, 0, 1, 0)
SQRT15 = Scalar(0, 0, 0, 1)
