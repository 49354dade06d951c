"""Exact arithmetic in the coefficient field Q(i)(q).

A Scalar is a reduced fraction of polynomials in the symbol q with
Gaussian-rational coefficients.  q is transcendental, so no power of q
is 1 and every q-power is invertible.  Three conjugation modes cover the
regimes q real (conj(q) = q), q purely imaginary (conj(q) = -q) and
|q| = 1 (conj(q) = 1/q).
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache


class DivisionByZero(ZeroDivisionError):
    """Division of a Scalar or GaussianRational by zero."""


class InvalidSpecialization(ValueError):
    """q was specialized to 0 or to a Gaussian-rational root of unity."""


class PoleAtSpecialization(ZeroDivisionError):
    """The denominator vanishes at the requested value of q."""


class ConjugationMode(Enum):
    REAL_Q = "real"                # conj(q) = q
    IMAGINARY_Q = "imaginary"      # conj(q) = -q
    UNIT_CIRCLE_Q = "unit_circle"  # conj(q) = 1/q


class GaussianRational:
    """An element re + im*i of Q(i), components stored as Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        sign = "-" if self.im < 0 else "+"
        mag = abs(self.im)
        itxt = "i" if mag == 1 else f"{mag}*i"
        return f"{self.re} {sign} {itxt}"

    def __hash__(self):
        return hash((self.re, self.im))

    def __eq__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return GaussianRational._fast(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return GaussianRational._fast(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        if self.im == 0 and other.im == 0:
            return GaussianRational._fast(self.re * other.re, _F_ZERO)
        return GaussianRational._fast(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    @staticmethod
    def _fast(re: Fraction, im: Fraction) -> "GaussianRational":
        g = GaussianRational.__new__(GaussianRational)
        g.re = re
        g.im = im
        return g

    def __truediv__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = GR_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm_sq()
        if n == 0:
            raise DivisionByZero("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)


def _as_gauss(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return None


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)
_F_ZERO = Fraction(0)
_QPOW_CACHE: dict = {}


# --- dense polynomials in q over Q(i), as tuples (low degree first) ---

_PZERO: tuple = ()
_PONE = (GR_ONE,)


def _pstrip(cs) -> tuple:
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] = out[k] + c
    return _pstrip(out)


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return _PZERO
    out = [GR_ZERO] * (len(a) + len(b) - 1)
    for ia, ca in enumerate(a):
        if not ca:
            continue
        for ib, cb in enumerate(b):
            if cb:
                out[ia + ib] = out[ia + ib] + ca * cb
    return _pstrip(out)


def _pscale(a, s: GaussianRational):
    if not s:
        return _PZERO
    return tuple(c * s for c in a)


def _pdivmod(a, b):
    """Exact-field division with remainder; b must be nonzero."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    quo = [GR_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = b[-1].inverse()
    db = len(b) - 1
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        f = c * inv_lead
        quo[k - db] = f
        for j, cb in enumerate(b):
            rem[k - db + j] = rem[k - db + j] - f * cb
    return _pstrip(quo), _pstrip(rem)


@lru_cache(maxsize=8192)
def _pgcd(a, b):
    """Monic gcd over Q(i) via a primitive remainder sequence over Z[i].

    Clearing denominators and stripping Gaussian-integer content each
    step keeps all arithmetic in plain integers, which is far faster
    than fraction-coefficient Euclid at these degrees.  Arguments recur
    heavily across reductions, so results are memoized.
    """
    A = _gi_primitive(_gi_from_poly(a))
    B = _gi_primitive(_gi_from_poly(b))
    if len(A) < len(B):
        A, B = B, A
    while B:
        A, B = B, _gi_primitive(_gi_prem(A, B))
    if not A:
        return _PZERO
    lead = GaussianRational(Fraction(A[-1][0]), Fraction(A[-1][1]))
    inv = lead.inverse()
    return _pstrip(
        GaussianRational(Fraction(x), Fraction(y)) * inv for (x, y) in A
    )


def _gi_from_poly(p):
    """Scale a Q(i)-polynomial to Z[i] pairs; the constant factor is irrelevant."""
    lcm = 1
    for c in p:
        for d in (c.re.denominator, c.im.denominator):
            lcm = lcm * d // math.gcd(lcm, d)
    return [(int(c.re * lcm), int(c.im * lcm)) for c in p]


def _gi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_gcd(a, b):
    # Euclid in Z[i] with nearest-rounding division
    while b != (0, 0):
        n = b[0] * b[0] + b[1] * b[1]
        tr = a[0] * b[0] + a[1] * b[1]
        ti = a[1] * b[0] - a[0] * b[1]
        qr = (2 * tr + n) // (2 * n)
        qi = (2 * ti + n) // (2 * n)
        a, b = b, (a[0] - (qr * b[0] - qi * b[1]), a[1] - (qr * b[1] + qi * b[0]))
    return a


def _gi_primitive(p):
    """Strip trailing zeros and the Gaussian-integer content."""
    p = list(p)
    while p and p[-1] == (0, 0):
        p.pop()
    if not p:
        return []
    content = (0, 0)
    for c in p:
        if c != (0, 0):
            content = _gi_gcd(content, c)
    n = content[0] * content[0] + content[1] * content[1]
    if n in (0, 1):
        return p
    out = []
    for (x, y) in p:
        tr = x * content[0] + y * content[1]
        ti = y * content[0] - x * content[1]
        out.append((tr // n, ti // n))
    return out


def _gi_prem(A, B):
    """Pseudo-remainder of A by B over Z[i]; B must be nonzero."""
    R = list(A)
    dB = len(B) - 1
    lcB = B[-1]
    while True:
        while R and R[-1] == (0, 0):
            R.pop()
        if len(R) - 1 < dB:
            return R
        coef = R[-1]
        off = len(R) - 1 - dB
        R = [_gi_mul(lcB, c) for c in R]
        for j, bc in enumerate(B):
            prod = _gi_mul(coef, bc)
            R[off + j] = (R[off + j][0] - prod[0], R[off + j][1] - prod[1])


def _peval(a, x: GaussianRational) -> GaussianRational:
    out = GR_ZERO
    for c in reversed(a):
        out = out * x + c
    return out


def _pshift(a, k: int):
    """Multiply by q^k, k >= 0."""
    if not a:
        return _PZERO
    return (GR_ZERO,) * k + tuple(a)


def _ptrailing(a) -> int:
    for k, c in enumerate(a):
        if c:
            return k
    return 0


class Scalar:
    """Reduced fraction num/den of q-polynomials, den monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_PONE, _reduced=False):
        if _reduced:
            self.num = num
            self.den = den
            return
        self.num, self.den = _reduce(num, den)

    # -- constructors --

    @staticmethod
    def from_int(n: int) -> "Scalar":
        return Scalar(_pstrip([GaussianRational(n)]))

    @staticmethod
    def from_fraction(f) -> "Scalar":
        return Scalar(_pstrip([GaussianRational(Fraction(f))]))

    @staticmethod
    def from_gaussian(g: GaussianRational) -> "Scalar":
        return Scalar(_pstrip([g]))

    @staticmethod
    def q_power(n: int) -> "Scalar":
        s = _QPOW_CACHE.get(n)
        if s is None:
            if n >= 0:
                s = Scalar(_pshift(_PONE, n), _PONE, _reduced=True)
            else:
                s = Scalar(_PONE, _pshift(_PONE, -n), _reduced=True)
            _QPOW_CACHE[n] = s
        return s

    @staticmethod
    def i_unit() -> "Scalar":
        return Scalar((GR_I,), _PONE, _reduced=True)

    # -- structure --

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _PONE and self.den == _PONE

    def __bool__(self):
        return bool(self.num)

    def __hash__(self):
        return hash((self.num, self.den))

    def __eq__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        from .parsing import scalar_str

        return scalar_str(self)

    # -- field operations --

    def __neg__(self):
        return Scalar(_pneg(self.num), self.den, _reduced=True)

    def __add__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return Scalar(_padd(self.num, other.num), self.den)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return Scalar(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return SC_ZERO
        # cross-cancel first: the product of the reduced pairs is reduced
        n1, d2 = _cross_cancel(self.num, other.den)
        n2, d1 = _cross_cancel(other.num, self.den)
        return Scalar(_pmul(n1, n2), _pmul(d1, d2), _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "Scalar":
        if not self.num:
            raise DivisionByZero("inverse of 0 in Q(i)(q)")
        lead = self.num[-1]
        if lead == GR_ONE:
            return Scalar(self.den, self.num, _reduced=True)
        inv = lead.inverse()
        return Scalar(_pscale(self.den, inv), _pscale(self.num, inv), _reduced=True)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = SC_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- conjugation and specialization --

    def conjugate(self, mode: ConjugationMode) -> "Scalar":
        num = tuple(c.conjugate() for c in self.num)
        den = tuple(c.conjugate() for c in self.den)
        if mode is ConjugationMode.REAL_Q:
            return Scalar(num, den)
        if mode is ConjugationMode.IMAGINARY_Q:
            num = tuple(c if k % 2 == 0 else -c for k, c in enumerate(num))
            den = tuple(c if k % 2 == 0 else -c for k, c in enumerate(den))
            return Scalar(num, den)
        # q -> 1/q: clear the negative powers with one q-shift
        dn, dd = len(num) - 1, len(den) - 1
        rnum, rden = num[::-1], den[::-1]
        if dd >= dn:
            return Scalar(_pshift(rnum, dd - dn), rden)
        return Scalar(rnum, _pshift(rden, dn - dd))

    def specialize(self, q0: GaussianRational) -> GaussianRational:
        q0 = _as_gauss(q0)
        if q0 is None:
            raise TypeError("q0 must be a GaussianRational")
        if not q0 or q0 in (GR_ONE, -GR_ONE, GR_I, -GR_I):
            raise InvalidSpecialization(
                f"q = {q0} is zero or a root of unity, which is excluded"
            )
        den = _peval(self.den, q0)
        if not den:
            raise PoleAtSpecialization(f"denominator vanishes at q = {q0}")
        return _peval(self.num, q0) / den


def _as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    if isinstance(x, GaussianRational):
        return Scalar.from_gaussian(x)
    return None


def _nterms(a) -> int:
    return sum(1 for c in a if c)


def _cross_cancel(num, den):
    """Remove the common factor of a numerator and an unrelated denominator."""
    if den == _PONE or not num:
        return num, den
    t = min(_ptrailing(num), _ptrailing(den))
    if t:
        num = num[t:]
        den = den[t:]
    if len(den) > 1 and _nterms(den) > 1 and _nterms(num) > 1:
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
    return num, den


def _reduce(num, den):
    """Canonical form: reduced fraction, monic denominator, 0 = 0/1."""
    num = _pstrip(num)
    den = _pstrip(den)
    if not den:
        raise DivisionByZero("zero denominator in Q(i)(q)")
    if not num:
        return _PZERO, _PONE
    # common q-power
    t = min(_ptrailing(num), _ptrailing(den))
    if t:
        num = num[t:]
        den = den[t:]
    # a monomial shares no further factor once the q-power is stripped
    if len(den) > 1 and _nterms(den) > 1 and _nterms(num) > 1:
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
    lead = den[-1]
    if lead != GR_ONE:
        inv = lead.inverse()
        num = _pscale(num, inv)
        den = _pscale(den, inv)
    return num, den


SC_ZERO = Scalar(_PZERO, _PONE, _reduced=True)
SC_ONE = Scalar(_PONE, _PONE, _reduced=True)
SC_Q = Scalar.q_power(1)
SC_I = Scalar.i_unit()


def conjugate(a: Scalar, mode: ConjugationMode) -> Scalar:
    return a.conjugate(mode)


def specialize(a: Scalar, q0: GaussianRational) -> GaussianRational:
    return a.specialize(q0)
