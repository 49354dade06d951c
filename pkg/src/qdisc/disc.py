"""Normal-form arithmetic on the quantum disc.

Elements are stored in the canonical basis z^i z*^j (all z powers on the
left).  Products are straightened with the rule obtained from the
defining relation z z* = q^2 z* z + 1 - q^2, namely

    z*^j z = q^(-2j) z z*^j + (1 - q^(-2j)) z*^(j-1),

applied recursively.  The module also provides the grading by i - j, the
calculus of y = 1 - z z*, the star operation and the division map on
y-polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import (
    SC_ONE,
    SC_ZERO,
    ConjugationMode,
    Scalar,
    _as_scalar,
)


class NotDivisibleByY(ValueError):
    """The y-polynomial has a nonzero constant term."""


class DiscElem:
    """A quantum-disc element: finite map (i, j) -> Scalar for z^i z*^j."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for key, c in terms.items():
                if c:
                    t[key] = c
        self.terms = t

    # -- constructors --

    @staticmethod
    def zero() -> "DiscElem":
        return DiscElem()

    @staticmethod
    def one() -> "DiscElem":
        return DiscElem({(0, 0): SC_ONE})

    @staticmethod
    def z() -> "DiscElem":
        return DiscElem({(1, 0): SC_ONE})

    @staticmethod
    def zs() -> "DiscElem":
        return DiscElem({(0, 1): SC_ONE})

    @staticmethod
    def monomial(i: int, j: int, coeff=SC_ONE) -> "DiscElem":
        c = _as_scalar(coeff)
        return DiscElem({(i, j): c})

    @staticmethod
    def from_scalar(s) -> "DiscElem":
        return DiscElem({(0, 0): _as_scalar(s)})

    # -- structure --

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, DiscElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), SC_ZERO)

    def as_scalar(self) -> Scalar | None:
        """The element as a Scalar if it lies in the ground field."""
        if not self.terms:
            return SC_ZERO
        if len(self.terms) == 1 and (0, 0) in self.terms:
            return self.terms[(0, 0)]
        return None

    def __repr__(self):
        return f"DiscElem({self})"

    def __str__(self):
        from .parsing import disc_str

        return disc_str(self)

    # -- linear structure --

    def __add__(self, other):
        if not isinstance(other, DiscElem):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return DiscElem._raw(out)

    def __neg__(self):
        return DiscElem._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DiscElem):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> "DiscElem":
        s = _as_scalar(s)
        if not s:
            return DiscElem()
        return DiscElem._raw({k: c * s for k, c in self.terms.items()})

    @staticmethod
    def _raw(terms: dict) -> "DiscElem":
        e = DiscElem.__new__(DiscElem)
        e.terms = terms
        return e

    # -- multiplication --

    def __mul__(self, other):
        if isinstance(other, DiscElem):
            out: dict = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    c = c1 * c2
                    for (a, b), s in _straighten(j1, i2).items():
                        key = (i1 + a, b + j2)
                        acc = out.get(key)
                        acc = c * s if acc is None else acc + c * s
                        if acc:
                            out[key] = acc
                        else:
                            out.pop(key, None)
            return DiscElem._raw(out)
        s = _as_scalar(other)
        if s is None:
            return NotImplemented
        return self.scale(s)

    def __rmul__(self, other):
        s = _as_scalar(other)
        if s is None:
            return NotImplemented
        return self.scale(s)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("disc elements have no negative powers")
        out = DiscElem.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- star and grading --

    def star(self, mode: ConjugationMode = ConjugationMode.REAL_Q) -> "DiscElem":
        """Antilinear antiautomorphism z <-> z*; (z^i z*^j)* = z^j z*^i.

        In UNIT_CIRCLE_Q mode this map is still defined termwise but is
        not a ring antiautomorphism (conj(q^2) = q^-2 breaks the
        defining relation); it exists for the involution checker, which
        reports the failures.
        """
        return DiscElem._raw(
            {(j, i): c.conjugate(mode) for (i, j), c in self.terms.items()}
        )

    def grade_decompose(self) -> dict[int, "GradedForm"]:
        """Split into homogeneous components, each as a GradedForm."""
        comps: dict[int, dict[int, Scalar]] = {}
        for (i, j), c in self.terms.items():
            comps.setdefault(i - j, {})[min(i, j)] = c
        out = {}
        for k, by_t in comps.items():
            # z^(k+t) z*^t = (q^(2k) y; q^2)_t z^k      for k >= 0
            # z^t z*^(t-k) = (y; q^2)_t z*^(-k)          for k < 0
            scale = Scalar.q_power(2 * k) if k >= 0 else SC_ONE
            poly = YPolynomial.zero()
            for t, c in by_t.items():
                poly = poly + _pochhammer_y(scale, t).scale(c)
            out[k] = GradedForm(k, poly)
        return out


def _straighten(j: int, k: int) -> dict:
    """Normal form of z*^j z^k as a term map, cached."""
    out = _STRAIGHTEN_CACHE.get((j, k))
    if out is not None:
        return out
    if j == 0 or k == 0:
        out = {(k, j): SC_ONE}
    else:
        out = {}
        lower = _straighten(j, k - 1)
        qf = Scalar.q_power(-2 * j)
        for (a, b), s in lower.items():
            _acc(out, (a + 1, b), qf * s)
        for (a, b), s in _straighten(j - 1, k - 1).items():
            _acc(out, (a, b), (SC_ONE - qf) * s)
    _STRAIGHTEN_CACHE[(j, k)] = out
    return out


def _acc(d: dict, key, val) -> None:
    cur = d.get(key)
    cur = val if cur is None else cur + val
    if cur:
        d[key] = cur
    else:
        d.pop(key, None)


_STRAIGHTEN_CACHE: dict = {}


class YPolynomial:
    """A polynomial sum(c_t y^t) in y = 1 - z z*."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "YPolynomial":
        return YPolynomial()

    @staticmethod
    def one() -> "YPolynomial":
        return YPolynomial((SC_ONE,))

    @staticmethod
    def y() -> "YPolynomial":
        return YPolynomial((SC_ZERO, SC_ONE))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, YPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"YPolynomial({self})"

    def __str__(self):
        from .parsing import ypoly_str

        return ypoly_str(self)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for t, c in enumerate(b):
            out[t] = out[t] + c
        return YPolynomial(out)

    def __neg__(self):
        return YPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, YPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return YPolynomial()
        out = [SC_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for ta, ca in enumerate(self.coeffs):
            if not ca:
                continue
            for tb, cb in enumerate(other.coeffs):
                if cb:
                    out[ta + tb] = out[ta + tb] + ca * cb
        return YPolynomial(out)

    def scale(self, s) -> "YPolynomial":
        s = _as_scalar(s)
        return YPolynomial(tuple(c * s for c in self.coeffs))

    def compose_scale(self, b) -> "YPolynomial":
        """The polynomial y -> p(b*y)."""
        b = _as_scalar(b)
        out = []
        pw = SC_ONE
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * b
        return YPolynomial(out)

    def tau(self) -> "YPolynomial":
        """Divide by y; the constant term must vanish."""
        if self.coeffs and self.coeffs[0]:
            raise NotDivisibleByY(f"constant term {self.coeffs[0]!r} is nonzero")
        return YPolynomial(self.coeffs[1:])

    def to_disc(self) -> DiscElem:
        out = DiscElem.zero()
        for t, c in enumerate(self.coeffs):
            if c:
                out = out + _y_power(t).scale(c)
        return out


def tau(p: YPolynomial) -> YPolynomial:
    return p.tau()


_Y_POWERS: list[DiscElem] = []


def _y_power(t: int) -> DiscElem:
    while len(_Y_POWERS) <= t:
        if not _Y_POWERS:
            _Y_POWERS.append(DiscElem.one())
        else:
            y = DiscElem.one() - DiscElem.monomial(1, 1)
            _Y_POWERS.append(_Y_POWERS[-1] * y)
    return _Y_POWERS[t]


def y_elem() -> DiscElem:
    """y = 1 - z z* as a DiscElem."""
    return _y_power(1)


def _pochhammer_y(scale: Scalar, t: int) -> YPolynomial:
    """(scale*y; q^2)_t = prod_{s<t} (1 - scale q^(2s) y)."""
    out = YPolynomial.one()
    for s in range(t):
        f = YPolynomial((SC_ONE, -(scale * Scalar.q_power(2 * s))))
        out = out * f
    return out


@dataclass(frozen=True)
class GradedForm:
    """One homogeneous component: poly(y) z^k for k >= 0, poly(y) z*^(-k) below."""

    degree: int
    poly: YPolynomial

    def to_disc(self) -> DiscElem:
        mono = (
            DiscElem.monomial(self.degree, 0)
            if self.degree >= 0
            else DiscElem.monomial(0, -self.degree)
        )
        return self.poly.to_disc() * mono


def from_graded(gf: GradedForm) -> DiscElem:
    return gf.to_disc()


def grade_decompose(a: DiscElem) -> dict[int, GradedForm]:
    return a.grade_decompose()


def star(a: DiscElem, mode: ConjugationMode = ConjugationMode.REAL_Q) -> DiscElem:
    return a.star(mode)


def y_pochhammer_identity(t: int) -> YPolynomial:
    """(y; q^2)_t, checked against the normal form of z^t z*^t."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    p = _pochhammer_y(SC_ONE, t)
    assert from_graded(GradedForm(0, p)) == DiscElem.monomial(t, t)
    return p
