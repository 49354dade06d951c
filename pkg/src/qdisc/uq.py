"""The quantized enveloping algebra of sl2 in PBW normal form.

Elements are finite maps (i, m, j) -> Scalar for the basis monomials
e^i k^m f^j.  Multiplication straightens with

    k e = q^2 e k,   k f = q^-2 f k,   e f - f e = (k - k^-1)/(q - q^-1),

moving one generator at a time; the f^c e expansion table is the ground
truth for the commutator and is built recursively, never assumed in
closed form.  Coproduct, counit and antipode are provided on generators,
together with the five Hopf star structures and the star extension to
arbitrary elements.
"""

from __future__ import annotations

from enum import Enum

from .scalars import SC_ONE, SC_ZERO, ConjugationMode, Scalar, _as_scalar


class UqGenerator(Enum):
    K = "k"
    KINV = "kinv"
    E = "e"
    F = "f"


class InvolutionForm(Enum):
    """The five Hopf star structures, each tied to a regime of q."""

    A = "A"  # q real:      k* = k,  e* = f k,    f* = k^-1 e
    B = "B"  # q real:      k* = k,  e* = -f k,   f* = -k^-1 e
    C = "C"  # |q| = 1:     k* = k,  e* = e,      f* = f
    D = "D"  # q imaginary: k* = k,  e* = i f k,  f* = i k^-1 e
    E = "E"  # q imaginary: k* = k,  e* = -i f k, f* = -i k^-1 e

    @property
    def mode(self) -> ConjugationMode:
        if self in (InvolutionForm.A, InvolutionForm.B):
            return ConjugationMode.REAL_Q
        if self is InvolutionForm.C:
            return ConjugationMode.UNIT_CIRCLE_Q
        return ConjugationMode.IMAGINARY_Q


class UqElem:
    """A PBW normal form: finite map (i, m, j) -> Scalar for e^i k^m f^j."""

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
    def zero() -> "UqElem":
        return UqElem()

    @staticmethod
    def one() -> "UqElem":
        return UqElem({(0, 0, 0): SC_ONE})

    @staticmethod
    def monomial(i: int, m: int, j: int, coeff=SC_ONE) -> "UqElem":
        return UqElem({(i, m, j): _as_scalar(coeff)})

    @staticmethod
    def e() -> "UqElem":
        return UqElem.monomial(1, 0, 0)

    @staticmethod
    def f() -> "UqElem":
        return UqElem.monomial(0, 0, 1)

    @staticmethod
    def k() -> "UqElem":
        return UqElem.monomial(0, 1, 0)

    @staticmethod
    def kinv() -> "UqElem":
        return UqElem.monomial(0, -1, 0)

    @staticmethod
    def from_generator(g: UqGenerator) -> "UqElem":
        return _GEN_ELEMS[g]()

    @staticmethod
    def from_scalar(s) -> "UqElem":
        return UqElem({(0, 0, 0): _as_scalar(s)})

    # -- structure --

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, UqElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def as_scalar(self) -> Scalar | None:
        if not self.terms:
            return SC_ZERO
        if len(self.terms) == 1 and (0, 0, 0) in self.terms:
            return self.terms[(0, 0, 0)]
        return None

    def __repr__(self):
        return f"UqElem({self})"

    def __str__(self):
        from .parsing import uq_str

        return uq_str(self)

    # -- linear structure --

    def __add__(self, other):
        if not isinstance(other, UqElem):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return UqElem._raw(out)

    def __neg__(self):
        return UqElem._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, UqElem):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> "UqElem":
        s = _as_scalar(s)
        if not s:
            return UqElem()
        return UqElem._raw({k: c * s for k, c in self.terms.items()})

    @staticmethod
    def _raw(terms: dict) -> "UqElem":
        e = UqElem.__new__(UqElem)
        e.terms = terms
        return e

    # -- multiplication --

    def __mul__(self, other):
        if isinstance(other, UqElem):
            out = UqElem.zero()
            for (i2, m2, j2), c2 in other.terms.items():
                part = self
                for _ in range(i2):
                    part = part._rmul_e()
                if m2:
                    step = 1 if m2 > 0 else -1
                    for _ in range(abs(m2)):
                        part = part._rmul_k(step)
                if j2:
                    part = UqElem._raw(
                        {(a, b, c + j2): s for (a, b, c), s in part.terms.items()}
                    )
                out = out + part.scale(c2)
            return out
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
            raise ValueError("only k carries negative powers, via kinv")
        out = UqElem.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _rmul_k(self, sign: int) -> "UqElem":
        # f^c k^s = q^(2sc) k^s f^c
        out: dict = {}
        for (a, b, c), s in self.terms.items():
            _uacc(out, (a, b + sign, c), s * Scalar.q_power(2 * sign * c))
        return UqElem._raw(out)

    def _rmul_e(self) -> "UqElem":
        # e^a k^b (f^c e) with the f^c e table; k^b e^a' = q^(2 b a') e^a' k^b
        out: dict = {}
        for (a, b, c), s in self.terms.items():
            for (a2, b2, c2), s2 in _fe_table(c).items():
                _uacc(out, (a + a2, b + b2, c2), s * s2 * Scalar.q_power(2 * b * a2))
        return UqElem._raw(out)


def _uacc(d: dict, key, val) -> None:
    cur = d.get(key)
    cur = val if cur is None else cur + val
    if cur:
        d[key] = cur
    else:
        d.pop(key, None)


_FE_CACHE: list[dict] = []


def _fe_table(c: int) -> dict:
    """PBW expansion of f^c e, derived one commutator step at a time."""
    while len(_FE_CACHE) <= c:
        n = len(_FE_CACHE)
        if n == 0:
            _FE_CACHE.append({(1, 0, 0): SC_ONE})
            continue
        # f^n e = (f^(n-1) e) f - kappa f^(n-1) k + kappa f^(n-1) k^-1
        kappa = (Scalar.q_power(1) - Scalar.q_power(-1)).inverse()
        out: dict = {}
        for (a, b, cc), s in _FE_CACHE[n - 1].items():
            _uacc(out, (a, b, cc + 1), s)
        _uacc(out, (0, 1, n - 1), -kappa * Scalar.q_power(2 * (n - 1)))
        _uacc(out, (0, -1, n - 1), kappa * Scalar.q_power(-2 * (n - 1)))
        _FE_CACHE.append(out)
    return _FE_CACHE[c]


_GEN_ELEMS = {
    UqGenerator.K: UqElem.k,
    UqGenerator.KINV: UqElem.kinv,
    UqGenerator.E: UqElem.e,
    UqGenerator.F: UqElem.f,
}


def uq_mul(a: UqElem, b: UqElem) -> UqElem:
    return a * b


def coproduct_gen(g: UqGenerator) -> list[tuple[UqElem, UqElem]]:
    """Sweedler summands of the coproduct on a generator."""
    if g is UqGenerator.K:
        return [(UqElem.k(), UqElem.k())]
    if g is UqGenerator.KINV:
        return [(UqElem.kinv(), UqElem.kinv())]
    if g is UqGenerator.E:
        return [(UqElem.one(), UqElem.e()), (UqElem.e(), UqElem.k())]
    return [(UqElem.f(), UqElem.one()), (UqElem.kinv(), UqElem.f())]


def counit(a: UqElem) -> Scalar:
    """eps(e^i k^m f^j) = 1 if i = j = 0 else 0, extended linearly."""
    out = SC_ZERO
    for (i, _m, j), c in a.terms.items():
        if i == 0 and j == 0:
            out = out + c
    return out


def antipode_gen(g: UqGenerator) -> UqElem:
    if g is UqGenerator.K:
        return UqElem.kinv()
    if g is UqGenerator.KINV:
        return UqElem.k()
    if g is UqGenerator.E:
        return UqElem.monomial(1, -1, 0, -SC_ONE)  # -e k^-1
    return UqElem.monomial(0, 1, 1, -SC_ONE)  # -k f


def star_gen(g: UqGenerator, form: InvolutionForm) -> UqElem:
    """The image of a generator under the form's star, in PBW normal form."""
    if g in (UqGenerator.K, UqGenerator.KINV):
        return UqElem.from_generator(g)
    i = Scalar.i_unit()
    front = {
        InvolutionForm.A: SC_ONE,
        InvolutionForm.B: -SC_ONE,
        InvolutionForm.C: None,
        InvolutionForm.D: i,
        InvolutionForm.E: -i,
    }[form]
    if front is None:
        return UqElem.from_generator(g)
    if g is UqGenerator.E:
        # f k = q^2 k f
        return UqElem.monomial(0, 1, 1, front * Scalar.q_power(2))
    # k^-1 e = q^-2 e k^-1
    return UqElem.monomial(1, -1, 0, front * Scalar.q_power(-2))


def star_elem(a: UqElem, form: InvolutionForm) -> UqElem:
    """Antilinear antimultiplicative extension of star_gen.

    Monomials are reversed and starred factorwise:
    (e^i k^m f^j)* = (f*)^j k^m (e*)^i, renormalized through uq_mul.
    """
    mode = form.mode
    es = star_gen(UqGenerator.E, form)
    fs = star_gen(UqGenerator.F, form)
    out = UqElem.zero()
    for (i, m, j), c in a.terms.items():
        part = (fs ** j) * UqElem.monomial(0, m, 0) * (es ** i)
        out = out + part.scale(c.conjugate(mode))
    return out


def antipode_star(g: UqGenerator, form: InvolutionForm) -> UqElem:
    """S(g)* in PBW normal form."""
    return star_elem(antipode_gen(g), form)
