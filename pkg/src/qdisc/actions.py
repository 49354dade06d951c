"""Module-algebra actions on the quantum disc.

A candidate symmetry is given by the eight images of k, k^-1, e, f on
the generators z, z*.  The engine extends it to arbitrary elements with
the coproduct rule pi(g)(uv) = sum pi(g_1)(u) pi(g_2)(v) and the unit
rule pi(g)(1) = eps(g) 1, then machine-checks well-definedness: every
generator applied to the disc relation, every algebra relation applied
to z and z*, and the same operator identities on all monomials up to a
degree bound.  On top of the verifier sit the weight constant, the
grading jump, the six series constructors, classification, isomorphism
testing and the involution-compatibility check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .disc import DiscElem, y_elem
from .scalars import (
    SC_ONE,
    SC_ZERO,
    GaussianRational,
    InvalidSpecialization,
    Scalar,
    _as_scalar,
)
from .uq import InvolutionForm, UqElem, UqGenerator, antipode_star


class NotAWeightAction(ValueError):
    """k does not act by reciprocal scalars on z and z*."""


class NoIntegerJump(ValueError):
    """No integer n with alpha^n = q^2 within the scan bound."""


class Unclassifiable(ValueError):
    """A verified action matching no series template; reported, never dropped."""


class DegenerateParameter(ValueError):
    """A series parameter violates its nondegeneracy condition."""


class ZeroScalar(ValueError):
    """The rescaling constant of an automorphism must be nonzero."""


class SeriesTag(Enum):
    ZERO_PLUS = "0+"
    ZERO_MINUS = "0-"
    ONE_A = "1a"
    ONE_B = "1b"
    MINUS_ONE_A = "-1a"
    MINUS_ONE_B = "-1b"

    @property
    def param_names(self) -> tuple[str, ...]:
        if self in (SeriesTag.ZERO_PLUS, SeriesTag.ZERO_MINUS):
            return ()
        if self in (SeriesTag.ONE_A, SeriesTag.MINUS_ONE_A):
            return ("b0", "b1")
        return ("a0", "a1")


_Z, _ZS = "z", "zs"
_GENS = (UqGenerator.K, UqGenerator.KINV, UqGenerator.E, UqGenerator.F)


class SymmetryAction:
    """A candidate symmetry: images of k, k^-1, e, f on z and z*.

    No validity is imposed at construction; invalid candidates must be
    representable so the verifier can reject them.
    """

    __slots__ = ("images", "label", "_cache")

    def __init__(self, images: dict, label: str | None = None):
        self.images = _norm(images)
        missing = [
            (g.value, x)
            for g in _GENS
            for x in (_Z, _ZS)
            if (g.value, x) not in self.images
        ]
        if missing:
            raise ValueError(f"missing generator images: {missing}")
        self.label = label
        self._cache: dict = {}

    def image(self, g: UqGenerator, letter: str) -> DiscElem:
        return self.images[(g.value, letter)]

    def __eq__(self, other):
        if not isinstance(other, SymmetryAction):
            return NotImplemented
        return self.images == other.images

    def __repr__(self):
        name = self.label or "candidate"
        return f"SymmetryAction<{name}>"


def _norm(images: dict) -> dict:
    out = {}
    for key, val in images.items():
        g, x = key
        g = g.value if isinstance(g, UqGenerator) else g
        out[(g, x)] = val
    return out


def _letter_elem(letter: str) -> DiscElem:
    return DiscElem.z() if letter == _Z else DiscElem.zs()


def apply_gen(action: SymmetryAction, g: UqGenerator, a: DiscElem) -> DiscElem:
    """Apply one generator through the coproduct rule, memoized per monomial."""
    out = DiscElem.zero()
    for (i, j), c in a.terms.items():
        out = out + _apply_mono(action, g, i, j).scale(c)
    return out


def _apply_mono(action: SymmetryAction, g: UqGenerator, i: int, j: int) -> DiscElem:
    key = (g, i, j)
    cached = action._cache.get(key)
    if cached is not None:
        return cached
    if i == 0 and j == 0:
        # unit rule: eps(k) = eps(k^-1) = 1, eps(e) = eps(f) = 0
        out = (
            DiscElem.one()
            if g in (UqGenerator.K, UqGenerator.KINV)
            else DiscElem.zero()
        )
    else:
        if i > 0:
            letter, rest = _Z, (i - 1, j)
        else:
            letter, rest = _ZS, (0, j - 1)
        x = _letter_elem(letter)
        gx = action.image(g, letter)
        if g is UqGenerator.K or g is UqGenerator.KINV:
            out = gx * _apply_mono(action, g, *rest)
        elif g is UqGenerator.E:
            # Delta(e) = 1 (x) e + e (x) k
            out = x * _apply_mono(action, UqGenerator.E, *rest) + gx * _apply_mono(
                action, UqGenerator.K, *rest
            )
        else:
            # Delta(f) = f (x) 1 + k^-1 (x) f
            out = gx * DiscElem.monomial(*rest) + action.image(
                UqGenerator.KINV, letter
            ) * _apply_mono(action, UqGenerator.F, *rest)
    action._cache[key] = out
    return out


def apply_word(action: SymmetryAction, g: UqGenerator, word: tuple) -> DiscElem:
    """Apply a generator to a free word in z, z* without prior normalization."""
    if not word:
        return (
            DiscElem.one()
            if g in (UqGenerator.K, UqGenerator.KINV)
            else DiscElem.zero()
        )
    letter, rest = word[0], word[1:]
    x = _letter_elem(letter)
    gx = action.image(g, letter)
    if g is UqGenerator.K or g is UqGenerator.KINV:
        return gx * apply_word(action, g, rest)
    if g is UqGenerator.E:
        return x * apply_word(action, UqGenerator.E, rest) + gx * apply_word(
            action, UqGenerator.K, rest
        )
    return gx * _word_elem(rest) + action.image(
        UqGenerator.KINV, letter
    ) * apply_word(action, UqGenerator.F, rest)


def _word_elem(word: tuple) -> DiscElem:
    out = DiscElem.one()
    for letter in word:
        out = out * _letter_elem(letter)
    return out


def apply_uq(action: SymmetryAction, x: UqElem, a: DiscElem) -> DiscElem:
    """Apply pi(e)^i pi(k)^m pi(f)^j per PBW term, extended linearly."""
    out = DiscElem.zero()
    for (i, m, j), c in x.terms.items():
        cur = a
        for _ in range(j):
            cur = apply_gen(action, UqGenerator.F, cur)
        kg = UqGenerator.K if m >= 0 else UqGenerator.KINV
        for _ in range(abs(m)):
            cur = apply_gen(action, kg, cur)
        for _ in range(i):
            cur = apply_gen(action, UqGenerator.E, cur)
        out = out + cur.scale(c)
    return out


# --- verification ---


@dataclass(frozen=True)
class CheckResult:
    name: str
    lhs: str
    rhs: str
    passed: bool


@dataclass
class VerificationReport:
    passed: bool
    degree_bound: int
    checks: list[CheckResult] = field(default_factory=list)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "degree_bound": self.degree_bound,
            "checks": [
                {"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "passed": c.passed}
                for c in self.checks
            ],
        }

    def __str__(self):
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark}  {c.name}")
            if not c.passed:
                lines.append(f"      lhs = {c.lhs}")
                lines.append(f"      rhs = {c.rhs}")
        lines.append(
            f"{'PASSED' if self.passed else 'FAILED'} "
            f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks, "
            f"degree bound {self.degree_bound})"
        )
        return "\n".join(lines)


def _record(checks: list, name: str, lhs: DiscElem, rhs: DiscElem) -> None:
    checks.append(CheckResult(name, str(lhs), str(rhs), lhs == rhs))


def verify(action: SymmetryAction, degree_bound: int = 8) -> VerificationReport:
    """Machine-check that the eight images define a module-algebra action.

    Records, in order: the unit rule for every generator; every generator
    applied to both sides of the disc relation, expanded from free words;
    the algebra relations as operator identities on z and z*; the same
    identities on every monomial z^i z*^j with i + j <= degree_bound.
    """
    if degree_bound < 2:
        raise ValueError("degree_bound must be at least 2")
    checks: list[CheckResult] = []
    q2 = Scalar.q_power(2)
    one = DiscElem.one()

    for g in _GENS:
        eps = SC_ONE if g in (UqGenerator.K, UqGenerator.KINV) else SC_ZERO
        _record(checks, f"unit:{g.value}(1)", apply_word(action, g, ()), one.scale(eps))

    for g in _GENS:
        lhs = apply_word(action, g, (_Z, _ZS))
        eps = SC_ONE if g in (UqGenerator.K, UqGenerator.KINV) else SC_ZERO
        rhs = apply_word(action, g, (_ZS, _Z)).scale(q2) + one.scale(
            (SC_ONE - q2) * eps
        )
        _record(checks, f"relation:{g.value}(z*zs = q^2*zs*z + 1 - q^2)", lhs, rhs)

    monos = [(1, 0), (0, 1)] + [
        (i, j)
        for total in range(2, degree_bound + 1)
        for i in range(total + 1)
        for j in [total - i]
    ]
    K, KINV, E, F = _GENS
    kappa = (Scalar.q_power(1) - Scalar.q_power(-1)).inverse()

    def ap(g, elem):
        return apply_gen(action, g, elem)

    for i, j in monos:
        a = DiscElem.monomial(i, j)
        at = f"z^{i}*zs^{j}"
        _record(checks, f"uq:k*kinv=1 @ {at}", ap(K, ap(KINV, a)), a)
        _record(checks, f"uq:kinv*k=1 @ {at}", ap(KINV, ap(K, a)), a)
        _record(
            checks,
            f"uq:ke=q^2*ek @ {at}",
            ap(K, ap(E, a)),
            ap(E, ap(K, a)).scale(q2),
        )
        _record(
            checks,
            f"uq:kf=q^-2*fk @ {at}",
            ap(K, ap(F, a)),
            ap(F, ap(K, a)).scale(Scalar.q_power(-2)),
        )
        comm = ap(E, ap(F, a)) - ap(F, ap(E, a))
        _record(
            checks,
            f"uq:ef-fe=(k-kinv)/(q-q^-1) @ {at}",
            comm,
            (ap(K, a) - ap(KINV, a)).scale(kappa),
        )

    return VerificationReport(all(c.passed for c in checks), degree_bound, checks)


# --- weight constant and grading jump ---

_JUMP_SCAN_BOUND = 64


def weight_constant(action: SymmetryAction) -> Scalar:
    kz = action.image(UqGenerator.K, _Z)
    kzs = action.image(UqGenerator.K, _ZS)
    if set(kz.terms) != {(1, 0)} or set(kzs.terms) != {(0, 1)}:
        raise NotAWeightAction("k must act by scalars on z and z*")
    alpha = kz.terms[(1, 0)]
    beta = kzs.terms[(0, 1)]
    if alpha * beta != SC_ONE:
        raise NotAWeightAction("the scalars on z and z* must be reciprocal")
    return alpha


def grading_jump(action: SymmetryAction) -> int:
    """0 when alpha is +-1, else the unique n <= 64 with alpha^n = q^2."""
    alpha = weight_constant(action)
    if alpha == SC_ONE or alpha == -SC_ONE:
        return 0
    q2 = Scalar.q_power(2)
    pw = SC_ONE
    inv = alpha.inverse()
    pw_inv = SC_ONE
    for n in range(1, _JUMP_SCAN_BOUND + 1):
        pw = pw * alpha
        pw_inv = pw_inv * inv
        if pw == q2:
            return n
        if pw_inv == q2:
            return -n
    raise NoIntegerJump(f"no n with |n| <= {_JUMP_SCAN_BOUND} solves alpha^n = q^2")


# --- the six symmetry series ---


def construct_series(tag: SeriesTag, *params: Scalar, label: str | None = None) -> SymmetryAction:
    """Build the generator images of one classification series.

    Series 1a and -1a take (b0, b1), series 1b and -1b take (a0, a1),
    and the zero-jump series take no parameters.
    """
    params = tuple(_as_scalar(p) for p in params)
    names = tag.param_names
    if len(params) != len(names):
        raise DegenerateParameter(
            f"series {tag.value} takes parameters {names or '()'}, got {len(params)}"
        )
    zero = DiscElem.zero()
    one = DiscElem.one()
    z2 = DiscElem.monomial(2, 0)
    zs2 = DiscElem.monomial(0, 2)
    y = y_elem()
    q = Scalar.q_power(1)

    if tag in (SeriesTag.ZERO_PLUS, SeriesTag.ZERO_MINUS):
        s = SC_ONE if tag is SeriesTag.ZERO_PLUS else -SC_ONE
        images = {
            ("k", _Z): DiscElem.z().scale(s),
            ("k", _ZS): DiscElem.zs().scale(s),
            ("kinv", _Z): DiscElem.z().scale(s),
            ("kinv", _ZS): DiscElem.zs().scale(s),
            ("e", _Z): zero,
            ("e", _ZS): zero,
            ("f", _Z): zero,
            ("f", _ZS): zero,
        }
        return SymmetryAction(images, label=label or tag.value)

    if tag is SeriesTag.ONE_A:
        b0, b1 = params
        if b0.is_zero():
            raise DegenerateParameter("series 1a needs b0 != 0")
        alpha = q ** 2
        images = _weight_images(alpha)
        images[("e", _Z)] = z2.scale(q * b0.inverse())
        images[("e", _ZS)] = one.scale(-(q ** -1) * b0.inverse())
        images[("f", _Z)] = one.scale(-b0) - (y * y).scale(b1)
        images[("f", _ZS)] = zs2.scale((q ** 2) * b0)
        return SymmetryAction(images, label=label or tag.value)

    if tag is SeriesTag.ONE_B:
        a0, a1 = params
        if a0.is_zero():
            raise DegenerateParameter("series 1b needs a0 != 0")
        images = _weight_images(q ** 2)
        images[("e", _Z)] = z2.scale((q ** 2) * a0)
        images[("e", _ZS)] = one.scale(-a0) - (y * y).scale(a1)
        images[("f", _Z)] = one.scale(-(q ** -1) * a0.inverse())
        images[("f", _ZS)] = zs2.scale(q * a0.inverse())
        return SymmetryAction(images, label=label or tag.value)

    if tag is SeriesTag.MINUS_ONE_A:
        b0, b1 = params
        if b1.is_zero():
            raise DegenerateParameter("series -1a needs b1 != 0")
        images = _weight_images(q ** -2)
        images[("e", _Z)] = one.scale((q ** -1) * b1.inverse())
        images[("e", _ZS)] = zero
        images[("f", _Z)] = z2.scale(-(q ** 2) * b1)
        images[("f", _ZS)] = one.scale(-(q ** -2) * b0 + b1) - y.scale(
            (SC_ONE + q ** -2) * b1
        )
        return SymmetryAction(images, label=label or tag.value)

    a0, a1 = params
    if a1.is_zero():
        raise DegenerateParameter("series -1b needs a1 != 0")
    images = _weight_images(q ** -2)
    images[("e", _Z)] = one.scale(-(q ** -2) * a0 + a1) - y.scale(
        (SC_ONE + q ** -2) * a1
    )
    images[("e", _ZS)] = zs2.scale(-(q ** 2) * a1)
    images[("f", _Z)] = zero
    images[("f", _ZS)] = one.scale((q ** -1) * a1.inverse())
    return SymmetryAction(images, label=label or tag.value)


def _weight_images(alpha: Scalar) -> dict:
    inv = alpha.inverse()
    return {
        ("k", _Z): DiscElem.z().scale(alpha),
        ("k", _ZS): DiscElem.zs().scale(inv),
        ("kinv", _Z): DiscElem.z().scale(inv),
        ("kinv", _ZS): DiscElem.zs().scale(alpha),
    }


# --- classification ---


def classify(action: SymmetryAction) -> set[tuple[SeriesTag, tuple[Scalar, ...]]]:
    """Match a verified action against the series templates.

    Every matching (tag, parameters) pair is returned; the overlap of the
    two positive-jump series yields two matches by design.
    """
    jump = grading_jump(action)
    if jump == 0:
        alpha = weight_constant(action)
        tag = SeriesTag.ZERO_PLUS if alpha == SC_ONE else SeriesTag.ZERO_MINUS
        candidates = [(tag, ())]
    elif jump == 1:
        candidates = [
            (SeriesTag.ONE_A, _probe_1a(action)),
            (SeriesTag.ONE_B, _probe_1b(action)),
        ]
    elif jump == -1:
        candidates = [
            (SeriesTag.MINUS_ONE_A, _probe_m1a(action)),
            (SeriesTag.MINUS_ONE_B, _probe_m1b(action)),
        ]
    else:
        raise Unclassifiable(f"grading jump {jump} matches no series")

    matches = set()
    for tag, params in candidates:
        if params is None:
            continue
        try:
            template = construct_series(tag, *params)
        except DegenerateParameter:
            continue
        if template.images == action.images:
            matches.add((tag, params))
    if not matches:
        raise Unclassifiable(
            "action verified at bounded degree but matches no series template"
        )
    return matches


def _probe_1a(action):
    # pi(e)(z) = q b0^-1 z^2;  pi(f)(z) = -b0 - b1 y^2 has -q^-2 b1 at z^2 zs^2
    c = action.image(UqGenerator.E, _Z).coeff(2, 0)
    if c.is_zero():
        return None
    b0 = Scalar.q_power(1) * c.inverse()
    b1 = -Scalar.q_power(2) * action.image(UqGenerator.F, _Z).coeff(2, 2)
    return (b0, b1)


def _probe_1b(action):
    # pi(e)(z) = q^2 a0 z^2;  pi(e)(z*) = -a0 - a1 y^2
    c = action.image(UqGenerator.E, _Z).coeff(2, 0)
    if c.is_zero():
        return None
    a0 = Scalar.q_power(-2) * c
    a1 = -Scalar.q_power(2) * action.image(UqGenerator.E, _ZS).coeff(2, 2)
    return (a0, a1)


def _probe_m1a(action):
    # pi(e)(z) = q^-1 b1^-1;  pi(f)(z*) = -q^-2 b0 - q^-2 b1 + (1+q^-2) b1 z zs
    c = action.image(UqGenerator.E, _Z).coeff(0, 0)
    if c.is_zero():
        return None
    b1 = Scalar.q_power(-1) * c.inverse()
    b0 = -Scalar.q_power(2) * action.image(UqGenerator.F, _ZS).coeff(0, 0) - b1
    return (b0, b1)


def _probe_m1b(action):
    c = action.image(UqGenerator.F, _ZS).coeff(0, 0)
    if c.is_zero():
        return None
    a1 = Scalar.q_power(-1) * c.inverse()
    a0 = -Scalar.q_power(2) * action.image(UqGenerator.E, _Z).coeff(0, 0) - a1
    return (a0, a1)


# --- isomorphism ---


def conjugate_by_automorphism(action: SymmetryAction, c: Scalar) -> SymmetryAction:
    """Transport the action along the rescaling z -> c z, z* -> c^-1 z*."""
    c = _as_scalar(c)
    if c.is_zero():
        raise ZeroScalar("rescaling constant must be nonzero")
    cinv = c.inverse()
    images = {}
    for (g, letter), img in action.images.items():
        pre = cinv if letter == _Z else c
        moved = DiscElem(
            {(i, j): coef * pre * c ** (i - j) for (i, j), coef in img.terms.items()}
        )
        images[(g, letter)] = moved
    label = f"{action.label}~conj" if action.label else None
    return SymmetryAction(images, label=label)


def are_isomorphic(a1: SymmetryAction, a2: SymmetryAction) -> Scalar | None:
    """A witness c with the rescaling by c carrying a1 to a2, or None.

    Both actions must already have been verified; matching runs through
    the series parameters, whose transformation under rescaling is linear.
    """
    try:
        m1 = classify(a1)
        m2 = classify(a2)
    except (Unclassifiable, NotAWeightAction, NoIntegerJump):
        return None
    by_tag = {tag: params for tag, params in m2}
    for tag, p1 in sorted(m1, key=lambda tp: tp[0].value):
        if tag not in by_tag:
            continue
        p2 = by_tag[tag]
        c = _witness_for(tag, p1, p2)
        if c is None:
            continue
        if conjugate_by_automorphism(a1, c).images == a2.images:
            return c
    return None


def _witness_for(tag, p1, p2):
    # parameter transport under z -> c z: (1a): p -> c^-1 p; (1b): p -> c p;
    # (-1a): p -> c p; (-1b): p -> c^-1 p.  Solve on the nondegenerate slot.
    if tag in (SeriesTag.ZERO_PLUS, SeriesTag.ZERO_MINUS):
        return SC_ONE
    if tag is SeriesTag.ONE_A:
        c = p1[0] * p2[0].inverse()
        return c if p2[1] == c.inverse() * p1[1] else None
    if tag is SeriesTag.ONE_B:
        c = p2[0] * p1[0].inverse()
        return c if p2[1] == c * p1[1] else None
    if tag is SeriesTag.MINUS_ONE_A:
        c = p2[1] * p1[1].inverse()
        return c if p2[0] == c * p1[0] else None
    c = p1[1] * p2[1].inverse()
    return c if p2[0] == c.inverse() * p1[0] else None


# --- involution compatibility ---


def check_involution(
    action: SymmetryAction,
    form: InvolutionForm,
    q0: GaussianRational | None = None,
    degree_bound: int = 8,
    monomial_sweep: bool | None = None,
) -> VerificationReport:
    """Check (pi(xi) a)* = pi(S(xi)*) a* on the generators.

    For forms A, B, D and E a generator-level pass certifies the property
    on the whole algebras, so the monomial sweep defaults to off; for
    form C it defaults to on and failures carry witnesses.  A
    specialization q0 evaluates the comparison at a concrete admissible
    q (real for A/B, purely imaginary for D/E); form C runs symbolically
    in the unit-circle conjugation mode.
    """
    mode = form.mode
    q0 = _validate_q0(form, q0)
    if monomial_sweep is None:
        monomial_sweep = form is InvolutionForm.C
    checks: list[CheckResult] = []

    targets: list[tuple[str, DiscElem]] = [
        ("z", DiscElem.z()),
        ("zs", DiscElem.zs()),
    ]
    if monomial_sweep:
        targets += [
            (f"z^{i}*zs^{j}", DiscElem.monomial(i, j))
            for total in range(0, degree_bound + 1)
            for i in range(total + 1)
            for j in [total - i]
            if (i, j) not in ((1, 0), (0, 1))
        ]

    sstar = {g: antipode_star(g, form) for g in _GENS}
    for g in _GENS:
        for name, a in targets:
            lhs = apply_gen(action, g, a).star(mode)
            rhs = apply_uq(action, sstar[g], a.star(mode))
            ok = _equal_at(lhs, rhs, q0)
            checks.append(CheckResult(f"invcomp:{g.value} @ {name}", str(lhs), str(rhs), ok))

    return VerificationReport(all(c.passed for c in checks), degree_bound, checks)


def _validate_q0(form: InvolutionForm, q0):
    if q0 is None:
        return None
    if form is InvolutionForm.C:
        raise InvalidSpecialization(
            "form C has no Gaussian-rational q on the unit circle; run symbolically"
        )
    if form in (InvolutionForm.A, InvolutionForm.B):
        if q0.im != 0:
            raise InvalidSpecialization(f"form {form.value} needs real q, got {q0}")
    else:
        if q0.re != 0:
            raise InvalidSpecialization(
                f"form {form.value} needs purely imaginary q, got {q0}"
            )
    return q0


def _equal_at(lhs: DiscElem, rhs: DiscElem, q0) -> bool:
    diff = lhs - rhs
    if q0 is None:
        return diff.is_zero()
    return all(not c.specialize(q0) for c in diff.terms.values())
