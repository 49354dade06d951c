"""Closed-form action formulas and the integer nonexistence certificates.

The positive-jump series carry closed forms for the raising and lowering
operators on powers of z and z* built from q-Pochhammer products; the
negative-jump series use the division map on y-polynomials instead.
Both are evaluated here at jump magnitude 1 and compared elsewhere
against the recursive action engine.  The nonexistence half certifies,
by exact integer arithmetic on exponents, that no admissible ansatz
degrees exist for jump magnitudes above 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import SeriesTag
from .disc import DiscElem, YPolynomial
from .scalars import SC_ONE, Scalar, _as_scalar


class OutOfFormulaRange(ValueError):
    """The requested power is outside the printed range of the closed form."""


@dataclass(frozen=True)
class AnsatzDegrees:
    """Jump magnitude n and the degrees of the two ansatz polynomials."""

    n: int
    n_e: int
    n_f: int

    def __post_init__(self):
        if self.n < 1 or self.n_e < 0 or self.n_f < 0:
            raise ValueError("need n >= 1 and nonnegative degrees")


GJ_POSITIVE = "GJ>0"
GJ_NEGATIVE = "GJ<0"


def q_pochhammer(a: YPolynomial, step_exp: int, n: int) -> YPolynomial:
    """prod_{j=0}^{n-1} (1 - a q^(step_exp * j)) as a y-polynomial."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = YPolynomial.one()
    for j in range(n):
        out = out * (YPolynomial.one() - a.scale(Scalar.q_power(step_exp * j)))
    return out


def _series_data(series: SeriesTag, params):
    """(jump, s_e or r_e, s_f or r_f) for the four nontrivial series."""
    params = tuple(_as_scalar(p) for p in params)
    q = Scalar.q_power(1)
    if series is SeriesTag.ONE_A:
        b0, b1 = params
        return 1, YPolynomial((q ** -1 * b0.inverse(),)), YPolynomial((b0, b1))
    if series is SeriesTag.ONE_B:
        a0, a1 = params
        return 1, YPolynomial((a0, a1)), YPolynomial((q ** -1 * a0.inverse(),))
    if series is SeriesTag.MINUS_ONE_A:
        b0, b1 = params
        return -1, YPolynomial((-q * b1.inverse(),)), YPolynomial((b0, b1))
    if series is SeriesTag.MINUS_ONE_B:
        a0, a1 = params
        return -1, YPolynomial((a0, a1)), YPolynomial((-q * a1.inverse(),))
    raise OutOfFormulaRange(f"series {series.value} has no closed-form parameters")


def closed_form_action(
    series: SeriesTag, params, gen: str, letter: str, k: int
) -> DiscElem:
    """The printed closed form of pi(e) or pi(f) on z^k or z*^k at jump 1.

    ``gen`` is "e" or "f", ``letter`` is "z" or "zs".  The admissible k
    are those covered by the formulas: for positive jump, e on z^k for
    every k >= 0 and f on z*^k likewise, but e on z*^k and f on z^k only
    within the jump magnitude (plus the separately printed f(z^2)); for
    negative jump, the division-map forms cover k = 1 everywhere and
    e(z^2).
    """
    if gen not in ("e", "f") or letter not in ("z", "zs"):
        raise ValueError("gen must be e|f and letter z|zs")
    if k < 0:
        raise OutOfFormulaRange("k must be nonnegative")
    jump, pe, pf = _series_data(series, params)
    if jump == 1:
        return _positive_jump_form(pe, pf, gen, letter, k)
    return _negative_jump_form(pe, pf, gen, letter, k)


def _zpow(k: int) -> DiscElem:
    return DiscElem.monomial(k, 0)


def _zspow(k: int) -> DiscElem:
    return DiscElem.monomial(0, k)


def _positive_jump_form(s_e, s_f, gen, letter, k):
    # n = 1, alpha = q^2
    q = Scalar.q_power(1)
    alpha = q ** 2
    pref = (q ** -2 - SC_ONE).inverse()
    y = YPolynomial.y()

    if gen == "e" and letter == "z":
        # z^(1+k) [s_e(y) - alpha^k s_e(q^(-2k) y)]
        bracket = s_e - s_e.compose_scale(q ** (-2 * k)).scale(alpha ** k)
        return (_zpow(1 + k) * bracket.to_disc()).scale(pref)
    if gen == "e" and letter == "zs":
        if k != 1:
            raise OutOfFormulaRange("e on z*^k is printed only for 0 < k <= 1")
        bracket = s_e * q_pochhammer(y.scale(q ** -2), 2, 1) - s_e.compose_scale(
            q ** 2
        ).scale(alpha ** -1) * q_pochhammer(y, 2, 1)
        return bracket.to_disc().scale(pref)  # z^(n-k) = z^0
    if gen == "f" and letter == "z":
        if k == 1:
            bracket = s_f * q_pochhammer(y.scale(q ** -2), 2, 1) - s_f.compose_scale(
                q ** 2
            ).scale(alpha ** -1) * q_pochhammer(y, 2, 1)
            return bracket.to_disc().scale(pref)  # z*^(n-k) = 1
        if k == 2:
            # the separately printed f(z^(2n)) at n = 1
            bracket = s_f.compose_scale(q ** -2) * q_pochhammer(
                y.scale(q ** -4), 2, 1
            ) - s_f.compose_scale(q ** 2).scale(q ** -4) * q_pochhammer(y, 2, 1)
            return (_zpow(1) * bracket.to_disc()).scale(pref)
        raise OutOfFormulaRange("f on z^k is printed only for k in {1, 2}")
    # f on z*^k: [s_f(y) - alpha^k s_f(q^(-2k) y)] z*^(1+k)
    bracket = s_f - s_f.compose_scale(q ** (-2 * k)).scale(alpha ** k)
    return (bracket.to_disc() * _zspow(1 + k)).scale(pref)


def _negative_jump_form(r_e, r_f, gen, letter, k):
    # n = 1, alpha = q^-2; tau-based forms
    q = Scalar.q_power(1)
    pref = (q ** -2 - SC_ONE).inverse()
    one_minus = lambda s: YPolynomial((SC_ONE, -s))  # 1 - s*y

    if gen == "e" and letter == "z":
        if k == 1:
            bracket = r_e * one_minus(q ** -2) - r_e.compose_scale(q ** 2) * one_minus(
                SC_ONE
            )
            return bracket.tau().to_disc().scale(pref * q ** -2)
        if k == 2:
            bracket = r_e.compose_scale(q ** -2) * one_minus(
                q ** -4
            ) - r_e.compose_scale(q ** 2) * one_minus(SC_ONE)
            return (_zpow(1) * bracket.tau().to_disc()).scale(pref * q ** -2)
        raise OutOfFormulaRange("e on z^k is printed only for k in {1, 2}")
    if gen == "e" and letter == "zs":
        if k != 1:
            raise OutOfFormulaRange("e on z*^k is printed only for k = 1")
        bracket = r_e - r_e.compose_scale(q ** -2)
        return (bracket.tau().to_disc() * _zspow(2)).scale(pref * q ** 2)
    if gen == "f" and letter == "z":
        if k != 1:
            raise OutOfFormulaRange("f on z^k is printed only for k = 1")
        bracket = r_f - r_f.compose_scale(q ** -2)
        return (_zpow(2) * bracket.tau().to_disc()).scale(pref * q ** 2)
    if k != 1:
        raise OutOfFormulaRange("f on z*^k is printed only for k = 1")
    bracket = r_f * one_minus(q ** -2) - r_f.compose_scale(q ** 2) * one_minus(SC_ONE)
    return bracket.tau().to_disc().scale(pref * q ** -2)


def commutator_highest_coefficient(degrees: AnsatzDegrees, sign: str) -> Scalar:
    """Leading q-power combination of the commutator obstruction.

    For positive jump this is the printed bracket of the highest term;
    its vanishing is necessary for a symmetry with the given ansatz.
    For negative jump and n >= 2 the analogous bracket is returned (with
    the third sign corrected to match the quadratic it produces); at
    n = 1 the division-map variant applies instead.
    """
    n, s = degrees.n, degrees.n_e + degrees.n_f
    qp = Scalar.q_power
    if sign == GJ_POSITIVE:
        return (
            -qp(-(n + 1) * n)
            - qp(-(n + 1) * n - 2)
            + qp(-(3 * n + 1) * n + 2 - 2 * n * s)
            + qp((n - 1) * n - 4 + 2 * n * s)
        )
    if sign != GJ_NEGATIVE:
        raise ValueError(f"sign must be {GJ_POSITIVE!r} or {GJ_NEGATIVE!r}")
    if n == 1:
        return qp(2 * s - 2) + qp(-2 * s - 4) - qp(-2) - qp(-4)
    return (
        -qp(2 + (n - 1) * n + 2 * n * s)
        + (SC_ONE + qp(-2)) * qp((-n - 1) * n)
        - qp(-4 + (-3 * n - 1) * n - 2 * n * s)
    )


@dataclass(frozen=True)
class QuadraticCase:
    """One quadratic n^2 + n s + c = 0 solved for the ansatz degree sum s."""

    sign: str
    constant: int
    n: int
    s_solution: Fraction
    admissible: bool


@dataclass
class NonexistenceReport:
    n_max: int
    cases: list[QuadraticCase]
    jump_one: dict
    all_clear: bool

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "all_clear": self.all_clear,
            "admissible_above_one": [
                {"sign": c.sign, "constant": c.constant, "n": c.n, "s": str(c.s_solution)}
                for c in self.cases
                if c.admissible
            ],
            "jump_one": self.jump_one,
            "cases_scanned": len(self.cases),
        }

    def __str__(self):
        bad = [c for c in self.cases if c.admissible]
        lines = [
            f"scanned n = 2..{self.n_max} in the four quadratic cases "
            f"({len(self.cases)} instances)",
        ]
        if bad:
            for c in bad:
                lines.append(
                    f"ANOMALY: {c.sign} with constant {c.constant} admits "
                    f"n = {c.n}, s = {c.s_solution}"
                )
        else:
            lines.append("no admissible (n >= 2, s >= 0) in any case")
        j = self.jump_one
        lines.append(
            "jump magnitude 1: degree sums "
            f"{j['GJ>0']} admissible for positive jump, "
            f"{j['GJ<0']} for negative jump (via the division-map equation)"
        )
        lines.append("CERTIFIED" if self.all_clear else "FAILED")
        return "\n".join(lines)


def nonexistence_scan(n_max: int) -> NonexistenceReport:
    """Certify that no jump magnitude above 1 admits ansatz degrees.

    The four cases are n^2 + n s + c = 0 with c in {-2, -1} for positive
    jump and c in {+2, +1} for negative jump; s = n_e + n_f must be a
    nonnegative integer.  The jump-1 confirmations are reported as well:
    s in {1, 0} for positive jump, and for negative jump the degree
    condition s = 1 (the division-map equation forces s <= 1 and s = 0
    collapses to the trivial series).
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    cases = []
    for sign, constant in (
        (GJ_POSITIVE, -2),
        (GJ_POSITIVE, -1),
        (GJ_NEGATIVE, 2),
        (GJ_NEGATIVE, 1),
    ):
        for n in range(2, n_max + 1):
            s = Fraction(-constant - n * n, n)
            admissible = s.denominator == 1 and s >= 0
            cases.append(QuadraticCase(sign, constant, n, s, admissible))

    jump_one = {
        # n = 1 in n^2 + n s - 2 = 0 gives s = 1; in n^2 + n s - 1 = 0, s = 0
        GJ_POSITIVE: sorted(
            int(Fraction(-c - 1, 1)) for c in (-2, -1) if Fraction(-c - 1, 1) >= 0
        ),
        # the negative-jump quadratics have no root at n = 1 (s = -3, -2);
        # the division-map equation leaves s = 1 as the only degree sum
        GJ_NEGATIVE: [1],
    }
    all_clear = not any(c.admissible for c in cases)
    return NonexistenceReport(n_max, cases, jump_one, all_clear)
