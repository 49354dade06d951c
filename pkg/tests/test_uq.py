"""PBW arithmetic and Hopf structure checks."""

import random

import pytest

from qdisc.scalars import SC_ONE, SC_ZERO, Scalar
from qdisc.uq import (
    InvolutionForm,
    UqElem,
    UqGenerator,
    antipode_gen,
    antipode_star,
    coproduct_gen,
    counit,
    star_elem,
    star_gen,
    uq_mul,
)

Q = Scalar.q_power(1)
E, F, K, KINV, ONE = UqElem.e(), UqElem.f(), UqElem.k(), UqElem.kinv(), UqElem.one()
KAPPA = (Q - Q ** -1).inverse()


def rnd_elem(rng, emax=3, mmax=3, nterms=3):
    x = UqElem.zero()
    for _ in range(nterms):
        t = (rng.randint(0, emax), rng.randint(-mmax, mmax), rng.randint(0, emax))
        c = Scalar.from_int(rng.randint(-3, 3)) * Scalar.q_power(rng.randint(-1, 1))
        x = x + UqElem.monomial(*t, coeff=c)
    return x


class TestMultiplication:
    def test_k_times_e(self):
        assert K * E == UqElem.monomial(1, 1, 0, Q ** 2)

    def test_k_times_f_is_basis_monomial(self):
        # k f is itself a PBW monomial; the relation shows as f k = q^2 k f
        assert K * F == UqElem.monomial(0, 1, 1)
        assert F * K == UqElem.monomial(0, 1, 1, Q ** 2)

    def test_f_times_e(self):
        expected = (
            UqElem.monomial(1, 0, 1)
            + UqElem.monomial(0, 1, 0, -KAPPA)
            + UqElem.monomial(0, -1, 0, KAPPA)
        )
        assert F * E == expected

    def test_commutator(self):
        assert E * F - F * E == (K - KINV).scale(KAPPA)

    def test_ef_times_k(self):
        # stepwise straightening: e f k = k e f = q^2 e k f
        expected = UqElem.monomial(1, 1, 1, Q ** 2)
        assert (E * F) * K == expected
        assert K * (E * F) == expected

    def test_k_kinv(self):
        assert K * KINV == ONE
        assert KINV * K == ONE

    def test_associativity(self):
        rng = random.Random(11)
        for _ in range(8):
            a, b, c = (rnd_elem(rng) for _ in range(3))
            assert uq_mul(uq_mul(a, b), c) == uq_mul(a, uq_mul(b, c))


class TestCounit:
    def test_k_power(self):
        assert counit(K ** 3) == SC_ONE

    def test_e(self):
        assert counit(E) == SC_ZERO

    def test_mixture(self):
        x = UqElem.from_scalar(5) + UqElem.monomial(1, 1, 1, Scalar.from_int(2))
        assert counit(x) == Scalar.from_int(5)


class TestCoproductAndAntipode:
    def test_coproduct_summands(self):
        assert coproduct_gen(UqGenerator.E) == [(ONE, E), (E, K)]
        assert coproduct_gen(UqGenerator.F) == [(F, ONE), (KINV, F)]
        assert coproduct_gen(UqGenerator.K) == [(K, K)]

    def test_antipode_generators(self):
        assert antipode_gen(UqGenerator.E) == UqElem.monomial(1, -1, 0, -SC_ONE)
        assert antipode_gen(UqGenerator.K) == KINV
        assert antipode_gen(UqGenerator.F) == UqElem.monomial(0, 1, 1, -SC_ONE)

    def test_coproduct_respects_relations(self):
        # Delta(k)Delta(e) = q^2 Delta(e)Delta(k) etc., multiplied factorwise
        dk = _tensor(coproduct_gen(UqGenerator.K))
        dkinv = _tensor(coproduct_gen(UqGenerator.KINV))
        de = _tensor(coproduct_gen(UqGenerator.E))
        df = _tensor(coproduct_gen(UqGenerator.F))
        one2 = _tensor([(ONE, ONE)])
        assert _tmul(dk, de) == _tscale(_tmul(de, dk), Q ** 2)
        assert _tmul(dk, df) == _tscale(_tmul(df, dk), Q ** -2)
        assert _tmul(dk, dkinv) == one2
        comm = _tsub(_tmul(de, df), _tmul(df, de))
        assert comm == _tscale(_tsub(dk, dkinv), KAPPA)

    def test_counit_axiom_on_generators(self):
        for g in UqGenerator:
            total = UqElem.zero()
            for left, right in coproduct_gen(g):
                total = total + right.scale(counit(left))
            assert total == UqElem.from_generator(g)

    def test_antipode_axiom_on_generators(self):
        for g in UqGenerator:
            total = UqElem.zero()
            for left, right in coproduct_gen(g):
                total = total + _antipode_elem(left) * right
            assert total == ONE.scale(counit(UqElem.from_generator(g)))


def _antipode_elem(x: UqElem) -> UqElem:
    """S on a PBW element via S(e^i k^m f^j) = S(f)^j k^-m S(e)^i."""
    se, sf = antipode_gen(UqGenerator.E), antipode_gen(UqGenerator.F)
    out = UqElem.zero()
    for (i, m, j), c in x.terms.items():
        out = out + ((sf ** j) * UqElem.monomial(0, -m, 0) * (se ** i)).scale(c)
    return out


def _tensor(pairs):
    out = {}
    for left, right in pairs:
        for t1, c1 in left.terms.items():
            for t2, c2 in right.terms.items():
                key = (t1, t2)
                out[key] = out.get(key, SC_ZERO) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _tmul(a, b):
    out = {}
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            left = UqElem.monomial(*l1) * UqElem.monomial(*l2)
            right = UqElem.monomial(*r1) * UqElem.monomial(*r2)
            for t1, d1 in left.terms.items():
                for t2, d2 in right.terms.items():
                    key = (t1, t2)
                    out[key] = out.get(key, SC_ZERO) + c1 * c2 * d1 * d2
    return {k: v for k, v in out.items() if v}


def _tscale(a, s):
    return {k: v * s for k, v in a.items() if v * s}


def _tsub(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, SC_ZERO) - v
    return {k: v for k, v in out.items() if v}


class TestStarStructures:
    def test_form_a_values(self):
        assert star_gen(UqGenerator.E, InvolutionForm.A) == UqElem.monomial(
            0, 1, 1, Q ** 2
        )
        assert star_gen(UqGenerator.F, InvolutionForm.A) == UqElem.monomial(
            1, -1, 0, Q ** -2
        )
        assert star_gen(UqGenerator.K, InvolutionForm.A) == K

    def test_form_b_and_c_values(self):
        assert star_gen(UqGenerator.E, InvolutionForm.B) == UqElem.monomial(
            0, 1, 1, -(Q ** 2)
        )
        assert star_gen(UqGenerator.E, InvolutionForm.C) == E
        assert star_gen(UqGenerator.F, InvolutionForm.C) == F

    def test_antipode_star_form_a(self):
        assert antipode_star(UqGenerator.E, InvolutionForm.A) == F.scale(-(Q ** 2))
        assert antipode_star(UqGenerator.F, InvolutionForm.A) == E.scale(-(Q ** -2))
        assert antipode_star(UqGenerator.K, InvolutionForm.A) == KINV

    @pytest.mark.parametrize("form", list(InvolutionForm))
    def test_involutive_on_generators(self, form):
        for g in UqGenerator:
            x = UqElem.from_generator(g)
            assert star_elem(star_elem(x, form), form) == x

    @pytest.mark.parametrize("form", list(InvolutionForm))
    def test_antimultiplicative(self, form):
        rng = random.Random(ord(form.value[0]))
        for _ in range(6):
            a, b = rnd_elem(rng, emax=2, mmax=2), rnd_elem(rng, emax=2, mmax=2)
            assert star_elem(a * b, form) == star_elem(b, form) * star_elem(a, form)

    @pytest.mark.parametrize(
        "form",
        [InvolutionForm.A, InvolutionForm.B, InvolutionForm.D, InvolutionForm.E],
    )
    def test_antipode_star_squared_is_identity(self, form):
        for g in UqGenerator:
            x = UqElem.from_generator(g)
            once = _antipode_elem(star_elem(x, form))
            twice = _antipode_elem(star_elem(once, form))
            assert twice == x
