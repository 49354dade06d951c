"""Grammar round trips and parse failures for both expression languages."""

import pytest
from hypothesis import given, settings, strategies as st

from qdisc.disc import DiscElem, y_elem
from qdisc.parsing import (
    ParseError,
    disc_str,
    parse_disc_expr,
    parse_scalar_expr,
    parse_uq_expr,
    scalar_str,
    uq_str,
)
from qdisc.scalars import GaussianRational, Scalar
from qdisc.uq import UqElem

Q = Scalar.q_power(1)


class TestDiscGrammar:
    def test_monomial(self):
        assert parse_disc_expr("z*zs") == DiscElem.monomial(1, 1)

    def test_defining_relation_normalizes(self):
        assert parse_disc_expr("q^2*zs*z + 1 - q^2") == parse_disc_expr("z*zs")

    def test_y_desugars(self):
        assert parse_disc_expr("y") == y_elem()
        assert parse_disc_expr("1 - z*zs") == y_elem()

    def test_truncated_input(self):
        with pytest.raises(ParseError) as err:
            parse_disc_expr("z +")
        assert err.value.pos == 3
        assert err.value.expected

    def test_unknown_token(self):
        with pytest.raises(ParseError):
            parse_disc_expr("w")

    def test_negative_power_of_nonscalar(self):
        with pytest.raises(ParseError):
            parse_disc_expr("z^-1")
        with pytest.raises(ParseError):
            parse_disc_expr("1/z")

    def test_division_by_zero_literal(self):
        with pytest.raises(ParseError):
            parse_disc_expr("z/0")
        with pytest.raises(ParseError):
            parse_disc_expr("q^2/(1 - 1)")

    def test_rational_and_imaginary_literals(self):
        got = parse_scalar_expr("3/4 + 1/2*i")
        from fractions import Fraction

        assert got == Scalar.from_gaussian(
            GaussianRational(Fraction(3, 4), Fraction(1, 2))
        )

    def test_scalar_guard(self):
        with pytest.raises(ParseError):
            parse_scalar_expr("z + 1")

    def test_power_binds_tighter_than_product(self):
        assert parse_disc_expr("q^2*z") == DiscElem.monomial(1, 0, Q ** 2)


class TestUqGrammar:
    def test_commutator(self):
        kappa = (Q - Q ** -1).inverse()
        assert parse_uq_expr("e*f - f*e") == (UqElem.k() - UqElem.kinv()).scale(kappa)

    def test_k_inverse(self):
        assert parse_uq_expr("k*kinv") == UqElem.one()

    def test_unknown_name(self):
        with pytest.raises(ParseError) as err:
            parse_uq_expr("g")
        assert "e" in err.value.expected

    def test_z_not_in_uq_grammar(self):
        with pytest.raises(ParseError):
            parse_uq_expr("z")


# --- round-trip strategies over normal forms ---

fractions = st.fractions(
    min_value=-5, max_value=5, max_denominator=3
)
gaussians = st.builds(GaussianRational, fractions, fractions)
coeffs = st.builds(
    lambda g, p: Scalar.from_gaussian(g) * Scalar.q_power(p),
    gaussians,
    st.integers(min_value=-3, max_value=3),
)
denom_coeffs = st.builds(
    lambda c, extra: c / (Scalar.q_power(2) - extra) if extra else c,
    coeffs,
    st.integers(min_value=0, max_value=2),
)

disc_elems = st.lists(
    st.tuples(
        st.integers(min_value=0, max_value=5),
        st.integers(min_value=0, max_value=5),
        denom_coeffs,
    ),
    max_size=5,
).map(
    lambda rows: sum(
        (DiscElem.monomial(i, j, c) for i, j, c in rows), DiscElem.zero()
    )
)

uq_elems = st.lists(
    st.tuples(
        st.integers(min_value=0, max_value=4),
        st.integers(min_value=-4, max_value=4),
        st.integers(min_value=0, max_value=4),
        denom_coeffs,
    ),
    max_size=5,
).map(
    lambda rows: sum(
        (UqElem.monomial(i, m, j, c) for i, m, j, c in rows), UqElem.zero()
    )
)


class TestRoundTrip:
    @settings(max_examples=80, deadline=None)
    @given(disc_elems)
    def test_disc(self, elem):
        assert parse_disc_expr(disc_str(elem)) == elem

    @settings(max_examples=80, deadline=None)
    @given(uq_elems)
    def test_uq(self, elem):
        assert parse_uq_expr(uq_str(elem)) == elem

    @settings(max_examples=60, deadline=None)
    @given(denom_coeffs)
    def test_scalar(self, s):
        assert parse_scalar_expr(scalar_str(s)) == s

    def test_documented_scalar_form(self):
        assert scalar_str((Q ** 4 - 1) / Q ** 2) == "(q^4 - 1)/(q^2)"
