from fractions import Fraction

import pytest

from thetacalc import (
    ChernCharacter,
    CohClass,
    InputError,
    PpavContext,
    SheafInvariant,
    Side,
    UndeclaredWITError,
    check_wit_rules,
    double_transform_check,
    euler_characteristic,
    exp_theta,
    integrate,
    linear_combine,
    mukai_transform,
)
from thetacalc.fourier_mukai import mukai_coefficients

import oracles


def sheaf(g, coeffs, wit=None, side=Side.A):
    return SheafInvariant(ChernCharacter(CohClass(PpavContext(g), coeffs)), wit, side)


def random_sheaf(rng, g):
    """A WIT_j sheaf whose transform rank (-1)^j chi is a non-negative integer."""
    j = rng.randint(0, g)
    coeffs = oracles.random_coeffs(rng, g)
    coeffs[0] = rng.randint(1 if j == g else 0, 12)
    coeffs[g] = (-1) ** j * rng.randint(0, 12)
    if g == j == 0:
        coeffs[g] = coeffs[0]
    side = rng.choice([Side.A, Side.A_HAT])
    return sheaf(g, coeffs, j, side)


class TestMukaiTransform:
    def test_picard_bundle(self):
        out = mukai_transform(sheaf(3, [0, 0, 1, 4], 0))
        assert out.ch.value.coeffs == (4, -1, 0, 0)
        assert out.wit_index == 3
        assert out.side is Side.A_HAT

    @pytest.mark.parametrize("g", [1, 2, 5])
    def test_skyscraper_goes_to_trivial_bundle(self, g):
        ctx = PpavContext(g)
        out = mukai_transform(SheafInvariant(ChernCharacter(ctx.point()), 0))
        assert out.ch.value == ctx.unit()
        assert out.wit_index == g

    def test_wit_g_bundle_to_curve_class(self):
        out = mukai_transform(sheaf(3, [5, -1, 0, 0], 3, Side.A_HAT))
        assert out.ch.value.coeffs == (0, 0, 1, 5)
        assert out.wit_index == 0
        assert out.side is Side.A

    def test_requires_wit(self):
        with pytest.raises(UndeclaredWITError):
            mukai_transform(sheaf(2, [1, 0, 0]))

    def test_wit_out_of_range(self):
        with pytest.raises(InputError):
            mukai_transform(sheaf(2, [1, 0, 0], 3))

    def test_coefficient_rule_by_hand(self):
        # ch_i(out) = (-1)^(i+j) ch_{g-i}(in), written out for g = 4, j = 1
        x = [Fraction(3), Fraction(1, 2), Fraction(-2), Fraction(7, 3), Fraction(-5)]
        out = mukai_coefficients(CohClass(PpavContext(4), x), 1)
        assert list(out) == [-x[4], x[3], -x[2], x[1], -x[0]]


class TestWitRules:
    def test_ample_polarization(self):
        rep = check_wit_rules(SheafInvariant(ChernCharacter(exp_theta(1, PpavContext(3))), 0))
        assert rep.passed
        assert rep.derived["transform_rank"] == 1

    def test_rank_zero_wit_g(self):
        rep = check_wit_rules(sheaf(3, [0, 0, 0, 1], 3))
        assert not rep.passed
        assert "wit_g_locally_free" in [c.name for c in rep.failed()]

    def test_wit_one_sign_rule(self):
        rep = check_wit_rules(sheaf(2, [1, 0, -1], 1))
        assert rep.passed
        assert rep.derived["transform_rank"] == 1

    def test_negative_transform_rank(self):
        rep = check_wit_rules(sheaf(2, [1, 0, 1], 1))
        assert "transform_rank_nonnegative_integer" in [c.name for c in rep.failed()]

    def test_fractional_transform_rank(self):
        rep = check_wit_rules(sheaf(2, [1, 0, Fraction(1, 2)], 0))
        assert "transform_rank_nonnegative_integer" in [c.name for c in rep.failed()]

    def test_out_of_range(self):
        rep = check_wit_rules(sheaf(2, [1, 0, 0], 5))
        assert [c.name for c in rep.failed()] == ["wit_in_range"]

    def test_undeclared_is_reported_not_raised(self):
        rep = check_wit_rules(sheaf(2, [1, 0, 0]))
        assert [c.name for c in rep.failed()] == ["wit_declared"]

    def test_nonzero_wit0_needs_positive_transform_rank(self):
        rep = check_wit_rules(sheaf(2, [0, 1, 0], 0))
        assert "wit0_transform_nonzero" in [c.name for c in rep.failed()]


class TestDoubleTransform:
    def test_trivial_bundle(self):
        s = SheafInvariant(ChernCharacter(PpavContext(3).unit()), 3)
        once = mukai_transform(s)
        assert once.ch.value == PpavContext(3).point()
        assert double_transform_check(s)

    def test_polarization(self):
        ctx = PpavContext(4)
        s = SheafInvariant(ChernCharacter(exp_theta(1, ctx)), 0)
        once = mukai_transform(s)
        assert once.ch.value == exp_theta(-1, ctx)
        assert double_transform_check(s)

    def test_detects_difference(self):
        s = sheaf(2, [1, 0, 1], 0)
        assert double_transform_check(s)
        assert mukai_transform(mukai_transform(s)) != sheaf(2, [1, 0, 1], 0, Side.A_HAT)


@pytest.mark.parametrize("g", range(1, 11))
def test_involution_and_exchange(g):
    rng = oracles.random_seeded(500 + g)
    for _ in range(100):
        s = random_sheaf(rng, g)
        assert double_transform_check(s)
        t = mukai_transform(s)
        j = s.wit_index
        assert t.rank == (-1) ** j * euler_characteristic(s.ch)
        assert integrate(t.ch.value) == (-1) ** (g + j) * s.rank


@pytest.mark.parametrize("g", [1, 3, 6])
def test_linear(g):
    rng = oracles.random_seeded(600 + g)
    ctx = PpavContext(g)
    for _ in range(50):
        j = rng.randint(0, g)
        a = CohClass(ctx, oracles.random_coeffs(rng, g))
        b = CohClass(ctx, oracles.random_coeffs(rng, g))
        x, y = oracles.random_rational(rng), oracles.random_rational(rng)
        lhs = mukai_coefficients(linear_combine([(x, a), (y, b)]), j)
        rhs = linear_combine([(x, mukai_coefficients(a, j)), (y, mukai_coefficients(b, j))])
        assert lhs == rhs


@pytest.mark.parametrize("g", range(1, 13))
def test_minimal_class_exchange(g):
    for r in range(1, 15):
        out = mukai_transform(sheaf(g, [r, -1] + [0] * (g - 1), g, Side.A_HAT))
        assert out.ch.value[g - 1] == 1
        assert out.ch.value[g] == r


def test_json_roundtrip():
    s = sheaf(2, [3, Fraction(-1, 2), 0], 1, Side.A_HAT)
    assert s.to_json() == {"g": 2, "ch": ["3", "-1/2", "0"], "wit": 1, "side": "A-hat"}
    assert SheafInvariant.from_json(s.to_json()) == s
