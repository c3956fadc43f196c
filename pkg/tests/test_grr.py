import pytest

from thetacalc import (
    CurveLineBundleSpec,
    InputError,
    SheafInvariant,
    abel_pushforward,
    curve_chi,
    integrate,
    mukai_transform,
    serre_dual_degree,
)


class TestAbelPushforward:
    def test_degree_2g(self):
        assert abel_pushforward(CurveLineBundleSpec(3, 6)).value.coeffs == (0, 0, 1, 4)

    def test_degree_g_minus_1(self):
        ch = abel_pushforward(CurveLineBundleSpec(3, 2))
        assert ch.value.coeffs == (0, 0, 1, 0)
        assert integrate(ch.value) == 0

    def test_genus_two_degree_zero(self):
        assert abel_pushforward(CurveLineBundleSpec(2, 0)).value.coeffs == (0, 1, -1)

    def test_genus_one(self):
        # the curve is the whole elliptic curve: ch(L) = (1, d)
        assert abel_pushforward(CurveLineBundleSpec(1, 5)).value.coeffs == (1, 5)


class TestCurveChi:
    @pytest.mark.parametrize("g", [2, 5, 9])
    def test_degree_2g(self, g):
        assert curve_chi(CurveLineBundleSpec(g, 2 * g)) == g + 1

    def test_degree_g_minus_1(self):
        assert curve_chi(CurveLineBundleSpec(4, 3)) == 0

    def test_genus_two_degree_zero(self):
        assert curve_chi(CurveLineBundleSpec(2, 0)) == -1


class TestSerreDual:
    def test_degree_2g(self):
        assert serre_dual_degree(CurveLineBundleSpec(3, 6)).degree == -2

    def test_fixed_point(self):
        assert serre_dual_degree(CurveLineBundleSpec(5, 4)).degree == 4

    def test_genus_two(self):
        assert serre_dual_degree(CurveLineBundleSpec(2, 0)) == CurveLineBundleSpec(2, 2)


def test_invalid_genus():
    with pytest.raises(InputError):
        CurveLineBundleSpec(0, 3)


@pytest.mark.parametrize("g", range(1, 13))
def test_grr_properties(g):
    for d in range(-10, 31):
        spec = CurveLineBundleSpec(g, d)
        ch = abel_pushforward(spec)
        assert integrate(ch.value) == curve_chi(spec)
        assert ch.value[g - 1] == 1
        dual = serre_dual_degree(spec)
        assert serre_dual_degree(dual) == spec
        assert curve_chi(spec) == -curve_chi(dual)


@pytest.mark.parametrize("g", range(2, 9))
def test_transform_ranks_match_picard_ranks(g):
    for d in range(2 * g - 1, 4 * g):
        t = mukai_transform(SheafInvariant(abel_pushforward(CurveLineBundleSpec(g, d)), 0))
        assert t.rank == d + 1 - g
    for d in range(-8, 0):
        t = mukai_transform(SheafInvariant(abel_pushforward(CurveLineBundleSpec(g, d)), 1))
        assert t.rank == g - d - 1
