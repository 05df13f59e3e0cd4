from fractions import Fraction

import pytest

from app.models.expression.constant_expr import Rat, exp_i_pi
from app.models.series.series import SeriesSpec
from app.services.quadrature.contour_service import ContourService
from app.services.series.binomial_series_service import BinomialSeriesService
from app.utils.errors import DomainError


def series(k, z, ctx):
    return BinomialSeriesService.s_series(SeriesSpec(k, z), ctx).value


def test_chen1_integral_is_s3_at_one(ctx20):
    value = ContourService.chen1_integral(ctx20).value
    assert abs(value - series(3, 1, ctx20)) < ctx20.mp.mpf(10) ** -19


def test_chen2_contour_is_s3_at_minus_one(ctx20):
    value = ContourService.chen2_contour(ctx20).value
    assert abs(value - series(3, -1, ctx20)) < ctx20.mp.mpf(10) ** -19


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("w", [Rat(Fraction(3, 5)), exp_i_pi(Fraction(1, 3))], ids=["real", "unimodular"])
def test_genchen_contour_matches_alternating_series(ctx20, k, w):
    contour = ContourService.genchen_contour(k, w, ctx20).value
    mp = ctx20.mp
    w_value = mp.mpc(0.6) if isinstance(w, Rat) else mp.expjpi(mp.mpf(1) / 3)
    x = (1 - w_value**2) / w_value
    expected = BinomialSeriesService.odd_series(k, x, ctx20, alternating=True).value
    assert abs(contour - expected) < mp.mpf(10) ** -18


def test_genchen_contour_rejects_inadmissible_parameter(ctx20):
    with pytest.raises(DomainError):
        ContourService.genchen_contour(3, Rat(Fraction(-1, 2)), ctx20)
    with pytest.raises(DomainError):
        ContourService.genchen_contour(3, 0, ctx20)


def test_beta_integral_matches_series(ctx20):
    mp = ctx20.mp
    beta = ContourService.beta_integral(4, Rat(Fraction(3, 2)), ctx20).value
    # Σ y^(2n+1)/((2n+1)^k C(2n,n)) = y·S_k(y²)
    expected = mp.mpf(3) / 2 * series(4, Fraction(9, 4), ctx20)
    assert abs(beta - expected) < mp.mpf(10) ** -19


def test_beta_integral_domain(ctx20):
    with pytest.raises(DomainError):
        ContourService.beta_integral(3, 3, ctx20)


@pytest.mark.parametrize("k", [1, 7])
def test_contour_weight_out_of_range(ctx20, k):
    with pytest.raises(ValueError):
        ContourService.beta_integral(k, 1, ctx20)


def test_secondopen_integral_is_s3_at_minus_one(ctx20):
    value = ContourService.secondopen_integral(ctx20).value
    assert abs(value - series(3, -1, ctx20)) < ctx20.mp.mpf(10) ** -19


def test_secondopen_integrand_is_symmetric_under_inversion(ctx20):
    # x → 1/x deja fijo x/(1+x²), así ∫_{1/2}^1 = ∫_1^2
    mp = ctx20.mp
    inner = ContourService.secondopen_integral(ctx20, lower=mp.mpf(1) / 2, upper=1).value
    outer = ContourService.secondopen_integral(ctx20, lower=1, upper=2).value
    assert abs(inner - outer) < mp.mpf(10) ** -19
