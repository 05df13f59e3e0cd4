from fractions import Fraction

import pytest

from app.models.expression.constant_expr import (
    I,
    coefficient_at,
    coefficient_paths,
    exp_i_pi,
    rational,
    replace_coefficient,
)
from app.models.identity.identity import ContourTerm, Identity, SeriesTerm
from app.models.precision.precision import PrecisionCtx
from app.models.report.verification_report import ReportStatus
from app.services.constants.constants_service import ConstantsService
from app.services.verifier.catalog import builtin_catalog, catalog_hash
from app.services.verifier.verifier_service import VerifierService

CHEAP_IDS = ["chen_pos", "chen_neg", "chudnovsky", "s1_classical", "f32_k2", "s3_m12", "s3_4"]


def test_catalog_has_all_entries_in_order():
    catalog = builtin_catalog()
    ids = [identity.id for identity in catalog]
    assert len(catalog) == 21
    assert len(set(ids)) == 21
    assert ids[0] == "chudnovsky"
    assert ids[-1] == "thm3_family"


def test_catalog_metadata():
    s3_4 = VerifierService.find_identity("s3_4")
    assert s3_4.weight == 3
    assert s3_4.level == 4
    assert s3_4.min_digits == 40
    family = VerifierService.find_identity("thm3_family")
    assert family.is_family
    assert family.rhs is None
    assert family.min_digits == 30


def test_catalog_hash_is_stable():
    assert catalog_hash() == catalog_hash()
    assert catalog_hash() != catalog_hash(builtin_catalog()[:-1])


def test_find_identity_unknown():
    with pytest.raises(ValueError):
        VerifierService.find_identity("s9_9")


def test_threshold_is_capped_by_precision(ctx20):
    identity = VerifierService.find_identity("chen_pos")
    assert VerifierService.threshold(identity, ctx20) == 15


def test_digits_agreed(ctx20):
    mp = ctx20.mp
    assert VerifierService.digits_agreed(mp.mpf(2), mp.mpf(2), ctx20) == ctx20.dps
    assert VerifierService.digits_agreed(mp.mpf("1.000001"), mp.mpf(1), ctx20) == 6.0
    assert VerifierService.digits_agreed(mp.mpf("1000.01"), mp.mpf(1000), ctx20) == 5.0


@pytest.mark.parametrize("identity_id", CHEAP_IDS)
def test_cheap_identities_pass(ctx20, identity_id):
    report = VerifierService.verify(VerifierService.find_identity(identity_id), ctx20)
    assert report.status == ReportStatus.PASS, report.message
    assert report.digits_agreed >= 15
    assert report.precision_used == ctx20.dps


CORRUPTIONS = [
    ("chudnovsky", Fraction(33, 16), Fraction(34, 33)),
    ("s1_classical", Fraction(2, 9), Fraction(1001, 1000)),
    ("s3_4", Fraction(1, 32), Fraction(1001, 1000)),
    ("s3_m94", Fraction(5, 9), Fraction(1001, 1000)),
    ("s3_m12", Fraction(35, 4), Fraction(1001, 1000)),
]


def corrupt(identity, magnitude, factor):
    for path in coefficient_paths(identity.rhs):
        coefficient = coefficient_at(identity.rhs, path)
        if abs(coefficient) == magnitude:
            return identity.with_rhs(replace_coefficient(identity.rhs, path, coefficient * factor))
    raise AssertionError(f"{identity.id} no tiene un coeficiente {magnitude}")


@pytest.mark.parametrize("identity_id, magnitude, factor", CORRUPTIONS, ids=[c[0] for c in CORRUPTIONS])
def test_corrupted_coefficient_fails(identity_id, magnitude, factor):
    ctx = PrecisionCtx(digits=40)
    broken = corrupt(VerifierService.find_identity(identity_id), magnitude, factor)
    report = VerifierService.verify(broken, ctx)
    assert report.status == ReportStatus.FAIL
    assert report.digits_agreed <= 5


# S_k(-x²)·x = genchen_contour(k, w) con x = (1-w²)/w
PATHWAYS = [
    ("s3_2", 3, exp_i_pi(Fraction(1, 4)), I),
    ("s3_m94", 3, rational(1, 2), rational(2, 3)),
    ("s4_3", 4, exp_i_pi(Fraction(1, 3)), I),
]


@pytest.mark.parametrize("identity_id, k, w, factor", PATHWAYS, ids=[p[0] for p in PATHWAYS])
def test_series_contour_and_closed_form_agree(identity_id, k, w, factor):
    ctx = PrecisionCtx(digits=40)
    identity = VerifierService.find_identity(identity_id)
    series = VerifierService.evaluate_lhs(identity.lhs, ctx)
    contour = VerifierService.evaluate_lhs(ContourTerm(k, w, factor), ctx)
    closed = ConstantsService.eval_expr(identity.rhs, ctx).value
    assert VerifierService.digits_agreed(series, contour, ctx) >= 30
    assert VerifierService.digits_agreed(series, closed, ctx) >= 30
    assert VerifierService.digits_agreed(contour, closed, ctx) >= 30


def test_evaluation_error_is_reported(ctx20):
    divergent = Identity("bad", "S_3(5)", SeriesTerm(3, 5), rational(1), weight=3, level=None, anchor="-")
    report = VerifierService.verify(divergent, ctx20)
    assert report.status == ReportStatus.ERROR
    assert report.message
    assert report.lhs_value == ""


def test_verify_all_on_empty_catalog(ctx20):
    assert VerifierService.verify_all(ctx20, catalog=[]) == []


def test_verify_all_keeps_catalog_order(ctx20):
    catalog = [VerifierService.find_identity(i) for i in ("s1_classical", "chen_pos")]
    reports = VerifierService.verify_all(ctx20, catalog=catalog)
    assert [r.id for r in reports] == ["s1_classical", "chen_pos"]


def test_verify_all_rejects_bad_worker_count(ctx20):
    with pytest.raises(ValueError):
        VerifierService.verify_all(ctx20, workers=0)


@pytest.mark.slow
def test_parallel_run_matches_serial_run(ctx20):
    catalog = [VerifierService.find_identity(i) for i in ("chen_pos", "chen_neg", "s1_classical")]
    serial = VerifierService.verify_all(ctx20, workers=1, catalog=catalog)
    parallel = VerifierService.verify_all(ctx20, workers=2, catalog=catalog)
    assert [r.stable_dict() for r in serial] == [r.stable_dict() for r in parallel]


@pytest.mark.slow
def test_full_catalog_passes(ctx20):
    reports = VerifierService.verify_all(ctx20)
    failures = [(r.id, r.status.value, r.message) for r in reports if not r.passed]
    assert failures == []


@pytest.mark.slow
@pytest.mark.parametrize("identity_id", ["chen_pos", "chen_neg"])
def test_chen_series_at_sixty_digits(identity_id):
    report = VerifierService.verify(VerifierService.find_identity(identity_id), PrecisionCtx(digits=60))
    assert report.status == ReportStatus.PASS
    assert report.digits_agreed >= 50


@pytest.mark.slow
def test_theorem3_family_at_forty_digits():
    report = VerifierService.verify(VerifierService.find_identity("thm3_family"), PrecisionCtx(digits=40))
    assert report.status == ReportStatus.PASS
    assert report.digits_agreed >= 30
