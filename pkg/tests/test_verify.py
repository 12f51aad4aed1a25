from fractions import Fraction

import pytest

import importlib
from hilbq.base import preset
from hilbq.config import Settings
from hilbq.series import ZQSeries
from hilbq.verify import (InsufficientSamplesError, chi_extrapolate, Report,
    SUITES, register, identities, run_identity, run_suite)

# `hilbq.verify` re-exports the `identities` function, which shadows the
# submodule of the same name on attribute lookup.
registry = importlib.import_module("hilbq.verify.identities")


def _family(f, chis, qmax=2):
    return [(c, ZQSeries({(n, ()): f(c, n) for n in range(qmax + 1)},
        qmax=qmax)) for c in chis]


### Extrapolation ###


def test_constant_family():
    fam = _family(lambda c, n: n + 1, [3, 4, 5])
    assert chi_extrapolate(fam) == fam[0][1]


def test_linear_family_vanishes_at_zero():
    fam = _family(lambda c, n: c * n, [3, 4, 5])
    assert not chi_extrapolate(fam)


def test_reevaluation_reproduces_samples():
    fam = _family(lambda c, n: c ** n - 2 * c * n, [2, 3, 4])
    for c, s in fam:
        assert chi_extrapolate(fam, target=c) == s


def test_too_few_samples():
    fam = _family(lambda c, n: c ** n, [3, 4])
    with pytest.raises(InsufficientSamplesError):
        chi_extrapolate(fam)


def test_degree_violation_detected():
    fam = _family(lambda c, n: c ** 3 if n == 1 else 0, [1, 2, 3, 4])
    with pytest.raises(InsufficientSamplesError):
        chi_extrapolate(fam)


def test_bad_families():
    with pytest.raises(InsufficientSamplesError):
        chi_extrapolate([])
    with pytest.raises(ValueError):
        chi_extrapolate(_family(lambda c, n: 1, [3, 3]))


### Registry ###


def test_every_suite_is_populated():
    for suite in SUITES:
        assert identities(suite)
    assert len(identities()) == sum(len(identities(s)) for s in SUITES)
    with pytest.raises(ValueError):
        identities("performance")


def test_duplicate_registration():
    with pytest.raises(ValueError, match="already in registry"):
        register("gottsche", "identities")(lambda models, qmax, s: iter(()))


def test_unknown_identity():
    with pytest.raises(ValueError):
        run_identity("no-such-identity", [], 3)


@pytest.fixture
def scratch_registry(monkeypatch):
    monkeypatch.setattr(registry, "_REGISTRY", dict(registry._REGISTRY))


def test_mismatch_is_reported(scratch_registry):
    @register("scratch-mismatch", "constants")
    def _cases(models, qmax, settings):
        yield "equal", Fraction(1), Fraction(1)
        yield "differs", ZQSeries.monomial(1, 2, qmax=qmax), \
            ZQSeries.monomial(2, 2, qmax=qmax)

    report = run_identity("scratch-mismatch", [], 3)
    assert report.status == "fail"
    assert report.cases == 2
    assert report.mismatch == {"case": "differs", "key": "(2, ())",
        "lhs": "1/1", "rhs": "2/1"}


def test_library_errors_are_reported(scratch_registry):
    @register("scratch-error", "constants")
    def _cases(models, qmax, settings):
        raise ValueError("bad input")
        yield

    report = run_identity("scratch-error", [], 3)
    assert report.status == "error"
    assert "bad input" in report.mismatch["error"]


def test_report_json():
    r = Report("gottsche", "minimal", 6, "pass", 1)
    assert r.passed
    assert r.to_json() == {"identity": "gottsche", "model": "minimal",
        "Qmax": 6, "status": "pass", "cases": 1}


### Suites ###


@pytest.mark.parametrize("name", ["mzv-divisor", "mzv-reflection",
    "b-catalan", "b-even-rows", "b-routes", "gottsche", "F0-one",
    "theta-equality", "commutator", "trace-pair", "comm-jl",
    "comm-jl-adjoint"])
def test_identity_passes(name, minimal):
    report = run_identity(name, [minimal], 3, Settings())
    assert report.passed, report.mismatch


@pytest.mark.parametrize("name", ["comm-jl", "comm-jl-adjoint"])
def test_exponential_moves_past_a_lambda(name, two_class):
    report = run_identity(name, [two_class], 2, Settings())
    assert report.passed, report.mismatch
    assert report.cases == 4 * 2 * 9 * 19


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["fock", "identities", "constants"])
def test_suite_passes(suite):
    models = [preset("minimal"), preset("kmixed")]
    reports = run_suite(suite, models, 4, Settings())
    assert all(r.passed for r in reports), \
        [r.to_json() for r in reports if not r.passed]


@pytest.mark.slow
def test_abelian_suite():
    models = [preset("minimal"), preset("kpos")]
    reports = run_suite("abelian", models, settings=Settings())
    assert all(r.passed for r in reports), \
        [r.to_json() for r in reports if not r.passed]
    assert {r.qmax for r in reports} == {Settings().extrapolation_qmax}
