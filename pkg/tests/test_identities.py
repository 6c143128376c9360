import math

import numpy as np
import pytest

from zqlab.arith import divisor_table
from zqlab.identities import (ORDER, REGISTRY, ParameterDomainError, UnknownIdentityError, VerifierConfig,
                              accepted_params, default_config, exp_test_function, gauss_test_function, get_spec,
                              k0_test_function, riesz_test_function, run_identity, verify_cohen_sigma,
                              verify_lambda_riesz, verify_mu_ramanujan, verify_rg_sigma)
from zqlab.identities import d2_kernel

LIGHT = [iid for iid in ORDER if not REGISTRY[iid].heavy]
REPORT_KEYS = {"identity_id", "params", "lhs", "rhs", "rhs_components", "residual_abs", "residual_rel",
               "truncation", "pass", "wall_time_ms"}


def test_registry():
    assert set(ORDER) == set(REGISTRY)
    assert len(ORDER) == 15
    with pytest.raises(UnknownIdentityError):
        get_spec("bogus")
    assert accepted_params("cohen-sigma") == ("a", "b", "x")
    assert default_config("cohen-lambda").zero_count == 40


@pytest.mark.parametrize("iid", LIGHT)
def test_light_identities_pass_at_reference_points(iid):
    reps = run_identity(iid)
    assert reps
    for r in reps:
        d = r.to_dict()
        assert REPORT_KEYS <= set(d)
        assert set(d["truncation"]) >= {"series_terms", "zero_count", "quad_tol", "smoothing"}
        assert r.passed, d
        assert r.residual_abs <= r.tolerance


def test_reports_are_deterministic():
    strip = lambda reps: [{k: v for k, v in r.to_dict().items() if k != "wall_time_ms"} for r in reps]
    for iid in ("rg-lambda", "rg-d2", "lemmas"):
        assert strip(run_identity(iid)) == strip(run_identity(iid))


@pytest.mark.parametrize("iid, params", [("cohen-lambda", {"x": 1.3}), ("rg-lambda", {"x": 2.0}),
                                         ("rg-sigma", {"a": 0.4, "b": 0.1, "x": 1.0}),
                                         ("rg-d2", {"x": 1.0}), ("cohen-d2", {"x": 2.5})])
def test_zero_count_stability(iid, params):
    r40 = run_identity(iid, default_config(iid).with_(zero_count=40), params)[0]
    r80 = run_identity(iid, default_config(iid).with_(zero_count=80), params)[0]
    assert abs(r40.residual_abs - r80.residual_abs) < 1e-10
    assert r80.truncation["zero_count"] == 80


def test_parameter_domains():
    with pytest.raises(ParameterDomainError):
        verify_cohen_sigma(a=0.9, b=0.5)
    with pytest.raises(ParameterDomainError):
        verify_rg_sigma(a=0.0, b=0.2)
    with pytest.raises(ParameterDomainError):
        verify_rg_sigma(a=0.2, b=0.2)
    with pytest.raises(ValueError):
        verify_lambda_riesz(y=10.0)
    with pytest.raises(ValueError):
        verify_mu_ramanujan(alpha=1.0, lhs_form="bogus")


def test_config_validation():
    with pytest.raises(ValueError):
        VerifierConfig(zero_count=0)
    with pytest.raises(ValueError):
        VerifierConfig(series_terms=-1)
    with pytest.raises(ValueError):
        VerifierConfig(tolerance=0.0)
    assert VerifierConfig().with_(zero_count=7).zero_count == 7


def test_explicit_tolerance_is_honoured():
    r = run_identity("cohen-lambda", VerifierConfig(zero_count=40, tolerance=1e-20), {"x": 1.3})[0]
    assert r.tolerance == 1e-20 and not r.passed


def test_mutation_scales_only_the_named_component():
    base = run_identity("rg-lambda", params={"x": 1.0})[0]
    mut = run_identity("rg-lambda", default_config("rg-lambda").with_(mutations={"constant": 1.01}), {"x": 1.0})[0]
    assert mut.rhs_components["constant"] == pytest.approx(1.01 * base.rhs_components["constant"], rel=1e-15)
    assert mut.rhs_components["series"] == base.rhs_components["series"]
    assert base.passed and not mut.passed


@pytest.mark.parametrize("tf", [exp_test_function(1.3), gauss_test_function(0.7), k0_test_function(1.0),
                                riesz_test_function(2.5, 0.5)], ids=lambda t: t.kind)
def test_mellin_pairs(tf):
    for s in (1.5, 2.5):
        assert tf.mellin_check(s) <= 1e-8


def test_d2_contour_closure():
    # the shifted-contour decomposition the experimental kernel series aims at closes exactly
    n = np.arange(1, 81, dtype=float)
    d = divisor_table(80)[1:].astype(float)
    lhs = math.fsum(d * d * n * n * np.exp(-n))
    rhs = d2_kernel.residue_one() + d2_kernel.zero_sum(VerifierConfig()) + d2_kernel.contour_value()
    assert abs(lhs - rhs) < 1e-9


def test_d2_kernel_experimental_is_flagged():
    rep = d2_kernel.verify_d2_kernel_experimental(terms=2, p_max=20)[0]
    assert rep.identity_id == "d2-kernel-experimental"
    assert "experimental" in rep.notes[0]
    assert rep.tolerance == pytest.approx(d2_kernel.EXPERIMENTAL_REL_TOL * abs(d2_kernel.contour_value()))
    # pass/fail here compares the kernel series against the contour piece only
    target = d2_kernel.contour_value()
    rel = abs(rep.rhs_components["series"] - target) / abs(target)
    assert f"relative error {rel:.3g}" in rep.notes[3]
    assert rep.passed == (rel <= d2_kernel.EXPERIMENTAL_REL_TOL)
