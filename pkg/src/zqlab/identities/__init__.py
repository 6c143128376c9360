"""Identity verifiers and the registry used by the command line and the acceptance tests."""
from __future__ import annotations

import inspect

from .core import (REGISTRY, IdentityReport, IdentitySpec, TestFunction, VerifierConfig, exp_test_function,
                   gauss_test_function, k0_test_function, make_report, riesz_test_function)
from . import voronoi_lambda, lambda_mu, sigma_d2, lemmas_baselines  # noqa: F401  (populate REGISTRY)
from .lambda_mu import verify_cohen_lambda, verify_mu_ramanujan, verify_rg_lambda
from .lemmas_baselines import verify_baselines, verify_cn_sums, verify_lemmas
from .sigma_d2 import (ParameterDomainError, verify_cohen_d2, verify_cohen_sigma, verify_d2_residue_constants,
                       verify_rg_d2, verify_rg_sigma)
from .d2_kernel import verify_d2_kernel_experimental
from .voronoi_lambda import verify_lambda_exp, verify_lambda_gauss, verify_lambda_k0, verify_lambda_riesz

ORDER = ("lambda-exp", "lambda-gauss", "lambda-k0", "lambda-riesz", "cohen-lambda", "rg-lambda", "mu-ramanujan",
         "cohen-sigma", "rg-sigma", "cohen-d2", "rg-d2", "cn-sums", "d2-residues", "lemmas", "baselines")


class UnknownIdentityError(KeyError):
    pass


def identity_ids() -> tuple[str, ...]:
    return ORDER


def get_spec(identity_id: str) -> IdentitySpec:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def default_config(identity_id: str) -> VerifierConfig:
    """The VerifierConfig a verifier uses when called without one (zero counts differ by identity)."""
    return inspect.signature(get_spec(identity_id).run).parameters["cfg"].default


def accepted_params(identity_id: str) -> tuple[str, ...]:
    return tuple(get_spec(identity_id).reference[0])


def run_identity(identity_id: str, cfg: VerifierConfig | None = None, params: dict | None = None,
                 **kw) -> list[IdentityReport]:
    """Run one verifier at the given parameters, or at all its reference points when params is None.

    Without ``cfg`` the verifier's own default configuration is used.
    """
    spec = get_spec(identity_id)
    cfg = cfg or default_config(identity_id)
    points = (params,) if params is not None else spec.reference
    out = []
    for p in points:
        out.extend(spec.run(cfg=cfg, **p, **kw))
    return out


def run_all(cfg: VerifierConfig | None = None, include_heavy: bool = True) -> list[IdentityReport]:
    out = []
    for iid in ORDER:
        if include_heavy or not REGISTRY[iid].heavy:
            out.extend(run_identity(iid, cfg))
    return out


__all__ = [
    "ORDER", "REGISTRY", "accepted_params", "default_config", "verify_d2_kernel_experimental", "IdentityReport", "IdentitySpec", "ParameterDomainError", "TestFunction",
    "UnknownIdentityError", "VerifierConfig", "exp_test_function", "gauss_test_function", "get_spec",
    "identity_ids", "k0_test_function", "make_report", "riesz_test_function", "run_all", "run_identity",
    "verify_baselines", "verify_cn_sums", "verify_cohen_d2", "verify_cohen_lambda", "verify_cohen_sigma",
    "verify_d2_residue_constants", "verify_lambda_exp", "verify_lambda_gauss", "verify_lambda_k0",
    "verify_lambda_riesz", "verify_lemmas", "verify_mu_ramanujan", "verify_rg_d2", "verify_rg_lambda",
    "verify_rg_sigma",
]
