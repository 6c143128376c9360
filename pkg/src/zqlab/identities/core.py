"""Shared plumbing for the identity verifiers: config, reports, test functions, registry."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Mapping

import numpy as np

from ..arith import SmoothingScheme
from ..quad import integrate_adaptive, integrate_semi_infinite
from ..specfun import bessel_k, gamma, loggamma
from ..zeta import ZeroTable, zero_table


@dataclass(frozen=True)
class VerifierConfig:
    """Truncation and tolerance knobs shared by all verifiers.

    ``series_terms`` and ``tolerance`` default to per-identity values when
    left as None.  ``mutations`` scales named right-hand-side components and
    exists only for the mutation controls in the test suite.
    """
    series_terms: int | None = None
    zero_count: int = 50
    quad_tol: float = 1e-12
    smoothing: SmoothingScheme = SmoothingScheme("abel_exponential", 1e6)
    tolerance: float | None = None
    mutations: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.series_terms is not None and self.series_terms <= 0:
            raise ValueError("series_terms must be positive")
        if self.zero_count <= 0 or self.quad_tol <= 0:
            raise ValueError("zero_count and quad_tol must be positive")
        if self.tolerance is not None and self.tolerance <= 0:
            raise ValueError("tolerance must be positive")

    def with_(self, **kw) -> "VerifierConfig":
        return replace(self, **kw)

    def zeros(self) -> ZeroTable:
        return zero_table(100).head(self.zero_count) if self.zero_count <= 100 else zero_table(self.zero_count)


@dataclass
class IdentityReport:
    identity_id: str
    params: dict
    lhs: float
    rhs: float
    rhs_components: dict
    residual_abs: float
    residual_rel: float
    truncation: dict
    passed: bool
    wall_time_ms: int
    tolerance: float
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "params": dict(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "rhs_components": dict(self.rhs_components),
            "residual_abs": self.residual_abs,
            "residual_rel": self.residual_rel,
            "truncation": dict(self.truncation),
            "tolerance": self.tolerance,
            "pass": self.passed,
            "wall_time_ms": self.wall_time_ms,
            "notes": list(self.notes),
        }


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int(round(1000 * (time.perf_counter() - self.t0)))


def make_report(identity_id: str, params: dict, lhs: float, components: dict, cfg: VerifierConfig,
                tolerance: float, wall_time_ms: int = 0, series_terms=None, notes=(),
                smoothing: str | None = None, zero_count: int | None = None) -> IdentityReport:
    """Apply any mutations, sum the RHS components and compare against the LHS."""
    comps = {k: float(v) * float(cfg.mutations.get(k, 1.0)) for k, v in components.items()}
    rhs = math.fsum(comps.values())
    lhs = float(lhs)
    res = abs(lhs - rhs)
    return IdentityReport(
        identity_id=identity_id,
        params={k: float(v) for k, v in params.items()},
        lhs=lhs,
        rhs=rhs,
        rhs_components=comps,
        residual_abs=res,
        residual_rel=res / max(abs(lhs), abs(rhs), 1e-300),
        truncation={
            "series_terms": series_terms,
            "zero_count": cfg.zero_count if zero_count is None else zero_count,
            "quad_tol": cfg.quad_tol,
            "smoothing": smoothing,
        },
        passed=bool(res <= tolerance),
        wall_time_ms=int(wall_time_ms),
        tolerance=tolerance,
        notes=list(notes),
    )


# ---------------------------------------------------------------- test functions

@dataclass(frozen=True)
class TestFunction:
    """A Mellin pair (phi, Phi) from one of the built-in families."""
    kind: str
    params: tuple
    phi: Callable
    mellin: Callable
    decay_exponent: float

    __test__ = False   # keep pytest from collecting this class

    def mellin_check(self, s: float) -> float:
        """|int_0^inf x^{s-1} phi(x) dx - Phi(s)| at a real sample point s."""
        f = lambda x: np.asarray(x, dtype=float) ** (s - 1) * self.phi(x)
        if self.kind == "riesz":
            y = self.params[0]
            val = integrate_adaptive(f, 0.0, y, tol=1e-13).value
        else:
            val = integrate_adaptive(f, 0.0, 1.0, tol=1e-13).value + integrate_semi_infinite(f, 1.0).value
        return abs(val - float(np.real(self.mellin(s))))


def exp_test_function(y: float) -> TestFunction:
    return TestFunction("exp", (y,), lambda x: np.exp(-np.asarray(x) * y),
                        lambda s: np.exp(loggamma(s) - s * math.log(y)), 1.0)


def gauss_test_function(y: float) -> TestFunction:
    return TestFunction("gauss", (y,), lambda x: np.exp(-np.asarray(x) ** 2 * y),
                        lambda s: 0.5 * np.exp(loggamma(np.asarray(s) / 2) - np.asarray(s) / 2 * math.log(y)), 1.0)


def k0_test_function(y: float) -> TestFunction:
    return TestFunction("k0", (y,), lambda x: bessel_k(0, np.asarray(x) * y),
                        lambda s: 2.0 ** (np.asarray(s) - 2) * np.exp(2 * loggamma(np.asarray(s) / 2)
                                                                      - np.asarray(s) * math.log(y)), 1.0)


def riesz_test_function(y: float, k: float) -> TestFunction:
    def phi(x):
        x = np.asarray(x, dtype=float)
        return np.where(x < y, np.abs(1 - x / y) ** k, 0.0)

    def mellin(s):
        s = np.asarray(s)
        return y ** s * gamma(s) * math.gamma(k + 1) / gamma(s + k + 1)

    return TestFunction("riesz", (y, k), phi, mellin, float(k))


# ---------------------------------------------------------------- registry

@dataclass(frozen=True)
class IdentitySpec:
    identity_id: str
    run: Callable[..., list]           # (cfg, **params) -> list[IdentityReport]
    reference: tuple                   # tuple of param dicts used by `verify all`
    tolerance: float
    mutation_target: str | tuple | None   # component(s) whose 1% change must flip pass -> fail
    heavy: bool = False                # runs 10^6-scale smoothed sums


REGISTRY: dict[str, IdentitySpec] = {}


def register(spec: IdentitySpec) -> IdentitySpec:
    REGISTRY[spec.identity_id] = spec
    return spec
