"""Voronoi summation for the Liouville function with four concrete test functions.

Each right-hand side has three parts: a constant from the pole of
zeta(2s)/zeta(s) at s = 1/2, a sum over the non-trivial zeros, and a
c(n) series that only converges conditionally.  The c(n) series is
summed with the configured smoothing.
"""
from __future__ import annotations

import math

import numpy as np

from ..arith import c_table, liouville_table, smoothed_sum
from ..specfun import bessel_i, bessel_j, bessel_k, gamma, hyp2f1
from ..zeta import bracketed_zero_sum, zeta
from .core import IdentitySpec, Timer, VerifierConfig, make_report, register

SQRT_PI = math.sqrt(math.pi)
ZETA_HALF = zeta(0.5)


def _c_series(kernel, cfg: VerifierConfig) -> tuple[float, int]:
    """Smoothed sum of c(n) kernel(n); returns (value, terms used)."""
    N = cfg.series_terms or cfg.smoothing.default_terms()
    c = c_table(N)
    val = smoothed_sum(lambda n: c[n] * kernel(n.astype(float)), 0.0, cfg.smoothing, N)
    return val, N


def _lambda(N: int) -> np.ndarray:
    return liouville_table(max(N, 16))[1:N + 1].astype(float)


def _finish(identity_id, params, lhs, comps, cfg, tol, tm, N, notes=()):
    return make_report(identity_id, params, lhs, comps, cfg, tol, tm.ms, series_terms=N,
                       smoothing=cfg.smoothing.describe(), notes=notes)


# ---------------------------------------------------------------- exp(-ny)

def exp_kernel(n: np.ndarray, y: float) -> np.ndarray:
    q = np.sqrt(4 * y * y + np.pi ** 2 * n * n)
    return SQRT_PI * (np.sqrt(q - 2 * y) + np.sqrt(q + 2 * y)) / (q * np.sqrt(n))


def verify_lambda_exp(y: float = 1.0, cfg: VerifierConfig = VerifierConfig()):
    if y <= 0:
        raise ValueError("y must be positive")
    tol = cfg.tolerance or 5e-4
    with Timer() as tm:
        M = math.ceil(37.0 / y) + 1
        n = np.arange(1, M + 1, dtype=float)
        lhs = math.fsum(_lambda(M) * np.exp(-n * y))
        pole = SQRT_PI / (2 * math.sqrt(y) * ZETA_HALF)
        zs = bracketed_zero_sum(
            lambda z: zeta(2 * z.rho) * gamma(z.rho) * y ** (-z.rho) / z.zeta_prime, cfg.zeros())
        series, N = _c_series(lambda m: exp_kernel(m, y), cfg)
    return [_finish("lambda-exp", {"y": y}, lhs, {"pole": pole, "zero_sum": zs, "series": series},
                    cfg, tol, tm, N)]


# ---------------------------------------------------------------- exp(-n^2 y)

def gauss_kernel(n: np.ndarray, y: float) -> np.ndarray:
    z = np.pi ** 2 * n * n / (32 * y)
    return math.pi ** 1.5 / (4 * math.sqrt(y)) * (bessel_i(-0.25, z, scaled=True) + bessel_i(0.25, z, scaled=True))


def verify_lambda_gauss(y: float = 1.0, cfg: VerifierConfig = VerifierConfig()):
    if y <= 0:
        raise ValueError("y must be positive")
    tol = cfg.tolerance or 5e-4
    with Timer() as tm:
        M = math.ceil(math.sqrt(37.0 / y)) + 1
        n = np.arange(1, M + 1, dtype=float)
        lhs = math.fsum(_lambda(M) * np.exp(-n * n * y))
        pole = gamma(1.25) / (y ** 0.25 * ZETA_HALF)
        zs = 0.5 * bracketed_zero_sum(
            lambda z: zeta(2 * z.rho) * gamma(z.rho / 2) * y ** (-z.rho / 2) / z.zeta_prime, cfg.zeros())
        series, N = _c_series(lambda m: gauss_kernel(m, y), cfg)
    return [_finish("lambda-gauss", {"y": y}, lhs, {"pole": pole, "zero_sum": zs, "series": series},
                    cfg, tol, tm, N)]


# ---------------------------------------------------------------- K_0(ny)

def k0_hyp_argument(n: np.ndarray, y: float) -> tuple[np.ndarray, np.ndarray]:
    """(z, 1 - z) for the 2F1 argument 1/2 + pi n / (2 sqrt(pi^2 n^2 + 4 y^2)).

    1 - z is formed without cancellation; it stays positive for every y > 0.
    """
    q = np.sqrt(np.pi ** 2 * n * n + 4 * y * y)
    z = 0.5 + np.pi * n / (2 * q)
    w = 4 * y * y / (2 * q * (q + np.pi * n))
    return z, w


def k0_kernel(n: np.ndarray, y: float) -> np.ndarray:
    q = np.sqrt(np.pi ** 2 * n * n + 4 * y * y)
    z, w = k0_hyp_argument(n, y)
    return math.pi ** 1.5 * hyp2f1(0.5, 0.5, 1.0, z, one_minus_z=w) / (np.sqrt(n) * np.sqrt(q))


def verify_lambda_k0(y: float = 1.0, cfg: VerifierConfig = VerifierConfig()):
    if y <= 0:
        raise ValueError("y must be positive")
    tol = cfg.tolerance or 1e-3
    with Timer() as tm:
        M = math.ceil(40.0 / y) + 1
        n = np.arange(1, M + 1, dtype=float)
        lhs = math.fsum(_lambda(M) * bessel_k(0, n * y))
        pole = 2 * math.sqrt(2) * gamma(1.25) ** 2 / (math.sqrt(y) * ZETA_HALF)
        zs = 0.25 * bracketed_zero_sum(
            lambda z: zeta(2 * z.rho) * gamma(z.rho / 2) ** 2 * (2 / y) ** z.rho / z.zeta_prime, cfg.zeros())
        series, N = _c_series(lambda m: k0_kernel(m, y), cfg)
    return [_finish("lambda-k0", {"y": y}, lhs, {"pole": pole, "zero_sum": zs, "series": series},
                    cfg, tol, tm, N)]


# ---------------------------------------------------------------- Riesz weight (1 - n/y)^{1/2}

def riesz_kernel(n: np.ndarray, y: float) -> np.ndarray:
    u = np.pi * n * y / 4
    su, cu = np.sin(u), np.cos(u)
    return (math.pi * math.sqrt(y) / 2 / np.sqrt(n)
            * (bessel_j(0, u) * (su + cu) + bessel_j(1, u) * (su - cu)))


def riesz_lhs(y: float) -> float:
    M = int(math.floor(y))
    n = np.arange(1, M + 1, dtype=float)
    return math.fsum(_lambda(M) * np.sqrt(1 - n / y))


def verify_lambda_riesz(y: float = 10.5, cfg: VerifierConfig = VerifierConfig()):
    if y <= 0 or y == math.floor(y):
        raise ValueError("y must be positive and not an integer")
    tol = cfg.tolerance or 5e-3
    with Timer() as tm:
        lhs = riesz_lhs(y)
        pole = math.pi * math.sqrt(y) / (4 * ZETA_HALF)
        zs = SQRT_PI / 2 * bracketed_zero_sum(
            lambda z: zeta(2 * z.rho) * gamma(z.rho) * y ** z.rho / (z.zeta_prime * gamma(z.rho + 1.5)),
            cfg.zeros())
        series, N = _c_series(lambda m: riesz_kernel(m, y), cfg)
    notes = ["zero-sum terms decay like |rho|^(-3/2); truncation at the configured zero count dominates the residual"]
    return [_finish("lambda-riesz", {"y": y}, lhs, {"pole": pole, "zero_sum": zs, "series": series},
                    cfg, tol, tm, N, notes)]


register(IdentitySpec("lambda-exp", verify_lambda_exp, ({"y": 1.0}, {"y": 2.0}), 5e-4, "pole", heavy=True))
register(IdentitySpec("lambda-gauss", verify_lambda_gauss, ({"y": 1.0}, {"y": 0.5}), 5e-4, "pole", heavy=True))
register(IdentitySpec("lambda-k0", verify_lambda_k0, ({"y": 1.0},), 1e-3, "pole", heavy=True))
register(IdentitySpec("lambda-riesz", verify_lambda_riesz, ({"y": 10.5},), 5e-3, "pole", heavy=True))
