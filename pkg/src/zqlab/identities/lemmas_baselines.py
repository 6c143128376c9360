"""Integral lemmas behind the kernels, classical d(n) identities, and the c(n) sums.

The integral checks compare a vertical-line (Mellin-Barnes) integral with a
closed form or with a real-line integral computed by a different quadrature.
"""
from __future__ import annotations

import math

import numpy as np

from ..arith import SmoothingScheme, c_table, divisor_table, smoothed_sum
from ..quad import integrate_oscillatory, integrate_semi_infinite, integrate_vertical_line
from ..specfun import EULER_GAMMA, bessel_k, gamma, kernel_ky, loggamma, meijer_g24_kbessel, MellinBarnesSpec, \
    mellin_barnes
from .core import IdentitySpec, Timer, VerifierConfig, gauss_test_function, make_report, register

LEMMA_TOL = 1e-8


def _lemma_report(name, params, contour, closed, cfg, tm):
    return make_report(f"lemmas:{name}", params, contour, {"closed_form": closed}, cfg,
                       cfg.tolerance or LEMMA_TOL, tm.ms)


# ---------------------------------------------------------------- K_{1/4} + K_{3/4}

def k_quarter_closed(t: float) -> float:
    z = 1 / (8 * t * t)
    return math.exp(-z) / (4 * math.sqrt(2) * math.pi * t * t) * (bessel_k(0.25, z) + bessel_k(0.75, z))


def k_quarter_contour(t: float) -> float:
    spec = MellinBarnesSpec(numerator_gammas=[(0.5, -1.0)], denominator_gammas=[(0.5, -0.5)],
                            power=t, line=0.2, height=120.0, steps=8000)
    return float(np.real(mellin_barnes(spec).value))


# ---------------------------------------------------------------- Mellin transform of kernel_ky

def _ky_log(v: np.ndarray) -> np.ndarray:
    """kernel_ky(e^v); below v = -600 the leading small-argument form is exact in double precision."""
    v = np.asarray(v, dtype=float)
    out = np.empty_like(v)
    small = v < -600
    # (2/pi)K0(u) - Y0(u) = -(4/pi)(log(u/2) + gamma) + O(u^2 log u) with u = 4 e^{v/4}
    out[small] = -4 / math.pi * (math.log(2) + v[small] / 4 + EULER_GAMMA)
    out[~small] = kernel_ky(np.exp(v[~small]))
    return out


def ky_mellin(w: float, tol: float = 1e-12) -> float:
    """int_0^inf x^{w-1} kernel_ky(x) dx for 0 < w < 1/8."""
    # x in (0, 1]: x = e^{-t}
    near = integrate_semi_infinite(lambda t: np.exp(-w * t) * _ky_log(-t), 0.0, tol=tol).value
    # x >= 1: u = 4 x^{1/4}, dx x^{w-1} = 4^{1-4w} u^{4w-1} du; oscillation period 2 pi in u
    far = integrate_oscillatory(lambda u: u ** (4 * w - 1) * kernel_ky((u / 4) ** 4), 4.0, 4.0 + math.pi / 4,
                                math.pi, tol=tol)
    return near + 4 ** (1 - 4 * w) * far.value


def ky_mellin_closed(w: float) -> float:
    return float(np.real(gamma(w) ** 2 / gamma(0.5 - w) ** 2))


# ---------------------------------------------------------------- cosine integral against a test function

def cosine_contour(x: float, mellin) -> float:
    """(1/2 pi i) int_{(0)} Gamma(1/2-w)Gamma(1-w)/(Gamma(w-1/4)Gamma(w+1/4)) Phi(1-2w) x^{-w} dw."""
    def f(w):
        return np.exp(loggamma(0.5 - w) + loggamma(1 - w) - loggamma(w - 0.25) - loggamma(w + 0.25)
                      - w * math.log(x)) * mellin(1 - 2 * w)
    return integrate_vertical_line(f, 0.0, T=80.0, steps=8000, decay_tol=1e-14, symmetric=True).value


def cosine_integral(x: float, phi, tol: float = 1e-11) -> float:
    """2/sqrt(2 pi x) int_0^inf phi(u^{-2}) cos(k u)/u du with k = 4 x^{-1/4}."""
    k = 4 * x ** -0.25

    def f(u):
        u = np.asarray(u, dtype=float)
        with np.errstate(over="ignore", divide="ignore"):
            return phi(u ** -2.0) * np.cos(k * u) / u

    val = integrate_oscillatory(f, 0.0, math.pi / (2 * k), math.pi / k, tol=tol).value
    return 2 / math.sqrt(2 * math.pi * x) * val


# ---------------------------------------------------------------- secant product

def secant_contour(a: float, b: float, x: float) -> float:
    sec = lambda s: 1 / np.cos(s)
    p2 = math.pi / 2

    def f(s):
        return (sec(p2 * s) * sec(p2 * (s - a)) * sec(p2 * (s - b)) * sec(p2 * (s - a - b))
                / sec(p2 * (2 * s - a - b - 1)) * np.exp(-s * math.log(x)))

    return integrate_vertical_line(f, 0.4, T=40.0, steps=8000, decay_tol=1e-14, symmetric=True).value


def secant_closed(a: float, b: float, x: float) -> float:
    return (2 / math.pi / (math.sin(math.pi * a / 2) * math.sin(math.pi * b / 2))
            * x * (x ** -a - 1) * (x ** -b - 1) / (x * x - 1))


# ---------------------------------------------------------------- G^{4,0}_{2,4} closed form

def g24_contour(a: float, b: float, z: float) -> float:
    spec = MellinBarnesSpec(
        numerator_gammas=[(0.0, 1.0), (-a, 1.0), (-b, 1.0), (-a - b, 1.0)],
        denominator_gammas=[(-(a + b + 1) / 2, 1.0), (-(a + b) / 2, 1.0)],
        power=z, line=1.0, height=80.0, steps=8000)
    return float(np.real(mellin_barnes(spec).value))


def verify_lemmas(cfg: VerifierConfig = VerifierConfig()):
    reports = []
    for t in (0.5, 1.0, 2.0):
        with Timer() as tm:
            lhs, rhs = k_quarter_contour(t), k_quarter_closed(t)
        reports.append(_lemma_report("k-quarter", {"t": t}, lhs, rhs, cfg, tm))
    for w in (0.03, 0.06, 0.10):
        with Timer() as tm:
            lhs, rhs = ky_mellin(w), ky_mellin_closed(w)
        reports.append(_lemma_report("ky-mellin", {"w": w}, lhs, rhs, cfg, tm))
    tf = gauss_test_function(1.0)
    for x in (0.5, 2.0, 5.0):
        with Timer() as tm:
            lhs, rhs = cosine_contour(x, tf.mellin), cosine_integral(x, tf.phi)
        reports.append(_lemma_report("cosine-kernel", {"x": x}, lhs, rhs, cfg, tm))
    for x in (0.5, 0.8, 2.0):
        with Timer() as tm:
            lhs, rhs = secant_contour(0.3, 0.2, x), secant_closed(0.3, 0.2, x)
        reports.append(_lemma_report("secant-product", {"a": 0.3, "b": 0.2, "x": x}, lhs, rhs, cfg, tm))
    for z in (0.5, 1.5, 4.0):
        with Timer() as tm:
            lhs, rhs = g24_contour(0.3, 0.2, z), float(meijer_g24_kbessel(0.3, 0.2, z))
        reports.append(_lemma_report("g24-kbessel", {"a": 0.3, "b": 0.2, "z": z}, lhs, rhs, cfg, tm))
    return reports


# ---------------------------------------------------------------- classical d(n) identities

def koshliakov_side(x: float) -> float:
    """gamma - log(4 pi / x) + 4 sum d(n) K_0(2 pi n x)."""
    M = max(16, math.ceil(40 / (2 * math.pi * x)) + 2)
    n = np.arange(1, M + 1, dtype=float)
    return EULER_GAMMA - math.log(4 * math.pi / x) + 4 * math.fsum(
        divisor_table(M)[1:] * bessel_k(0, 2 * math.pi * n * x))


def verify_koshliakov(x: float = 1.3, cfg: VerifierConfig = VerifierConfig()):
    if x <= 0:
        raise ValueError("x must be positive")
    tol = cfg.tolerance or (1e-12 if x == 1 else 1e-10)
    with Timer() as tm:
        lhs = koshliakov_side(x)
        rhs = koshliakov_side(1 / x) / x
    return [make_report("baselines:koshliakov", {"x": x}, lhs, {"dual_side": rhs}, cfg, tol, tm.ms)]


def verify_voronoi_d(x: float = 0.6, cfg: VerifierConfig = VerifierConfig()):
    if x <= 0 or x == math.floor(x):
        raise ValueError("x must be positive and not an integer")
    tol = cfg.tolerance or 1e-6
    with Timer() as tm:
        M = max(16, math.ceil((45 / (4 * math.pi)) ** 2 / x) + 2)
        k = np.arange(1, M + 1, dtype=float)
        lhs = 2 * math.fsum(divisor_table(M)[1:] * bessel_k(0, 4 * math.pi * np.sqrt(k * x)))
        N = cfg.series_terms or 1_000_000
        n = np.arange(1, N + 1, dtype=float)
        head = math.fsum(divisor_table(N)[1:] * np.log(x / n) / (x * x - n * n))
        tail = integrate_semi_infinite(
            lambda t: (np.log(t) + 2 * EULER_GAMMA) * np.log(x / t) / (x * x - t * t), N + 0.5, tol=1e-15).value
        comps = {
            "series": x / math.pi ** 2 * (head + tail),
            "constant": -EULER_GAMMA / 2,
            "log_term": -(0.25 + 1 / (4 * math.pi ** 2 * x)) * math.log(x),
            "reciprocal": -math.log(2 * math.pi) / (2 * math.pi ** 2 * x),
        }
    return [make_report("baselines:voronoi-d", {"x": x}, lhs, comps, cfg, tol, tm.ms, series_terms=N)]


def verify_baselines(cfg: VerifierConfig = VerifierConfig()):
    return verify_koshliakov(1.3, cfg) + verify_koshliakov(1.0, cfg) + verify_voronoi_d(0.6, cfg)


# ---------------------------------------------------------------- c(n) sums

def verify_cn_sums(cfg: VerifierConfig = VerifierConfig()):
    sch = cfg.smoothing
    with Timer() as tm:
        N = cfg.series_terms or sch.default_terms()
        c = c_table(N)
        plain = smoothed_sum(c, 1.0, sch, N)
        logged = smoothed_sum(lambda n: c[n] * np.log(n.astype(float)), 1.0, sch, N)
    notes = ["tolerance from the X^(-1/2) smoothing heuristic; no proven rate"]
    kw = dict(series_terms=N, smoothing=sch.describe(), zero_count=0, notes=notes)
    return [make_report("cn-sums", {"log_weight": 0.0}, plain, {"target": 0.5}, cfg, cfg.tolerance or 2e-3,
                        tm.ms, **kw),
            make_report("cn-sums", {"log_weight": 1.0}, logged, {"target": -EULER_GAMMA / 2}, cfg,
                        cfg.tolerance or 2e-3, tm.ms, **kw)]


register(IdentitySpec("cn-sums", verify_cn_sums, ({},), 2e-3, "target", heavy=True))
register(IdentitySpec("lemmas", verify_lemmas, ({},), LEMMA_TOL, "closed_form"))
register(IdentitySpec("baselines", verify_baselines, ({},), 1e-6, ("dual_side", "constant")))
