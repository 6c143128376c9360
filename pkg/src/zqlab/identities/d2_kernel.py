"""Experimental: the d^2(n) identity whose dual side is a triple integral against a cosine kernel.

Test function phi(x) = x^2 e^{-x}, so Phi(s) = Gamma(s + 2).  Shifting the
line of ζ^4(s)/ζ(2s) Phi(s) from Re s = 2 to Re s = -0.1 gives

    sum d(n)^2 phi(n) = Res_{s=1} + zero sum + (1/2 pi i) int_{(-0.1)}.

The last piece is what the kernel series should reproduce.  The triple
integral is not absolutely convergent, so the order is chosen by hand: z
innermost (where the cosine is damped by phi), then the (x, y) pair folded
into a single Mellin convolution g(P) of the K0/Y0 kernel with itself.  The
coarse run truncates P and n and is reported as experimental; it does not
enter the acceptance suite.
"""
from __future__ import annotations

import math

import numpy as np

from ..arith import b_table, divisor_table
from ..quad import integrate_vertical_line, laurent_coefficients
from ..specfun import bessel_k, bessel_y, gamma
from ..zeta import bracketed_zero_sum, zeta
from .core import Timer, VerifierConfig, make_report

EXPERIMENTAL_REL_TOL = 0.1

_zv = np.vectorize(zeta, otypes=[complex])


def _integrand(s):
    return _zv(s) ** 4 / _zv(2 * s) * gamma(s + 2)


def residue_one(radius: float = 0.1) -> float:
    return laurent_coefficients(_integrand, 1.0, radius, -1, -1, points=128)[-1].real


def contour_value(line: float = -0.1, T: float = 60.0) -> float:
    return integrate_vertical_line(_integrand, line, T=T, steps=6000, decay_tol=1e-12, symmetric=True).value


def zero_sum(cfg: VerifierConfig) -> float:
    # 1/zeta(2s) has residue 1/(2 zeta'(rho)) at s = rho/2
    return bracketed_zero_sum(
        lambda z: zeta(z.rho / 2) ** 4 * gamma(z.rho / 2 + 2) / (2 * z.zeta_prime), cfg.zeros())


def _f(u):
    return 2 / math.pi * bessel_k(0, 4 * u) - bessel_y(0, 4 * u)


def kernel_convolution(P: float, u_max: float = 300.0, h: float = 0.01) -> float:
    """g(P) = int_0^inf f(u) f(P/u) du/u, folded about u = sqrt(P)."""
    r = math.sqrt(P)
    near = r * np.exp(np.linspace(0.0, math.log(max(2.0, 1.0 / r + 2)), 2001))
    far = np.arange(near[-1], max(u_max, near[-1] + h), h)
    v = 0.0
    for u in (near, far):
        v += np.trapezoid(_f(u) * _f(P / u) / u, u)
    return 2 * v


_W = np.linspace(1e-6, 9.0, 20001)


def damped_cosine(A) -> np.ndarray:
    """H(A) = int_0^inf z e^{-z} cos(A/sqrt z) dz = 2 int w^3 e^{-w^2} cos(A/w) dw."""
    A = np.atleast_1d(np.asarray(A, dtype=float))
    base = _W ** 3 * np.exp(-_W * _W)
    return np.array([2 * np.trapezoid(base * np.cos(a / _W), _W) for a in A])


def kernel_series(terms: int = 10, p_max: float = 200.0) -> tuple[float, list[float]]:
    """(4/pi^2) sum_{n <= terms} b(n)/n T_n, with T_n truncated at P = p_max; returns the partial sums too."""
    P = np.concatenate([np.geomspace(1e-5, 1.0, 60, endpoint=False), np.arange(1.0, p_max + 0.25, 0.5)])
    G = np.array([kernel_convolution(p) for p in P])
    b = b_table(max(terms, 16)).astype(float)
    total, partial = 0.0, []
    for n in range(1, terms + 1):
        c = 2 / (math.pi * math.sqrt(n))
        T = 4 * np.trapezoid(P * G * damped_cosine(c * P), P)
        total += 4 / math.pi ** 2 * b[n] / n * T
        partial.append(total)
    return total, partial


def verify_d2_kernel_experimental(cfg: VerifierConfig = VerifierConfig(), terms: int | None = None,
                                  p_max: float = 200.0):
    terms = terms or cfg.series_terms or 10
    with Timer() as tm:
        n = np.arange(1, 81, dtype=float)
        d = divisor_table(80)[1:].astype(float)
        lhs = math.fsum(d * d * n * n * np.exp(-n))
        target = contour_value()
        series, partial = kernel_series(terms, p_max)
        comps = {"residue_one": residue_one(), "zero_sum": zero_sum(cfg), "series": series}
    rel = abs(series - target) / abs(target)
    notes = [
        "experimental coarse run; not part of the acceptance suite",
        "integration order chosen by hand (z innermost, then the x-y convolution); the triple integral "
        "is not absolutely convergent",
        f"contour value on Re s = -0.1: {target:.10g}",
        f"kernel series vs contour value: relative error {rel:.3g}",
        "partial sums: " + ", ".join(f"{v:.4g}" for v in partial),
    ]
    rep = make_report("d2-kernel-experimental", {"terms": terms, "p_max": p_max}, lhs, comps, cfg,
                      EXPERIMENTAL_REL_TOL * abs(target), tm.ms, series_terms=terms, notes=notes)
    return [rep]
