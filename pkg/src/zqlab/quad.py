"""Quadrature engines.

Adaptive Gauss-Kronrod on finite intervals, an exp-sinh rule for [a, inf),
zero-to-zero integration with Wynn acceleration for slowly decaying
oscillatory tails, trapezoidal integration along vertical lines in the
complex plane, and Laurent coefficients from circle integrals.

All integrands are called with numpy arrays and must be vectorized.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np


class QuadratureError(RuntimeError):
    """Raised when a rule cannot certify its result."""


class MaxSubdivisionsError(QuadratureError):
    pass


class NonconvergentTailError(QuadratureError):
    pass


class InsufficientDecayError(QuadratureError):
    pass


class RadiusHitsSingularityError(QuadratureError):
    pass


@dataclass(frozen=True)
class QuadratureResult:
    value: complex | float
    error_estimate: float
    evaluations: int

    def __float__(self) -> float:
        return float(np.real(self.value))


# 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
_XGK = np.array([
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0,
])
_WGK = np.array([
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208838235500, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
_WG = np.array([
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])        # 21 nodes, ascending
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_WG21 = np.zeros(21)
_WG21[1:10:2] = _WG
_WG21[11:20:2] = _WG[::-1]

_EPS = np.finfo(float).eps


def _gk21(f, a: float, b: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    x = mid + half * _NODES
    fx = np.asarray(f(x))
    if fx.shape != x.shape:
        fx = np.broadcast_to(fx, x.shape)
    k = half * np.dot(_WK, fx)
    g = half * np.dot(_WG21, fx)
    resabs = abs(half) * np.dot(_WK, np.abs(fx))
    mean = k / (2 * half) if half != 0 else 0.0
    resasc = abs(half) * np.dot(_WK, np.abs(fx - mean))
    err = abs(k - g)
    # QUADPACK error scaling
    if resasc != 0 and err != 0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > np.finfo(float).tiny / (50 * _EPS):
        err = max(err, 50 * _EPS * resabs)
    if not np.all(np.isfinite(fx)):
        raise QuadratureError(f"non-finite integrand on [{a}, {b}]")
    return k, err


def integrate_adaptive(f: Callable, a: float, b: float, tol: float = 1e-10,
                       max_intervals: int = 4000) -> QuadratureResult:
    """Globally adaptive Gauss-Kronrod (21 point) integration on [a, b].

    Bisects the interval with the largest error estimate until the summed
    estimate drops below ``tol``.  Algebraic endpoint singularities are
    resolved by repeated bisection toward the endpoint.
    """
    if not a < b:
        raise ValueError("need a < b")
    k, e = _gk21(f, a, b)
    heap = [(-e, a, b, k)]
    err = e
    evals = 21
    while err > tol:
        if len(heap) >= max_intervals:
            raise MaxSubdivisionsError(
                f"{len(heap)} intervals, error estimate {err:.3e} > tol {tol:.1e}")
        ne, lo, hi, kv = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # interval at machine resolution; accept what we have
            heapq.heappush(heap, (ne, lo, hi, kv))
            break
        k1, e1 = _gk21(f, lo, mid)
        k2, e2 = _gk21(f, mid, hi)
        evals += 42
        err += e1 + e2 + ne
        heapq.heappush(heap, (-e1, lo, mid, k1))
        heapq.heappush(heap, (-e2, mid, hi, k2))
        if len(heap) % 64 == 0:
            err = math.fsum(-item[0] for item in heap)   # undo incremental drift
    vals = [item[3] for item in heap]
    total = math.fsum(vals) if np.isrealobj(vals[0]) else complex(math.fsum(np.real(vals)), math.fsum(np.imag(vals)))
    err = math.fsum(-item[0] for item in heap)
    return QuadratureResult(total, float(err), evals)


def integrate_semi_infinite(f: Callable, a: float = 0.0, tol: float = 1e-12,
                            t_max: float = 6.0) -> QuadratureResult:
    """Integrate f over [a, inf) with the exp-sinh rule.

    The substitution x = a + exp(pi/2 sinh t) maps the half line onto the
    real t axis where the transformed integrand decays double exponentially,
    provided f decays faster than 1/x (or exponentially) and has at most an
    algebraic singularity at a.  The trapezoidal step is halved until two
    levels agree; the error estimate is that difference.
    """
    def weighted(t):
        u = 0.5 * np.pi * np.sinh(t)
        dx = np.exp(u)
        x = a + dx
        w = dx * 0.5 * np.pi * np.cosh(t)
        with np.errstate(all="ignore"):
            v = np.asarray(f(x)) * w
        ok = np.isfinite(v) & (x > a)
        # non-finite samples are tolerated only deep in the tails
        bad = ~ok & (np.abs(t) < 3.0)
        if np.any(bad):
            raise QuadratureError("non-finite integrand in the core of the exp-sinh rule")
        return np.where(ok, v, 0.0)

    h = 1.0 / 8
    t = np.arange(-t_max, t_max + h / 2, h)
    v = weighted(t)
    evals = t.size
    peak = np.max(np.abs(v))
    if peak == 0:
        return QuadratureResult(0.0, 0.0, evals)
    if abs(v[-1]) > max(tol, 1e-15 * peak):
        raise NonconvergentTailError(
            f"integrand not negligible at x = a + {math.exp(0.5 * math.pi * math.sinh(t_max)):.3e}")
    keep = np.nonzero(np.abs(v) > 1e-18 * peak)[0]
    lo, hi = t[max(keep[0] - 1, 0)], t[min(keep[-1] + 1, t.size - 1)]
    t = np.arange(lo, hi + h / 2, h)
    s = h * np.sum(weighted(t))
    evals += t.size
    err = np.inf
    for _ in range(12):
        tm = t[:-1] + h / 2
        vm = weighted(tm)
        evals += tm.size
        s_new = 0.5 * s + 0.5 * h * np.sum(vm)
        h /= 2
        t = np.sort(np.concatenate([t, tm]))
        err = abs(s_new - s)
        s = s_new
        if err <= max(tol, 10 * _EPS * abs(s)):
            break
    else:
        raise NonconvergentTailError(f"exp-sinh levels did not settle, last change {err:.3e}")
    return QuadratureResult(s, float(err), evals)


def wynn_epsilon(seq) -> tuple[float, float]:
    """Wynn's epsilon algorithm on a sequence of partial sums.

    Returns (estimate, error) where the error compares the two most recent
    even columns of the table.
    """
    s = [complex(v) for v in seq] if np.iscomplexobj(np.asarray(seq)) else [float(v) for v in seq]
    n = len(s)
    if n < 3:
        return s[-1], abs(s[-1] - s[-2]) if n == 2 else float("inf")
    e_prev = [0.0] * (n + 1)
    e_cur = list(s)
    best = [s[-1]]
    col = 0
    while len(e_cur) > 1:
        nxt = []
        for i in range(len(e_cur) - 1):
            d = e_cur[i + 1] - e_cur[i]
            if d == 0:
                nxt.append(float("inf"))
            else:
                nxt.append(e_prev[i + 1] + 1.0 / d)
        e_prev, e_cur = e_cur, nxt
        col += 1
        if col % 2 == 0 and e_cur and np.isfinite(e_cur[-1]):
            best.append(e_cur[-1])
    if len(best) < 2:
        return best[-1], abs(s[-1] - s[-2])
    return best[-1], abs(best[-1] - best[-2])


def integrate_oscillatory(f: Callable, a: float, first: float, half_period: float,
                          tol: float = 1e-10, max_cycles: int = 400,
                          min_cycles: int = 12) -> QuadratureResult:
    """Integrate an oscillatory, slowly decaying f over [a, inf).

    The range is split at ``first`` and then every ``half_period`` (ideally
    the zeros of the oscillating factor).  Each piece is integrated
    adaptively and the partial sums are accelerated with Wynn's epsilon
    algorithm.
    """
    head = integrate_adaptive(f, a, first, tol=tol / 10) if first > a else QuadratureResult(0.0, 0.0, 1)
    evals = head.evaluations
    partial = [head.value]
    lo = first
    last = None
    err = float("inf")
    for k in range(max_cycles):
        piece = integrate_adaptive(f, lo, lo + half_period, tol=tol / 100)
        evals += piece.evaluations
        partial.append(partial[-1] + piece.value)
        lo += half_period
        if k + 1 >= min_cycles and k % 2 == 1:
            est, e = wynn_epsilon(partial[-min(len(partial), 40):])
            if last is not None:
                err = max(e, abs(est - last))
                if err <= tol:
                    return QuadratureResult(est, float(err), evals)
            last = est
    raise NonconvergentTailError(f"oscillatory tail did not converge, last change {err:.3e}")


def integrate_vertical_line(f: Callable, c: float, T: float = 60.0, steps: int = 4000,
                            decay_tol: float = 1e-13, symmetric: bool = False) -> QuadratureResult:
    """(1/2 pi i) times the integral of f along Re s = c, truncated at |Im s| <= T.

    Trapezoidal rule in t = Im s, which is spectrally accurate for integrands
    analytic in a strip around the line.  The error estimate is the change
    against the rule with half the nodes plus the mass in the last tenth of
    the range; ``InsufficientDecayError`` is raised when the integrand has
    not decayed to ``decay_tol`` times its peak there.

    With ``symmetric=True`` only t >= 0 is sampled and f(conj s) = conj f(s)
    is assumed, giving a real result.
    """
    if steps % 2:
        steps += 1
    if symmetric:
        t = np.linspace(0.0, T, steps // 2 + 1)
        h = t[1] - t[0]
        v = np.asarray(f(c + 1j * t), dtype=complex)
        w = np.full(t.size, h)
        w[0] = w[-1] = h / 2
        full = 2 * np.real(np.dot(w, v))
        w2 = np.full(t[::2].size, 2 * h)
        w2[0] = w2[-1] = h
        coarse = 2 * np.real(np.dot(w2, v[::2]))
        tail_mask = t >= 0.9 * T
    else:
        t = np.linspace(-T, T, steps + 1)
        h = t[1] - t[0]
        v = np.asarray(f(c + 1j * t), dtype=complex)
        w = np.full(t.size, h)
        w[0] = w[-1] = h / 2
        full = np.dot(w, v)
        w2 = np.full(t[::2].size, 2 * h)
        w2[0] = w2[-1] = h
        coarse = np.dot(w2, v[::2])
        tail_mask = np.abs(t) >= 0.9 * T
    if not np.all(np.isfinite(v)):
        raise QuadratureError("non-finite integrand on the line")
    mag = np.abs(v)
    peak = mag.max()
    tail_peak = mag[tail_mask].max()
    if peak > 0 and tail_peak > decay_tol * peak:
        raise InsufficientDecayError(
            f"|f| at |t| ~ {T} is {tail_peak / peak:.2e} of its peak (need {decay_tol:.0e})")
    tail = h * mag[tail_mask].sum() / (2 * np.pi)
    value = full / (2 * np.pi)
    err = abs(full - coarse) / (2 * np.pi) + tail
    return QuadratureResult(float(value) if symmetric else complex(value), float(err), t.size)


def laurent_coefficients(f: Callable, s0: complex, radius: float, lowest: int,
                         highest: int, points: int = 128) -> dict[int, complex]:
    """Laurent coefficients e_k of f about s0 for lowest <= k <= highest.

    e_k = (1/2 pi i) closed integral of f(s) (s - s0)^(-k-1) ds on the circle
    |s - s0| = radius, evaluated with the M-point trapezoidal rule.  The rule
    aliases e_k with e_{k +- M}, so the result is spectrally accurate when f
    is analytic in an annulus around the circle.
    """
    if highest < lowest:
        raise ValueError("need lowest <= highest")
    if points <= highest - lowest + 1:
        raise ValueError("too few points for the requested coefficient range")
    theta = 2 * np.pi * np.arange(points) / points
    z = radius * np.exp(1j * theta)
    with np.errstate(all="ignore"):
        v = np.asarray(f(s0 + z), dtype=complex)
    if not np.all(np.isfinite(v)):
        raise RadiusHitsSingularityError(f"f is singular on |s - {s0}| = {radius}")
    out = {}
    for k in range(lowest, highest + 1):
        out[k] = complex(np.mean(v * np.exp(-1j * k * theta)) / radius ** k)
    return out
