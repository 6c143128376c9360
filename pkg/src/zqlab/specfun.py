"""Special functions used as kernels.

Complex Gamma via Lanczos, Bessel J/Y/I/K of real order, the Gauss and
confluent hypergeometric functions on the regions the verifiers reach, the
(2/pi)K0 - Y0 kernel, and Meijer G evaluations (a closed K-Bessel form and a
Mellin-Barnes contour path).

Everything is numpy-vectorized.  Series branches run in extended precision
(np.longdouble) so the series/asymptotic seam can sit where the asymptotic
expansions are good to ~1e-16.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .quad import QuadratureResult, integrate_vertical_line

EULER_GAMMA = 0.57721566490153286061
LD = np.longdouble


class GammaPoleError(ValueError):
    pass


class DomainError(ValueError):
    pass


# Godfrey's coefficients, g = 607/128, n = 15
_LG = 607.0 / 128.0
_LC = np.array([
    0.99999999999999709182, 57.156235665862923517, -59.597960355475491248,
    14.136097974741747174, -0.49191381609762019978, 0.33994649984811888699e-4,
    0.46523628927048575665e-4, -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4, -0.26190838401581408670e-4, 0.36899182659531622704e-5,
])
_HALF_LOG_2PI = 0.91893853320467274178


def _lanczos_log(z):
    # log Gamma(z) for Re z >= 1/2
    zm = z - 1.0
    acc = np.full(z.shape, _LC[0], dtype=z.dtype)
    for k in range(14, 0, -1):
        acc = acc + _LC[k] / (zm + k)
    t = zm + _LG + 0.5
    return _HALF_LOG_2PI + (zm + 0.5) * np.log(t) - t + np.log(acc)


def _log_sin_pi(z):
    """log sin(pi z) for complex z, stable for large |Im z| (branch mod 2 pi i)."""
    n = np.round(z.real)
    w = z - n
    out = np.empty(z.shape, dtype=complex)
    small = np.abs(w) < 0.25
    out[small] = np.log(np.sin(np.pi * w[small]))
    big = ~small
    wb = w[big]
    up = wb.imag >= 0
    wu = np.where(up, wb, np.conj(wb))
    v = -1j * np.pi * wu + np.log(1.0 - np.exp(2j * np.pi * wu)) + np.log(0.5j)
    out[big] = np.where(up, v, np.conj(v))
    return out + 1j * np.pi * n


def _is_pole(z):
    return (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))


def loggamma(s):
    """A branch of log Gamma(s); the imaginary part is only defined mod 2 pi."""
    z = np.asarray(s, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    if np.any(_is_pole(z)):
        raise GammaPoleError("Gamma has a pole at a non-positive integer")
    out = np.empty(z.shape, dtype=complex)
    right = z.real >= 0.5
    out[right] = _lanczos_log(z[right])
    left = ~right
    if np.any(left):
        zl = z[left]
        out[left] = np.log(np.pi) - _log_sin_pi(zl) - _lanczos_log(1.0 - zl)
    return out[0] if scalar else out


def gamma(s):
    """Gamma(s); complex input gives complex output, real gives real."""
    arr = np.asarray(s)
    v = np.exp(loggamma(arr))
    if not np.iscomplexobj(arr):
        return np.real(v) if np.ndim(v) else float(np.real(v))
    return v


def rgamma(s):
    """1/Gamma(s), zero at the poles."""
    arr = np.asarray(s)
    z = np.atleast_1d(np.asarray(arr, dtype=complex))
    out = np.zeros(z.shape, dtype=complex)
    ok = ~_is_pole(z)
    out[ok] = np.exp(-loggamma(z[ok]))
    if not np.iscomplexobj(arr):
        out = out.real
    return out[0] if arr.ndim == 0 else out


_B2K = [1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6]


def digamma(x):
    """psi(x) for real x (not a non-positive integer)."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x).copy()
    out = np.zeros_like(x)
    neg = x < 0.5
    if np.any(neg & (x == np.round(x))):
        raise GammaPoleError("digamma pole")
    # reflection psi(1-x) - psi(x) = pi cot(pi x)
    refl = np.where(neg, np.pi / np.tan(np.pi * x), 0.0)
    x = np.where(neg, 1.0 - x, x)
    while np.any(x < 10):
        m = x < 10
        out[m] -= 1.0 / x[m]
        x[m] += 1.0
    x2 = 1.0 / (x * x)
    series = np.zeros_like(x)
    for k in range(len(_B2K), 0, -1):
        series = series * x2 + _B2K[k - 1] / (2 * k)
    out += np.log(x) - 0.5 / x - series * x2
    out = np.where(neg, out - refl, out)
    return out[0] if scalar else out


# ---------------------------------------------------------------- Bessel

SEAM = 18.0          # series below, Hankel asymptotics above
K_SERIES_MAX = 2.0   # K: series below, integral representation up to SEAM


def _prep(x):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("Bessel functions need x > 0")
    return x.ndim == 0, np.atleast_1d(x)


def _is_int(nu: float) -> bool:
    return float(nu) == round(nu)


def _cospi(v: float) -> float:
    r = math.fmod(abs(v), 2.0)
    return {0.0: 1.0, 0.5: 0.0, 1.0: -1.0, 1.5: 0.0}.get(r, math.cos(math.pi * r))


def _sinpi(v: float) -> float:
    r = math.fmod(v, 2.0) % 2.0
    return {0.0: 0.0, 0.5: 1.0, 1.0: 0.0, 1.5: -1.0}.get(r, math.sin(math.pi * r))


def _power_series(nu: float, x, sign: int):
    """sum_k sign^k (x/2)^(2k+nu) / (k! Gamma(k+nu+1)) in long double."""
    xl = x.astype(LD)
    h = xl / 2
    q = h * h * sign
    t = np.exp(LD(nu) * np.log(h)) * LD(rgamma(nu + 1.0))
    s = t.copy()
    for k in range(1, 200):
        t = t * q / (LD(k) * (k + LD(nu)))
        s += t
        if np.all(np.abs(t) <= 1e-21 * np.abs(s)) and k > 4:
            break
    return s


def _hankel_coeffs(nu: float, kmax: int = 60):
    mu = 4.0 * nu * nu
    a = [1.0]
    for k in range(1, kmax):
        a.append(a[-1] * (mu - (2 * k - 1) ** 2) / (k * 8.0))
    return a


def _asym_sum(coeffs, x, alternating: bool, parity: int | None = None):
    """Sum of (-1)^k a_k / x^k (or a_k / x^k), truncated at the smallest term.

    With parity=0 or 1 only even or odd k are used, with the sign
    (-1)^(k//2) of the Hankel P/Q expansions.  Elements leave the working
    set once their terms stop shrinking or drop below rounding level.
    """
    s = np.zeros_like(x)
    ix = np.arange(x.size)
    inv = 1.0 / x
    pw = np.ones_like(x)
    last = np.full(x.shape, np.inf)
    for k, ak in enumerate(coeffs):
        if k:
            pw = pw * inv
        if parity is not None and k % 2 != parity:
            continue
        if parity is not None:
            sign = (-1) ** (k // 2)
        else:
            sign = (-1) ** k if alternating else 1
        term = sign * ak * pw
        mag = np.abs(term)
        ok = mag < last
        s[ix[ok]] += term[ok]
        keep = ok & (mag >= 1e-17 * np.abs(s[ix]))
        if not np.any(keep):
            break
        if not np.all(keep):
            ix, inv, pw, mag = ix[keep], inv[keep], pw[keep], mag[keep]
        last = mag
    return s


def _hankel_jy(nu: float, x):
    a = _hankel_coeffs(nu)
    p = _asym_sum(a, x, False, parity=0)
    q = _asym_sum(a, x, False, parity=1)
    phase = (0.5 * nu + 0.25) * np.pi
    c, s = np.cos(x), np.sin(x)
    cchi = c * math.cos(phase) + s * math.sin(phase)
    schi = s * math.cos(phase) - c * math.sin(phase)
    amp = np.sqrt(2.0 / (np.pi * x))
    return amp * (p * cchi - q * schi), amp * (p * schi + q * cchi)


def bessel_j(nu: float, x):
    """J_nu(x) for real order and x > 0."""
    scalar, x = _prep(x)
    nu = float(nu)
    if nu < 0 and _is_int(nu):
        out = (-1) ** int(-nu) * bessel_j(-nu, x)
        return out[0] if scalar else out
    out = np.empty_like(x)
    lo = x < SEAM
    if np.any(lo):
        out[lo] = _power_series(nu, x[lo], -1).astype(float)
    if np.any(~lo):
        out[~lo] = _hankel_jy(nu, x[~lo])[0]
    return out[0] if scalar else out


def _y_int_series(n: int, x):
    # DLMF 10.8.1
    xl = x.astype(LD)
    h = xl / 2
    out = LD(2) / LD(np.pi) * np.log(h) * _power_series(n, x, -1)
    if n > 0:
        acc = np.zeros_like(xl)
        hm = h * h
        for k in range(n):
            acc += LD(math.factorial(n - k - 1)) / LD(math.factorial(k)) * hm ** k
        out -= acc * np.exp(-LD(n) * np.log(h)) / LD(np.pi)
    psi = [LD(-EULER_GAMMA)]
    for k in range(1, 200 + n + 1):
        psi.append(psi[-1] + LD(1) / LD(k))
    q = -h * h
    t = np.exp(LD(n) * np.log(h)) / LD(math.factorial(n))
    s = (psi[0] + psi[n]) * t
    for k in range(1, 200):
        t = t * q / (LD(k) * LD(k + n))
        term = (psi[k] + psi[k + n]) * t
        s += term
        if np.all(np.abs(term) <= 1e-21 * np.abs(s)) and k > 4:
            break
    out -= s / LD(np.pi)
    return out.astype(float)


def bessel_y(nu: float, x):
    """Y_nu(x) for real order and x > 0."""
    scalar, x = _prep(x)
    nu = float(nu)
    if nu < 0 and _is_int(nu):
        out = (-1) ** int(-nu) * bessel_y(-nu, x)
        return out[0] if scalar else out
    out = np.empty_like(x)
    lo = x < SEAM
    if np.any(lo):
        xs = x[lo]
        if _is_int(nu):
            out[lo] = _y_int_series(int(nu), xs)
        else:
            jp = _power_series(nu, xs, -1)
            jm = _power_series(-nu, xs, -1)
            c, s = LD(_cospi(nu)), LD(_sinpi(nu))
            out[lo] = ((jp * c - jm) / s).astype(float)
    if np.any(~lo):
        out[~lo] = _hankel_jy(nu, x[~lo])[1]
    return out[0] if scalar else out


def bessel_i(nu: float, x, scaled: bool = False):
    """I_nu(x); with scaled=True returns exp(-x) I_nu(x)."""
    scalar, x = _prep(x)
    nu = float(nu)
    if nu < 0 and _is_int(nu):
        nu = -nu
    out = np.empty_like(x)
    lo = x < SEAM
    if np.any(lo):
        v = _power_series(nu, x[lo], 1)
        if scaled:
            v = v * np.exp(-x[lo].astype(LD))
        out[lo] = v.astype(float)
    if np.any(~lo):
        xs = x[~lo]
        v = _asym_sum(_hankel_coeffs(nu), xs, True) / np.sqrt(2 * np.pi * xs)
        if nu < 0:
            # I_{-nu} = I_nu + (2/pi) sin(nu pi) K_nu; the K part is e^{-2x} smaller
            kpart = (2 / np.pi) * _sinpi(-nu) * _k_asym(-nu, xs) * np.exp(-2 * xs)
            v = v + kpart
        out[~lo] = v if scaled else v * np.exp(xs)
    return out[0] if scalar else out


def _k_asym(nu, x):
    # exp(x) K_nu(x) from the large-x expansion
    return np.sqrt(np.pi / (2 * x)) * _asym_sum(_hankel_coeffs(nu), x, False)


def _k_integral(nu, x):
    # exp(x) K_nu(x) = int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt, trapezoid
    h = 0.05
    tmax = np.arccosh(1.0 + (60.0 + abs(nu) * 8) / x.min()) + 1.0
    t = np.arange(0.0, tmax + h, h)
    w = np.full(t.size, h)
    w[0] = h / 2
    out = np.empty_like(x)
    step = max(1, 2_000_000 // t.size)
    ch = np.cosh(t) - 1.0
    cn = np.cosh(nu * t)
    for i in range(0, x.size, step):
        xb = x[i:i + step, None]
        out[i:i + step] = np.exp(-xb * ch) @ (w * cn)
    return out


def _k_int_series(n: int, x):
    # DLMF 10.31.1
    xl = x.astype(LD)
    h = xl / 2
    out = LD((-1) ** (n + 1)) * np.log(h) * _power_series(n, x, 1)
    if n > 0:
        acc = np.zeros_like(xl)
        q = -h * h
        for k in range(n):
            acc += LD(math.factorial(n - k - 1)) / LD(math.factorial(k)) * q ** k
        out += LD(0.5) * acc * np.exp(-LD(n) * np.log(h))
    psi = [LD(-EULER_GAMMA)]
    for k in range(1, 200 + n + 1):
        psi.append(psi[-1] + LD(1) / LD(k))
    q = h * h
    t = np.exp(LD(n) * np.log(h)) / LD(math.factorial(n))
    s = (psi[0] + psi[n]) * t
    for k in range(1, 200):
        t = t * q / (LD(k) * LD(k + n))
        term = (psi[k] + psi[k + n]) * t
        s += term
        if np.all(np.abs(term) <= 1e-21 * np.abs(s)) and k > 4:
            break
    out += LD((-1) ** n) * LD(0.5) * s
    return out.astype(float)


def bessel_k(nu: float, x, scaled: bool = False):
    """K_nu(x); with scaled=True returns exp(x) K_nu(x).  K_{-nu} = K_nu."""
    scalar, x = _prep(x)
    nu = abs(float(nu))
    out = np.empty_like(x)
    small = x < K_SERIES_MAX
    mid = (x >= K_SERIES_MAX) & (x < SEAM)
    big = x >= SEAM
    near_int = (not _is_int(nu)) and abs(nu - round(nu)) < 0.05
    if np.any(small):
        xs = x[small]
        if near_int:
            v = _k_integral(nu, xs) * np.exp(-xs)
        elif _is_int(nu):
            v = _k_int_series(int(nu), xs)
        else:
            im = _power_series(-nu, xs, 1)
            ip = _power_series(nu, xs, 1)
            v = (LD(np.pi / 2) * (im - ip) / LD(_sinpi(nu))).astype(float)
        out[small] = v * np.exp(xs) if scaled else v
    if np.any(mid):
        v = _k_integral(nu, x[mid])
        out[mid] = v if scaled else v * np.exp(-x[mid])
    if np.any(big):
        v = _k_asym(nu, x[big])
        out[big] = v if scaled else v * np.exp(-x[big])
    return out[0] if scalar else out


def kernel_ky(x):
    """(2/pi) K0(4 x^(1/4)) - Y0(4 x^(1/4)), whose Mellin transform is
    Gamma(w)^2 / Gamma(1/2 - w)^2 on 0 < Re w < 1/8."""
    x = np.asarray(x, dtype=float)
    u = 4.0 * np.sqrt(np.sqrt(x))
    return 2.0 / np.pi * bessel_k(0.0, u) - bessel_y(0.0, u)


# ---------------------------------------------------------- hypergeometric

def _gauss_series(a, b, c, z, terms=2000):
    z = np.asarray(z, dtype=float)
    t = np.ones_like(z)
    s = np.ones_like(z)
    for k in range(terms):
        t = t * (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        s = s + t
        if np.all(np.abs(t) <= 1e-17 * np.abs(s)):
            return s
    raise ArithmeticError("2F1 series did not converge")


def _poch_ratio_terms(a, b, m, w, kmax=2000):
    """sum_k (a+m)_k (b+m)_k / (k! (k+m)!) w^k [log w - psi(k+1) - psi(k+m+1) + psi(a+k+m) + psi(b+k+m)]."""
    lw = np.log(w)
    t = np.full(w.shape, 1.0 / math.factorial(m))
    psi1 = float(digamma(1.0))
    psim = float(digamma(m + 1.0))
    pa = float(digamma(a + m)) if not _nonpos_int(a + m) else None
    pb = float(digamma(b + m)) if not _nonpos_int(b + m) else None
    if pa is None or pb is None:
        raise DomainError("parameter combination outside the supported 2F1 region")
    s = t * (lw - psi1 - psim + pa + pb)
    for k in range(1, kmax):
        t = t * (a + m + k - 1) * (b + m + k - 1) / (k * (k + m)) * w
        psi1 += 1.0 / k
        psim += 1.0 / (k + m)
        pa += 1.0 / (a + m + k - 1)
        pb += 1.0 / (b + m + k - 1)
        term = t * (lw - psi1 - psim + pa + pb)
        s = s + term
        if np.all(np.abs(term) <= 1e-17 * np.maximum(np.abs(s), 1e-300)):
            return s
    raise ArithmeticError("2F1 logarithmic series did not converge")


def _nonpos_int(v: float) -> bool:
    return v <= 0 and float(v) == round(v)


def _f21_near_one(a, b, c, z, w):
    """2F1 on [1/2, 1) through the 1 - z connection formulas; w = 1 - z."""
    m_real = c - a - b
    m = round(m_real)
    if abs(m_real - m) > 1e-12:
        g1 = float(gamma(c) * gamma(m_real) * rgamma(c - a) * rgamma(c - b))
        g2 = float(gamma(c) * gamma(-m_real) * rgamma(a) * rgamma(b))
        return (g1 * _gauss_series(a, b, 1 - m_real, w)
                + g2 * w ** m_real * _gauss_series(c - a, c - b, m_real + 1, w))
    if m < 0:
        # Euler: F(a,b;c;z) = w^(c-a-b) F(c-a,c-b;c;z) with c-(c-a)-(c-b) = -m > 0
        return w ** float(m) * _f21_near_one(c - a, c - b, c, z, w)
    # DLMF 15.8.10, c = a + b + m with m >= 0
    head = np.zeros_like(w)
    if m > 0:
        t = np.ones_like(w)
        for k in range(m):
            head = head + t
            if k < m - 1:
                t = t * (a + k) * (b + k) / ((k + 1) * (1 - m + k)) * w
        head = head * math.gamma(m) * float(gamma(a + b + m) * rgamma(a + m) * rgamma(b + m))
    pre2 = float(gamma(a + b + m) * rgamma(a) * rgamma(b))
    return head - (-w) ** m * pre2 * _poch_ratio_terms(a, b, m, w)


def hyp2f1(a: float, b: float, c: float, z, one_minus_z=None):
    """Gauss 2F1(a, b; c; z) for real parameters and real z < 1.

    Power series for |z| < 1/2, the 1 - z connection formulas on [1/2, 1)
    (with the logarithmic case when c - a - b is an integer), and Pfaff's
    transformation for z < 0.  ``one_minus_z`` may be passed when 1 - z is
    known more accurately than z.
    """
    if _nonpos_int(c):
        raise DomainError("c is a non-positive integer")
    z = np.asarray(z, dtype=float)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    w = 1.0 - z if one_minus_z is None else np.atleast_1d(np.asarray(one_minus_z, dtype=float))
    if np.any(~(w > 0)):
        raise DomainError("2F1 diverges for z >= 1")
    out = np.empty_like(z)
    inner = np.abs(z) < 0.5
    if np.any(inner):
        out[inner] = _gauss_series(a, b, c, z[inner])
    upper = z >= 0.5
    if np.any(upper):
        out[upper] = _f21_near_one(a, b, c, z[upper], w[upper])
    neg = z <= -0.5
    if np.any(neg):
        zn = z[neg]
        out[neg] = w[neg] ** (-a) * hyp2f1(a, c - b, c, zn / (zn - 1.0), one_minus_z=1.0 / w[neg])
    return out[0] if scalar else out


def hyp1f1(a: float, b: float, z):
    """Kummer 1F1(a; b; z) for real a, b and complex |z| <= 200."""
    if _nonpos_int(b):
        raise DomainError("b is a non-positive integer")
    arr = np.asarray(z)
    zz = np.atleast_1d(np.asarray(arr, dtype=complex))
    if np.any(np.abs(zz) > 200):
        raise DomainError("|z| > 200 is outside the supported region")
    out = np.empty(zz.shape, dtype=complex)
    neg = zz.real < 0
    if np.any(neg):
        out[neg] = np.exp(zz[neg]) * _m_right(b - a, b, -zz[neg])
    if np.any(~neg):
        out[~neg] = _m_right(a, b, zz[~neg])
    if not np.iscomplexobj(arr):
        out = out.real
    return out[0] if arr.ndim == 0 else out


_M_SERIES_RADIUS = 22.0


def _m_right(a, b, z):
    out = np.empty(z.shape, dtype=complex)
    near = np.abs(z) <= _M_SERIES_RADIUS
    if np.any(near):
        zl = z[near].astype(np.clongdouble)
        t = np.ones_like(zl)
        s = np.ones_like(zl)
        for k in range(400):
            t = t * (LD(a) + k) / ((LD(b) + k) * (k + 1)) * zl
            s += t
            if np.all(np.abs(t) <= 1e-21 * np.abs(s)) and k > 4:
                break
        out[near] = s.astype(complex)
    far = ~near
    if np.any(far):
        zf = z[far]
        # DLMF 13.7.2 with both exponential and algebraic series
        s1 = _asym_c(1 - a, b - a, 1.0 / zf)
        s2 = _asym_c(a, a - b + 1, -1.0 / zf)
        sgn = np.where(zf.imag >= 0, 1.0, -1.0)
        t1 = np.exp(zf + (a - b) * np.log(zf) + loggamma(b) - loggamma(a)) * s1 if not _nonpos_int(a) else 0.0
        t2 = (np.exp(sgn * 1j * np.pi * a - a * np.log(zf)) * gamma(float(b)) * rgamma(float(b - a))) * s2
        v = t1 + t2
        out[far] = np.where(zf.imag == 0, v.real, v)
    return out


def _asym_c(p, q, u):
    s = np.ones_like(u)
    t = np.ones_like(u)
    last = np.full(u.shape, np.inf)
    active = np.ones(u.shape, dtype=bool)
    for k in range(200):
        t = t * (p + k) * (q + k) / (k + 1) * u
        mag = np.abs(t)
        active &= mag < last
        s = s + np.where(active, t, 0)
        last = np.where(active, mag, last)
        if not np.any(active) or np.all(mag < 1e-17):
            break
    return s


# ------------------------------------------------------------- Meijer G

def meijer_g24_kbessel(a: float, b: float, z):
    """G^{4,0}_{2,4}((-a-b)/2, (-a-b-1)/2; 0, -a, -b, -a-b | z) in closed form."""
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise DomainError("need z > 0")
    q = np.sqrt(z)
    ka, kb = bessel_k(a, q), bessel_k(b, q)
    return z ** ((1 - a - b) / 2) / math.sqrt(math.pi) * (
        bessel_k(a - 1, q) * kb + bessel_k(b - 1, q) * ka + (a + b - 1) / q * ka * kb)


@dataclass(frozen=True)
class MellinBarnesSpec:
    """Gamma-ratio integrand prod Gamma(alpha + beta w) / prod Gamma(alpha' + beta' w) * z^-w."""
    numerator_gammas: Sequence[tuple[float, float]]
    denominator_gammas: Sequence[tuple[float, float]] = field(default_factory=tuple)
    power: complex = 1.0
    line: float = 0.5
    height: float = 60.0
    steps: int = 4000

    def integrand(self, w):
        w = np.asarray(w, dtype=complex)
        logv = -w * np.log(complex(self.power))
        for al, be in self.numerator_gammas:
            logv = logv + loggamma(al + be * w)
        for al, be in self.denominator_gammas:
            logv = logv - loggamma(al + be * w)
        return np.exp(logv)


def mellin_barnes(spec: MellinBarnesSpec) -> QuadratureResult:
    """(1/2 pi i) int along Re w = spec.line of the Gamma-ratio integrand."""
    for al, be in spec.numerator_gammas:
        k = -(al + be * spec.line)
        if be != 0 and k >= -1e-12 and abs(k - round(k)) < 1e-9:
            raise DomainError(f"contour Re w = {spec.line} passes through a pole of Gamma({al} + {be} w)")
    return integrate_vertical_line(spec.integrand, spec.line, T=spec.height,
                                   steps=spec.steps, decay_tol=1e-14)


def meijer_g_0442(a: float, b: float, z: float, line: float | None = None) -> QuadratureResult:
    """G^{0,4}_{4,2}(1/2, (1-a)/2, (1-b)/2, (1-a-b)/2; (1-a-b)/4, (3-a-b)/4 | z).

    The contour sits near the saddle of the integrand on the real axis,
    Re w ~ -1/sqrt(z), so the exponentially small value is computed without
    cancellation.
    """
    tops = [0.5, (1 - a) / 2, (1 - b) / 2, (1 - a - b) / 2]
    bots = [(1 - a - b) / 4, (3 - a - b) / 4]
    cmax = min(1 - t for t in tops)
    if line is None:
        line = min(cmax - 0.25, -1.0 / math.sqrt(z))
    if line >= cmax:
        raise DomainError("contour must lie left of the poles of Gamma(1 - a_j - w)")
    spec = MellinBarnesSpec(
        numerator_gammas=[(1 - t, -1.0) for t in tops],
        denominator_gammas=[(1 - t, -1.0) for t in bots],
        power=z, line=line, height=60.0 + 2 * abs(line), steps=4000 + 40 * int(abs(line)))
    res = mellin_barnes(spec)
    return QuadratureResult(float(np.real(res.value)), res.error_estimate, res.evaluations)
