import math

import mpmath
import numpy as np
import pytest
import scipy.special as sp
from hypothesis import given, strategies as st

from zqlab import specfun as S


# ---------------------------------------------------------------- Gamma

def test_gamma_examples():
    assert S.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert S.gamma(5) == pytest.approx(24.0, rel=1e-14)
    model = math.sqrt(2 * math.pi) * math.exp(-math.pi * 30 / 2)
    assert abs(S.gamma(0.5 + 30j)) == pytest.approx(model, rel=1e-2)


def test_gamma_poles():
    for z in (0, -1, -7):
        with pytest.raises(S.GammaPoleError):
            S.gamma(z)
    assert S.rgamma(-3) == 0


def test_gamma_against_scipy_grid():
    re, im = np.meshgrid(np.linspace(-9.7, 40.3, 23), np.linspace(-35, 35, 15))
    z = (re + 1j * im).ravel()
    mine = S.loggamma(z)
    ref = sp.loggamma(z)
    # compare exp of the difference so branch choices of Im log Gamma do not matter
    assert np.max(np.abs(np.exp(mine - ref) - 1)) < 1e-13


def test_gamma_large_modulus():
    for z in (150 + 100j, 0.25 + 190j, 120.5):
        rel = abs(complex(mpmath.loggamma(z)) - complex(S.loggamma(z)))
        assert rel < 1e-12 * max(1.0, abs(complex(mpmath.loggamma(z))))


def test_digamma():
    for x in (0.1, 1.0, 2.5, 30.0, -0.5):
        assert S.digamma(x) == pytest.approx(sp.digamma(x), rel=1e-13)


@given(st.complex_numbers(max_magnitude=12).filter(lambda z: abs(z.imag) > 1e-3 or abs(z.real - round(z.real)) > 1e-3))
def test_gamma_reflection(z):
    lhs = S.gamma(z) * S.gamma(1 - z) * np.sin(np.pi * z)
    assert abs(lhs / np.pi - 1) < 1e-11


@given(st.floats(0.05, 20), st.floats(-15, 15))
def test_gamma_duplication(a, b):
    w = complex(a, b)
    lhs = S.gamma(w) * S.gamma(w + 0.5)
    rhs = 2 ** (1 - 2 * w) * math.sqrt(math.pi) * S.gamma(2 * w)
    assert abs(lhs / rhs - 1) < 1e-11


# ---------------------------------------------------------------- Bessel

X = np.concatenate([np.geomspace(1e-3, 17.99, 40), np.geomspace(18.01, 400, 30)])


@pytest.mark.parametrize("nu", [0.0, 0.25, 0.5, 1.0, 1.75, 2.0, 3.5, 4.0])
def test_bessel_against_scipy(nu):
    for mine, ref, scale in [
        (S.bessel_j(nu, X), sp.jv(nu, X), 1.0),
        (S.bessel_y(nu, X), sp.yv(nu, X), 1.0),
        (S.bessel_i(nu, X, scaled=True), sp.ive(nu, X), None),
        (S.bessel_k(nu, X, scaled=True), sp.kve(nu, X), None),
    ]:
        if scale is None:
            assert np.max(np.abs(mine / ref - 1)) < 1e-11
        else:
            # J, Y are O(x^{-1/2}); absolute error relative to the envelope
            env = np.maximum(np.abs(ref), 1 / np.sqrt(1 + X))
            assert np.max(np.abs(mine - ref) / env) < 1e-11


def test_bessel_examples():
    assert S.bessel_k(0.5, 1.0) == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-14)
    assert S.bessel_k(0, 1.0) == pytest.approx(0.4210244382407083, abs=1e-10)
    assert S.bessel_k(-0.25, 2.0) == S.bessel_k(0.25, 2.0)
    with pytest.raises(S.DomainError):
        S.bessel_k(0, 0.0)
    with pytest.raises(S.DomainError):
        S.bessel_y(1, -2.0)


def test_k0_integral_representation():
    t = np.linspace(0, 8, 20001)
    oracle = np.trapezoid(np.exp(-np.cosh(t)), t)
    assert S.bessel_k(0, 1.0) == pytest.approx(oracle, abs=1e-10)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.25])
def test_bessel_seam_continuity(nu):
    lo, hi = S.SEAM - 1e-12, S.SEAM + 1e-12
    for f in (S.bessel_j, S.bessel_y):
        assert abs(f(nu, lo) - f(nu, hi)) < 1e-10
    for f in (lambda n, x: S.bessel_k(n, x, scaled=True), lambda n, x: S.bessel_i(n, x, scaled=True)):
        assert abs(f(nu, lo) / f(nu, hi) - 1) < 1e-10


@pytest.mark.parametrize("nu", [0.0, 0.25, 0.5, 1.0])
@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
def test_wronskians_by_recurrence(nu, x):
    J, Y = S.bessel_j, S.bessel_y
    # derivatives: C_nu' = C_{nu-1} - (nu/x) C_nu  (J, Y);  I_nu' = I_{nu-1} - (nu/x) I_nu;  K' = -K_{nu-1} - (nu/x) K
    jd = J(nu - 1, x) - nu / x * J(nu, x) if nu else -J(1, x)
    yd = Y(nu - 1, x) - nu / x * Y(nu, x) if nu else -Y(1, x)
    assert J(nu, x) * yd - jd * Y(nu, x) == pytest.approx(2 / (math.pi * x), rel=1e-9)
    I, K = S.bessel_i, S.bessel_k
    idv = I(nu - 1, x) - nu / x * I(nu, x) if nu else I(1, x)
    kd = -K(nu - 1, x) - nu / x * K(nu, x) if nu else -K(1, x)
    assert I(nu, x) * kd - idv * K(nu, x) == pytest.approx(-1 / x, rel=1e-9)


def test_kernel_ky():
    assert S.kernel_ky(1.0) == pytest.approx(2 / math.pi * sp.k0(4) - sp.y0(4), abs=1e-13)
    x = np.geomspace(1e-6, 1e4, 50)
    u = 4 * x ** 0.25
    assert np.max(np.abs(S.kernel_ky(x) - (2 / math.pi * sp.k0(u) - sp.y0(u)))) < 1e-12
    with pytest.raises(S.DomainError):
        S.kernel_ky(0.0)


# ---------------------------------------------------------------- hypergeometric

def test_hyp2f1():
    assert S.hyp2f1(0.3, 0.7, 1.2, 0.0) == 1.0
    # 2F1(1/2,1/2;1;m) = (2/pi) K(m)
    for z in (0.1, 0.5, 0.75, 0.95, 0.999):
        assert S.hyp2f1(0.5, 0.5, 1.0, z) == pytest.approx(2 / math.pi * sp.ellipk(z), abs=1e-10)
    assert S.hyp2f1(0.75, 0.75, 1.5, -1.0) == pytest.approx(float(mpmath.hyp2f1(0.75, 0.75, 1.5, -1)), abs=1e-10)
    with pytest.raises(S.DomainError):
        S.hyp2f1(0.5, 0.5, 1.0, 1.0)


@given(st.floats(0.0, 0.9999), st.sampled_from([(0.5, 0.5, 1.0), (0.25, 0.75, 1.5), (1.0 / 3, 0.5, 1.25)]))
def test_hyp2f1_property(z, abc):
    a, b, c = abc
    assert S.hyp2f1(a, b, c, z) == pytest.approx(float(mpmath.hyp2f1(a, b, c, z)), abs=1e-10)


def test_hyp1f1():
    assert S.hyp1f1(0.5, 2.0, 0.0) == 1.0
    x = 1.3
    assert S.hyp1f1(0.5, 2.0, 2 * x) * math.exp(-x) == pytest.approx(sp.i0(x) - sp.i1(x), abs=1e-9)
    for z in (3.0, 25.0, 95.0):
        got = complex(S.hyp1f1(0.5, 2.0, 2j * z))
        ref = complex(np.exp(1j * z) * (sp.j0(z) - 1j * sp.j1(z)))
        assert abs(got - ref) < 1e-9
    for z in (-40.0, 7.5 - 30j, 150j):
        assert abs(complex(S.hyp1f1(0.5, 2.0, z)) - complex(mpmath.hyp1f1(0.5, 2, z))) < 1e-9


# ---------------------------------------------------------------- Meijer G

def test_g24_closed_form():
    k0, k1 = sp.k0(1.0), sp.k1(1.0)
    assert S.meijer_g24_kbessel(0.0, 0.0, 1.0) == pytest.approx((2 * k1 * k0 - k0 ** 2) / math.sqrt(math.pi), rel=1e-13)
    for z in (0.5, 1.5, 4.0):
        ref = mpmath.meijerg([[], [-(0.5) / 2, -(1.5) / 2]], [[0, -0.3, -0.2, -0.5], []], z)
        assert S.meijer_g24_kbessel(0.3, 0.2, z) == pytest.approx(float(ref), rel=1e-10)
    with pytest.raises(S.DomainError):
        S.meijer_g24_kbessel(0.3, 0.2, -1.0)


def test_g0442_against_mpmath():
    for a, b, z in [(0.4, 0.1, 1.0), (0.0, 0.0, 2.0), (0.3, -0.2, 0.3)]:
        top = [0.5, (1 - a) / 2, (1 - b) / 2, (1 - a - b) / 2]
        bot = [(1 - a - b) / 4, (3 - a - b) / 4]
        ref = float(mpmath.meijerg([top, []], [[], bot], z))
        got = S.meijer_g_0442(a, b, z).value
        assert got == pytest.approx(ref, rel=1e-8)


def test_g0442_small_argument_is_exponentially_small():
    v = S.meijer_g_0442(0.0, 0.0, 0.01).value
    assert 0 < abs(v) < math.exp(-2 / math.sqrt(0.01)) * 1e3


def test_mellin_barnes_examples():
    spec = S.MellinBarnesSpec(numerator_gammas=[(0.0, 1.0)], power=1.0, line=0.5)
    r = S.mellin_barnes(spec)
    assert r.value.real == pytest.approx(math.exp(-1), abs=1e-9)
    assert abs(r.value.imag) < 1e-10
    # Gamma(1/2 - s)/Gamma((1 - s)/2) at t = 1 against K_{1/4} + K_{3/4}
    spec = S.MellinBarnesSpec(numerator_gammas=[(0.5, -1.0)], denominator_gammas=[(0.5, -0.5)],
                              power=1.0, line=0.2, height=120.0, steps=8000)
    z = 1 / 8
    closed = math.exp(-z) / (4 * math.sqrt(2) * math.pi) * (sp.kv(0.25, z) + sp.kv(0.75, z))
    assert S.mellin_barnes(spec).value.real == pytest.approx(closed, abs=1e-8)


def test_mellin_barnes_refuses_contour_on_pole():
    with pytest.raises(S.DomainError):
        S.mellin_barnes(S.MellinBarnesSpec(numerator_gammas=[(0.0, 1.0)], line=0.0))
