import math

import mpmath
import numpy as np
import pytest
import scipy.special as sp
from hypothesis import given, strategies as st

from zqlab import quad as Q
from zqlab.specfun import gamma
from zqlab.zeta import zeta


def test_adaptive_examples():
    assert Q.integrate_adaptive(lambda x: x, 0, 1).value == pytest.approx(0.5, abs=1e-15)
    r = Q.integrate_adaptive(lambda x: x ** -0.5, 0, 1, tol=1e-12)
    assert r.value == pytest.approx(2.0, abs=1e-11)
    assert r.error_estimate >= 0 and r.evaluations > 0
    with pytest.raises(ValueError):
        Q.integrate_adaptive(lambda x: x, 1, 0)


def test_adaptive_bessel_closed_form():
    # int_0^y x^{-1/2}(y-x)^{1/2} sin(pi n x/2) dx = (pi y/2) J0(pi n y/4) sin(pi n y/4)
    y, n = 2.0, 3
    f = lambda x: x ** -0.5 * np.sqrt(np.maximum(y - x, 0)) * np.sin(math.pi * n * x / 2)
    closed = math.pi * y / 2 * sp.j0(math.pi * n * y / 4) * math.sin(math.pi * n * y / 4)
    assert Q.integrate_adaptive(f, 0, y, tol=1e-12).value == pytest.approx(closed, abs=1e-9)


def test_adaptive_max_subdivisions():
    with pytest.raises(Q.MaxSubdivisionsError):
        Q.integrate_adaptive(lambda x: np.sin(1 / x) / x, 1e-6, 1, tol=1e-15, max_intervals=50)


def test_semi_infinite_examples():
    assert Q.integrate_semi_infinite(lambda x: np.exp(-x)).value == pytest.approx(1.0, abs=1e-13)
    # int x^{-1/2} e^{-xy} sin(a x + pi/4) dx = sqrt(pi) (y^2+a^2)^{-1/4} sin(atan(a/y)/2 + pi/4)
    y, n = 1.0, 2
    a = math.pi * n / 2
    f = lambda x: x ** -0.5 * np.exp(-x * y) * np.sin(a * x + math.pi / 4)
    closed = math.sqrt(math.pi) * (y * y + a * a) ** -0.25 * math.sin(math.atan2(a, y) / 2 + math.pi / 4)
    assert Q.integrate_semi_infinite(f, 0.0, tol=1e-13).value == pytest.approx(closed, abs=1e-9)
    with pytest.raises(Q.NonconvergentTailError):
        Q.integrate_semi_infinite(lambda x: 1 / (1 + x))


@given(st.floats(0.2, 5.0))
def test_semi_infinite_gamma_property(s):
    r = Q.integrate_semi_infinite(lambda x: x ** (s - 1) * np.exp(-x), 0.0, tol=1e-13)
    assert r.value == pytest.approx(math.gamma(s), rel=1e-10)


def test_oscillatory_dirichlet_integral():
    r = Q.integrate_oscillatory(lambda x: np.sin(x) / np.where(x == 0, 1, x), 0.0, math.pi, math.pi, tol=1e-11)
    assert r.value == pytest.approx(math.pi / 2, abs=1e-10)
    # int_0^inf cos(x)/sqrt(x) dx = sqrt(pi/2)
    r = Q.integrate_oscillatory(lambda x: np.cos(x) / np.sqrt(x), 0.0, math.pi / 2, math.pi, tol=1e-11)
    assert r.value == pytest.approx(math.sqrt(math.pi / 2), abs=1e-9)


def test_wynn_epsilon_accelerates_log2():
    partial = np.cumsum([(-1) ** (k + 1) / k for k in range(1, 21)])
    est, err = Q.wynn_epsilon(partial)
    assert abs(est - math.log(2)) < 1e-12
    assert abs(partial[-1] - math.log(2)) > 1e-2


def test_vertical_line_examples():
    r = Q.integrate_vertical_line(lambda s: gamma(s), 0.5)
    assert r.value.real == pytest.approx(math.exp(-1), abs=1e-10)
    assert abs(r.value.imag) < 1e-10
    sym = Q.integrate_vertical_line(lambda s: gamma(s), 0.5, symmetric=True)
    assert sym.value == pytest.approx(r.value.real, abs=1e-12)
    # (1/2 pi i) int_{(1)} x^{-s} / (2 sin(pi s/2)) ds = 1/(pi (1 + x^2))
    x = 0.7
    r = Q.integrate_vertical_line(lambda s: np.exp(-s * math.log(x)) / (2 * np.sin(np.pi * s / 2)), 1.0,
                                  T=40, steps=8000, decay_tol=1e-14)
    assert r.value.real == pytest.approx(1 / (math.pi * (1 + x * x)), abs=1e-9)


def test_vertical_line_secant_lemma():
    a, b, x = 0.3, 0.2, 0.5
    p2 = math.pi / 2
    sec = lambda s: 1 / np.cos(s)

    def f(s):
        return (sec(p2 * s) * sec(p2 * (s - a)) * sec(p2 * (s - b)) * sec(p2 * (s - a - b))
                / sec(p2 * (2 * s - a - b - 1)) * np.exp(-s * math.log(x)))

    closed = (2 / math.pi / (math.sin(p2 * a) * math.sin(p2 * b)) * x * (x ** -a - 1) * (x ** -b - 1) / (x * x - 1))
    assert Q.integrate_vertical_line(f, 0.4, T=40, steps=8000, decay_tol=1e-14).value.real == pytest.approx(closed, abs=1e-8)


def test_vertical_line_insufficient_decay():
    with pytest.raises(Q.InsufficientDecayError):
        Q.integrate_vertical_line(lambda s: 1 / (1 + s * s), 0.5, T=10)


def test_laurent_examples():
    e = Q.laurent_coefficients(lambda s: 1 / (s - 2.0), 2.0, 0.3, -3, 3)
    assert e[-1] == pytest.approx(1.0, abs=1e-12)
    assert all(abs(e[k]) < 1e-12 for k in e if k != -1)
    zv = np.vectorize(zeta, otypes=[complex])
    F = lambda s: zv(s) ** 4 / zv(2 * s)
    e1 = Q.laurent_coefficients(F, 1.0, 0.1, -4, 2)
    e2 = Q.laurent_coefficients(F, 1.0, 0.05, -4, 2)
    assert e1[-4].real == pytest.approx(6 / math.pi ** 2, abs=1e-9)
    assert e1[-4].real / 6 == pytest.approx(1 / math.pi ** 2, abs=1e-10)
    # the principal part is what the residue computations use; e_k for k >= 0 carries eps |f| / r^k rounding
    assert max(abs(e1[k] - e2[k]) for k in range(-4, 0)) < 1e-9
    # zeta at 1: e_{-1} = 1, e_0 = Euler's constant
    ez = Q.laurent_coefficients(zv, 1.0, 0.2, -1, 0)
    assert ez[0].real == pytest.approx(0.5772156649015329, abs=1e-12)


def test_laurent_errors():
    with pytest.raises(Q.RadiusHitsSingularityError):
        Q.laurent_coefficients(lambda s: 1 / (s - 1.5), 1.0, 0.5, -1, 1, points=4)
    with pytest.raises(ValueError):
        Q.laurent_coefficients(lambda s: s, 0.0, 0.1, 2, 1)


def test_error_estimates_are_honest():
    f = lambda x: np.exp(-x) * np.cos(3 * x) * x ** -0.3
    prev = Q.integrate_adaptive(f, 0, 5, tol=1e-6)
    for tol in (1e-8, 1e-10, 1e-12):
        cur = Q.integrate_adaptive(f, 0, 5, tol=tol)
        assert abs(cur.value - prev.value) <= max(prev.error_estimate, 1e-15)
        prev = cur
    exact = float(mpmath.quad(lambda x: mpmath.exp(-x) * mpmath.cos(3 * x) * x ** -0.3, [0, 5]))
    assert abs(prev.value - exact) < 1e-11
