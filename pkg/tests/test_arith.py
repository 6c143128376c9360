import math

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from zqlab import arith
from zqlab.specfun import EULER_GAMMA
from zqlab.zeta import zeta

N = 10_000


def test_small_tables_match_sympy():
    mu, lam, d = arith.moebius_table(N), arith.liouville_table(N), arith.divisor_table(N)
    phi = arith.totient_table(N)
    for n in range(1, 2000):
        assert mu[n] == sympy.mobius(n)
        assert lam[n] == (-1) ** sum(sympy.factorint(n).values())
        assert d[n] == sympy.divisor_count(n)
        assert phi[n] == sympy.totient(n)


def test_d4_counts_ordered_factorisations():
    d4 = arith.d4_table(500)
    for n in (1, 2, 12, 60, 360, 499):
        brute = sum(1 for a in sympy.divisors(n) for b in sympy.divisors(n // a) for c in sympy.divisors(n // a // b))
        assert d4[n] == brute


@pytest.mark.parametrize("n, expected", [(1, 1), (12, -2), (360, 6), (4, 2), (7, -1)])
def test_c_value_examples(n, expected):
    assert arith.c_value(n) == expected
    assert arith.c_table(1000)[n] == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 4), (4, 8), (6, 16)])
def test_b_value_examples(n, expected):
    assert arith.b_value(n) == expected
    assert arith.b_table(100)[n] == expected


def test_kappa_and_cab_examples():
    assert arith.kappa_value(2, 0.3, 0.7) == 0.0
    assert arith.kappa_value(1, 0, 0) == 1.0
    assert arith.kappa_value(4, 0, 0) == -1.0
    assert arith.cab_value(1, 0, 0) == 1.0
    assert arith.cab_value(2, 0, 0) == 4.0
    assert arith.cab_value(4, 0, 0) == 8.0


def test_sigma_pow_example():
    assert arith.sigma_pow(12, -0.5) == pytest.approx(sum(e ** -0.5 for e in (1, 2, 3, 4, 6, 12)), rel=1e-15)


def test_c00_equals_b():
    assert np.array_equal(arith.cab_table(2000, 0.0, 0.0)[1:], arith.b_table(2000)[1:].astype(float))


def test_b_is_a_convolved_with_d4():
    a = np.zeros(N + 1)
    mu = arith.moebius_table(N)
    m = np.arange(1, math.isqrt(N) + 1)
    a[m * m] = m * mu[m]
    assert np.array_equal(arith.dirichlet_convolve(a, arith.d4_table(N), N)[1:], arith.b_table(N)[1:])


def test_c_definition_and_bound():
    c = arith.c_table(N)
    n = np.arange(1, N + 1)
    assert np.all(np.abs(c[1:]) <= np.sqrt(n))
    spf = arith.spf_table(N)
    for k in range(1, N + 1, 97):
        assert c[k] == arith.c_value(k, spf)


def test_tables_against_cab_pointwise():
    a, b = 0.3, -0.2
    t = arith.cab_table(300, a, b)
    for n in (1, 2, 9, 36, 100, 144, 299):
        assert t[n] == pytest.approx(arith.cab_value(n, a, b), rel=1e-13, abs=1e-13)


def test_sigma_product_table_matches_convolution():
    a, b = 0.3, 0.2
    direct = arith.sigma_product_table(5000, a, b)
    conv = arith.sigma_table(5000, a) * arith.sigma_table(5000, b)
    assert np.max(np.abs(direct[1:] / conv[1:] - 1)) < 1e-13


def test_kappa_table_uses_totient_inverse():
    k = arith.kappa_table(400, 0.1, 0.2)
    for n in range(1, 401):
        assert k[n] == pytest.approx(arith.kappa_value(n, 0.1, 0.2), rel=1e-12, abs=0)


def test_dirichlet_inverse_of_one_is_mu():
    inv = arith.dirichlet_inverse(np.ones(N + 1), N)
    assert np.array_equal(inv[1:], arith.moebius_table(N)[1:].astype(float))
    with pytest.raises(ZeroDivisionError):
        arith.dirichlet_inverse(np.zeros(5), 4)


def test_dirichlet_series_checks():
    c = arith.c_table(100_000)
    b = arith.b_table(100_000)
    assert arith.dirichlet_series_check(c, lambda s: zeta(5) / zeta(3), 3.0, 100_000) < 1e-6
    assert arith.dirichlet_series_check(b, lambda s: zeta(3) ** 4 / zeta(5), 3.0, 100_000) < 1e-4
    absc = np.abs(c)
    assert arith.dirichlet_series_check(absc, lambda s: zeta(3) * zeta(5) / zeta(6), 3.0, 100_000) < 1e-6


def test_dirichlet_series_residual_respects_tail_bound():
    # |c(n)| <= sqrt(n): tail beyond N at s = 3 is below sum n^{-5/2} ~ (2/3) N^{-3/2}
    Nn = 20_000
    res = arith.dirichlet_series_check(arith.c_table(Nn), lambda s: zeta(5) / zeta(3), 3.0, Nn)
    assert res <= 2 * (2 / 3) * Nn ** -1.5


def test_build_tables_and_value():
    t = arith.build_tables(1000)
    assert t.value("moebius", 30) == -1
    assert t.value("d", 12) == 6
    assert t.value("spf", 91) == 7
    with pytest.raises(IndexError):
        t.value("d", 1001)
    with pytest.raises(ValueError):
        t.d[3] = 0


def test_limits():
    with pytest.raises(arith.LimitTooLargeError):
        arith.moebius_table(arith.MAX_LIMIT + 1)
    with pytest.raises(ValueError):
        arith.divisor_table(0)
    with pytest.raises(ValueError):
        arith.factorize(0)


def test_smoothing_scheme_validation():
    with pytest.raises(ValueError):
        arith.SmoothingScheme("bogus")
    with pytest.raises(ValueError):
        arith.SmoothingScheme("cesaro", 100, order=5)
    assert arith.SmoothingScheme("abel_exponential", 1e3).default_terms() == math.ceil(math.log(1e16) * 1e3)


def test_smoothed_sum_zero_and_cesaro():
    sch = arith.SmoothingScheme("abel_exponential", 1e3)
    assert arith.smoothed_sum(lambda n: np.zeros(n.size), 1.0, sch) == 0.0
    # Cesaro(1) of the alternating series 1 - 1 + 1 ... is 1/2
    ces = arith.SmoothingScheme("cesaro", 10_001, order=1)
    assert arith.smoothed_sum(lambda n: (-1.0) ** (n + 1), 0.0, ces) == pytest.approx(0.5, abs=1e-4)


def test_cn_sum_cross_check_cesaro():
    N2 = 200_000
    c = arith.c_table(N2)
    ces = arith.SmoothingScheme("cesaro", N2, order=2)
    assert abs(arith.smoothed_sum(c, 1.0, ces, N2) - 0.5) < 5e-3


def test_smoothed_sum_is_chunk_independent(monkeypatch):
    sch = arith.SmoothingScheme("abel_exponential", 3e4)
    c = arith.c_table(sch.default_terms())
    ref = arith.smoothed_sum(c, 1.0, sch)
    monkeypatch.setattr(arith, "_CHUNK", 4096)
    assert arith.smoothed_sum(c, 1.0, sch) == pytest.approx(ref, abs=1e-15)


def test_smoothed_fidelity_improves_with_scale():
    errs = []
    for X in (1e3, 1e5):
        sch = arith.SmoothingScheme("abel_exponential", X)
        c = arith.c_table(sch.default_terms())
        errs.append(abs(arith.smoothed_sum(c, 1.0, sch) - 0.5))
    assert errs[1] < errs[0]
    sch = arith.SmoothingScheme("abel_exponential", 1e5)
    c = arith.c_table(sch.default_terms())
    logged = arith.smoothed_sum(lambda n: c[n] * np.log(n), 1.0, sch)
    assert abs(logged + EULER_GAMMA / 2) < 5e-3


# ---------------------------------------------------------------- properties

coprime_pairs = st.tuples(st.integers(1, 3000), st.integers(1, 3000)).filter(lambda t: math.gcd(*t) == 1)


@given(coprime_pairs)
def test_multiplicativity(pair):
    m, n = pair
    for t in (arith.moebius_table(N), arith.liouville_table(N), arith.divisor_table(N), arith.b_table(N),
              arith.c_table(N)):
        if m * n <= N:
            assert t[m * n] == t[m] * t[n]


@given(st.integers(1, 10 ** 9))
def test_factorize_roundtrip(n):
    f = arith.factorize(n)
    assert math.prod(p ** k for p, k in f.items()) == n
    assert all(sympy.isprime(p) for p in f)


@given(st.integers(1, 50_000))
def test_liouville_is_completely_multiplicative_parity(n):
    lam = arith.liouville_table(50_000)
    assert lam[n] == (-1) ** sum(arith.factorize(n).values())


@given(st.integers(1, 5000), st.floats(-0.9, 0.9), st.floats(-0.9, 0.9))
def test_cab_value_matches_table(n, a, b):
    t = arith.cab_table(5000, a, b)
    assert t[n] == pytest.approx(arith.cab_value(n, a, b), rel=1e-11, abs=1e-11)
