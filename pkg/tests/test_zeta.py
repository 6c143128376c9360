import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from zqlab import zeta as Z
from zqlab.specfun import gamma


def test_zeta_examples():
    assert Z.zeta(2) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)
    assert Z.zeta(-1) == pytest.approx(-1 / 12, rel=1e-13)
    assert abs(Z.zeta(0.5 + 14.134725142j)) < 1e-6
    assert isinstance(Z.zeta(0.5), float)
    with pytest.raises(Z.PoleError):
        Z.zeta(1.0)


@pytest.mark.parametrize("s", [2.5, 0.3 + 9.1j, -1.7 + 3j, 0.5 + 100j, 3.9 - 240j, -2 + 60j, 0.5 + 249j, 1.2 + 0.01j])
def test_zeta_against_mpmath(s):
    ref = complex(mpmath.zeta(s))
    assert abs(complex(Z.zeta(s)) - ref) <= 1e-12 * abs(ref)


def test_zeta_prime():
    h = 1e-5
    fd = (Z.zeta(2 + h) - Z.zeta(2 - h)) / (2 * h)
    assert Z.zeta_prime(2.0) == pytest.approx(fd, abs=1e-8)
    assert Z.zeta_prime(2.0) == pytest.approx(float(mpmath.zeta(2, derivative=1)), rel=1e-9)
    rho = 0.5 + 14.134725141734693j
    d = Z.zeta_prime(rho)
    fd = (Z.zeta(rho + h) - Z.zeta(rho - h)) / (2 * h)
    assert abs(d) > 0.5 and abs(d - fd) < 1e-8
    for s in (0.3 + 2j, 2 + 5j, -0.5 + 20j):
        assert Z.zeta_prime(s.conjugate()) == pytest.approx(complex(Z.zeta_prime(s)).conjugate(), rel=1e-13)
        assert abs(Z.zeta_prime(s) - complex(mpmath.zeta(s, derivative=1))) < 1e-9 * abs(complex(mpmath.zeta(s, derivative=1)))
    with pytest.raises(Z.PoleError):
        Z.zeta_prime(1.0005)


def test_zeta_deriv_matches_mpmath():
    for k in (1, 2, 3):
        assert Z.zeta_deriv(2.0, k) == pytest.approx(float(mpmath.zeta(2, derivative=k)), rel=1e-11)


def test_chi_factor():
    assert Z.chi_factor(0.5) == pytest.approx(1.0, rel=1e-14)
    s = 0.3 + 9.1j
    assert abs(Z.zeta(s) - Z.chi_factor(s) * Z.zeta(1 - s)) < 1e-10
    # |chi(sigma + it)| ~ (t/2 pi)^{1/2 - sigma}; the bare t^{1/2 - sigma} is off by (2 pi)^{1/4} ~ 1.58
    v = abs(Z.chi_factor(0.25 + 100j))
    assert v == pytest.approx((100 / (2 * math.pi)) ** 0.25, rel=0.01)
    with pytest.raises(Exception):
        Z.chi_factor(1.0)


def test_functional_equation_grid():
    sig = np.linspace(-1, 2, 5)
    t = np.linspace(1, 60, 4)
    worst = 0.0
    for a in sig:
        for b in t:
            s = complex(a, b)
            lhs = complex(Z.zeta(s))
            worst = max(worst, abs(lhs - Z.chi_factor(s) * Z.zeta(1 - s)) / abs(lhs))
    assert worst < 1e-10


@given(st.floats(-2, 4), st.floats(0.5, 200))
def test_conjugate_symmetry(a, b):
    s = complex(a, b)
    assert Z.zeta(s.conjugate()) == complex(Z.zeta(s)).conjugate()


def test_refine_zero_examples():
    assert Z.refine_zero(14.1).gamma == pytest.approx(14.134725142, abs=1e-8)
    assert Z.refine_zero(21.0).gamma == pytest.approx(21.022039639, abs=1e-8)
    with pytest.raises(Z.RefinementError):
        Z.refine_zero(17.0)


def test_zero_table(zeros100):
    t1 = Z.zero_table(1)
    assert len(t1) == 1 and t1[0].gamma == pytest.approx(14.1347, abs=1e-4)
    g = zeros100.gammas
    assert len(g) == 100 and np.all(np.diff(g) > 0)
    assert max(z.residual for z in zeros100) <= 1e-10
    assert all(len(b) == 1 for b in Z.brackets(zeros100, Z.BracketPolicy(c=1.0)))
    ref = [float(mpmath.zetazero(k).imag) for k in (1, 2, 10, 50, 100)]
    assert np.allclose(g[[0, 1, 9, 49, 99]], ref, rtol=0, atol=1e-10)
    with pytest.raises(ValueError):
        Z.zero_table(101)


def test_table_head_and_invariants(zeros100):
    h = zeros100.head(5)
    assert len(h) == 5 and "first 5" in h.source
    with pytest.raises(ValueError):
        Z.ZeroTable((zeros100[1], zeros100[0]), "bad")
    with pytest.raises(ValueError):
        Z.ZeroTable((zeros100[1],), "bad")


def test_brackets_explicit_mode():
    zz = Z.refine_zero(14.13)
    a = Z.ZetaZero(0, 14.2, zz.rho, zz.zeta_prime)
    b = Z.ZetaZero(1, 14.2 + 1e-6, zz.rho, zz.zeta_prime)
    t = Z.ZeroTable((a, b), "synthetic")
    with pytest.raises(Z.BracketError):
        Z.brackets(t)
    assert Z.brackets(t, Z.BracketPolicy(mode="explicit_brackets")) == [[0, 1]]
    with pytest.raises(ValueError):
        Z.BracketPolicy(c=0)


def test_bracketed_zero_sum(zeros100):
    assert Z.bracketed_zero_sum(lambda z: 0j, zeros100) == 0.0
    v = Z.bracketed_zero_sum(lambda z: gamma(z.rho) / z.zeta_prime, zeros100)
    assert isinstance(v, float)
    term = lambda z: gamma(z.rho) * Z.zeta(2 * z.rho) / z.zeta_prime
    assert abs(Z.bracketed_zero_sum(term, zeros100.head(40)) - Z.bracketed_zero_sum(term, zeros100)) < 1e-12


def test_gamma_tail_bound(zeros100):
    # |Gamma(rho)| |rho|^3 beyond gamma = 100 is astronomically small
    g = zeros100.gammas
    tail = sum(abs(complex(gamma(0.5 + 1j * t))) * t ** 3 for t in g[g > 100])
    assert tail < 1e-20


def test_read_seeds(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("# header\n1 14.134725\n\n2 21.022040  # trailing\n")
    assert Z.read_seeds(p) == [(1, 14.134725), (2, 21.02204)]
    p.write_text("1 14.1 extra\n")
    with pytest.raises(ValueError):
        Z.read_seeds(p)


def test_corrupted_seed_file_fails(tmp_path):
    lines = Z.default_seed_path().read_text().splitlines()
    bad = [ln.replace("25.01", "26.41") if ln.startswith("3 ") else ln for ln in lines]
    p = tmp_path / "bad.txt"
    p.write_text("\n".join(bad))
    with pytest.raises(Z.RefinementError):
        Z.zero_table(5, p)


def test_residue_constants():
    rc = Z.stieltjes_and_local_derivatives()
    assert rc.euler_gamma == pytest.approx(0.5772156649015329, abs=1e-10)
    assert rc.A3 == pytest.approx(1 / math.pi ** 2, abs=1e-15)
    assert rc.stieltjes1 == pytest.approx(float(mpmath.stieltjes(1)), abs=1e-9)
    assert rc.stieltjes2 == pytest.approx(float(mpmath.stieltjes(2)), abs=1e-9)
    assert rc.laurent_radius_gap < 1e-9
    assert rc.zeta_d2_m1 == pytest.approx(float(mpmath.zeta(-1, derivative=2)), rel=1e-10)
    for k, v in enumerate((rc.zeta_d1_2, rc.zeta_d2_2, rc.zeta_d3_2), start=1):
        assert v == pytest.approx(float(mpmath.zeta(2, derivative=k)), rel=1e-11)
    assert rc.glaisher_log == pytest.approx(12 * math.log(float(mpmath.glaisher)), rel=1e-12)
    assert Z.euler_gamma_em() == pytest.approx(0.5772156649015329, abs=1e-10)


def test_stieltjes_two_radius_agreement():
    g1a, g2a = Z._stieltjes(0.05)
    g1b, g2b = Z._stieltjes(0.1)
    assert abs(g1a - g1b) < 1e-9 and abs(g2a - g2b) < 1e-9
