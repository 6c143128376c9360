"""Invariant suites run by ``zqlab selftest``.

Each check returns a CheckResult; nothing here raises on a numeric failure,
so the caller can print a complete summary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import arith, specfun, zeta
from .quad import integrate_semi_infinite


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name, worst, tol, what="max error"):
    return CheckResult(name, bool(worst <= tol), f"{what} {worst:.3e} (limit {tol:.0e})")


def check_sieve(N: int = 100_000) -> list[CheckResult]:
    """Dirichlet-convolution identities among the sieved tables, exact in integers."""
    n = np.arange(N + 1)
    one = np.ones(N + 1)
    mu, lam, d = arith.moebius_table(N), arith.liouville_table(N), arith.divisor_table(N)
    delta = (n == 1).astype(float)
    root = np.sqrt(n)
    square = (np.rint(root) ** 2 == n).astype(float)
    square[0] = 0
    out = []
    for name, lhs, rhs in [
        ("sieve: mu * 1 = [n = 1]", arith.dirichlet_convolve(mu, one, N), delta),
        ("sieve: lambda * 1 = [n square]", arith.dirichlet_convolve(lam, one, N), square),
        ("sieve: 1 * 1 = d", arith.dirichlet_convolve(one, one, N), d),
        ("sieve: d * d = d4", arith.dirichlet_convolve(d, d, N), arith.d4_table(N)),
        ("sieve: phi * 1 = n", arith.dirichlet_convolve(arith.totient_table(N), one, N), n),
        ("sieve: c * 1 = sqrt(n) on squares", arith.dirichlet_convolve(arith.c_table(N), one, N),
         np.rint(root) * square),
    ]:
        bad = int(np.count_nonzero(lhs[1:] != np.asarray(rhs, dtype=float)[1:]))
        out.append(CheckResult(name, bad == 0, f"{bad} mismatches for n <= {N}"))
    # b: zeta^4(s)/zeta(2s-1), so b * c' = d4 where c' has series zeta(2s-1): m at n = m^2
    sq = np.zeros(N + 1)
    m = np.arange(1, math.isqrt(N) + 1)
    sq[m * m] = m
    bad = int(np.count_nonzero(arith.dirichlet_convolve(arith.b_table(N), sq, N)[1:] != arith.d4_table(N)[1:]))
    out.append(CheckResult("sieve: b * zeta(2s-1) = d4", bad == 0, f"{bad} mismatches for n <= {N}"))
    return out


def check_bessel() -> list[CheckResult]:
    x = np.concatenate([np.geomspace(0.05, 17.9, 30), np.geomspace(18.1, 200, 15)])
    out = []
    for nu in (0.0, 0.25, 0.5, 1.0, 1.75):
        # J_nu Y_{nu+1} - J_{nu+1} Y_nu = -2/(pi x);  I_nu K_{nu+1} + I_{nu+1} K_nu = 1/x
        jy = specfun.bessel_j(nu, x) * specfun.bessel_y(nu + 1, x) - specfun.bessel_j(nu + 1, x) * specfun.bessel_y(nu, x)
        ik = (specfun.bessel_i(nu, x, scaled=True) * specfun.bessel_k(nu + 1, x, scaled=True)
              + specfun.bessel_i(nu + 1, x, scaled=True) * specfun.bessel_k(nu, x, scaled=True))
        worst = max(np.max(np.abs(jy * math.pi * x / -2 - 1)), np.max(np.abs(ik * x - 1)))
        out.append(_check(f"wronskian: nu = {nu}", worst, 1e-9, "max rel error"))
    return out


def check_gamma() -> list[CheckResult]:
    z = np.array([complex(a, b) for a in (0.1, 0.3, 0.5, 0.77) for b in (-3.0, 0.0, 0.5, 2.0, 7.0)])
    refl = np.abs(specfun.gamma(z) * specfun.gamma(1 - z) * np.sin(np.pi * z) / np.pi - 1)
    w = np.array([complex(a, b) for a in (0.2, 1.3, 4.6, 11.0) for b in (0.0, 1.0, 5.0)])
    dup = np.abs(specfun.gamma(w) * specfun.gamma(w + 0.5)
                 / (2 ** (1 - 2 * w) * math.sqrt(math.pi) * specfun.gamma(2 * w)) - 1)
    return [_check("gamma: reflection", float(refl.max()), 1e-11, "max rel error"),
            _check("gamma: duplication", float(dup.max()), 1e-11, "max rel error")]


def check_functional_equation() -> list[CheckResult]:
    worst = 0.0
    for sig in (0.1, 0.25, 0.4, 0.6, 0.75, 0.9):
        for t in (0.5, 3.0, 14.0, 27.5, 60.0):
            s = complex(sig, t)
            lhs = zeta.zeta(s)
            rhs = zeta.chi_factor(s) * zeta.zeta(1 - s)
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), 1e-300))
    return [_check("zeta: functional equation grid", worst, 1e-10, "max rel residual")]


def check_mellin_pairs() -> list[CheckResult]:
    """Gamma(s) = int x^{s-1} e^{-x} dx and 2^{s-2} Gamma(s/2)^2 = int x^{s-1} K_0(x) dx."""
    worst = 0.0
    for s in (0.6, 1.0, 1.7, 3.2):
        e = integrate_semi_infinite(lambda x: x ** (s - 1) * np.exp(-x), 0.0, tol=1e-13).value
        k = integrate_semi_infinite(lambda x: x ** (s - 1) * specfun.bessel_k(0, x), 0.0, tol=1e-13).value
        worst = max(worst, abs(e / float(np.real(specfun.gamma(s))) - 1),
                    abs(k / float(np.real(2 ** (s - 2) * specfun.gamma(s / 2) ** 2)) - 1))
    return [_check("mellin: exp and K0 pairs", worst, 1e-9, "max rel error")]


def check_zeros(seed_path=None, count: int = 100) -> list[CheckResult]:
    try:
        table = zeta.zero_table(count, seed_path)
    except (zeta.ZetaError, ValueError) as exc:
        return [CheckResult("zeros: refinement", False, f"{type(exc).__name__}: {exc}")]
    worst = max(z.residual for z in table)
    out = [_check(f"zeros: {len(table)} refined", worst, 1e-10, "max |zeta(rho)|")]
    try:
        zeta.brackets(table, zeta.BracketPolicy(c=1.0))
        out.append(CheckResult("zeros: singleton gap condition (c = 1)", True, "all brackets are singletons"))
    except zeta.BracketError as exc:
        out.append(CheckResult("zeros: singleton gap condition (c = 1)", False, str(exc)))
    return out


def check_cn_sums() -> list[CheckResult]:
    from .identities import verify_cn_sums
    return [CheckResult(f"c(n) sums: log weight {int(r.params['log_weight'])}", r.passed,
                        f"residual {r.residual_abs:.3e} (limit {r.tolerance:.0e})") for r in verify_cn_sums()]


def run_selftest(fast: bool = False, seed_path=None) -> list[CheckResult]:
    results = []
    results += check_sieve()
    results += check_bessel()
    results += check_gamma()
    results += check_functional_equation()
    results += check_mellin_pairs()
    results += check_zeros(seed_path)
    if not fast:
        results += check_cn_sums()
    return results
