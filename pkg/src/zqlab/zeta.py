"""Riemann zeta function, its non-trivial zeros, and constants at s = 1 and s = 2.

Evaluation is Euler-Maclaurin throughout.  The zero table is built by
refining bundled seed ordinates with Newton's method on the internal zeta,
so no ordinate enters a computation without passing |zeta(rho)| <= 1e-10.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import comb
from pathlib import Path
from typing import Callable

import numpy as np
from numpy.polynomial import Polynomial

from .quad import laurent_coefficients
from .specfun import GammaPoleError, loggamma

# B_2, B_4, ..., B_12
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730)


class ZetaError(ArithmeticError):
    pass


class PoleError(ZetaError):
    """Raised when an evaluation point sits on (or too close to) s = 1."""


class RefinementError(ZetaError):
    """Newton refinement of a zero failed or wandered away from its seed."""


class BracketError(ZetaError):
    """A consecutive pair of ordinates violates the singleton gap condition."""


def _em_poly(j: int) -> Polynomial:
    # B_{2j}/(2j)! * s (s+1) ... (s+2j-2)
    return Polynomial.fromroots([-i for i in range(2 * j - 1)]) * (_BERNOULLI[j - 1] / math.factorial(2 * j))


_EM_POLYS = tuple(_em_poly(j) for j in range(1, len(_BERNOULLI) + 1))


def _em_terms(s: complex) -> int:
    return max(20, math.ceil(1.3 * abs(complex(s).imag)))


def _zeta_em(s: complex, k: int = 0, N: int | None = None) -> complex:
    """k-th derivative of zeta at s by the Euler-Maclaurin formula, differentiated termwise."""
    s = complex(s)
    N = _em_terms(s) if N is None else N
    # head sum in long double: the phase t*log(n) is large at height
    logn = np.log(np.arange(1, N, dtype=np.longdouble))
    mag = (-logn) ** k * np.exp(-np.longdouble(s.real) * logn)
    ph = np.longdouble(s.imag) * logn
    head = complex(float(np.sum(mag * np.cos(ph))), float(-np.sum(mag * np.sin(ph))))
    L = math.log(N)
    NS = np.exp(-s * L)   # N^{-s}
    tail = 0j
    for m in range(k + 1):
        r = k - m
        tail += comb(k, m) * (-L) ** m * (-1) ** r * math.factorial(r) / (s - 1) ** (r + 1)
    tail *= N * NS
    tail += (-L) ** k * NS / 2
    for j, P in enumerate(_EM_POLYS, start=1):
        Nj = NS * N ** (1 - 2 * j)
        acc = 0j
        dP = P
        for m in range(k + 1):
            acc += comb(k, m) * dP(s) * (-L) ** (k - m)
            dP = dP.deriv()
        tail += acc * Nj
    return head + tail


def _real_if(s, value):
    return value.real if isinstance(s, (int, float, np.floating, np.integer)) else value


def _zeta_c(z: complex) -> complex:
    if z.imag < 0.0:
        # evaluate in the upper half-plane so zeta(conj s) == conj zeta(s) bit for bit
        return _zeta_c(z.conjugate()).conjugate()
    if z.real >= 0.0:
        return _zeta_em(z)
    if z.imag == 0.0 and z.real == round(z.real) and round(z.real) % 2 == 0:
        return 0j    # trivial zero
    # the Euler-Maclaurin head cancels badly for Re s < 0; reflect instead
    return chi_factor(z) * _zeta_em(1 - z)


def zeta(s):
    """Riemann zeta at a real or complex point; real input gives a real result."""
    z = complex(s)
    if abs(z - 1) < 1e-12:
        raise PoleError("zeta has a pole at s = 1")
    return _real_if(s, _zeta_c(z))


def zeta_deriv(s, k: int):
    """k-th derivative of zeta from the differentiated Euler-Maclaurin formula."""
    z = complex(s)
    if abs(z - 1) < 1e-12:
        raise PoleError("zeta has a pole at s = 1")
    return _real_if(s, _zeta_em(z, k, max(40, _em_terms(z))))


_CAUCHY_POINTS = 32
_CAUCHY_RADIUS = 1e-3


def zeta_prime(s):
    """zeta'(s) by a trapezoidal Cauchy integral on a circle of radius 1e-3."""
    z = complex(s)
    if abs(z - 1) < 2 * _CAUCHY_RADIUS:
        raise PoleError("zeta_prime evaluated too close to the pole at s = 1")
    theta = 2 * np.pi * np.arange(_CAUCHY_POINTS) / _CAUCHY_POINTS
    u = np.exp(1j * theta)
    vals = np.array([_zeta_c(z + _CAUCHY_RADIUS * w) for w in u])
    d = np.mean(vals / u) / _CAUCHY_RADIUS
    return _real_if(s, d)


def chi_factor(s):
    """chi(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2), so that zeta(s) = chi(s) zeta(1-s)."""
    z = complex(s)
    w = (1 - z) / 2
    if w.imag == 0 and w.real <= 0 and w.real == round(w.real):
        raise GammaPoleError(f"Gamma((1-s)/2) has a pole at s = {s}")
    v = np.exp((z - 0.5) * math.log(math.pi) + loggamma(w) - loggamma(z / 2))
    return _real_if(s, complex(v))


# ---------------------------------------------------------------- zeros

@dataclass(frozen=True)
class ZetaZero:
    index: int
    gamma: float
    rho: complex
    zeta_prime: complex
    residual: float = 0.0   # |zeta(rho)| after refinement


@dataclass(frozen=True)
class BracketPolicy:
    c: float = 1.0
    mode: str = "singleton_checked"    # or "explicit_brackets"

    def __post_init__(self):
        if self.c <= 0:
            raise ValueError("bracketing constant must be positive")
        if self.mode not in ("singleton_checked", "explicit_brackets"):
            raise ValueError(f"unknown bracket mode {self.mode!r}")


@dataclass(frozen=True)
class ZeroTable:
    zeros: tuple[ZetaZero, ...]
    source: str

    def __post_init__(self):
        g = [z.gamma for z in self.zeros]
        if any(b <= a for a, b in zip(g, g[1:])):
            raise ValueError("zero ordinates must be strictly increasing")
        if g and not 14.0 <= g[0] <= 14.3:
            raise ValueError(f"first ordinate {g[0]} outside the sanity window")

    def __len__(self) -> int:
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros)

    def __getitem__(self, i):
        return self.zeros[i]

    def head(self, count: int) -> "ZeroTable":
        return ZeroTable(self.zeros[:count], f"{self.source}; first {count}")

    @property
    def gammas(self) -> np.ndarray:
        return np.array([z.gamma for z in self.zeros])

    @property
    def rhos(self) -> np.ndarray:
        return np.array([z.rho for z in self.zeros])

    @property
    def zeta_primes(self) -> np.ndarray:
        return np.array([z.zeta_prime for z in self.zeros])


def refine_zero(seed: float, index: int = 0, max_iter: int = 50, window: float = 0.4) -> ZetaZero:
    """Newton's method for zeta from 1/2 + i*seed; caches zeta'(rho) on the result."""
    s = complex(0.5, seed)
    for _ in range(max_iter):
        z = _zeta_em(s)
        if abs(z) <= 1e-13:
            break
        s = s - z / zeta_prime(s)
    else:
        z = _zeta_em(s)
    if not abs(z) <= 1e-10:
        raise RefinementError(f"no convergence from seed {seed} after {max_iter} iterations")
    if abs(s.imag - seed) > window:
        raise RefinementError(f"seed {seed} converged to {s.imag:.9f}, outside the +-{window} window")
    if abs(s.real - 0.5) > 1e-8:
        raise RefinementError(f"root {s} strayed off the critical line")
    g = s.imag
    rho = complex(0.5, g)
    dz = zeta_prime(rho)
    if dz == 0:
        raise RefinementError(f"zeta'(rho) vanishes at gamma = {g}")
    return ZetaZero(index, g, rho, dz, float(abs(_zeta_em(rho))))


def read_seeds(path) -> list[tuple[int, float]]:
    """Parse a seed file: one `<index> <gamma>` record per line, `#` starts a comment."""
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected '<index> <gamma>'")
        out.append((int(parts[0]), float(parts[1])))
    return out


def default_seed_path() -> Path:
    return Path(str(resources.files("zqlab") / "data" / "zeta_zero_seeds.txt"))


def _gap_bound(g: float, c: float) -> float:
    return math.exp(-c * g / math.log(g))


def brackets(table: ZeroTable, policy: BracketPolicy = BracketPolicy()) -> list[list[int]]:
    """Group table positions into brackets of nearly coincident ordinates.

    In singleton_checked mode any pair violating the gap condition raises;
    in explicit_brackets mode such pairs are merged into one bracket.
    """
    g = table.gammas
    groups: list[list[int]] = []
    for i in range(len(g)):
        if i and g[i] - g[i - 1] < _gap_bound(g[i - 1], policy.c) + _gap_bound(g[i], policy.c):
            if policy.mode == "singleton_checked":
                raise BracketError(f"ordinates {g[i - 1]} and {g[i]} are too close for singleton brackets")
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def zero_table(count: int = 100, seed_path=None, policy: BracketPolicy = BracketPolicy()) -> ZeroTable:
    """Refine the first `count` seed ordinates into a checked ZeroTable."""
    if seed_path is None:
        return _default_table(count, policy)
    return _build_table(count, Path(seed_path), policy)


@lru_cache(maxsize=8)
def _default_table(count: int, policy: BracketPolicy) -> ZeroTable:
    return _build_table(count, default_seed_path(), policy)


def _build_table(count: int, path: Path, policy: BracketPolicy) -> ZeroTable:
    seeds = read_seeds(path)
    if count < 1 or count > len(seeds):
        raise ValueError(f"count must be in 1..{len(seeds)}")
    zeros = tuple(refine_zero(g, index=i) for i, g in seeds[:count])
    worst = max(z.residual for z in zeros)
    table = ZeroTable(zeros, f"{path.name}: {count} seeds refined, max |zeta(rho)| = {worst:.2e}")
    brackets(table, policy)
    return table


def bracketed_zero_sum(term: Callable[[ZetaZero], complex], table: ZeroTable,
                       policy: BracketPolicy = BracketPolicy()) -> float:
    """Sum of 2 Re term(rho) over the table, bracket by bracket in ascending order.

    Each conjugate pair rho, conj(rho) contributes term(rho) + conj(term(rho)),
    which is where the factor 2 Re comes from.
    """
    total = 0.0
    for grp in brackets(table, policy):
        total += sum(2.0 * complex(term(table[i])).real for i in grp)
    return total


# ---------------------------------------------------------------- constants

@dataclass(frozen=True)
class ResidueConstants:
    euler_gamma: float
    stieltjes1: float
    stieltjes2: float
    zeta_d1_2: float
    zeta_d2_2: float
    zeta_d3_2: float
    glaisher_log: float        # 12 log A
    zeta_d2_m1: float          # zeta''(-1)
    A0: float
    A1: float
    A2: float
    A3: float
    laurent_radius_gap: float  # max disagreement of gamma_1, gamma_2 between radii 0.05 and 0.1


def euler_gamma_em(N: int = 50) -> float:
    """Euler's constant from H_{N-1} + 1/(2N) - log N plus Bernoulli corrections."""
    h = math.fsum(1.0 / n for n in range(1, N))
    corr = math.fsum(B / (2 * j * N ** (2 * j)) for j, B in enumerate(_BERNOULLI, start=1))
    return h + 0.5 / N - math.log(N) + corr


def _stieltjes(radius: float) -> tuple[float, float]:
    e = laurent_coefficients(np.vectorize(_zeta_em, otypes=[complex]), 1.0, radius, -1, 2)
    return -e[1].real, 2 * e[2].real


def a_constants(g, g1, g2, z1, z2, z3) -> tuple[float, float, float, float]:
    """Closed forms for the four log-power coefficients of the d^2 main term."""
    p2, p4, p6, p8 = math.pi ** 2, math.pi ** 4, math.pi ** 6, math.pi ** 8
    A0 = (24 * g ** 3 * p6 - 72 * g * p6 * g1 + 12 * p6 * g2 - 432 * g ** 2 * p4 * z1
          + 288 * p4 * g1 * z1 + 3456 * g * p2 * z1 ** 2 - 10368 * z1 ** 3
          - 288 * g * p4 * z2 + 1728 * p2 * z1 * z2 - 48 * p4 * z3) / p8
    A1 = (36 * g ** 2 * p6 - 24 * p6 * g1 - 288 * g * p4 * z1 + 864 * p2 * z1 ** 2 - 72 * p4 * z2) / p8
    A2 = (12 * g * p6 - 36 * p4 * z1) / p8
    A3 = 1 / p2
    return A0, A1, A2, A3


@lru_cache(maxsize=1)
def stieltjes_and_local_derivatives() -> ResidueConstants:
    """Euler and Stieltjes constants, zeta derivatives at 2 and -1, and A0..A3."""
    g = euler_gamma_em()
    g1_fine, g2_fine = _stieltjes(0.05)
    g1, g2 = _stieltjes(0.1)
    z1, z2, z3 = (zeta_deriv(2.0, k) for k in (1, 2, 3))
    A0, A1, A2, A3 = a_constants(g, g1, g2, z1, z2, z3)
    return ResidueConstants(
        euler_gamma=g, stieltjes1=g1, stieltjes2=g2,
        zeta_d1_2=z1, zeta_d2_2=z2, zeta_d3_2=z3,
        # functional equation: log A = (gamma + log 2pi)/12 - zeta'(2)/(2 pi^2)
        glaisher_log=g + math.log(2 * math.pi) - 6 * z1 / math.pi ** 2,
        zeta_d2_m1=zeta_deriv(-1.0, 2),
        A0=A0, A1=A1, A2=A2, A3=A3,
        laurent_radius_gap=max(abs(g1 - g1_fine), abs(g2 - g2_fine)),
    )
