"""Riesz-weighted partial sums of mu, lambda and d^2 against their explicit formulas.

For a weight (1 - n/y)^k the Mellin transform is y^s Gamma(s) Gamma(k+1)/Gamma(s+k+1),
so each weighted sum is a residue sum: poles of the Dirichlet series (main
terms), s = 0, and the non-trivial zeros.  A trace records the normalised
sum next to that prediction on a grid of y; the sums over zeros are
truncated at the table size and carry a rough tail estimate.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .arith import divisor_table, liouville_table, moebius_table
from .quad import laurent_coefficients
from .specfun import gamma
from .zeta import ZeroTable, bracketed_zero_sum, stieltjes_and_local_derivatives, zeta

KINDS = ("mu", "lambda", "d2")
SIEVE_LIMIT = 10 ** 7
ZETA_HALF = zeta(0.5)


class SieveLimitError(ValueError):
    pass


class NotFoundError(RuntimeError):
    pass


@dataclass
class RieszTrace:
    kind: str
    delta: float
    y: np.ndarray
    normalized_sum: np.ndarray
    predicted: np.ndarray
    zero_count: int = 0
    tail_estimate: float = 0.0
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.y.size > 1 and np.any(np.diff(self.y) <= 0):
            raise ValueError("trace abscissae must be strictly increasing")

    @property
    def points(self):
        return list(zip(self.y.tolist(), self.normalized_sum.tolist(), self.predicted.tolist()))


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


@lru_cache(maxsize=3)
def _coefficients(kind: str, limit: int) -> np.ndarray:
    if kind == "mu":
        return moebius_table(limit).astype(float)
    if kind == "lambda":
        return liouville_table(limit).astype(float)
    d = divisor_table(limit).astype(float)
    return d * d


def _table_size(y: float) -> int:
    if y > SIEVE_LIMIT:
        raise SieveLimitError(f"y = {y:g} exceeds the sieve limit {SIEVE_LIMIT:g}")
    return min(SIEVE_LIMIT, max(1024, 1 << math.ceil(math.log2(max(y, 2.0)))))


def weight_exponent(kind: str, delta: float) -> float:
    return 1 + delta if kind == "d2" else delta


def weighted_sum(kind: str, y: float, delta: float) -> float:
    """sum over n <= y of a(n) (1 - n/y)^k, k = delta (mu, lambda) or 1 + delta (d2).

    delta = 0 for mu or lambda gives the plain partial sum, n = y included.
    """
    _check_kind(kind)
    if y < 1:
        raise ValueError("need y >= 1")
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    a = _coefficients(kind, _table_size(y))
    M = int(math.floor(y))
    n = np.arange(1, M + 1, dtype=float)
    k = weight_exponent(kind, delta)
    w = np.ones(M) if k == 0 else (1 - n / y) ** k
    return math.fsum(a[1:M + 1] * w)


# ---------------------------------------------------------------- predictions

def _beta_ratio(s, k: float):
    """Gamma(s) Gamma(k+1) / Gamma(s+k+1)."""
    return gamma(s) * math.gamma(k + 1) / gamma(s + k + 1)


def _zero_kernel(kind: str, y: float, delta: float):
    k = weight_exponent(kind, delta)
    if kind == "mu":
        return lambda z: y ** z.rho * _beta_ratio(z.rho, k) / z.zeta_prime
    if kind == "lambda":
        return lambda z: zeta(2 * z.rho) * y ** z.rho * _beta_ratio(z.rho, k) / z.zeta_prime
    return lambda z: zeta(z.rho / 2) ** 4 * y ** (z.rho / 2) * _beta_ratio(z.rho / 2, k) / (2 * z.zeta_prime)


def zero_main_term(kind: str, y: float, delta: float, table: ZeroTable) -> float:
    """Sum over the table's zeros of the residues of the weighted Dirichlet integral (real)."""
    _check_kind(kind)
    if len(table) == 0:
        return 0.0
    return bracketed_zero_sum(_zero_kernel(kind, y, delta), table)


def zero_tail_estimate(kind: str, y: float, delta: float, table: ZeroTable) -> float:
    """Rough size of the omitted zeros, assuming the last 20 terms set the scale.

    Terms fall off like gamma^{-1-delta} (gamma^{-2-delta} for d2 after the
    y^{rho/2} normalisation) and zeros have density log(T/2 pi)/(2 pi).
    """
    if len(table) < 20:
        return float("inf")
    kern = _zero_kernel(kind, y, delta)
    p = 1 + delta if kind != "d2" else 2 + delta
    last = table.zeros[-20:]
    scale = np.mean([2 * abs(complex(kern(z))) * z.gamma ** p for z in last])
    T = table.zeros[-1].gamma
    return float(scale * math.log(T / (2 * math.pi)) / (2 * math.pi) * T ** (1 - p) / (p - 1))


def zero_sum_grid(kind: str, y, delta: float, table: ZeroTable) -> np.ndarray:
    """zero_main_term on a whole grid of y; the per-zero factors are computed once."""
    _check_kind(kind)
    y = np.asarray(y, dtype=float)
    out = np.zeros(y.size)
    if len(table) == 0:
        return out
    k = weight_exponent(kind, delta)
    logy = np.log(y)
    for z in table.zeros:
        if kind == "mu":
            c, p = _beta_ratio(z.rho, k) / z.zeta_prime, z.rho
        elif kind == "lambda":
            c, p = zeta(2 * z.rho) * _beta_ratio(z.rho, k) / z.zeta_prime, z.rho
        else:
            c, p = zeta(z.rho / 2) ** 4 * _beta_ratio(z.rho / 2, k) / (2 * z.zeta_prime), z.rho / 2
        out += 2.0 * np.real(complex(c) * np.exp(p * logy))
    return out


@lru_cache(maxsize=16)
def _taylor_beta(k: float, order: int = 3, radius: float = 0.5) -> tuple[float, ...]:
    """Taylor coefficients at s = 1 of Gamma(s) Gamma(k+1)/Gamma(s+k+1)."""
    e = laurent_coefficients(lambda s: _beta_ratio(s, k), 1.0, radius, 0, order)
    return tuple(e[j].real for j in range(order + 1))


def d2_main_terms(y: float, delta: float) -> list[float]:
    """B_j(y) = A_j times the j-th derivative at s = 1 of y^s Gamma(s)Gamma(2+delta)/Gamma(s+2+delta).

    The derivative is assembled by the Leibniz rule from the Taylor
    coefficients of the Gamma ratio and of y^s = y e^{(s-1) log y}.
    """
    rc = stieltjes_and_local_derivatives()
    A = (rc.A0, rc.A1, rc.A2, rc.A3)
    r = _taylor_beta(1 + delta)
    L = math.log(y)
    out = []
    for j in range(4):
        taylor = math.fsum(r[i] * L ** (j - i) / math.factorial(j - i) for i in range(j + 1))
        out.append(A[j] * math.factorial(j) * y * taylor)
    return out


def g_main(y: float, delta: float) -> float:
    """Main term of the d^2 weighted sum (residue at s = 1)."""
    return math.fsum(d2_main_terms(y, delta))


def main_terms(kind: str, y: float, delta: float) -> float:
    """Residues other than at the zeros: the pole at s = 1/2 (lambda), s = 1 (d2), and s = 0."""
    k = weight_exponent(kind, delta)
    if kind == "mu":
        return 1 / zeta(0.0)                                   # s = 0: -2
    if kind == "lambda":
        return math.sqrt(y) * _beta_ratio(0.5, k).real / (2 * ZETA_HALF) + 1.0
    return g_main(y, delta) + zeta(0.0) ** 3                   # s = 0: zeta(0)^4/zeta(0) = -1/8


def normalization(kind: str, y: float) -> float:
    return y ** 0.25 if kind == "d2" else math.sqrt(y)


def trace(kind: str, y_grid, delta: float, table: ZeroTable) -> RieszTrace:
    """Normalised weighted sums and their residue predictions on a grid of y.

    mu and lambda: S(y)/sqrt(y) against (residues)/sqrt(y).
    d2: (S(y) - g(y))/y^{1/4} against (remaining residues)/y^{1/4}.
    """
    _check_kind(kind)
    y = np.asarray(y_grid, dtype=float)
    if y.size and y.max() > SIEVE_LIMIT:
        raise SieveLimitError(f"grid reaches {y.max():g}, above the sieve limit {SIEVE_LIMIT:g}")
    ns, pr = np.empty(y.size), np.empty(y.size)
    zs = zero_sum_grid(kind, y, delta, table)
    for i, yy in enumerate(y):
        S = weighted_sum(kind, yy, delta)
        norm = normalization(kind, yy)
        if kind == "d2":
            g = g_main(yy, delta)
            ns[i] = (S - g) / norm
            pr[i] = (zs[i] + (main_terms(kind, yy, delta) - g)) / norm
        else:
            ns[i] = S / norm
            pr[i] = (zs[i] + main_terms(kind, yy, delta)) / norm
    tail = 0.0
    if y.size and len(table):
        tail = max(zero_tail_estimate(kind, yy, delta, table) / normalization(kind, yy) for yy in (y[0], y[-1]))
    return RieszTrace(kind, float(delta), y, ns, pr, zero_count=len(table), tail_estimate=tail,
                      notes=[f"zero sums truncated at {len(table)} zeros; omitted terms estimated at {tail:.2e}"])


def sign_changes(tr) -> int:
    """Strict sign alternations of the normalised sum, skipping exact zeros."""
    v = np.asarray(tr.normalized_sum if isinstance(tr, RieszTrace) else tr, dtype=float)
    s = np.sign(v)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def write_csv(tr: RieszTrace, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["y", "normalized_sum", "predicted"])
        for y, s, p in tr.points:
            w.writerow([f"{y:.15g}", f"{s:.15g}", f"{p:.15g}"])


# ---------------------------------------------------------------- zero-sum size as delta -> 0

def lemma4_partial(delta: float, table: ZeroTable) -> tuple[float, float, float]:
    """Truncated absolute zero sums A, B, C whose growth as delta -> 0 controls the oscillation.

    A = sum 1/(|zeta'(rho)| |rho|^{1+delta}), B the same with |zeta(2 rho)|,
    C = sum 2^{2+delta} |zeta(rho/2)|^4 / (|zeta'(rho)| |rho|^{2+delta}); each over rho and conj(rho).
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    A = B = C = 0.0
    for z in table.zeros:
        r, zp = abs(z.rho), abs(z.zeta_prime)
        A += 2 / (zp * r ** (1 + delta))
        B += 2 * abs(zeta(2 * z.rho)) / (zp * r ** (1 + delta))
        C += 2 * 2 ** (2 + delta) * abs(zeta(z.rho / 2)) ** 4 / (zp * r ** (2 + delta))
    return A, B, C


# ---------------------------------------------------------------- simultaneous approximation

def _dist(alphas, betas, t):
    """max over n of the distance of (alpha_n t - beta_n)/(2 pi) to the nearest integer."""
    x = (np.multiply.outer(np.atleast_1d(t), alphas) - betas) / (2 * np.pi)
    return np.max(np.abs(x - np.round(x)), axis=-1)


def kronecker_search(alphas, betas, eps: float, t_max: float, t_min: float = 0.0) -> float:
    """Smallest grid t in [t_min, t_max] with |alpha_n t - beta_n| < eps (mod 2 pi) for all n.

    The grid step keeps every phase moving by at most eps/4 per step, so a
    window of admissible t is never skipped; the first hit is then moved to
    the earliest admissible point of a finer grid just before it.
    """
    alphas = np.asarray(alphas, dtype=float)
    betas = np.asarray(betas, dtype=float)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if alphas.size != betas.size:
        raise ValueError("alphas and betas must have the same length")
    if np.unique(alphas).size != alphas.size:
        raise ValueError("alphas must be pairwise distinct")
    thr = eps / (2 * np.pi)
    amax = float(np.max(np.abs(alphas))) if alphas.size else 1.0
    h = eps / (4 * amax)
    chunk = 1 << 20
    lo = t_min
    while lo <= t_max:
        t = lo + h * np.arange(chunk)
        t = t[t <= t_max]
        d = _dist(alphas, betas, t)
        hit = np.flatnonzero(d < thr)
        if hit.size:
            t0 = t[hit[0]]
            fine = np.linspace(max(t_min, t0 - h), t0, 65)
            df = _dist(alphas, betas, fine)
            return float(fine[np.flatnonzero(df < thr)[0]])
        lo = t[-1] + h
    raise NotFoundError(f"no t in [{t_min:g}, {t_max:g}] within eps = {eps:g}")


def cosine_sum(coeffs, alphas, betas, t: float) -> float:
    """2 sum C_n cos(alpha_n t - beta_n): a conjugate-paired sum of oscillating terms."""
    c = np.asarray(coeffs, dtype=float)
    return float(2 * np.sum(c * np.cos(np.asarray(alphas) * t - np.asarray(betas))))
