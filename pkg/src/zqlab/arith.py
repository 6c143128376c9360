"""Sieved arithmetic functions, Dirichlet convolution, and smoothed sums.

Every multiplicative table is built by one routine: for each prime p up to
sqrt(N) the exponent of p is recorded on the multiples of p and the
prime-power values are applied by table lookup.  Whatever is left of n after
removing those primes is 1 or a single large prime, handled at the end.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Union

import numpy as np

MAX_LIMIT = 10 ** 8
_CHUNK = 1 << 21

Coeff = Union[np.ndarray, Callable[[np.ndarray], np.ndarray]]


class LimitTooLargeError(MemoryError):
    pass


def _check_limit(N: int) -> None:
    if N < 1:
        raise ValueError("table limit must be at least 1")
    if N > MAX_LIMIT:
        raise LimitTooLargeError(f"limit {N} exceeds the memory budget of {MAX_LIMIT}")


@lru_cache(maxsize=8)
def small_primes(M: int) -> np.ndarray:
    """Primes up to M by the sieve of Eratosthenes."""
    if M < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(M + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(M) + 1):
        if is_p[p]:
            is_p[p * p::p] = False
    return np.flatnonzero(is_p)


def multiplicative_table(N: int, prime_power: Callable[[int, int], int], large_prime,
                         dtype=np.int64) -> np.ndarray:
    """Table f[0..N] of a multiplicative function (f[0] = 0).

    prime_power(p, k) gives f(p^k) for p <= sqrt(N); large_prime gives f(q)
    for the at most one prime q > sqrt(N) dividing n, either as a constant
    or as a vectorised function of q.
    """
    _check_limit(N)
    f = np.ones(N + 1, dtype=dtype)
    f[0] = 0
    rem = np.arange(N + 1, dtype=np.int64 if N >= 2 ** 31 - 1 else np.int32)
    for p in small_primes(math.isqrt(N)):
        p = int(p)
        kmax = int(math.log(N) / math.log(p)) + 1
        while p ** kmax > N:
            kmax -= 1
        vals = np.array([1] + [prime_power(p, k) for k in range(1, kmax + 1)], dtype=dtype)
        e = np.ones(N // p, dtype=np.int8)       # exponent of p in n = p*(j+1)
        pk = p
        rem[p::p] //= p
        for _ in range(2, kmax + 1):
            e[pk - 1::pk] += 1
            pk *= p
            rem[pk::pk] //= p
        f[p::p] *= vals[e]
    big = rem > 1
    if callable(large_prime):
        f[big] *= np.asarray(large_prime(rem[big]), dtype=dtype)
    else:
        f[big] *= large_prime
    return f


def spf_table(N: int) -> np.ndarray:
    """Smallest prime factor of each n <= N (spf[0] = 0, spf[1] = 1)."""
    _check_limit(N)
    spf = np.zeros(N + 1, dtype=np.int32)
    for p in small_primes(math.isqrt(N)):
        p = int(p)
        blk = spf[p * p::p]
        blk[blk == 0] = p
    spf[2:][spf[2:] == 0] = np.flatnonzero(spf[2:] == 0) + 2
    spf[1] = 1
    return spf


@lru_cache(maxsize=4)
def moebius_table(N: int) -> np.ndarray:
    t = multiplicative_table(N, lambda p, k: -1 if k == 1 else 0, -1, np.int8)
    t.flags.writeable = False
    return t


@lru_cache(maxsize=4)
def liouville_table(N: int) -> np.ndarray:
    t = multiplicative_table(N, lambda p, k: (-1) ** k, -1, np.int8)
    t.flags.writeable = False
    return t


@lru_cache(maxsize=4)
def divisor_table(N: int) -> np.ndarray:
    t = multiplicative_table(N, lambda p, k: k + 1, 2, np.int32)
    t.flags.writeable = False
    return t


@lru_cache(maxsize=4)
def d4_table(N: int) -> np.ndarray:
    """Number of ordered factorisations n = abcd; multiplicative with d4(p^k) = C(k+3, 3)."""
    t = multiplicative_table(N, lambda p, k: math.comb(k + 3, 3), 4, np.int64)
    t.flags.writeable = False
    return t


@lru_cache(maxsize=4)
def totient_table(N: int) -> np.ndarray:
    t = multiplicative_table(N, lambda p, k: p ** (k - 1) * (p - 1), lambda q: q - 1, np.int64)
    t.flags.writeable = False
    return t


def _b_prime_power(p: int, k: int) -> int:
    return math.comb(k + 3, 3) - p * math.comb(k + 1, 3)


@lru_cache(maxsize=4)
def b_table(N: int) -> np.ndarray:
    """b(n): Dirichlet coefficients of zeta^4(s)/zeta(2s-1)."""
    t = multiplicative_table(N, _b_prime_power, 4, np.int64)
    t.flags.writeable = False
    return t


@lru_cache(maxsize=4)
def c_table(N: int) -> np.ndarray:
    """c(n) = sum over d^2 | n of d * mu(n/d^2), built from the Moebius table."""
    mu = moebius_table(N)
    c = np.zeros(N + 1, dtype=np.int32)
    d = 1
    while d * d <= N:
        q = d * d
        c[q::q] += d * mu[1:N // q + 1].astype(np.int32)
        d += 1
    c.flags.writeable = False
    return c


# ---------------------------------------------------------------- ArithTable

@dataclass(frozen=True)
class ArithTable:
    """Sieved tables indexed by n = 1..limit; position 0 is a zero sentinel."""
    limit: int
    liouville: np.ndarray
    moebius: np.ndarray
    d: np.ndarray
    d4: np.ndarray
    spf: np.ndarray

    def value(self, name: str, n: int):
        if not 1 <= n <= self.limit:
            raise IndexError(f"n = {n} outside 1..{self.limit}")
        return getattr(self, name)[n].item()


def build_tables(N: int) -> ArithTable:
    _check_limit(N)
    spf = spf_table(N)
    spf.flags.writeable = False
    return ArithTable(N, liouville_table(N), moebius_table(N), divisor_table(N), d4_table(N), spf)


# ---------------------------------------------------------------- pointwise values

def factorize(n: int, spf: np.ndarray | None = None) -> dict[int, int]:
    """Prime factorisation of n, by the spf table when it covers n, else trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    if spf is not None and n < len(spf):
        while n > 1:
            p = int(spf[n])
            out[p] = out.get(p, 0) + 1
            n //= p
        return out
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, k in factorize(n).items():
        ds = [d * p ** j for d in ds for j in range(k + 1)]
    return sorted(ds)


def sigma_pow(n: int, s: float) -> float:
    """sigma_s(n) = sum of e^s over the divisors e of n."""
    return math.fsum(float(e) ** s for e in divisors(n))


def c_value(n: int, spf: np.ndarray | None = None) -> int:
    """m * mu(k) where n = m^2 k with k squarefree."""
    m, sign = 1, 1
    for p, k in factorize(n, spf).items():
        m *= p ** (k // 2)
        if k % 2:
            sign = -sign
    return m * sign


def b_value(n: int) -> int:
    out = 1
    for p, k in factorize(n).items():
        out *= _b_prime_power(p, k)
    return out


def totient_inverse_value(m: int) -> int:
    """Dirichlet inverse of Euler's totient by the recursive inversion formula."""
    inv = {1: 1}
    for d in divisors(m)[1:]:
        inv[d] = -sum(_phi(d // e) * inv[e] for e in divisors(d) if e < d)
    return inv[m]


def _phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def kappa_value(n: int, a: float, b: float) -> float:
    m = math.isqrt(n)
    if m * m != n:
        return 0.0
    return float(m) ** (a + b) * totient_inverse_value(m)


def cab_value(n: int, a: float, b: float) -> float:
    """(sigma_a sigma_b * kappa_{a,b})(n) summed over the divisors of n."""
    return math.fsum(sigma_pow(d, a) * sigma_pow(d, b) * kappa_value(n // d, a, b) for d in divisors(n))


# ---------------------------------------------------------------- convolution

def dirichlet_convolve(f: Coeff, g: Coeff, N: int) -> np.ndarray:
    """h[n] = sum over d | n of f(d) g(n/d) for n <= N, by the multiples loop."""
    n = np.arange(N + 1)
    fv = np.asarray(f(n[1:]) if callable(f) else f[1:N + 1], dtype=float)
    gv = np.asarray(g(n[1:]) if callable(g) else g[1:N + 1], dtype=float)
    h = np.zeros(N + 1)
    for d in np.flatnonzero(fv) + 1:
        h[d::d] += fv[d - 1] * gv[:N // d]
    return h


def dirichlet_inverse(f: np.ndarray, N: int) -> np.ndarray:
    """Dirichlet inverse of f[1..N] with f[1] != 0."""
    if f[1] == 0:
        raise ZeroDivisionError("f(1) must be nonzero")
    inv = np.zeros(N + 1)
    inv[1] = 1.0 / f[1]
    fv = np.asarray(f[:N + 1], dtype=float)
    # accumulate sum over proper divisors d of n of f(n/d) inv(d), n ascending
    acc = np.zeros(N + 1)
    for d in range(1, N + 1):
        if d > 1:
            inv[d] = -acc[d] / fv[1]
        if inv[d] != 0:
            acc[2 * d::d] += inv[d] * fv[2:N // d + 1]
    return inv


def sigma_table(N: int, s: float) -> np.ndarray:
    """sigma_s(n) for n <= N."""
    n = np.arange(N + 1, dtype=float)
    n[0] = 1.0
    return dirichlet_convolve(n ** s, np.ones(N + 1), N)


def sigma_product_table(N: int, a: float, b: float) -> np.ndarray:
    """sigma_a(n) sigma_b(n) for n <= N straight from the multiplicative sieve."""
    def pp(p, k):
        return math.fsum(float(p) ** (a * j) for j in range(k + 1)) * math.fsum(
            float(p) ** (b * j) for j in range(k + 1))

    def big(q):
        q = q.astype(float)
        return (1 + q ** a) * (1 + q ** b)

    return multiplicative_table(N, pp, big, np.float64)


def kappa_table(N: int, a: float, b: float) -> np.ndarray:
    """kappa_{a,b}(m^2) = m^{a+b} phi^{-1}(m); zero off the squares."""
    M = math.isqrt(N)
    phi_inv = dirichlet_inverse(totient_table(M).astype(float), M)
    k = np.zeros(N + 1)
    m = np.arange(1, M + 1)
    k[m * m] = m.astype(float) ** (a + b) * phi_inv[1:]
    return k


def cab_table(N: int, a: float, b: float) -> np.ndarray:
    """C_{a,b}(n) = (sigma_a sigma_b * kappa_{a,b})(n)."""
    return dirichlet_convolve(kappa_table(N, a, b), sigma_table(N, a) * sigma_table(N, b), N)


def dirichlet_series_check(coeff: Coeff, closed_form: Callable[[complex], complex],
                           s: complex, N: int) -> float:
    """|sum_{n<=N} coeff(n) n^-s - closed_form(s)|; the caller picks s in the region of absolute convergence."""
    total = 0j
    for lo in range(1, N + 1, _CHUNK):
        n = np.arange(lo, min(N, lo + _CHUNK - 1) + 1)
        a = coeff(n) if callable(coeff) else coeff[n]
        total += np.sum(np.asarray(a, dtype=float) * np.exp(-s * np.log(n)))
    return float(abs(total - closed_form(s)))


# ---------------------------------------------------------------- smoothing

ABEL_CUTOFF = math.log(1e16)    # e^{-n/X} < 1e-16 beyond n = 36.84 X


@dataclass(frozen=True)
class SmoothingScheme:
    kind: str = "abel_exponential"      # or "cesaro"
    scale: float = 1e6
    order: int = 2

    def __post_init__(self):
        if self.kind not in ("abel_exponential", "cesaro"):
            raise ValueError(f"unknown smoothing kind {self.kind!r}")
        if self.scale < 1:
            raise ValueError("smoothing scale must be at least 1")
        if self.kind == "cesaro" and self.order not in (1, 2, 3):
            raise ValueError("Cesaro order must be 1, 2 or 3")

    def default_terms(self) -> int:
        if self.kind == "abel_exponential":
            return math.ceil(ABEL_CUTOFF * self.scale)
        return int(self.scale)

    def weights(self, n: np.ndarray, N: int) -> np.ndarray:
        """Smoothing weights for the terms n of a sum truncated at N."""
        n = np.asarray(n, dtype=float)
        if self.kind == "abel_exponential":
            return np.exp(-n / self.scale)
        # C(N - n + k, k) / C(N + k, k)
        w = np.ones_like(n)
        for i in range(1, self.order + 1):
            w *= (N - n + i) / (N + i)
        return np.where(n <= N, w, 0.0)

    def describe(self) -> str:
        if self.kind == "abel_exponential":
            return f"abel_exponential(X={self.scale:g})"
        return f"cesaro(order={self.order}, N={self.scale:g})"


def smoothed_sum(coeff: Coeff, weight_exponent: float, scheme: SmoothingScheme,
                 N: int | None = None) -> float:
    """Sum of coeff(n) n^{-weight_exponent} times the smoothing weights, n = 1..N.

    coeff is either a table indexed by n or a vectorised function of n.  The
    sum is taken in fixed chunks with pairwise partial sums and an exact
    final reduction, so the result does not depend on the chunking.
    """
    N = scheme.default_terms() if N is None else N
    parts = []
    for lo in range(1, N + 1, _CHUNK):
        n = np.arange(lo, min(N, lo + _CHUNK - 1) + 1)
        a = coeff(n) if callable(coeff) else coeff[n]
        nf = n.astype(float)
        parts.append(float(np.sum(np.asarray(a, dtype=float) * nf ** -weight_exponent
                                  * scheme.weights(nf, N))))
    return math.fsum(parts)
