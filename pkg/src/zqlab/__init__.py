"""Numerical verification of Voronoi-type summation formulas and Cohen / Ramanujan-Guinand
identities for lambda(n), mu(n), d(n)^2 and sigma_a(n) sigma_b(n), including the sums over
zeros of zeta, plus Riesz-mean oscillation traces."""

__version__ = "0.1.0"
