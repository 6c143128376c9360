"""Refine the first zeta zeros from the bundled seeds and check a few zeta values.

    python demos/zeros_and_zeta.py
"""
import math

from zqlab.zeta import chi_factor, zero_table, zeta

t = zero_table(10)
for z in t:
    print(f"{z.index:3d}  gamma={z.gamma:.12f}  |zeta(rho)|={z.residual:.1e}  |zeta'(rho)|={abs(z.zeta_prime):.6f}")

print("zeta(2) - pi^2/6 =", zeta(2.0) - math.pi ** 2 / 6)
s = 0.3 + 9.1j
print("functional equation residual at", s, abs(zeta(s) - chi_factor(s) * zeta(1 - s)))
