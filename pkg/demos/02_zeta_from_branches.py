# Zeta from the Mellin transforms of the sawtooth branches

# %%
import math

import numpy as np

from zetasaw import transforms
from zetasaw.specfun import riemann_zeta

print("tau(s) = s(s+1)/(s-1);  tau(2) =", transforms.tau(2))
print("Schroder numbers from the inverse branch:", transforms.schroder_numbers(10))

# %%
# zeta_w(N; s) -> zeta(s), error ~ N^(-Re s)
for N in (10, 100, 1000, 10000):
    e2 = abs(transforms.zeta_w_finite(N, 2) - math.pi**2 / 6)
    eh = abs(transforms.zeta_w_finite(N, 0.5 + 14.134725j) - riemann_zeta(0.5 + 14.134725j))
    print(f"N={N:>6d}  |zeta_w(N;2) - pi^2/6| = {e2:.2e}   near first zero: {eh:.2e}")

# %%
# the finite sums vanish exactly at s = 0 and s = -1 and have residue N/(N+1) at 1
print(transforms.zeta_w_finite(50, np.array([0, -1, 2, 3 + 1j])))
print("residue at 1 for N=9:", transforms.residue_zeta_w_at_1(9))

# %%
# the Gauss map gives a second, slower continuation
for N in (100, 10_000):
    print(N, transforms.zeta_h_finite(N, 2) - math.pi**2 / 6)

# %%
# M[w_n](0)/n = 1/n - ln(1 + 1/n): the sum is Euler's constant
for N in (10, 10**3, 10**6):
    print(N, transforms.gamma_from_w_series(N))
