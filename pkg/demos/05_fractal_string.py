# The fractal string of triangle areas l_n = 1/(2n(n+1))

# %%
from fractions import Fraction

from zetasaw import fractal

print([str(fractal.string_length(n)) for n in range(1, 8)], "total", fractal.total_length())
print("N(x) for x = 4, 12, 24, 100:", [fractal.geometric_counting(x) for x in (4, 12, 24, 100)])

# %%
# inner tube volume and Minkowski content
t = fractal.tube_volume(Fraction(1, 8))
print("V(1/8) =", t.volume, " (V/sqrt eps)^2 =", t.scaled_squared)
for k in range(2, 11, 2):
    eps = 10.0**-k
    print(f"eps=1e-{k:<2d}  V/sqrt(eps) = {fractal.minkowski_content_estimate(eps):.8f}")

# %%
# geometric zeta at integers: rationals plus even zeta values
for n in range(1, 7):
    c = fractal.geometric_zeta_integer(n)
    print(n, c, c.value(), fractal.geometric_zeta(n).real)

# %%
print("pole at D = 1/2 with residue", fractal.geometric_zeta_residue())
print("spectral zeta at 2:", fractal.spectral_zeta(2))
print("partition function at 1:", fractal.partition_function(1))
