# Harmonic sawtooth map: branches, fixed points, and the orbit of gamma

# %%
from fractions import Fraction

from zetasaw import maps

# w sends each interval (1/(n+1), 1/n] affinely onto (0, 1]
for x in (Fraction(7, 10), Fraction(3, 10), Fraction(1, 7), Fraction(2, 15)):
    print(x, "-> branch", maps.harmonic_index(x), "-> w(x) =", maps.w_map(x))

# %%
# each branch has one fixed point n/(n^2+n-1); exact rationals make the check exact
for n in range(1, 6):
    q = maps.fixed_point_w(n, exact=True)
    print(n, q, maps.w_map(q) == q)

# %%
# Gauss map orbits read off continued fraction quotients
o = maps.iterate_map("h", Fraction(93, 415), 8)
print(o.points, "terminated:", o.terminated)
print(maps.continued_fraction(Fraction(415, 93), 10))

# %%
# w^r(gamma) = a_r - b_r gamma with integer a_r, b_r.  The branch taken at
# each step is certified with a 120-digit enclosure of gamma.
for st in maps.gamma_orbit(10):
    print(f"r={st.r:2d}  -a={-st.a:>15d}  -b={-st.b:>15d}")
