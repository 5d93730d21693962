# Roots of the branch transforms through Lambert W

# %%
import math

from zetasaw import roots, transforms

# Laplace roots: -n(n+1)(W(m, -1/e) + 1); m = 0, -1 give the removable point 0
for m in range(-3, 4):
    rho = roots.laplace_root(1, m)
    print(m, rho, abs(transforms.laplace_w_component(1, rho)) if m not in (0, -1) else "-")
print("rho_2/rho_1 =", roots.laplace_root(2, 4) / roots.laplace_root(1, 4))

# %%
# Mellin roots of w_1 in closed form, and by Newton for general n
fam = roots.mellin_roots_numeric(1, 6)
for m, z in fam.roots:
    print(m, z, roots.mellin_residual(1, z))
print("closed form m=1:", roots.mellin_inverse_n1(0, 1))

# %%
# the roots sit on a lattice of vertical spacing 2 pi / ln((n+1)/n)
v = roots.mellin_roots_numeric(1, 21).values()
print("gap at m=20:", (v[20] - v[19]).imag, "limit:", 2 * math.pi / math.log(2))

# %%
# the same substitution works for every n: branch m of W gives the m-th root
for n in (2, 3, 10):
    z = roots.mellin_roots_numeric(n, 1).values()[0]
    print(n, z, roots.mellin_root_lambert(n, 1))
