# The finite reflection function chi(N; s) and its residue at s = 0

# %%
from zetasaw import reflection

for N in (1, 10, 100):
    s = 0.5 + 7j
    print(N, abs(reflection.chi(N, s)), reflection.chi(N, s) * reflection.chi(N, 1 - s))

# %%
# chi has a double pole at 0.  The contour engine reads off the Laurent
# coefficients; the closed form for the residue is checked against it.
r = reflection.chi_residue_at_0(10)
print("orders -2, -1, 0:", {k: round(v.real, 12) for k, v in r.laurent.items()})
print("closed", r.closed, "contour", r.contour, "diff", r.difference)

# %%
# the residue is negative for small N and turns positive between 176 and 177
scan = reflection.residue_sign_scan(170, 180)
for N, res in scan.rows:
    print(N, f"{res:+.6e}")
print("sign change:", scan.sign_change)
print("large N:", reflection.chi_residue_at_0(5000).contour)
