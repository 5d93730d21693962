"""Self-check suites behind ``zetasaw verify``.

Each suite is a list of named checks comparing an observed value against a
target within a tolerance.  The suites are deliberately cheap (a few seconds
in total) and independent of the test-suite tooling.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

from . import fractal, maps, reflection, roots, specfun, transforms

__all__ = ["Check", "SUITES", "run_suite", "run_all"]


@dataclass
class Check:
    suite: str
    name: str
    target: object
    observed: object
    tol: float
    passed: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        for k in ("target", "observed"):
            v = d[k]
            if isinstance(v, complex):
                d[k] = [v.real, v.imag]
            elif isinstance(v, Fraction):
                d[k] = str(v)
            elif not isinstance(v, (int, float, str, bool, type(None))):
                d[k] = str(v)
        return d


def _close(suite, name, observed, target, tol) -> Check:
    ok = abs(complex(observed) - complex(target)) <= tol
    return Check(suite, name, target, observed, tol, bool(ok))


def _equal(suite, name, observed, target) -> Check:
    return Check(suite, name, target, observed, 0.0, observed == target)


def _specfun() -> list[Check]:
    s = "specfun"
    out = [
        _close(s, "zeta(2)", specfun.riemann_zeta(2), math.pi**2 / 6, 1e-14),
        _close(s, "zeta(-1)", specfun.riemann_zeta(-1), -1 / 12, 1e-14),
        _close(s, "W(-1,-1/e)", specfun.lambert_w(-1, -specfun.INV_E), -1, 1e-12),
        _close(s, "W(0,e)", specfun.lambert_w(0, math.e), 1, 1e-14),
        _close(s, "w_ln real root", specfun.w_ln_real_root(), 0.27441063190284810044, 1e-12),
        _close(s, "digamma(1)", specfun.digamma(1.0), -specfun.EULER_GAMMA, 1e-14),
    ]
    z = 0.3 + 2j
    for m in (-3, 0, 2):
        w = specfun.lambert_w(m, z)
        out.append(_close(s, f"W({m},z) e^W = z", w * cmath.exp(w), z, 1e-13))
    return out


# (-a_r, -b_r) for w^r(gamma) = a_r - b_r gamma, r = 0..10
GAMMA_ORBIT_TABLE = [
    (0, 1), (1, 2), (48, 84), (290, 504), (581, 1008), (1163, 2016), (2327, 4032),
    (13964, 24192), (7492468716, 12980362752), (14984937433, 25960725504),
    (1078915495184, 1869172236288),
]

CF_NEG_INV_E = [-1, 1, 1, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1, 1, 10, 1, 1, 12]


def _maps() -> list[Check]:
    s = "maps"
    out = [
        _equal(s, f"gamma orbit r={st.r}", (-st.a, -st.b), GAMMA_ORBIT_TABLE[st.r])
        for st in maps.gamma_orbit(10)
    ]
    out.append(_equal(s, "continued fraction of -1/e", maps.continued_fraction(-1 / math.e, 20), CF_NEG_INV_E))
    out.append(_close(s, "w(0.7)", maps.w_map(0.7), 0.4, 1e-15))
    worst = max(abs(maps.w_map(maps.fixed_point_w(n, True)) - maps.fixed_point_w(n, True)) for n in range(1, 500))
    out.append(_equal(s, "exact fixed points n<500", worst, 0))
    return out


def _transforms() -> list[Check]:
    s = "transforms"
    out = [
        _equal(s, "Schroder S_0..S_14", transforms.schroder_numbers(14),
               [1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446, 27297738, 142078746]),
        _close(s, "zeta_w(1000;2)", transforms.zeta_w_finite(1000, 2), math.pi**2 / 6, 2e-6),
        _close(s, "zeta_w(1000;3)", transforms.zeta_w_finite(1000, 3), specfun.riemann_zeta(3), 2e-6),
        _close(s, "zeta_h(1e4;2)", transforms.zeta_h_finite(10**4, 2), math.pi**2 / 6, 1e-3),
        _close(s, "M[w_1](1)", transforms.mellin_w_component(1, 1), 0.25, 1e-15),
        _close(s, "Res zeta_w(10;s) at 1", reflection.laurent_coeff(lambda z: transforms.zeta_w_finite(10, z), 1, -1),
               10 / 11, 1e-10),
        _close(s, "Res tau at 1", reflection.laurent_coeff(lambda z: z * (z + 1) / (z - 1), 1, -1), 2, 1e-10),
    ]
    for t in (0.3, 0.5):
        out.append(_close(s, f"tau Mellin series t={t}", transforms.tau_mellin_series(t),
                          -2 * math.pi / math.tan(math.pi * t), 1e-10))
    return out


def _reflection() -> list[Check]:
    s = "reflection"
    out = []
    for N in (1, 10, 100):
        for t in (0.1, 1, 5, 20):
            out.append(_close(s, f"|chi({N};1/2+{t}i)|", abs(reflection.chi(N, 0.5 + 1j * t)), 1, 1e-10))
    z = 0.3 + 0.7j
    out.append(_close(s, "involution N=10", reflection.chi(10, z) * reflection.chi(10, 1 - z), 1, 1e-10))
    scan = reflection.residue_sign_scan(170, 180)
    out.append(_equal(s, "sign change 170..180", scan.sign_change, (176, 177)))
    r = reflection.chi_residue_at_0(10)
    out.append(_close(s, "residue at 0 closed vs contour N=10", r.closed, r.contour, 1e-6))
    return out


def _roots() -> list[Check]:
    s = "roots"
    out = []
    worst = 0.0
    for n in range(1, 6):
        for m in range(-5, 6):
            if m in (0, -1):
                continue
            worst = max(worst, abs(transforms.laplace_w_component(n, roots.laplace_root(n, m))))
    out.append(_close(s, "Laplace root residuals n<=5 |m|<=5", worst, 0, 1e-9))
    out.append(_close(s, "Laplace quotient n=2", roots.laplace_root_quotient(2, 3), 3, 1e-9))
    fam = roots.mellin_roots_numeric(1, 21)
    worst = max(abs(z - roots.mellin_inverse_n1(0, m)) for m, z in fam.roots)
    out.append(_close(s, "Mellin n=1 numeric vs closed form", worst, 0, 1e-8))
    v = fam.values()
    out.append(_close(s, "spacing at m=20", (v[20] - v[19]).imag, 2 * math.pi / math.log(2), 0.01 * 2 * math.pi / math.log(2)))
    return out


def _fractal() -> list[Check]:
    s = "fractal"
    out = []
    for n in range(1, 11):
        out.append(_close(s, f"Table row {n}", fractal.geometric_zeta_integer(n).value(),
                          fractal.geometric_zeta(n, 10**5), 1e-8))
    t = fractal.tube_volume(Fraction(1, 8))
    out.append(_equal(s, "(V(1/8)/sqrt(1/8))^2", t.scaled_squared, 2))
    out.append(_close(s, "content estimate 1e-6", fractal.minkowski_content_estimate(1e-6), 2, 0.02))
    out.append(_equal(s, "total length", fractal.total_length(), Fraction(1, 2)))
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "specfun": _specfun,
    "maps": _maps,
    "transforms": _transforms,
    "reflection": _reflection,
    "roots": _roots,
    "fractal": _fractal,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return run_all()
    return SUITES[name]()


def run_all() -> list[Check]:
    out = []
    for fn in SUITES.values():
        out.extend(fn())
    return out
