"""Roots of the Laplace and Mellin transforms of the sawtooth branches.

Laplace roots are explicit in the Lambert W function.  The Mellin roots of
M[w_n] solve ``n e^{-sL} + s - n = 0`` with ``L = ln((n+1)/n)``; they form a
lattice whose vertical spacing tends to ``2 pi / L``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import ConvergenceError, DomainError
from .specfun import INV_E, lambert_w
from .transforms import laplace_w_component, mellin_w_component, tau

__all__ = [
    "RootFamily",
    "laplace_root",
    "laplace_root_reflection_check",
    "laplace_root_quotient",
    "mellin_tau_w1",
    "mellin_inverse_n1",
    "mellin_root_lambert",
    "mellin_roots_numeric",
    "mellin_residual",
    "root_spacing_limit",
    "root_quotient_limit",
    "root_exponential_spacing",
]

NEWTON_MAXITER = 100


@dataclass
class RootFamily:
    """Roots of one component transform indexed by branch ``m``."""

    n: int
    kind: str  # "laplace" or "mellin"
    roots: list = field(default_factory=list)  # (m, value)

    def values(self) -> list[complex]:
        return [v for _, v in self.roots]


def _check_n(n: int) -> int:
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    return int(n)


# --- Laplace roots ---------------------------------------------------------

def laplace_root(n: int, m: int) -> complex:
    """m-th root -n(n+1)(W(m, -1/e) + 1) of the Laplace transform of w_n.

    The branches m = 0 and m = -1 both give W = -1 and hence s = 0, which is
    the removable point of the closed form rather than a zero of the
    transform.  Every other branch gives a genuine zero.
    """
    n = _check_n(n)
    return -n * (n + 1) * (lambert_w(m, -INV_E) + 1)


def laplace_root_reflection_check(n: int, m: int) -> float:
    """|rho(m) - conj(rho(-m-1))|, which vanishes by conjugate symmetry of W."""
    return abs(laplace_root(n, m) - laplace_root(n, -m - 1).conjugate())


def laplace_root_quotient(n: int, m: int) -> complex:
    """rho_{w_n}(m) / rho_{w_{n-1}}(m), identically (n+1)/(n-1)."""
    if n < 2:
        raise DomainError("n must be >= 2")
    return laplace_root(n, m) / laplace_root(n - 1, m)


# --- Mellin roots ----------------------------------------------------------

def mellin_tau_w1(s: complex) -> complex:
    """tau(s) M[w_1](s) = 1 + 2^-s/(s-1)."""
    return tau(s) * mellin_w_component(1, s)


def mellin_inverse_n1(z: complex, m: int) -> complex:
    """Branch m of the inverse of s -> tau(s) M[w_1](s).

    ``(W(m, ln(sqrt 2)/(z-1)) + ln 2) / ln 2``; at z = 0 these are the zeros
    of M[w_1].
    """
    z = complex(z)
    if z == 1:
        raise DomainError("z = 1 is not attained")
    ln2 = math.log(2)
    return (lambert_w(m, 0.5 * ln2 / (z - 1)) + ln2) / ln2


def mellin_root_lambert(n: int, m: int) -> complex:
    """Zero ``n + W(m, -n L e^{-n L}) / L`` of M[w_n] with ``L = ln((n+1)/n)``.

    Substituting u = n - s in ``n e^{-sL} = n - s`` gives a Lambert equation.
    Branches 0 and -1 return the removable points s = 0 and s = -1, which are
    not zeros of M[w_n]; branch m >= 1 is the m-th root in the ranking of
    :func:`mellin_roots_numeric` and m <= -2 its conjugate.  For n = 1 this
    is the same family as :func:`mellin_inverse_n1` at z = 0.
    """
    n = _check_n(n)
    L = math.log1p(1.0 / n)
    return n + lambert_w(m, -n * L * math.exp(-n * L)) / L


def _newton_mellin(n: int, s: complex, k: int) -> complex:
    # Zeros of M[w_n] other than the removable s = 0, -1 solve
    # n e^{-sL} = n - s.  Newton runs on the logarithm of that equation on
    # sheet k, h(s) = sL - ln n + Log(n - s) - 2 pi i k, which is nearly
    # linear, then polishes on f(s) = n e^{-sL} + s - n.
    L = math.log1p(1.0 / n)
    ln_n = math.log(n)
    h = lambda z: z * L - ln_n + cmath.log(n - z) - 2j * math.pi * k  # noqa: E731
    hs = h(s)
    for _ in range(NEWTON_MAXITER):
        step = hs / (L - 1 / (n - s))
        new = s - step
        hn = h(new)
        # damp overshooting steps by halves
        damp = 0
        while abs(hn) > abs(hs) and damp < 30:
            step *= 0.5
            new = s - step
            hn = h(new)
            damp += 1
        s, hs = new, hn
        if abs(step) <= 4e-16 * max(1.0, abs(s)):
            break
    else:
        raise ConvergenceError("Newton did not converge")
    for _ in range(3):
        e = n * cmath.exp(-s * L)
        d = 1 - L * e
        if d == 0:
            break
        s -= (e + s - n) / d
    return s


def mellin_roots_numeric(n: int, count: int) -> RootFamily:
    """The ``count`` zeros of M[w_n] with smallest positive imaginary part.

    Newton is seeded at ``0.5 + 2 pi i k / ln((n+1)/n)`` for k = 1, 2, ...;
    duplicates are merged and the result is sorted by imaginary part.  The
    index m of each root is its 1-based rank.

    Raises
    ------
    ConvergenceError
        When a seed fails, naming its index.
    """
    n = _check_n(n)
    if count < 1:
        raise DomainError("count must be >= 1")
    spacing = 2 * math.pi / math.log1p(1.0 / n)
    found: list[complex] = []
    k = 0
    while len(found) < count:
        k += 1
        if k > 3 * count + 10:
            raise ConvergenceError(f"only {len(found)} distinct roots after {k - 1} seeds")
        try:
            root = _newton_mellin(n, complex(0.5, spacing * k), k)
        except ConvergenceError as exc:
            raise ConvergenceError(f"seed {k} failed: {exc}") from None
        if root.imag <= 0 or any(abs(root - r) < 1e-8 * max(1.0, abs(r)) for r in found):
            continue
        found.append(root)
    found.sort(key=lambda z: z.imag)
    found = found[:count]
    for z in found:
        if mellin_residual(n, z) > 1e-9:
            raise ConvergenceError(f"residual too large at {z!r}")
    return RootFamily(n, "mellin", [(i + 1, z) for i, z in enumerate(found)])


def mellin_residual(n: int, z: complex) -> float:
    """Newton correction |M[w_n](z) / M[w_n]'(z)|, the distance to the root.

    M[w_n](s) = n^-s f(s) / (s (s+1)) with f(s) = n e^{-sL} + s - n, so the
    ratio is computed from f alone and never overflows, even where n^-s does.
    """
    n = _check_n(n)
    z = complex(z)
    L = math.log1p(1.0 / n)
    e = n * cmath.exp(-z * L)
    f = e + z - n
    if f == 0:
        return 0.0
    log_deriv = -math.log(n) + (1 - L * e) / f - 1 / z - 1 / (z + 1)
    return abs(1 / log_deriv)


def root_spacing_limit(n: int) -> complex:
    """Limiting gap 2 pi i / (ln(n+1) - ln n) between consecutive Mellin roots."""
    n = _check_n(n)
    return 2j * math.pi / math.log1p(1.0 / n)


def root_quotient_limit(n: int) -> float:
    """Limit of rho_{w_n}(m)/rho_{w_{n-1}}(m): (ln n - ln(n-1)) / (ln(n+1) - ln n)."""
    n = _check_n(n)
    if n < 2:
        raise DomainError("n must be >= 2")
    return math.log1p(1.0 / (n - 1)) / math.log1p(1.0 / n)


def root_exponential_spacing(n: int) -> complex:
    """Limit of e^{rho(m) - rho(m+1)}, i.e. e^{-2 pi i/(ln(n+1) - ln n)}."""
    n = _check_n(n)
    theta = 2 * math.pi / math.log1p(1.0 / n)
    theta = math.fmod(theta, 2 * math.pi)
    return complex(math.cos(theta), -math.sin(theta))
