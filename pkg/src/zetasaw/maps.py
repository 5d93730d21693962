"""The harmonic sawtooth map w(x), the Gauss map h(x), and their dynamics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from .errors import DomainError, PrecisionError
from .specfun import lerch_phi

__all__ = [
    "GOLDEN_RATIO",
    "EULER_GAMMA_DIGITS",
    "AffineOrbitState",
    "Orbit",
    "chi_harmonic",
    "harmonic_index",
    "w_component",
    "h_component",
    "w_map",
    "gauss_map",
    "iterate_map",
    "fixed_point_w",
    "fixed_point_h",
    "fix_w_generating",
    "fix_w_lerch",
    "fix_w_lerch_printed",
    "continued_fraction",
    "affine_orbit",
    "gamma_orbit",
]

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2

# 122 significant digits of Euler's constant
EULER_GAMMA_DIGITS = (
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951463144724980708248096"
)


def _exact(x):
    # floats are dyadic rationals; comparing n*x with 1 in float arithmetic
    # misplaces points within an ulp of a boundary
    return Fraction(x) if isinstance(x, float) else x


def chi_harmonic(x: float, n: int) -> int:
    """Indicator of the harmonic interval (1/(n+1), 1/n]."""
    if n < 1:
        raise DomainError("harmonic index must be >= 1")
    y = _exact(x)
    return int(n * y <= 1 < (n + 1) * y)


def harmonic_index(x: float) -> int:
    """The unique n with 1/(n+1) < x <= 1/n, for 0 < x <= 1.

    ``floor(1/x)`` can round the wrong way when x is just above 1/n, so the
    candidate is corrected against the interval inequalities directly.
    """
    if not 0 < x <= 1:
        raise DomainError(f"x={x!r} is outside (0, 1]")
    y = _exact(x)
    n = math.floor(1 / y)
    while n > 1 and n * y > 1:
        n -= 1
    while (n + 1) * y <= 1:
        n += 1
    return n


def w_component(n: int, x: float) -> float:
    if not chi_harmonic(x, n):
        return 0 * x
    v = n * (_exact(x) * (n + 1) - 1)
    return float(v) if isinstance(x, float) else v


def h_component(n: int, x: float) -> float:
    return (1 - x * n) / x * chi_harmonic(x, n) if x != 0 else 0.0


def w_map(x: float) -> float:
    """Harmonic sawtooth map ``k (x k + x - 1)`` with ``k = floor(1/x)``.

    Maps each harmonic interval (1/(k+1), 1/k] affinely onto (0, 1].
    """
    k = harmonic_index(x)
    if isinstance(x, Fraction):
        return k * (x * k + x - 1)
    # x k + x - 1 cancels badly for small x; evaluate exactly, round once
    return float(k * (Fraction(x) * (k + 1) - 1))


def gauss_map(x: float) -> float:
    """Gauss map ``1/x - floor(1/x)`` on (0, 1]."""
    if not 0 < x <= 1:
        raise DomainError(f"x={x!r} is outside (0, 1]")
    if isinstance(x, Fraction):
        r = 1 / x
        return r - math.floor(r)
    r = 1.0 / x
    return r - math.floor(r)


_MAPS: dict[str, Callable] = {"w": w_map, "h": gauss_map}


class Orbit(NamedTuple):
    points: list
    terminated: bool


def iterate_map(kind: str, x: float, r: int) -> Orbit:
    """Orbit ``[x, f(x), ..., f^r(x)]`` of the w or h map.

    Iteration stops early, with ``terminated=True``, once an iterate leaves
    (0, 1] (the Gauss map reaching 0 on a rational point).
    """
    try:
        f = _MAPS[kind]
    except KeyError:
        raise DomainError(f"unknown map {kind!r}; expected 'w' or 'h'") from None
    if r < 0:
        raise DomainError("r must be nonnegative")
    pts = [x]
    for _ in range(r):
        cur = pts[-1]
        if not 0 < cur <= 1:
            return Orbit(pts, True)
        pts.append(f(cur))
    return Orbit(pts, not 0 < pts[-1] <= 1)


def fixed_point_w(n: int, exact: bool = False):
    """n-th fixed point n/(n^2 + n - 1) of the sawtooth map."""
    if n < 1:
        raise DomainError("n must be >= 1")
    q = Fraction(n, n * n + n - 1)
    return q if exact else n / (n * n + n - 1)


def fixed_point_h(n: int) -> float:
    """n-th fixed point of the Gauss map, the positive root of x^2 + n x - 1."""
    if n < 1:
        raise DomainError("n must be >= 1")
    # 2 / (n + sqrt(n^2+4)) avoids the cancellation in sqrt(n^2+4)/2 - n/2
    return 2.0 / (n + math.sqrt(n * n + 4))


def fix_w_generating(x: float, terms: int = 200) -> float:
    """Partial sum of the fixed-point generating function sum n x^n/(n^2+n-1)."""
    if abs(x) >= 1:
        raise DomainError("generating function diverges for |x| >= 1")
    total = 0.0
    xn = 1.0
    for n in range(1, terms + 1):
        xn *= x
        total += n * xn / (n * n + n - 1)
    return total


def _fix_w_partial_fractions() -> tuple[float, float]:
    # n/(n^2+n-1) = A/(n - (phi-1)) + B/(n + phi)
    root5 = math.sqrt(5)
    return (5 - root5) / 10, (5 + root5) / 10


def fix_w_lerch(x: complex) -> complex:
    """Closed form of the generating function via two Lerch transcendents.

    ``x (A Phi(x, 1, 2 - phi) + B Phi(x, 1, 1 + phi))`` with
    ``A = (5 - sqrt 5)/10`` and ``B = (5 + sqrt 5)/10``.
    """
    if abs(x) >= 1:
        raise DomainError("generating function diverges for |x| >= 1")
    a, b = _fix_w_partial_fractions()
    phi = GOLDEN_RATIO
    return x * (a * lerch_phi(x, 1, 2 - phi) + b * lerch_phi(x, 1, 1 + phi))


def fix_w_lerch_printed(x: complex) -> complex:
    """The printed form ``((5-sqrt5) Phi(x,1,1-phi) + (5-sqrt5) Phi(x,1,phi)) / 10``.

    Kept only so the discrepancy with :func:`fix_w_generating` can be
    reported; it is not the generating function.
    """
    phi = GOLDEN_RATIO
    c = (5 - math.sqrt(5)) / 10
    return c * (lerch_phi(x, 1, 1 - phi) + lerch_phi(x, 1, phi))


def continued_fraction(x, k: int) -> list[int]:
    """First ``k`` continued-fraction quotients [floor(x); a1, a2, ...].

    Floats are expanded through their exact binary value, so the quotients are
    those of the double nearest to the intended real.  Expansion stops early
    when the remainder is exactly zero.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    r = Fraction(x)
    out = []
    for _ in range(k):
        q = math.floor(r)
        out.append(q)
        r -= q
        if r == 0:
            break
        r = 1 / r
    return out


@dataclass(frozen=True)
class AffineOrbitState:
    """``w^r(x) = a - b x`` with exact integers a, b."""

    r: int
    a: int
    b: int
    branch: int | None = None  # harmonic index used for the step into this state

    def value(self, x) -> Fraction:
        return self.a - self.b * Fraction(x)


def affine_orbit(x_lo: Fraction, x_hi: Fraction, n: int) -> list[AffineOrbitState]:
    """Exact affine orbit states of any point known to lie in [x_lo, x_hi].

    Each step picks the branch ``k`` of the harmonic interval containing
    ``a - b x`` and updates ``(a, b) <- (k(k+1) a - k, k(k+1) b)``.  The branch
    is decided on the whole enclosure; if the two ends disagree the enclosure
    straddles a discontinuity and :class:`PrecisionError` is raised.
    """
    a, b = 0, -1
    states = [AffineOrbitState(0, a, b)]
    for r in range(1, n + 1):
        ends = (a - b * x_lo, a - b * x_hi)
        ks = set()
        for y in ends:
            if not 0 < y <= 1:
                raise PrecisionError(f"orbit left (0, 1] at step {r}")
            ks.add(harmonic_index(y))
        if len(ks) != 1:
            raise PrecisionError(f"enclosure straddles a harmonic boundary at step {r}")
        (k,) = ks
        a, b = k * (k + 1) * a - k, k * (k + 1) * b
        states.append(AffineOrbitState(r, a, b, k))
    return states


def gamma_orbit(n: int = 10, digits: int = 120) -> list[AffineOrbitState]:
    """Exact states ``w^r(gamma) = a_r - b_r gamma`` for r = 0..n.

    ``digits`` decimal digits of Euler's constant are used, enclosed in an
    interval of half-width 10^-digits.
    """
    if n > 30:
        raise DomainError("n must be <= 30")
    if not 40 <= digits <= len(EULER_GAMMA_DIGITS) - 2:
        raise DomainError(f"digits must lie in [40, {len(EULER_GAMMA_DIGITS) - 2}]")
    g = Fraction(EULER_GAMMA_DIGITS[: digits + 2])
    eps = Fraction(1, 10**digits)
    return affine_orbit(g - eps, g + eps, n)
