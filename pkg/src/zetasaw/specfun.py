"""Complex special functions used throughout the package.

Gamma, Riemann and Hurwitz zeta, polygamma, multi-branch Lambert W, the
Lerch transcendent and exact Bernoulli numbers.  Everything here is a pure
function of its arguments; the only cached state is the immutable Bernoulli
table.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import special as _sp

from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "EULER_GAMMA",
    "INV_E",
    "gamma_fn",
    "riemann_zeta",
    "riemann_zeta_deriv",
    "hurwitz_zeta",
    "polygamma",
    "digamma",
    "lambert_w",
    "lambert_w_branch_of",
    "lerch_phi",
    "w_ln",
    "w_ln_real_root",
    "bernoulli_numbers",
]

EULER_GAMMA = 0.5772156649015328606065120900824024310421593359399235988057672348848677
INV_E = math.exp(-1.0)

# Euler-Maclaurin correction order (B_2 .. B_30)
EM_ORDER = 15
HALLEY_MAXITER = 50


@lru_cache(maxsize=None)
def _bernoulli_table(count: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for n in range(1, count):
        acc = Fraction(0)
        binom = 1
        for k in range(n):
            acc += binom * b[k]
            binom = binom * (n + 1 - k) // (k + 1)
        b.append(-acc / (n + 1))
    return tuple(b)


def bernoulli_numbers(count: int) -> list[Fraction]:
    """Return the exact Bernoulli numbers B_0 .. B_{count-1} (B_1 = -1/2).

    Computed from the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0.
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    return list(_bernoulli_table(count))


# B_{2k} / (2k)! for k = 1..EM_ORDER, as floats
_EM_COEFFS = tuple(
    float(b / math.factorial(2 * k))
    for k, b in ((k, _bernoulli_table(2 * EM_ORDER + 1)[2 * k]) for k in range(1, EM_ORDER + 1))
)


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def gamma_fn(z: complex) -> complex:
    """Complex Gamma function.

    Raises
    ------
    PoleError
        If ``z`` is zero or a negative integer.
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.imag == 0:
        return complex(_sp.gamma(z.real))
    return complex(_sp.gamma(z))


def _em_hurwitz(s: complex, a: complex) -> complex:
    """Euler-Maclaurin sum for sum_{n>=0} (n+a)^{-s}; s != 1."""
    n_direct = max(30, int(math.ceil(abs(s))) + 10, int(math.ceil(abs(s.imag))))
    n = np.arange(n_direct, dtype=float) + a
    head = complex(np.sum(np.exp(-s * np.log(n))))
    x = n_direct + a
    lx = cmath.log(x)
    xs = cmath.exp(-s * lx)
    total = head + x * xs / (s - 1) + 0.5 * xs
    # rising factorial s(s+1)...(s+2k-2) times x^{-s-2k+1}
    poch = s
    xpow = xs / x
    inv_x2 = 1.0 / (x * x)
    for k, coeff in enumerate(_EM_COEFFS, start=1):
        term = coeff * poch * xpow
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        xpow *= inv_x2
    return total


def hurwitz_zeta(s: complex, a: float) -> complex:
    """Hurwitz zeta function sum_{n>=0} (n + a)^{-s} for real ``a > 0``.

    Evaluated by Euler-Maclaurin summation, which also provides the analytic
    continuation to ``Re(s) <= 1``.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if not a > 0:
        raise DomainError("Hurwitz zeta requires a > 0")
    return _em_hurwitz(s, float(a))


def riemann_zeta(s: complex) -> complex:
    """Riemann zeta function.

    Euler-Maclaurin summation for ``Re(s) >= 0`` and the functional equation
    ``zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s)`` to its
    left.  The trivial zeros are returned as exact zeros.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if s.real >= 0:
        return _em_hurwitz(s, 1.0)
    if s.imag == 0 and s.real % 2 == 0:
        return 0j
    return (
        2**s
        * cmath.exp((s - 1) * math.log(math.pi))
        * cmath.sin(math.pi * s / 2)
        * gamma_fn(1 - s)
        * _em_hurwitz(1 - s, 1.0)
    )


def riemann_zeta_deriv(s: complex, h: float = 1e-6) -> complex:
    """Central-difference derivative of zeta at ``s``."""
    s = complex(s)
    return (riemann_zeta(s + h) - riemann_zeta(s - h)) / (2 * h)


def digamma(x: float) -> float:
    if not x > 0:
        raise DomainError("digamma requires x > 0")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    p = inv2
    bern = _bernoulli_table(20)
    for k in range(1, 9):
        series += float(bern[2 * k]) / (2 * k) * p
        p *= inv2
    return acc + math.log(x) - 0.5 / x - series


def polygamma(k: int, x: float) -> float:
    """Polygamma function Psi(k, x) for real ``x > 0``.

    ``k = 0`` is the digamma function; for ``k >= 1`` the value is
    ``(-1)^(k+1) k! zeta(k+1, x)``.
    """
    if k < 0 or int(k) != k:
        raise DomainError("polygamma order must be a nonnegative integer")
    if not x > 0:
        raise DomainError("polygamma requires x > 0")
    k = int(k)
    if k == 0:
        return digamma(float(x))
    sign = 1.0 if k % 2 == 1 else -1.0
    return sign * math.factorial(k) * hurwitz_zeta(k + 1, float(x)).real


# --- Lambert W -------------------------------------------------------------

def _branch_point_series(p: complex) -> complex:
    # W = -1 + p - p^2/3 + 11/72 p^3 - 43/540 p^4 + 769/17280 p^5
    return -1.0 + p * (1.0 + p * (-1.0 / 3 + p * (11.0 / 72 + p * (-43.0 / 540 + p * 769.0 / 17280))))


def _lambert_initial(m: int, z: complex) -> complex:
    near_bp = abs(z + INV_E) < 0.3
    if m == 0:
        if abs(z) < 0.3:
            return z * (1 - z * (1 - 1.5 * z))
        if near_bp:
            return _branch_point_series(cmath.sqrt(2 * (math.e * z + 1)))
        lz = cmath.log(1 + z)
        return lz * (1 - cmath.log(1 + lz) / (2 + lz))
    if near_bp and ((m == -1 and z.imag >= 0) or (m == 1 and z.imag < 0)):
        return _branch_point_series(-cmath.sqrt(2 * (math.e * z + 1)))
    if m == -1 and z.imag == 0 and -INV_E < z.real < 0:
        # real lower branch: start from the asymptotic form on the real line
        lz = math.log(-z.real)
        return complex(lz - math.log(-lz))
    big_l = cmath.log(z) + 2j * math.pi * m
    return big_l - cmath.log(big_l)


def _halley(z: complex, w: complex, tol: float, maxiter: int) -> complex:
    prev = math.inf
    for _ in range(maxiter):
        ew = cmath.exp(w)
        f = w * ew - z
        if f == 0:
            return w
        wp1 = w + 1
        if wp1 == 0:
            return w
        dw = f / (ew * wp1 - (w + 2) * f / (2 * wp1))
        w -= dw
        step = abs(dw)
        if step <= tol * (1 + abs(w)):
            return w
        # near the branch point rounding in f is amplified by 1/(w+1); once
        # the steps are tiny and stop shrinking we are at the noise floor
        if step >= prev and step <= 1e-10 * (1 + abs(w)):
            return w
        prev = step
    raise ConvergenceError(f"Lambert W Halley iteration did not converge for z={z!r}")


def lambert_w_branch_of(w: complex, z: complex) -> int:
    """Branch index k implied by ``log(w) + w = log(z) + 2 pi i k``."""
    return round((cmath.log(w) + w - cmath.log(z)).imag / (2 * math.pi))


def lambert_w(m: int, z: complex, tol: float = 1e-15, maxiter: int = HALLEY_MAXITER) -> complex:
    """Branch ``m`` of the Lambert W function, the solutions of ``w e^w = z``.

    Parameters
    ----------
    m : int
        Branch index; 0 is the principal branch.
    z : complex
        Argument.  On the branch cut the value is taken from above
        (counter-clockwise continuity), so that ``W(m, x)`` and
        ``W(-m-1, x)`` are conjugate for real ``x < 0``.
    tol : float
        Relative step tolerance for Halley's iteration.

    Raises
    ------
    DomainError
        For ``z = 0`` on a nonprincipal branch (the value is -infinity).
    ConvergenceError
        If Halley's iteration fails to converge, typically very close to the
        branch point on a branch with ``|m| > 1``.
    """
    m = int(m)
    z = complex(z)
    if z.imag == 0:
        # a signed zero would select the wrong side of the cut
        z = complex(z.real, 0.0)
    if z == 0:
        if m == 0:
            return 0j
        raise DomainError("W(m, 0) is -infinity for m != 0")
    w = _halley(z, _lambert_initial(m, z), tol, maxiter)
    on_cut = z.imag == 0 and z.real < 0
    if not on_cut and lambert_w_branch_of(w, z) != m:
        # landed on a neighbouring sheet; restart from the pure asymptotic guess
        big_l = cmath.log(z) + 2j * math.pi * m
        w = _halley(z, big_l - cmath.log(big_l), tol, maxiter)
    if z.imag == 0 and w.imag != 0 and abs(w.imag) < 1e-14 * (1 + abs(w.real)):
        if (m == 0 and z.real >= -INV_E) or (m == -1 and -INV_E <= z.real < 0):
            w = complex(w.real)
    return w


def w_ln(z: complex) -> complex:
    """``W(-1, -ln(z)/z)``; equals ``-ln(z)`` for real ``z > e``."""
    z = complex(z)
    if z == 0:
        raise DomainError("w_ln is undefined at 0")
    return lambert_w(-1, -cmath.log(z) / z)


def w_ln_real_root() -> float:
    """Zero of ``Re(w_ln(x))`` on the positive axis.

    The root solves ``-ln(x)/x = 3 pi / 2``, i.e. ``x = W(3 pi / 2) / (3 pi / 2)``.
    """
    c = 1.5 * math.pi
    return lambert_w(0, c).real / c


# --- Lerch transcendent ----------------------------------------------------

def _lerch_terms(z: complex, a: complex, v: complex, start: int, count: int) -> np.ndarray:
    n = np.arange(start, start + count, dtype=float)
    return np.exp(n * cmath.log(z) - a * np.log(v + n + 0j))


def lerch_phi(z: complex, a: complex, v: complex, tol: float = 1e-12) -> complex:
    """Lerch transcendent ``sum_{n>=0} z^n / (v + n)^a``.

    Defined for ``|z| < 1``, or ``|z| = 1`` with ``Re(a) > 1``.  On the unit
    circle the tail beyond the direct sum is closed with the Euler transform
    ``sum_{n>=N} z^n f(n) = z^N/(1-z) sum_k (z/(1-z))^k Delta^k f(N)``.
    """
    z, a, v = complex(z), complex(a), complex(v)
    if _is_nonpositive_integer(v):
        raise PoleError("v must not be a nonpositive integer")
    if z == 0:
        return cmath.exp(-a * cmath.log(v))
    az = abs(z)
    if az > 1 or (az == 1 and a.real <= 1):
        raise DomainError("Lerch series diverges for these parameters")
    if az < 1:
        total = 0j
        start, chunk = 0, 256
        while True:
            terms = _lerch_terms(z, a, v, start, chunk)
            total += complex(np.sum(terms))
            start += chunk
            tail = abs(terms[-1]) * az / (1 - az)
            if tail <= tol * max(1.0, abs(total)) * 1e-2:
                return total
            if start > 10_000_000:
                raise ConvergenceError("Lerch series converging too slowly")
            chunk = min(chunk * 2, 1 << 16)
    if z == 1:
        return _em_hurwitz(a, v)
    n_direct = int(min(1_000_000, max(200, 200 / abs(1 - z))))
    head = complex(np.sum(_lerch_terms(z, a, v, 0, n_direct)))
    # forward differences of f(n) = (v+n)^{-a} at n = n_direct
    k_max = 16
    f = np.exp(-a * np.log(v + n_direct + np.arange(k_max + 1) + 0j))
    q = z / (1 - z)
    tail = 0j
    qk = 1.0 + 0j
    for k in range(k_max + 1):
        tail += qk * f[0]
        f = np.diff(f)
        qk *= q
    return head + cmath.exp(n_direct * cmath.log(z)) / (1 - z) * tail
