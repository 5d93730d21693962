"""The finite reflection function chi(N; s) and its residues.

chi(N; s) = zeta_w(N; 1-s) / zeta_w(N; s) is the truncated analogue of the
factor in the functional equation of zeta.  Residues are computed two ways:
from closed forms in the sums a(N), b(N), c(N), and from a trapezoid-rule
contour integral that serves as the arbiter whenever the two disagree.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, PoleError
from .specfun import (
    EULER_GAMMA,
    digamma,
    gamma_fn,
    polygamma,
    riemann_zeta,
    riemann_zeta_deriv,
)
from .transforms import _as_order, zeta_w_finite

__all__ = [
    "AbcSums",
    "LaurentCoefficient",
    "ResidueReport",
    "SignScan",
    "chi",
    "abc_sums",
    "laurent_coeff",
    "laurent_coefficient",
    "chi_residue_at_0",
    "chi_recip_residue_at_2",
    "chi_at_positive_integer",
    "chi_at_positive_integer_printed",
    "chi_quotient_limit_at_1",
    "residue_sign_scan",
    "nu",
    "nu_residue_at_negative",
    "nu_residue_at_negative_printed",
]

DEFAULT_RADIUS = 0.1
DEFAULT_SAMPLES = 256


def chi(N, s):
    """Finite reflection function zeta_w(N; 1-s) / zeta_w(N; s).

    Works elementwise on arrays.  It satisfies chi(N; 1-s) chi(N; s) = 1 and
    has modulus one on the critical line.

    Raises
    ------
    PoleError
        At s = 0 or s = 1, or wherever the denominator vanishes.
    """
    N = _as_order(N)
    scalar = np.ndim(s) == 0
    s_arr = np.atleast_1d(np.asarray(s, dtype=complex))
    if np.any((s_arr == 0) | (s_arr == 1)):
        raise PoleError("chi(N; s) is singular at s = 0 and s = 1")
    den = zeta_w_finite(N, s_arr)
    if np.any(den == 0):
        raise PoleError("zeta_w(N; s) vanishes in the denominator")
    val = zeta_w_finite(N, 1 - s_arr) / den
    return complex(val[0]) if scalar else val


@dataclass(frozen=True)
class AbcSums:
    N: int
    a: float
    b: float
    c: float


def abc_sums(N) -> AbcSums:
    """The sums a(N), b(N), c(N) that the residue closed forms are built from.

    a = sum n ln((n+1)/n)
    b = sum (n^2 ln n - n^2 ln(n+1) - ln n) / (n(n+1))
    c = 1/2 sum n (ln(n+1)^2 - ln(n)^2)
    """
    N = _as_order(N)
    n = np.arange(1, N + 1, dtype=float)
    ln_n = np.log(n)
    ln_ratio = np.log1p(1.0 / n)
    a = np.sum(n * ln_ratio)
    b = np.sum((-n * n * ln_ratio - ln_n) / (n * (n + 1)))
    # ln(n+1)^2 - ln(n)^2 = ln_ratio * (ln(n+1) + ln n)
    c = 0.5 * np.sum(n * ln_ratio * (2 * ln_n + ln_ratio))
    return AbcSums(N, float(a), float(b), float(c))


@dataclass(frozen=True)
class LaurentCoefficient:
    order: int
    value: complex
    center: complex
    radius: float


def laurent_coeff(
    f: Callable,
    center: complex,
    order: int,
    radius: float = DEFAULT_RADIUS,
    samples: int = DEFAULT_SAMPLES,
) -> complex:
    """Laurent coefficient of ``(s - center)^order`` by the trapezoid rule.

    ``f`` is called once on the array of contour points.  For f analytic in
    an annulus around the circle, the error decays geometrically in
    ``samples``.

    Raises
    ------
    DomainError
        If ``samples`` is not a power of two >= 64 or ``radius <= 0``.
    ArithmeticError
        If ``f`` returns a non-finite value on the contour.
    """
    if samples < 64 or samples & (samples - 1):
        raise DomainError("samples must be a power of two >= 64")
    if not radius > 0:
        raise DomainError("radius must be positive")
    theta = 2 * np.pi * np.arange(samples) / samples
    e = np.exp(1j * theta)
    vals = np.asarray(f(center + radius * e), dtype=complex)
    if not np.all(np.isfinite(vals)):
        raise ArithmeticError("non-finite sample on the contour")
    return complex(np.mean(vals * e ** (-order)) * radius ** (-order))


def laurent_coefficient(f, center, order, radius=DEFAULT_RADIUS, samples=DEFAULT_SAMPLES) -> LaurentCoefficient:
    """:func:`laurent_coeff` wrapped with its contour metadata."""
    value = laurent_coeff(f, center, order, radius, samples)
    return LaurentCoefficient(order, value, complex(center), radius)


@dataclass(frozen=True)
class ResidueReport:
    """Closed-form and contour values of a residue, plus the Laurent context."""

    N: int
    closed: float
    contour: float
    laurent: dict  # order -> coefficient, orders -2..0

    @property
    def difference(self) -> float:
        return abs(self.closed - self.contour)


def _residue_at_0_closed(N: int) -> float:
    s = abc_sums(N)
    lg = math.lgamma(N + 1)
    num = (
        1
        + EULER_GAMMA
        + digamma(N + 2)
        - 2 / (N + 1)
        + s.b
        - N * (lg - s.c) / ((N - s.a) * (N + 1))
    )
    return num / (s.a - N)


def chi_residue_at_0(N, radius: float = DEFAULT_RADIUS, samples: int = DEFAULT_SAMPLES) -> ResidueReport:
    """Residue of chi(N; s) at s = 0, in closed form and by contour.

    The pole at 0 is double: zeta_w(N; 1-s) has a simple pole there while
    zeta_w(N; s) has a simple zero.  The residue is the order -1 coefficient,
    and orders -2, -1, 0 are all reported.
    """
    N = _as_order(N)
    f = lambda s: chi(N, s)  # noqa: E731
    laurent = {k: laurent_coeff(f, 0, k, radius, samples) for k in (-2, -1, 0)}
    return ResidueReport(N, _residue_at_0_closed(N), laurent[-1].real, laurent)


def _recip_residue_at_2_closed(N: int) -> float:
    n = np.arange(1, N + 1, dtype=float)
    ln_n, ln_n1 = np.log(n), np.log(n + 1)
    num = 2 * N / (N + 1) ** 2 - 2 * polygamma(1, N + 1) + 2 * riemann_zeta(2).real
    den = (N + 1) ** 2 / 2 - N / 2 - 0.5 - np.sum(n * (ln_n1 + n * ln_n1 - ln_n - n * ln_n))
    return float(num / den)


def chi_recip_residue_at_2(N, radius: float = DEFAULT_RADIUS, samples: int = DEFAULT_SAMPLES) -> ResidueReport:
    """Residue of 1/chi(N; s) at s = 2, where zeta_w(N; -1) = 0 makes a pole.

    The closed form involves trigamma at N+1 and zeta(2); it decays like 1/N.
    """
    N = _as_order(N)
    f = lambda s: 1 / chi(N, s)  # noqa: E731
    laurent = {k: laurent_coeff(f, 2, k, radius, samples) for k in (-2, -1, 0)}
    return ResidueReport(N, _recip_residue_at_2_closed(N), laurent[-1].real, laurent)


def _chi_integer_parts(N: int, n: int) -> tuple[float, float]:
    m = np.arange(1, N + 1, dtype=float)
    num = np.sum(((n - 1) * m ** (n - 1) + m**n - (m + 1) ** (n - 1) * m) / n)
    sign = 1 if n % 2 == 0 else -1
    den = N / ((n - 1) * (N + 1) ** n) - sign * polygamma(n - 1, N + 1) / gamma_fn(n).real + riemann_zeta(n).real
    return float(num), float(den)


def _check_integer_arg(n) -> int:
    if int(n) != n or n < 2:
        raise DomainError("n must be an integer >= 2")
    return int(n)


def chi_at_positive_integer(N, n: int) -> float:
    """chi(N; n) for integer n >= 2 as a ratio of a power sum and polygammas.

    The numerator is zeta_w(N; 1-n) written as
    sum_m ((n-1) m^(n-1) + m^n - (m+1)^(n-1) m)/n, and the denominator is the
    polygamma form of zeta_w(N; n).  It vanishes at n = 2.
    """
    N = _as_order(N)
    n = _check_integer_arg(n)
    num, den = _chi_integer_parts(N, n)
    return num / den


def chi_at_positive_integer_printed(N, n: int) -> float:
    """The same ratio with a leading minus on the numerator.

    This variant has the opposite sign to chi(N; n) for every n >= 3 and is
    kept only so the sign discrepancy can be reported.
    """
    N = _as_order(N)
    n = _check_integer_arg(n)
    num, den = _chi_integer_parts(N, n)
    return -num / den


def chi_quotient_limit_at_1(N) -> float:
    """lim_{s -> 1} chi(N+1; s)/chi(N; s) = (N+2) N (N+1-a(N+1)) / ((N+1)^2 (N-a(N)))."""
    N = _as_order(N)
    a_n, a_n1 = abc_sums(N).a, abc_sums(N + 1).a
    return (N + 2) * N * (N + 1 - a_n1) / ((N + 1) ** 2 * (N - a_n))


@dataclass(frozen=True)
class SignScan:
    rows: list  # (N, contour residue) in increasing N
    sign_change: tuple | None  # first (N, N+1) with a sign change

    @property
    def monotone_increasing(self) -> bool:
        vals = [r for _, r in self.rows]
        return all(b > a for a, b in zip(vals, vals[1:]))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ZETASAW_THREADS", "1")))
    except ValueError:
        return 1


def residue_sign_scan(N_min: int, N_max: int, radius: float = DEFAULT_RADIUS, samples: int = DEFAULT_SAMPLES) -> SignScan:
    """Contour residues of chi(N; .) at 0 for N_min..N_max and the first sign flip.

    Work is spread over ``ZETASAW_THREADS`` threads; output order is by N.
    """
    if N_min < 1 or N_max < N_min:
        raise DomainError("need 1 <= N_min <= N_max")

    def one(N):
        return laurent_coeff(lambda s: chi(N, s), 0, -1, radius, samples).real

    Ns = list(range(N_min, N_max + 1))
    workers = _threads()
    if workers == 1:
        values = [one(N) for N in Ns]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(one, Ns))
    rows = list(zip(Ns, values))
    change = None
    for (n0, r0), (n1, r1) in zip(rows, rows[1:]):
        if (r0 < 0) != (r1 < 0):
            change = (n0, n1)
            break
    return SignScan(rows, change)


def nu(s: complex) -> complex:
    """Classical reflection ratio zeta(1-s)/zeta(s)."""
    s = complex(s)
    if s == 1 or s == 0:
        raise PoleError("nu is singular at s = 0 and s = 1")
    den = riemann_zeta(s)
    if den == 0:
        raise PoleError(f"zeta vanishes at s = {s!r}")
    return riemann_zeta(1 - s) / den


def nu_residue_at_negative(n: int) -> float:
    """Residue of nu at s = -n: zeta(1+n)/zeta'(-n) for even n, 0 for odd n.

    Only even n >= 2 sit on zeros of the denominator; at odd n the function
    is regular.  zeta' is taken by a central difference.
    """
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    n = int(n)
    if n % 2:
        return 0.0
    return (riemann_zeta(1 + n) / riemann_zeta_deriv(-n)).real


def nu_residue_at_negative_printed(n: int) -> float:
    """zeta(1-n)/zeta'(-n) for even n, 0 for odd n.

    Differs from the true residue :func:`nu_residue_at_negative`; retained to
    report the discrepancy.
    """
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    n = int(n)
    if n % 2:
        return 0.0
    return (riemann_zeta(1 - n) / riemann_zeta_deriv(-n)).real
