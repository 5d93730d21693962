"""Mellin and Laplace transforms of the map components and the finite zetas.

The central object is the truncated continuation

    zeta_w(N; s) = 1/(s-1) * sum_{n=1}^{N} [n (n+1)^{-s} - n^{1-s} + s n^{-s}],

which is tau(s) = s(s+1)/(s-1) times the Mellin transform of the first N
branches of the sawtooth map, and tends to zeta(s) as N grows.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, PoleError
from .specfun import gamma_fn, polygamma, riemann_zeta

__all__ = [
    "FiniteZeta",
    "tau",
    "tau_inverse",
    "tau_inverse_series_coeff",
    "schroder_numbers",
    "mellin_w_component",
    "mellin_h_component",
    "mellin_indicator",
    "laplace_w_component",
    "laplace_indicator",
    "laplace_of_sM",
    "laplace_of_sM_residues",
    "zeta_w_finite",
    "zeta_w_finite_closed",
    "zeta_h_finite",
    "residue_zeta_w_at_1",
    "tau_mellin_series",
    "gamma_from_w_series",
]

# |s - s0| below which removable singularities use a first-order Taylor step
GUARD = 1e-5


def tau(s: complex) -> complex:
    """Scaling factor s(s+1)/(s-1)."""
    s = complex(s)
    if s == 1:
        raise PoleError("tau has a pole at s = 1")
    return s * (s + 1) / (s - 1)


def tau_inverse(t: complex, sign: str = "+") -> complex:
    """Inverse branches t/2 - 1/2 +- sqrt(1 - 6t + t^2)/2 (principal root)."""
    if sign not in ("+", "-"):
        raise DomainError("sign must be '+' or '-'")
    t = complex(t)
    root = cmath.sqrt(1 - 6 * t + t * t)
    return t / 2 - 0.5 + (root if sign == "+" else -root) / 2


@lru_cache(maxsize=8)
def _tau_inverse_coeffs(sign: str, count: int) -> tuple[Fraction, ...]:
    # y^2 + (1 - t) y + t = 0, solved order by order in t
    c0 = Fraction(0) if sign == "+" else Fraction(-1)
    c = [c0]
    for n in range(1, count):
        conv = sum((c[i] * c[n - i] for i in range(1, n)), Fraction(0))
        rhs = c[n - 1] - (1 if n == 1 else 0) - conv
        c.append(rhs / (2 * c0 + 1))
    return tuple(c)


def tau_inverse_series_coeff(n: int, sign: str = "+") -> Fraction:
    """Exact n-th Maclaurin coefficient of the inverse branch of tau.

    The coefficients come from the quadratic y^2 + (1 - t) y + t = 0 that
    ``tau(y) = t`` reduces to, so no floating differentiation is involved.
    """
    if sign not in ("+", "-"):
        raise DomainError("sign must be '+' or '-'")
    if n < 0:
        raise DomainError("n must be >= 0")
    return _tau_inverse_coeffs(sign, n + 1)[n]


def schroder_numbers(k: int) -> list[int]:
    """S_0 .. S_k, read off the '+' branch coefficients (S_0 = 1, S_n = -c_n)."""
    if k < 0:
        raise DomainError("k must be >= 0")
    coeffs = _tau_inverse_coeffs("+", k + 1)
    out = [1]
    for n in range(1, k + 1):
        v = -coeffs[n]
        assert v.denominator == 1
        out.append(int(v))
    return out


# --- Mellin transforms -----------------------------------------------------

def _mellin_w_deriv(n: int, s0: int) -> float:
    """d/ds M[w_n](s) at s0 in {0, -1}, from the integral of w_n(x) ln(x) x^(s-1)."""
    a, b = 1.0 / (n + 1), 1.0 / n
    la, lb = math.log(a), math.log(b)
    if s0 == 0:
        xlogx = (b * lb - b) - (a * la - a)
        return n * (n + 1) * xlogx - n * (lb * lb - la * la) / 2
    half_sq = (lb * lb - la * la) / 2
    inv_term = (lb + 1) / b - (la + 1) / a
    return n * (n + 1) * half_sq + n * inv_term


def _mellin_w_at(n: int, s0: int) -> float:
    ln_ratio = math.log1p(1.0 / n)
    if s0 == 0:
        return 1 - n * ln_ratio
    return (n * n + n) * ln_ratio - n


def mellin_w_component(n: int, s: complex) -> complex:
    """Mellin transform of the n-th sawtooth branch, int w_n(x) x^(s-1) dx.

    The closed form -(n^(1-s) - n(n+1)^(-s) - s n^(-s))/(s^2+s) has removable
    singularities at s = 0 and s = -1 whose values are
    ``1 - n ln((n+1)/n)`` and ``(n^2 + n) ln((n+1)/n) - n``.  The s = 0 factor
    is evaluated through expm1 so no cancellation occurs there; within
    ``GUARD`` of s = -1 a first-order Taylor step is used.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    s = complex(s)
    if s == 0:
        return complex(_mellin_w_at(n, 0))
    if abs(s + 1) < GUARD:
        return _mellin_w_at(n, -1) + (s + 1) * _mellin_w_deriv(n, -1)
    ln_ratio = math.log1p(1.0 / n)
    e = cmath.exp(-s * math.log(n))
    ratio = np.expm1(-s * ln_ratio) / s
    return complex(e * (1 + n * ratio) / (1 + s))


def mellin_h_component(n: int, s: complex) -> complex:
    """Mellin transform of the n-th Gauss map branch (1 - n x)/x on I_n.

    The removable points s = 0 and s = 1 return their limits
    ``1 - n ln((n+1)/n)`` and ``ln((n+1)/n) - 1/(n+1)``.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    s = complex(s)
    ln_ratio = math.log1p(1.0 / n)
    if s == 0:
        return complex(1 - n * ln_ratio)
    if s == 1:
        return complex(ln_ratio - 1.0 / (n + 1))
    # int x^(s-2) - n int x^(s-1), each written with expm1 so neither
    # piece cancels catastrophically near s = 0 or s = 1
    i_low = n ** (1 - s) * np.expm1((1 - s) * ln_ratio) / (1 - s)
    i_high = -(n ** -s) * np.expm1(-s * ln_ratio) / s
    return complex(i_low - n * i_high)


def mellin_indicator(n: int, s: complex) -> complex:
    """Mellin transform (n^-s - (n+1)^-s)/s of the harmonic interval indicator."""
    if n < 1:
        raise DomainError("n must be >= 1")
    s = complex(s)
    ln_ratio = math.log1p(1.0 / n)
    if s == 0:
        return complex(ln_ratio)
    return complex(-cmath.exp(-s * math.log(n)) * np.expm1(-s * ln_ratio) / s)


# --- Laplace transforms ----------------------------------------------------

def _laplace_w_series(n: int, s: complex, terms: int = 40) -> complex:
    # sum_k (-s)^k/k! * int_{1/(n+1)}^{1/n} w_n(x) x^k dx
    a, b = Fraction(1, n + 1), Fraction(1, n)
    total = 0j
    fac = 1.0 + 0j
    for k in range(terms):
        moment = n * ((n + 1) * (b ** (k + 2) - a ** (k + 2)) / (k + 2) - (b ** (k + 1) - a ** (k + 1)) / (k + 1))
        total += fac * float(moment)
        fac *= -s / (k + 1)
    return total


def laplace_w_component(n: int, s: complex) -> complex:
    """Laplace transform of the n-th sawtooth branch, int w_n(x) e^(-s x) dx.

    Closed form (n(n+1) e^(-s/(n+1)) - (n^2+n+s) e^(-s/n)) / s^2; for |s| < 1
    the moment series is used instead, which has the value 1/(2n(n+1)) at 0.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    s = complex(s)
    if abs(s) < 1:
        return _laplace_w_series(n, s)
    nn = n * (n + 1)
    return (nn * cmath.exp(-s / (n + 1)) - (nn + s) * cmath.exp(-s / n)) / (s * s)


def laplace_indicator(a: float, b: float, s: complex) -> complex:
    """Laplace transform of the indicator of (a, b); value b - a at s = 0."""
    s = complex(s)
    if s == 0:
        return complex(b - a)
    return -cmath.exp(-a * s) * np.expm1(-(b - a) * s) / s


def laplace_of_sM(n: int, t: complex) -> complex:
    """Laplace transform in s of (s-1) M[w_n](s) = n(n+1)^-s + s n^-s - n^(1-s).

    Equal to n/(ln(n+1)+t) + 1/(ln n + t)^2 - n/(ln n + t), written over the
    common denominator (ln n + t)^2 (ln(n+1) + t).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    t = complex(t)
    l0, l1 = math.log(n), math.log(n + 1)
    if t == -l0 or t == -l1:
        raise PoleError(f"pole at t = {t.real!r}")
    num = t + n * (l0 - l1) * t + l1 + n * l0 * l0 - n * l0 * l1
    return num / ((l0 + t) ** 2 * (l1 + t))


def laplace_of_sM_residues(n: int) -> dict[float, int]:
    """Residues {-ln n: -n, -ln(n+1): n} of :func:`laplace_of_sM`."""
    return {-math.log(n): -n, -math.log(n + 1): n}


# --- finite zeta approximations --------------------------------------------

@dataclass(frozen=True)
class FiniteZeta:
    """Truncation order N for zeta_w(N; s) and the reflection machinery."""

    N: int

    def __post_init__(self):
        if self.N < 1:
            raise DomainError("N must be >= 1")

    def __call__(self, s):
        return zeta_w_finite(self.N, s)

    def residue_at_1(self) -> Fraction:
        return residue_zeta_w_at_1(self.N)


def _as_order(N) -> int:
    N = N.N if isinstance(N, FiniteZeta) else int(N)
    if N < 1:
        raise DomainError("N must be >= 1")
    return N


def _zeta_w_sum(N: int, s: np.ndarray) -> np.ndarray:
    """sum_{n<=N} [n^{1-s} expm1(-s ln(1+1/n)) + s n^{-s}] for an array of s."""
    out = np.zeros(s.shape, dtype=complex)
    chunk = max(1, 2_000_000 // max(1, s.size))
    for start in range(1, N + 1, chunk):
        n = np.arange(start, min(N, start + chunk - 1) + 1, dtype=float)
        ln_n = np.log(n)
        ln_ratio = np.log1p(1.0 / n)
        ss = s[..., None]
        npow = np.exp(-ss * ln_n)
        out += np.sum(npow * (n * np.expm1(-ss * ln_ratio) + ss), axis=-1)
    return out


def zeta_w_finite(N, s):
    """zeta_w(N; s), the N-branch sawtooth approximation of zeta(s).

    Accepts a scalar or an array of complex ``s``.  The stated roots s = 0 and
    s = -1 are returned as exact zeros.

    Raises
    ------
    PoleError
        At s = 1, where the residue is N/(N+1).
    """
    N = _as_order(N)
    scalar = np.ndim(s) == 0
    s_arr = np.atleast_1d(np.asarray(s, dtype=complex))
    if np.any(s_arr == 1):
        raise PoleError("zeta_w(N; s) has a pole at s = 1")
    val = _zeta_w_sum(N, s_arr) / (s_arr - 1)
    val[(s_arr == 0) | (s_arr == -1)] = 0
    return complex(val[0]) if scalar else val


def zeta_w_finite_closed(N, k: int) -> float:
    """Polygamma closed form of zeta_w(N; k) at an integer k >= 2.

    N/((k-1)(N+1)^k) - cos(pi k) Psi(k-1, N+1)/Gamma(k) + zeta(k).
    """
    N = _as_order(N)
    if int(k) != k or k < 2:
        raise DomainError("closed form holds for integer k >= 2")
    k = int(k)
    sign = 1 if k % 2 == 0 else -1
    return (
        N / ((k - 1) * (N + 1) ** k)
        - sign * polygamma(k - 1, N + 1) / gamma_fn(k).real
        + riemann_zeta(k).real
    )


def zeta_h_finite(N: int, s):
    """Gauss-map continuation s/(s-1) - 1/(s-1) sum [n^(1-s) - n(n+1)^-s - s(n+1)^-s]."""
    N = _as_order(N)
    scalar = np.ndim(s) == 0
    s_arr = np.atleast_1d(np.asarray(s, dtype=complex))
    if np.any(s_arr == 1):
        raise PoleError("zeta_h(N; s) has a pole at s = 1")
    out = np.zeros(s_arr.shape, dtype=complex)
    chunk = max(1, 2_000_000 // s_arr.size)
    ss = s_arr[..., None]
    for start in range(1, N + 1, chunk):
        n = np.arange(start, min(N, start + chunk - 1) + 1, dtype=float)
        np1 = np.exp(-ss * np.log(n + 1))
        # n^{1-s} - n (n+1)^{-s} = n^{1-s} (1 - exp(-s ln(1+1/n)))
        head = -np.exp((1 - ss) * np.log(n)) * np.expm1(-ss * np.log1p(1.0 / n))
        out += np.sum(head - ss * np1, axis=-1)
    val = s_arr / (s_arr - 1) - out / (s_arr - 1)
    return complex(val[0]) if scalar else val


def residue_zeta_w_at_1(N) -> Fraction:
    """Exact residue sum_{n<=N} 1/(n^2+n) = N/(N+1) of zeta_w(N; s) at s = 1."""
    N = _as_order(N)
    return Fraction(N, N + 1)


def tau_mellin_series(t: complex, K: int = 40) -> complex:
    """Laurent series sum_{n=1}^{K} 4 zeta(2n-2) t^(2n-3); tends to -2 pi cot(pi t)."""
    t = complex(t)
    if not 0 < abs(t) < 1:
        raise DomainError("series requires 0 < |t| < 1")
    total = 0j
    for n in range(1, K + 1):
        total += 4 * riemann_zeta(2 * n - 2) * t ** (2 * n - 3)
    return total


def gamma_from_w_series(N: int) -> float:
    """sum_{n<=N} M[w_n](0)/n = sum (1/n - ln(1 + 1/n)), which converges to gamma.

    The tail is about 1/(2N).
    """
    if N < 1:
        raise DomainError("N must be >= 1")
    n = np.arange(1, N + 1, dtype=float)
    terms = 1.0 / n - np.log1p(1.0 / n)
    return float(np.sum(terms[::-1]))
