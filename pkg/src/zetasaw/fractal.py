"""The fractal string cut out by the sawtooth map.

Its lengths are l_n = 1/(2n(n+1)), the areas of the triangles under the
branches of w.  The string has Minkowski dimension 1/2 and content 2, and its
geometric zeta function reduces at integers to rationals plus even zeta
values.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError
from .specfun import hurwitz_zeta, riemann_zeta

__all__ = [
    "MINKOWSKI_DIMENSION",
    "MINKOWSKI_CONSTANT",
    "MINKOWSKI_CONTENT",
    "FractalString",
    "TubeReport",
    "ZetaCombination",
    "GeometricZetaParts",
    "string_length",
    "string_interval",
    "total_length",
    "partial_length",
    "tail_length",
    "geometric_counting",
    "pythagorean_count",
    "v_of_epsilon",
    "tube_volume",
    "minkowski_content_estimate",
    "minkowski_content_formula",
    "geometric_zeta",
    "geometric_zeta_parts",
    "geometric_zeta_residue",
    "geometric_zeta_integer",
    "geometric_zeta_integer_printed",
    "spectral_counting",
    "spectral_zeta",
    "partition_function",
    "dynamical_zeta",
    "dynamical_zeta_analytic",
]

MINKOWSKI_DIMENSION = Fraction(1, 2)
MINKOWSKI_CONSTANT = math.sqrt(2) / 2
MINKOWSKI_CONTENT = 2


def _check_index(n) -> int:
    if int(n) != n or n < 1:
        raise DomainError("index must be a positive integer")
    return int(n)


def string_length(n: int) -> Fraction:
    """l_n = 1/(2n(n+1)), the integral of w_n over its harmonic interval."""
    n = _check_index(n)
    return Fraction(1, 2 * n * (n + 1))


def string_interval(n: int) -> tuple[Fraction, Fraction]:
    """Open interval ((4n+1)/(4n(n+1)), (4n+3)/(4n(n+1))) of length l_n.

    It is centred on the midpoint (2n+1)/(2n(n+1)) of the harmonic interval.
    """
    n = _check_index(n)
    d = 4 * n * (n + 1)
    return Fraction(4 * n + 1, d), Fraction(4 * n + 3, d)


def total_length() -> Fraction:
    return Fraction(1, 2)


def partial_length(N: int) -> Fraction:
    """sum_{n<=N} l_n = 1/2 - 1/(2(N+1)) by telescoping."""
    if N < 0:
        raise DomainError("N must be >= 0")
    return Fraction(1, 2) - Fraction(1, 2 * (N + 1))


def tail_length(m: int) -> Fraction:
    """sum_{n>=m} l_n = 1/(2m)."""
    m = _check_index(m)
    return Fraction(1, 2 * m)


@dataclass(frozen=True)
class FractalString:
    """Lazy view of the lengths l_n; supports ``s[n]`` and iteration."""

    def length_at(self, n: int) -> Fraction:
        return string_length(n)

    def __getitem__(self, n: int) -> Fraction:
        return string_length(n)

    def __iter__(self):
        n = 1
        while True:
            yield string_length(n)
            n += 1

    @property
    def total(self) -> Fraction:
        return total_length()


def geometric_counting(x) -> int:
    """Number of lengths with reciprocal at most x, i.e. #{n >= 1 : 2n(n+1) <= x}.

    Same as floor(sqrt(2x+1)/2 - 1/2), evaluated with an integer square root
    so that boundary points x = 2n(n+1) are counted exactly.
    """
    if x < 0:
        raise DomainError("x must be >= 0")
    X = math.floor(x)
    return (math.isqrt(2 * X + 1) - 1) // 2


def pythagorean_count(x: int) -> int:
    """Brute-force count of triples (a, b, b+1) with a^2 + b^2 = (b+1)^2, b+1 <= x."""
    if x < 1:
        raise DomainError("x must be >= 1")
    count = 0
    for b in range(1, int(x)):
        a2 = 2 * b + 1
        a = math.isqrt(a2)
        if a * a == a2:
            count += 1
    return count


def v_of_epsilon(eps) -> int:
    """Index of the first length below 2 eps, min{j : l_j < 2 eps}.

    Equals floor((eps + sqrt(eps^2 + eps)) / (2 eps)); the float candidate is
    corrected against the exact test ``4 eps j (j+1) > 1``.
    """
    if not eps > 0:
        raise DomainError("eps must be positive")
    e = Fraction(eps)
    j = max(1, math.floor((eps + math.sqrt(eps * eps + eps)) / (2 * eps)))
    while j > 1 and 4 * e * (j - 1) * j > 1:
        j -= 1
    while not 4 * e * j * (j + 1) > 1:
        j += 1
    return j


@dataclass(frozen=True)
class TubeReport:
    """Inner tube volume V(eps) of the string.

    ``volume`` is exact (a Fraction) when eps is rational, including floats,
    which are converted exactly.  ``counting_volume`` is the same quantity
    from 2 eps N(1/(2 eps)) + 1/(2v).
    """

    epsilon: float
    v: int
    volume: Fraction
    counting_volume: Fraction

    @property
    def scaled(self) -> float:
        """V(eps)/sqrt(eps), the Minkowski content estimate."""
        return math.sqrt(self.scaled_squared)

    @property
    def scaled_squared(self) -> Fraction:
        return self.volume * self.volume / Fraction(self.epsilon)


def tube_volume(eps) -> TubeReport:
    """V(eps) = (4 eps v^2 - 4 eps v + 1)/(2v) with v = v_of_epsilon(eps)."""
    v = v_of_epsilon(eps)
    e = Fraction(eps)
    vol = (4 * e * v * v - 4 * e * v + 1) / (2 * v)
    counting = 2 * e * geometric_counting(1 / (2 * e)) + Fraction(1, 2 * v)
    return TubeReport(eps, v, vol, counting)


def minkowski_content_estimate(eps) -> float:
    """V(eps)/sqrt(eps); tends to the content 2 with error O(sqrt eps)."""
    return tube_volume(eps).scaled


def minkowski_content_formula(C: float = MINKOWSKI_CONSTANT, D: float = float(MINKOWSKI_DIMENSION)) -> float:
    """Content C 2^(1-D)/(1-D) of a string whose counting function is ~ C x^D."""
    return C * 2 ** (1 - D) / (1 - D)


# --- geometric zeta --------------------------------------------------------

@dataclass(frozen=True)
class GeometricZetaParts:
    partial: complex
    tail: complex
    tail_bound: float  # integral estimate of |tail|

    @property
    def value(self) -> complex:
        return self.partial + self.tail


def _tail(s: complex, T: int) -> complex:
    # sum_{n>T} (2n(n+1))^-s with 2n(n+1) = 2 (n+1/2)^2 (1 - 1/(4(n+1/2)^2)):
    # binomial series in 1/(4(n+1/2)^2), each power summed as a Hurwitz zeta
    total = 0j
    coef = 1 + 0j
    a = T + 1.5
    for k in range(200):
        arg = 2 * s + 2 * k
        if arg == 1:
            raise PoleError("geometric zeta has a pole at s = 1/2 - k")
        term = coef * hurwitz_zeta(arg, a)
        total += term
        if abs(term) <= 1e-17 * abs(total):
            return 2 ** (-s) * total
        coef *= (s + k) / (k + 1) / 4
    raise ConvergenceError("tail expansion did not converge")


def geometric_zeta_parts(s: complex, terms: int = 1000) -> GeometricZetaParts:
    """Partial sum of sum (2n(n+1))^-s plus the exact tail beyond ``terms``."""
    if terms < 1:
        raise DomainError("terms must be >= 1")
    s = complex(s)
    if s.real <= 0.5:
        warnings.warn(
            "Dirichlet series diverges for Re(s) <= 1/2; returning the continuation",
            RuntimeWarning,
            stacklevel=3,
        )
    n = np.arange(1, terms + 1, dtype=float)
    partial = complex(np.sum(np.exp(-s * np.log(2 * n * (n + 1)))[::-1]))
    tail = _tail(s, terms)
    U = terms + 0.5
    sr = 2 * s.real - 1
    bound = abs(2 ** (-s)) * U ** (-sr) / sr if sr > 0 else math.inf
    return GeometricZetaParts(partial, tail, bound)


def geometric_zeta(s: complex, terms: int = 1000) -> complex:
    """Geometric zeta function sum_n l_n^s = sum_n (2n(n+1))^-s.

    Converges for Re(s) > 1/2; elsewhere the tail expansion supplies the
    meromorphic continuation (poles at s = 1/2, -1/2, ...) and a
    RuntimeWarning is issued.  s = 1 returns the telescoped value 1/2.
    """
    if complex(s) == 1:
        return 0.5 + 0j
    return geometric_zeta_parts(s, terms).value


def geometric_zeta_residue() -> float:
    """Residue sqrt(2)/4 of the geometric zeta at its pole s = D = 1/2."""
    return math.sqrt(2) / 4


@dataclass(frozen=True)
class ZetaCombination:
    """``rational + sum coef * zeta(arg)`` with exact coefficients."""

    rational: Fraction
    terms: list = field(default_factory=list)  # (Fraction coefficient, zeta argument)

    def value(self) -> float:
        total = float(self.rational)
        for c, arg in self.terms:
            if arg == 1:
                raise PoleError("zeta(1) in combination")
            total += float(c) * riemann_zeta(float(arg)).real
        return total

    def __str__(self) -> str:
        def frac(q: Fraction) -> str:
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        parts = [("-" if self.rational < 0 else "") + frac(abs(self.rational))]
        for c, arg in self.terms:
            sign = " - " if c < 0 else " + "
            parts.append(f"{sign}{frac(abs(c))}*zeta({arg})")
        return "".join(parts)


def geometric_zeta_integer(n: int) -> ZetaCombination:
    """Exact value of the geometric zeta function at a positive integer n.

    Partial fractions of (2k(k+1))^-n in k and k+1 give
    (-1)^(n-1) C(2n-1, n-1)/2^n + sum_{j even, 2<=j<=n} 2 (-1)^n C(2n-j-1, n-1) zeta(j)/2^n.
    """
    n = _check_index(n)
    rational = Fraction((-1) ** (n - 1) * comb(2 * n - 1, n - 1), 2**n)
    terms = [
        (Fraction(2 * (-1) ** n * comb(2 * n - j - 1, n - 1), 2**n), j)
        for j in range(2, n + 1, 2)
    ]
    return ZetaCombination(rational, terms)


def _gen_binom(x: Fraction, k: int) -> Fraction:
    # x (x-1) ... (x-k+1) / k!, agreeing with the Gamma form for these x
    r = Fraction(1)
    for i in range(k):
        r *= x - i
    return r / math.factorial(k)


@dataclass(frozen=True)
class PrintedForm:
    """Literal evaluation of the printed index window and summand."""

    combination: ZetaCombination
    window: tuple  # (a_n, b_n)
    window_is_integer: bool


def geometric_zeta_integer_printed(n: int) -> PrintedForm:
    """The closed form with parameters a_n, b_n, c_n, d_n taken as printed.

    a_n = (n-1)(1-(-1)^(n+1))/2, b_n = (-1)^(n+1)(n-1)/2 + n - 7/4 + (-1)^n/4,
    c_n = (-1)^n (n-1), d_n = (-1)^n/2, rational part (-1)^n C(2n-1, n-1)/2^n
    and summand 2(-1)^n C(2m + c_n - d_n + 1/2, n-1) zeta(d_n + 2n - 3/2 - 2m - c_n)/2^n.
    It does not reproduce the direct series; see :func:`geometric_zeta_integer`.
    """
    n = _check_index(n)
    sg = (-1) ** n
    a = Fraction((n - 1) * (1 - (-1) ** (n + 1)), 2)
    b = Fraction(-sg * (n - 1), 2) + n - Fraction(7, 4) + Fraction(sg, 4)
    c = sg * (n - 1)
    d = Fraction(sg, 2)
    rational = Fraction(sg * comb(2 * n - 1, n - 1), 2**n)
    ok = a.denominator == 1 and b.denominator == 1
    terms = []
    if ok:
        m = a
        while m <= b:
            coef = 2 * sg * _gen_binom(2 * m + c - d + Fraction(1, 2), n - 1) / 2**n
            arg = d + 2 * n - Fraction(3, 2) - 2 * m - c
            terms.append((coef, int(arg) if arg.denominator == 1 else arg))
            m += 1
    return PrintedForm(ZetaCombination(rational, terms), (a, b), ok)


# --- spectral side ---------------------------------------------------------

def spectral_counting(x, terms: int = 1) -> int:
    """Frequency counting function sum_j floor(x l_j).

    The sum is extended past ``terms`` until a term floors to zero, after
    which all later terms vanish too.
    """
    if x < 0:
        raise DomainError("x must be >= 0")
    X = Fraction(x)
    total = 0
    j = 1
    while True:
        t = math.floor(X * string_length(j))
        if t == 0 and j >= terms:
            return total
        total += t
        j += 1


def spectral_zeta(s: complex, terms: int = 1000) -> complex:
    """zeta(s) times the geometric zeta function; needs Re(s) > 1."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError("spectral zeta requires Re(s) > 1")
    return riemann_zeta(s) * geometric_zeta(s, terms)


def partition_function(s: complex, terms: int = 1000) -> complex:
    """Euler product prod_j 1/(1 - l_j^s), accumulated as a sum of logs.

    Factors past ``terms`` enter through sum_r (1/r) sum_{j>terms} l_j^(rs),
    whose inner sums are geometric-zeta tails.
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError("partition function requires Re(s) > 0")
    if terms < 1:
        raise DomainError("terms must be >= 1")
    j = np.arange(1, terms + 1, dtype=float)
    ls = np.exp(-s * np.log(2 * j * (j + 1)))
    if np.any(np.abs(ls) >= 1):
        raise DomainError("a factor 1 - l_j^s vanishes or the product diverges")
    log_p = -np.sum(np.log1p(-ls)[::-1])
    if s.real > 0.5:
        first = 1 / (2 * (terms + 1) * (terms + 2))  # largest omitted length
        r = 1
        while True:
            t = _tail(r * s, terms) / r
            log_p += t
            if abs(t) <= 1e-17 * max(1.0, abs(log_p)) or first ** (r * s.real) < 1e-300:
                break
            r += 1
            if r > 200:
                raise ConvergenceError("tail of the Euler product did not converge")
    else:
        warnings.warn("product tail omitted for Re(s) <= 1/2", RuntimeWarning, stacklevel=2)
    return cmath.exp(complex(log_p))


def dynamical_zeta(s: float, terms: int = 1000, h: float = 1e-5) -> float:
    """-(d/ds) ln zeta_L(s) by a central difference of step h."""
    up = geometric_zeta(s + h, terms)
    down = geometric_zeta(s - h, terms)
    return (-(cmath.log(up) - cmath.log(down)) / (2 * h)).real


def dynamical_zeta_analytic(s: float, terms: int = 100_000) -> float:
    """sum l^s ln(1/l) / sum l^s from the termwise differentiated series."""
    n = np.arange(1, terms + 1, dtype=float)
    log_inv = np.log(2 * n * (n + 1))
    ls = np.exp(-s * log_inv)
    return float(np.sum((ls * log_inv)[::-1]) / np.sum(ls[::-1]))
