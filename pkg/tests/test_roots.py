import cmath
import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetasaw import roots
from zetasaw.errors import DomainError
from zetasaw.transforms import laplace_w_component, mellin_w_component

LN2 = math.log(2)


# --- Laplace -------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 10))
@pytest.mark.parametrize("m", [m for m in range(-5, 6) if m not in (0, -1)])
def test_laplace_root_residual(n, m):
    rho = roots.laplace_root(n, m)
    assert abs(laplace_w_component(n, rho)) <= 1e-9 * n * n


def test_laplace_root_vs_mpmath_lambert():
    for n in (1, 4):
        for m in (1, 2, -3):
            ref = complex(-n * (n + 1) * (mp.lambertw(-1 / mp.e, m) + 1))
            assert abs(roots.laplace_root(n, m) - ref) < 1e-10 * abs(ref)


def test_laplace_branch_point_pair():
    # m = 0 and m = -1 both land on the removable point s = 0
    for n in (1, 3):
        assert abs(roots.laplace_root(n, 0)) < 1e-6
        assert abs(roots.laplace_root(n, -1)) < 1e-6
        assert laplace_w_component(n, 0) == pytest.approx(1 / (2 * n * (n + 1)))


@pytest.mark.parametrize("n,m", [(1, 1), (3, 2), (2, 5), (5, -4)])
def test_laplace_reflection(n, m):
    assert roots.laplace_root_reflection_check(n, m) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30), st.integers(-20, 20).filter(lambda m: m not in (0, -1)))
def test_laplace_quotient(n, m):
    q = roots.laplace_root_quotient(n, m)
    assert abs(q - (n + 1) / (n - 1)) < 1e-9


def test_laplace_quotient_independent_roots():
    # quotient of two separately evaluated roots, not a symbolic cancellation
    for m in (1, 2, 3, -2):
        assert abs(roots.laplace_root(2, m) / roots.laplace_root(1, m) - 3) < 1e-9
    with pytest.raises(DomainError):
        roots.laplace_root_quotient(1, 2)


# --- Mellin, n = 1 ---------------------------------------------------------------

@pytest.mark.parametrize("m", [0, 1, -1, 2, 7, -12])
def test_mellin_inverse_forward(m):
    s = roots.mellin_inverse_n1(0, m)
    assert abs(roots.mellin_tau_w1(s)) < 1e-10
    z = 2.0
    assert abs(roots.mellin_tau_w1(roots.mellin_inverse_n1(z, m)) - z) < 1e-10


def test_mellin_inverse_branches_distinct():
    a, b = roots.mellin_inverse_n1(0, 0), roots.mellin_inverse_n1(0, 1)
    assert abs(a - b) > 1
    with pytest.raises(DomainError):
        roots.mellin_inverse_n1(1, 0)


def test_mellin_tau_w1_form():
    for s in (0.5 + 2j, 3.0, -2.5 + 1j):
        assert roots.mellin_tau_w1(s) == pytest.approx(1 + 2 ** (-s) / (s - 1), rel=1e-12)


def test_numeric_roots_match_closed_form_n1():
    fam = roots.mellin_roots_numeric(1, 25)
    closed = [roots.mellin_inverse_n1(0, m) for m in range(-40, 41)]
    for _, z in fam.roots:
        assert min(abs(z - c) for c in closed) < 1e-8


# --- Mellin, general n ---------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 10, 100])
def test_numeric_roots_contract(n):
    fam = roots.mellin_roots_numeric(n, 12)
    assert fam.kind == "mellin" and fam.n == n
    ims = [z.imag for z in fam.values()]
    assert all(b > a for a, b in zip(ims, ims[1:]))
    assert [m for m, _ in fam.roots] == list(range(1, 13))
    for z in fam.values():
        assert roots.mellin_residual(n, z) <= 1e-9
        # forward check with mpmath at high precision
        with mp.workdps(40):
            s = mp.mpc(z)
            f = n * mp.exp(-s * mp.log(mp.mpf(n + 1) / n)) + s - n
            scale = n + abs(s)
            assert abs(f) < 1e-9 * scale


@pytest.mark.parametrize("n", [2, 5, 30])
def test_lambert_family_matches_numeric(n):
    fam = roots.mellin_roots_numeric(n, 8)
    lam = [roots.mellin_root_lambert(n, m) for m in range(-12, 13)]
    for z in fam.values():
        assert min(abs(z - c) for c in lam) < 1e-8 * max(1, abs(z))
        assert abs(mellin_w_component(n, z)) <= 1e-9 * abs(mellin_w_component(n, z + 0.5))


def test_imaginary_parts_grow_with_n():
    a = roots.mellin_roots_numeric(1, 5).values()
    b = roots.mellin_roots_numeric(2, 5).values()
    assert all(y.imag > x.imag for x, y in zip(a, b))


def test_spacing_and_argument_trend():
    fam = roots.mellin_roots_numeric(1, 21)
    v = fam.values()
    gap = (v[20] - v[19]).imag
    assert gap == pytest.approx(2 * math.pi / LN2, rel=0.01)
    # real parts drift to -infinity slowly, but relative to the imaginary part they vanish
    ratios = [abs(z.real) / z.imag for z in v]
    assert all(b < a for a, b in zip(ratios, ratios[1:]))
    assert abs(cmath.phase(v[19]) - math.pi / 2) < 0.05


def test_spacing_limits():
    assert roots.root_spacing_limit(1) == pytest.approx(2j * math.pi / LN2)
    assert roots.root_quotient_limit(3) == pytest.approx(math.log(3 / 2) / math.log(4 / 3))
    fam1 = roots.mellin_roots_numeric(1, 30).values()
    fam2 = roots.mellin_roots_numeric(2, 30).values()
    q = ((fam1[29] - fam1[28]) / (fam2[29] - fam2[28])).imag
    # spacing_{n-1}/spacing_n, tending to ln 2/ln(3/2)...
    assert (fam2[29] - fam2[28]).imag / (fam1[29] - fam1[28]).imag == pytest.approx(
        roots.root_quotient_limit(2), rel=0.01)
    assert q < 1
    with pytest.raises(DomainError):
        roots.root_quotient_limit(1)


def test_exponential_spacing():
    for n in (1, 2, 17, 1000):
        v = roots.root_exponential_spacing(n)
        assert abs(v) == pytest.approx(1, abs=1e-15)
    v = roots.root_exponential_spacing(1)
    th = 2 * math.pi / LN2
    assert v == pytest.approx(complex(math.cos(th), -math.sin(th)), abs=1e-12)
    assert abs(roots.root_exponential_spacing(10**6) + 1) < 1e-3


def test_guards():
    with pytest.raises(DomainError):
        roots.laplace_root(0, 1)
    with pytest.raises(DomainError):
        roots.mellin_roots_numeric(1, 0)


@pytest.mark.parametrize("n", [1, 2, 10])
def test_lambert_branch_index_is_rank(n):
    fam = roots.mellin_roots_numeric(n, 5)
    for m, z in fam.roots:
        assert abs(roots.mellin_root_lambert(n, m) - z) < 1e-9 * abs(z)
        assert abs(roots.mellin_root_lambert(n, -m - 1) - z.conjugate()) < 1e-9 * abs(z)
    assert abs(roots.mellin_root_lambert(n, 0)) < 1e-12
    assert abs(roots.mellin_root_lambert(n, -1) + 1) < 1e-12
