import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetasaw import maps
from zetasaw.errors import DomainError, PrecisionError

unit = st.floats(min_value=1e-9, max_value=1.0, exclude_min=True)


@settings(max_examples=300, deadline=None)
@given(unit)
def test_partition_of_unity(x):
    k = math.floor(1 / x)
    hits = [n for n in range(max(1, k - 3), k + 4) if maps.chi_harmonic(x, n)]
    assert len(hits) == 1
    # indicators of far-away intervals vanish
    assert not maps.chi_harmonic(x, k + 10) and (k < 12 or not maps.chi_harmonic(x, k - 10))
    n = hits[0]
    assert maps.harmonic_index(x) == n
    assert maps.w_map(x) == maps.w_component(n, x)


@settings(max_examples=300, deadline=None)
@given(unit)
def test_w_maps_into_unit_interval(x):
    y = maps.w_map(x)
    assert 0 < y <= 1
    assert y == float(maps.w_map(Fraction(x)))


def test_boundary_convention():
    # intervals are (1/(n+1), 1/n]; the right end 1/n belongs to branch n
    for n in range(1, 50):
        x = Fraction(1, n)
        assert maps.harmonic_index(x) == n
        assert maps.w_map(x) == 1


def test_w_examples():
    assert maps.w_map(Fraction(7, 10)) == Fraction(2, 5)
    assert maps.w_map(0.7) == pytest.approx(0.4, abs=1e-15)
    assert maps.gauss_map(Fraction(3, 10)) == Fraction(1, 3)
    with pytest.raises(DomainError):
        maps.w_map(0)
    with pytest.raises(DomainError):
        maps.gauss_map(1.5)


def test_h_component_matches_gauss_map():
    for x in (0.9, 0.41, 0.13, 0.0101):
        n = maps.harmonic_index(x)
        assert maps.h_component(n, x) == pytest.approx(maps.gauss_map(x), abs=1e-12)


def test_fixed_points_w_exact():
    for n in range(1, 10_001):
        q = maps.fixed_point_w(n, exact=True)
        assert maps.w_map(q) == q
    assert maps.fixed_point_w(3) == pytest.approx(3 / 11)


def test_fixed_points_h():
    for n in (1, 2, 10, 1000, 10**6):
        x = maps.fixed_point_h(n)
        assert x * x + n * x - 1 == pytest.approx(0, abs=1e-15)
        assert maps.harmonic_index(x) == n
    assert maps.fixed_point_h(1) == pytest.approx(maps.GOLDEN_RATIO - 1, abs=1e-15)


def test_fixed_point_generating_function():
    for x in (0.5, -0.7, 0.2 + 0.3j):
        direct = complex(mp.nsum(lambda n: n * mp.mpmathify(x) ** n / (n * n + n - 1), [1, mp.inf]))
        assert abs(maps.fix_w_lerch(x) - direct) < 1e-11
    assert maps.fix_w_generating(0.5) == pytest.approx(maps.fix_w_lerch(0.5).real, abs=1e-14)


def test_printed_lerch_form_is_not_the_generating_function():
    # the printed coefficient pair and shifts do not reproduce the series
    assert abs(maps.fix_w_lerch_printed(0.5) - maps.fix_w_generating(0.5)) > 0.1


def test_iterate_orbits():
    o = maps.iterate_map("h", Fraction(3, 10), 5)
    assert o.points[:4] == [Fraction(3, 10), Fraction(1, 3), 0][:3] + o.points[3:4]
    assert o.terminated
    o = maps.iterate_map("w", Fraction(1, 3), 3)
    assert o.points == [Fraction(1, 3), 1, 1, 1] and not o.terminated
    with pytest.raises(DomainError):
        maps.iterate_map("q", 0.5, 2)


def test_gauss_orbit_reads_continued_fraction():
    x = Fraction(415, 93)
    frac = x - math.floor(x)
    quotients = []
    o = maps.iterate_map("h", frac, 10)
    for y in o.points[:-1]:
        if y == 0:
            break
        quotients.append(math.floor(1 / y))
    assert [math.floor(x)] + quotients == maps.continued_fraction(x, 10)


def test_continued_fraction_neg_inv_e():
    assert maps.continued_fraction(-1 / math.e, 20) == [-1, 1, 1, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1, 1, 10, 1, 1, 12]
    # pattern continues: -1/e = [-1; 1, 1, 1, 2, 1, 1, 4, ...], 2k in every third slot
    assert maps.continued_fraction(Fraction(355, 113), 5) == [3, 7, 16]


def test_gamma_orbit_table():
    table = [(0, 1), (1, 2), (48, 84), (290, 504), (581, 1008), (1163, 2016), (2327, 4032),
             (13964, 24192), (7492468716, 12980362752), (14984937433, 25960725504),
             (1078915495184, 1869172236288)]
    got = [(-s.a, -s.b) for s in maps.gamma_orbit(10)]
    assert got == table


def test_gamma_orbit_oracle_high_precision():
    # independent oracle: iterate w on a 200-digit mpmath value of gamma
    with mp.workdps(200):
        g = +mp.euler
        y = g
        for st_ in maps.gamma_orbit(30)[1:]:
            y = mp.floor(1 / y) * (y * mp.floor(1 / y) + y - 1)
            assert abs(y - (st_.a - st_.b * g)) < mp.mpf(10) ** -100
    assert len(str(maps.gamma_orbit(30)[30].b)) == 26


def test_gamma_orbit_guards():
    with pytest.raises(DomainError):
        maps.gamma_orbit(31)
    with pytest.raises(DomainError):
        maps.gamma_orbit(5, digits=10)
    # too few digits for the orbit length: the enclosure straddles a boundary
    with pytest.raises(PrecisionError):
        maps.affine_orbit(Fraction(57, 100), Fraction(58, 100), 10)
