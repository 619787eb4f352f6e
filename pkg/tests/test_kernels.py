import random

import pytest

from quadbif import _fallback, kernels
from quadbif.highprec import HPFloat
from quadbif.map_core import escape_threshold, fixed_points, seed_initial_condition

from oracles import float_bits, mpfr_orbit

compiled = pytest.importorskip("quadbif._kernels")


def bits_of(xs):
    return [float_bits(x) for x in xs]


def test_backend_selected():
    assert kernels.BACKEND == "cython"
    assert kernels.orbit_double is compiled.orbit_double


def random_cases(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        a = rng.uniform(-0.6, 2.4)
        yield a, rng.uniform(-2.2, 2.2), escape_threshold(a)


def test_orbit_parity():
    for a, x0, bound in random_cases(1, 300):
        c = compiled.orbit_double(a, x0, 500, bound)
        p = _fallback.orbit_double(a, x0, 500, bound)
        assert bits_of(c[0]) == bits_of(p[0])
        assert c[1] == p[1]


def test_column_parity():
    for a, x0, bound in random_cases(2, 300):
        c = compiled.column_double(a, x0, 200, 50, bound)
        p = _fallback.column_double(a, x0, 200, 50, bound)
        assert bits_of(c[0]) == bits_of(p[0])
        assert c[1] == p[1]
        if c[2] is None:
            assert p[2] is None
        else:
            assert float_bits(c[2]) == float_bits(p[2])


def test_divergence_parity():
    rng = random.Random(3)
    for _ in range(300):
        a = rng.uniform(-0.25, 2.0)
        x_star = fixed_points(a).x_plus
        x0 = seed_initial_condition(a)
        eps = 10 ** rng.uniform(-12, -1)
        c = compiled.divergence_double(a, x0, x_star, eps, 3000)
        p = _fallback.divergence_double(a, x0, x_star, eps, 3000)
        assert c[0] == p[0] and c[2] == p[2]
        assert float_bits(c[1]) == float_bits(p[1])


def test_compiled_orbit_matches_mpfr():
    # rules out fused multiply-add in the compiled loop
    for a, x0, bound in random_cases(4, 40):
        values, esc = compiled.orbit_double(a, x0, 300, bound)
        ref = mpfr_orbit(a, x0, len(values) - 1, 53)
        assert [x.as_integer_ratio() for x in values] == [
            (r.numerator, r.denominator) for r in ref
        ]


def test_edge_arguments():
    assert compiled.orbit_double(1.0, 0.5, 0, 3.0) == ([0.5], None)
    assert compiled.orbit_double(1.0, 5.0, 10, 3.0) == ([5.0], 0)
    assert compiled.column_double(1.0, 5.0, 10, 2, 3.0) == ([], 0, 5.0)
    assert compiled.divergence_double(2.0, 1.0, 1.0, 1e-3, 10) == (None, 0.0, 10)


def test_fallback_drives_hpfloat():
    a = HPFloat(1.9, 113)
    x0 = HPFloat(0.2, 113)
    values, esc = _fallback.orbit_double(a, x0, 100, HPFloat(10, 113))
    assert esc is None
    assert [v.to_fraction() for v in values] == mpfr_orbit(1.9, 0.2, 100, 113)
