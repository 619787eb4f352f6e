"""Independent reference implementations used by the tests.

None of these share code with quadbif: rounding is done on Fractions,
by brute-force enumeration, or by MPFR through gmpy2.
"""

import math
import struct
from fractions import Fraction

import gmpy2


def round_fraction(q, bits):
    """Round a rational to the nearest ``bits``-bit binary float, ties to even."""
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    sign = -1 if q < 0 else 1
    q = abs(q)
    e = q.numerator.bit_length() - q.denominator.bit_length()
    while Fraction(2) ** e > q:
        e -= 1
    while Fraction(2) ** (e + 1) <= q:
        e += 1
    scale = Fraction(2) ** (e - bits + 1)
    t = q / scale
    fl = math.floor(t)
    frac = t - fl
    if frac > Fraction(1, 2) or (frac == Fraction(1, 2) and fl % 2 == 1):
        fl += 1
    return sign * fl * scale


def enumerate_grid(bits, emin, emax):
    """Every positive ``bits``-bit float with exponent of the leading bit in ``[emin, emax]``."""
    out = []
    for e in range(emin, emax + 1):
        for m in range(1 << (bits - 1), 1 << bits):
            out.append(Fraction(m) * Fraction(2) ** (e - bits + 1))
    return sorted(out)


def nearest_on_grid(q, grid, bits):
    """Nearest grid value to ``q``; ties go to the even significand."""
    best = min(grid, key=lambda g: abs(g - q))
    ties = [g for g in grid if abs(g - q) == abs(best - q)]
    if len(ties) == 1:
        return best

    def significand(g):
        e = 0
        while g >= 2:
            g /= 2
            e += 1
        while g < 1:
            g *= 2
            e -= 1
        return int(g * 2 ** (bits - 1))

    return next(g for g in ties if significand(g) % 2 == 0)


def _frac(x):
    return Fraction(*x.as_integer_ratio())


def _mp(v):
    if isinstance(v, Fraction):
        return gmpy2.mpfr(gmpy2.mpq(v.numerator, v.denominator))
    return gmpy2.mpfr(v)


def mpfr_context(bits):
    return gmpy2.context(
        precision=bits,
        round=gmpy2.RoundToNearest,
        emax=2**30,
        emin=-(2**30),
        subnormalize=False,
    )


def mpfr_orbit(a, x0, n, bits):
    """Orbit of ``x -> a - x*x`` computed by MPFR at ``bits``; returns Fractions."""
    with mpfr_context(bits):
        a = _mp(a)
        x = _mp(x0)
        out = [_frac(x)]
        for _ in range(n):
            x = a - x * x
            out.append(_frac(x))
    return out


def mpfr_seed(a, bits):
    """Literal nested-radical preimage seed, evaluated by MPFR."""
    with mpfr_context(bits):
        a = gmpy2.mpfr(a)
        return _frac(gmpy2.sqrt(a - (gmpy2.sqrt(4 * a + 1) - 1) / 2))


def exact_x_plus(a, bits=400):
    """Upper fixed point to ``bits`` bits (effectively exact for double tests)."""
    with mpfr_context(bits):
        a = gmpy2.mpfr(a)
        return _frac((gmpy2.sqrt(4 * a + 1) - 1) / 2)


def float_bits(x):
    return struct.unpack("<Q", struct.pack("<d", x))[0]
