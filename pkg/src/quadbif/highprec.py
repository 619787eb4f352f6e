"""Binary floating point with a configurable significand width.

``HPFloat`` stores ``sign * significand * 2**exponent`` where the
significand is an integer of exactly ``precision`` bits (leading bit set)
or zero. Every arithmetic result is the exact real result rounded once,
to nearest with ties to even. The exponent range is deliberately huge
(about +-2**30) so that, at the magnitudes the quadratic map visits, the
significand width is the only source of error.

Simplifications relative to IEEE 754: there are no subnormals (results
below the exponent range flush to zero), no infinities or NaNs (overflow
raises :class:`~quadbif.errors.Escaped`), and zero is unsigned.

The module also provides two small "arithmetic" objects that let the map
code run unchanged on native doubles or on HPFloat values::

    >>> ar = arithmetic(113)
    >>> x = ar.num(1.9)
    >>> ar.fmt(ar.sqrt(x))
    '1.3784048752090221445779737876592686'
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import (
    DivisionByZero,
    DomainError,
    Escaped,
    ParseError,
    PrecisionMismatch,
)

__all__ = [
    "HPFloat",
    "NativeDouble",
    "HPArithmetic",
    "arithmetic",
    "parse_precision",
    "MIN_PRECISION",
    "MAX_PRECISION",
    "PRESETS",
]

MIN_PRECISION = 2
MAX_PRECISION = 4096
EMAX = 2**30
EMIN = -(2**30)

PRESETS = {"single": 24, "double": 53, "quad": 113, "octuple": 256}

_TWO53 = 9007199254740992.0
_LOG10_2 = math.log10(2)

_DECIMAL_RE = re.compile(
    r"""\s*(?P<sign>[-+])?
        (?:(?P<int>\d+)(?:\.(?P<frac>\d*))?|\.(?P<onlyfrac>\d+))
        (?:[eE](?P<exp>[-+]?\d+))?\s*\Z""",
    re.VERBOSE,
)
_MAX_DECIMAL_EXPONENT = 10**6


def _check_precision(prec):
    if not isinstance(prec, int) or not MIN_PRECISION <= prec <= MAX_PRECISION:
        raise ValueError(
            f"precision must be an int in [{MIN_PRECISION}, {MAX_PRECISION}], got {prec!r}"
        )


def _raw(sign, man, exp, prec):
    obj = object.__new__(HPFloat)
    obj._sign = sign
    obj._man = man
    obj._exp = exp
    obj._prec = prec
    return obj


def _zero(prec):
    return _raw(1, 0, 0, prec)


def _finish(sign, man, exp, prec, sticky=False):
    """Round ``sign * (man + frac) * 2**exp`` to ``prec`` bits.

    ``sticky`` flags a nonzero fraction strictly below the last bit of
    ``man``; callers that set it supply at least ``prec + 2`` bits.
    """
    if not man:
        return _raw(1, 0, 0, prec)
    shift = man.bit_length() - prec
    if shift > 0:
        q = man >> shift
        rem = man & ((1 << shift) - 1)
        half = 1 << (shift - 1)
        if rem > half or (rem == half and (sticky or q & 1)):
            q += 1
            if q >> prec:
                q >>= 1
                shift += 1
        man = q
        exp += shift
    elif shift < 0:
        man <<= -shift
        exp += shift
    top = exp + prec - 1
    if top > EMAX:
        raise Escaped(f"exponent overflow (2**{top})")
    if top < EMIN:
        return _raw(1, 0, 0, prec)
    return _raw(sign, man, exp, prec)


def _from_ratio(sign, num, den, prec):
    # quotient gets at least prec + 2 bits so the sticky bit is sound
    s = prec + 2 + den.bit_length() - num.bit_length()
    if s >= 0:
        q, r = divmod(num << s, den)
    else:
        q, r = divmod(num, den << -s)
    return _finish(sign, q, -s, prec, r != 0)


def _format_digits(negative, digits, decpt):
    """Render ``0.<digits> * 10**decpt`` the way ``repr(float)`` does."""
    if decpt <= -4 or decpt > 16:
        body = digits[0]
        if len(digits) > 1:
            body += "." + digits[1:]
        e = decpt - 1
        body += "e" + ("-" if e < 0 else "+") + f"{abs(e):02d}"
    elif decpt <= 0:
        body = "0." + "0" * (-decpt) + digits
    elif decpt >= len(digits):
        body = digits + "0" * (decpt - len(digits)) + ".0"
    else:
        body = digits[:decpt] + "." + digits[decpt:]
    return ("-" if negative else "") + body


class HPFloat:
    """Immutable binary floating-point number of configurable width."""

    __slots__ = ("_sign", "_man", "_exp", "_prec")

    def __new__(cls, value=0, precision=53):
        _check_precision(precision)
        if isinstance(value, HPFloat):
            return value.round_to(precision)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return cls.from_int(value, precision)
        if isinstance(value, float):
            return cls.from_float(value, precision)
        if isinstance(value, str):
            return cls.from_decimal(value, precision)
        if isinstance(value, Fraction):
            return cls.from_fraction(value, precision)
        raise TypeError(f"cannot build HPFloat from {type(value).__name__}")

    # construction

    @classmethod
    def from_float(cls, x, precision=53):
        """Exact conversion of a double (rounded if ``precision < 53``)."""
        if x == 0.0:
            return _zero(precision)
        if x != x or x in (math.inf, -math.inf):
            raise DomainError(f"non-finite value {x!r}")
        m, e = math.frexp(x)
        if m < 0:
            return _finish(-1, int(-m * _TWO53), e - 53, precision)
        return _finish(1, int(m * _TWO53), e - 53, precision)

    @classmethod
    def from_int(cls, n, precision=53):
        if n < 0:
            return _finish(-1, -n, 0, precision)
        return _finish(1, n, 0, precision)

    @classmethod
    def from_fraction(cls, q, precision=53):
        q = Fraction(q)
        if q == 0:
            return _zero(precision)
        sign = -1 if q < 0 else 1
        return _from_ratio(sign, abs(q.numerator), q.denominator, precision)

    @classmethod
    def from_decimal(cls, text, precision=53):
        """Parse a decimal string, rounding correctly to ``precision`` bits.

        Accepts an optional sign, digits with an optional decimal point and
        an optional exponent. Decimal commas are rejected.
        """
        _check_precision(precision)
        m = _DECIMAL_RE.match(text)
        if m is None:
            hint = " (use a decimal point, not a comma)" if "," in text else ""
            raise ParseError(f"invalid decimal literal {text!r}{hint}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("onlyfrac") is not None:
            intpart, frac = "", m.group("onlyfrac")
        else:
            intpart, frac = m.group("int"), m.group("frac") or ""
        digits = int(intpart + frac or "0")
        k = int(m.group("exp") or 0) - len(frac)
        if digits == 0:
            return _zero(precision)
        if abs(k) > _MAX_DECIMAL_EXPONENT:
            raise ParseError(f"decimal exponent out of range in {text!r}")
        if k >= 0:
            return _finish(sign, digits * 10**k, 0, precision)
        return _from_ratio(sign, digits, 10**-k, precision)

    # accessors

    @property
    def sign(self):
        return self._sign

    @property
    def significand(self):
        return self._man

    @property
    def exponent(self):
        return self._exp

    @property
    def precision(self):
        return self._prec

    def is_zero(self):
        return not self._man

    def round_to(self, precision):
        """Return this value correctly rounded to another width."""
        if precision == self._prec:
            return self
        _check_precision(precision)
        return _finish(self._sign, self._man, self._exp, precision)

    def as_integer_ratio(self):
        n = self._sign * self._man
        if self._exp >= 0:
            return n << self._exp, 1
        f = Fraction(n, 1 << -self._exp)
        return f.numerator, f.denominator

    def to_fraction(self):
        return Fraction(*self.as_integer_ratio())

    def __float__(self):
        if not self._man:
            return 0.0
        if self._prec > 53:
            r = _finish(self._sign, self._man, self._exp, 53)
            return math.ldexp(float(r._sign * r._man), r._exp)
        return math.ldexp(float(self._sign * self._man), self._exp)

    def ulp(self):
        """Weight of the least significant significand bit, as an HPFloat."""
        if not self._man:
            raise DomainError("ulp of zero is undefined")
        return _raw(1, 1 << (self._prec - 1), self._exp - self._prec + 1, self._prec)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, HPFloat):
            if other._prec != self._prec:
                raise PrecisionMismatch(
                    f"operands have widths {self._prec} and {other._prec}"
                )
            return other
        if isinstance(other, float):
            return HPFloat.from_float(other, self._prec)
        if isinstance(other, int):
            return HPFloat.from_int(other, self._prec)
        return NotImplemented

    def _add(self, other, other_sign):
        prec = self._prec
        if not other._man:
            return self
        if not self._man:
            return _raw(other_sign, other._man, other._exp, prec)
        xs, xm, xe = self._sign, self._man, self._exp
        ys, ym, ye = other_sign, other._man, other._exp
        if xe < ye:
            xs, xm, xe, ys, ym, ye = ys, ym, ye, xs, xm, xe
        d = xe - ye
        if d > prec + 2:
            # the smaller operand is below a quarter ulp of the larger one
            return _raw(xs, xm, xe, prec)
        xm <<= d
        if xs == ys:
            return _finish(xs, xm + ym, ye, prec)
        m = xm - ym
        if m < 0:
            return _finish(ys, -m, ye, prec)
        return _finish(xs, m, ye, prec)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(other, other._sign)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(other, -other._sign)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._add(self, -self._sign)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._man or not other._man:
            return _zero(self._prec)
        return _finish(
            self._sign * other._sign,
            self._man * other._man,
            self._exp + other._exp,
            self._prec,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._div(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._div(self)

    def _div(self, other):
        if not other._man:
            raise DivisionByZero("HPFloat division by zero")
        if not self._man:
            return _zero(self._prec)
        prec = self._prec
        s = prec + 2
        q, r = divmod(self._man << s, other._man)
        return _finish(
            self._sign * other._sign, q, self._exp - other._exp - s, prec, r != 0
        )

    def sqrt(self):
        """Correctly rounded square root."""
        if not self._man:
            return self
        if self._sign < 0:
            raise DomainError("square root of a negative number")
        prec = self._prec
        man, exp = self._man, self._exp
        k = max(0, 2 * (prec + 2) - man.bit_length() + 1)
        if (exp - k) & 1:
            k += 1
        m = man << k
        r = math.isqrt(m)
        return _finish(1, r, (exp - k) >> 1, prec, r * r != m)

    def __neg__(self):
        if not self._man:
            return self
        return _raw(-self._sign, self._man, self._exp, self._prec)

    def __pos__(self):
        return self

    def __abs__(self):
        if self._sign > 0:
            return self
        return _raw(1, self._man, self._exp, self._prec)

    # comparison (exact, across widths)

    def _cmp(self, other):
        if isinstance(other, float):
            if other != other:
                return None
            if other in (math.inf, -math.inf):
                return -1 if other > 0 else 1
            other = HPFloat.from_float(other, 53)
        elif isinstance(other, int):
            # width matches the integer so the conversion is exact
            other = _finish(-1 if other < 0 else 1, abs(other), 0, max(2, other.bit_length()))
        elif isinstance(other, Fraction):
            f = self.to_fraction()
            return (f > other) - (f < other)
        elif not isinstance(other, HPFloat):
            return NotImplemented
        xs = self._sign if self._man else 0
        ys = other._sign if other._man else 0
        if xs != ys:
            return -1 if xs < ys else 1
        if not xs:
            return 0
        tx = self._exp + self._man.bit_length()
        ty = other._exp + other._man.bit_length()
        if tx != ty:
            return xs if tx > ty else -xs
        e = min(self._exp, other._exp)
        a = self._man << (self._exp - e)
        b = other._man << (other._exp - e)
        return xs * ((a > b) - (a < b))

    def __eq__(self, other):
        c = self._cmp(other)
        if c is NotImplemented:
            return c
        return c == 0

    def __ne__(self, other):
        c = self._cmp(other)
        if c is NotImplemented:
            return c
        return c != 0

    def __lt__(self, other):
        c = self._cmp(other)
        if c is NotImplemented:
            return c
        return c is not None and c < 0

    def __le__(self, other):
        c = self._cmp(other)
        if c is NotImplemented:
            return c
        return c is not None and c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        if c is NotImplemented:
            return c
        return c is not None and c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        if c is NotImplemented:
            return c
        return c is not None and c >= 0

    def __hash__(self):
        return hash(self.to_fraction())

    def __bool__(self):
        return bool(self._man)

    def bits_equal(self, other):
        """True when both values have identical sign, significand, exponent and width."""
        return (
            isinstance(other, HPFloat)
            and self._prec == other._prec
            and self._man == other._man
            and (not self._man or (self._sign == other._sign and self._exp == other._exp))
        )

    # decimal output

    def _shortest_digits(self):
        # smallest d such that some d-digit decimal rounds back to self;
        # among the (at most two) candidates pick the nearer one
        v = Fraction(self._man) * Fraction(2) ** self._exp
        gap_hi = Fraction(2) ** self._exp / 2
        gap_lo = gap_hi / 2 if self._man == 1 << (self._prec - 1) else gap_hi
        inclusive = self._man % 2 == 0
        lo, hi = v - gap_lo, v + gap_hi

        def inside(c, q):
            t = c * Fraction(10) ** q
            return lo <= t <= hi if inclusive else lo < t < hi

        e10 = math.floor((self._man.bit_length() + self._exp - 1) * _LOG10_2)
        while Fraction(10) ** (e10 + 1) <= v:
            e10 += 1
        while Fraction(10) ** e10 > v:
            e10 -= 1

        def attempt(d):
            q = e10 + 1 - d
            t = v / Fraction(10) ** q
            c0 = t.numerator // t.denominator
            found = [c for c in (c0, c0 + 1) if inside(c, q)]
            if not found:
                return None
            c = min(found, key=lambda c: abs(c - t))
            return c, q

        lo_d, hi_d = 1, int(self._prec * _LOG10_2) + 3
        best = attempt(hi_d)
        while lo_d < hi_d:
            mid = (lo_d + hi_d) // 2
            r = attempt(mid)
            if r is None:
                lo_d = mid + 1
            else:
                hi_d, best = mid, r
        c, q = best
        s = str(c)
        stripped = s.rstrip("0")
        q += len(s) - len(stripped)
        return stripped, q

    def to_decimal(self):
        """Shortest decimal string that parses back to this exact value."""
        if not self._man:
            return "0.0"
        digits, q = self._shortest_digits()
        return _format_digits(self._sign < 0, digits, len(digits) + q)

    __str__ = to_decimal

    def __repr__(self):
        return f"HPFloat('{self.to_decimal()}', precision={self._prec})"


class NativeDouble:
    """Map arithmetic on hardware IEEE binary64 values."""

    bits = 53
    native = True

    def num(self, value):
        if isinstance(value, str):
            if "," in value:
                raise ParseError(f"invalid decimal literal {value!r} (use a decimal point)")
            try:
                value = float(value)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        x = float(value)
        if not math.isfinite(x):
            raise DomainError(f"non-finite value {x!r}")
        return x

    @staticmethod
    def sqrt(x):
        if x < 0:
            raise DomainError("square root of a negative number")
        return math.sqrt(x)

    @staticmethod
    def fmt(x):
        return repr(float(x))

    def __repr__(self):
        return "NativeDouble()"

    def __eq__(self, other):
        return isinstance(other, NativeDouble)

    def __hash__(self):
        return hash("NativeDouble")


class HPArithmetic:
    """Map arithmetic on HPFloat values of one fixed width."""

    native = False

    def __init__(self, bits):
        _check_precision(bits)
        self.bits = bits

    def num(self, value):
        if isinstance(value, HPFloat):
            return value.round_to(self.bits)
        return HPFloat(value, self.bits)

    @staticmethod
    def sqrt(x):
        return x.sqrt()

    @staticmethod
    def fmt(x):
        return x.to_decimal()

    def __repr__(self):
        return f"HPArithmetic({self.bits})"

    def __eq__(self, other):
        return isinstance(other, HPArithmetic) and other.bits == self.bits

    def __hash__(self):
        return hash(("HPArithmetic", self.bits))


_DOUBLE = NativeDouble()


def arithmetic(precision=53):
    """Resolve a precision name or width to an arithmetic object.

    ``53`` (or ``"double"``) selects native doubles; any other width selects
    HPFloat. An arithmetic object passes through unchanged, which is how
    callers force ``HPArithmetic(53)`` for cross-checks.
    """
    if isinstance(precision, (NativeDouble, HPArithmetic)):
        return precision
    if isinstance(precision, str):
        precision = parse_precision(precision)
    if precision == 53:
        return _DOUBLE
    return HPArithmetic(precision)


def parse_precision(text):
    """Parse ``double``, a preset name, ``bits:N`` or a bare integer width."""
    t = text.strip().lower()
    if t in PRESETS:
        return PRESETS[t]
    if t.startswith("bits:"):
        t = t[5:]
    try:
        bits = int(t)
    except ValueError:
        raise ParseError(
            f"invalid precision {text!r}; expected 'double' or 'bits:N'"
        ) from None
    _check_precision(bits)
    return bits
