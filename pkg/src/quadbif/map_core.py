"""Algebra of the quadratic map ``x -> a - x**2``.

Every function takes a ``precision`` argument: ``53`` runs on native
doubles, any other width (or an explicit ``HPArithmetic``) runs on
:class:`~quadbif.highprec.HPFloat`. Inputs may be floats, ints, decimal
strings or HPFloat values; they are converted once to the working format.

Evaluation order is fixed so results are reproducible bit for bit:
a step is ``x * x`` followed by ``a - (x * x)``, each rounded to nearest.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional

from . import _fallback, kernels
from .errors import DomainError, Escaped, NoRealFixedPoint, NoRealPreimage
from .highprec import arithmetic

__all__ = [
    "SeedBranch",
    "Orbit",
    "FixedPointPair",
    "ConvergenceCheck",
    "quad_step",
    "iterate",
    "fixed_points",
    "fixed_point_residual",
    "preimages_of",
    "seed_initial_condition",
    "one_step_convergence_check",
    "invariant_bound",
    "escape_threshold",
]


class SeedBranch(enum.Enum):
    """Sign choice for the preimage seed ``+-sqrt(a - x*)``."""

    POSITIVE = "positive"
    NEGATIVE = "negative"

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        if key in ("positive", "pos", "+"):
            return cls.POSITIVE
        if key in ("negative", "neg", "-"):
            return cls.NEGATIVE
        raise ValueError(f"unknown seed branch {value!r}")


class FixedPointPair(NamedTuple):
    x_plus: Any
    x_minus: Any


class ConvergenceCheck(NamedTuple):
    x1: Any
    x2: Any
    x_star: Any


@dataclass(frozen=True)
class Orbit:
    """Iterates ``x_0 .. x_m`` of one run; ``escaped_at`` marks an early stop."""

    a: Any
    x0: Any
    precision: int
    values: tuple
    escaped_at: Optional[int] = None

    @property
    def samples(self):
        return list(enumerate(self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    @property
    def escaped(self):
        return self.escaped_at is not None


def _finite_float(x):
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"non-finite value {x!r}")
    return x


def escape_threshold(a):
    """``beta(a) + 1`` in doubles; used to flag escaping orbits.

    For ``a < -1/4`` there is no bounded orbit at all, so the discriminant
    is clamped to zero and the threshold becomes 1.5.
    """
    a = _finite_float(a)
    return (1.0 + math.sqrt(max(4.0 * a + 1.0, 0.0))) / 2.0 + 1.0


def _step(ar, a, x):
    y = a - x * x
    if ar.native and math.isinf(y):
        raise Escaped(f"quad_step overflowed at x={x!r}")
    return y


def quad_step(a, x, precision=53):
    """One application of the map: ``a - x*x`` at the working precision."""
    ar = arithmetic(precision)
    return _step(ar, ar.num(a), ar.num(x))


def iterate(a, x0, n, precision=53):
    """Orbit of length ``n + 1`` starting at ``x0``.

    Stops early, setting ``escaped_at``, at the first ``k`` with
    ``|x_k| > beta(a) + 1``; that out-of-bound sample is kept.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    ar = arithmetic(precision)
    a = ar.num(a)
    x = ar.num(x0)
    bound = escape_threshold(a)
    if ar.native:
        values, escaped = kernels.orbit_double(a, x, n, bound)
        return Orbit(a, x, ar.bits, tuple(values), escaped)
    values, escaped = _fallback.orbit_double(a, x, n, bound)
    return Orbit(a, x, ar.bits, tuple(values), escaped)


def _discriminant_root(ar, a):
    d = 4 * a + 1
    if d < 0:
        raise NoRealFixedPoint(f"a = {ar.fmt(a)} < -1/4 has no real fixed point")
    return ar.sqrt(d)


def fixed_points(a, precision=53):
    """Both roots of ``x**2 + x - a = 0``, larger first.

    The larger root ``(sqrt(4a+1) - 1) / 2`` is evaluated in the equivalent
    form ``2a / (1 + sqrt(4a+1))``, which avoids cancellation for small
    ``|a|`` and keeps the residual within a few ulp.
    """
    ar = arithmetic(precision)
    a = ar.num(a)
    r = _discriminant_root(ar, a)
    s = 1 + r
    return FixedPointPair(2 * a / s, -(s / 2))


def invariant_bound(a, precision=53):
    """``beta(a) = (1 + sqrt(4a + 1)) / 2``, the magnitude of the lower fixed point."""
    ar = arithmetic(precision)
    a = ar.num(a)
    return (1 + _discriminant_root(ar, a)) / 2


def fixed_point_residual(a, x, precision=53):
    """``x*x + x - a``, evaluated left to right."""
    ar = arithmetic(precision)
    a = ar.num(a)
    x = ar.num(x)
    return x * x + x - a


def preimages_of(a, target, precision=53):
    """The two real ``p`` with ``a - p*p == target``, as ``(+root, -root)``."""
    ar = arithmetic(precision)
    a = ar.num(a)
    d = a - ar.num(target)
    if d < 0:
        raise NoRealPreimage(f"a - target = {ar.fmt(d)} < 0")
    p = ar.sqrt(d)
    return p, -p


def seed_initial_condition(a, branch=SeedBranch.POSITIVE, precision=53, closed_form=False):
    """Preimage of the upper fixed point, ``+-sqrt(a - (sqrt(4a+1) - 1)/2)``.

    The nested radical is evaluated literally so its rounding path is
    independent of :func:`fixed_points`. A radicand driven below zero by
    rounding is clamped to zero; this only happens for tiny ``a``, where
    the exact radicand ``x* ** 2`` is smaller than the rounding noise of
    ``a - x*``.

    With ``closed_form=True`` the seed is ``+-|x_plus|`` instead, the value
    the nested radical equals in exact arithmetic.
    """
    branch = SeedBranch.coerce(branch)
    ar = arithmetic(precision)
    a = ar.num(a)
    r = _discriminant_root(ar, a)
    if closed_form:
        s = abs(fixed_points(a, ar).x_plus)
    else:
        radicand = a - (r - 1) / 2
        if radicand < 0:
            radicand = ar.num(0)
        s = ar.sqrt(radicand)
    return s if branch is SeedBranch.POSITIVE else -s


def one_step_convergence_check(a, precision=53, branch=SeedBranch.POSITIVE):
    """Seed, then two steps; in exact arithmetic ``x1 == x2 == x_star``."""
    ar = arithmetic(precision)
    a = ar.num(a)
    seed = seed_initial_condition(a, branch, ar)
    x1 = _step(ar, a, seed)
    x2 = _step(ar, a, x1)
    return ConvergenceCheck(x1, x2, fixed_points(a, ar).x_plus)
