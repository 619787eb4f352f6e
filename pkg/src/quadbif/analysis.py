"""When and how preimage-seeded orbits leave the fixed point.

An orbit seeded at the preimage of the upper fixed point ``x_plus`` lands
on ``x_plus`` after one step in exact arithmetic and stays there forever.
At finite precision the first step misses by a rounding error, and when
``x_plus`` is unstable (``a > 3/4``) that error grows by ``|2 x_plus|``
per step until the orbit exits any fixed tolerance ball.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Optional

from . import _fallback, kernels
from .highprec import arithmetic
from .map_core import SeedBranch, fixed_points, iterate, seed_initial_condition

__all__ = [
    "DEFAULT_TOLERANCE",
    "DEFAULT_N_MAX",
    "DivergenceReport",
    "divergence_index",
    "shadow_compare",
    "precision_sweep",
    "predicted_divergence_index",
]

DEFAULT_TOLERANCE = 1e-3
DEFAULT_N_MAX = 10_000


@dataclass(frozen=True)
class DivergenceReport:
    a: Any
    bits: int
    x_star: Any
    tolerance: float
    divergence_index: Optional[int]
    max_deviation_before: float
    orbit_length: int

    @property
    def diverged(self):
        return self.divergence_index is not None


def divergence_index(a, bits=53, tolerance=DEFAULT_TOLERANCE, n_max=DEFAULT_N_MAX):
    """First ``n >= 1`` with ``|x_n - x_plus| > tolerance`` for the seeded orbit.

    The orbit starts at the positive preimage seed computed at ``bits``
    and is iterated at the same width. ``orbit_length`` counts the iterates
    examined; ``max_deviation_before`` covers indices ``1 .. n-1``.
    """
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ar = arithmetic(bits)
    a = ar.num(a)
    x_star = fixed_points(a, ar).x_plus
    x = seed_initial_condition(a, SeedBranch.POSITIVE, ar)
    # the fallback kernel is generic over number types and serves HPFloat
    kernel = kernels.divergence_double if ar.native else _fallback.divergence_double
    index, worst, length = kernel(a, x, x_star, tolerance, n_max)
    return DivergenceReport(
        a=a,
        bits=ar.bits,
        x_star=x_star,
        tolerance=tolerance,
        divergence_index=index,
        max_deviation_before=float(worst),
        orbit_length=length,
    )


def shadow_compare(a, x0, bits_low, bits_high, delta, n_max):
    """First index where the ``bits_low`` and ``bits_high`` orbits differ by more than ``delta``.

    ``a`` and ``x0`` are converted separately into each width, so pass
    floats (exact at both widths when ``bits_low >= 53``) to compare the
    same real system. An orbit that escapes before the other one counts as
    separated at the first index it lacks.
    """
    low = arithmetic(bits_low)
    high = arithmetic(bits_high)
    if not low.bits < high.bits:
        raise ValueError("bits_low must be smaller than bits_high")
    if not delta > 0:
        raise ValueError("delta must be positive")
    lo = iterate(a, x0, n_max, low)
    hi = iterate(a, x0, n_max, high)
    for k, (u, v) in enumerate(zip(lo.values, hi.values)):
        if abs(float(u) - float(v)) > delta:
            return k
    if len(lo) != len(hi):
        return min(len(lo), len(hi))
    return None


def precision_sweep(a, bits_list, tolerance=DEFAULT_TOLERANCE, n_max=DEFAULT_N_MAX, jobs=1):
    """``divergence_index`` for each width in ``bits_list``, in input order."""
    bits_list = list(bits_list)
    if not bits_list:
        raise ValueError("bits_list must not be empty")

    def one(bits):
        return divergence_index(a, bits, tolerance, n_max)

    if jobs <= 1 or len(bits_list) == 1:
        return [one(b) for b in bits_list]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(one, bits_list))


def predicted_divergence_index(a, bits, tolerance=DEFAULT_TOLERANCE):
    """Log-linear escape-time estimate ``ln(tol / (x* 2**-bits)) / ln(2 x*)``.

    Assumes the seed lands one unit roundoff (relative) away from ``x*``
    and the error then grows geometrically at rate ``|f'(x*)| = 2 x*``.
    Returns ``None`` where the fixed point attracts (``a <= 3/4``).
    """
    x_star = (math.sqrt(4.0 * float(a) + 1.0) - 1.0) / 2.0
    rate = 2.0 * x_star
    if rate <= 1.0:
        return None
    initial = abs(x_star) * 2.0**-bits
    return math.log(tolerance / initial) / math.log(rate)
