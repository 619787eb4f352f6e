"""Bifurcation diagrams under different seeding and sampling policies.

A diagram sweeps ``a`` over a uniform grid and, for every grid value,
emits samples of the orbit. Three combinations matter in practice:

* constant seed + transient discard: the textbook diagram;
* preimage seed + transient discard: looks like the textbook diagram,
  but only because rounding knocks the orbit off the fixed point;
* preimage seed + first iterate only: the fixed-point curve, which is
  what the preimage seed produces in exact arithmetic.
"""

from __future__ import annotations

import bisect
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import groupby
from typing import Any, NamedTuple, Union

from . import _fallback, kernels
from .errors import ConfigError, EmptyDiagramColumn
from .highprec import arithmetic
from .map_core import SeedBranch, escape_threshold, seed_initial_condition

__all__ = [
    "A_LOWER",
    "A_UPPER",
    "ConstantSeed",
    "PreimageSeed",
    "DiscardTransient",
    "FirstIterateOnly",
    "DiagramConfig",
    "DiagramPoint",
    "build_diagram",
    "diagram_distance",
    "columns",
]

# open interval of admissible parameters
A_LOWER = -2.5
A_UPPER = 2.5


@dataclass(frozen=True)
class ConstantSeed:
    x0: float = 0.2


@dataclass(frozen=True)
class PreimageSeed:
    branch: SeedBranch = SeedBranch.POSITIVE
    closed_form: bool = False


@dataclass(frozen=True)
class DiscardTransient:
    transient: int = 1000
    keep: int = 100


@dataclass(frozen=True)
class FirstIterateOnly:
    pass


SeedPolicy = Union[ConstantSeed, PreimageSeed]
IteratePolicy = Union[DiscardTransient, FirstIterateOnly]


class DiagramPoint(NamedTuple):
    a: float
    n: int
    x: Any
    escaped: bool = False


@dataclass(frozen=True)
class DiagramConfig:
    """Sweep specification; validated on construction.

    ``a_min == a_max`` is accepted only with ``n_samples == 1`` and gives a
    single-column diagram.
    """

    a_min: float = -0.25
    a_max: float = 2.0
    n_samples: int = 2000
    seed_policy: SeedPolicy = field(default_factory=ConstantSeed)
    iterate_policy: IteratePolicy = field(default_factory=DiscardTransient)
    precision: int = 53

    def __post_init__(self):
        for name in ("a_min", "a_max"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ConfigError(f"{name} must be a finite number")
            if not A_LOWER < v < A_UPPER:
                raise ConfigError(f"{name} = {v!r} outside ({A_LOWER}, {A_UPPER})")
        if not isinstance(self.n_samples, int) or self.n_samples < 1:
            raise ConfigError("n_samples must be a positive int")
        if self.a_min == self.a_max:
            if self.n_samples != 1:
                raise ConfigError("a_min == a_max requires n_samples == 1")
        elif self.a_min > self.a_max:
            raise ConfigError("a_min must be < a_max")
        elif self.n_samples < 2:
            raise ConfigError("n_samples must be >= 2")
        seed = self.seed_policy
        if isinstance(seed, PreimageSeed):
            if self.a_min < -0.25:
                raise ConfigError("preimage seeding needs a_min >= -0.25 (real fixed point)")
        elif isinstance(seed, ConstantSeed):
            if not math.isfinite(seed.x0):
                raise ConfigError("constant seed must be finite")
        else:
            raise ConfigError(f"unknown seed policy {seed!r}")
        it = self.iterate_policy
        if isinstance(it, DiscardTransient):
            if it.transient < 0:
                raise ConfigError("transient must be >= 0")
            if it.keep < 1:
                raise ConfigError("keep must be >= 1")
        elif not isinstance(it, FirstIterateOnly):
            raise ConfigError(f"unknown iterate policy {it!r}")
        try:
            arithmetic(self.precision)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def grid(self):
        if self.n_samples == 1:
            return [float(self.a_min)]
        lo, hi, m = float(self.a_min), float(self.a_max), self.n_samples - 1
        return [lo + i * (hi - lo) / m for i in range(self.n_samples)]

    def steps(self):
        """``(transient, keep)`` for the iterate policy."""
        it = self.iterate_policy
        if isinstance(it, FirstIterateOnly):
            return 0, 1
        return it.transient, it.keep


def _column(cfg, a):
    ar = arithmetic(cfg.precision)
    a_w = ar.num(a)
    seed = cfg.seed_policy
    if isinstance(seed, PreimageSeed):
        x0 = seed_initial_condition(a_w, seed.branch, ar, seed.closed_form)
    else:
        x0 = ar.num(seed.x0)
    transient, keep = cfg.steps()
    bound = escape_threshold(a_w)
    kernel = kernels.column_double if ar.native else _fallback.column_double
    kept, escaped_at, escaped_x = kernel(a_w, x0, transient, keep, bound)
    if escaped_at is not None:
        return [DiagramPoint(a, escaped_at, escaped_x, True)]
    return [DiagramPoint(a, transient + 1 + i, x) for i, x in enumerate(kept)]


def build_diagram(cfg, jobs=1):
    """All diagram points, ordered by ``a`` then ``n``.

    Columns are independent; with ``jobs > 1`` they are computed on a
    thread pool (the compiled kernel releases the GIL). Output does not
    depend on ``jobs``.
    """
    grid = cfg.grid()
    if jobs <= 1:
        cols = [_column(cfg, a) for a in grid]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            cols = list(pool.map(lambda a: _column(cfg, a), grid))
    return [p for col in cols for p in col]


def columns(points):
    """Group consecutive points by ``a``: ``[(a, [points...]), ...]``."""
    return [(a, list(g)) for a, g in groupby(points, key=lambda p: p.a)]


def _values(col, what):
    vals = []
    a = None
    for p in col:
        if isinstance(p, DiagramPoint):
            if p.escaped:
                raise ValueError(f"{what} contains an escaped point at a={p.a!r}")
            if a is None:
                a = p.a
            elif p.a != a:
                raise ValueError(f"{what} mixes parameter values {a!r} and {p.a!r}")
            vals.append(float(p.x))
        else:
            vals.append(float(p))
    if not vals:
        raise EmptyDiagramColumn(f"{what} is empty")
    return a, sorted(vals)


def _directed(src, dst):
    # dst is sorted; nearest neighbour by bisection
    worst = 0.0
    n = len(dst)
    for v in src:
        i = bisect.bisect_left(dst, v)
        best = math.inf
        if i < n:
            best = dst[i] - v
        if i > 0:
            best = min(best, v - dst[i - 1])
        if best > worst:
            worst = best
    return worst


def diagram_distance(d1, d2):
    """Symmetric Hausdorff distance between the x-values of two columns.

    Accepts sequences of :class:`DiagramPoint` (which must share one ``a``
    and not be escaped) or plain numbers.
    """
    a1, v1 = _values(d1, "first column")
    a2, v2 = _values(d2, "second column")
    if a1 is not None and a2 is not None and a1 != a2:
        raise ValueError(f"columns are for different a: {a1!r} vs {a2!r}")
    return max(_directed(v1, v2), _directed(v2, v1))
