"""Pure-Python double-precision kernels.

Reference semantics for ``_kernels.pyx``; both must agree bit for bit.
The code only uses ``-``, ``*``, ``abs`` and comparisons, so the same
functions also drive HPFloat orbits.
Each step is ``a - x * x`` with two separately rounded operations.
"""


def orbit_double(a, x0, n, bound):
    """Iterate ``n`` steps from ``x0``, stopping once ``|x_k| > bound``.

    Returns ``(values, escaped_at)`` where ``values`` holds ``x_0..x_m``
    and ``escaped_at`` is ``m`` if the orbit escaped, else ``None``.
    """
    x = x0
    values = [x]
    if abs(x) > bound:
        return values, 0
    append = values.append
    for k in range(1, n + 1):
        x = a - x * x
        append(x)
        if abs(x) > bound:
            return values, k
    return values, None


def column_double(a, x0, transient, keep, bound):
    """Iterate ``transient + keep`` steps and return the last ``keep`` values.

    Returns ``(kept, escaped_at, escaped_value)``; on escape ``kept`` is
    empty and the other two fields describe the first out-of-bound iterate.
    """
    x = x0
    if abs(x) > bound:
        return [], 0, x
    for k in range(1, transient + 1):
        x = a - x * x
        if abs(x) > bound:
            return [], k, x
    kept = []
    append = kept.append
    for k in range(transient + 1, transient + keep + 1):
        x = a - x * x
        if abs(x) > bound:
            return [], k, x
        append(x)
    return kept, None, None


def divergence_double(a, x0, x_star, eps, n_max):
    """First ``n >= 1`` with ``|x_n - x_star| > eps``.

    Returns ``(index, max_deviation_before, iterates_computed)``; ``index``
    is ``None`` when the orbit stays inside the ball for ``n_max`` steps.
    """
    x = x0
    worst = 0.0
    for k in range(1, n_max + 1):
        x = a - x * x
        d = abs(x - x_star)
        if d > eps:
            return k, worst, k
        if d > worst:
            worst = d
    return None, worst, n_max
