# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled double-precision kernels; semantics mirror ``_fallback.py``.

Built with ``-ffp-contract=off`` so ``a - x * x`` is never fused into an
FMA, which would change the rounding and break parity with the fallback.
"""

from libc.math cimport fabs
from libc.stdlib cimport free, malloc


def orbit_double(double a, double x0, Py_ssize_t n, double bound):
    cdef double *buf = <double *> malloc((n + 1) * sizeof(double))
    cdef Py_ssize_t k, m = n, escaped = -1
    cdef double x = x0
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            buf[0] = x
            if fabs(x) > bound:
                escaped = 0
                m = 0
            else:
                for k in range(1, n + 1):
                    x = a - x * x
                    buf[k] = x
                    if fabs(x) > bound:
                        escaped = k
                        m = k
                        break
        values = [buf[k] for k in range(m + 1)]
    finally:
        free(buf)
    return values, (None if escaped < 0 else escaped)


def column_double(double a, double x0, Py_ssize_t transient, Py_ssize_t keep,
                  double bound):
    cdef double *buf = <double *> malloc((keep if keep > 0 else 1) * sizeof(double))
    cdef Py_ssize_t k, escaped = -1
    cdef double x = x0
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            if fabs(x) > bound:
                escaped = 0
            else:
                for k in range(1, transient + 1):
                    x = a - x * x
                    if fabs(x) > bound:
                        escaped = k
                        break
                if escaped < 0:
                    for k in range(keep):
                        x = a - x * x
                        if fabs(x) > bound:
                            escaped = transient + 1 + k
                            break
                        buf[k] = x
        if escaped >= 0:
            return [], escaped, x
        kept = [buf[k] for k in range(keep)]
    finally:
        free(buf)
    return kept, None, None


def divergence_double(double a, double x0, double x_star, double eps,
                      Py_ssize_t n_max):
    cdef Py_ssize_t k, index = -1
    cdef double x = x0, d, worst = 0.0
    with nogil:
        for k in range(1, n_max + 1):
            x = a - x * x
            d = fabs(x - x_star)
            if d > eps:
                index = k
                break
            if d > worst:
                worst = d
    if index < 0:
        return None, worst, n_max
    return index, worst, index
