"""Double-precision hot loops, compiled when available.

``BACKEND`` is ``"cython"`` when the extension imported, else ``"python"``.
Both implementations produce bit-identical results.
"""

try:
    from ._kernels import column_double, divergence_double, orbit_double

    BACKEND = "cython"
except ImportError:  # extension not built
    from ._fallback import column_double, divergence_double, orbit_double

    BACKEND = "python"

__all__ = ["BACKEND", "column_double", "divergence_double", "orbit_double"]
