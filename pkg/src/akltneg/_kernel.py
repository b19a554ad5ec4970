"""Eigensolver backend selection.

Prefers the compiled extension, falls back to the pure numpy
implementation.  Both expose the same jacobi_eigh signature, so the
choice is invisible to callers; BACKEND records which one is active.
"""

try:
    from ._jacobi_cy import jacobi_eigh

    BACKEND = "compiled"
except ImportError:  # extension not built on this platform
    from ._jacobi_py import jacobi_eigh

    BACKEND = "python"

__all__ = ["jacobi_eigh", "BACKEND"]
