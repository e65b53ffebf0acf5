"""Kernel selection: compiled extension when built, pure Python otherwise."""

try:
    from cslie._ikernels import imat_charpoly, imat_det, imat_mul, imat_rank

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    from cslie._ikernels_py import imat_charpoly, imat_det, imat_mul, imat_rank

    BACKEND = "python"

__all__ = ["imat_mul", "imat_rank", "imat_det", "imat_charpoly", "BACKEND"]
