"""Kernel backend selection: compiled extension if built, numpy otherwise."""

try:
    from bathlab._kernels._secular import solve_secular

    BACKEND = "compiled"
except ImportError:  # extension not built; use the numpy twin
    from bathlab._kernels.secular_py import solve_secular

    BACKEND = "python"

__all__ = ["solve_secular", "BACKEND"]
