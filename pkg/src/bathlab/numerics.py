"""Shared numerical primitives: semi-infinite quadrature, bracketed roots,
Richardson-extrapolated derivatives.

Integrands are evaluated in batches, so they should accept numpy arrays;
plain scalar functions are detected and looped over as a fallback.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable

import numpy as np

from bathlab.errors import InvalidBracket, NonConvergence

__all__ = [
    "QuadratureSpec",
    "RootBracket",
    "integrate_semi_infinite",
    "find_root",
    "derivative",
]

# 15-point Gauss-Legendre rule on [-1, 1]; panel error estimated by halving.
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and subdivision budget for adaptive quadrature."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise ValueError("rel_tol must be positive")
        if self.abs_tol < 0.0:
            raise ValueError("abs_tol must be non-negative")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")


@dataclass(frozen=True)
class RootBracket:
    """Interval [lo, hi] with recorded endpoint values of opposite sign."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise InvalidBracket(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if not self.f_lo * self.f_hi < 0.0:
            raise InvalidBracket(
                f"no sign change: f(lo)={self.f_lo}, f(hi)={self.f_hi}"
            )

    @classmethod
    def from_function(cls, f: Callable[[float], float], lo: float, hi: float):
        return cls(lo, hi, float(f(lo)), float(f(hi)))


def _eval_batch(f, x: np.ndarray) -> np.ndarray:
    """Evaluate f on an array, looping if f only takes scalars."""
    try:
        y = np.asarray(f(x), dtype=float)
    except (TypeError, ValueError):
        y = np.array([f(v) for v in x], dtype=float)
    if y.shape != x.shape:
        y = np.array([f(v) for v in x], dtype=float)
    return y


def integrate_semi_infinite(
    f: Callable,
    spec: QuadratureSpec | None = None,
    *,
    breakpoints: tuple[float, ...] = (),
) -> float:
    """Integrate f over (0, inf) adaptively.

    The substitution w = t/(1-t) maps (0, inf) to the unit interval, which is
    then covered by panels integrated with a fixed 15-point Gauss rule; each
    panel's error is estimated by comparing against its two halves, and the
    worst panel is split until the summed estimate meets the tolerance.

    `breakpoints` are abscissae (in the original variable) used as initial
    panel edges, e.g. known feature scales of the integrand.
    """
    spec = spec or QuadratureSpec()

    def gauss(a: float, b: float) -> float:
        half = 0.5 * (b - a)
        t = 0.5 * (a + b) + half * _NODES
        w = t / (1.0 - t)
        y = _eval_batch(f, w) / (1.0 - t) ** 2
        return half * float(_WEIGHTS @ y)

    edges = [0.0]
    for w in sorted(set(float(b) for b in breakpoints)):
        if w > 0.0 and np.isfinite(w):
            edges.append(w / (1.0 + w))
    edges.append(1.0)
    edges = sorted(set(edges))

    # Heap entries: (-err, seq, a, b, fine, left_half, right_half).
    heap = []
    seq = 0
    total = 0.0
    err_total = 0.0

    def make_panel(a: float, b: float, coarse: float):
        nonlocal seq, total, err_total
        m = 0.5 * (a + b)
        left = gauss(a, m)
        right = gauss(m, b)
        fine = left + right
        if not np.isfinite(fine):
            raise NonConvergence(
                f"integrand not finite on panel t in [{a}, {b}]"
            )
        err = abs(coarse - fine)
        total += fine
        err_total += err
        heapq.heappush(heap, (-err, seq, a, b, fine, left, right))
        seq += 1

    for a, b in zip(edges[:-1], edges[1:]):
        make_panel(a, b, gauss(a, b))

    splits = 0
    while err_total > max(spec.abs_tol, spec.rel_tol * abs(total)):
        if splits >= spec.max_subdivisions:
            raise NonConvergence(
                f"error estimate {err_total:.3e} above tolerance after "
                f"{splits} subdivisions"
            )
        neg_err, _, a, b, fine, left, right = heapq.heappop(heap)
        total -= fine
        err_total += neg_err  # removes the popped panel's error
        m = 0.5 * (a + b)
        make_panel(a, m, left)
        make_panel(m, b, right)
        splits += 1

    return total


def find_root(f: Callable[[float], float], bracket: RootBracket, tol: float) -> float:
    """Locate the root enclosed by `bracket` to a bracket width <= tol.

    Alternates secant steps with bisection; the bracket is maintained at
    every step, so the result is guaranteed to lie inside the initial one.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    lo, hi, f_lo, f_hi = bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi
    for it in range(500):
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
        if it % 2 == 0 and f_hi != f_lo:
            x = hi - f_hi * (hi - lo) / (f_hi - f_lo)
            if not lo < x < hi:
                x = 0.5 * (lo + hi)
        else:
            x = 0.5 * (lo + hi)
        fx = float(f(x))
        if fx == 0.0:
            return x
        if f_lo * fx < 0.0:
            hi, f_hi = x, fx
        else:
            lo, f_lo = x, fx
    raise NonConvergence("root bracket did not shrink to tolerance")


def derivative(f: Callable, x: float, h0: float):
    """Central-difference derivative with one Richardson step (O(h0^4))."""
    if not h0 > 0.0:
        raise ValueError("h0 must be positive")
    d1 = (f(x + h0) - f(x - h0)) / (2.0 * h0)
    h = 0.5 * h0
    d2 = (f(x + h) - f(x - h)) / (2.0 * h)
    return (4.0 * d2 - d1) / 3.0
