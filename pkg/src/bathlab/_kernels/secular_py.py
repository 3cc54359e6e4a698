"""Pure-Python (numpy) twin of the compiled secular-equation solver.

Same algorithm as ``_secular.pyx``: per interlacing interval, a safeguarded
Newton iteration on the pole-shifted secular function, with the sum over
bath terms vectorized. Selected automatically when the extension is not
built; roughly an order of magnitude slower at large grids.
"""

from __future__ import annotations

import numpy as np

from bathlab.errors import RootNotBracketed


def solve_secular(weights, delta: float, system_mass: float):
    """Return (u, residuals): root offsets Omega_k^2 - w_k^2 and |f|/M."""
    w = np.ascontiguousarray(weights, dtype=np.float64)
    n_modes = w.shape[0]
    u_out = np.empty(n_modes)
    res_out = np.empty(n_modes)

    delta2 = delta * delta
    idx = np.arange(1, n_modes + 1, dtype=np.int64)
    idx2 = idx * idx
    wsum = float(np.sum(w))

    for k in range(1, n_modes + 1):
        # exact integer pole distances (k^2 - n^2) * delta^2
        d_row = (k * k - idx2).astype(np.float64) * delta2

        def f_and_fp(u):
            inv = 1.0 / (d_row + u)
            t = w * inv
            return float(np.sum(t)) - system_mass, -float(np.sum(t * inv))

        interior = k < n_modes
        gap = (2.0 * k + 1.0) * delta2 if interior else wsum / system_mass
        lo = 1e-12 * ((k + 1.0) ** 2 * delta2)
        if lo >= 0.5 * gap:
            lo = 0.5e-12 * gap
        hi = gap - lo if interior else gap

        f_edge, _ = f_and_fp(lo)
        tries = 0
        while f_edge <= 0.0 and tries < 12:
            lo *= 1e-4
            f_edge, _ = f_and_fp(lo)
            tries += 1
        if f_edge <= 0.0:
            raise RootNotBracketed(
                f"secular root escaped its bracket in interval {k}"
            )

        f_edge, _ = f_and_fp(hi)
        if f_edge == 0.0:
            u_out[k - 1] = hi
            res_out[k - 1] = 0.0
            continue
        tries = 0
        while f_edge > 0.0 and tries < 12:
            hi = gap - (gap - hi) * 1e-4 if interior else hi * 2.0
            f_edge, _ = f_and_fp(hi)
            tries += 1
        if f_edge > 0.0:
            raise RootNotBracketed(
                f"secular root escaped its bracket in interval {k}"
            )

        a, b = lo, hi  # f(a) > 0 > f(b)
        x = 0.5 * (a + b)
        f, fp = f_and_fp(x)
        for _ in range(300):
            if f == 0.0:
                break
            if f > 0.0:
                a = x
            else:
                b = x
            if b - a <= 4e-16 * b:
                x = 0.5 * (a + b)
                f, fp = f_and_fp(x)
                break
            if abs(f) <= 1e-14 * system_mass:
                break
            xn = x - f / fp
            if not a < xn < b:
                xn = 0.5 * (a + b)
            x = xn
            f, fp = f_and_fp(x)
        u_out[k - 1] = x
        res_out[k - 1] = abs(f) / system_mass

    return u_out, res_out
