"""Derivative-free simplex minimizer (Nelder-Mead).

Implements the classic reflect / expand / contract / shrink loop with the
standard coefficient choices rho = 1, chi = 2, gamma = 0.5, sigma = 0.5 and
the customary initial simplex built by stepping each coordinate of the start
point by 5 percent of its magnitude (0.00025 for zero coordinates).  The
iteration stops when the simplex diameter drops below ``x_tol``, the spread
of function values drops below ``f_tol``, or ``max_iters`` is reached; the
best vertex seen is returned and never regresses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["NmOptions", "nelder_mead"]


@dataclass
class NmOptions:
    """Options for :func:`nelder_mead` and its callers.

    ``max_iters`` defaults to 200 * dim when left as None.  ``restarts`` and
    ``seed`` are consumed by callers that run multi-start searches; a single
    :func:`nelder_mead` call is fully deterministic and uses neither.
    """

    max_iters: int | None = None
    x_tol: float = 1e-6
    f_tol: float = 1e-8
    restarts: int = 5
    seed: int = 0
    reflection: float = 1.0
    expansion: float = 2.0
    contraction: float = 0.5
    shrink: float = 0.5


def _initial_simplex(x0: np.ndarray) -> np.ndarray:
    dim = x0.size
    simplex = np.tile(x0, (dim + 1, 1))
    for i in range(dim):
        if x0[i] != 0.0:
            simplex[i + 1, i] = 1.05 * x0[i]
        else:
            simplex[i + 1, i] = 0.00025
    return simplex


def nelder_mead(objective, x0, opt: NmOptions | None = None) -> tuple[np.ndarray, float]:
    """Minimize ``objective`` from start point ``x0``; returns (x, fval)."""
    if opt is None:
        opt = NmOptions()
    x0 = np.asarray(x0, dtype=float).ravel()
    dim = x0.size
    if dim < 1:
        raise ValueError("nelder_mead needs at least one variable")
    for name in ("reflection", "expansion", "contraction", "shrink"):
        if getattr(opt, name) <= 0.0:
            raise ValueError(f"coefficient {name} must be positive")
    max_iters = opt.max_iters if opt.max_iters is not None else 200 * dim
    rho, chi = opt.reflection, opt.expansion
    gamma, sigma = opt.contraction, opt.shrink

    simplex = _initial_simplex(x0)
    fvals = np.array([float(objective(v)) for v in simplex])

    for _ in range(max_iters):
        order = np.argsort(fvals, kind="stable")
        simplex = simplex[order]
        fvals = fvals[order]
        diameter = float(np.max(np.abs(simplex[1:] - simplex[0]))) if dim else 0.0
        spread = float(fvals[-1] - fvals[0])
        if diameter < opt.x_tol or spread < opt.f_tol:
            break

        centroid = simplex[:-1].mean(axis=0)
        worst = simplex[-1]
        xr = centroid + rho * (centroid - worst)
        fr = float(objective(xr))
        if fr < fvals[0]:
            xe = centroid + rho * chi * (centroid - worst)
            fe = float(objective(xe))
            if fe < fr:
                simplex[-1], fvals[-1] = xe, fe
            else:
                simplex[-1], fvals[-1] = xr, fr
        elif fr < fvals[-2]:
            simplex[-1], fvals[-1] = xr, fr
        else:
            if fr < fvals[-1]:
                xc = centroid + rho * gamma * (centroid - worst)
                fc = float(objective(xc))
                accept = fc <= fr
            else:
                xc = centroid - gamma * (centroid - worst)
                fc = float(objective(xc))
                accept = fc < fvals[-1]
            if accept:
                simplex[-1], fvals[-1] = xc, fc
            else:
                for i in range(1, dim + 1):
                    simplex[i] = simplex[0] + sigma * (simplex[i] - simplex[0])
                    fvals[i] = float(objective(simplex[i]))

    best = int(np.argmin(fvals))
    return simplex[best].copy(), float(fvals[best])
