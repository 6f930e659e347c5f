"""The main equation of the inverse problem: q -> W and back.

W is the function the spectrum determines; the potential solves
    W(x) = ((-1)^(alpha*beta)/2) Q^{-1} A R q(x)
with A the frozen matrix.  The forward map is implemented twice (explicit
three-branch formula and matrix form) so each can serve as the other's
oracle; the inverse solve decouples into one k x k linear system per grid
point of (0, b).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core_params import Kind, ProblemConfig, classify, sign_pair
from .frozen_matrix import build_matrix, kernel
from .interval_ops import GridFunction, SubintervalVector, q_apply, q_inverse, r_apply, r_inverse


class InconsistentSystemError(ValueError):
    """W is not attainable by the forward map (degenerate case)."""


@dataclass(frozen=True, eq=False)
class MainEqSolution:
    particular: GridFunction
    kernel_generator: GridFunction | None
    degenerate: bool


def _check_grid(f: GridFunction, config: ProblemConfig) -> None:
    if f.k != config.k:
        raise ValueError(f"grid has k={f.k} but config needs k={config.k}")
    if config.k >= 2 and 2 * config.j > config.k:
        raise ValueError("config must be normalized (2j <= k); apply normalize_to_half first")


def forward_w_direct(q: GridFunction, config: ProblemConfig) -> GridFunction:
    """W from q by the explicit piecewise formula.

    With a = j/k, prefactor p = (-1)^(alpha*beta)/2:
      W(x) = p (q(1-a+x) + d q(1-a-x))        on (0, a)
             p (c q(1+a-x) + d q(1-a-x))      on (a, 1-a)
             p c (q(1+a-x) + q(x-1+a))        on (1-a, 1)
    All arguments land exactly on grid midpoints.
    """
    _check_grid(q, config)
    s = sign_pair(config)
    c, d = s.c, s.d
    jm = config.j * q.m
    n = q.k * q.m
    pref = 0.5 * (-1) ** (config.alpha * config.beta)
    v = q.values
    out = np.empty(n, dtype=complex)
    head = np.arange(jm)
    out[head] = pref * (v[n - jm + head] + d * v[n - jm - head - 1])
    mid = np.arange(jm, n - jm)
    out[mid] = pref * (c * v[n + jm - mid - 1] + d * v[n - jm - mid - 1])
    tail = np.arange(n - jm, n)
    out[tail] = pref * c * (v[n + jm - tail - 1] + v[tail - n + jm])
    return GridFunction(q.k, q.m, out)


def forward_w_matrix(q: GridFunction, config: ProblemConfig) -> GridFunction:
    """W from q via the matrix form p Q^{-1} A R q."""
    _check_grid(q, config)
    a = build_matrix(config).as_array(float)
    pref = 0.5 * (-1) ** (config.alpha * config.beta)
    chopped = r_apply(q, config.j)
    mixed = pref * (a @ chopped.components)
    return q_inverse(SubintervalVector(q.k, q.m, mixed))


def solve_inverse(
    w: GridFunction,
    config: ProblemConfig,
    residual_rtol: float = 1e-9,
) -> MainEqSolution:
    """Solve the main equation for q given W.

    Per grid point t of (0, b) this solves A (Rq)(t) = 2 (-1)^(alpha*beta)
    (QW)(t).  Non-degenerate configs get the unique solution; degenerate
    ones get the minimum-norm least-squares representative plus the kernel
    direction R^{-1}(X * 1), with consistency enforced via the relative
    residual (<= residual_rtol * ||rhs||, else InconsistentSystemError
    naming the worst grid point).
    """
    _check_grid(w, config)
    if config.k == 1 and config.alpha == 0:
        raise ValueError(
            "with a = 0 and a Dirichlet condition at 0 the forward map is "
            "identically zero, so W determines nothing about the potential"
        )
    a = build_matrix(config).as_array(float)
    rhs = 2.0 * (-1) ** (config.alpha * config.beta) * q_apply(w).components
    degenerate = classify(config).kind is Kind.DEGENERATE
    if not degenerate:
        sol = np.linalg.solve(a, rhs)
        particular = r_inverse(SubintervalVector(w.k, w.m, sol), config.j)
        return MainEqSolution(particular, None, False)

    sol, *_ = np.linalg.lstsq(a, rhs, rcond=None)
    resid = np.abs(a @ sol - rhs).max(axis=0)
    scale = max(np.abs(rhs).max(), 1e-300)
    worst = int(np.argmax(resid))
    if resid[worst] > residual_rtol * scale:
        t_worst = (worst + 0.5) / (w.k * w.m)
        raise InconsistentSystemError(
            f"W is not attainable: relative residual {resid[worst] / scale:.3e} "
            f"at grid point t={t_worst:.6f} exceeds {residual_rtol:.1e}"
        )
    particular = r_inverse(SubintervalVector(w.k, w.m, sol), config.j)
    x = np.array(kernel(config).generator, dtype=complex)
    gen = r_inverse(
        SubintervalVector(w.k, w.m, np.outer(x, np.ones(w.m))), config.j
    )
    return MainEqSolution(particular, gen, True)
