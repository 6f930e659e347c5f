"""Characteristic function of the boundary value problem, by three routes.

Route 1 (delta_direct) builds the 2x2 boundary determinant from the
fundamental solutions
    C(x) = cos rho(x-a) + int_a^x sin(rho(x-t))/rho q(t) dt,
    S(x) = sin(rho(x-a))/rho,          rho^2 = lambda,
with composite midpoint quadrature on the shared grid.  Route 2
(delta_from_w) integrates W against the trig kernels.  Route 3
(delta_from_spectrum) evaluates the canonical infinite product over a
truncated spectrum, pairing each retained factor with the matching
zero-potential factor so the tail is exactly 1 under
lambda_n = lambda_n^0.

All formulas are even in rho, so the principal square root is immaterial.
Kernels switch to Taylor series below |rho| = 1e-3 where sin(rho s)/rho
would cancel badly.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .core_params import ProblemConfig
from .interval_ops import GridFunction

RHO_SERIES_THRESHOLD = 1e-3
_SERIES_TERMS = 8


class RootConvergenceError(RuntimeError):
    """Newton/secant search failed for one eigenvalue index."""


class EigenvalueCollisionError(RuntimeError):
    """Two asymptotic indices converged onto the same root."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in asymptotic order, lambda_n ~ (n - (alpha+beta)/2)^2 pi^2."""

    alpha: int
    beta: int
    eigenvalues: tuple[complex, ...]

    @property
    def count(self) -> int:
        return len(self.eigenvalues)

    @property
    def index_offset(self) -> float:
        return (self.alpha + self.beta) / 2

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "eigenvalues": [[z.real, z.imag] for z in self.eigenvalues],
        }

    @staticmethod
    def from_dict(d: dict) -> "Spectrum":
        evs = tuple(complex(re, im) for re, im in d["eigenvalues"])
        return Spectrum(int(d["alpha"]), int(d["beta"]), evs)

    def dump(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, indent=1)
            fh.write("\n")

    @staticmethod
    def load(path) -> "Spectrum":
        with open(path) as fh:
            return Spectrum.from_dict(json.load(fh))


def asymptotic_eigenvalue(alpha: int, beta: int, n: int) -> float:
    """Zero-potential eigenvalue (n - (alpha+beta)/2)^2 pi^2, n >= 1."""
    return (n - (alpha + beta) / 2) ** 2 * math.pi**2


@dataclass(frozen=True, eq=False)
class DeltaEvaluator:
    """One callable facade over the three characteristic-function routes.

    mode "direct" evaluates from a potential, "from_w" from the reduced
    data W, "from_spectrum" from a truncated canonical product.  Built
    from consistent data the three agree up to quadrature/truncation
    error (that agreement is what the cross-route tests pin down).
    """

    mode: str
    payload: object
    alpha: int
    beta: int
    config: object = None
    n_used: int = 0

    @staticmethod
    def direct(q, config) -> "DeltaEvaluator":
        return DeltaEvaluator("direct", q, config.alpha, config.beta, config=config)

    @staticmethod
    def from_w(w, alpha: int, beta: int) -> "DeltaEvaluator":
        return DeltaEvaluator("from_w", w, alpha, beta)

    @staticmethod
    def from_spectrum(spec: "Spectrum", n_used: int) -> "DeltaEvaluator":
        return DeltaEvaluator("from_spectrum", spec, spec.alpha, spec.beta, n_used=n_used)

    def __call__(self, lam: complex) -> complex:
        if self.mode == "direct":
            return delta_direct(self.payload, self.config, lam)
        if self.mode == "from_w":
            return delta_from_w(self.payload, self.alpha, self.beta, lam)
        if self.mode == "from_spectrum":
            return delta_from_spectrum(self.payload, self.n_used, lam)
        raise ValueError(f"unknown mode {self.mode!r}")


def _sqrt_lambda(lam: complex) -> complex:
    return cmath.sqrt(lam)


def _ksin(s, rho: complex):
    """sin(rho*s)/rho, elementwise; Taylor series for small |rho|."""
    if abs(rho) >= RHO_SERIES_THRESHOLD:
        return np.sin(rho * s) / rho
    t = (rho * s) ** 2
    acc = (-1) ** (_SERIES_TERMS - 1) / math.factorial(2 * _SERIES_TERMS - 1)
    for n in range(_SERIES_TERMS - 2, -1, -1):
        acc = acc * t + (-1) ** n / math.factorial(2 * n + 1)
    return s * acc


def _kcosm1(s, rho: complex):
    """(cos(rho*s) - 1)/rho^2, elementwise; series for small |rho|."""
    if abs(rho) >= RHO_SERIES_THRESHOLD:
        return (np.cos(rho * s) - 1.0) / rho**2
    t = (rho * s) ** 2
    acc = (-1) ** _SERIES_TERMS / math.factorial(2 * _SERIES_TERMS)
    for n in range(_SERIES_TERMS - 1, 0, -1):
        acc = acc * t + (-1) ** n / math.factorial(2 * n)
    return s**2 * acc


def _dsinc_dlam(lam: complex) -> complex:
    """d/dlambda of sin(rho)/rho = (rho cos rho - sin rho)/(2 rho^3)."""
    rho = _sqrt_lambda(lam)
    if abs(rho) >= RHO_SERIES_THRESHOLD:
        return (rho * cmath.cos(rho) - cmath.sin(rho)) / (2 * rho**3)
    acc = 0.0 + 0.0j
    for n in range(_SERIES_TERMS, 0, -1):
        acc = acc * lam + (-1) ** n * n / math.factorial(2 * n + 1)
    return acc


def delta_direct(q: GridFunction, config: ProblemConfig, lam: complex) -> complex:
    """Characteristic determinant evaluated straight from the potential."""
    if q.k != config.k:
        raise ValueError(f"grid has k={q.k} but config needs k={config.k}")
    rho = _sqrt_lambda(lam)
    a = config.j / config.k
    x = q.midpoints()
    h = q.h
    jm = config.j * q.m
    head_x, head_q = x[:jm], q.values[:jm]
    tail_x, tail_q = x[jm:], q.values[jm:]

    c0 = cmath.cos(rho * a) + h * np.sum(_ksin(head_x, rho) * head_q)
    c1 = cmath.cos(rho * (1 - a)) + h * np.sum(_ksin(1 - tail_x, rho) * tail_q)
    cp0 = lam * _ksin(a, rho) - h * np.sum(np.cos(rho * head_x) * head_q)
    cp1 = -lam * _ksin(1 - a, rho) + h * np.sum(np.cos(rho * (1 - tail_x)) * tail_q)
    s0 = -_ksin(a, rho)
    s1 = _ksin(1 - a, rho)
    sp0 = cmath.cos(rho * a)
    sp1 = cmath.cos(rho * (1 - a))

    top = (c0, s0) if config.alpha == 0 else (cp0, sp0)
    bot = (c1, s1) if config.beta == 0 else (cp1, sp1)
    return complex(top[0] * bot[1] - top[1] * bot[0])


def delta_from_w(w: GridFunction, alpha: int, beta: int, lam: complex) -> complex:
    """Characteristic determinant from W.

    alpha != beta:  (-1)^alpha cos rho + int W(x) sin(rho x)/rho dx
    (1,1):          rho sin rho + int W(x) cos(rho x) dx
    (0,0):          sin(rho)/rho + int W(x) cos(rho x)/rho^2 dx, computed
                    with the mean of W split off; for |rho| below the
                    series threshold the mean term is dropped, which is the
                    entire continuation valid for zero-mean W (every W in
                    the range of the forward map has zero mean).
    """
    rho = _sqrt_lambda(lam)
    x = w.midpoints()
    h = w.h
    if alpha != beta:
        quad = h * np.sum(w.values * _ksin(x, rho))
        return complex((-1) ** alpha * cmath.cos(rho) + quad)
    if alpha == 1:
        quad = h * np.sum(w.values * np.cos(rho * x))
        return complex(lam * _ksin(1.0, rho) + quad)
    quad = h * np.sum(w.values * _kcosm1(x, rho))
    val = _ksin(1.0, rho) + quad
    if abs(rho) >= RHO_SERIES_THRESHOLD:
        val = val + h * np.sum(w.values) / lam
    return complex(val)


def zero_potential_delta(alpha: int, beta: int, lam: complex) -> complex:
    """Closed-form characteristic function of the zero potential."""
    rho = _sqrt_lambda(lam)
    if alpha != beta:
        return complex((-1) ** alpha * cmath.cos(rho))
    if alpha == 0:
        return complex(_ksin(1.0, rho))
    return complex(lam * _ksin(1.0, rho))


def zero_potential_delta_dlam(alpha: int, beta: int, lam: complex) -> complex:
    """d/dlambda of the zero-potential characteristic function."""
    rho = _sqrt_lambda(lam)
    if alpha != beta:
        return complex((-1) ** (alpha + 1) * 0.5 * _ksin(1.0, rho))
    if alpha == 0:
        return _dsinc_dlam(lam)
    return complex(_ksin(1.0, rho) + lam * _dsinc_dlam(lam))


def _find_root(f, lam0: complex, index: int, max_iter: int = 60) -> complex:
    """Newton with numeric derivative; secant fallback on stagnation."""
    x = complex(lam0)
    fx = f(x)
    prev_x = prev_f = None
    stagnant = 0
    for _ in range(max_iter):
        h = 1e-6 * (1.0 + abs(x))
        df = (f(x + h) - f(x - h)) / (2 * h)
        if (stagnant >= 2 or df == 0) and prev_x is not None and fx != prev_f:
            step = fx * (x - prev_x) / (fx - prev_f)
        elif df != 0:
            step = fx / df
        else:
            step = h
        x_new = x - step
        f_new = f(x_new)
        stagnant = stagnant + 1 if abs(f_new) > 0.7 * abs(fx) else 0
        prev_x, prev_f = x, fx
        x, fx = x_new, f_new
        if abs(step) <= 1e-12 * (1.0 + abs(x)):
            return x
    raise RootConvergenceError(
        f"eigenvalue index {index}: no convergence after {max_iter} iterations "
        f"(last residual {abs(fx):.3e} at lambda={x})"
    )


def eigenvalues(q: GridFunction, config: ProblemConfig, count: int) -> Spectrum:
    """First `count` eigenvalues, seeded from the zero-potential asymptotes.

    Roots are polished by Newton on delta_direct and returned in asymptotic
    order; non-convergence raises RootConvergenceError with the index, and
    two indices landing on one root raise EigenvalueCollisionError (densify
    the grid or perturb the potential in that case).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    f = lambda lam: delta_direct(q, config, lam)
    roots = []
    for n in range(1, count + 1):
        lam0 = asymptotic_eigenvalue(config.alpha, config.beta, n)
        roots.append(_find_root(f, lam0, n))
    order = sorted(range(count), key=lambda i: (roots[i].real, roots[i].imag))
    for u, v in zip(order, order[1:]):
        if abs(roots[u] - roots[v]) <= 1e-8 * (1.0 + abs(roots[u])):
            raise EigenvalueCollisionError(
                f"indices {u + 1} and {v + 1} converged to the same root {roots[u]}"
            )
    return Spectrum(config.alpha, config.beta, tuple(roots))


def delta_from_spectrum(spec: Spectrum, n_used: int, lam: complex) -> complex:
    """Truncated canonical product for the characteristic function.

    Delta(lam) ~ Delta_0(lam) * prod_{n<=N} (lambda_n - lam)/(lambda_n^0 - lam),
    which keeps every tail factor exactly 1 under lambda_n = lambda_n^0.
    When lam coincides with a retained lambda_n^0 the 0/0 pair is replaced
    by its limit -Delta_0'(lam), so evaluation exactly at zero-potential
    eigenvalues is well defined.
    """
    if spec.count < n_used:
        raise ValueError(f"spectrum holds {spec.count} eigenvalues, need {n_used}")
    if n_used < 1:
        raise ValueError("n_used must be >= 1")
    a, b = spec.alpha, spec.beta
    lam = complex(lam)
    lam0 = [asymptotic_eigenvalue(a, b, n) for n in range(1, n_used + 1)]
    hit = min(range(n_used), key=lambda i: abs(lam - lam0[i]))
    if abs(lam - lam0[hit]) <= 1e-9 * (1.0 + abs(lam0[hit])):
        val = -zero_potential_delta_dlam(a, b, lam) * (spec.eigenvalues[hit] - lam)
    else:
        hit = None
        val = zero_potential_delta(a, b, lam)
    for i in range(n_used):
        if i == hit:
            continue
        val *= (spec.eigenvalues[i] - lam) / (lam0[i] - lam)
    return complex(val)


def extract_w(spec: Spectrum, modes: int, k: int, m: int, n_used: int | None = None) -> GridFunction:
    """Recover W on a (k, m) grid from the spectrum, Fourier mode by mode.

    Evaluating the product at the frequencies where the potential-free term
    of the W-representation vanishes isolates the Fourier coefficients:
      (0,0):  (pi m)^2 Delta((pi m)^2) = int W cos(pi m x) dx  (mean is 0)
      (1,1):  Delta((pi m)^2)          = int W cos(pi m x) dx
      mixed:  rho_m Delta(rho_m^2)     = int W sin(rho_m x) dx,
              rho_m = (m - 1/2) pi.
    W is synthesized in the basis {1, 2 cos(pi m x)} or {2 sin(rho_m x)};
    n_used >= 4*modes is a good rule of thumb.
    """
    if modes < 1:
        raise ValueError("modes must be >= 1")
    if n_used is None:
        n_used = spec.count
    need = modes + 1 if (spec.alpha, spec.beta) == (1, 1) else modes
    if n_used < need:
        raise ValueError(f"need at least {need} eigenvalues for {modes} modes, have {n_used}")
    if modes >= k * m:
        raise ValueError(f"modes={modes} would alias on a {k}x{m} grid")
    x = (np.arange(k * m) + 0.5) / (k * m)
    w = np.zeros(k * m, dtype=complex)
    a, b = spec.alpha, spec.beta
    if a == b:
        if a == 1:
            w += delta_from_spectrum(spec, n_used, 0.0)  # mean of W
        for mm in range(1, modes + 1):
            lam = (math.pi * mm) ** 2
            coef = delta_from_spectrum(spec, n_used, lam)
            if a == 0:
                coef *= lam
            w += 2.0 * coef * np.cos(math.pi * mm * x)
    else:
        for mm in range(1, modes + 1):
            rho = (mm - 0.5) * math.pi
            coef = rho * delta_from_spectrum(spec, n_used, rho**2)
            w += 2.0 * coef * np.sin(rho * x)
    return GridFunction(k, m, w)
