"""Backend selection and array-level polynomial evaluators.

At import time the compiled Cython kernel is preferred; if it is not
built (or ``MORSEFLOW_PURE_PYTHON=1`` is set) the numpy fallback in
:mod:`morseflow._kernels_py` is used instead.  Both expose the same
functions, and ``benchmarks/bench_kernels.py`` compares them.
"""

from __future__ import annotations

import os

import numpy as np

from .polynomials import Polynomial

if os.environ.get("MORSEFLOW_PURE_PYTHON"):
    from . import _kernels_py as _backend
else:
    try:
        from . import _kernels as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _backend


def backend_name() -> str:
    return _backend.BACKEND


def _term_arrays(poly: Polynomial):
    n_vars = len(poly.variables)
    if not poly.terms:
        return (np.zeros((1, n_vars), dtype=np.int64), np.zeros(1))
    exps = np.array(sorted(poly.terms), dtype=np.int64)
    coeffs = np.array([float(poly.terms[tuple(e)]) for e in exps])
    return np.ascontiguousarray(exps), np.ascontiguousarray(coeffs)


class PolyEvaluator:
    """Float evaluation of one polynomial at batches of points."""

    def __init__(self, poly: Polynomial):
        self.n_vars = len(poly.variables)
        self.exps, self.coeffs = _term_arrays(poly)

    def values(self, points: np.ndarray) -> np.ndarray:
        points = np.ascontiguousarray(points, dtype=np.float64)
        if points.ndim == 1:
            points = points[None, :]
        return _backend.eval_terms(self.exps, self.coeffs, points)

    def value(self, point) -> float:
        return float(self.values(np.asarray(point, dtype=np.float64))[0])


class GradedEvaluator:
    """Value, gradient and Hessian of a polynomial, batched over points.

    The derivative polynomials are formed once, exactly, and evaluated
    through the selected kernel.
    """

    def __init__(self, poly: Polynomial):
        self.n_vars = len(poly.variables)
        self.value_eval = PolyEvaluator(poly)
        grads = [poly.diff(i) for i in range(self.n_vars)]
        self.grad_evals = [PolyEvaluator(g) for g in grads]
        # upper triangle only; the Hessian of a polynomial is symmetric
        self.hess_evals = {}
        for i in range(self.n_vars):
            for j in range(i, self.n_vars):
                self.hess_evals[(i, j)] = PolyEvaluator(grads[i].diff(j))

    def values(self, points) -> np.ndarray:
        return self.value_eval.values(points)

    def gradients(self, points) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=np.float64))
        out = np.empty((points.shape[0], self.n_vars))
        for i, ev in enumerate(self.grad_evals):
            out[:, i] = ev.values(points)
        return out

    def hessians(self, points) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=np.float64))
        out = np.empty((points.shape[0], self.n_vars, self.n_vars))
        for (i, j), ev in self.hess_evals.items():
            vals = ev.values(points)
            out[:, i, j] = vals
            out[:, j, i] = vals
        return out


def monomial_table(exps: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Matrix of monomial values, for reuse across coefficient updates."""
    exps = np.ascontiguousarray(exps, dtype=np.int64)
    points = np.ascontiguousarray(points, dtype=np.float64)
    return _backend.term_matrix(exps, points)
