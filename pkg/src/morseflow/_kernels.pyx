# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch polynomial evaluation kernel.

Evaluating dense low-degree polynomials at thousands of points is the
inner loop of both the critical-point search and the sup-norm sampler;
this kernel does it with plain C loops (exponents are small, so repeated
multiplication beats pow()).
"""

import numpy as np

BACKEND = "compiled"


def eval_terms(long long[:, ::1] exps, double[::1] coeffs, double[:, ::1] points):
    """Evaluate sum_t coeffs[t] * x^exps[t] at each row of points."""
    cdef Py_ssize_t n_points = points.shape[0]
    cdef Py_ssize_t n_terms = exps.shape[0]
    cdef Py_ssize_t n_vars = points.shape[1]
    out = np.zeros(n_points)
    cdef double[::1] out_view = out
    cdef Py_ssize_t i, t, v
    cdef long long e
    cdef double acc, term, x
    with nogil:
        for i in range(n_points):
            acc = 0.0
            for t in range(n_terms):
                term = coeffs[t]
                for v in range(n_vars):
                    e = exps[t, v]
                    if e == 0:
                        continue
                    x = points[i, v]
                    while e > 0:
                        term *= x
                        e -= 1
                acc += term
            out_view[i] = acc
    return out


def term_matrix(long long[:, ::1] exps, double[:, ::1] points):
    """Monomial values: out[i, t] = prod_v points[i, v] ** exps[t, v]."""
    cdef Py_ssize_t n_points = points.shape[0]
    cdef Py_ssize_t n_terms = exps.shape[0]
    cdef Py_ssize_t n_vars = points.shape[1]
    out = np.empty((n_points, n_terms))
    cdef double[:, ::1] out_view = out
    cdef Py_ssize_t i, t, v
    cdef long long e
    cdef double term, x
    with nogil:
        for i in range(n_points):
            for t in range(n_terms):
                term = 1.0
                for v in range(n_vars):
                    e = exps[t, v]
                    if e == 0:
                        continue
                    x = points[i, v]
                    while e > 0:
                        term *= x
                        e -= 1
                out_view[i, t] = term
    return out
