"""Pure-numpy fallback for the batch polynomial evaluation kernel.

Same contract as the compiled extension ``morseflow._kernels``; selected
at import time by :mod:`morseflow.kernels` when the extension is missing
or explicitly disabled.
"""

import numpy as np

BACKEND = "python"


def term_matrix(exps, points):
    """Monomial values: out[i, t] = prod_v points[i, v] ** exps[t, v]."""
    n_points = points.shape[0]
    n_terms = exps.shape[0]
    out = np.ones((n_points, n_terms))
    for v in range(points.shape[1]):
        top = int(exps[:, v].max(initial=0))
        if top == 0:
            continue
        powers = np.empty((n_points, top + 1))
        powers[:, 0] = 1.0
        col = points[:, v]
        for e in range(1, top + 1):
            powers[:, e] = powers[:, e - 1] * col
        out *= powers[:, exps[:, v]]
    return out


def eval_terms(exps, coeffs, points):
    """Evaluate sum_t coeffs[t] * x^exps[t] at each row of points."""
    return term_matrix(exps, points) @ coeffs
