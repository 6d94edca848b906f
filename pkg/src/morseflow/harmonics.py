"""Explicit polynomial bases for the Laplace-Beltrami eigenspaces.

On RP^n the level-j eigenspace is spanned by homogeneous harmonic
polynomials of degree 2j in the n+1 ambient coordinates; on CP^n by
real-valued bi-homogeneous harmonic polynomials of bi-degree (j, j),
expanded here into the 2n+2 real coordinates.  Level 1 uses the explicit
classical generating sets; higher levels solve the harmonicity
constraint by exact rational elimination.  Every returned element is
scaled to unit L2 norm by an exact dyadic rational, so harmonicity
remains an exact symbolic identity after normalization.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from .polynomials import (Polynomial, _monomial_integral_fraction,
                          l2_inner_product, real_variables, sphere_volume)
from .spaces import REAL, Space, eigenvalue


def _monomials(nvars: int, degree: int) -> List[Tuple[int, ...]]:
    """All exponent tuples of the given total degree, in lexicographic order."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree + 1):
        for rest in _monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return sorted(out)


def _rational_nullspace(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Nullspace basis of the matrix given by `rows`, by exact RREF."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(matrix)):
            if matrix[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        inv = 1 / matrix[r][c]
        matrix[r] = [x * inv for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            vec[p] = -matrix[row_idx][f]
        basis.append(vec)
    return basis


# -- real projective spaces ---------------------------------------------


def _real_level_one(space: Space) -> List[Polynomial]:
    # classical generators: x_i x_j (i<j), then x_i^2 - x_{n+1}^2 (i <= n)
    variables = real_variables(space)
    m = space.n + 1
    basis = []
    for i in range(m):
        for j in range(i + 1, m):
            basis.append(Polynomial.variable(variables, i)
                         * Polynomial.variable(variables, j))
    last_sq = Polynomial.variable(variables, m - 1) ** 2
    for i in range(m - 1):
        basis.append(Polynomial.variable(variables, i) ** 2 - last_sq)
    return basis


def _real_level(space: Space, j: int) -> List[Polynomial]:
    variables = real_variables(space)
    m = space.n + 1
    degree = 2 * j
    monos = _monomials(m, degree)
    index = {mo: k for k, mo in enumerate(monos)}
    out_monos = _monomials(m, degree - 2)
    rows = [[Fraction(0)] * len(monos) for _ in out_monos]
    out_index = {mo: k for k, mo in enumerate(out_monos)}
    for col, mo in enumerate(monos):
        for v in range(m):
            e = mo[v]
            if e < 2:
                continue
            lowered = list(mo)
            lowered[v] = e - 2
            rows[out_index[tuple(lowered)]][col] += e * (e - 1)
    null = _rational_nullspace(rows, len(monos))
    _check_nullity(rows, len(monos), len(null))
    basis = []
    for vec in null:
        terms = {mo: c for mo, c in zip(monos, vec) if c != 0}
        basis.append(Polynomial(variables, terms))
    del index
    return basis


# -- complex projective spaces -------------------------------------------
#
# Real-valued bi-degree (k, k) polynomials are spanned by
#   E(a, a)      = z^a conj(z)^a,
#   E+(a, b)     = z^a conj(z)^b + z^b conj(z)^a        (a > b),
#   E-(a, b)     = i (z^a conj(z)^b - z^b conj(z)^a)    (a > b),
# and 4 sum_i d/dz_i d/dconj(z)_i maps this spanning set to the level
# k-1 set with integer coefficients, so the harmonicity system is again
# rational.


def _pair_elements(m: int, k: int):
    monos = _monomials(m, k)
    diag = [(a, a) for a in monos]
    upper = [(a, b) for a in monos for b in monos if a > b]
    return diag, upper


def _zmono_real_imag(variables, alpha, beta) -> Tuple[Polynomial, Polynomial]:
    """Real and imaginary parts of z^alpha conj(z)^beta over the real
    coordinates (exact integer coefficients)."""
    re = Polynomial.constant(variables, 1)
    im = Polynomial.zero(variables)
    for slot, (a, b) in enumerate(zip(alpha, beta)):
        x = Polynomial.variable(variables, 2 * slot)
        y = Polynomial.variable(variables, 2 * slot + 1)
        for _ in range(a):
            re, im = re * x - im * y, re * y + im * x
        for _ in range(b):
            re, im = re * x + im * y, im * x - re * y
    return re, im


@lru_cache(maxsize=None)
def _pair_expansions(space: Space, k: int) -> Dict[tuple, Polynomial]:
    """Real-coordinate expansions of the paired (k, k) spanning set."""
    variables = real_variables(space)
    diag, upper = _pair_elements(space.n + 1, k)
    out = {}
    for a, _ in diag:
        re, _im = _zmono_real_imag(variables, a, a)
        out[("d", a)] = re
    for a, b in upper:
        re, im = _zmono_real_imag(variables, a, b)
        out[("+", a, b)] = 2 * re
        out[("-", a, b)] = -2 * im
    return out


def _complex_pair_keys(m: int, k: int) -> List[tuple]:
    diag, upper = _pair_elements(m, k)
    keys = [("d", a) for a, _ in diag]
    keys += [("+", a, b) for a, b in upper]
    keys += [("-", a, b) for a, b in upper]
    return keys


def _complex_laplacian_rows(m: int, k: int):
    """Rows of the harmonicity system over the paired spanning sets."""
    cols = _complex_pair_keys(m, k)
    col_index = {key: i for i, key in enumerate(cols)}
    out_keys = _complex_pair_keys(m, k - 1)
    out_index = {key: i for i, key in enumerate(out_keys)}
    rows = [[Fraction(0)] * len(cols) for _ in out_keys]

    def lowered_key(sign, a, b, coeff_rows, col, factor):
        # 4 a_i b_i E(sign, a - e_i, b - e_i), normalized to a >= b order
        if a == b:
            if sign == "+":
                coeff_rows[out_index[("d", a)]][col] += 2 * factor
            elif sign == "d":
                coeff_rows[out_index[("d", a)]][col] += factor
            # "-" with a == b vanishes identically
            return
        if a > b:
            key = (sign, a, b)
            flip = 1
        else:
            key = (sign, b, a)
            flip = -1 if sign == "-" else 1
        coeff_rows[out_index[key]][col] += factor * flip

    for col, key in enumerate(cols):
        sign = key[0]
        a = key[1]
        b = key[1] if sign == "d" else key[2]
        for v in range(m):
            if a[v] == 0 or b[v] == 0:
                continue
            factor = 4 * a[v] * b[v]
            a2 = list(a)
            b2 = list(b)
            a2[v] -= 1
            b2[v] -= 1
            lowered_key(sign if sign != "d" else "d", tuple(a2), tuple(b2),
                        rows, col, factor)
    return rows, cols


def _complex_level_one(space: Space) -> List[Polynomial]:
    # classical generators, in the order: symmetric cross terms,
    # antisymmetric cross terms, diagonal differences
    variables = real_variables(space)
    m = space.n + 1
    basis = []
    for i in range(m):
        for jj in range(i + 1, m):
            basis.append(2 * (Polynomial.variable(variables, 2 * i)
                              * Polynomial.variable(variables, 2 * jj)
                              + Polynomial.variable(variables, 2 * i + 1)
                              * Polynomial.variable(variables, 2 * jj + 1)))
    for i in range(m):
        for jj in range(i + 1, m):
            basis.append(2 * (Polynomial.variable(variables, 2 * i)
                              * Polynomial.variable(variables, 2 * jj + 1)
                              - Polynomial.variable(variables, 2 * i + 1)
                              * Polynomial.variable(variables, 2 * jj)))
    mod_last = (Polynomial.variable(variables, 2 * m - 2) ** 2
                + Polynomial.variable(variables, 2 * m - 1) ** 2)
    for i in range(m - 1):
        basis.append(Polynomial.variable(variables, 2 * i) ** 2
                     + Polynomial.variable(variables, 2 * i + 1) ** 2 - mod_last)
    for p in basis:
        p.bidegree = (1, 1)
    return basis


def _complex_level(space: Space, k: int) -> List[Polynomial]:
    m = space.n + 1
    rows, cols = _complex_laplacian_rows(m, k)
    null = _rational_nullspace(rows, len(cols))
    _check_nullity(rows, len(cols), len(null))
    expansions = _pair_expansions(space, k)
    basis = []
    for vec in null:
        poly = Polynomial.zero(real_variables(space))
        for key, c in zip(cols, vec):
            if c != 0:
                poly = poly + expansions[key] * c
        poly.bidegree = (k, k)
        basis.append(poly)
    return basis


def _check_nullity(rows, ncols, nullity):
    # cross-check the exact elimination against a rank-revealing SVD
    if not rows:
        return
    dense = np.array([[float(x) for x in row] for row in rows])
    if dense.size == 0:
        return
    svals = np.linalg.svd(dense, compute_uv=False)
    rank = int(np.sum(svals > 1e-10 * max(svals[0], 1.0)))
    if ncols - rank != nullity:
        raise RuntimeError(
            "harmonicity system rank is ambiguous: exact elimination and "
            f"floating decomposition disagree ({ncols - rank} vs {nullity})")


# -- normalization and public accessors -----------------------------------


def _norms(polys: List[Polynomial]) -> np.ndarray:
    """L2 norms over the sphere, via a shared monomial integral table."""
    support = sorted({e for p in polys for e in p.terms})
    index = {e: i for i, e in enumerate(support)}
    coeff = np.zeros((len(polys), len(support)))
    for r, p in enumerate(polys):
        for e, c in p.terms.items():
            coeff[r, index[e]] = float(c)
    m = len(polys[0].variables)
    weight = np.empty((len(support), len(support)))
    for i, a in enumerate(support):
        for j2 in range(i, len(support)):
            b = support[j2]
            val = float(_monomial_integral_fraction(
                tuple(x + y for x, y in zip(a, b))))
            weight[i, j2] = val
            weight[j2, i] = val
    weight *= math.pi ** (m // 2)
    gram = coeff @ weight @ coeff.T
    return np.sqrt(np.clip(np.diag(gram), 0.0, None))


@lru_cache(maxsize=None)
def _level_data(space: Space, j: int):
    if j < 1:
        raise ValueError("eigenspace levels start at j = 1")
    if space.kind == REAL:
        raw = _real_level_one(space) if j == 1 else _real_level(space, j)
    else:
        raw = _complex_level_one(space) if j == 1 else _complex_level(space, j)
    norms = _norms(raw)
    normalized = []
    for p, nu in zip(raw, norms):
        q = p * Fraction(1.0 / nu)  # exact dyadic scaling
        q.bidegree = p.bidegree
        normalized.append(q)
    return tuple(normalized), norms


def harmonic_basis(space: Space, j: int) -> Tuple[Polynomial, ...]:
    """Linearly independent spanning set of the level-j eigenspace.

    Every element is an exact ambient polynomial with unit L2 norm and
    identically vanishing ambient Laplacian.  Level 1 keeps the order of
    the classical generating set (cross terms first, then diagonal
    differences), which the coefficient-matrix maps rely on.
    """
    return _level_data(space, j)[0]


def basis_norms(space: Space, j: int) -> np.ndarray:
    """L2 norms of the raw (un-normalized) generators, in basis order."""
    return _level_data(space, j)[1].copy()


def eigenspace_dimension(space: Space, j: int) -> int:
    """Dimension of the level-j eigenspace.

    Level 1 has the closed forms (n^2+3n)/2 (real) and n(n+2) (complex);
    higher levels report the rank-based count of the harmonicity system.
    """
    if j < 1:
        raise ValueError("eigenspace levels start at j = 1")
    n = space.n
    if j == 1:
        expected = (n * n + 3 * n) // 2 if space.kind == REAL else n * (n + 2)
        generated = len(harmonic_basis(space, 1))
        if generated != expected:
            raise RuntimeError("level-1 basis size disagrees with closed form")
        return expected
    return len(harmonic_basis(space, j))


@lru_cache(maxsize=None)
def constant_basis(space: Space) -> Tuple[Polynomial, ...]:
    """The level-0 'basis': the constant with unit L2 norm."""
    variables = real_variables(space)
    vol = sphere_volume(space.ambient_real_dim)
    return (Polynomial.constant(variables, Fraction(1.0 / math.sqrt(vol))),)


def level_basis(space: Space, j: int) -> Tuple[Polynomial, ...]:
    return constant_basis(space) if j == 0 else harmonic_basis(space, j)


@lru_cache(maxsize=None)
def gram_matrix(space: Space, j: int) -> np.ndarray:
    """Gram matrix of the (normalized) level-j basis under the L2 pairing."""
    basis = level_basis(space, j)
    if j == 0:
        return np.array([[1.0]])
    support = sorted({e for p in basis for e in p.terms})
    index = {e: i for i, e in enumerate(support)}
    coeff = np.zeros((len(basis), len(support)))
    for r, p in enumerate(basis):
        for e, c in p.terms.items():
            coeff[r, index[e]] = float(c)
    m = space.ambient_real_dim
    weight = np.empty((len(support), len(support)))
    for i, a in enumerate(support):
        for j2 in range(i, len(support)):
            b = support[j2]
            val = float(_monomial_integral_fraction(
                tuple(x + y for x, y in zip(a, b))))
            weight[i, j2] = val
            weight[j2, i] = val
    weight *= math.pi ** (m // 2)
    gram = coeff @ weight @ coeff.T
    return 0.5 * (gram + gram.T)


def cross_level_orthogonality(space: Space, j1: int, j2: int) -> float:
    """Largest |<p, q>| between the level-j1 and level-j2 bases."""
    worst = 0.0
    for p in level_basis(space, j1):
        for q in level_basis(space, j2):
            worst = max(worst, abs(l2_inner_product(p, q)))
    return worst
