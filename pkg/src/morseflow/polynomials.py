"""Exact multivariate polynomials in ambient sphere coordinates.

Every eigenfunction handled by this package is a polynomial restricted to
a sphere, so one small exact engine covers all the symbolic work:
differentiation, the flat ambient Laplacian, and closed-form L2 inner
products over the sphere via the classical Gamma-function formula for
monomial integrals.

Coefficients may be int, Fraction or float (floats are converted to the
exact binary rational they represent whenever an exact result is needed,
so "float in" never silently degrades an exact computation).  Complex
coefficients are tolerated by the arithmetic for intermediate complex
work but rejected by the sphere-integral routines.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple

Exponents = Tuple[int, ...]


class Polynomial:
    """A polynomial stored as a map {exponent multi-index: coefficient}.

    Instances are treated as immutable: every operation returns a new
    polynomial and never mutates its operands.  Zero coefficients are
    never stored.
    """

    __slots__ = ("variables", "terms", "bidegree", "_degree")

    def __init__(self, variables, terms: Dict[Exponents, object] | None = None,
                 bidegree: Tuple[int, int] | None = None):
        self.variables = tuple(variables)
        clean: Dict[Exponents, object] = {}
        if terms:
            nvars = len(self.variables)
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars:
                    raise ValueError("exponent tuple length does not match variables")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent")
                if coeff == 0:
                    continue
                clean[exps] = coeff
        self.terms = clean
        self.bidegree = bidegree
        self._degree = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "Polynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, value) -> "Polynomial":
        nvars = len(tuple(variables))
        return cls(variables, {(0,) * nvars: value})

    @classmethod
    def variable(cls, variables, index: int) -> "Polynomial":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[index] = 1
        return cls(variables, {tuple(exps): 1})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        if self._degree is None:
            self._degree = max((sum(e) for e in self.terms), default=-1)
        return self._degree

    def homogeneous_degree(self):
        """The common total degree of all terms, or None if inhomogeneous."""
        degrees = {sum(e) for e in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def decompose_homogeneous(self) -> Dict[int, "Polynomial"]:
        """Split into homogeneous pieces, keyed by total degree."""
        pieces: Dict[int, Dict[Exponents, object]] = {}
        for exps, coeff in self.terms.items():
            pieces.setdefault(sum(exps), {})[exps] = coeff
        return {d: Polynomial(self.variables, t) for d, t in sorted(pieces.items())}

    def max_abs_coeff(self) -> float:
        return max((abs(float(c)) for c in self.terms.values()), default=0.0)

    # -- arithmetic ----------------------------------------------------

    def _check_same_variables(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise ValueError("polynomials are over different variable lists")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + Polynomial.constant(self.variables, other)
        self._check_same_variables(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, 0) + coeff
            if new == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = new
        return Polynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return Polynomial.zero(self.variables)
            return Polynomial(self.variables,
                              {e: c * other for e, c in self.terms.items()})
        self._check_same_variables(other)
        prod: Dict[Exponents, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = prod.get(exps, 0) + c1 * c2
                if new == 0:
                    prod.pop(exps, None)
                else:
                    prod[exps] = new
        return Polynomial(self.variables, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    __hash__ = None

    # -- calculus ------------------------------------------------------

    def diff(self, index: int) -> "Polynomial":
        """Exact partial derivative with respect to variables[index]."""
        terms: Dict[Exponents, object] = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            new = list(exps)
            new[index] = e - 1
            terms[tuple(new)] = coeff * e
        return Polynomial(self.variables, terms)

    def laplacian(self) -> "Polynomial":
        """Flat ambient Laplacian, sum of all second partials.  Exact."""
        terms: Dict[Exponents, object] = {}
        for exps, coeff in self.terms.items():
            for i, e in enumerate(exps):
                if e < 2:
                    continue
                new = list(exps)
                new[i] = e - 2
                key = tuple(new)
                val = terms.get(key, 0) + coeff * e * (e - 1)
                if val == 0:
                    terms.pop(key, None)
                else:
                    terms[key] = val
        return Polynomial(self.variables, terms)

    # -- evaluation and substitution ------------------------------------

    def __call__(self, point):
        point = tuple(point)
        if len(point) != len(self.variables):
            raise ValueError("point dimension does not match variables")
        total = 0
        for exps, coeff in self.terms.items():
            value = coeff
            for x, e in zip(point, exps):
                if e:
                    value = value * x ** e
            total = total + value
        return total

    def substitute(self, assignments: Dict[int, object]) -> "Polynomial":
        """Fix some variables to constants, returning a polynomial in the rest.

        Exact when the assigned values are exact (the chart substitutions
        used in this package only ever assign 0 or 1).
        """
        keep = [i for i in range(len(self.variables)) if i not in assignments]
        new_vars = tuple(self.variables[i] for i in keep)
        terms: Dict[Exponents, object] = {}
        for exps, coeff in self.terms.items():
            value = coeff
            for i, v in assignments.items():
                e = exps[i]
                if e:
                    value = value * v ** e
            if value == 0:
                continue
            key = tuple(exps[i] for i in keep)
            new = terms.get(key, 0) + value
            if new == 0:
                terms.pop(key, None)
            else:
                terms[key] = new
        return Polynomial(new_vars, terms)

    def map_coefficients(self, func) -> "Polynomial":
        return Polynomial(self.variables, {e: func(c) for e, c in self.terms.items()},
                          bidegree=self.bidegree)

    def to_float(self) -> "Polynomial":
        return self.map_coefficients(float)

    # -- presentation ---------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            factors = [f"{v}^{e}" if e > 1 else v
                       for v, e in zip(self.variables, exps) if e]
            body = "*".join(factors)
            if body:
                parts.append(f"{coeff}*{body}" if coeff != 1 else body)
            else:
                parts.append(str(coeff))
        return " + ".join(parts)

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        """Structured-text form: variables header plus a list of terms."""
        term_list = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            if isinstance(coeff, complex):
                re, im = coeff.real, coeff.imag
            else:
                re, im = float(coeff), 0.0
            term_list.append({"exponents": list(exps), "coeff_re": re, "coeff_im": im})
        return {"variables": list(self.variables), "terms": term_list}

    @classmethod
    def from_dict(cls, data: dict) -> "Polynomial":
        terms = {}
        for entry in data["terms"]:
            coeff = entry["coeff_re"]
            if entry.get("coeff_im", 0.0):
                coeff = complex(coeff, entry["coeff_im"])
            terms[tuple(entry["exponents"])] = coeff
        return cls(data["variables"], terms)


def ambient_laplacian(p: Polynomial) -> Polynomial:
    """Flat Laplacian of p in its ambient coordinates (exact)."""
    return p.laplacian()


# -- sphere integrals --------------------------------------------------
#
# For a monomial x^alpha on S^(m-1):
#   integral = 2 * Gamma(b_1) ... Gamma(b_m) / Gamma(b_1 + ... + b_m),
# with b_i = (alpha_i + 1)/2, and zero when any alpha_i is odd.  With all
# alpha_i even the value is always (rational) * pi^(m // 2), and the
# rational part is computed exactly so that inner products of exact
# polynomials cancel exactly.


@lru_cache(maxsize=None)
def _gamma_half_ratio(a: int) -> Fraction:
    # Gamma(a + 1/2) = ((2a)! / (4^a a!)) sqrt(pi); returns the rational part
    return Fraction(math.factorial(2 * a), 4**a * math.factorial(a))


@lru_cache(maxsize=None)
def _monomial_integral_fraction(alpha: Exponents) -> Fraction:
    """Rational r with  integral over S^(m-1) of x^alpha = r * pi^(m//2)."""
    if any(a % 2 for a in alpha):
        return Fraction(0)
    m = len(alpha)
    num = Fraction(2)
    for a in alpha:
        num *= _gamma_half_ratio(a // 2)
    total = sum(alpha)
    if m % 2 == 0:
        s = (total + m) // 2
        return num / math.factorial(s - 1)
    b = (total + m - 1) // 2
    return num / _gamma_half_ratio(b)


def monomial_sphere_integral(alpha, m: int | None = None) -> float:
    """Integral of the monomial x^alpha over the unit sphere S^(m-1).

    Zero whenever some exponent is odd.  m defaults to len(alpha) and, if
    given, must match.
    """
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("exponents must be >= 0")
    if m is not None and m != len(alpha):
        raise ValueError("ambient dimension does not match exponent tuple")
    m = len(alpha)
    return float(_monomial_integral_fraction(alpha)) * math.pi ** (m // 2)


def sphere_volume(m: int) -> float:
    """Surface measure of the unit sphere S^(m-1) in R^m."""
    return monomial_sphere_integral((0,) * m)


def _exact_coefficient(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float):
        return Fraction(c)  # exact binary rational of the float
    raise TypeError(f"sphere integrals need real coefficients, got {type(c).__name__}")


def l2_inner_product(p: Polynomial, q: Polynomial, space=None) -> float:
    """L2 pairing of p and q over the sphere the space is modeled on.

    Evaluated term by term against the exact monomial integrals; the
    rational part of the sum is accumulated exactly, so orthogonality
    that holds in exact arithmetic comes out as an exact 0.0.
    """
    p._check_same_variables(q)
    m = len(p.variables)
    if space is not None and space.ambient_real_dim != m:
        raise ValueError("polynomials do not live on the ambient space of `space`")
    total = Fraction(0)
    for e1, c1 in p.terms.items():
        c1 = _exact_coefficient(c1)
        for e2, c2 in q.terms.items():
            alpha = tuple(a + b for a, b in zip(e1, e2))
            if any(a % 2 for a in alpha):
                continue
            total += c1 * _exact_coefficient(c2) * _monomial_integral_fraction(alpha)
    return float(total) * math.pi ** (m // 2)


def l2_norm(p: Polynomial, space=None) -> float:
    return math.sqrt(max(l2_inner_product(p, p, space), 0.0))


def real_variables(space) -> Tuple[str, ...]:
    """Ambient coordinate names: x1..x(n+1) for RP^n, interleaved
    x1,y1,...,x(n+1),y(n+1) for CP^n viewed over the reals."""
    if space.kind == "real_projective":
        return tuple(f"x{i + 1}" for i in range(space.n + 1))
    names: list[str] = []
    for i in range(space.n + 1):
        names.extend((f"x{i + 1}", f"y{i + 1}"))
    return tuple(names)
