"""The two families of spaces the package works on.

A space is either a real projective space (quotient of the unit sphere
S^n by the antipodal map) or a complex projective space (quotient of
S^(2n+1) by the circle action).  Functions on the space are represented
by polynomials in the ambient coordinates of the covering sphere, so a
space mostly carries bookkeeping: ambient dimension, the eigenvalue law
of its Laplace-Beltrami operator, and the minimal number of critical
points a Morse function can have on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

REAL = "real_projective"
COMPLEX = "complex_projective"


@dataclass(frozen=True)
class Space:
    """A real or complex projective space of (projective) dimension n."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in (REAL, COMPLEX):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("projective dimension must be >= 1")

    @classmethod
    def rp(cls, n: int) -> "Space":
        return cls(REAL, n)

    @classmethod
    def cp(cls, n: int) -> "Space":
        return cls(COMPLEX, n)

    @property
    def is_complex(self) -> bool:
        return self.kind == COMPLEX

    @property
    def ambient_real_dim(self) -> int:
        """Number of real coordinates of the covering sphere's ambient space."""
        return self.n + 1 if self.kind == REAL else 2 * self.n + 2

    @property
    def matrix_size(self) -> int:
        """Side length of the coefficient matrix housing a first-eigenspace function."""
        return self.n + 1

    @property
    def sphere_dim(self) -> int:
        """Dimension of the covering sphere (n for RP^n, 2n+1 for CP^n)."""
        return self.ambient_real_dim - 1

    @property
    def chart_dim(self) -> int:
        """Dimension of an inhomogeneous coordinate chart."""
        return self.n if self.kind == REAL else 2 * self.n

    @property
    def morse_smale_characteristic(self) -> int:
        # minimal number of critical points of a Morse function; n+1 for both kinds
        return self.n + 1

    @property
    def growth_rate_witness(self) -> Fraction:
        """A positive rational r with eigenvalue(j) > r*j for every j >= 1."""
        return Fraction(self.n + 1) if self.kind == REAL else Fraction(4 * self.n)

    def eigenvalue(self, j: int) -> int:
        return eigenvalue(self, j)

    def label(self) -> str:
        return ("RP" if self.kind == REAL else "CP") + str(self.n)

    @classmethod
    def from_label(cls, label: str) -> "Space":
        """Parse labels like ``RP2`` or ``CP1`` (case-insensitive)."""
        text = label.strip().upper()
        if text.startswith("RP"):
            return cls.rp(int(text[2:]))
        if text.startswith("CP"):
            return cls.cp(int(text[2:]))
        raise ValueError(f"cannot parse space label {label!r}")


def eigenvalue(space: Space, j: int) -> int:
    """j-th distinct Laplace-Beltrami eigenvalue of the space.

    2j(2j+n-1) on RP^n, 4j(n+j) on CP^n; zero exactly at j = 0 (the
    constants).
    """
    if j < 0:
        raise ValueError("eigenvalue level must be >= 0")
    n = space.n
    if space.kind == REAL:
        return 2 * j * (2 * j + n - 1)
    return 4 * j * (n + j)
