"""Independent numerical evaluation used as a cross-check for exact results.

Scalars are mapped to complex numbers by zeta_N -> exp(2 pi i / N) and the
indeterminate q -> a fixed generic point; linear algebra is redone in numpy.
"""
from __future__ import annotations

import cmath

import numpy as np

Q_POINT = complex(1.3172, 0.4419)


def cyclo_value(c, N: int) -> complex:
    z = cmath.exp(2j * cmath.pi / N)
    return sum(complex(float(x)) * z ** k for k, x in enumerate(c.coefficients()))


def value(s, q: complex = Q_POINT) -> complex:
    num = sum(cyclo_value(c, s.N) * q ** k for k, c in enumerate(s.num))
    den = sum(cyclo_value(c, s.N) * q ** k for k, c in enumerate(s.den))
    return num / den


def array(m) -> np.ndarray:
    return np.array([[value(x) for x in row] for row in m], dtype=complex)


def rank(m, tol: float = 1e-8) -> int:
    a = array(m) if not isinstance(m, np.ndarray) else m
    if a.size == 0:
        return 0
    return int(np.linalg.matrix_rank(a, tol=tol))


def quotient_dim_by_orbit(basis_actions, functional) -> int:
    """dim of M / {v : f(h v) = 0 for all h}, the rank of the stacked rows f M_h."""
    f = np.array([value(x) for x in functional], dtype=complex)
    rows = np.array([f @ array(m) for m in basis_actions])
    return rank(rows)
