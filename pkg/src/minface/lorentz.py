"""Vector helpers for Lorentz-Minkowski 3-space L^3.

Points are numpy arrays (x0, x1, x2) with the scalar product
<a, b> = -a0*b0 + a1*b1 + a2*b2 (signature -, +, +).
"""

from __future__ import annotations

import numpy as np

METRIC = np.array([-1.0, 1.0, 1.0])


def vec3(x0, x1, x2) -> np.ndarray:
    return np.array([float(x0), float(x1), float(x2)])


def mdot(a, b) -> float:
    """Minkowski scalar product."""
    return float(-a[0] * b[0] + a[1] * b[1] + a[2] * b[2])


def mcross(a, b) -> np.ndarray:
    """Lorentzian cross product: <mcross(a,b), c> = det(a, b, c) for all c."""
    c = np.cross(a, b)
    c[0] = -c[0]
    return c


def edot(a, b) -> float:
    return float(a[0] * b[0] + a[1] * b[1] + a[2] * b[2])


def enorm(a) -> float:
    return float(np.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]))


def det3(a, b, c) -> float:
    """Determinant of the matrix with columns a, b, c."""
    return float(np.linalg.det(np.column_stack([a, b, c])))


def causal_character(v, tol: float = 0.0) -> str:
    """'spacelike', 'timelike', or 'lightlike' by the sign of <v, v>."""
    q = mdot(v, v)
    if q > tol:
        return "spacelike"
    if q < -tol:
        return "timelike"
    return "lightlike"
