"""Independent high-precision oracles for the test suite.

Nothing in this module touches the library's jet arithmetic, expression
parser, or quadrature. Expressions are re-parsed by sympy and evaluated
through mpmath at 50 significant digits; derivatives are either exact
(symbolic) or high-precision finite differences; integrals use mpmath's
adaptive quadrature. Surface-level oracles (position, curvature) are built
from those pieces alone, so agreement with the library is meaningful.
"""

from __future__ import annotations

import mpmath as mp
import sympy as sp

mp.mp.dps = 50

_U, _V = sp.symbols("u v")
_LOCALS = {"u": _U, "v": _V, "pi": sp.pi, "e": sp.E,
           "sin": sp.sin, "cos": sp.cos, "tan": sp.tan, "exp": sp.exp,
           "log": sp.log, "sqrt": sp.sqrt, "atan": sp.atan,
           "sinh": sp.sinh, "cosh": sp.cosh}


def sympy_expr(text: str):
    """Parse an expression string (caret powers) into a sympy expression."""
    return sp.sympify(text.replace("^", "**"), locals=dict(_LOCALS))


def mp_fn(text: str, var: str):
    """Compile an expression string to an mpmath-precision callable."""
    sym = _U if var == "u" else _V
    return sp.lambdify(sym, sympy_expr(text), modules="mpmath")


def exact_jet(text: str, var: str, x, order: int = 3):
    """Value and derivatives of an expression, symbolically differentiated."""
    sym = _U if var == "u" else _V
    expr = sympy_expr(text)
    out = []
    for _ in range(order + 1):
        fn = sp.lambdify(sym, expr, modules="mpmath")
        out.append(mp.mpf(fn(mp.mpf(x))))
        expr = sp.diff(expr, sym)
    return out


def fd_jet(fn, x, order: int = 3):
    """Derivatives 0..order of a callable by high-precision differences."""
    return [mp.diff(fn, mp.mpf(x), k) for k in range(order + 1)]


def quad(fn, a, b):
    """Adaptive quadrature at oracle precision."""
    return mp.quad(fn, [mp.mpf(a), mp.mpf(b)])


# --- Weierstrass-form oracles --------------------------------------------------

def velocity_u(g1_text: str, w1_text: str):
    """phi' = w1 * (-1 - g1^2, 1 - g1^2, 2 g1) as mpmath callables."""
    g = mp_fn(g1_text, "u")
    w = mp_fn(w1_text, "u")

    def vel(t):
        gv, wv = g(t), w(t)
        return (wv * (-1 - gv * gv), wv * (1 - gv * gv), 2 * gv * wv)

    return vel


def velocity_v(g2_text: str, w2_text: str):
    """psi' = w2 * (1 + g2^2, 1 - g2^2, -2 g2) as mpmath callables."""
    g = mp_fn(g2_text, "v")
    w = mp_fn(w2_text, "v")

    def vel(t):
        gv, wv = g(t), w(t)
        return (wv * (1 + gv * gv), wv * (1 - gv * gv), -2 * gv * wv)

    return vel


def position(g1, g2, w1, w2, base, f0, u, v):
    """f(u, v) = (phi(u) + psi(v))/2 + f0 integrated at oracle precision.

    ``g1 .. w2`` are expression strings, ``base`` the integration base point
    of both curve integrals, ``f0`` the translation.
    """
    vel_u = velocity_u(g1, w1)
    vel_v = velocity_v(g2, w2)
    u0, v0 = base
    out = []
    for i in range(3):
        phi_i = quad(lambda t, i=i: vel_u(t)[i], u0, u)
        psi_i = quad(lambda t, i=i: vel_v(t)[i], v0, v)
        out.append(0.5 * (phi_i + psi_i) + mp.mpf(f0[i]))
    return out


def _mdot(a, b):
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def extrinsic_curvature(g1, g2, w1, w2, u, v):
    """Gaussian curvature from first principles at oracle precision.

    Builds f_u, f_v, f_uu, f_vv from the curve velocities (f_uv = 0 for
    this construction), takes the unit spacelike normal from the metric
    cross product, and returns det(shape operator) =
    (<f_uu,nu><f_vv,nu> - <f_uv,nu>^2) / (EG - F^2) with E = G = 0.
    """
    vel_u = velocity_u(g1, w1)
    vel_v = velocity_v(g2, w2)
    uu, vv = mp.mpf(u), mp.mpf(v)
    f_u = [x / 2 for x in vel_u(uu)]
    f_v = [x / 2 for x in vel_v(vv)]
    f_uu = [mp.diff(lambda t, i=i: vel_u(t)[i], uu) / 2 for i in range(3)]
    f_vv = [mp.diff(lambda t, i=i: vel_v(t)[i], vv) / 2 for i in range(3)]
    # metric cross product: diag(-1,1,1) applied to the Euclidean one
    cx = f_u[1] * f_v[2] - f_u[2] * f_v[1]
    cy = f_u[2] * f_v[0] - f_u[0] * f_v[2]
    cz = f_u[0] * f_v[1] - f_u[1] * f_v[0]
    w = (-cx, cy, cz)
    w2norm = _mdot(w, w)
    if w2norm <= 0:
        raise ZeroDivisionError("normal fails to be spacelike here")
    nu = [x / mp.sqrt(w2norm) for x in w]
    lam = _mdot(f_u, f_v)
    q = _mdot(f_uu, nu)
    r = _mdot(f_vv, nu)
    return -q * r / lam ** 2


def to_float(xs):
    if isinstance(xs, (list, tuple)):
        return [float(x) for x in xs]
    return float(xs)
