"""Paracomplex (split-complex) arithmetic and the paraholomorphic calculus.

The algebra C' = { x + j*y : j^2 = +1 } plays the role complex numbers play for
Euclidean minimal surfaces. Key differences from C:

* the square modulus z*conj(z) = re^2 - im^2 is indefinite;
* nonzero elements with re = +-im are zero divisors, so division is not total
  and is deliberately not part of this module's API;
* functions of z = u' + j*v' split: in null coordinates u = u' + v',
  v = u' - v', every paraholomorphic function is (f(u) + g(v))/2
  + j*(f(u) - g(v))/2 for one-variable functions f, g.

The Minkowski plane product <z1, z2> = -Re(conj(z1) * z2) makes C' a model of
L^2, and the Weierstrass-type integrand built here produces null curves whose
sum is a timelike minimal surface (see the surface module).
"""

from __future__ import annotations

from dataclasses import dataclass

from .lorentz import mdot


@dataclass(frozen=True)
class SplitComplex:
    """x + j*y with j^2 = +1."""

    re: float
    im: float

    def __add__(self, other):
        other = _coerce(other)
        return SplitComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return SplitComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        # j^2 = +1: the im*im cross term lands in the real part with + sign.
        return SplitComplex(
            self.re * other.re + self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return SplitComplex(-self.re, -self.im)


J = SplitComplex(0.0, 1.0)
ONE = SplitComplex(1.0, 0.0)


def _coerce(x) -> SplitComplex:
    if isinstance(x, SplitComplex):
        return x
    if isinstance(x, (int, float)):
        return SplitComplex(float(x), 0.0)
    raise TypeError(f"cannot mix SplitComplex with {type(x).__name__}")


def conjugate(z: SplitComplex) -> SplitComplex:
    return SplitComplex(z.re, -z.im)


def square_modulus(z: SplitComplex) -> float:
    """z * conj(z) = re^2 - im^2 (indefinite; negative for |im| > |re|)."""
    return z.re * z.re - z.im * z.im


def is_zero_divisor(z: SplitComplex, tol: float = 0.0) -> bool:
    """Nonzero elements on the null lines re = +-im annihilate a partner."""
    return abs(abs(z.re) - abs(z.im)) <= tol and (z.re != 0.0 or z.im != 0.0)


def minkowski_product(z1: SplitComplex, z2: SplitComplex) -> float:
    """<z1, z2> = -Re(conj(z1) * z2); gives <z, z> = -square_modulus(z)."""
    return -(z1.re * z2.re - z1.im * z2.im)


# --- paraholomorphic splitting ------------------------------------------------


def assemble_paraholomorphic(f_of_u: float, g_of_v: float) -> SplitComplex:
    """Value of the paraholomorphic function with null-coordinate parts (f, g)."""
    return SplitComplex(0.5 * (f_of_u + g_of_v), 0.5 * (f_of_u - g_of_v))


def split(z: SplitComplex) -> tuple:
    """Inverse of assemble_paraholomorphic: the (f(u), g(v)) pair."""
    return (z.re + z.im, z.re - z.im)


def weierstrass_integrand(g: SplitComplex, w: SplitComplex) -> tuple:
    """The L^3-valued 1-form coefficient (1/2)(-1 - g^2, j(1 - g^2), 2g) * w.

    g is the paraholomorphic Gauss-type function and w the paraholomorphic
    height 1-form coefficient. Each component is a SplitComplex; taking real
    parts of twice the integrand recovers f_u - f_v of the generated surface,
    and swapping w -> j*w exchanges the surface with its conjugate.
    """
    g2 = g * g
    half_w = SplitComplex(0.5, 0.0) * w
    c0 = (SplitComplex(-1.0, 0.0) - g2) * half_w
    c1 = J * (SplitComplex(1.0, 0.0) - g2) * half_w
    c2 = (g + g) * half_w
    return (c0, c1, c2)


def lorentzian_null_check(velocity, tol: float = 1e-10) -> bool:
    """True when a 3-vector velocity is null: |<v, v>| <= tol."""
    return abs(mdot(velocity, velocity)) <= tol


def null_residual(velocity) -> float:
    """|<v, v>| itself, for reporting."""
    return abs(mdot(velocity, velocity))
