"""Split-complex numbers and where they show up in the surface equations.

The algebra R[j]/(j^2 - 1) plays the role complex numbers play for
Euclidean minimal surfaces. Its square modulus x^2 - y^2 is indefinite,
the plane splits along the zero divisors (1 +- j)/2 into null coordinates,
and splitting diagonalizes multiplication. The surface integrand built
from paraholomorphic data is a null vector with split-complex entries
whose two null components are the velocities of the generating curves.
"""

from minface.lorentz import mdot
from minface.paracomplex import (J, SplitComplex, assemble_paraholomorphic,
                                 minkowski_product, split, square_modulus,
                                 weierstrass_integrand)
from minface.surface import RealWeierstrassData, Rect, jets_at

print("== arithmetic ==")
a = SplitComplex(2.0, 1.0)
b = SplitComplex(0.5, -1.5)
print(f"a = {a}, b = {b}")
print(f"a*b   = {a * b}")
print(f"j^2   = {J * J}")
print(f"|a|^2 = {square_modulus(a)}, |1+2j|^2 = "
      f"{square_modulus(SplitComplex(1.0, 2.0))}  (indefinite)")
e_plus = SplitComplex(0.5, 0.5)
e_minus = SplitComplex(0.5, -0.5)
print(f"zero divisors: e+ * e- = {e_plus * e_minus}")

print()
print("== splitting diagonalizes the algebra ==")
ap, am = split(a)
bp, bm = split(b)
pp, pm = split(a * b)
print(f"split(a) = ({ap}, {am}),  split(b) = ({bp}, {bm})")
print(f"split(a*b) = ({pp}, {pm}),  componentwise products = "
      f"({ap * bp}, {am * bm})")
print("the model metric -Re(conj(z1) z2) has signature (-, +):")
print(f"  <1, 1> = {minkowski_product(SplitComplex(1, 0), SplitComplex(1, 0))}"
      f",  <j, j> = {minkowski_product(J, J)},  "
      f"<e+, e+> = {minkowski_product(e_plus, e_plus)}")

print()
print("== the null integrand of a surface ==")
data = RealWeierstrassData.from_strings("u", "-v", "1/2", "1/2",
                                        Rect(-3, 3, -3, 3))
u, v = 0.7, -0.4
g = assemble_paraholomorphic(data.g1_jet(u).value, data.g2_jet(v).value)
w = assemble_paraholomorphic(data.w1_jet(u).value, data.w2_jet(v).value)
comps = weierstrass_integrand(g, w)
sq = SplitComplex(-1.0, 0.0) * (comps[0] * comps[0]) \
    + comps[1] * comps[1] + comps[2] * comps[2]
print(f"componentwise L3 square of the integrand: {sq}  (the zero element)")

phi_vel = [split(2 * c)[0] for c in comps]
psi_vel = [-split(2 * c)[1] for c in comps]
sj = jets_at(data, u, v)
print("split of 2 * integrand vs the surface tangents (f = (phi+psi)/2):")
print(f"  u-part           = {[round(x, 12) for x in phi_vel]}")
print(f"  2 f_u from jets  = {[round(float(x), 12) for x in 2 * sj.f_u]}")
print(f"  -(v-part)        = {[round(x, 12) for x in psi_vel]}")
print(f"  2 f_v from jets  = {[round(float(x), 12) for x in 2 * sj.f_v]}")
print(f"both split parts are lightlike: <phi', phi'> = "
      f"{mdot(phi_vel, phi_vel):.2e}, <psi', psi'> = "
      f"{mdot(psi_vel, psi_vel):.2e}")
