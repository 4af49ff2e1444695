"""A first walk over the timelike Enneper-type patch.

The surface is built from two real data pairs: g1(u) with density w1(u)
drives one lightlike generating curve, g2(v) with w2(v) the other, and the
surface is the average of the two curves. For g1 = u, g2 = -v,
w1 = w2 = 1/2 everything is integrable by hand, which makes this patch the
reference example throughout the package.
"""

import os

import numpy as np

from minface.curvature import gaussian_curvature
from minface.mesh import export_obj, sample_grid
from minface.surface import (RealWeierstrassData, Rect, conjugate_data,
                             evaluate, jets_at, save_spec)

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

surface = RealWeierstrassData.from_strings(
    "u", "-v", "1/2", "1/2", Rect(-3, 3, -3, 3))

print("== position: quadrature vs the hand integral ==")
print("f(u,v) = 1/4 (-u - u^3/3 + v + v^3/3,")
print("             u - u^3/3 + v - v^3/3,  u^2 + v^2)")


def closed_form(u, v):
    return np.array([
        0.25 * (-u - u ** 3 / 3 + v + v ** 3 / 3),
        0.25 * (u - u ** 3 / 3 + v - v ** 3 / 3),
        0.25 * (u ** 2 + v ** 2)])


for (u, v) in [(1.0, 1.0), (-2.0, 0.5), (2.7, -1.3)]:
    got = evaluate(surface, u, v)
    err = np.max(np.abs(got - closed_form(u, v)))
    print(f"  f({u:+.1f},{v:+.1f}) = {got.round(6)}   |err| = {err:.2e}")

print()
print("== first and second order data at the origin ==")
j = jets_at(surface, 0.0, 0.0)
print(f"  f_u     = {j.f_u}")
print(f"  f_v     = {j.f_v}")
print(f"  nu      = {j.nu}    (unit spacelike normal)")
print(f"  Lambda  = {j.Lambda}")
print(f"  Q, R    = {j.Q}, {j.R}")

print()
print("== Gaussian curvature three ways ==")
print("closed form on this patch: K = -16/(1+uv)^4")
hdr = f"  {'point':>14} {'closed':>12} {'extrinsic':>12} {'intrinsic':>12}"
print(hdr)
for (u, v) in [(0.0, 0.0), (1.0, 1.0), (-2.0, 2.5)]:
    ks = [gaussian_curvature(surface, u, v, method=m)
          for m in ("closed", "extrinsic", "intrinsic")]
    print(f"  ({u:+.1f}, {v:+.1f})  {ks[0]:12.6f} {ks[1]:12.6f} "
          f"{ks[2]:12.6f}")

print()
print("== conjugate surface ==")
conj = conjugate_data(surface)
print("conjugation flips the sign of w2; K flips sign with it:")
for (u, v) in [(1.0, 1.0), (0.5, -0.5)]:
    k = gaussian_curvature(surface, u, v)
    kc = gaussian_curvature(conj, u, v)
    print(f"  K({u}, {v}) = {k:+.6f}   K_conj = {kc:+.6f}")

spec_path = os.path.join(OUT, "enneper.json")
obj_path = os.path.join(OUT, "enneper.obj")
save_spec(surface, spec_path)
export_obj(sample_grid(surface, 48, 48), obj_path)
print()
print(f"wrote {spec_path} and {obj_path}")
