"""Tracing and classifying the singular set.

Singular points sit exactly where g1(u) g2(v) = 1. Along that curve two
one-variable functions a = g1'/(g1^2 w1) and b = g2'/(g2^2 w2) decide
everything: cuspidal edge where (a-b)(a+b) != 0, swallowtail where a+b = 0
on a front, cuspidal cross cap where a-b = 0 off a front. This script walks
the Enneper-type patch, its conjugate, and a surface whose singular curve
consists of cuspidal edges only.
"""

import collections
import os

from minface import gallery
from minface.singular import (all_reports, classify_singular,
                              singular_curvature, trace_singular_set,
                              verify_main_theorem, write_singular_csv)

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)


def census(surface, name):
    curves = trace_singular_set(surface, grid_n=256)
    reports = all_reports(curves)
    counts = collections.Counter(r.tag.value for r in reports)
    print(f"{name}: {len(curves)} curve(s), {len(reports)} points")
    for tag, n in sorted(counts.items()):
        print(f"    {tag:18s} {n}")
    return curves, reports


print("== census over three surfaces ==")
enneper = gallery.get("enneper")
conj = gallery.get("enneper-conj")
quasi = gallery.get("ce-quasiumbilic")

curves, reports = census(enneper, "enneper")
census(conj, "enneper-conj")
census(quasi, "ce-quasiumbilic")

print()
print("== the swallowtail pair and its dual ==")
for (u, v) in [(1.0, -1.0), (-1.0, 1.0)]:
    r = classify_singular(enneper, u, v)
    rc = classify_singular(conj, u, v)
    print(f"  ({u:+.0f}, {v:+.0f}): {r.tag.value}  a+b = {r.a_plus_b:+.1e}"
          f"   -> conjugate: {rc.tag.value}  a-b = {rc.a_minus_b:+.1e}")

print()
print("== singular curvature along a cuspidal edge ==")
print("kappa_s < 0 iff nearby K < 0 (checked by verify_main_theorem):")
for (u, v) in [(2.0, -0.5), (0.5, -2.0), (1.5, -1.0 / 1.5)]:
    ks = singular_curvature(enneper, u, v)
    rep = verify_main_theorem(enneper, u, v)
    print(f"  kappa_s({u:4.2f}, {v:5.2f}) = {ks:+.6f}   "
          f"main-theorem checks: {'pass' if rep.passed else 'FAIL'}")

print()
print("== sampling K toward the swallowtail ==")
from minface.curvature import gaussian_curvature

print("transversal (1+t, -1): K = -16/t^4 exactly")
for t in (1e-1, 1e-2, 1e-3):
    k = gaussian_curvature(enneper, 1.0 + t, -1.0)
    print(f"  t = {t:.0e}   K = {k:+.6e}   t^4*K = {t ** 4 * k:+.6f}")

csv_path = os.path.join(OUT, "enneper-singular.csv")
write_singular_csv(curves, csv_path)
print()
print(f"wrote {csv_path}")
