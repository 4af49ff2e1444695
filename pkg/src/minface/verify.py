"""Numerical property battery: one CheckResult per verified statement.

Every check is deterministic given its seed and returns the worst error it
saw, so the CLI can print a table and exit nonzero on any failure. The same
functions back the acceptance test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from .curvature import (energy_gauge, gaussian_curvature, milnor_sign_check,
                        sign_prediction)
from .errors import (DegenerateAtPoint, FlatPoint, MinfaceError,
                     SingularNeighborhood, SingularPoint)
from .expr import eval_value
from .lorentz import enorm, mdot
from .singular import (SingularClassification, all_reports, classify_singular,
                       directions_at, normal_twist_identity,
                       signed_area_density, singular_data, trace_singular_set,
                       verify_main_theorem)
from .surface import (RealWeierstrassData, Rect, Surface, as_pair,
                      conjugate_data, data_from_curves, get_data,
                      mean_curvature_residual)


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_error: Optional[float]
    count: int
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        err = "" if self.max_error is None else \
            " max_err=%.3e" % self.max_error
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status:4s}  {self.name:28s} n={self.count}{err}{extra}"


# --- point sampling ----------------------------------------------------------


def _acc_quartic_root(surface: Surface, axis: str, t: float) -> float:
    pair = as_pair(surface)
    j = pair.phi_prime(t) if axis == "u" else pair.psi_prime(t)
    acc = np.array([j[0].d1, j[1].d1, j[2].d1])
    q4 = mdot(acc, acc)
    return q4 ** 0.25 if q4 > 0 else 0.0


def sample_regular_points(surface: Surface, n: int, rng,
                          nonflat: bool = True,
                          singular_margin: float = 0.05,
                          flat_floor: float = 0.1) -> List[Tuple[float, float]]:
    """Uniform domain points kept away from the singular set and flat locus.

    Regularity: |1 - g1 g2| >= margin * (1 + |g1 g2|) in Weierstrass mode,
    |Lambda| >= margin * |f_u||f_v| otherwise. Non-flatness: the acceleration
    pseudo-norm <gamma'', gamma''>^(1/4) of both generating curves must
    exceed flat_floor.
    """
    pair = as_pair(surface)
    d = get_data(surface)
    dom = pair.domain
    points = []
    attempts = 0
    while len(points) < n and attempts < 80 * n:
        attempts += 1
        u = float(rng.uniform(dom.u_min, dom.u_max))
        v = float(rng.uniform(dom.v_min, dom.v_max))
        if d is not None:
            prod = eval_value(d.g1, u) * eval_value(d.g2, v)
            if abs(1.0 - prod) < singular_margin * (1.0 + abs(prod)):
                continue
        else:
            f_u = 0.5 * pair.phi_prime_value(u)
            f_v = 0.5 * pair.psi_prime_value(v)
            lam = mdot(f_u, f_v)
            if abs(lam) < singular_margin * max(enorm(f_u) * enorm(f_v),
                                                1e-30):
                continue
        if nonflat:
            if (_acc_quartic_root(surface, "u", u) < flat_floor
                    or _acc_quartic_root(surface, "v", v) < flat_floor):
                continue
        points.append((u, v))
    return points


# --- per-surface checks -------------------------------------------------------


def check_null_generators(surface: Surface, n: int = 100,
                          tol: float = 1e-10, seed: int = 0) -> CheckResult:
    """Both generating curves must have lightlike velocity everywhere."""
    pair = as_pair(surface)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        u = float(rng.uniform(pair.domain.u_min, pair.domain.u_max))
        v = float(rng.uniform(pair.domain.v_min, pair.domain.v_max))
        for vel in (pair.phi_prime_value(u), pair.psi_prime_value(v)):
            res = abs(mdot(vel, vel)) / max(1.0, float(vel @ vel))
            worst = max(worst, res)
    return CheckResult("null_generators", worst < tol, worst, 2 * n)


def check_curvature_routes(surface: Surface, n: int = 1000, seed: int = 0,
                           h: float = 1e-3, rtol_pair: float = 1e-9,
                           rtol_fd: float = 1e-3) -> CheckResult:
    """Closed-form vs extrinsic vs intrinsic Gaussian curvature.

    The finite-difference route needs breathing room from the singular set
    (log|Lambda| derivatives blow up there), hence the wider margin.
    """
    rng = np.random.default_rng(seed)
    pts = sample_regular_points(surface, n, rng, singular_margin=0.1)
    worst_pair = worst_fd = 0.0
    skipped = 0
    for (u, v) in pts:
        try:
            kc = gaussian_curvature(surface, u, v, method="closed")
            ke = gaussian_curvature(surface, u, v, method="extrinsic")
            ki = gaussian_curvature(surface, u, v, method="intrinsic", h=h)
        except (SingularPoint, SingularNeighborhood):
            skipped += 1
            continue
        scale = max(abs(kc), abs(ke), 1e-300)
        worst_pair = max(worst_pair, abs(kc - ke) / scale)
        worst_fd = max(worst_fd, abs(kc - ki) / max(abs(kc), 1e-300))
    passed = (worst_pair < rtol_pair and worst_fd < rtol_fd
              and len(pts) > skipped)
    return CheckResult(
        "curvature_routes", passed, max(worst_pair, worst_fd), len(pts),
        f"pairwise {worst_pair:.2e}, finite-diff {worst_fd:.2e}")


def check_minimality(surface: Surface, n: int = 1000, seed: int = 0,
                     tol: float = 1e-10) -> CheckResult:
    """|2 <f_uv, nu> / Lambda| below tol at random regular points."""
    rng = np.random.default_rng(seed)
    pts = sample_regular_points(surface, n, rng, nonflat=False)
    worst = 0.0
    for (u, v) in pts:
        try:
            worst = max(worst, abs(mean_curvature_residual(surface, u, v)))
        except SingularPoint:
            continue
    return CheckResult("minimality", worst < tol and bool(pts), worst,
                       len(pts))


def check_sign_theorem(surface: Surface, n: int = 200,
                       seed: int = 0) -> CheckResult:
    """sign K = (orientation of phi) * (orientation of psi), no exceptions."""
    rng = np.random.default_rng(seed)
    pts = sample_regular_points(surface, n, rng)
    bad = 0
    for (u, v) in pts:
        try:
            k = gaussian_curvature(surface, u, v)
            pred = sign_prediction(surface, u, v)
        except (SingularPoint, FlatPoint):
            continue
        if k == 0.0 or (k > 0) != (pred > 0):
            bad += 1
    return CheckResult("sign_theorem", bad == 0 and bool(pts), float(bad),
                       len(pts), f"{bad} exceptions")


def check_milnor(surface: Surface, n: int = 100,
                 seed: int = 0) -> CheckResult:
    """Product of tangent-winding signs equals the sign of K."""
    rng = np.random.default_rng(seed)
    pts = sample_regular_points(surface, n, rng)
    bad = 0
    for (u, v) in pts:
        try:
            if not milnor_sign_check(surface, u, v):
                bad += 1
        except (SingularPoint, FlatPoint, DegenerateAtPoint):
            continue
    return CheckResult("milnor_winding", bad == 0 and bool(pts), float(bad),
                       len(pts), f"{bad} disagreements")


def check_energy_gauge(surface: Surface, n: int = 50, seed: int = 0,
                       tol: float = 1e-8) -> CheckResult:
    """K E^2 equals the orientation product in the unit-acceleration gauge."""
    rng = np.random.default_rng(seed)
    pts = sample_regular_points(surface, n, rng)
    worst = 0.0
    for (u, v) in pts:
        try:
            k = gaussian_curvature(surface, u, v)
            e = energy_gauge(surface, u, v)
            pred = sign_prediction(surface, u, v)
        except (SingularPoint, FlatPoint, DegenerateAtPoint):
            continue
        worst = max(worst, abs(k * e * e - pred))
    return CheckResult("energy_gauge", worst < tol and bool(pts), worst,
                       len(pts))


def check_data_roundtrip(surface: Surface, n: int = 100,
                         tol: float = 1e-10, seed: int = 0) -> CheckResult:
    """Recovering (g1, g2, w1, w2) from the generated curves reproduces them."""
    d = get_data(surface)
    rec = data_from_curves(as_pair(surface))
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        u = float(rng.uniform(d.domain.u_min, d.domain.u_max))
        v = float(rng.uniform(d.domain.v_min, d.domain.v_max))
        worst = max(
            worst,
            abs(rec.g1(u) - eval_value(d.g1, u)),
            abs(rec.w1(u) - eval_value(d.w1, u)),
            abs(rec.g2(v) - eval_value(d.g2, v)),
            abs(rec.w2(v) - eval_value(d.w2, v)))
    return CheckResult("data_roundtrip", worst < tol, worst, n)


def check_identities(surface: Surface, grid_n: int = 128,
                     tol_det: float = 1e-10,
                     tol_twist: float = 1e-8) -> CheckResult:
    """The two determinant identities along the traced singular set.

    det(gamma', eta) = a + b, and det(df(gamma'), n, dn(eta)) =
    -(w1 w2/2)(a+b)(a-b); also checks that the signed area density changes
    sign across the curve at nondegenerate points.
    """
    curves = trace_singular_set(surface, grid_n)
    worst_det = worst_twist = 0.0
    flips_ok = True
    count = 0
    for rep in all_reports(curves):
        if not rep.is_nondegenerate:
            continue
        count += 1
        dirs = directions_at(surface, rep.u, rep.v)
        worst_det = max(worst_det, abs(dirs.det_gamma_eta - rep.a_plus_b))
        lhs, rhs = normal_twist_identity(surface, rep.u, rep.v)
        worst_twist = max(worst_twist, abs(lhs - rhs))
        sd = singular_data(surface, rep.u, rep.v)
        g = math.hypot(sd.h_u, sd.h_v)
        if g > 0:
            off = 1e-4
            lp = signed_area_density(surface, rep.u + off * sd.h_u / g,
                                     rep.v + off * sd.h_v / g)
            lm = signed_area_density(surface, rep.u - off * sd.h_u / g,
                                     rep.v - off * sd.h_v / g)
            flips_ok = flips_ok and (lp * lm < 0)
    passed = worst_det < tol_det and worst_twist < tol_twist and flips_ok
    detail = (f"det {worst_det:.2e}, twist {worst_twist:.2e}, "
              f"density flips {'ok' if flips_ok else 'BROKEN'}")
    if count == 0:
        return CheckResult("singular_identities", True, None, 0,
                           "no singular points in domain")
    return CheckResult("singular_identities", passed,
                       max(worst_det, worst_twist), count, detail)


_DUAL_TAG = {
    SingularClassification.CUSPIDAL_EDGE: SingularClassification.CUSPIDAL_EDGE,
    SingularClassification.SWALLOWTAIL:
        SingularClassification.CUSPIDAL_CROSS_CAP,
    SingularClassification.CUSPIDAL_CROSS_CAP:
        SingularClassification.SWALLOWTAIL,
    SingularClassification.DEGENERATE: SingularClassification.DEGENERATE,
}


def check_duality(surface: Surface, grid_n: int = 128) -> CheckResult:
    """Conjugation swaps swallowtails and cross caps, keeps cuspidal edges."""
    conj = conjugate_data(surface)
    curves = trace_singular_set(surface, grid_n)
    bad = 0
    count = 0
    for rep in all_reports(curves):
        expected = _DUAL_TAG.get(rep.tag)
        if expected is None:
            continue
        count += 1
        got = classify_singular(conj, rep.u, rep.v).tag
        if got is not expected:
            bad += 1
    if count == 0:
        return CheckResult("duality", True, None, 0,
                           "no singular points in domain")
    return CheckResult("duality", bad == 0, float(bad), count,
                       f"{bad} tag mismatches")


def check_kappa_zero_locus(surface: Surface, grid_n: int = 128,
                           lo: float = 1e-8, hi: float = 1e-4) -> CheckResult:
    """kappa_s vanishes along a cuspidal-edge curve only where g1' or g2' does.

    Tested with a gray band: points with |kappa_s| < lo must have
    min(|g1'|, |g2'|) < hi and vice versa; the band between lo and hi is
    inconclusive and skipped.
    """
    curves = trace_singular_set(surface, grid_n)
    bad = 0
    count = 0
    for rep in all_reports(curves):
        if rep.tag is not SingularClassification.CUSPIDAL_EDGE:
            continue
        count += 1
        sd = singular_data(surface, rep.u, rep.v)
        min_g = min(abs(sd.g1p), abs(sd.g2p))
        k = abs(rep.kappa_s)
        if (k < lo and min_g > hi) or (min_g < lo and k > hi):
            bad += 1
    if count == 0:
        return CheckResult("kappa_zero_locus", True, None, 0,
                           "no cuspidal edges in domain")
    return CheckResult("kappa_zero_locus", bad == 0, float(bad), count,
                       f"{bad} mismatches")


def check_main_theorem(surface: Surface, grid_n: int = 64,
                       max_points: int = 40) -> CheckResult:
    """Curvature sign/divergence predictions near traced singular points."""
    curves = trace_singular_set(surface, grid_n)
    reports = [r for r in all_reports(curves) if r.is_nondegenerate]
    if not reports:
        return CheckResult("main_theorem", True, None, 0,
                           "no singular points in domain")
    stride = max(1, len(reports) // max_points)
    bad = 0
    count = 0
    for rep in reports[::stride]:
        count += 1
        outcome = verify_main_theorem(surface, rep.u, rep.v)
        if not outcome.passed:
            bad += 1
    return CheckResult("main_theorem", bad == 0, float(bad), count,
                       f"{bad} failed points")


def check_flat_accumulation(surface: Surface, grid_n: int = 256,
                            radius: float = 1e-2) -> CheckResult:
    """Flat points pressing against the singular set force cuspidal edges.

    Quasi-umbilic points within ``radius`` of a traced nondegenerate singular
    point require that singular point to be a cuspidal edge; umbilic points
    must stay clear of all traced nondegenerate singular points.
    """
    d = get_data(surface)
    crit_u = _critical_params(d, "u")
    crit_v = _critical_params(d, "v")
    curves = trace_singular_set(surface, grid_n)
    traced = [r for r in all_reports(curves) if r.is_nondegenerate]
    if not traced or (not crit_u and not crit_v):
        return CheckResult("flat_accumulation", True, None, 0,
                           "no flat locus meeting the singular set")
    coords = np.array([(r.u, r.v) for r in traced])
    bad = 0
    count = 0

    def nearest(u, v):
        dist = np.hypot(coords[:, 0] - u, coords[:, 1] - v)
        k = int(np.argmin(dist))
        return traced[k], float(dist[k])

    dom = d.domain
    for r0 in crit_u:
        for v in np.linspace(dom.v_min, dom.v_max, 101):
            if any(abs(v - rv) < 1e-6 for rv in crit_v):
                continue  # that would be umbilic, handled below
            rep, dist = nearest(r0, v)
            if dist <= radius:
                count += 1
                if rep.tag is not SingularClassification.CUSPIDAL_EDGE:
                    bad += 1
    for r0 in crit_v:
        for u in np.linspace(dom.u_min, dom.u_max, 101):
            if any(abs(u - ru) < 1e-6 for ru in crit_u):
                continue
            rep, dist = nearest(u, r0)
            if dist <= radius:
                count += 1
                if rep.tag is not SingularClassification.CUSPIDAL_EDGE:
                    bad += 1
    for ru in crit_u:
        for rv in crit_v:
            rep, dist = nearest(ru, rv)
            if dist <= radius:
                count += 1
                bad += 1  # an umbilic point next to a nondegenerate point
    return CheckResult("flat_accumulation", bad == 0, float(bad), count,
                       f"{bad} violations near {count} close encounters")


def _critical_params(d: RealWeierstrassData, axis: str,
                     scan_n: int = 256) -> List[float]:
    """Zeros of g1' (axis u) or g2' (axis v) inside the domain."""
    if axis == "u":
        jet_fn, lo, hi = d.g1_jet, d.domain.u_min, d.domain.u_max
    else:
        jet_fn, lo, hi = d.g2_jet, d.domain.v_min, d.domain.v_max
    ts = np.linspace(lo, hi, scan_n + 1)
    vals = [jet_fn(t).d1 for t in ts]
    roots = []
    for k in range(scan_n):
        va, vb = vals[k], vals[k + 1]
        if va == 0.0:
            roots.append(float(ts[k]))
            continue
        if (va > 0) == (vb > 0):
            continue
        a, b = float(ts[k]), float(ts[k + 1])
        fa = va
        for _ in range(80):
            m = 0.5 * (a + b)
            fm = jet_fn(m).d1
            if fm == 0.0:
                a = b = m
                break
            if (fm > 0) == (fa > 0):
                a, fa = m, fm
            else:
                b = m
        roots.append(0.5 * (a + b))
    if vals[-1] == 0.0:
        roots.append(float(ts[-1]))
    return roots


# --- batteries ----------------------------------------------------------------


def run_battery(surface: Surface, seed: int = 0) -> List[CheckResult]:
    """Every applicable check for one surface, acceptance-grade point counts."""
    results = [
        check_null_generators(surface, seed=seed),
        check_curvature_routes(surface, seed=seed),
        check_minimality(surface, seed=seed),
        check_sign_theorem(surface, seed=seed),
        check_milnor(surface, seed=seed),
    ]
    if get_data(surface) is not None:
        results += [
            check_energy_gauge(surface, seed=seed),
            check_data_roundtrip(surface, seed=seed),
            check_identities(surface),
            check_duality(surface),
            check_kappa_zero_locus(surface),
            check_main_theorem(surface),
            check_flat_accumulation(surface),
        ]
    return results


def format_results(results: List[CheckResult]) -> str:
    lines = [r.line() for r in results]
    failed = sum(1 for r in results if not r.passed)
    lines.append("all checks passed" if failed == 0
                 else f"{failed} of {len(results)} checks FAILED")
    return "\n".join(lines)


# --- randomized data ------------------------------------------------------------


def _poly_string(coeffs, var: str) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        c = float(c)
        if c == 0.0:
            continue
        if k == 0:
            terms.append("(%r)" % c)
        elif k == 1:
            terms.append("(%r)*%s" % (c, var))
        else:
            terms.append("(%r)*%s^%d" % (c, var, k))
    return "+".join(terms) if terms else "0"


def make_random_poly_data(rng, max_degree: int = 3) -> RealWeierstrassData:
    """Random polynomial data functions with strictly one-signed densities.

    g1, g2 are random polynomials of degree <= max_degree on [-1, 1]^2; the
    densities take the form +-((0.4 + |c|) + (linear)^2), which is bounded
    away from zero, so the data is always admissible.
    """
    while True:
        deg1 = int(rng.integers(1, max_degree + 1))
        deg2 = int(rng.integers(1, max_degree + 1))
        g1 = _poly_string(rng.uniform(-1, 1, deg1 + 1), "u")
        g2 = _poly_string(rng.uniform(-1, 1, deg2 + 1), "v")

        def density(var: str) -> str:
            base = 0.4 + abs(float(rng.uniform(-1, 1)))
            a, b = (float(x) for x in rng.uniform(-1, 1, 2))
            sign = "-" if rng.uniform() < 0.5 else ""
            return "%s((%r) + ((%r)*%s + (%r))^2)" % (sign, base, a, var, b)

        try:
            return RealWeierstrassData.from_strings(
                g1, g2, density("u"), density("v"),
                Rect(-1.0, 1.0, -1.0, 1.0))
        except MinfaceError:
            continue


def make_accumulation_data(rng) -> RealWeierstrassData:
    """Quadratic-g1 data whose flat line crosses the singular curve.

    g1 = a (u - c)^2 + d has a critical line u = c of quasi-umbilic points;
    the linear g2 is arranged so that g1(c) g2(v) = 1 for some v inside the
    domain, making the accumulation property non-vacuous.
    """
    a = float(rng.uniform(0.5, 1.5))
    c = float(rng.uniform(-0.4, 0.4))
    dd = float(rng.uniform(0.6, 1.4))
    v_star = float(rng.uniform(-0.4, 0.4))
    e = float(rng.uniform(0.7, 1.3))
    f2 = 1.0 / dd - e * v_star
    g1 = "(%r)*(u-(%r))^2+(%r)" % (a, c, dd)
    g2 = "(%r)*v+(%r)" % (e, f2)
    return RealWeierstrassData.from_strings(
        g1, g2, "1", "1", Rect(-1.0, 1.0, -1.0, 1.0))
