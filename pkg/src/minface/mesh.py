"""Grid sampling with per-vertex fields, Wavefront OBJ and CSV export.

The mesh is a plain triangulated regular grid over the parameter rectangle.
Scalar fields (curvature, signed area density, flat tag, proximity to the
singular set) ride along with each vertex so exports need no recomputation.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Optional, TextIO, Tuple

import numpy as np

from .curvature import flat_classify, gaussian_curvature
from .errors import SingularNeighborhood, SingularPoint
from .lorentz import mdot
from .surface import Surface, as_pair, get_data

# A vertex counts as singular (its K cell is left absent) when the proximity
# proxy |g1 g2 - 1| falls below this.
MESH_SINGULAR_TOL = 1e-8


@dataclass(frozen=True)
class SurfaceMesh:
    """Triangulated regular grid over the parameter rectangle.

    Vertices are stored row-major: the vertex at grid indices (i, j) sits at
    flat index i*(nv+1)+j. Each grid quad is split along its (i, j) to
    (i+1, j+1) diagonal into two triangles. Per-vertex scalars are parallel
    to ``positions``; ``k_values`` and ``flat_tags`` hold None at vertices on
    the singular band, ``area_density`` is None throughout for raw curve
    pairs (it needs the data functions). ``proxies`` is |g1 g2 - 1| when data
    functions exist and |Lambda| otherwise; both vanish exactly on the
    singular set. Arrays are not to be mutated.
    """

    params: np.ndarray     # (N, 2) of (u, v)
    positions: np.ndarray  # (N, 3)
    k_values: Tuple[Optional[float], ...]
    area_density: Tuple[Optional[float], ...]
    flat_tags: Tuple[Optional[int], ...]
    proxies: np.ndarray    # (N,)
    faces: np.ndarray      # (M, 3) int, vertex indices
    nu: int
    nv: int
    singular_polylines: tuple = ()

    @property
    def vertices(self):
        """Per-vertex records (position, K, lambda, flat_tag, proxy)."""
        return [(self.positions[i], self.k_values[i], self.area_density[i],
                 self.flat_tags[i], float(self.proxies[i]))
                for i in range(len(self.positions))]


def sample_grid(d: Surface, nu: int, nv: int) -> SurfaceMesh:
    """Sample a surface on an (nu+1) x (nv+1) grid of its domain rectangle.

    Positions come from the curve integrals, cached once per axis. The K
    cell is withheld (None) where the singular proxy is at most
    MESH_SINGULAR_TOL, and the flat tag likewise (flatness is undefined on
    the singular set).
    """
    from .singular import signed_area_density

    if nu < 2 or nv < 2:
        raise ValueError(f"need nu, nv >= 2, got ({nu!r}, {nv!r})")
    pair = as_pair(d)
    data = get_data(d)
    us = pair.domain.u_grid(nu + 1)
    vs = pair.domain.v_grid(nv + 1)
    # positions split into per-axis curve integrals, so sample each axis once
    phi = np.array([pair.phi_delta(u) for u in us])
    psi = np.array([pair.psi_delta(v) for v in vs])
    n_pts = (nu + 1) * (nv + 1)
    params = np.empty((n_pts, 2))
    positions = np.empty((n_pts, 3))
    proxies = np.empty(n_pts)
    k_values = []
    densities = []
    flat_tags = []
    for i, u in enumerate(us):
        for j, v in enumerate(vs):
            k = i * (nv + 1) + j
            params[k] = (u, v)
            positions[k] = 0.5 * (phi[i] + psi[j]) + pair.f0
            if data is not None:
                proxy = abs(data.g1_jet(u).value * data.g2_jet(v).value - 1.0)
                masked = proxy <= MESH_SINGULAR_TOL
                k_val = None if masked else gaussian_curvature(d, u, v)
                densities.append(signed_area_density(d, u, v))
            else:
                proxy = abs(0.25 * mdot(pair.phi_prime_value(u),
                                        pair.psi_prime_value(v)))
                try:
                    k_val = gaussian_curvature(d, u, v)
                except (SingularPoint, SingularNeighborhood):
                    k_val = None
                densities.append(None)
            proxies[k] = proxy
            k_values.append(k_val)
            try:
                flat_tags.append(flat_classify(d, u, v).tag.code)
            except SingularPoint:
                flat_tags.append(None)
    faces = []
    for i in range(nu):
        for j in range(nv):
            v00 = i * (nv + 1) + j
            v10 = (i + 1) * (nv + 1) + j
            v01 = i * (nv + 1) + j + 1
            v11 = (i + 1) * (nv + 1) + j + 1
            faces.append((v00, v10, v11))
            faces.append((v00, v11, v01))
    return SurfaceMesh(params, positions, tuple(k_values), tuple(densities),
                       tuple(flat_tags), proxies, np.array(faces, dtype=int),
                       nu, nv)


def _with_writer(destination, emit) -> None:
    if hasattr(destination, "write"):
        emit(destination)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            emit(fh)


def export_obj(m: SurfaceMesh, path) -> None:
    """Wavefront OBJ with full-precision vertices and 1-based face indices."""

    def emit(fh: TextIO) -> None:
        for x in m.positions:
            fh.write("v %.17g %.17g %.17g\n" % (x[0], x[1], x[2]))
        for f in m.faces:
            fh.write("f %d %d %d\n" % (f[0] + 1, f[1] + 1, f[2] + 1))

    _with_writer(path, emit)


def export_fields_csv(m: SurfaceMesh, path) -> None:
    """Per-vertex scalar fields, one row per vertex in row-major grid order.

    Columns: u, v, x0, x1, x2, K, lambda, flat_tag, sing_proxy. Cells whose
    value is withheld on the mesh (K and flat_tag on the singular band,
    lambda for raw curve pairs) are left empty.
    """

    def fmt(x) -> str:
        return "" if x is None else "%.17g" % x

    def emit(fh: TextIO) -> None:
        writer = csv.writer(fh)
        writer.writerow(["u", "v", "x0", "x1", "x2", "K", "lambda",
                         "flat_tag", "sing_proxy"])
        for k in range(len(m.positions)):
            u, v = m.params[k]
            x = m.positions[k]
            tag = m.flat_tags[k]
            writer.writerow([
                "%.17g" % u, "%.17g" % v,
                "%.17g" % x[0], "%.17g" % x[1], "%.17g" % x[2],
                fmt(m.k_values[k]), fmt(m.area_density[k]),
                "" if tag is None else str(tag),
                "%.17g" % m.proxies[k]])

    _with_writer(path, emit)
