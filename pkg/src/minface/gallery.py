"""Bundled example surfaces.

Four standard datasets exercise every code path: the timelike Enneper
surface and its conjugate (swallowtails vs cuspidal cross caps on the same
singular locus), a surface whose singular curve consists of cuspidal edges
passing through a quasi-umbilic accumulation, and a raw null-curve pair
whose curvature changes sign along coordinate axes of flat points.
"""

from __future__ import annotations

import copy
from typing import List

from .errors import SpecFileError
from .surface import Surface, surface_from_dict

_SPECS = {
    "enneper": {
        "mode": "weierstrass",
        "g1": "u", "g2": "-v", "w1": "1/2", "w2": "1/2",
        "domain": {"u": [-3.0, 3.0], "v": [-3.0, 3.0]},
        "base": [0.0, 0.0],
        "f0": [0.0, 0.0, 0.0],
    },
    "enneper-conj": {
        "mode": "weierstrass",
        "g1": "u", "g2": "-v", "w1": "1/2", "w2": "-1/2",
        "domain": {"u": [-3.0, 3.0], "v": [-3.0, 3.0]},
        "base": [0.0, 0.0],
        "f0": [0.0, 0.0, 0.0],
    },
    "ce-quasiumbilic": {
        "mode": "weierstrass",
        "g1": "u", "g2": "1+v^2", "w1": "1", "w2": "1",
        "domain": {"u": [0.0, 2.0], "v": [-2.0, 2.0]},
        "base": [0.0, 0.0],
        "f0": [0.0, 0.0, 0.0],
    },
    "kchange": {
        "mode": "curves",
        "phi": ["u+u^5/5", "2/3*u^3", "u-u^5/5"],
        "psi": ["-v-v^5/5", "2/3*v^3", "v-v^5/5"],
        "domain": {"u": [-2.0, 2.0], "v": [-2.0, 2.0]},
        "base": [0.0, 0.0],
        "f0": [0.0, 0.0, 0.0],
    },
}

_BLURBS = {
    "enneper": "timelike Enneper surface; swallowtails at (1,-1) and (-1,1)",
    "enneper-conj": "conjugate Enneper surface; cuspidal cross caps instead",
    "ce-quasiumbilic": "cuspidal-edge curve through a quasi-umbilic point",
    "kchange": "raw null-curve pair whose curvature sign flips on the axes",
}


def names() -> List[str]:
    return list(_SPECS)


def describe(name: str) -> str:
    return _BLURBS[name]


def spec_dict(name: str) -> dict:
    if name not in _SPECS:
        raise SpecFileError(
            f"no gallery surface {name!r}; choices: " + ", ".join(_SPECS))
    return copy.deepcopy(_SPECS[name])


def get(name: str) -> Surface:
    return surface_from_dict(spec_dict(name))
