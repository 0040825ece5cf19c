"""Shared test utilities and independent oracles."""

from __future__ import annotations

import math

import numpy as np

from wsnsim import Point, RadioParams, RegionSpec, deploy


class FakeRng:
    """Deterministic stand-in yielding a preloaded uniform sequence."""

    def __init__(self, values):
        self._values = list(values)

    def random(self) -> float:
        return self._values.pop(0)


def fresh_deployment(seed: int = 1, nodes_per_region: int = 10, params: RadioParams | None = None):
    rng = np.random.default_rng(seed)
    return deploy(params or RadioParams(), nodes_per_region, rng)


def rejection_sample_region(spec: RegionSpec, rng, n: int) -> list[Point]:
    """Area-uniform oracle sampler: uniform box draws filtered by containment.

    Independent of the polar-transform sampler under test; relies only on
    the region's direct bound checks.
    """
    points: list[Point] = []
    while len(points) < n:
        x = rng.uniform(-spec.r_outer, spec.r_outer)
        y = rng.uniform(-spec.r_outer, spec.r_outer)
        p = Point(x, y)
        if spec.contains(p):
            points.append(p)
    return points


def containment_masks(specs, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """(9, N) boolean matrix of direct containment checks, vectorized.

    Implements each region's half-open radial/angular bounds straight from
    the RegionSpec fields, independently of region_of.
    """
    r = np.hypot(xs, ys)
    theta = np.mod(np.arctan2(ys, xs), 2.0 * math.pi)
    masks = []
    for spec in specs:
        if spec.id == 1:
            masks.append(r <= spec.r_outer)
        else:
            masks.append(
                (r > spec.r_inner)
                & (r <= spec.r_outer)
                & (theta >= spec.theta_start)
                & (theta < spec.theta_end)
            )
    return np.stack(masks)
