"""Nine-region partition of the 50 m deployment disk.

The field is a disk of radius 50 m centred on the base station at the
origin. Region 1 is the inner disk of radius 20 m. Regions 2-5 are the
quadrant sectors of the 20-35 m annulus and regions 6-9 the quadrant
sectors of the 35-50 m annulus. Region k in 2..5 spans angles
[(k-2)*pi/2, (k-1)*pi/2) and region k in 6..9 spans
[(k-6)*pi/2, (k-5)*pi/2), so region k+4 sits radially outward of
region k.

Boundary conventions, chosen so the nine regions tile the disk exactly:
radial intervals are (r_inner, r_outer], except region 1 which takes
[0, 20]; angular intervals are half-open [theta_start, theta_end).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidRegion, OutsideField

FIELD_RADIUS = 50.0
INNER_RADIUS = 20.0
MIDDLE_RADIUS = 35.0

MIDDLE_REGIONS = (2, 3, 4, 5)
OUTER_REGIONS = (6, 7, 8, 9)

_HALF_PI = math.pi / 2.0
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Point:
    x: float
    y: float


#: The base station sits at the origin.
ORIGIN = Point(0.0, 0.0)


@dataclass(frozen=True)
class RegionSpec:
    """Annular-sector bounds for one region."""

    id: int
    r_inner: float
    r_outer: float
    theta_start: float
    theta_end: float

    def contains(self, p: Point) -> bool:
        """Direct containment check against the half-open bounds."""
        r = math.hypot(p.x, p.y)
        if self.id == 1:
            return r <= self.r_outer
        if not (self.r_inner < r <= self.r_outer):
            return False
        theta = _normalized_angle(p)
        return self.theta_start <= theta < self.theta_end


def _normalized_angle(p: Point) -> float:
    """Angle of p in [0, 2*pi), folding the rounding artifact at 2*pi to 0."""
    theta = math.atan2(p.y, p.x) % _TWO_PI
    return 0.0 if theta >= _TWO_PI else theta


def _build_regions() -> tuple[RegionSpec, ...]:
    specs = [RegionSpec(1, 0.0, INNER_RADIUS, 0.0, _TWO_PI)]
    for k in MIDDLE_REGIONS:
        q = k - 2
        specs.append(RegionSpec(k, INNER_RADIUS, MIDDLE_RADIUS, q * _HALF_PI, (q + 1) * _HALF_PI))
    for k in OUTER_REGIONS:
        q = k - 6
        specs.append(RegionSpec(k, MIDDLE_RADIUS, FIELD_RADIUS, q * _HALF_PI, (q + 1) * _HALF_PI))
    return tuple(specs)


#: Canonical specs for regions 1..9, indexable as REGIONS[region_id - 1].
REGIONS: tuple[RegionSpec, ...] = _build_regions()


def region_spec(region_id: int) -> RegionSpec:
    if not 1 <= region_id <= 9:
        raise InvalidRegion(f"region id must be in 1..9, got {region_id}")
    return REGIONS[region_id - 1]


def region_of(p: Point) -> int:
    """Map a point to the id of the unique region containing it.

    Raises OutsideField for points farther than 50 m from the base
    station.
    """
    r = math.hypot(p.x, p.y)
    if r > FIELD_RADIUS:
        raise OutsideField(f"point ({p.x}, {p.y}) lies {r:.3f} m from the base station")
    if r <= INNER_RADIUS:
        return 1
    quadrant = min(int(_normalized_angle(p) / _HALF_PI), 3)
    if r <= MIDDLE_RADIUS:
        return 2 + quadrant
    return 6 + quadrant


def sample_in_region(region: RegionSpec, rng) -> Point:
    """Draw one area-uniform point inside the region.

    Consumes exactly two uniforms from rng, u then v. The radius is
    r = sqrt(r_inner^2 + u * (r_outer^2 - r_inner^2)) so density is
    uniform per unit area rather than per unit radius.
    """
    u = rng.random()
    v = rng.random()
    r = math.sqrt(region.r_inner**2 + u * (region.r_outer**2 - region.r_inner**2))
    theta = region.theta_start + v * (region.theta_end - region.theta_start)
    return Point(r * math.cos(theta), r * math.sin(theta))


def distance(a: Point, b: Point) -> float:
    """Euclidean distance in meters."""
    return math.hypot(a.x - b.x, a.y - b.y)


def _ring_wrap(k: int, lo: int, hi: int) -> int:
    return lo + (k - lo) % (hi - lo + 1)


def nearby_regions(outer_region: int) -> frozenset[int]:
    """Six-region neighbourhood an outer-ring node may associate with.

    Contains the region itself, its two angular neighbours in the outer
    ring, the radially aligned middle region, and that region's two
    angular neighbours, wrapping around within each ring. For region 6
    this is {2, 3, 5, 6, 7, 9}.
    """
    if outer_region not in OUTER_REGIONS:
        raise InvalidRegion(f"nearby_regions needs an outer region 6..9, got {outer_region}")
    middle = outer_region - 4
    return frozenset(
        {
            middle,
            _ring_wrap(middle - 1, 2, 5),
            _ring_wrap(middle + 1, 2, 5),
            outer_region,
            _ring_wrap(outer_region - 1, 6, 9),
            _ring_wrap(outer_region + 1, 6, 9),
        }
    )


def relay_target(outer_region: int) -> int:
    """Fixed relay hop of the multi-hop uplink: 6->2, 7->3, 8->4, 9->5."""
    if outer_region not in OUTER_REGIONS:
        raise InvalidRegion(f"relay_target needs an outer region 6..9, got {outer_region}")
    return outer_region - 4
