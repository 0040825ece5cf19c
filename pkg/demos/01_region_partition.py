#!/usr/bin/env python3
"""Walk through the nine-region field partition.

Shows how the 50 m disk splits into the inner disk, four middle sectors,
and four outer sectors; where sampled nodes land; and how the outer-ring
adjacency and relay maps look. Saves a scatter of one deployment to
demos/output/region_partition.png.
"""

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from wsnsim import (
    Point,
    RadioParams,
    deploy,
    nearby_regions,
    region_of,
    region_spec,
    relay_target,
)

print("=== Region layout ===")
for region_id in range(1, 10):
    spec = region_spec(region_id)
    print(
        f"region {region_id}: r in ({spec.r_inner:.0f}, {spec.r_outer:.0f}] m, "
        f"theta in [{math.degrees(spec.theta_start):5.1f}, {math.degrees(spec.theta_end):5.1f}) deg"
    )

print("\n=== Point lookups ===")
for x, y in ((0, 0), (25, 0), (0, 40), (-30, -30)):
    print(f"({x:4}, {y:4}) -> region {region_of(Point(x, y))}")

print("\n=== Outer-ring neighbourhoods and relay targets ===")
for outer in (6, 7, 8, 9):
    near = sorted(nearby_regions(outer))
    print(f"region {outer}: nearby {near}, relays through region {relay_target(outer)}")

print("\n=== One deployment, 10 nodes per region ===")
rng = np.random.default_rng(7)
dep = deploy(RadioParams(), 10, rng)
for region_id in range(1, 10):
    radii = [math.hypot(n.position.x, n.position.y) for n in dep.nodes if n.region == region_id]
    print(f"region {region_id}: mean radius {np.mean(radii):5.2f} m over {len(radii)} nodes")

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)
fig, ax = plt.subplots(figsize=(6, 6))
for radius in (20, 35, 50):
    ax.add_patch(plt.Circle((0, 0), radius, fill=False, color="gray", linewidth=0.8))
for angle in (0, math.pi / 2, math.pi, 3 * math.pi / 2):
    ax.plot(
        [20 * math.cos(angle), 50 * math.cos(angle)],
        [20 * math.sin(angle), 50 * math.sin(angle)],
        color="gray",
        linewidth=0.8,
    )
colors = plt.cm.tab10(np.linspace(0, 1, 10))
for node in dep.nodes:
    ax.plot(node.position.x, node.position.y, "o", color=colors[node.region], markersize=4)
ax.plot(0, 0, "k^", markersize=10, label="base station")
ax.set_aspect("equal")
ax.set_xlim(-55, 55)
ax.set_ylim(-55, 55)
ax.set_title("90-node deployment over the 9-region field")
ax.legend(loc="upper right")
path = out_dir / "region_partition.png"
fig.savefig(path, dpi=120)
print(f"\nwrote {path}")
