#!/usr/bin/env python3
"""Follow one seeded replication of the regional max-energy protocol.

Runs a single replication with the default configuration and narrates
the lifecycle: the 14-packet plateau while everyone is alive, the first
death, and the slow decline as the rings empty out.
"""

import numpy as np

from wsnsim import SimConfig, run_once

config = SimConfig(protocol="dreem_me", seed=42)
result = run_once(config, run_index=1)

first = result.rounds[0]
print("=== Round 1 ===")
print(f"alive={first.alive}  heads={first.ch_count}  sent={first.sent_to_bs}  "
      f"received={first.received_at_bs}  dropped={first.dropped}")

print("\n=== Plateau while all 90 nodes live ===")
plateau = [m for m in result.rounds if m.alive == 90]
sent_values = {m.sent_to_bs for m in plateau}
print(f"{len(plateau)} all-alive rounds, sent_to_bs values seen: {sorted(sent_values)}")
print(f"mean received during the plateau: {np.mean([m.received_at_bs for m in plateau]):.2f} "
      f"(expected 14 x 0.7 = 9.8)")

print("\n=== Milestones ===")
print(f"first node death : round {result.first_node_death_round}")
half = next(m.round for m in result.rounds if m.dead >= 45)
print(f"half the network : round {half}")
print(f"all dead         : round {result.all_dead_round}")

print("\n=== Death round by ring ===")
for name, regions in (("outer ring (6-9)", {6, 7, 8, 9}), ("middle ring (2-5)", {2, 3, 4, 5}), ("region 1", {1})):
    deaths = [
        result.node_death_rounds[node_id]
        for node_id, region in enumerate(result.node_regions)
        if region in regions
    ]
    print(f"{name:18s}: mean {np.mean(deaths):7.1f}, first {min(deaths)}, last {max(deaths)}")

total = sum(m.energy_consumed for m in result.rounds)
print(f"\ntotal energy drained: {total:.6f} J of {90 * 0.5} J deployed")
