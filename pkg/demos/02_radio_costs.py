#!/usr/bin/env python3
"""Explore the first-order radio cost model.

Prints the per-packet transmit/receive/aggregation costs at the default
constants and plots how the transmit cost grows with distance. Saves the
curve to demos/output/radio_costs.png.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from wsnsim import RadioParams, aggregation_cost, rx_cost, tx_cost

params = RadioParams()
k = params.packet_bits

print("=== Defaults ===")
print(f"electronics   : {params.e_elec * 1e9:.0f} nJ/bit")
print(f"amplifier     : {params.e_amp * 1e12:.0f} pJ/bit/m^2")
print(f"aggregation   : {params.e_da * 1e9:.0f} nJ/bit/signal")
print(f"packet size   : {k} bits")
print(f"battery       : {params.initial_energy} J")

print("\n=== One 4000-bit packet ===")
for d in (0, 10, 20, 35, 50):
    print(f"tx over {d:2d} m : {tx_cost(params, k, d) * 1e3:.4f} mJ")
print(f"rx            : {rx_cost(params, k) * 1e3:.4f} mJ")
print(f"aggregate x10 : {aggregation_cost(params, k, 10) * 1e3:.4f} mJ")

budget = params.initial_energy
worst_round = tx_cost(params, k, 50)
print(f"\nA node at the field edge could afford {budget / worst_round:,.0f} direct uplinks.")

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)
d = np.linspace(0, 70, 200)
fig, ax = plt.subplots(figsize=(7, 4.5))
ax.plot(d, [tx_cost(params, k, x) * 1e3 for x in d], label="transmit")
ax.axhline(rx_cost(params, k) * 1e3, color="tab:orange", linestyle="--", label="receive")
ax.set_xlabel("distance (m)")
ax.set_ylabel("energy per 4000-bit packet (mJ)")
ax.set_title("Quadratic path loss on top of fixed electronics cost")
ax.grid(True, alpha=0.3)
ax.legend()
fig.tight_layout()
path = out_dir / "radio_costs.png"
fig.savefig(path, dpi=120)
print(f"wrote {path}")
