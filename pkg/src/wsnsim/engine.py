"""Seeded round-by-round replication driver and the lossy uplink channel.

A replication owns one deployment and one random stream. The stream is a
substream of the master seed keyed by the run index and is consumed in a
fixed, documented order: deployment draws first, then for every round the
election draws (probabilistic protocols only) followed by that round's
channel draws in sender-id order. Identical (config, run_index) pairs
therefore reproduce identical results.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .energy import RadioParams
from .errors import ConfigInvalid, NegativeInput
from .network import deploy
from .protocols import (
    LeachState,
    dreem_energy_round,
    dreem_plan,
    leach_c_plan,
    leach_energy_round,
    leach_plan,
)

PROTOCOLS = ("dreem_me", "leach", "leach_c")


@dataclass(frozen=True)
class SimConfig:
    protocol: str = "dreem_me"
    radio: RadioParams = field(default_factory=RadioParams)
    nodes_per_region: int = 10
    drop_prob: float = 0.3
    max_rounds: int = 5000
    seed: int = 1
    runs: int = 5

    def validate(self) -> None:
        if self.protocol not in PROTOCOLS:
            raise ConfigInvalid(f"protocol must be one of {PROTOCOLS}, got {self.protocol!r}")
        if not 0.0 <= self.drop_prob <= 1.0:
            raise ConfigInvalid(f"drop_prob must lie in [0, 1], got {self.drop_prob}")
        if self.runs < 1:
            raise ConfigInvalid(f"runs must be >= 1, got {self.runs}")
        if self.max_rounds < 1:
            raise ConfigInvalid(f"max_rounds must be >= 1, got {self.max_rounds}")
        if self.nodes_per_region < 1:
            raise ConfigInvalid(f"nodes_per_region must be >= 1, got {self.nodes_per_region}")


@dataclass(frozen=True)
class RoundMetrics:
    round: int
    alive: int
    dead: int
    sent_to_bs: int
    received_at_bs: int
    dropped: int
    energy_consumed: float
    ch_count: int = 0  # diagnostic; not part of the CSV row


@dataclass
class RunResult:
    rounds: list[RoundMetrics]
    first_node_death_round: int | None
    all_dead_round: int | None
    # diagnostics for lifetime analysis: home region and death round per node id
    node_regions: list[int]
    node_death_rounds: list[int | None]


def channel(sent_packets: int, drop_prob: float, rng) -> tuple[int, int]:
    """Bernoulli per-packet loss on the base-station uplink.

    Draws one uniform per packet, in sender-id order; a draw below
    drop_prob loses that packet. Returns (received, dropped), which
    always sum to sent_packets. Intra-network hops are never lossy.
    """
    if sent_packets < 0:
        raise NegativeInput(f"sent_packets must be >= 0, got {sent_packets}")
    dropped = 0
    for _ in range(sent_packets):
        if rng.random() < drop_prob:
            dropped += 1
    return sent_packets - dropped, dropped


def run_once(config: SimConfig, run_index: int) -> RunResult:
    """Execute one seeded replication.

    Each round takes the alive snapshot, builds the protocol's plan,
    applies the energy debits, pushes the base-station-bound packets
    through the lossy channel, and records one RoundMetrics row with the
    post-round alive/dead counts. The loop stops after max_rounds or at
    the end of the round in which the last node died.
    """
    config.validate()
    rng = np.random.default_rng(np.random.SeedSequence(config.seed, spawn_key=(run_index,)))
    dep = deploy(config.radio, config.nodes_per_region, rng)
    total = len(dep.nodes)

    leach_state = LeachState() if config.protocol == "leach" else None
    rounds: list[RoundMetrics] = []
    node_death_rounds: list[int | None] = [None] * total
    first_death: int | None = None
    all_dead: int | None = None

    for round_no in range(1, config.max_rounds + 1):
        if config.protocol == "dreem_me":
            plan = dreem_plan(dep, round_no)
            consumed = dreem_energy_round(dep, plan, config.radio)
        elif config.protocol == "leach":
            plan = leach_plan(dep, leach_state, rng)
            leach_state.round_index += 1
            consumed = leach_energy_round(dep, plan, config.radio)
        else:
            plan = leach_c_plan(dep, rng)
            consumed = leach_energy_round(dep, plan, config.radio)

        sent = plan.bs_bound_packets()
        received, dropped = channel(sent, config.drop_prob, rng)

        for node in dep.nodes:
            if not node.alive and node_death_rounds[node.id] is None:
                node_death_rounds[node.id] = round_no
        alive_count = dep.alive_count()
        dead_count = total - alive_count

        rounds.append(
            RoundMetrics(
                round=round_no,
                alive=alive_count,
                dead=dead_count,
                sent_to_bs=sent,
                received_at_bs=received,
                dropped=dropped,
                energy_consumed=consumed,
                ch_count=len(plan.cluster_heads),
            )
        )
        if first_death is None and dead_count > 0:
            first_death = round_no
        if alive_count == 0:
            all_dead = round_no
            break

    return RunResult(
        rounds=rounds,
        first_node_death_round=first_death,
        all_dead_round=all_dead,
        node_regions=[n.region for n in dep.nodes],
        node_death_rounds=node_death_rounds,
    )


def run_many(config: SimConfig) -> list[RunResult]:
    """Run config.runs independent replications, run indices 1..runs."""
    config.validate()
    return [run_once(config, run_index) for run_index in range(1, config.runs + 1)]
