"""Node state, deployment, and per-node energy bookkeeping.

One Deployment belongs to exactly one replication; positions are fixed at
deployment time and only energies and alive flags change afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass

from .energy import RadioParams
from .errors import ConfigInvalid, InvalidRegion, NegativeInput
from .geometry import REGIONS, Point, sample_in_region


@dataclass
class NodeState:
    id: int
    position: Point
    region: int
    energy: float
    alive: bool = True

    def debit(self, amount: float) -> float:
        """Deduct energy, clamped at zero; returns the residual actually drawn.

        A node whose balance reaches zero is marked dead. The action that
        triggered the debit is considered to have completed regardless.
        """
        if amount < 0:
            raise NegativeInput(f"debit amount must be non-negative, got {amount}")
        before = self.energy
        self.energy = max(0.0, self.energy - amount)
        if self.energy <= 0.0:
            self.energy = 0.0
            self.alive = False
        return before - self.energy


@dataclass
class Deployment:
    nodes: list[NodeState]
    nodes_per_region: int

    def node(self, node_id: int) -> NodeState:
        # ids are assigned densely from 0, so list position == id
        return self.nodes[node_id]

    def alive_nodes(self) -> list[NodeState]:
        return [n for n in self.nodes if n.alive]

    def alive_count(self) -> int:
        return sum(1 for n in self.nodes if n.alive)

    def total_energy(self) -> float:
        return sum(n.energy for n in self.nodes)


def deploy(params: RadioParams, nodes_per_region: int, rng) -> Deployment:
    """Place nodes_per_region nodes area-uniformly in each of the 9 regions.

    Regions are filled in ascending id order and node ids are assigned
    sequentially, so the draw order (and hence the deployment produced by
    a given stream) is fixed. Every node starts alive at the full initial
    energy.
    """
    if nodes_per_region < 1:
        raise ConfigInvalid(f"nodes_per_region must be >= 1, got {nodes_per_region}")
    nodes: list[NodeState] = []
    for spec in REGIONS:
        for _ in range(nodes_per_region):
            pos = sample_in_region(spec, rng)
            nodes.append(
                NodeState(id=len(nodes), position=pos, region=spec.id, energy=params.initial_energy)
            )
    return Deployment(nodes=nodes, nodes_per_region=nodes_per_region)


def alive_in_region(deployment: Deployment, region: int) -> list[int]:
    """Ids of alive nodes homed in `region`, ascending."""
    if not 1 <= region <= 9:
        raise InvalidRegion(f"region id must be in 1..9, got {region}")
    return [n.id for n in deployment.nodes if n.region == region and n.alive]
