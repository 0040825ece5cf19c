"""Round planning and energy accounting for the three protocols.

Each protocol turns the current alive/energy snapshot into a RoundPlan:
which node heads each cluster, which members report to which head, which
outer heads relay through the middle ring, and which nodes talk straight
to the base station. Applying a plan debits every participant in a fixed
order, so a round's total consumption is reproducible bit for bit.

Roles are frozen when the plan is built. A node alive at plan time
performs all of its planned actions even if a debit empties its battery
mid-round; it is simply dead for every later round.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .energy import RadioParams, aggregation_cost, rx_cost, tx_cost
from .errors import EmptyNetwork
from .geometry import (
    MIDDLE_REGIONS,
    ORIGIN,
    OUTER_REGIONS,
    distance,
    nearby_regions,
    relay_target,
)
from .network import Deployment, NodeState

#: Head count the simplified centralized baseline aims for each round.
LEACH_C_TARGET_HEADS = 9


@dataclass
class RoundPlan:
    """Per-round routing decisions, all in terms of node ids.

    cluster_heads maps each head's node id to its home region (LEACH can
    elect several heads in one region, so the map is keyed by node).
    Every entry of bs_senders and direct_senders contributes exactly one
    base-station-bound packet, so the round's offered load is their
    combined length.
    """

    cluster_heads: dict[int, int] = field(default_factory=dict)  # head id -> region
    associations: dict[int, int] = field(default_factory=dict)  # member id -> head id
    relay_edges: list[tuple[int, int]] = field(default_factory=list)  # (outer head, middle head)
    bs_senders: list[int] = field(default_factory=list)
    direct_senders: list[int] = field(default_factory=list)

    def bs_bound_packets(self) -> int:
        return len(self.bs_senders) + len(self.direct_senders)

    def members_of(self) -> dict[int, list[int]]:
        """Member ids per head, ascending within each cluster."""
        out: dict[int, list[int]] = {head: [] for head in self.cluster_heads}
        for member in sorted(self.associations):
            out[self.associations[member]].append(member)
        return out


def _nearest_head(node: NodeState, deployment: Deployment, head_ids) -> int:
    """Closest head to `node`; distance ties break to the lowest head id."""
    return min(
        (distance(node.position, deployment.node(head_id).position), head_id)
        for head_id in head_ids
    )[1]


def dreem_plan(deployment: Deployment, round_index: int = 0) -> RoundPlan:
    """Build the regional max-energy plan for one round.

    Election: in every region 2..9 that still has alive nodes, the alive
    node with the highest residual energy becomes the head, ties broken
    by lowest id. Region 1 never clusters; its alive nodes all report
    directly to the base station.

    Association: a middle-ring member always joins its own region's head.
    An outer-ring member measures the distance to every existing head in
    its six-region neighbourhood and joins the closest one.

    Uplink: every outer head forwards its aggregate to the head of the
    radially aligned middle region; if that region currently has no head,
    the outer head falls back to sending straight to the base station.
    Middle heads always report to the base station. round_index is
    accepted for protocol-interface uniformity; the plan depends only on
    the snapshot.
    """
    alive = deployment.alive_nodes()
    if not alive:
        raise EmptyNetwork("no alive node to plan a round for")

    by_region: dict[int, list[NodeState]] = {r: [] for r in range(1, 10)}
    for node in alive:
        by_region[node.region].append(node)

    head_by_region: dict[int, int] = {}
    for region in range(2, 10):
        candidates = by_region[region]
        if candidates:
            best = max(candidates, key=lambda n: (n.energy, -n.id))
            head_by_region[region] = best.id

    plan = RoundPlan(cluster_heads={head: region for region, head in head_by_region.items()})

    for node in alive:
        if node.region == 1 or node.id in plan.cluster_heads:
            continue
        if node.region in MIDDLE_REGIONS:
            plan.associations[node.id] = head_by_region[node.region]
        else:
            candidates = [
                head_by_region[r] for r in sorted(nearby_regions(node.region)) if r in head_by_region
            ]
            # the node's own region always has a head, so candidates is never empty
            plan.associations[node.id] = _nearest_head(node, deployment, candidates)

    for region in MIDDLE_REGIONS:
        if region in head_by_region:
            plan.bs_senders.append(head_by_region[region])
    for region in OUTER_REGIONS:
        if region not in head_by_region:
            continue
        target = relay_target(region)
        if target in head_by_region:
            plan.relay_edges.append((head_by_region[region], head_by_region[target]))
        else:
            plan.bs_senders.append(head_by_region[region])

    plan.direct_senders = [n.id for n in by_region[1]]
    return plan


@dataclass
class LeachState:
    """Epoch bookkeeping for the probabilistic election.

    round_index is 0-based and advanced by the caller after each planned
    round. Eligibility (ids that have not yet served as head this epoch)
    resets whenever a new epoch of round(1/p) rounds begins.
    """

    p: float = 0.1
    round_index: int = 0
    eligible: set[int] = field(default_factory=set)

    @property
    def epoch_length(self) -> int:
        return max(1, round(1.0 / self.p))


def leach_plan(deployment: Deployment, state: LeachState, rng) -> RoundPlan:
    """Probabilistic election with the classic rotating threshold.

    Eligible alive nodes draw one uniform each, in ascending id order; a
    draw below p / (1 - p * (round_index mod epoch)) elects the node and
    retires it from eligibility until the epoch resets. Members join the
    closest head, ties to the lowest head id, and every head reports to
    the base station. When no head is elected the round falls back to
    every alive node reporting directly.
    """
    step = state.round_index % state.epoch_length
    if step == 0:
        state.eligible = {n.id for n in deployment.nodes}
    threshold = state.p / (1.0 - state.p * step)

    plan = RoundPlan()
    alive = deployment.alive_nodes()
    for node in alive:
        if node.id in state.eligible and rng.random() < threshold:
            plan.cluster_heads[node.id] = node.region
            state.eligible.discard(node.id)

    if not plan.cluster_heads:
        plan.direct_senders = [n.id for n in alive]
        return plan

    head_ids = sorted(plan.cluster_heads)
    for node in alive:
        if node.id not in plan.cluster_heads:
            plan.associations[node.id] = _nearest_head(node, deployment, head_ids)
    plan.bs_senders = head_ids
    return plan


def leach_c_plan(deployment: Deployment, rng=None) -> RoundPlan:
    """Simplified centralized baseline election.

    Candidates are the alive nodes whose energy is at or above the alive
    population's mean; the LEACH_C_TARGET_HEADS highest-energy candidates
    (ties to the lowest id) become heads, fewer if the candidate pool is
    short. Members join the closest head and every head reports to the
    base station. Selection is deterministic; rng is accepted for
    protocol-interface uniformity.
    """
    alive = deployment.alive_nodes()
    if not alive:
        raise EmptyNetwork("no alive node to plan a round for")

    mean_energy = sum(n.energy for n in alive) / len(alive)
    candidates = sorted(
        (n for n in alive if n.energy >= mean_energy), key=lambda n: (-n.energy, n.id)
    )
    heads = candidates[:LEACH_C_TARGET_HEADS]

    plan = RoundPlan(cluster_heads={n.id: n.region for n in heads})
    head_ids = sorted(plan.cluster_heads)
    for node in alive:
        if node.id not in plan.cluster_heads:
            plan.associations[node.id] = _nearest_head(node, deployment, head_ids)
    plan.bs_senders = head_ids
    return plan


def _apply_plan(deployment: Deployment, plan: RoundPlan, params: RadioParams) -> float:
    """Debit every action in the plan; returns the total energy drawn.

    Fixed order: member uplinks in ascending member id (each immediately
    followed by the head's receive), aggregation at each head in
    ascending head id (the head's own sensed packet counts as one extra
    signal), relay hops in plan order (outer transmit, middle receive,
    middle folds the relayed packet in as one more aggregation signal),
    then base-station uplinks (bs_senders, then direct_senders).
    """
    bits = params.packet_bits
    members = plan.members_of()
    consumed = 0.0

    for member_id in sorted(plan.associations):
        head = deployment.node(plan.associations[member_id])
        member = deployment.node(member_id)
        consumed += member.debit(tx_cost(params, bits, distance(member.position, head.position)))
        consumed += head.debit(rx_cost(params, bits))

    for head_id in sorted(plan.cluster_heads):
        head = deployment.node(head_id)
        consumed += head.debit(aggregation_cost(params, bits, len(members[head_id]) + 1))

    for outer_id, middle_id in plan.relay_edges:
        outer = deployment.node(outer_id)
        middle = deployment.node(middle_id)
        consumed += outer.debit(tx_cost(params, bits, distance(outer.position, middle.position)))
        consumed += middle.debit(rx_cost(params, bits))
        consumed += middle.debit(aggregation_cost(params, bits, 1))

    for sender_id in plan.bs_senders:
        sender = deployment.node(sender_id)
        consumed += sender.debit(tx_cost(params, bits, distance(sender.position, ORIGIN)))
    for sender_id in plan.direct_senders:
        sender = deployment.node(sender_id)
        consumed += sender.debit(tx_cost(params, bits, distance(sender.position, ORIGIN)))

    return consumed


def dreem_energy_round(deployment: Deployment, plan: RoundPlan, params: RadioParams) -> float:
    """Apply one planned round of the regional protocol; see _apply_plan."""
    return _apply_plan(deployment, plan, params)


def leach_energy_round(deployment: Deployment, plan: RoundPlan, params: RadioParams) -> float:
    """Apply one planned LEACH or LEACH-C round.

    Those plans carry no relay edges, so the shared executor reduces to
    member uplink, receive, aggregation, and the head's base-station hop.
    """
    return _apply_plan(deployment, plan, params)
