"""First-order radio energy model.

Transmitting k bits over d meters costs the electronics energy plus a
quadratic free-space amplifier term, e_elec*k + e_amp*k*d^2. Receiving
costs the electronics energy alone. Fusing received signals into one
outgoing packet costs e_da per bit per signal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigInvalid, NegativeInput


@dataclass(frozen=True)
class RadioParams:
    """Radio constants plus the shared packet-size and battery defaults."""

    e_elec: float = 50e-9  # J/bit, transmitter and receiver electronics
    e_amp: float = 100e-12  # J/bit/m^2, transmit amplifier
    e_da: float = 5e-9  # J/bit/signal, data aggregation
    packet_bits: int = 4000
    initial_energy: float = 0.5  # J per node

    def __post_init__(self) -> None:
        for name in ("e_elec", "e_amp", "e_da", "packet_bits", "initial_energy"):
            if getattr(self, name) <= 0:
                raise ConfigInvalid(f"RadioParams.{name} must be strictly positive")


def tx_cost(params: RadioParams, bits: int, d: float) -> float:
    """Energy to transmit `bits` over `d` meters."""
    if bits < 0 or d < 0:
        raise NegativeInput(f"tx_cost needs bits >= 0 and d >= 0, got bits={bits}, d={d}")
    return params.e_elec * bits + params.e_amp * bits * d * d


def rx_cost(params: RadioParams, bits: int) -> float:
    """Energy to receive `bits`; distance-independent."""
    if bits < 0:
        raise NegativeInput(f"rx_cost needs bits >= 0, got {bits}")
    return params.e_elec * bits


def aggregation_cost(params: RadioParams, bits: int, signals: int) -> float:
    """Energy for a cluster head to fuse `signals` packets of `bits` each."""
    if bits < 0 or signals < 0:
        raise NegativeInput(
            f"aggregation_cost needs bits >= 0 and signals >= 0, got bits={bits}, signals={signals}"
        )
    return params.e_da * bits * signals
