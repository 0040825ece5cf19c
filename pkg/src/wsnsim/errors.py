"""Exception types shared across the simulator."""


class WsnSimError(Exception):
    """Base class for all simulator errors."""


class OutsideField(WsnSimError):
    """A point lies beyond the 50 m deployment disk."""


class InvalidRegion(WsnSimError):
    """A region id outside the range the operation accepts."""


class NegativeInput(WsnSimError):
    """A bit count, distance, packet count, or debit amount was negative."""


class EmptyNetwork(WsnSimError):
    """A round plan was requested while no node is alive."""


class ConfigInvalid(WsnSimError):
    """A configuration value violates its invariants."""


class EmptyInput(WsnSimError):
    """An aggregation was requested over zero replications."""
