"""Cross-replication aggregation into mean and confidence-band series."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats as scipy_stats

from .engine import RunResult
from .errors import EmptyInput

#: Metrics the CLI aggregates and the plot script renders.
AGGREGATE_METRICS = ("dead", "sent_to_bs", "received_at_bs", "dropped")


@dataclass
class AggregateSeries:
    """Per-round mean, Student-t confidence band, and min/max envelope."""

    metric: str
    rounds: np.ndarray  # (H,) 1-based round indices
    mean: np.ndarray
    ci_low: np.ndarray
    ci_high: np.ndarray
    minimum: np.ndarray
    maximum: np.ndarray
    n_runs: np.ndarray  # (H,) runs contributing per round


def _terminal_value(result: RunResult, metric: str) -> float:
    # A run shorter than the horizon ended with the network dead, so it
    # keeps contributing its terminal state: everything zero except the
    # dead count, which stays at the node total.
    if metric == "dead":
        last = result.rounds[-1]
        return float(last.alive + last.dead)
    return 0.0


def _metric_matrix(results: list[RunResult], metric: str) -> np.ndarray:
    horizon = max(len(r.rounds) for r in results)
    mat = np.empty((len(results), horizon), dtype=float)
    for i, result in enumerate(results):
        values = [float(getattr(m, metric)) for m in result.rounds]
        values.extend([_terminal_value(result, metric)] * (horizon - len(values)))
        mat[i] = values
    return mat


def aggregate(results: list[RunResult], metric: str, confidence: float = 0.95) -> AggregateSeries:
    """Per-round mean and Student-t confidence interval across runs.

    The half-width at each round is t(1-(1-confidence)/2, n-1) * s/sqrt(n)
    with s the sample standard deviation over the n runs; a single run
    yields a degenerate interval at the observed value. Terminated runs
    are padded to the longest run's horizon (see _terminal_value), so
    every round aggregates over all n runs.
    """
    if not results:
        raise EmptyInput("aggregate needs at least one replication")
    mat = _metric_matrix(results, metric)
    n, horizon = mat.shape
    mean = mat.mean(axis=0)
    if n > 1:
        s = mat.std(axis=0, ddof=1)
        half = scipy_stats.t.ppf(0.5 + confidence / 2.0, n - 1) * s / math.sqrt(n)
    else:
        half = np.zeros_like(mean)
    return AggregateSeries(
        metric=metric,
        rounds=np.arange(1, horizon + 1),
        mean=mean,
        ci_low=mean - half,
        ci_high=mean + half,
        minimum=mat.min(axis=0),
        maximum=mat.max(axis=0),
        n_runs=np.full(horizon, n, dtype=int),
    )
