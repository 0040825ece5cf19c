"""Radio model costs and their exact invariants."""

import numpy as np
import pytest

from wsnsim import ConfigInvalid, NegativeInput, RadioParams, aggregation_cost, rx_cost, tx_cost

PARAMS = RadioParams()


def rel_err(got, want):
    return abs(got - want) / abs(want)


def test_tx_cost_exact_values():
    # 50e-9*4000 + 100e-12*4000*2500 = 2.0e-4 + 1.0e-3
    assert rel_err(tx_cost(PARAMS, 4000, 50.0), 1.2e-3) <= 1e-12
    assert rel_err(tx_cost(PARAMS, 4000, 0.0), 2.0e-4) <= 1e-12
    assert tx_cost(PARAMS, 0, 37.5) == 0.0


def test_rx_cost_exact_values():
    assert rel_err(rx_cost(PARAMS, 4000), 2.0e-4) <= 1e-12
    assert rx_cost(PARAMS, 0) == 0.0


def test_aggregation_cost_exact_values():
    assert rel_err(aggregation_cost(PARAMS, 4000, 1), 2.0e-5) <= 1e-12
    assert rel_err(aggregation_cost(PARAMS, 4000, 10), 2.0e-4) <= 1e-12
    assert aggregation_cost(PARAMS, 4000, 0) == 0.0


def test_tx_cost_is_exactly_quadratic_in_distance():
    rng = np.random.default_rng(11)
    for _ in range(100):
        d = float(rng.uniform(0.1, 70.0))
        bits = int(rng.integers(1, 10_000))
        base = tx_cost(PARAMS, bits, 0.0)
        gain_d = tx_cost(PARAMS, bits, d) - base
        gain_2d = tx_cost(PARAMS, bits, 2.0 * d) - base
        assert gain_2d == pytest.approx(4.0 * gain_d, rel=1e-12)


def test_tx_cost_monotone_and_dominates_rx():
    rng = np.random.default_rng(12)
    for _ in range(100):
        bits = int(rng.integers(1, 8000))
        d1, d2 = sorted(rng.uniform(0.0, 80.0, size=2))
        assert tx_cost(PARAMS, bits, d1) <= tx_cost(PARAMS, bits, d2)
        assert tx_cost(PARAMS, bits, d1) >= rx_cost(PARAMS, bits)
    assert tx_cost(PARAMS, 4000, 0.0) == rx_cost(PARAMS, 4000)
    assert tx_cost(PARAMS, 0, 25.0) == rx_cost(PARAMS, 0) == 0.0


def test_costs_linear_in_bits():
    for fn in (lambda b: tx_cost(PARAMS, b, 33.0), lambda b: rx_cost(PARAMS, b), lambda b: aggregation_cost(PARAMS, b, 3)):
        assert fn(6000) == pytest.approx(3.0 * fn(2000), rel=1e-12)


def test_transmit_symmetry_between_endpoints():
    from wsnsim import Point, distance

    a, b = Point(3.0, -7.0), Point(-11.0, 2.0)
    assert tx_cost(PARAMS, 4000, distance(a, b)) == tx_cost(PARAMS, 4000, distance(b, a))


def test_negative_inputs_raise():
    with pytest.raises(NegativeInput):
        tx_cost(PARAMS, -1, 10.0)
    with pytest.raises(NegativeInput):
        tx_cost(PARAMS, 4000, -0.5)
    with pytest.raises(NegativeInput):
        rx_cost(PARAMS, -4000)
    with pytest.raises(NegativeInput):
        aggregation_cost(PARAMS, -1, 1)
    with pytest.raises(NegativeInput):
        aggregation_cost(PARAMS, 4000, -2)


@pytest.mark.parametrize(
    "field",
    ["e_elec", "e_amp", "e_da", "packet_bits", "initial_energy"],
)
def test_radio_params_must_be_positive(field):
    with pytest.raises(ConfigInvalid):
        RadioParams(**{field: 0})
    with pytest.raises(ConfigInvalid):
        RadioParams(**{field: -1e-9})
