"""
Tests for the Monte Carlo throughput simulations.
"""
import io
import json

import numpy as np
import pytest

from codedaloha.ensembles import load_preset, reference_values
from codedaloha.ensembles.exceptions import ConfigError
from codedaloha.simulator import (simulate, load_grid, load_count,
                                  load_simulation, write_points, build_frame,
                                  poisson_fit, slotted_aloha_throughput,
                                  SimulationError, SIM_COLUMNS)


def test_load_grid():
    """Test the parsing of offered loads"""
    assert load_grid('0.5') == [0.5]
    assert load_grid('0.1, 0.2,0.3') == [0.1, 0.2, 0.3]
    assert load_grid('0.1:0.3:0.1') == [0.1, 0.2, 0.3]
    assert load_grid('1/2') == [0.5]

    for text in ('', '0:1', '0:1:0', '1:0:-0.5', '-0.1'):
        with pytest.raises(SimulationError):
            load_grid(text)


def test_load_count():
    """Test the rounding of the number of users"""
    assert load_count(0.5, 1000, 2) == 250
    assert load_count(0.3333, 100, 1) == 33
    assert load_count(0., 1000, 2) == 0


def test_load_simulation(tmpdir):
    """Test the loading of simulation configurations"""
    text = ("k: 1\n"
            "entries:\n"
            "  11: 1\n"
            "slots: 200\n"
            "loads: 0.1:0.5:0.2\n"
            "seed: 7\n")

    # 1. From text and file
    sim = load_simulation(text)
    assert (sim.slots, sim.trials, sim.seed) == (200, 100, 7)
    assert sim.loads == [0.1, 0.3, 0.5]
    assert sim.ensemble.k == 1

    path = tmpdir.join('sim.txt')
    path.write(text)
    assert load_simulation(str(path)).loads == sim.loads

    # 2. An invalid load range names its line
    with pytest.raises(ConfigError) as e:
        load_simulation(text.replace('0.1:0.5:0.2', '0.1:0.5:0'))
    assert e.value.lineno == 5

    # 3. A given ensemble replaces the configured one
    sim = load_simulation("slots: 100\n", ensemble=load_preset('csa-r1/2'))
    assert sim.ensemble.k == 2
    assert sim.loads == [1.]


def test_simulate_points():
    """Test the fields of the simulated points"""
    ensemble = load_preset('csa-r1/2')
    points = simulate(ensemble, 100, [0., 0.3, 1.2], trials=5, base_seed=4)

    assert [p.M for p in points] == [0, 15, 60]
    for point in points:
        assert point.N == 100
        assert point.trials == 5
        assert point.G_actual == 2 * point.M / 100
        assert point.S_mean == pytest.approx(point.G_actual *
                                             (1. - point.PLR))
        assert 0. <= point.PLR <= 1.
        assert point.S_stderr >= 0.

    # No users, no losses
    assert points[0].S_mean == 0.
    assert points[0].avg_peel_iters == 0.

    # Far above the threshold, most bursts are lost
    assert points[2].PLR > 0.5


def test_simulate_single_trial():
    """Test that the standard error is omitted for a single frame"""
    point, = simulate(load_preset('irsa-r1/2'), 100, [0.4], trials=1)
    assert point.S_stderr is None

    stream = io.StringIO()
    write_points([point], stream)
    header, row = stream.getvalue().splitlines()
    assert header == ','.join(SIM_COLUMNS)
    assert row.split(',')[SIM_COLUMNS.index('S_stderr')] == ''


def test_simulate_reproducible():
    """Test that simulations depend on the seed only"""
    ensemble = load_preset('csa-r1/3')
    first = simulate(ensemble, 200, [0.5, 0.8], trials=6, base_seed=12)
    assert simulate(ensemble, 200, [0.5, 0.8], trials=6,
                    base_seed=12) == first
    assert simulate(ensemble, 200, [0.5, 0.8], trials=6, base_seed=12,
                    jobs=2) == first
    assert simulate(ensemble, 200, [0.5, 0.8], trials=6,
                    base_seed=13) != first


def test_simulate_errors():
    """Test the rejection of invalid simulations"""
    ensemble = load_preset('csa-r1/2')
    with pytest.raises(SimulationError):
        simulate(ensemble, 100, [0.5], trials=0)
    with pytest.raises(SimulationError):
        simulate(ensemble, 101, [0.5], trials=1)


def test_write_points_json():
    """Test the JSON output of simulations"""
    points = simulate(load_preset('irsa-r1/2'), 50, [0.2], trials=2)
    stream = io.StringIO()
    write_points(points, stream, fmt='json', summary={'seed': 2010})
    data = json.loads(stream.getvalue())
    assert data['seed'] == 2010
    assert len(data['records']) == 1
    assert set(data['records'][0]) == set(SIM_COLUMNS)


def test_slotted_aloha_throughput():
    """Test the slotted ALOHA baseline"""
    G = np.linspace(0., 3., 3001)
    S = slotted_aloha_throughput(G)
    assert G[np.argmax(S)] == pytest.approx(1.)
    assert S.max() == pytest.approx(np.exp(-1.))


def test_poisson_slot_degrees():
    """Test that the slot degrees of frames with 10,000 users follow the
    Poisson law of mean (n̄/k) G"""
    ensemble = load_preset('irsa-r1/3')
    M, N = 10000, 20000
    G = ensemble.k * M / N
    mean = ensemble.mean_length / ensemble.k * G

    # Each frame fails the 1% level with probability 0.01
    passed = 0
    for seed in range(5):
        fit = poisson_fit(build_frame(M, N, ensemble, seed), mean)
        assert fit.bins >= 4
        passed += fit.pvalue > 0.01
    assert passed >= 4

    # Tiny frames can't be binned
    with pytest.raises(SimulationError):
        poisson_fit(build_frame(1, 4, load_preset('irsa-r1/2'), 1), 0.5)


@pytest.mark.slow
@pytest.mark.parametrize('name', sorted(reference_values))
def test_throughput_below_threshold(name):
    """Test that frames of 1000 slots lose few bursts at 80% of the
    threshold"""
    G = 0.8 * reference_values[name].threshold
    point, = simulate(load_preset(name), 1000, [G], trials=2000, jobs=0)
    assert point.S_mean >= 0.9 * G


@pytest.mark.slow
def test_peak_throughput():
    """Test the peak throughputs of frames of 1000 slots"""
    loads = [0.6, 0.65, 0.7, 0.75, 0.8, 0.82, 0.84, 0.86]
    points = simulate(load_preset('csa-r1/3'), 1000, loads, trials=200,
                      jobs=0)
    assert max(p.S_mean for p in points) > 0.8

    points = simulate(load_preset('csa-r1/2'), 1000, loads, trials=200,
                      jobs=0)
    assert max(p.S_mean for p in points) > 0.6
