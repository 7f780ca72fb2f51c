"""
Tests for the distribution optimizer.
"""
import io
import pickle

import numpy as np
import pytest

from codedaloha.codes import repetition_code, spc_code
from codedaloha.ensembles import load_preset, reference_values
from codedaloha.optimizer import (OptProblem, optimize, verify,
                                  project_to_rate, decode, FitnessCache,
                                  SearchFitness, OptimizerError,
                                  InfeasibleRate)
from codedaloha.ensembles.exceptions import ConfigError


def test_project_to_rate(rng):
    """Test the projection onto the p.m.f.s with a target mean length"""
    lengths = np.array([2, 3, 6])
    for _ in range(200):
        pmf = rng.dirichlet(np.ones(3))
        target = rng.uniform(2., 6.)
        p = project_to_rate(pmf, lengths, target)
        assert (p >= 0.).all()
        assert p.sum() == pytest.approx(1.)
        assert p @ lengths == pytest.approx(target, rel=1e-9)

    # A p.m.f. that meets the target is unchanged
    p = project_to_rate([0.25, 0.5, 0.25], lengths, 3.5)
    assert np.allclose(p, [0.25, 0.5, 0.25])

    # Targets outside the candidate lengths
    with pytest.raises(InfeasibleRate):
        project_to_rate([0.5, 0.5], [2, 3], 4.)


def test_decode(rng):
    """Test the mapping of search vectors to p.m.f.s"""
    for _ in range(50):
        p = decode(rng.uniform(-6., 6., size=4), [3, 4, 5, 12], 6.)
        assert p @ [3, 4, 5, 12] == pytest.approx(6.)


def test_opt_problem_validation():
    """Test the validation of optimization problems"""
    rep = [repetition_code(n) for n in (2, 3, 6)]

    # 1. A valid problem
    problem = OptProblem(1, rep, rate=1 / 3)
    assert problem.mode == 'explicit'
    assert problem.target_mean == pytest.approx(3.)
    assert problem.labels == ('11', '111', '111111')

    # 2. Unreachable rates
    with pytest.raises(InfeasibleRate):
        OptProblem(1, rep, rate=0.9)

    # 3. Local rates below 1/6
    with pytest.raises(OptimizerError):
        OptProblem(1, [repetition_code(7)], rate=1 / 7)

    # 4. Mixed or missing candidates and invalid hyperparameters
    with pytest.raises(OptimizerError):
        OptProblem(1, [repetition_code(2), 3], rate=1 / 2)
    with pytest.raises(OptimizerError):
        OptProblem(1, [], rate=1 / 2)
    with pytest.raises(OptimizerError):
        OptProblem(1, rep, rate=1 / 3, crossover=1.5)
    with pytest.raises(OptimizerError):
        OptProblem(2, rep, rate=1 / 3)


def test_opt_problem_from_config():
    """Test the loading of optimization problems"""
    # 1. A random-code problem
    problem = OptProblem.from_config("k: 2\n"
                                     "mode: random\n"
                                     "candidates: 3, 4, 5, 8, 9, 12\n"
                                     "rate: 1/3\n"
                                     "population: 20\n"
                                     "seed: 3\n")
    assert problem.mode == 'random'
    assert problem.lengths == (3, 4, 5, 8, 9, 12)
    assert (problem.population, problem.seed) == (20, 3)

    # 2. An unreachable rate names its line
    with pytest.raises(ConfigError) as e:
        OptProblem.from_config("k: 1\ncandidates: 11, 111\nrate: 0.9\n")
    assert e.value.lineno == 3


def test_fitness_cache(tmpdir):
    """Test the fitness cache in memory and on disk"""
    calls = []

    def score(pmf):
        calls.append(pmf)
        return float(pmf[0])

    # 1. In memory
    cache = FitnessCache()
    assert cache.get_or_compute((0.25, 0.75), score) == 0.25
    assert cache.get_or_compute((0.25 + 1e-9, 0.75 - 1e-9), score) == 0.25
    assert len(calls) == 1

    # 2. On disk, values persist across caches
    cache = FitnessCache(directory=str(tmpdir), namespace='a')
    cache.get_or_compute((0.5, 0.5), score)
    cache.close()
    cache = FitnessCache(directory=str(tmpdir), namespace='a')
    assert cache.get_or_compute((0.5, 0.5), score) == 0.5
    assert cache.hits == 1
    cache.close()

    # 3. Namespaces separate the entries
    cache = FitnessCache(directory=str(tmpdir), namespace='b')
    cache.get_or_compute((0.5, 0.5), score)
    assert cache.misses == 1
    cache.close()


def test_fitness_cache_batches():
    """Test that missing values are computed once per key, from the canonical
    p.m.f., in the order the keys first appear"""
    calls = []

    def score(pmf):
        calls.append(pmf)
        return pmf[0]

    cache = FitnessCache()
    pmfs = [(0.3 + 1e-9, 0.7 - 1e-9), (0.6, 0.4), (0.3 - 1e-9, 0.7 + 1e-9)]
    values = cache.map_or_compute(pmfs, score)
    assert calls == [(0.3, 0.7), (0.6, 0.4)]
    assert values == [0.3, 0.6, 0.3]
    assert (cache.misses, cache.hits) == (2, 1)

    # The values are read back without scoring
    assert cache[(0.6, 0.4)] == 0.6
    assert cache.map_or_compute([(0.6, 0.4)], score) == [0.6]
    assert len(calls) == 2


def test_optimize_single_candidate():
    """Test the degenerate problem with one candidate"""
    result = optimize(OptProblem(1, [repetition_code(2)], rate=1 / 2))
    assert result.pmf == (1.,)
    assert result.threshold == pytest.approx(0.5, abs=1e-4)

    result = optimize(OptProblem(2, [spc_code(2)], rate=2 / 3))
    assert result.threshold == pytest.approx(1 / 3, abs=1e-4)


def test_optimize_small_problem():
    """Test a short optimization over three repetition codes"""
    problem = OptProblem(1, [repetition_code(n) for n in (2, 3, 6)],
                         rate=1 / 3, population=12, generations=15, seed=5)
    result = optimize(problem)

    # 1. The result meets the rate and is re-scored from scratch
    assert sum(result.pmf) == pytest.approx(1.)
    assert result.rate == pytest.approx(1 / 3, abs=1e-6)
    assert result.threshold == verify(result.pmf, problem).threshold

    # 2. The history tracks the best threshold of each generation
    assert len(result.history) == result.generations
    best = [h[1] for h in result.history]
    assert all(a <= b + 1e-12 for a, b in zip(best, best[1:]))
    stream = io.StringIO()
    result.write_history(stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == 'generation,best_threshold,P[11],P[111],P[111111]'
    assert len(lines) == result.generations + 1

    # 3. The search is reproducible, whatever the number of jobs
    again = optimize(problem, jobs=2)
    assert again.pmf == result.pmf


def test_optimize_jobs_independent(rep2):
    """Test that the search result and its counts don't depend on the number
    of worker processes"""
    problem = OptProblem(1, [rep2, repetition_code(3)], rate=0.4,
                         population=20, generations=5, seed=3)
    serial = optimize(problem)
    for _ in range(3):
        parallel = optimize(problem, jobs=8)
        assert parallel.pmf == serial.pmf
        assert parallel.threshold == serial.threshold
        assert parallel.history == serial.history
        assert parallel.evaluations == serial.evaluations
        assert parallel.cache_hits == serial.cache_hits


def test_search_fitness_pickle(rep2):
    """Test that the search fitness can be sent to worker processes"""
    problem = OptProblem(1, [rep2, repetition_code(3)], rate=0.4)
    score = SearchFitness(problem)
    copy = pickle.loads(pickle.dumps(score))
    assert copy((0.5, 0.5)) == score((0.5, 0.5))


@pytest.mark.parametrize('name', ['irsa-r1/3', 'irsa-r2/5', 'csa-r2/5'])
def test_verify_published(name):
    """Test the re-scoring of the published p.m.f.s"""
    ensemble = load_preset(name)
    report = verify(ensemble.pmf, OptProblem.from_ensemble(ensemble))
    assert report.threshold == pytest.approx(
        reference_values[name].threshold, abs=1e-3)


@pytest.mark.slow
def test_optimize_irsa_one_third():
    """Test that a full search matches the published IRSA R=1/3 threshold"""
    problem = OptProblem(1, [repetition_code(n) for n in (2, 3, 6)],
                         rate=1 / 3)
    assert optimize(problem, jobs=0).threshold >= 0.879 - 1e-3


@pytest.mark.slow
def test_optimize_random_codes_one_third():
    """Test that a full search over k=2 random codes reaches the published
    CSA R=1/3 threshold"""
    problem = OptProblem(2, [3, 4, 5, 8, 9, 12], rate=1 / 3)
    result = optimize(problem, jobs=0)
    assert result.rate == pytest.approx(1 / 3, abs=1e-6)
    assert result.threshold >= 0.867
