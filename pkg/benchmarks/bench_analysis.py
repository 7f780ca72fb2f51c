"""
Benchmark the threshold search and the frame simulations.
"""
import tempfile
import shutil

from codedaloha.codes import repetition_code
from codedaloha.density_evolution import threshold
from codedaloha.ensembles import load_preset, stats, random_code_counts
from codedaloha.optimizer import OptProblem, optimize
from codedaloha.simulator import build_frame, peel, simulate


class ThresholdSuite:

    params = ['irsa-r1/3', 'csa-r1/3', 'csa-r2/5']
    param_names = ['preset']

    def setup(self, preset):
        self.stats = stats(load_preset(preset))

    def time_threshold_grid(self, preset):
        """Benchmark the bisection with the fixed-point grid."""
        threshold(self.stats, method='grid')

    def time_threshold_both(self, preset):
        """Benchmark the bisection with density evolution and the grid."""
        threshold(self.stats, method='both')


class CountsSuite:

    def time_exact_counts(self):
        """Benchmark the enumeration of the qualifying (2, 12) matrices."""
        random_code_counts.cache_clear()
        random_code_counts(2, 12)


class OptimizerSuite:

    timeout = 300

    def setup(self):
        self.tmpdir = tempfile.mkdtemp()
        self.problem = OptProblem(1, [repetition_code(n) for n in (2, 3, 6)],
                                  rate=1 / 3, generations=20)

    def teardown(self):
        shutil.rmtree(self.tmpdir)

    def time_optimize(self):
        optimize(self.problem)

    def time_optimize_cached(self):
        """Benchmark a search repeated with a persistent cache."""
        optimize(self.problem, cache_dir=self.tmpdir)
        optimize(self.problem, cache_dir=self.tmpdir)


class SimulationSuite:

    params = [1000, 10000]
    param_names = ['slots']

    def setup(self, slots):
        self.ensemble = load_preset('csa-r1/3')
        self.graph = build_frame(int(0.8 * slots / 2), slots, self.ensemble,
                                 2010)

    def time_peel(self, slots):
        peel(self.graph)

    def time_simulate(self, slots):
        simulate(self.ensemble, slots, [0.8], trials=10)
