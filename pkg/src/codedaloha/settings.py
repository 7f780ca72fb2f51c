from .__version__ import __version__  # noqa: F401


#: Codes
#: -----

#: The largest code length (number of encoded segments) supported. All
#: column-subset enumerations are exact up to this length.
max_code_length = 16

#: The largest code dimension (information segments per burst) for explicit
#: codes
max_code_dimension = 4

#: The largest code dimension supported under the random-code hypothesis
max_random_dimension = 3

#: The maximum number of column-multiset classes enumerated for a single
#: (k, n) random-code ensemble
enumeration_budget = 200000

#: Number of column-multiset classes processed together in one vectorized
#: chunk
enumeration_chunk = 4096

#: Ensembles
#: ---------

#: Tolerance on the sum of a probability mass function
pmf_tolerance = 1e-12

#: Configured p.m.f.s given with rounded decimals are renormalized, with a
#: warning, if their sum is within this tolerance of one
pmf_rounding_tolerance = 1e-5

#: Maximum number of draws when sampling a qualifying generator matrix
max_sample_draws = 10000

#: Density Evolution
#: -----------------

#: Convergence threshold on the erasure probability for a DE run
de_tolerance = 1e-10

#: Maximum number of DE iterations before a run is declared indeterminate
de_max_iter = 10000

#: A run has stalled when successive erasure probabilities differ by less
#: than this factor times the convergence threshold
de_stall_factor = 1e-2

#: Default bisection tolerance on the threshold
threshold_tolerance = 1e-5

#: Number of uniform grid points on (0, 1] for the fixed-point scan
grid_points = 10000

#: Geometric grid refinement near zero: (smallest exponent, largest exponent,
#: number of points)
grid_refinement = (-12, -4, 400)

#: Number of loads scanned before bisection to bracket the threshold and
#: detect non-monotone admissibility
threshold_prescan = 16

#: The logical load can't exceed one information segment per slot
max_logical_load = 1.0

#: Optimizer
#: ---------

#: The smallest local rate k/n allowed for any candidate code
min_local_rate = 1. / 6.

#: Default differential evolution hyperparameters
de_population = 40
de_generations = 500
de_weight = 0.8
de_crossover = 0.9

#: Relative spread of the population fitness at which the search stops early
de_relative_tol = 1e-3

#: Bound on the unconstrained (logit) encoding of the p.m.f.
logit_bound = 6.

#: Bisection tolerance used while searching. The winner is re-scored with
#: 'threshold_tolerance'.
search_tolerance = 1e-4

#: Quantization of a p.m.f. for the fitness cache key
cache_quantum = 1e-6

#: Maximum tolerated deviation of the achieved rate from the target rate
rate_tolerance = 1e-6

#: Simulation
#: ----------

#: Default number of slots per MAC frame
default_slots = 1000

#: Default number of Monte Carlo frames per load point
default_trials = 100

#: Default cap on peeling rounds
max_peel_iters = 10000

#: Named generator matrices used for the finite-frame simulations. Row
#: lengths follow the run-of-ones pattern with exactly n columns.
fig2_matrices = {
    3: '110,011',
    4: '1100,0111',
    5: '11100,00111',
    8: '11110000,01111111',
    9: '111110000,011111111',
    12: '111111110000,000001111111',
}

#: CLI
#: ---

#: Default random seed for every subcommand
default_seed = 20100301

#: Default number of parallel workers
default_jobs = 1

#: Significant digits for all numeric output
output_digits = 9

#: Config
#: ------

#: The extension for configuration documents
config_extension = '.csa'
