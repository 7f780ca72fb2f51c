"""
The 'optimize' CLI sub-command.
"""
import click

from .options import (input_options, out_option, format_option, seed_option,
                      jobs_option, load_ensemble, cli_errors, output_stream)
from ..optimizer import OptProblem, optimize as run_optimize
from ..utils.output import write_records


def load_problem(config, preset, **overrides):
    """Load an optimization problem from a configuration file, or over the
    candidates of a preset."""
    overrides = {key: value for key, value in overrides.items()
                 if value is not None}
    with cli_errors():
        if preset is not None or config is None:
            ensemble = load_ensemble(config, preset)
            return OptProblem.from_ensemble(ensemble, **overrides)

        problem = OptProblem.from_config(config)
        if not overrides:
            return problem
        kwargs = dict(population=problem.population,
                      generations=problem.generations, weight=problem.weight,
                      crossover=problem.crossover, seed=problem.seed,
                      name=problem.name, matrices=problem.matrices)
        rate = overrides.pop('rate', problem.rate)
        kwargs.update(overrides)
        return OptProblem(problem.k, problem.candidates, rate, **kwargs)


@click.command()
@input_options
@click.option('--rate', type=float, default=None,
              help="the target rate. Defaults to the configured rate, or the "
                   "rate of the preset")
@click.option('--generations', type=click.IntRange(min=1), default=None,
              help="the largest number of generations")
@click.option('--population', type=click.IntRange(min=1), default=None,
              help="the population size")
@seed_option
@jobs_option
@click.option('--cache-dir', type=click.Path(file_okay=False), default=None,
              help="a directory for a persistent cache of fitness values")
@click.option('--history', type=click.Path(dir_okay=False), default=None,
              help="a CSV file for the best threshold of each generation")
@out_option
@format_option()
def optimize(config=None, preset=None, rate=None, generations=None,
             population=None, seed=None, jobs=1, cache_dir=None, history=None,
             out=None, fmt='csv'):
    """Optimize the p.m.f. of an ensemble's candidates for the threshold"""
    problem = load_problem(config, preset, rate=rate, generations=generations,
                           population=population, seed=seed)
    with cli_errors():
        result = run_optimize(problem, jobs=jobs, cache_dir=cache_dir)

    records = [{'label': label, 'n': n, 'P': p}
               for label, n, p in zip(result.labels, problem.lengths,
                                      result.pmf)]
    summary = dict(result.report.as_record(), generations=result.generations,
                   seed=result.seed, target_rate=problem.rate,
                   evaluations=result.evaluations,
                   cache_hits=result.cache_hits)

    with output_stream(out) as stream:
        if fmt == 'json':
            write_records(records, stream, fmt='json', summary=summary)
        else:
            rows = [dict(summary, **record) for record in records]
            write_records(rows, stream, fmt='csv')

    if history is not None:
        with click.open_file(history, 'w') as stream:
            result.write_history(stream)
