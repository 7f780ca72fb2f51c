"""
The 'simulate' CLI sub-command.
"""
import json

import click

from .options import (input_options, out_option, format_option, seed_option,
                      jobs_option, load_ensemble, cli_errors, output_stream)
from ..simulator import (load_simulation, load_grid, simulate as run_simulate,
                         write_points, slotted_aloha_throughput)
from ..utils.output import json_value
from .. import settings


def simulation_summary(ensemble, points, seed):
    """The peak throughput and run settings of a simulation."""
    peak = max(points, key=lambda p: p.S_mean)
    return {'ensemble_id': ensemble.ensemble_id, 'k': ensemble.k,
            'R': ensemble.rate, 'seed': seed, 'N': peak.N,
            'trials': peak.trials, 'S_peak': peak.S_mean,
            'G_peak': peak.G_actual,
            'S_sa_peak': float(slotted_aloha_throughput(1.))}


@click.command()
@input_options
@click.option('--loads', default=None,
              help="the offered loads, as 'G1, G2, ...' or "
                   "'start:stop:step'")
@click.option('--slots', '-N', type=click.IntRange(min=1), default=None,
              help="the number of slots per frame [default: {}]"
                   .format(settings.default_slots))
@click.option('--trials', '-t', type=click.IntRange(min=1), default=None,
              help="the number of frames per load [default: {}]"
                   .format(settings.default_trials))
@seed_option
@jobs_option
@click.option('--summary', type=click.Path(dir_okay=False), default=None,
              help="a JSON file for the summary of the simulation")
@out_option
@format_option()
def simulate(config=None, preset=None, loads=None, slots=None, trials=None,
             seed=None, jobs=1, summary=None, out=None, fmt='csv'):
    """Simulate the throughput of finite frames"""
    ensemble = load_ensemble(config, preset)
    with cli_errors():
        sim = load_simulation(config if config is not None else '',
                              ensemble=ensemble)
        grid = load_grid(loads) if loads is not None else sim.loads
        seed = seed if seed is not None else sim.seed
        points = run_simulate(ensemble, N=slots or sim.slots, loads=grid,
                              trials=trials or sim.trials, base_seed=seed,
                              jobs=jobs)

    info = simulation_summary(ensemble, points, seed)
    with output_stream(out) as stream:
        write_points(points, stream, fmt=fmt, summary=info)

    if summary is not None:
        with click.open_file(summary, 'w') as stream:
            json.dump(json_value(info), stream, indent=2, sort_keys=True)
            stream.write('\n')
