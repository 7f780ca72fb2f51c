"""
The 'analyze' CLI sub-command.
"""
import click

from .options import (input_options, out_option, format_option,
                      load_ensemble, cli_errors, output_stream)
from .render import render_text
from ..codes import code_profile
from ..density_evolution import stability_bound
from ..ensembles import stats, expected_info_funcs, expected_a2
from ..utils.output import write_records, FORMATS


CANDIDATE_COLUMNS = ('label', 'n', 'P', 'lambda', 'A2', 'd_min',
                     'info_funcs')


def ensemble_summary(ensemble, s):
    """The ensemble-level statistics of an analysis."""
    return {'ensemble_id': ensemble.ensemble_id, 'mode': ensemble.mode,
            'k': s.k, 'n_bar': s.mean_length, 'R': s.rate,
            'delta_P': s.power_increment, 'load_factor': s.load_factor,
            'avg_A2': s.avg_A2, 'd_min': s.min_distance,
            'G_star_sb': stability_bound(s)}


def candidate_records(ensemble, s):
    """The statistics of each candidate of an ensemble. The statistics of
    random-code candidates are averages over the qualifying matrices."""
    records = []
    for h, (label, n) in enumerate(zip(s.labels, s.lengths)):
        if ensemble.mode == 'explicit':
            profile = code_profile(ensemble.codes[h])
            a2, funcs = profile.a2, profile.info_funcs
        else:
            a2 = expected_a2(ensemble.k, n)
            funcs = expected_info_funcs(ensemble.k, n)
        records.append({'label': label, 'n': n, 'P': float(s.probs[h]),
                        'lambda': float(s.edge_probs[h]), 'A2': float(a2),
                        'd_min': s.d_mins[h],
                        'info_funcs': ' '.join('{:.9g}'.format(f)
                                               for f in funcs)})
    return records


@click.command()
@input_options
@out_option
@format_option(choices=FORMATS + ('text',), default='text')
def analyze(config=None, preset=None, out=None, fmt='text'):
    """Report the statistics of a code ensemble"""
    ensemble = load_ensemble(config, preset)
    with cli_errors():
        s = stats(ensemble)
        summary = ensemble_summary(ensemble, s)
        records = candidate_records(ensemble, s)

    with output_stream(out) as stream:
        if fmt == 'text':
            stream.write(render_text('analyze', summary=summary,
                                     records=records))
        elif fmt == 'json':
            write_records(records, stream, fmt='json', summary=summary)
        else:
            rows = [dict(summary, **record) for record in records]
            write_records(rows, stream, fmt='csv',
                          columns=list(summary) + list(CANDIDATE_COLUMNS))
