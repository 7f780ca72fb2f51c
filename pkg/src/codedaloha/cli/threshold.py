"""
The 'threshold' CLI sub-command.
"""
import click

from .options import (input_options, out_option, format_option, tol_option,
                      method_option, load_ensemble, cli_errors, output_stream)
from .render import render_text
from ..density_evolution import threshold as find_threshold
from ..ensembles import stats, reference_values
from ..utils.output import write_records, FORMATS


def write_report(report, stream, fmt, reference=None):
    """Write a threshold report in the given format."""
    record = report.as_record()
    if fmt == 'text':
        stream.write(render_text('threshold', report=record,
                                 reference=reference))
        return
    if reference is not None:
        record['G_star_published'] = reference.threshold
        record['G_star_sb_published'] = reference.stability_bound
    write_records([record], stream, fmt=fmt)


@click.command()
@input_options
@tol_option
@method_option
@out_option
@format_option(choices=FORMATS + ('text',), default='text')
def threshold(config=None, preset=None, tol=None, method='both', out=None,
              fmt='text'):
    """Compute the threshold load of a code ensemble"""
    ensemble = load_ensemble(config, preset)
    with cli_errors():
        report = find_threshold(stats(ensemble), tol=tol, method=method,
                                ensemble_id=ensemble.ensemble_id)

    with output_stream(out) as stream:
        write_report(report, stream, fmt,
                     reference=reference_values.get(preset))
