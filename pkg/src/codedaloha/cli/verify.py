"""
The 'verify' CLI sub-command.
"""
import click

from .options import (input_options, out_option, format_option, tol_option,
                      method_option, load_ensemble, cli_errors, output_stream)
from .threshold import write_report
from ..ensembles import reference_values
from ..optimizer import OptProblem, verify as verify_pmf
from ..utils.output import FORMATS
from ..utils.string import str_to_list, str_to_number


@click.command()
@input_options
@click.option('--pmf', default=None,
              help="the comma-separated p.m.f. over the ensemble's "
                   "candidates. The ensemble's own p.m.f. is used if "
                   "omitted")
@tol_option
@method_option
@out_option
@format_option(choices=FORMATS + ('text',), default='text')
def verify(config=None, preset=None, pmf=None, tol=None, method='both',
           out=None, fmt='text'):
    """Re-score a p.m.f. over the candidates of an ensemble"""
    ensemble = load_ensemble(config, preset)
    with cli_errors():
        probs = ensemble.pmf
        if pmf is not None:
            probs = [str_to_number(p) for p in str_to_list(pmf)]
            if len(probs) != len(ensemble.pmf):
                msg = "the p.m.f. lists {} values for {} candidates"
                raise click.BadParameter(msg.format(len(probs),
                                                    len(ensemble.pmf)))
        problem = OptProblem.from_ensemble(ensemble)
        report = verify_pmf(probs, problem, tol=tol, method=method)

    with output_stream(out) as stream:
        write_report(report, stream, fmt,
                     reference=reference_values.get(preset))
