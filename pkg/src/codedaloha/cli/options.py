"""
Common options for CLI sub-commands.
"""
import sys
from contextlib import contextmanager

import click
import pathvalidate

from ..density_evolution import AnalysisError, METHODS
from ..ensembles import load_config, load_preset, preset_names
from ..exceptions import CsaException
from ..utils.output import FORMATS
from .. import settings

debug_option = click.option('--debug', default=False, is_flag=True,
                            help="Show debugging information")


# Input options

config_option = click.option('--config', '-c', required=False,
                             type=click.Path(exists=True, file_okay=True,
                                             dir_okay=False),
                             default=None,
                             help="the configuration file of the ensemble")
preset_option = click.option('--preset', '-p', required=False,
                             type=click.Choice(preset_names()),
                             default=None,
                             help="a named ensemble instead of a "
                                  "configuration file")

_input_options = [config_option, preset_option]


def input_options(func):
    """Wrap the input options in a decorator"""
    for option in reversed(_input_options):
        func = option(func)
    return func


# Output options

def _check_out(ctx, param, value):
    if value is None or value == '-':
        return value
    try:
        pathvalidate.validate_filepath(value, platform='auto')
    except pathvalidate.ValidationError as e:
        raise click.BadParameter("'{}' is not a valid path: {}"
                                 .format(value, e))
    return value


out_option = click.option('--out', '-o', required=False, default=None,
                          callback=_check_out,
                          help="the output file. Results are printed if "
                               "omitted")


def format_option(choices=FORMATS, default='csv'):
    return click.option('--format', '-f', 'fmt', default=default,
                        type=click.Choice(choices), show_default=True,
                        help="the output format")


# Run options

def _check_tol(ctx, param, value):
    if value is not None and not value > 0.:
        raise click.BadParameter("the tolerance must be positive")
    return value


seed_option = click.option('--seed', type=int, default=None,
                           help="the random seed [default: {}]"
                                .format(settings.default_seed))
tol_option = click.option('--tol', type=float,
                          default=settings.threshold_tolerance,
                          callback=_check_tol, show_default=True,
                          help="the bisection tolerance of the threshold")
jobs_option = click.option('--jobs', '-j', type=click.IntRange(min=0),
                           default=settings.default_jobs, show_default=True,
                           help="the number of parallel workers. 0 uses "
                                "every cpu")
method_option = click.option('--method', '-m', type=click.Choice(METHODS),
                             default='both', show_default=True,
                             help="the admissibility criterion of a load")


def load_ensemble(config, preset):
    """Load the ensemble named by the '--config' or '--preset' option."""
    if (config is None) == (preset is None):
        raise click.UsageError("Specify one of '--config' or '--preset'.")
    with cli_errors():
        return load_preset(preset) if preset else load_config(config)


@contextmanager
def cli_errors():
    """Report toolkit errors as CLI errors.

    Analysis errors exit with the status 3. Other errors are validation
    errors and exit with the status 2.
    """
    try:
        yield
    except AnalysisError as e:
        click.echo("Error: {}".format(e), err=True)
        sys.exit(3)
    except CsaException as e:
        raise click.UsageError(str(e))


@contextmanager
def output_stream(out):
    """Open the output file, or the standard output if None."""
    with click.open_file(out or '-', 'w') as stream:
        yield stream
