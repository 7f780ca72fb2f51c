"""
Parsing of ensemble configuration documents.

A configuration is a text document of 'key: value' entries. Ensembles use
the keys 'name', 'k', 'mode' ('explicit' or 'random'), 'entries' and,
optionally, 'matrices'::

    name: csa-r3/5
    k: 2
    mode: random
    entries:
      3: 2/3
      4: 1/3
    matrices:
      3: 110,011
      4: 1100,0111

Explicit ensembles list generator matrices as entry keys. Random ensembles
list code lengths. Other keys are ignored here and read by the optimizer and
the simulator.
"""
import logging
import os
import pathlib
from contextlib import contextmanager

from .ensemble import ExplicitEnsemble, RandomEnsemble
from .exceptions import ConfigError
from ..codes import parse_generator
from ..exceptions import CsaException, ParseError
from ..utils.string import str_to_dict, str_to_int, str_to_number, fmt_number
from .. import settings


@contextmanager
def at_line(lineno):
    """Re-raise errors of the enclosed block as a :exc:`ConfigError` located
    at the given line."""
    try:
        yield
    except ConfigError:
        raise
    except CsaException as e:
        msg = e.msg if isinstance(e, ParseError) else str(e)
        lineno = getattr(e, 'lineno', None) or lineno
        raise ConfigError(msg, lineno=lineno) from e


def read_config(source):
    """Read a configuration document.

    Parameters
    ----------
    source : Union[str, :obj:`pathlib.Path`]
        The path of a configuration file, or the text of the document.

    Returns
    -------
    config : :obj:`ConfigDict <codedaloha.utils.string.ConfigDict>`
        The parsed entries, with their line numbers.

    Raises
    ------
    ConfigError
        Raised if the document can't be read or parsed.
    """
    if isinstance(source, pathlib.PurePath) or os.path.isfile(source):
        try:
            text = pathlib.Path(source).read_text()
        except OSError as e:
            raise ConfigError("could not read '{}': {}".format(source, e))
    else:
        text = source

    with at_line(None):
        return str_to_dict(text)


def read_block(config, key):
    """Parse the indented sub-block of an entry into a
    :obj:`ConfigDict <codedaloha.utils.string.ConfigDict>`."""
    with at_line(config.linenos.get(key)):
        return str_to_dict(config[key], first_lineno=config.block_linenos[key])


def get_int(config, key, default=None):
    """An integer entry of a configuration, or the default if missing."""
    if key not in config or not config[key].strip():
        if default is None:
            raise ConfigError("the '{}' entry is missing".format(key))
        return default
    with at_line(config.linenos[key]):
        return str_to_int(config[key])


def get_number(config, key, default=None):
    """A decimal or fraction entry of a configuration, or the default if
    missing."""
    if key not in config or not config[key].strip():
        if default is None:
            raise ConfigError("the '{}' entry is missing".format(key))
        return default
    with at_line(config.linenos[key]):
        return str_to_number(config[key])


def rounded_pmf(probs):
    """Renormalize a p.m.f. given with rounded decimals.

    Sums that are off by no more than the rounding tolerance are rescaled to
    one, with a warning. Other sums are left for the ensemble to reject.

    Examples
    --------
    >>> pmf = rounded_pmf([0.153057, 0.485086, 0.135499, 0.114235, 0.112124])
    >>> abs(sum(pmf) - 1.) < 1e-12
    True
    """
    total = sum(probs)
    error = abs(total - 1.)
    if settings.pmf_tolerance < error <= settings.pmf_rounding_tolerance:
        logging.warning("The p.m.f. sums to {} and was "
                        "renormalized".format(fmt_number(total)))
        return [p / total for p in probs]
    return list(probs)


def ensemble_from_config(config):
    """Create an ensemble from a parsed configuration.

    Raises
    ------
    ConfigError
        Raised if an entry is missing or invalid. The error names the line of
        the offending entry.

    Examples
    --------
    >>> config = read_config('''
    ... k: 1
    ... entries:
    ...   11: 1/2
    ...   111: 1/2
    ... ''')
    >>> ensemble_from_config(config)
    <ExplicitEnsemble k=1 {11: 0.5, 111: 0.5}>
    """
    k = get_int(config, 'k')
    mode = config.get('mode', 'explicit').strip().lower()
    name = config.get('name', '').strip() or None
    if mode not in ('explicit', 'random'):
        msg = "the mode '{}' is not 'explicit' or 'random'".format(mode)
        raise ConfigError(msg, lineno=config.linenos.get('mode'))
    if not config.get('entries', '').strip():
        raise ConfigError("the ensemble has no entries",
                          lineno=config.linenos.get('entries'))

    entries = read_block(config, 'entries')
    probs = []
    for key, value in entries.items():
        with at_line(entries.linenos[key]):
            probs.append(str_to_number(value))
    probs = rounded_pmf(probs)

    if mode == 'explicit':
        codes = []
        for key in entries:
            with at_line(entries.linenos[key]):
                code = parse_generator(key)
            if code.k != k:
                msg = "the ({},{}) code doesn't have the dimension k={}"
                raise ConfigError(msg.format(code.n, code.k, k),
                                  lineno=entries.linenos[key])
            codes.append(code)
        with at_line(config.linenos['entries']):
            return ExplicitEnsemble(codes, probs, name=name)

    lengths = []
    for key in entries:
        with at_line(entries.linenos[key]):
            lengths.append(str_to_int(key))

    matrices = dict()
    if config.get('matrices', '').strip():
        block = read_block(config, 'matrices')
        for key, value in block.items():
            with at_line(block.linenos[key]):
                matrices[str_to_int(key)] = parse_generator(value)

    with at_line(config.linenos['entries']):
        return RandomEnsemble(k, lengths, probs, matrices=matrices, name=name)


def load_config(source):
    """Load an ensemble from a configuration file or text.

    Examples
    --------
    >>> load_config('''
    ... k: 2
    ... mode: random
    ... entries:
    ...   3: 2/3
    ...   4: 1/3
    ... ''').lengths
    (3, 4)
    """
    return ensemble_from_config(read_config(source))
