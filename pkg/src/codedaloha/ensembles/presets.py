"""
Named ensembles with optimized selection distributions.

The 'irsa-*' presets are repetition-code ensembles (k=1). The 'csa-*'
presets are random-code ensembles with k=2, and list the fixed generator
matrices used for finite-frame simulations.
"""
from collections import namedtuple

from .config import load_config
from .exceptions import EnsembleError
from ..utils.string import nicejoin
from .. import settings


#: Reference values of a preset: its threshold and stability bound
ReferenceValues = namedtuple('ReferenceValues', 'threshold stability_bound')

#: The repetition-code presets: {name: ((length, probability), ...)}
irsa_presets = {
    'irsa-r1/3': ((2, 0.554016), (3, 0.261312), (6, 0.184672)),
    'irsa-r2/5': ((2, 0.622412), (3, 0.255176), (4, 0.122412)),
    'irsa-r1/2': ((2, 1.),),
}

#: The k=2 random-code presets: {name: ((length, probability), ...)}
csa_presets = {
    'csa-r1/3': ((3, 0.088459), (4, 0.544180), (5, 0.121490),
                 (12, 0.245871)),
    'csa-r2/5': ((3, 0.153057), (4, 0.485086), (5, 0.135499), (8, 0.114235),
                 (9, 0.112124)),
    'csa-r1/2': ((4, 1.),),
    'csa-r3/5': ((3, '2/3'), (4, '1/3')),
}

#: The published thresholds and stability bounds of the presets
reference_values = {
    'irsa-r1/3': ReferenceValues(0.8792, 0.9025),
    'irsa-r2/5': ReferenceValues(0.7825, 0.8033),
    'irsa-r1/2': ReferenceValues(0.5000, 0.5000),
    'csa-r1/3': ReferenceValues(0.8678, 0.9427),
    'csa-r2/5': ReferenceValues(0.7965, 0.8391),
    'csa-r1/2': ReferenceValues(0.6556, 0.7500),
    'csa-r3/5': ReferenceValues(0.4091, 0.4091),
}


def preset_names():
    """The names of the available presets."""
    return list(irsa_presets) + list(csa_presets)


def preset_document(name):
    """The configuration document of a preset.

    Raises
    ------
    EnsembleError
        Raised if no preset has the given name.

    Examples
    --------
    >>> print(preset_document('csa-r1/2'))
    name: csa-r1/2
    k: 2
    mode: random
    entries:
      4: 1.0
    matrices:
      4: 1100,0111
    <BLANKLINE>
    """
    if name in irsa_presets:
        lines = ['name: ' + name, 'k: 1', 'mode: explicit', 'entries:']
        lines += ['  {}: {}'.format('1' * n, p) for n, p in irsa_presets[name]]
    elif name in csa_presets:
        lines = ['name: ' + name, 'k: 2', 'mode: random', 'entries:']
        lines += ['  {}: {}'.format(n, p) for n, p in csa_presets[name]]
        lines.append('matrices:')
        lines += ['  {}: {}'.format(n, settings.fig2_matrices[n])
                  for n, _ in csa_presets[name]]
    else:
        msg = "there is no preset '{}'. Choose from {}."
        raise EnsembleError(msg.format(name, nicejoin(*preset_names(),
                                                      term=' or ')))
    return '\n'.join(lines) + '\n'


def load_preset(name):
    """Load a preset ensemble by name.

    Examples
    --------
    >>> load_preset('irsa-r1/2')
    <ExplicitEnsemble k=1 {11: 1}>
    """
    return load_config(preset_document(name))
