from .evolution import (de_step, de_run, DeResult, exit_function,
                        sum_node_update, stability_bound, stability_derivative,
                        UNBOUNDED, CONVERGED, STALLED, INDETERMINATE)
from .threshold import (threshold, ThresholdReport, AdmissibilityCriterion,
                        fixed_point_margin, bifurcation_residual,
                        threshold_grid, METHODS)
from .degrees import (sum_node_degree_pmf, edge_degree_pmf,
                      finite_sum_node_degree_pmf)
from .exceptions import (AnalysisError, ThresholdDisagreement,
                         NonMonotoneAdmissibility, IndeterminateRun)

__all__ = ('de_step', 'de_run', 'DeResult', 'exit_function',
           'sum_node_update', 'stability_bound', 'stability_derivative',
           'UNBOUNDED', 'CONVERGED', 'STALLED', 'INDETERMINATE', 'threshold',
           'ThresholdReport', 'AdmissibilityCriterion', 'fixed_point_margin',
           'bifurcation_residual', 'threshold_grid', 'METHODS',
           'sum_node_degree_pmf', 'edge_degree_pmf',
           'finite_sum_node_degree_pmf', 'AnalysisError',
           'ThresholdDisagreement', 'NonMonotoneAdmissibility',
           'IndeterminateRun')
