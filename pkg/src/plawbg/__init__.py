"""Power-law background models for graph degree distributions.

Typical use::

    from plawbg import degree_distribution, fit_perfect_power_law, rebin, compare

    dist = degree_distribution(degrees)
    model, objective = fit_perfect_power_law(dist)
    report = compare(rebin(dist, model), model, objective_value=objective)
"""
from plawbg.degree import DegreeDistribution, degree_distribution, degree_vector, summary
from plawbg.errors import (
    CoverageError,
    DegenerateDistributionError,
    EmptyDistributionError,
    EstimatorPreconditionError,
    ParameterError,
    PlawError,
    StructuralInputError,
)
from plawbg.matrix_core import (
    AdjacencyMatrix,
    IncidenceMatrix,
    adjacency_from_edge_list,
    incidence_to_adjacency,
)
from plawbg.model import (
    FitConfig,
    PowerLawModel,
    estimate_alpha,
    fit_perfect_power_law,
    objective,
)
from plawbg.rebin import FitReport, RebinnedDistribution, compare, filter_high_degree, rebin
from plawbg.synth import GeneratorSpec, sample_degrees, sample_graph

__version__ = "0.1.0"
