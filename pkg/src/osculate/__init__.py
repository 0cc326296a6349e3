"""Exact computation of osculating spaces, higher fundamental forms and higher Gauss maps
of polynomially parametrized projective varieties."""

from .conegeom import VertexSpace, perfect_power, powers_of_common_linear, vertex
from .errors import GenericityFailure, ParseError, ResourceError, UsageError, ValidationError
from .fundforms import LinSys, check_dim_recursion, contains, fundamental_form, jacobian_system, projective_dim
from .gaussmap import (GaussAnalysis, PluckerChart, gauss_fiber_dim, osculating_variety_dim, plucker_chart,
                       verify_cone_theorem)
from .harness import Config, Report, render_report, run_suite
from .jets import (AdaptedFrame, DimProfile, JetMatrix, LaplaceRelation, adapted_frame, jet_matrix,
                   laplace_relations, osculating_dims)
from .variety import ParamVariety, SamplePoint, catalog, catalog_entry, parse_variety, render_variety, sample_point

__version__ = "0.1.0"

__all__ = [
    "AdaptedFrame",
    "Config",
    "DimProfile",
    "GaussAnalysis",
    "GenericityFailure",
    "JetMatrix",
    "LaplaceRelation",
    "LinSys",
    "ParamVariety",
    "ParseError",
    "PluckerChart",
    "Report",
    "ResourceError",
    "SamplePoint",
    "UsageError",
    "ValidationError",
    "VertexSpace",
    "adapted_frame",
    "catalog",
    "catalog_entry",
    "check_dim_recursion",
    "contains",
    "fundamental_form",
    "gauss_fiber_dim",
    "jacobian_system",
    "jet_matrix",
    "laplace_relations",
    "osculating_dims",
    "osculating_variety_dim",
    "parse_variety",
    "perfect_power",
    "plucker_chart",
    "powers_of_common_linear",
    "projective_dim",
    "render_report",
    "render_variety",
    "run_suite",
    "sample_point",
    "verify_cone_theorem",
    "vertex",
]
