"""Analytic connectivity of general hypergraphs via tensor Laplacian forms.

Public surface: hypergraph construction and generators, the order-m
Laplacian form machinery, the pinned-vertex connectivity solver with its
grid oracle, exact combinatorial invariants, and the bound-verification
harness.
"""

from . import errors
from .bounds import (
    AmGmGapResult,
    BoundsReport,
    Check,
    amgm_gaps,
    cheeger_interval,
    degree_upper_bound,
    degree_upper_bound_nonspanning,
    diameter_lower_bound,
    graph_bounds_check,
    uniform_reduction_check,
    verify,
)
from .combinatorics import (
    CutResult,
    Graph,
    boundary,
    build_graph,
    clique_expansion,
    diameter,
    fiedler_quotient,
    graph_diameter,
    isoperimetric_number,
    lambda2,
)
from .forms import (
    dense_contraction_oracle,
    edge_laplacian_form,
    edge_power_sum,
    laplacian_form,
    laplacian_form_batch,
    laplacian_gradient,
    omega,
)
from .hypergraph import (
    DegreeProfile,
    Hypergraph,
    build,
    complete_uniform,
    components,
    degree_profile,
    generate,
    hyperpath,
    is_connected,
    nonuniform_random,
    parse,
    serialize,
    uniform_random,
)
from .kernels import backend_name
from .solver import (
    AlphaResult,
    SolverConfig,
    analytic_connectivity,
    grid_oracle,
    minimize_fixed_zero,
)

__version__ = "0.1.0"
