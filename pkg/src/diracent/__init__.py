"""Entanglement between two fermionic field modes, one held by an inertial
observer and one by a uniformly accelerated observer.

The library derives the accelerated observer's mode expansions from the
ladder-operator algebra, assembles the tripartite state, and evaluates
mixed-state entanglement measures and complementarity identities, all on
top of a self-contained dense eigensolver.
"""

from .complementarity import (
    ComplementarityReport,
    check_pure_relation,
    check_two_qubit_relation,
    coherence,
    marginal_mixedness,
    memms_gap,
    predictability,
    sbar2,
    separable_uncertainty,
)
from .fock import (
    ModeRegistry,
    OccupationState,
    apply_ladder,
    apply_operator_poly,
    minkowski_one_particle,
    solve_minkowski_vacuum,
    to_density_matrix,
)
from .measures import (
    MeasureReport,
    concurrence,
    eof,
    log_negativity,
    min_pt_eigenvalue,
    mutual_information,
    one_to_rest_tangle,
    residual_tangle,
    spin_flip,
    tangle,
    vn_entropy,
)
from .qmat import DensityMatrix, eig_hermitian, partial_trace, partial_transpose, tensor, trace_norm
from .report import PointReport, evaluate_point
from .unruh import (
    AccelParam,
    PhysicalParams,
    accelerate,
    bell_state,
    dual_acceleration,
    fd_occupation,
    r_from_omega_ratio,
    unruh_temperature,
)

__version__ = "0.1.0"
