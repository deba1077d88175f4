"""Exact degree bounds for morphisms from threefolds to the smooth 3-quadric."""

from .arith import UniPoly, cauchy_root_bound, max_integer_nonpositive, poly_eval, sign_change_count
from .feasibility import (
    BoundReport,
    FeasibilityVerdict,
    Status,
    asymptotic_report,
    bound_report,
    generator_degree_verdicts,
    hypersurface_dmax_closed_form,
    miyaoka_floor,
    verdicts_for,
)
from .invariants import ThreefoldInvariants, from_chern_numbers, hypersurface_invariants, preset, validate
from .miyaoka import (
    SurfaceInvariants,
    bound_polynomial,
    canonical_square,
    deficit_polynomial,
    double_points,
    miyaoka_rhs,
    second_chern_surface,
)
from .sos import (
    HomogeneousPoly,
    SosWitness,
    ZeroStatus,
    add,
    common_zero_check,
    exact_divide,
    fermat_witness,
    mul,
    verify_witness,
)
from .targets import TargetSpec, ci_map_degree, min_nodes_required

__version__ = "0.1.0"
