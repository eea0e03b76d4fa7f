"""Magnon statistics of a driven dissipative spin-magnon system.

Numerics (Lindblad master equation on a truncated space) and the
weak-drive closed forms live side by side; blockade-condition solvers
and parameter-space scans sit on top.
"""

from .version import __version__
from .hilbert import (
    HilbertSpec,
    annihilation,
    basis_density,
    basis_state,
    creation,
    dagger,
    expectation,
    identity,
    spin_lowering,
    spin_raising,
)
from .model import (
    GAMMA_RAD_PER_S,
    PhysicalFieldParams,
    SystemParams,
    build_h_eff,
    build_h_nonhermitian,
    collapse_operators,
    dressed_levels,
    field_to_detunings,
)
from .liouville import (
    EvolveError,
    SteadyStateError,
    build_liouvillian,
    evolve,
    is_physical_state,
    liouvillian_matrix,
    propagate,
    steady_state,
    unvec,
    vec,
)
from .correlations import VacuumStateError, g2_tau, g2_zero, occupation
from .analytic import (
    AmplitudeSet,
    AnalyticSingularityError,
    ConditionSolution,
    amplitudes,
    cmb_condition,
    g2_analytic,
    intersection_points,
    umb_condition_double,
    umb_condition_single,
)
from .scan import (
    ScanGrid,
    ScanResult,
    g2t_trace,
    scan_g2_grid,
    scan_g2_line,
    thermal_scan,
)
from .io import (
    csv_data_section,
    csv_text,
    read_csv,
    read_json,
    write_csv,
    write_json,
)

__all__ = [
    "__version__",
    "GAMMA_RAD_PER_S",
    "HilbertSpec",
    "SystemParams",
    "PhysicalFieldParams",
    "AmplitudeSet",
    "ConditionSolution",
    "ScanGrid",
    "ScanResult",
    "AnalyticSingularityError",
    "EvolveError",
    "SteadyStateError",
    "VacuumStateError",
    "annihilation",
    "creation",
    "spin_lowering",
    "spin_raising",
    "dagger",
    "expectation",
    "identity",
    "basis_state",
    "basis_density",
    "field_to_detunings",
    "build_h_eff",
    "build_h_nonhermitian",
    "collapse_operators",
    "dressed_levels",
    "build_liouvillian",
    "liouvillian_matrix",
    "steady_state",
    "evolve",
    "propagate",
    "vec",
    "unvec",
    "is_physical_state",
    "occupation",
    "g2_zero",
    "g2_tau",
    "amplitudes",
    "g2_analytic",
    "cmb_condition",
    "umb_condition_single",
    "umb_condition_double",
    "intersection_points",
    "scan_g2_grid",
    "scan_g2_line",
    "thermal_scan",
    "g2t_trace",
    "csv_text",
    "csv_data_section",
    "write_csv",
    "read_csv",
    "write_json",
    "read_json",
]
