"""Solver for diffusion with two Riemann-Liouville time-fractional terms.

Discontinuous Galerkin time stepping on graded meshes, conforming finite
elements in space, plus the convergence-study harness and reference series.
"""

from ._core import (
    ConvergenceReport,
    ExperimentConfig,
    Forcing,
    GradedMesh,
    PowerTerm,
    ProblemSpec,
    RunCell,
    SpaceTimeSolution,
    SpatialFem,
    error_metrics,
    experiment_preset,
    gamma_fn,
    history_block,
    inc_beta_lower,
    make_graded_mesh,
    manufactured_forcing,
    manufactured_problem,
    mittag_leffler,
    observed_order,
    run_experiment,
    run_sweep,
    sigma_star,
    sigma_star_star,
    solve,
    w_series,
)

__all__ = [
    "ConvergenceReport",
    "ExperimentConfig",
    "Forcing",
    "GradedMesh",
    "PowerTerm",
    "ProblemSpec",
    "RunCell",
    "SpaceTimeSolution",
    "SpatialFem",
    "error_metrics",
    "experiment_preset",
    "gamma_fn",
    "history_block",
    "inc_beta_lower",
    "make_graded_mesh",
    "manufactured_forcing",
    "manufactured_problem",
    "mittag_leffler",
    "observed_order",
    "run_experiment",
    "run_sweep",
    "sigma_star",
    "sigma_star_star",
    "solve",
    "w_series",
]

__version__ = "0.1.0"
