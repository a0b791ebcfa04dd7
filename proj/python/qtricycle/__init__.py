"""Limit cycle, heat currents and optimal cooling performance of a driven
three-level quantum refrigerator. Natural units, hbar = k_B = 1."""

from ._core import (
    Bath,
    BathLabel,
    CoefficientEstimate,
    CurrentsReport,
    FluxModel,
    LambdaMode,
    LimitCycle,
    MaserConfig,
    OptimumReport,
    SweepRecord,
    SweepSpec,
    SweepSummary,
    __version__,
    asymmetric_flux,
    averaged_hamiltonian,
    benchmark_cop,
    carnot_quantities,
    chi_optimal_cop,
    cop_from_forces,
    cop_from_frequencies,
    emit_curve,
    entropy_production,
    estimate_cold_force_coefficient,
    heat_current_general,
    heat_currents,
    high_temperature_flux,
    liouvillian_steady_state,
    onsager_optimal_cop,
    optimal_cop_from_coefficient,
    optimize_analytic,
    optimize_maser,
    planck_occupation,
    relaxation_rate,
    reversible_cold_frequency,
    run_sweep,
    sample_configuration,
    self_test,
    solve_limit_cycle,
    thermodynamic_force,
    weak_driving_flux,
    ynca_efficiency,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
