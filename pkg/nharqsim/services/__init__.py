"""Simulation and metrics services."""
from .metrics_service import (
    aggregate_ber,
    aggregate_se,
    ber_confidence_interval,
    build_row,
    count_bit_errors,
)
from .simulation_service import RunLedger, SimulationService, TrialTask, run_point, run_trial, sweep

__all__ = [
    'SimulationService', 'TrialTask', 'RunLedger', 'run_trial', 'run_point', 'sweep',
    'aggregate_ber', 'aggregate_se', 'ber_confidence_interval', 'build_row', 'count_bit_errors',
]
