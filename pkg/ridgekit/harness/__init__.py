"""Experiment orchestration, rate formulas and result files."""

from ridgekit.harness.config import ExperimentConfig
from ridgekit.harness.experiments import (ExperimentResult,
                                          run_rate_experiment,
                                          run_reconstruction_experiment)
from ridgekit.harness.output import write_csv, write_manifest
from ridgekit.harness.rates import (calibrate_rate_constant,
                                    fit_loglog_slope, plan_neurons,
                                    rate_bound_rhs)


__all__ = [
    'ExperimentConfig',
    'ExperimentResult',
    'calibrate_rate_constant',
    'fit_loglog_slope',
    'plan_neurons',
    'rate_bound_rhs',
    'run_rate_experiment',
    'run_reconstruction_experiment',
    'write_csv',
    'write_manifest',
]
