"""Identity suite binding the trace oracle to the closed forms."""

from .extrapolate import InsufficientSamplesError, chi_extrapolate, qexp_bound
from .identities import (Identity, Report, SUITES, register, identities,
    run_identity, run_suite, first_order_samples)

__all__ = ["InsufficientSamplesError", "chi_extrapolate", "qexp_bound",
    "Identity", "Report", "SUITES", "register", "identities", "run_identity",
    "run_suite", "first_order_samples"]
