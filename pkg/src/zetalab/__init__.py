"""Numerical laboratory for the alternating zeta series in the critical strip.

Partial sums and their power-sum/cross-term diagnostics, accelerated
evaluation of eta and zeta, the conversion-factor identity and its zero
set, and Hardy-function zero location on the critical line. See the
README for the command-line harness.
"""

from .backends import ACTIVE_BACKEND
from .diagnostics import (
    CAlphaResult,
    ConvergenceProfile,
    DiagnosticRecord,
    c_alpha,
    convergence_profile,
    cross_term_brute,
    cross_term_fast,
    cross_term_sweep,
    diagnostic_series,
    power_sum,
)
from .errors import (
    AccelerationError,
    CostGuardError,
    DomainError,
    PoleError,
    SingularFactorError,
    ZetalabError,
)
from .gammafn import gamma_complex, log_gamma
from .points import StripPoint, as_strip_point
from .report import (
    DIAG_COLUMNS,
    ZERO_COLUMNS,
    ReportRow,
    SweepConfig,
    fmt17,
    read_rows,
    write_rows,
)
from .series import (
    EtaEvaluation,
    EvalMethod,
    FactorInfo,
    PartialSumState,
    eta_accelerated,
    eta_accelerated_at_order,
    eta_partial,
    eta_partial_trajectory,
    factor_info,
    functional_equation_residual,
    zeta_euler_maclaurin,
    zeta_from_eta,
)
from .verify import run_suite
from .zeros import (
    EquivalenceReport,
    SymmetryReport,
    ThetaValue,
    ZeroCandidate,
    check_symmetry,
    hardy_z,
    scan_zeros,
    theta_rs,
    verify_zero_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_BACKEND",
    "AccelerationError",
    "CAlphaResult",
    "ConvergenceProfile",
    "CostGuardError",
    "DIAG_COLUMNS",
    "DiagnosticRecord",
    "DomainError",
    "EquivalenceReport",
    "EtaEvaluation",
    "EvalMethod",
    "FactorInfo",
    "PartialSumState",
    "PoleError",
    "ReportRow",
    "SingularFactorError",
    "StripPoint",
    "SweepConfig",
    "SymmetryReport",
    "ThetaValue",
    "ZERO_COLUMNS",
    "ZeroCandidate",
    "ZetalabError",
    "as_strip_point",
    "c_alpha",
    "check_symmetry",
    "convergence_profile",
    "cross_term_brute",
    "cross_term_fast",
    "cross_term_sweep",
    "diagnostic_series",
    "eta_accelerated",
    "eta_accelerated_at_order",
    "eta_partial",
    "eta_partial_trajectory",
    "factor_info",
    "fmt17",
    "functional_equation_residual",
    "gamma_complex",
    "hardy_z",
    "log_gamma",
    "power_sum",
    "read_rows",
    "run_suite",
    "scan_zeros",
    "theta_rs",
    "verify_zero_equivalence",
    "write_rows",
    "zeta_euler_maclaurin",
    "zeta_from_eta",
    "__version__",
]
