from .detector import (CertificateStatus, PeriodOutcome, PeriodReport,
                       acceptance_margin, detect_eventual_period)
from .scanner import reduce_with_state, scan, scan_prime
from .state import ScanState, state_file_name, state_path

__all__ = [
    "CertificateStatus",
    "PeriodOutcome",
    "PeriodReport",
    "ScanState",
    "acceptance_margin",
    "detect_eventual_period",
    "reduce_with_state",
    "scan",
    "scan_prime",
    "state_file_name",
    "state_path",
]
