from .reduction import (CompleteReducer, ReductionSeries, SubstitutionMode,
                        complete_reduce, exact_base_identity,
                        reduction_snapshot)
from .relations import (Theory, base_series, complex_denominator,
                        complex_relation, denominator, f_polynomial, k_series,
                        ko_relation_expanded, m_series, real_denominator,
                        relation_polynomial)
from .verification import (PeriodCertificate, RealificationStatus,
                           certify_period, is_in_relation_ideal,
                           prefix_congruence_check, realification_check,
                           realification_status, realification_target,
                           reduction_prefix_is_exact,
                           series_inverts_denominator,
                           verify_finite_identity)

__all__ = [
    "CompleteReducer",
    "PeriodCertificate",
    "RealificationStatus",
    "ReductionSeries",
    "SubstitutionMode",
    "Theory",
    "base_series",
    "certify_period",
    "complete_reduce",
    "complex_denominator",
    "complex_relation",
    "denominator",
    "exact_base_identity",
    "f_polynomial",
    "is_in_relation_ideal",
    "k_series",
    "ko_relation_expanded",
    "m_series",
    "prefix_congruence_check",
    "real_denominator",
    "realification_check",
    "realification_status",
    "realification_target",
    "reduction_prefix_is_exact",
    "reduction_snapshot",
    "relation_polynomial",
    "series_inverts_denominator",
    "verify_finite_identity",
]
