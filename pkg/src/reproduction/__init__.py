from .paper_suite import (FAIL, PASS, SUSPECTED_TYPO, CheckResult, PaperSuite,
                          identity_terms, paper_display)

__all__ = [
    "CheckResult",
    "FAIL",
    "PASS",
    "PaperSuite",
    "SUSPECTED_TYPO",
    "identity_terms",
    "paper_display",
]
