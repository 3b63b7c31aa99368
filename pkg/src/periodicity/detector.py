from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from src.configs.config import (DEFAULT_MAX_PERIOD, PERIOD_MIN_CONFIRMED,
                                PERIOD_MIN_CYCLES)


class CertificateStatus(str, Enum):
    PROVED = "PROVED"
    UNPROVED = "UNPROVED"
    NOT_ATTEMPTED = "NOT_ATTEMPTED"


@dataclass(frozen=True)
class PeriodOutcome:
    """FOUND(preperiod, period, confirmed_length) or NOT_FOUND within the window."""

    found: bool
    preperiod: Optional[int] = None
    period: Optional[int] = None
    confirmed_length: int = 0

    @classmethod
    def not_found(cls) -> "PeriodOutcome":
        return cls(False)

    def __str__(self) -> str:
        if not self.found:
            return "NOT_FOUND"
        return f"FOUND(s={self.preperiod}, t={self.period})"


def acceptance_margin(period: int, window: int, min_cycles: int, min_confirmed: int) -> int:
    return max(min_cycles * period, period + min(min_confirmed, window // 2))


def detect_eventual_period(
    seq: Sequence[int],
    max_period: int = DEFAULT_MAX_PERIOD,
    min_cycles: int = PERIOD_MIN_CYCLES,
    min_confirmed: int = PERIOD_MIN_CONFIRMED,
) -> PeriodOutcome:
    """
    Smallest t <= max_period such that a[n+t] == a[n] on [s, W-t) with the
    smallest such s, provided W - t - s clears the acceptance margin.
    Says nothing about terms beyond the window.
    """
    values = list(seq)
    window = len(values)
    if not window:
        raise ValueError("cannot look for a period in an empty sequence")
    for t in range(1, min(max_period, window - 1) + 1):
        s = window - t
        while s > 0 and values[s - 1] == values[s - 1 + t]:
            s -= 1
        confirmed = window - t - s
        if confirmed >= acceptance_margin(t, window, min_cycles, min_confirmed):
            return PeriodOutcome(True, s, t, confirmed)
    return PeriodOutcome.not_found()


@dataclass(frozen=True)
class PeriodReport:
    theory: str
    p: int
    window: int
    outcome: PeriodOutcome
    certificate_status: CertificateStatus = CertificateStatus.NOT_ATTEMPTED
    preperiod_values: tuple = field(default=())
    cycle_values: tuple = field(default=())

    def to_dict(self) -> dict:
        out = {
            "theory": self.theory,
            "p": self.p,
            "window": self.window,
            "outcome": "FOUND" if self.outcome.found else "NOT_FOUND",
            "certificate_status": self.certificate_status.value,
        }
        if self.outcome.found:
            out.update(
                preperiod=self.outcome.preperiod,
                period=self.outcome.period,
                confirmed_length=self.outcome.confirmed_length,
                preperiod_values=list(self.preperiod_values),
                cycle_values=list(self.cycle_values),
            )
        return out

    def __str__(self) -> str:
        return f"{self.theory} p={self.p} W={self.window}: {self.outcome} [{self.certificate_status.value}]"
