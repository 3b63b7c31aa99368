from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Iterable, Optional

from tqdm import tqdm

from src.arith import OddPrime
from src.configs.config import (CHECKPOINT_INTERVAL, DEFAULT_MAX_PERIOD,
                                DEFAULT_WORKERS)
from src.core import (CompleteReducer, PeriodCertificate, ReductionSeries,
                      SubstitutionMode, Theory)
from src.utils.helper import save_json, stringify_ints

from .detector import (CertificateStatus, PeriodReport,
                       detect_eventual_period)
from .state import ScanState, state_path


def _fresh_or_resumed(
    theory: Theory, p: OddPrime, order: int, mode: SubstitutionMode, path: Optional[str]
):
    """Returns (reducer, None) to run, or (None, series) when a saved prefix already covers ``order``."""
    if path and os.path.exists(path):
        state = ScanState.load(path)
        if (state.theory, state.p, state.mode) != (theory, p.value, mode):
            logging.warning(
                f"State file {path} is for {state.theory.value} p={state.p} {state.mode.value}; recomputing"
            )
        elif state.target == order:
            logging.info(f"Resuming {theory.value} p={p} at position {state.done}/{order}")
            return state.to_reducer(), None
        elif state.target >= order and state.done >= order:
            logging.info(f"Reusing the first {order} of {state.done} balanced coefficients from {path}")
            prefix = state.coefficients[:order]
            return None, ReductionSeries(theory, p, mode, prefix, order)
        else:
            logging.warning(
                f"State file {path} was computed for target {state.target} (done {state.done}); "
                f"recomputing for {order}"
            )
    return CompleteReducer(theory, p, order, mode), None


def reduce_with_state(
    theory: Theory,
    p: OddPrime,
    order: int,
    mode: SubstitutionMode = SubstitutionMode.SELF,
    path: Optional[str] = None,
    checkpoint_every: int = CHECKPOINT_INTERVAL,
    show_progress: bool = False,
) -> ReductionSeries:
    """complete_reduce with an optional resumable state file at ``path``."""
    theory = Theory.parse(theory)
    p = OddPrime.of(p)
    mode = SubstitutionMode.parse(mode)
    reducer, series = _fresh_or_resumed(theory, p, order, mode, path)
    if series is not None:
        return series

    def checkpoint(r: CompleteReducer) -> None:
        ScanState.from_reducer(r).save(path)

    progress = None
    if show_progress:
        progress = tqdm(total=order, initial=reducer.position, desc=f"{theory.value} p={p}")
    try:
        reducer.run(
            on_checkpoint=checkpoint if path else None,
            checkpoint_every=checkpoint_every,
            progress=progress,
        )
    finally:
        if progress is not None:
            progress.close()
    if path:
        checkpoint(reducer)
    return reducer.result()


def scan_prime(
    theory: Theory,
    p: int,
    order: int,
    out_dir: Optional[str],
    mode: SubstitutionMode = SubstitutionMode.SELF,
    max_period: int = DEFAULT_MAX_PERIOD,
    state_file: Optional[str] = None,
    show_progress: bool = False,
) -> PeriodReport:
    theory = Theory.parse(theory)
    p = OddPrime.of(p)
    path = state_file or (state_path(out_dir, theory, p.value, mode) if out_dir else None)
    series = reduce_with_state(theory, p, order, mode, path, show_progress=show_progress)
    stream = series.balanced
    outcome = detect_eventual_period(stream, max_period)
    if not outcome.found:
        return PeriodReport(theory.value, p.value, len(stream), outcome)

    s, t = outcome.preperiod, outcome.period
    cert = PeriodCertificate(theory, p, tuple(stream[:s]), tuple(stream[s : s + t])).certified()
    status = CertificateStatus.PROVED if cert.verified else CertificateStatus.UNPROVED
    if not cert.verified:
        logging.warning(f"{theory.value} p={p}: window shows {outcome} but the certificate fails")
    return PeriodReport(
        theory.value, p.value, len(stream), outcome, status, cert.preperiod, cert.cycle
    )


def scan(
    theory: Theory,
    primes: Iterable[int],
    order: int,
    out_dir: Optional[str],
    mode: SubstitutionMode = SubstitutionMode.SELF,
    workers: int = DEFAULT_WORKERS,
    max_period: int = DEFAULT_MAX_PERIOD,
    show_progress: bool = False,
) -> list[PeriodReport]:
    """Reduce, detect and certify each prime; reports come back sorted by p."""
    theory = Theory.parse(theory)
    mode = SubstitutionMode.parse(mode)
    primes = sorted({OddPrime.of(p).value for p in primes})
    if order < 1:
        raise ValueError("order must be >= 1")
    logging.info(f"Scanning {theory.value} for primes {primes} to {order} terms")

    reports = []
    if workers <= 1 or len(primes) <= 1:
        for p in tqdm(primes, desc="Scanning primes", disable=not show_progress):
            reports.append(scan_prime(theory, p, order, out_dir, mode, max_period))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(scan_prime, theory, p, order, out_dir, mode, max_period): p
                for p in primes
            }
            for future in tqdm(
                as_completed(futures), total=len(futures), desc="Scanning primes", disable=not show_progress
            ):
                reports.append(future.result())
    reports.sort(key=lambda r: r.p)

    if out_dir:
        save_json(
            stringify_ints([r.to_dict() for r in reports]),
            os.path.join(out_dir, f"reports_{theory.value}.json"),
        )
    return reports
