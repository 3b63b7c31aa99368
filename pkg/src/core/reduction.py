from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

import numpy as np

from src.algebra import IntPoly
from src.arith import OddPrime, balanced_residue
from src.errors import ConsistencyViolation

from .relations import Theory, base_series, denominator


class SubstitutionMode(str, Enum):
    """Which relation the carry of a rebalanced position is substituted with."""

    SELF = "self"  # the working array as it stands (default)
    BASE = "base"  # the K/M base series

    @classmethod
    def parse(cls, value) -> "SubstitutionMode":
        if isinstance(value, SubstitutionMode):
            return value
        return cls(str(value).strip().lower())


@dataclass(frozen=True)
class ReductionSeries:
    """
    p*X = sum_n coefficients[n] * X^(base_exponent + n), X the generator.

    coefficients[:balanced_len] are final and lie in the balanced band; the
    rest is the raw working tail.
    """

    theory: Theory
    p: OddPrime
    mode: SubstitutionMode
    coefficients: tuple
    balanced_len: int

    @property
    def base_exponent(self) -> int:
        return self.theory.base_exponent(self.p)

    @property
    def balanced(self) -> tuple:
        return self.coefficients[: self.balanced_len]

    @property
    def tail(self) -> tuple:
        return self.coefficients[self.balanced_len :]

    @property
    def max_tail_digits(self) -> int:
        return max((len(str(abs(c))) for c in self.tail), default=0)

    def terms(self) -> list[tuple[int, int]]:
        e = self.base_exponent
        return [(e + i, c) for i, c in enumerate(self.coefficients) if c]

    def __len__(self) -> int:
        return len(self.coefficients)


def _object_array(values: Sequence[int], length: Optional[int] = None) -> np.ndarray:
    size = len(values) if length is None else length
    arr = np.zeros(size, dtype=object)
    for i, v in enumerate(values[:size]):
        arr[i] = int(v)
    return arr


def exact_base_identity(theory: Theory, p: OddPrime, order: int) -> list[int]:
    """
    Coefficients of an exact finite identity p*X = sum c_i X^(e+i).

    With Q the base series to ``order`` and D the denominator, D*Q = -1 + X^N*S
    and p*X*D = -X^e modulo the relation, so p*X = X^e*Q + p*X^(N+1)*S exactly.
    Needs order + 1 >= e so every exponent is at least e.
    """
    theory = Theory.parse(theory)
    p = OddPrime.of(p)
    e = theory.base_exponent(p)
    if order + 1 < e:
        raise ValueError(f"order {order} too small for base exponent {e}")
    q = base_series(theory, p, order).to_list()
    dq = denominator(theory, p) * IntPoly(q)
    if dq[0] != -1 or any(dq[k] for k in range(1, order)):
        raise ConsistencyViolation(
            f"{theory.value} base series of p={p} is not the negated inverse of its denominator"
        )
    high = [dq[order + i] for i in range(max(0, dq.degree - order + 1))]
    offset = order + 1 - e
    coeffs = q + [0] * max(0, offset + len(high) - len(q))
    for i, s in enumerate(high):
        coeffs[offset + i] += p.value * s
    return coeffs


class CompleteReducer:
    """
    Left-to-right balancing engine.

    At position n the entry c_n is split as r + p*q; c_n becomes r and q*p*X^(e+n)
    = q*X^(e+n-1)*(p*X) is rewritten with the substitution relation S, which
    adds q*S_m at n + d + m (d = e - 1 >= 1). Positions before n never change
    again. In truncated mode entries at index >= order are dropped; in exact
    mode the array grows so that the identity stays exact.
    """

    def __init__(
        self,
        theory: Theory,
        p: OddPrime,
        order: int,
        mode: SubstitutionMode = SubstitutionMode.SELF,
        exact: bool = False,
    ):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.theory = Theory.parse(theory)
        self.p = OddPrime.of(p)
        self.order = order
        self.mode = SubstitutionMode.parse(mode)
        self.exact = exact
        self.shift = self.theory.carry_shift(self.p)
        if exact:
            start = exact_base_identity(
                self.theory, self.p, max(order, self.theory.base_exponent(self.p) - 1)
            )
        else:
            start = base_series(self.theory, self.p, order).to_list()
        self._base = _object_array(start)
        self.work = self._base.copy()
        self.position = 0

    @classmethod
    def restore(
        cls,
        theory: Theory,
        p: OddPrime,
        order: int,
        mode: SubstitutionMode,
        position: int,
        coefficients: Sequence[int],
    ) -> "CompleteReducer":
        reducer = cls(theory, p, order, mode)
        if len(coefficients) != order or not 0 <= position <= order:
            raise ValueError(
                f"cannot restore {len(coefficients)} coefficients at position {position} "
                f"into an order-{order} reducer"
            )
        reducer.work = _object_array(coefficients)
        reducer.position = position
        return reducer

    @property
    def done(self) -> bool:
        return not self.exact and self.position >= self.order

    def step(self) -> None:
        n = self.position
        r, q = balanced_residue(int(self.work[n]), self.p)
        start = n + self.shift
        span = len(self.work) if self.exact else self.order - start
        if q and span > 0:
            if self.mode is SubstitutionMode.SELF:
                # the array is the current valid relation only before c_n is replaced
                relation = self.work[:span].copy()
            else:
                relation = self._base[:span]
            if self.exact:
                needed = start + len(relation)
                if needed > len(self.work):
                    self.work = np.concatenate(
                        [self.work, np.zeros(needed - len(self.work), dtype=object)]
                    )
                self.work[start:needed] += q * relation
            else:
                self.work[start : self.order] += q * relation
        self.work[n] = r
        self.position = n + 1

    def run(
        self,
        stop_at: Optional[int] = None,
        on_checkpoint: Optional[Callable[["CompleteReducer"], None]] = None,
        checkpoint_every: int = 0,
        progress=None,
    ) -> "CompleteReducer":
        stop = self.order if stop_at is None else stop_at
        if not self.exact:
            stop = min(stop, self.order)
        while self.position < stop:
            self.step()
            if progress is not None:
                progress.update(1)
            if on_checkpoint and checkpoint_every and self.position % checkpoint_every == 0:
                on_checkpoint(self)
        return self

    def result(self) -> ReductionSeries:
        return ReductionSeries(
            theory=self.theory,
            p=self.p,
            mode=self.mode,
            coefficients=tuple(int(c) for c in self.work),
            balanced_len=self.position,
        )


def complete_reduce(
    theory: Theory,
    p: OddPrime,
    order: int,
    mode: SubstitutionMode = SubstitutionMode.SELF,
) -> ReductionSeries:
    """First ``order`` coefficients of the complete reduction of p*X."""
    reducer = CompleteReducer(theory, p, order, mode)
    logging.debug(
        f"Reducing {reducer.theory.value} relation for p={reducer.p} to {order} terms ({reducer.mode.value})"
    )
    return reducer.run().result()


def reduction_snapshot(
    theory: Theory,
    p: OddPrime,
    n_stop: int,
    mode: SubstitutionMode = SubstitutionMode.SELF,
) -> ReductionSeries:
    """
    Exact identity after balancing positions < n_stop: the balanced prefix
    followed by the untouched raw remainder, with nothing truncated.
    """
    if n_stop < 1:
        raise ValueError("n_stop must be >= 1")
    reducer = CompleteReducer(theory, p, n_stop, mode, exact=True)
    return reducer.run(stop_at=n_stop).result()
