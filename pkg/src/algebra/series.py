from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, Iterable, TypeVar

from src.errors import NonUnitConstantTerm

from .domains import INTEGERS, CoefficientDomain
from .poly import DensePoly

T = TypeVar("T")


@dataclass(frozen=True)
class TruncatedSeries(Generic[T]):
    """Order-N prefix s_0..s_{N-1} of a formal power series over ``domain``."""

    domain: CoefficientDomain[T]
    coeffs: tuple

    @classmethod
    def of(cls, coeffs: Iterable, domain: CoefficientDomain = INTEGERS, order: int | None = None):
        values = [domain.coerce(c) for c in coeffs]
        if order is not None:
            values = values[:order] + [domain.zero()] * max(0, order - len(values))
        return cls(domain, tuple(values))

    @classmethod
    def from_poly(cls, poly: DensePoly, order: int, domain: CoefficientDomain = INTEGERS):
        return cls.of((poly[k] for k in range(order)), domain)

    @classmethod
    def one(cls, order: int, domain: CoefficientDomain = INTEGERS):
        return cls.of([domain.one()], domain, order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_list(self) -> list:
        return list(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries[T]":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.domain, self.coeffs[:order])

    def __neg__(self) -> "TruncatedSeries[T]":
        return TruncatedSeries(self.domain, tuple(self.domain.neg(c) for c in self.coeffs))

    def __add__(self, other: "TruncatedSeries[T]") -> "TruncatedSeries[T]":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries[T]") -> "TruncatedSeries[T]":
        return series_add(self, -other)

    def __mul__(self, other: "TruncatedSeries[T]") -> "TruncatedSeries[T]":
        return series_mul(self, other)

    def shift(self, k: int) -> "TruncatedSeries[T]":
        return series_shift(self, k)

    def inverse(self) -> "TruncatedSeries[T]":
        return series_inverse(self)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    add = a.domain.add
    return TruncatedSeries(a.domain, tuple(add(a[i], b[i]) for i in range(n)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    dom = a.domain
    out = [dom.zero()] * n
    for i in range(n):
        ai = a[i]
        if dom.is_zero(ai):
            continue
        for j in range(n - i):
            bj = b[j]
            if not dom.is_zero(bj):
                out[i + j] = dom.add(out[i + j], dom.mul(ai, bj))
    return TruncatedSeries(dom, tuple(out))


def series_shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError("shift must be non-negative")
    return TruncatedSeries(a.domain, (a.domain.zero(),) * k + a.coeffs)


def series_inverse(d: TruncatedSeries) -> TruncatedSeries:
    """
    Inverse to the same order by the coefficient recurrence
    inv_n = -(sum_{k=1..n} d_k inv_{n-k}) / d_0.
    """
    dom = d.domain
    if d.order == 0:
        return d
    d0 = d[0]
    if not dom.is_unit(d0):
        raise NonUnitConstantTerm(f"constant term {d0} is not a unit in {dom.name}")
    support = [k for k in range(1, d.order) if not dom.is_zero(d[k])]
    inv = [dom.exact_div_by_unit(dom.one(), d0)]
    for n in range(1, d.order):
        acc = dom.zero()
        for k in support:
            if k > n:
                break
            acc = dom.add(acc, dom.mul(d[k], inv[n - k]))
        inv.append(dom.neg(dom.exact_div_by_unit(acc, d0)))
    return TruncatedSeries(dom, tuple(inv))
