"""Truncated power-series arithmetic over extended-precision coefficients.

A :class:`TruncSeries` holds coefficients ``c0..cD`` of powers ``x^0..x^D``;
terms above the truncation degree ``D`` are semantically zero.  Everything
higher in the package (derivative recurrences, termination determinants,
eigenfunction reconstruction) is built on these four operations: add,
truncated multiply, differentiate, evaluate at the origin.

Storage is dense: under the recurrences the series fill in almost
immediately, so a sparse representation would only add overhead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DegreeMismatchError
from .precision import BigReal, big, is_finite

__all__ = ["TruncSeries"]


@dataclass(frozen=True, eq=True)
class TruncSeries:
    """Power series truncated at a fixed degree; immutable value type."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")

    @classmethod
    def from_coeffs(cls, values: Iterable, degree: int | None = None) -> "TruncSeries":
        """Build from ascending coefficients, padding/truncating to ``degree``."""
        cs = [big(v) for v in values]
        if not cs:
            cs = [big(0)]
        if degree is not None:
            if degree < 0:
                raise ValueError("degree must be non-negative")
            if len(cs) > degree + 1:
                cs = cs[: degree + 1]
            else:
                cs += [big(0)] * (degree + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def zero(cls, degree: int) -> "TruncSeries":
        return cls.from_coeffs([], degree)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, degree: int) -> "TruncSeries":
        """Cut or zero-pad to the requested degree."""
        if degree == self.degree:
            return self
        return TruncSeries.from_coeffs(self.coeffs, degree)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"degree mismatch in series add: {self.degree} vs {other.degree}"
            )
        return TruncSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def scale(self, factor) -> "TruncSeries":
        f = big(factor)
        return TruncSeries(tuple(f * a for a in self.coeffs))

    def mul_trunc(self, other: "TruncSeries", degree: int) -> "TruncSeries":
        """Cauchy product truncated at ``degree``.

        Cost is O(len(short) * min(len(long), degree+1)); the recurrences
        always multiply a short fixed polynomial into a long running series,
        so the short operand drives the outer loop.
        """
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        out = [big(0)] * (degree + 1)
        for i, ai in enumerate(a):
            if i > degree:
                break
            if ai == 0:
                continue
            jmax = min(len(b) - 1, degree - i)
            for j in range(jmax + 1):
                out[i + j] += ai * b[j]
        return TruncSeries(tuple(out))

    def diff(self) -> "TruncSeries":
        """Derivative; degree drops by one (a constant differentiates to 0)."""
        if self.degree == 0:
            return TruncSeries((big(0),))
        return TruncSeries(
            tuple((k + 1) * self.coeffs[k + 1] for k in range(self.degree))
        )

    def at_origin(self) -> BigReal:
        return self.coeffs[0]

    def reciprocal(self, degree: int) -> "TruncSeries":
        """Series inverse 1/self truncated at ``degree``; needs c0 != 0."""
        c = self.coeffs
        if c[0] == 0:
            raise ZeroDivisionError("series reciprocal needs a nonzero constant term")
        inv0 = 1 / c[0]
        out = [inv0] + [big(0)] * degree
        for k in range(1, degree + 1):
            acc = big(0)
            for i in range(1, min(k, len(c) - 1) + 1):
                acc += c[i] * out[k - i]
            out[k] = -acc * inv0
        return TruncSeries(tuple(out))

    def all_finite(self) -> bool:
        return all(is_finite(a) for a in self.coeffs)
