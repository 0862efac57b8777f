"""Extended-precision real arithmetic context.

All numerical kernels in this package run on MPFR floats (via gmpy2) under a
context whose precision is fixed once per computation.  The recurrences
produce values spanning hundreds to thousands of decimal orders of magnitude,
so the backend must combine configurable mantissa precision with a very wide
exponent range; gmpy2's default contexts allow binary exponents up to about
+-2**30, i.e. decimal magnitudes around 10**(+-323000000), far beyond what any
iteration count used here can reach.

Problem definitions store coefficients as exact scalar tokens (int, float,
decimal string, or Fraction) and materialize them with :func:`big` at the
active precision, so the same problem object can be solved at any precision
without re-parsing.
"""

from __future__ import annotations

from contextlib import contextmanager
from decimal import Decimal
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr

__all__ = [
    "BigReal",
    "Scalar",
    "DEFAULT_PRECISION",
    "precision",
    "big",
    "to_float",
    "is_finite",
    "sign",
    "log10_abs",
    "exact_decimal",
    "as_fraction",
]

BigReal = mpfr
Scalar = int | float | str | Fraction

DEFAULT_PRECISION = 192
_MIN_PRECISION = 24


@contextmanager
def precision(bits: int = DEFAULT_PRECISION):
    """Run a block with the working precision set to ``bits``.

    Nested uses are fine; the previous context is restored on exit.
    """
    bits = int(bits)
    if bits < _MIN_PRECISION:
        raise ValueError(f"precision must be >= {_MIN_PRECISION} bits, got {bits}")
    with gmpy2.context(precision=bits):
        yield


def big(value: Scalar | BigReal) -> BigReal:
    """Convert a scalar token to an mpfr at the active precision.

    Strings are parsed as decimal literals (correctly rounded), which is how
    problem files avoid a detour through binary doubles.  Fractions are
    divided at the active precision.  An existing mpfr is re-rounded into the
    active context.
    """
    if isinstance(value, mpfr):
        return +value
    if isinstance(value, (int, float)):
        return mpfr(value)
    if isinstance(value, str):
        return mpfr(value.strip())
    if isinstance(value, Fraction):
        return mpfr(value.numerator) / mpfr(value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to BigReal")


def to_float(value) -> float:
    return float(value)


def is_finite(value) -> bool:
    return bool(gmpy2.is_finite(value))


def sign(value) -> int:
    """-1, 0, or +1.  Exact zeros matter: they mark termination points."""
    if value == 0:
        return 0
    return 1 if value > 0 else -1


def log10_abs(value) -> float:
    """log10 |value| as a double; -inf for zero.

    Works far outside double range (the argument may be ~10**1e5).
    """
    if value == 0:
        return float("-inf")
    return float(gmpy2.log10(abs(mpfr(value))))


def exact_decimal(value: Scalar) -> int | str:
    """Exact decimal form of a scalar token, for serialization.

    Ints pass through; floats expand to their exact (finite) decimal value;
    decimal strings are kept verbatim; Fractions must have a terminating
    decimal expansion (denominator 2^a * 5^b), which holds for anything
    derived from float or decimal-string inputs.
    """
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, float):
        return format(Decimal(value), "f")
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        twos = fives = 0
        d = value.denominator
        while d % 2 == 0:
            d //= 2
            twos += 1
        while d % 5 == 0:
            d //= 5
            fives += 1
        if d != 1:
            raise ValueError(
                f"fraction {value} has no finite decimal expansion; "
                "cannot serialize exactly"
            )
        exp = max(twos, fives)
        digits = value.numerator * 10**exp // value.denominator
        return format(Decimal(digits).scaleb(-exp), "f")
    raise TypeError(f"cannot serialize {type(value).__name__}")


def as_fraction(value: Scalar) -> Fraction:
    """Exact rational view of a scalar token (used for structural checks)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(Decimal(value.strip()))
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")
