"""Derivative recurrence and termination determinant for regular problems.

A regular problem is the ODE ``f'' = p0(x) f' + q0(x; E) f`` with polynomial
coefficients and a linear energy dependence ``q0(x; E) = q0_base(x) +
E*q0_E(x)``.  Differentiating the ODE repeatedly gives

    f^(n+2) = p_n(x) f' + q_n(x) f,
    p_n = p0*p_{n-1} + p_{n-1}' + q_{n-1},
    q_n = q0*p_{n-1} + q_{n-1}',

and the constant terms p_n(0), q_n(0) carry everything needed for both the
quantization condition and the eigenfunction's Taylor coefficients.

Requiring the reconstructed Taylor series to terminate after the m-th
derivative couples f(0) and f'(0) through two homogeneous rows:

    q_m(0) f(0)     + p_m(0) f'(0)     = 0
    q_{m-1}(0) f(0) + p_{m-1}(0) f'(0) = 0

whose determinant ``delta = q_m(0) p_{m-1}(0) - p_m(0) q_{m-1}(0)`` vanishes
(as a function of E) at approximate eigenvalues.

Truncation schedule: coefficients of degree d at step n can influence the
constant terms at step m only if d <= m - n (each differentiation shifts
information down exactly one degree; multiplication by p0/q0 never shifts it
down).  Series are therefore re-truncated to degree m + 2 - n at step n,
which preserves the constants exactly while keeping the total cost at
O(m^2 * deg) coefficient operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    IndeterminateBoundaryError,
    ParityError,
    RecurrenceOverflowError,
)
from .precision import BigReal, Scalar, as_fraction, big, is_finite, log10_abs, sign
from .series import TruncSeries

__all__ = [
    "RegularProblem",
    "PQTrace",
    "iterate_pq",
    "delta",
    "delta_sign_log",
    "delta_parity",
    "boundary_from_trace",
]


def _token_tuple(values) -> tuple:
    out = tuple(values)
    if not out:
        raise ValueError("polynomial needs at least one coefficient")
    for v in out:
        as_fraction(v)  # raises on malformed tokens
    return out


def _is_zero_token(v: Scalar) -> bool:
    return as_fraction(v) == 0


@dataclass(frozen=True)
class RegularProblem:
    """ODE ``f'' = p0 f' + (q0_base + E*q0_E) f`` plus its decay envelope.

    Coefficient arrays are ascending-power tuples of exact scalar tokens
    (int, float, decimal string, or Fraction); they are materialized at the
    working precision only inside computations.  ``envelope_w`` is the
    polynomial W(x) of the substitution ``psi = f * exp(-int W dx)`` that
    produced the ODE; it is needed again when assembling eigenfunctions.

    ``parity=True`` asserts the even-potential structure (p0 odd, q0 even),
    which makes half of the p_n(0), q_n(0) structural zeros.
    """

    p0: tuple = field()
    q0_base: tuple = field()
    q0_E: tuple = field()
    envelope_w: tuple = ()
    parity: bool = False
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "p0", _token_tuple(self.p0))
        object.__setattr__(self, "q0_base", _token_tuple(self.q0_base))
        object.__setattr__(self, "q0_E", _token_tuple(self.q0_E))
        object.__setattr__(self, "envelope_w", tuple(self.envelope_w))
        for v in self.envelope_w:
            as_fraction(v)
        if self.parity:
            bad_p = [i for i, v in enumerate(self.p0) if i % 2 == 0 and not _is_zero_token(v)]
            bad_q = [
                i
                for i, v in enumerate(self.q0_base + self.q0_E)
                if i % 2 == 1 and not _is_zero_token(v)
            ]
            if bad_p or bad_q:
                raise ValueError(
                    "parity problem requires p0 odd and q0 even in x "
                    f"(offending p0 powers {bad_p}, q0 powers {bad_q})"
                )

    def q0_tokens(self) -> tuple:
        """Padded (q0_base, q0_E) pair of equal length."""
        n = max(len(self.q0_base), len(self.q0_E))
        base = self.q0_base + (0,) * (n - len(self.q0_base))
        lin = self.q0_E + (0,) * (n - len(self.q0_E))
        return base, lin


@dataclass(frozen=True)
class PQTrace:
    """Constant terms p_n(0), q_n(0) for n = 0..m at a fixed energy."""

    m: int
    p_at_0: tuple
    q_at_0: tuple
    energy: BigReal
    parity: bool
    p_final: TruncSeries | None = None
    q_final: TruncSeries | None = None

    def __post_init__(self):
        if len(self.p_at_0) != self.m + 1 or len(self.q_at_0) != self.m + 1:
            raise ValueError("trace lists must have length m+1")


def iterate_pq(
    problem: RegularProblem,
    energy,
    m: int,
    *,
    keep_series: bool = False,
) -> PQTrace:
    """Run the derivative recurrence for ``m`` steps at a fixed energy.

    Returns the full trace of constant terms (all n <= m), so eigenfunction
    reconstruction needs no second pass.  ``keep_series`` additionally
    retains the final p_m, q_m series for diagnostics.

    Raises :class:`RecurrenceOverflowError` naming the failing step if a
    value leaves the representable exponent range.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    e = big(energy)
    if not is_finite(e):
        raise ValueError("energy must be finite")

    p0 = TruncSeries.from_coeffs(problem.p0)
    base, lin = problem.q0_tokens()
    q0 = TruncSeries.from_coeffs(base) + TruncSeries.from_coeffs(lin).scale(e)

    top = m + 2
    p = p0.truncate(top)
    q = q0.truncate(top)
    p_at_0 = [p.at_origin()]
    q_at_0 = [q.at_origin()]

    for n in range(1, m + 1):
        deg = top - n
        p_next = p0.mul_trunc(p, deg) + p.diff().truncate(deg) + q.truncate(deg)
        q_next = q0.mul_trunc(p, deg) + q.diff().truncate(deg)
        p, q = p_next, q_next
        cp, cq = p.at_origin(), q.at_origin()
        if not (is_finite(cp) and is_finite(cq)):
            raise RecurrenceOverflowError(n)
        p_at_0.append(cp)
        q_at_0.append(cq)

    if not (p.all_finite() and q.all_finite()):
        raise RecurrenceOverflowError(m)

    return PQTrace(
        m=m,
        p_at_0=tuple(p_at_0),
        q_at_0=tuple(q_at_0),
        energy=e,
        parity=problem.parity,
        p_final=p if keep_series else None,
        q_final=q if keep_series else None,
    )


def delta(trace: PQTrace) -> BigReal:
    """Termination determinant q_m(0) p_{m-1}(0) - p_m(0) q_{m-1}(0)."""
    m = trace.m
    return (
        trace.q_at_0[m] * trace.p_at_0[m - 1]
        - trace.p_at_0[m] * trace.q_at_0[m - 1]
    )


def delta_sign_log(trace: PQTrace) -> tuple[int, float]:
    """(sign, log10|delta|): the determinant spans hundreds of decades, so
    root finding must never compare raw values across the window."""
    d = delta(trace)
    return sign(d), log10_abs(d)


def delta_parity(trace: PQTrace, sector: str) -> BigReal:
    """Single-row termination condition for a parity problem.

    ``sector='even'`` returns q_m(0) (the f'(0)=0 sector), ``sector='odd'``
    returns p_m(0) (the f(0)=0 sector).  The caller picks m with matching
    parity, otherwise the returned value is a structural zero.
    """
    if not trace.parity:
        raise ParityError("delta_parity requires an even-potential problem")
    if sector == "even":
        return trace.q_at_0[trace.m]
    if sector == "odd":
        return trace.p_at_0[trace.m]
    raise ValueError(f"sector must be 'even' or 'odd', got {sector!r}")


def boundary_from_trace(
    trace: PQTrace, *, degenerate_rtol: float = 1e-6
) -> tuple[BigReal, BigReal]:
    """Boundary pair (f(0), f'(0)) from the termination rows at a refined root.

    Row m of the termination system is solved by (f0, f1) = (p_m(0),
    -q_m(0)).  At a refined eigenvalue of a parity problem that row is
    numerically negligible (one entry a structural zero, the other the
    root-finding residual), so the row is judged against the scale of row
    m-1 and the fallback row is used when it has collapsed.  The result is
    normalized so the larger component is +1.
    """
    m = trace.m
    rows = (
        (trace.q_at_0[m], trace.p_at_0[m]),
        (trace.q_at_0[m - 1], trace.p_at_0[m - 1]),
    )
    scale_m = max(abs(rows[0][0]), abs(rows[0][1]))
    scale_m1 = max(abs(rows[1][0]), abs(rows[1][1]))
    if scale_m == 0 and scale_m1 == 0:
        raise IndeterminateBoundaryError(
            "both termination rows vanish; boundary values indeterminate"
        )
    use_fallback = scale_m1 > 0 and scale_m <= big(degenerate_rtol) * scale_m1
    qr, pr = rows[1] if use_fallback else rows[0]
    f0, f1 = pr, -qr
    norm = max(abs(f0), abs(f1))
    f0, f1 = f0 / norm, f1 / norm
    if (abs(f0) >= abs(f1) and f0 < 0) or (abs(f1) > abs(f0) and f1 < 0):
        f0, f1 = -f0, -f1
    return f0, f1
