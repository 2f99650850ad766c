"""Generalized gamma functions over an abstract real sequence.

For a real sequence ``A = (a_n)`` with ``1 + 1/a_n > 0`` and a summable
``sum 1/a_n**2``, the function

    Gamma_A(s) = prod_{n>=0} (1 + 1/a_n)**s / (1 + s/a_n)

is evaluated here by direct truncation, in log space, with a rigorous bound
on the discarded tail. The bound rests on the estimate

    |s log(1+u) - log(1+s u)| <= (|s| + |s|**2) u**2,   u = 1/a_n,

valid once ``|a_n| >= 2(1 + |s|)``, together with a caller-supplied upper
bound on ``sum_{n>N} 1/a_n**2``.

Sequences are assumed to have ``|a_n|`` non-decreasing in ``n`` from the
truncation point on; every factory in this module satisfies that.
"""
import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .classical import POLE_THRESHOLD, digamma, gamma_fn, rgamma
from .errors import DomainError, PoleProximity, TruncatedAtCap

_CHUNK = 1 << 20
_EPS = 2.0**-52
_ROUNDING_UNIT = 2.0**-50
# rounding of block-wise compensated summation, per unit of sum |t_n|
_SUM_ROUNDING = (_kernels.BLOCK + 8) * _EPS


@dataclass(frozen=True)
class SequenceSpec:
    """A real sequence ``a_n`` (n >= 0) with a tail bound on ``sum 1/a_n**2``.

    ``term`` maps an integer index array to the array of sequence values.
    ``tail_sum_bound(N)`` must be an upper bound on ``sum_{n>N} 1/a_n**2``,
    non-increasing in ``N``. ``progression`` is an optional ``(a, r)`` pair
    telling the kernels the terms are ``a + n r``; it only selects a faster
    code path and must agree with ``term``.
    """

    term: Callable[[np.ndarray], np.ndarray]
    tail_sum_bound: Callable[[int], float]
    label: str = ""
    progression: Optional[tuple] = None

    def at(self, n):
        return float(self.term(np.array([n], dtype=np.int64))[0])

    def terms(self, n0, n1):
        return np.asarray(self.term(np.arange(n0, n1, dtype=np.int64)), dtype=np.float64)


@dataclass(frozen=True)
class TruncationPolicy:
    tol: float = 1e-10
    max_terms: int = 10_000_000
    pole_threshold: float = POLE_THRESHOLD

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol!r}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms!r}")
        if not self.pole_threshold >= 0:
            raise ValueError("pole_threshold must be non-negative")


class Status(str, enum.Enum):
    OK = "ok"
    POLE_PROXIMITY = "pole_proximity"
    TRUNCATED_AT_CAP = "truncated_at_cap"


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_error_bound: float
    terms_used: int
    status: Status = Status.OK


# -- sequence factories ------------------------------------------------------


def arithmetic(a, r):
    """The progression ``a + n r``.

    Accepts ``a, r > 0`` and the mirrored branch ``a < -1, r < 0``.
    """
    a = float(a)
    r = float(r)
    if not ((r > 0 and a > 0) or (r < 0 and a < -1)):
        raise DomainError(f"need a > 0, r > 0 or a < -1, r < 0; got a={a}, r={r}")
    ar, rr = abs(a), abs(r)

    def term(n):
        return a + n * r

    def tail(N):
        # sum_{n>N} (a+nr)^-2 <= int_N^inf (|a| + x|r|)^-2 dx
        return 1.0 / (rr * (ar + N * rr))

    return SequenceSpec(term, tail, label=f"{a:g}+{r:g}n", progression=(a, r))


def naturals():
    """The positive integers 1, 2, 3, ... ."""
    spec = arithmetic(1.0, 1.0)
    return SequenceSpec(spec.term, spec.tail_sum_bound, label="N*", progression=(1.0, 1.0))


def power_sequence(c, p):
    """``a_n = c (n+1)**p`` for ``c > 0`` and ``p > 1/2``."""
    c = float(c)
    p = float(p)
    if not (c > 0 and p > 0.5):
        raise DomainError(f"need c > 0 and p > 1/2; got c={c}, p={p}")

    def term(n):
        return c * (np.asarray(n, dtype=np.float64) + 1.0) ** p

    def tail(N):
        return (N + 1.0) ** (1.0 - 2.0 * p) / ((2.0 * p - 1.0) * c * c)

    return SequenceSpec(term, tail, label=f"{c:g}(n+1)^{p:g}")


def negated(spec):
    """The sequence ``-A``; needs ``|a_n| > 1`` so that ``1 - 1/a_n > 0``."""

    def term(n):
        return -spec.term(n)

    prog = None
    if spec.progression is not None:
        prog = (-spec.progression[0], -spec.progression[1])
    return SequenceSpec(term, spec.tail_sum_bound, label=f"-({spec.label})", progression=prog)


def squared(spec):
    """The sequence ``A**2``."""

    def term(n):
        t = spec.term(n)
        return t * t

    def tail(N):
        # sum_{n>N} a_n^-4 <= a_{N+1}^-2 sum_{n>N} a_n^-2 for non-decreasing |a_n|
        return spec.tail_sum_bound(N) / spec.at(N + 1) ** 2

    return SequenceSpec(term, tail, label=f"({spec.label})^2")


def scaled(spec, factor):
    """The sequence ``factor * A``; ``A / alpha`` is ``scaled(A, 1/alpha)``."""
    factor = float(factor)
    if factor == 0:
        raise DomainError("scale factor must be non-zero")

    def term(n):
        return factor * spec.term(n)

    def tail(N):
        return spec.tail_sum_bound(N) / (factor * factor)

    prog = None
    if spec.progression is not None:
        prog = (factor * spec.progression[0], factor * spec.progression[1])
    return SequenceSpec(term, tail, label=f"{factor:g}*({spec.label})", progression=prog)


# -- truncation --------------------------------------------------------------


def _least_index(pred, cap):
    """Least ``N`` in ``[0, cap]`` with ``pred(N)`` true (pred monotone), else None."""
    if pred(0):
        return 0
    hi = 1
    while not pred(hi):
        if hi >= cap:
            return None
        hi = min(2 * hi, cap)
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _choose_terms(spec, min_abs, coeff, tol, max_terms):
    """Pick the last evaluated index ``N``.

    Requires ``|a_n| >= min_abs`` for all ``n > N`` and
    ``coeff * tail_sum_bound(N) <= tol``. Returns ``(N, capped)``.
    """
    cap = max_terms - 1
    n_size = _least_index(lambda n: abs(spec.at(n + 1)) >= min_abs, cap)
    if n_size is None:
        raise TruncatedAtCap(
            f"|a_n| stays below {min_abs:g} up to n = {max_terms}; no tail bound available"
        )
    n_tail = _least_index(lambda n: coeff * spec.tail_sum_bound(n) <= tol, cap)
    if n_tail is None:
        return cap, True
    return max(n_size, n_tail), False


def _chunks(n_total):
    for lo in range(0, n_total, _CHUNK):
        yield lo, min(lo + _CHUNK, n_total)


def _sum_gamma_logs(spec, s, n_total):
    parts_re, parts_im = [], []
    abs_total = 0.0
    dmin = math.inf
    for lo, hi in _chunks(n_total):
        if spec.progression is not None:
            a0, r = spec.progression
            part, pabs, d = _kernels.gamma_sum_progression(a0, r, lo, hi, s)
        else:
            part, pabs, d = _kernels.gamma_sum_array(spec.terms(lo, hi), s)
        parts_re.append(part.real)
        parts_im.append(part.imag)
        abs_total += pabs
        dmin = min(dmin, d)
    return complex(math.fsum(parts_re), math.fsum(parts_im)), abs_total, dmin


def gamma_seq(spec, s, policy=TruncationPolicy()):
    """Truncated product for ``Gamma_A(s)`` with a rigorous error bound.

    The returned ``abs_error_bound`` covers the discarded tail plus a
    rounding allowance of ``terms_used * 2**-50 * (1 + |log value|)``
    (plus the worst-case error of the blocked summation).
    If ``max_terms`` is reached first, the result carries status
    ``truncated_at_cap`` and the (larger) bound valid at the cap.
    """
    s = complex(s)
    if s == 0:
        return EvalResult(1 + 0j, 0.0, 0, Status.OK)
    m = abs(s)
    coeff = m + m * m
    N, capped = _choose_terms(spec, 2.0 * (1.0 + m), coeff, policy.tol, policy.max_terms)
    n_total = N + 1
    log_value, abs_total, dmin = _sum_gamma_logs(spec, s, n_total)
    if dmin < policy.pole_threshold:
        raise PoleProximity(f"s = {s} is within {policy.pole_threshold:g} of a pole -a_n")
    tail = coeff * spec.tail_sum_bound(N)
    err_log = (
        tail
        + n_total * _ROUNDING_UNIT * (1.0 + abs(log_value))
        + _SUM_ROUNDING * abs_total
    )
    value = np.exp(log_value)
    status = Status.TRUNCATED_AT_CAP if capped else Status.OK
    return EvalResult(complex(value), abs(value) * math.expm1(err_log), n_total, status)


def euler_constant_seq(spec, policy=TruncationPolicy()):
    """``gamma_A`` from ``exp(-gamma_A) = prod (1 + 1/a_n) exp(-1/a_n)``.

    The value is real and the error bound is absolute.
    """
    # |log(1+u) - u| <= u^2/2 for u > 0 and <= u^2 for -1/2 <= u < 0
    probe = spec.at(0)
    coeff = 0.5 if probe > 0 else 1.0
    N, capped = _choose_terms(spec, 2.0, coeff, policy.tol, policy.max_terms)
    n_total = N + 1
    parts, abs_total = [], 0.0
    for lo, hi in _chunks(n_total):
        if spec.progression is not None:
            a0, r = spec.progression
            part, pabs = _kernels.euler_sum_progression(a0, r, lo, hi)
        else:
            part, pabs = _kernels.euler_sum_array(spec.terms(lo, hi))
        parts.append(part)
        abs_total += pabs
    total = math.fsum(parts)
    err = coeff * spec.tail_sum_bound(N) + _SUM_ROUNDING * abs_total
    status = Status.TRUNCATED_AT_CAP if capped else Status.OK
    return EvalResult(-total, err, n_total, status)


def mu_seq(spec, policy=TruncationPolicy()):
    """``mu_A = prod (1 - 1/a_n**2)``; requires ``|a_n| > 1`` for every n.

    ``abs_error_bound`` is absolute; the relative error is at most
    ``expm1`` of the bound on the log, which is kept below ``tol``.
    """
    # |log(1 - u^2)| <= 2 u^2 once u^2 <= 1/2
    coeff = 2.0
    N, capped = _choose_terms(spec, math.sqrt(2.0), coeff, policy.tol, policy.max_terms)
    n_total = N + 1
    parts, abs_total, amin = [], 0.0, math.inf
    for lo, hi in _chunks(n_total):
        if spec.progression is not None:
            a0, r = spec.progression
            part, pabs, pmin = _kernels.mu_sum_progression(a0, r, lo, hi)
        else:
            part, pabs, pmin = _kernels.mu_sum_array(spec.terms(lo, hi))
        if pmin <= 1.0:
            raise DomainError(f"mu_A needs |a_n| > 1 for all n; found |a_n| = {pmin:g}")
        parts.append(part)
        abs_total += pabs
        amin = min(amin, pmin)
    log_mu = math.fsum(parts)
    err_log = coeff * spec.tail_sum_bound(N) + _SUM_ROUNDING * abs_total
    value = math.exp(log_mu)
    status = Status.TRUNCATED_AT_CAP if capped else Status.OK
    return EvalResult(value, value * math.expm1(err_log), n_total, status)


def psi_seq(spec, s, policy=TruncationPolicy()):
    """Log-derivative ``-gamma_A + sum s/(a_n (a_n + s))`` as a single truncated sum."""
    s = complex(s)
    m = abs(s)
    probe = spec.at(0)
    # tail term: |log(1+u)-u| + |s| u^2/(1-|s u|) <= (c + 2|s|) u^2
    coeff = (0.5 if probe > 0 else 1.0) + 2.0 * m
    N, capped = _choose_terms(spec, 2.0 * (1.0 + m), coeff, policy.tol, policy.max_terms)
    n_total = N + 1
    parts_re, parts_im = [], []
    abs_total = 0.0
    dmin = math.inf
    for lo, hi in _chunks(n_total):
        if spec.progression is not None:
            a0, r = spec.progression
            part, pabs, d = _kernels.psi_sum_progression(a0, r, lo, hi, s)
        else:
            part, pabs, d = _kernels.psi_sum_array(spec.terms(lo, hi), s)
        parts_re.append(part.real)
        parts_im.append(part.imag)
        abs_total += pabs
        dmin = min(dmin, d)
    if dmin < policy.pole_threshold:
        raise PoleProximity(f"s = {s} is within {policy.pole_threshold:g} of a pole -a_n")
    total = complex(math.fsum(parts_re), math.fsum(parts_im))
    err = coeff * spec.tail_sum_bound(N) + _SUM_ROUNDING * abs_total
    status = Status.TRUNCATED_AT_CAP if capped else Status.OK
    return EvalResult(total, err, n_total, status)


def weierstrass_product(a, r, w):
    """Closed form of ``prod_{n>=0} (1 + w/(a+nr)) exp(-w/(a+nr))``.

    Equals ``Gamma(a/r) / Gamma(a/r + w/r) * exp((w/r) psi(a/r))``. The
    product is entire in ``w``; at its zeros ``w = -(a+nr)`` this returns 0.
    """
    arithmetic(a, r)  # validates the pair
    b = a / r
    w = complex(w)
    if w == 0:
        return 1 + 0j
    return gamma_fn(b) * rgamma(b + w / r) * np.exp(w / r * digamma(b))
