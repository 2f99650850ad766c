"""Compiled summation kernels for the truncated products.

Every kernel sums log-terms in blocks of ``BLOCK`` naive additions whose
partial sums are combined with Kahan compensation; the rounding error is thus
at most about ``(BLOCK + 4) * eps * sum |t_n|``. Terms with a small
reciprocal ``u = 1/a_n`` are evaluated from their Taylor series with the
leading cancellation removed analytically; the rest go through log1p/atan2.

Each kernel comes in two flavours: ``*_array`` consumes an explicit array of
sequence terms, ``*_progression`` generates ``a + n r`` inline for
``n0 <= n < n1``.
"""
import math

import numba
import numpy as np

# below this size of |u| and |s u| the series branch is used
_SERIES_CUTOFF = 1e-3
#: terms summed naively before each compensated block update
BLOCK = 512


@numba.njit(cache=True, error_model="numpy")
def _log1p_complex(z):
    # principal log(1 + z) without losing the small-|z| digits
    x = z.real
    y = z.imag
    if abs(z) < 0.5:
        re = 0.5 * math.log1p(2.0 * x + x * x + y * y)
    else:
        re = math.log(math.hypot(1.0 + x, y))
    return complex(re, math.atan2(y, 1.0 + x))


@numba.njit(cache=True, error_model="numpy")
def _log1p_minus_x(x):
    # log(1+x) - x = sum_{k>=2} (-1)^(k+1) x^k / k, truncated after k = 8;
    # valid for |x| <= _SERIES_CUTOFF (relative truncation error < 1e-18)
    p = -1.0 / 8.0
    p = 1.0 / 7.0 + x * p
    p = -1.0 / 6.0 + x * p
    p = 1.0 / 5.0 + x * p
    p = -1.0 / 4.0 + x * p
    p = 1.0 / 3.0 + x * p
    p = -1.0 / 2.0 + x * p
    return x * x * p


@numba.njit(cache=True, error_model="numpy")
def gamma_log_term(s, u):
    """s*log(1+u) - log(1+s*u) for one factor of the product."""
    z = s * u
    if abs(u) <= _SERIES_CUTOFF and abs(z) <= _SERIES_CUTOFF:
        # the first-order terms s*u and z cancel exactly
        return s * _log1p_minus_x(u) - _log1p_minus_x(z)
    return s * math.log1p(u) - _log1p_complex(z)


@numba.njit(cache=True, error_model="numpy")
def euler_log_term(u):
    """log(1+u) - u."""
    if abs(u) <= _SERIES_CUTOFF:
        return _log1p_minus_x(u)
    return math.log1p(u) - u


@numba.njit(cache=True, error_model="numpy")
def mu_log_term(u):
    """log(1 - u^2)."""
    x = u * u
    if x <= 1e-6:
        return -(x + x * x / 2.0 + x * x * x / 3.0)
    return math.log1p(-x)


@numba.njit(cache=True, error_model="numpy")
def psi_term(s, u):
    """log(1+u) - u + s u^2/(1 + s u), i.e. the n-th term of the log-derivative."""
    # s u^2 / (1 + s u) with |s u| <= 1/2 beyond the first few terms, so the
    # plain conjugate formula cannot overflow
    wr = 1.0 + s.real * u
    wi = s.imag * u
    q = u * u / (wr * wr + wi * wi)
    return euler_log_term(u) + complex(
        (s.real * wr + s.imag * wi) * q, (s.imag * wr - s.real * wi) * q
    )


@numba.njit(cache=True, error_model="numpy")
def _kahan(acc, c, x):
    y = x - c
    w = acc + y
    return w, (w - acc) - y


@numba.njit(cache=True, error_model="numpy")
def gamma_sum_progression(a0, r, n0, n1, s):
    re = 0.0
    cre = 0.0
    im = 0.0
    cim = 0.0
    absacc = 0.0
    dmin = np.inf
    for b0 in range(n0, n1, BLOCK):
        block = 0j
        for n in range(b0, min(b0 + BLOCK, n1)):
            a = a0 + n * r
            d = abs(a + s)
            if d < dmin:
                dmin = d
            t = gamma_log_term(s, 1.0 / a)
            block += t
            absacc += abs(t)
        re, cre = _kahan(re, cre, block.real)
        im, cim = _kahan(im, cim, block.imag)
    return complex(re, im), absacc, dmin


@numba.njit(cache=True, error_model="numpy")
def gamma_sum_array(terms, s):
    re = 0.0
    cre = 0.0
    im = 0.0
    cim = 0.0
    absacc = 0.0
    dmin = np.inf
    n1 = terms.shape[0]
    for b0 in range(0, n1, BLOCK):
        block = 0j
        for i in range(b0, min(b0 + BLOCK, n1)):
            a = terms[i]
            d = abs(a + s)
            if d < dmin:
                dmin = d
            t = gamma_log_term(s, 1.0 / a)
            block += t
            absacc += abs(t)
        re, cre = _kahan(re, cre, block.real)
        im, cim = _kahan(im, cim, block.imag)
    return complex(re, im), absacc, dmin


@numba.njit(cache=True, error_model="numpy")
def psi_sum_progression(a0, r, n0, n1, s):
    re = 0.0
    cre = 0.0
    im = 0.0
    cim = 0.0
    absacc = 0.0
    dmin = np.inf
    for b0 in range(n0, n1, BLOCK):
        block = 0j
        for n in range(b0, min(b0 + BLOCK, n1)):
            a = a0 + n * r
            d = abs(a + s)
            if d < dmin:
                dmin = d
            t = psi_term(s, 1.0 / a)
            block += t
            absacc += abs(t)
        re, cre = _kahan(re, cre, block.real)
        im, cim = _kahan(im, cim, block.imag)
    return complex(re, im), absacc, dmin


@numba.njit(cache=True, error_model="numpy")
def psi_sum_array(terms, s):
    re = 0.0
    cre = 0.0
    im = 0.0
    cim = 0.0
    absacc = 0.0
    dmin = np.inf
    n1 = terms.shape[0]
    for b0 in range(0, n1, BLOCK):
        block = 0j
        for i in range(b0, min(b0 + BLOCK, n1)):
            a = terms[i]
            d = abs(a + s)
            if d < dmin:
                dmin = d
            t = psi_term(s, 1.0 / a)
            block += t
            absacc += abs(t)
        re, cre = _kahan(re, cre, block.real)
        im, cim = _kahan(im, cim, block.imag)
    return complex(re, im), absacc, dmin


@numba.njit(cache=True, error_model="numpy")
def euler_sum_progression(a0, r, n0, n1):
    acc = 0.0
    c = 0.0
    absacc = 0.0
    for b0 in range(n0, n1, BLOCK):
        block = 0.0
        for n in range(b0, min(b0 + BLOCK, n1)):
            block += euler_log_term(1.0 / (a0 + n * r))
        # every term is <= 0, so |block| equals the block's sum of |t|
        absacc += abs(block)
        acc, c = _kahan(acc, c, block)
    return acc, absacc


@numba.njit(cache=True, error_model="numpy")
def euler_sum_array(terms):
    acc = 0.0
    c = 0.0
    absacc = 0.0
    n1 = terms.shape[0]
    for b0 in range(0, n1, BLOCK):
        block = 0.0
        blockabs = 0.0
        for i in range(b0, min(b0 + BLOCK, n1)):
            t = euler_log_term(1.0 / terms[i])
            block += t
            blockabs += abs(t)
        absacc += blockabs
        acc, c = _kahan(acc, c, block)
    return acc, absacc


@numba.njit(cache=True, error_model="numpy")
def mu_sum_progression(a0, r, n0, n1):
    acc = 0.0
    c = 0.0
    absacc = 0.0
    amin = np.inf
    for b0 in range(n0, n1, BLOCK):
        block = 0.0
        for n in range(b0, min(b0 + BLOCK, n1)):
            a = a0 + n * r
            amin = min(amin, abs(a))
            block += mu_log_term(1.0 / a)
        # every term is <= 0 here as well
        absacc += abs(block)
        acc, c = _kahan(acc, c, block)
    return acc, absacc, amin


@numba.njit(cache=True, error_model="numpy")
def mu_sum_array(terms):
    acc = 0.0
    c = 0.0
    absacc = 0.0
    amin = np.inf
    n1 = terms.shape[0]
    for b0 in range(0, n1, BLOCK):
        block = 0.0
        blockabs = 0.0
        for i in range(b0, min(b0 + BLOCK, n1)):
            a = terms[i]
            amin = min(amin, abs(a))
            t = mu_log_term(1.0 / a)
            block += t
            blockabs += abs(t)
        absacc += blockabs
        acc, c = _kahan(acc, c, block)
    return acc, absacc, amin
