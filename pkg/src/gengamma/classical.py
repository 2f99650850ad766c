"""Classical special functions on the complex plane.

Log-gamma, gamma, digamma and the reciprocal gamma are thin wrappers around
``scipy.special`` with explicit pole checks. The Riemann zeta function is
evaluated with the Borwein alternating-series acceleration of the Dirichlet
eta function; no reflection formula is used, so ``zeta_fn`` is only defined
for ``Re s > 0``.

All functions accept Python or numpy scalars and return ``complex``.
"""
import cmath
import math
from functools import lru_cache

import numpy as np
from scipy import special

from .errors import DomainError, PoleProximity

#: Absolute distance from a pole below which evaluation is refused.
POLE_THRESHOLD = 1e-8

EULER_GAMMA = 0.57721566490153286060651209008240243

ZETA_TOL = 1e-12
ZETA_MAX_TERMS = 2000
ZETA_MAX_IMAG = 30.0

_BORWEIN_RATE = math.log(3.0 + math.sqrt(8.0))


def nearest_nonpositive_integer(z):
    """Return the non-positive integer closest to ``z``.

    Points with ``Re z > 0`` map to 0, which is then the nearest pole of
    the gamma function.
    """
    return min(0, round(complex(z).real))


def distance_to_gamma_pole(z):
    """Distance from ``z`` to the pole set {0, -1, -2, ...} of the gamma function."""
    z = complex(z)
    return abs(z - nearest_nonpositive_integer(z))


def check_gamma_pole(z, threshold=POLE_THRESHOLD, what="argument"):
    z = complex(z)
    m = nearest_nonpositive_integer(z)
    if abs(z - m) < threshold:
        raise PoleProximity(f"{what} {z} is within {threshold:g} of the pole at {m}", pole=m)


def ln_gamma(z):
    """Principal branch of log Gamma(z).

    The branch cut runs along the negative real axis, so the imaginary part
    of the result at a negative real argument is a multiple of pi.
    """
    check_gamma_pole(z)
    return complex(special.loggamma(complex(z)))


def gamma_fn(z):
    """Gamma(z), with the reflection formula handled by scipy for Re z < 1/2."""
    check_gamma_pole(z)
    z = complex(z)
    if z.imag == 0.0:
        return complex(special.gamma(z.real))
    return complex(special.gamma(z))


def rgamma(z):
    """1/Gamma(z). Entire, so there is no pole check."""
    z = complex(z)
    if z.imag == 0.0:
        return complex(special.rgamma(z.real))
    return complex(special.rgamma(z))


def digamma(z):
    check_gamma_pole(z)
    z = complex(z)
    if z.imag == 0.0:
        return complex(special.psi(z.real))
    return complex(special.psi(z))


def beta_fn(x, y):
    """Euler beta function via log-gamma differences (no intermediate overflow)."""
    for w in (x, y, complex(x) + complex(y)):
        check_gamma_pole(w)
    return cmath.exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(complex(x) + complex(y)))


def pow_real_base(b, s):
    """Principal power ``b**s`` for a positive real base ``b`` and complex ``s``."""
    b = float(b)
    if not b > 0.0:
        raise DomainError(f"base must be a positive real, got {b!r}")
    s = complex(s)
    if s == 0:
        return 1 + 0j
    if s == 1:
        return complex(b)
    return cmath.exp(s * math.log(b))


@lru_cache(maxsize=64)
def _borwein_weights(n):
    # (d_k - d_n) / d_n for k < n with d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!).
    # Partial sums are kept exact in integers (scaled by a common multiple of
    # every denominator) and rounded only in the final division.
    common = math.factorial(2 * n) * math.factorial(n)
    partial = []
    acc = 0
    for i in range(n + 1):
        den = math.factorial(n - i) * math.factorial(2 * i)
        acc += math.factorial(n + i - 1) * 4**i * (common // den)
        partial.append(acc)
    dn = partial[-1]
    return tuple((partial[k] - dn) / dn for k in range(n))


def zeta_terms(s, tol=ZETA_TOL):
    """Number of Borwein terms needed for absolute eta error ``tol`` at ``s``."""
    t = abs(complex(s).imag)
    # log of 3 (1 + 2t) e^(pi t / 2) / tol, kept in log form so large t cannot overflow
    log_bound = math.log(3.0 * (1.0 + 2.0 * t) / tol) + math.pi * t / 2.0
    return max(1, min(ZETA_MAX_TERMS, math.ceil(log_bound / _BORWEIN_RATE)))


def eta_fn(s, tol=ZETA_TOL):
    """Dirichlet eta function sum_{n>=1} (-1)^(n-1) n^-s for Re s > 0."""
    s = complex(s)
    if not s.real > 0.0:
        raise DomainError(f"eta_fn requires Re s > 0, got {s}")
    n = zeta_terms(s, tol)
    w = np.asarray(_borwein_weights(n))
    k = np.arange(n)
    powers = np.exp(-s * np.log(k + 1.0))
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    return complex(-np.sum(signs * w * powers))


def zeta_fn(s, tol=ZETA_TOL):
    """Riemann zeta for Re s > 0, |Im s| <= 30, via eta(s) / (1 - 2^(1-s))."""
    s = complex(s)
    if not s.real > 0.0:
        raise DomainError(f"zeta_fn requires Re s > 0 (no reflection), got {s}")
    if abs(s.imag) > ZETA_MAX_IMAG:
        raise DomainError(f"zeta_fn requires |Im s| <= {ZETA_MAX_IMAG}, got {s}")
    if abs(s - 1) < POLE_THRESHOLD:
        raise PoleProximity(f"s = {s} is within {POLE_THRESHOLD:g} of the pole at 1", pole=1)
    factor = 1.0 - pow_real_base(2.0, 1.0 - s)
    if abs(factor) < 1e-6:
        # the other zeros of 1 - 2^(1-s) on Re s = 1 cancel against zeros of eta
        raise DomainError(f"eta route is singular at s = {s}")
    return eta_fn(s, tol) / factor
