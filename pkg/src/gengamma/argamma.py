"""Gamma functions over arithmetic progressions ``a + n r``.

Closed forms in terms of the classical gamma and digamma functions:

    Gamma_{a,r}(s) = Gamma((s+a)/r) / Gamma(a/r) * alpha**s,
    alpha          = Gamma(a/r) / Gamma(a/r + 1/r),
    sin_{a,r}(s)   = Gamma(a/r)**2 / (Gamma((a+s)/r) Gamma((a-s)/r)),

together with the constants attached to them (Euler-type constant,
recurrence multiplier, multiplication and shift constants) and the
special case ``a = r``.

Every power with a complex exponent has a positive real base and goes
through :func:`~gengamma.classical.pow_real_base`.
"""
import cmath
import math
from dataclasses import dataclass

from . import seqgamma
from .classical import (
    EULER_GAMMA,
    POLE_THRESHOLD,
    beta_fn,
    digamma,
    distance_to_gamma_pole,
    gamma_fn,
    ln_gamma,
    nearest_nonpositive_integer,
    pow_real_base,
    rgamma,
    zeta_fn,
)
from .errors import DomainError, PoleProximity


@dataclass(frozen=True)
class ArithParams:
    """The progression ``a + n r`` (``a, r > 0``, or ``a < -1, r < 0``)."""

    a: float
    r: float

    def __post_init__(self):
        a, r = float(self.a), float(self.r)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "r", r)
        if not ((r > 0 and a > 0) or (r < 0 and a < -1)):
            raise DomainError(f"need a > 0, r > 0 or a < -1, r < 0; got a={a:g}, r={r:g}")

    @property
    def ratio(self):
        """``a / r``, always positive for valid parameters."""
        return self.a / self.r

    def x(self, s):
        """The classical-gamma argument ``(s + a) / r``."""
        return (complex(s) + self.a) / self.r

    def pole(self, n):
        """The ``n``-th pole ``-(a + n r)`` of ``Gamma_{a,r}``."""
        return -(self.a + n * self.r)

    def sequence(self):
        return seqgamma.arithmetic(self.a, self.r)


def _ln_ratio(p):
    # log(alpha) = lnGamma(a/r) - lnGamma(a/r + 1/r); both arguments are positive
    b = p.ratio
    return math.lgamma(b) - math.lgamma(b + 1.0 / p.r)


def _check_pole(p, s):
    x = p.x(s)
    m = nearest_nonpositive_integer(x)
    if abs(x - m) * abs(p.r) < POLE_THRESHOLD:
        raise PoleProximity(
            f"s = {complex(s)} is within {POLE_THRESHOLD:g} of the pole {p.pole(-m):g}",
            pole=p.pole(-m),
        )
    return x


def gamma_ar(p, s):
    """``Gamma_{a,r}(s)`` from its closed form."""
    x = _check_pole(p, s)
    s = complex(s)
    return gamma_fn(x) / math.gamma(p.ratio) * pow_real_base(alpha_const(p), s)


def ln_gamma_ar(p, s):
    """A logarithm of ``Gamma_{a,r}(s)``, continuous on the cut plane in ``x``."""
    x = _check_pole(p, s)
    return ln_gamma(x) - math.lgamma(p.ratio) + complex(s) * _ln_ratio(p)


def gamma_ar_product(p, s, policy=seqgamma.TruncationPolicy()):
    """``Gamma_{a,r}(s)`` from the truncated defining product, with error bound."""
    return seqgamma.gamma_seq(p.sequence(), s, policy)


def sin_ar(p, s):
    """``prod (1 - s**2/(a+nr)**2)`` via reciprocal gammas.

    Exact zero when ``s`` is within the pole threshold of some ``+-(a+nr)``.
    """
    s = complex(s)
    b = p.ratio
    u = s / p.r
    for w in (b + u, b - u):
        if distance_to_gamma_pole(w) * abs(p.r) < POLE_THRESHOLD:
            return 0j
    return math.gamma(b) ** 2 * rgamma(b + u) * rgamma(b - u)


def gamma_ar_constant(p):
    """The Euler-type constant ``gamma_{a,r}``."""
    b = p.ratio
    return -(_ln_ratio(p) + digamma(b).real / p.r)


def alpha_const(p):
    """Recurrence multiplier ``Gamma(a/r) / Gamma(a/r + 1/r)``."""
    return math.exp(_ln_ratio(p))


def gamma_ar_at_r(p):
    """``Gamma_{a,r}(r) = (a/r) exp(-r gamma_{a,r}) exp(-psi(a/r))``.

    Since ``-r gamma_{a,r} - psi(a/r) = r ln(alpha)`` this is ``(a/r) alpha**r``;
    the prefactor is ``a/r``, which the closed form at ``s = r`` confirms.
    """
    b = p.ratio
    return b * math.exp(-p.r * gamma_ar_constant(p) - digamma(b).real)


def mu_ar(p):
    """``prod (1 - 1/(a+nr)**2)``, which is ``sin_{a,r}(1)``; needs ``|a+nr| > 1``."""
    if abs(p.a) <= 1.0:
        raise DomainError(f"mu needs |a + n r| > 1 for all n; a = {p.a:g}")
    return sin_ar(p, 1.0).real


def psi_ar(p, s):
    """Log-derivative ``(1/r) psi((s+a)/r) + lnGamma(a/r) - lnGamma(a/r + 1/r)``."""
    x = _check_pole(p, s)
    return digamma(x) / p.r + _ln_ratio(p)


def multiplication_constant(p, n):
    """Constant ``K_n`` in ``n**(ns/r) prod_k Gamma_{a,r}(s + kr/n) = K_n Gamma_{a,r}(ns + (n-1)a)``."""
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    a, r, b = p.a, p.r, p.ratio
    log_k = (
        0.5 * (n - 1) * math.log(2.0 * math.pi)
        - (n * a / r - 0.5) * math.log(n)
        + (n - 1) * (a - r / 2.0) * math.lgamma(b + 1.0 / r)
        - (n - 1) * (a + 1.0 - r / 2.0) * math.lgamma(b)
    )
    return math.exp(log_k)


def multiplication_constant_product(p, n):
    """``K_n`` as ``Gamma_{a,r}(r/n) ... Gamma_{a,r}((n-1)r/n) / Gamma_{a,r}((n-1)a)``."""
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    num = 1 + 0j
    for k in range(1, n):
        num *= gamma_ar(p, k * p.r / n)
    return (num / gamma_ar(p, (n - 1) * p.a)).real


def duplication_constant(p):
    """``Gamma_{a,r}(r/2) / Gamma_{a,r}(a)`` in explicit form."""
    a, r, b = p.a, p.r, p.ratio
    return (
        math.sqrt(math.pi)
        / 2.0 ** (2.0 * a / r - 1.0)
        * math.exp((a - r / 2.0) * math.lgamma(b + 1.0 / r) - (1.0 + a - r / 2.0) * math.lgamma(b))
    )


def triple_constant(p):
    """Constant in ``Gamma_{a,r}(3s+2a) = C 3**(3s/r) prod_{k<3} Gamma_{a,r}(s + kr/3)``.

    ``C = 3**(3a/r - 1/2) / (2 pi) * Gamma(a/r)**(2+2a-r) / Gamma(a/r+1/r)**(2a-r)``,
    the reciprocal of ``multiplication_constant(p, 3)``.
    """
    a, r, b = p.a, p.r, p.ratio
    return math.exp(
        (3.0 * a / r - 0.5) * math.log(3.0)
        - math.log(2.0 * math.pi)
        + (2.0 + 2.0 * a - r) * math.lgamma(b)
        - (2.0 * a - r) * math.lgamma(b + 1.0 / r)
    )


def shift_constants(p, h):
    """``(C, q)`` with ``Gamma_{a-h,r}(s+h) = C q**s Gamma_{a,r}(s)``; needs ``a - h > 0``."""
    a, r = p.a, p.r
    if not (r > 0 and a - h > 0):
        raise DomainError(f"shift needs a - h > 0 (and r > 0); got a={a:g}, h={h:g}")
    bh = (a - h) / r
    log_c = math.lgamma(a / r) + (h - 1.0) * math.lgamma(bh) - h * math.lgamma(bh + 1.0 / r)
    q = (beta_fn(bh, 1.0 / r) / beta_fn(a / r, 1.0 / r)).real
    return math.exp(log_c), q


def shift_q_alt(p, h):
    """``q`` in its second form ``beta((a+1)/r, -h/r) / beta(a/r, -h/r)``; undefined for ``h = 0``."""
    a, r = p.a, p.r
    return (beta_fn((a + 1.0) / r, -h / r) / beta_fn(a / r, -h / r)).real


def beta_ratio(p, n, k, s):
    """``Gamma_{a,nr}(s) / Gamma_{a+kr,nr}(s)`` through beta functions of ``k/n``."""
    a, r = p.a, p.r
    n, k = int(n), int(k)
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    s = complex(s)
    nr = n * r
    first = beta_fn((s + a) / nr, k / n) / beta_fn(a / nr, k / n)
    base = (beta_fn(a / nr, k / n) / beta_fn((a + 1.0) / nr, k / n)).real
    return first * pow_real_base(base, s)


def beta_ratio_alt(p, n, k, s):
    """Second beta form ``beta(s/nr, (a+kr)/nr)/beta(s/nr, a/nr) * (beta(a/nr,1/nr)/beta((a+kr)/nr,1/nr))**s``."""
    a, r = p.a, p.r
    n, k = int(n), int(k)
    s = complex(s)
    nr = n * r
    first = beta_fn(s / nr, (a + k * r) / nr) / beta_fn(s / nr, a / nr)
    base = (beta_fn(a / nr, 1.0 / nr) / beta_fn((a + k * r) / nr, 1.0 / nr)).real
    return first * pow_real_base(base, s)


def gamma_neg_sq_ar(p, t):
    """``Gamma_{-A^2}(t)`` for ``A = a + n r``: ``mu**t / sin_{a,r}(sqrt t)``.

    Follows from the definition since ``prod (1 - t/(a+nr)**2) = sin_{a,r}(sqrt t)``
    for either square root. Needs ``|a + n r| > 1``.
    """
    t = complex(t)
    return pow_real_base(mu_ar(p), t) / sin_ar(p, cmath.sqrt(t))


# -- the a = r family ----------------------------------------------------------


def gamma_aa(a, s):
    """``Gamma_{a,a}(s) = Gamma(1 + s/a) / Gamma(1 + 1/a)**s``."""
    s = complex(s)
    return gamma_fn(1.0 + s / a) / pow_real_base(math.gamma(1.0 + 1.0 / a), s)


def sin_aa(a, s):
    """``sin_{a,a}(s) = a sin(pi s/a) / (pi s)``."""
    s = complex(s)
    if s == 0:
        return 1 + 0j
    return a * cmath.sin(math.pi * s / a) / (math.pi * s)


def euler_constant_aa(a):
    """``gamma_{a,a} = gamma/a + lnGamma(1 + 1/a)``."""
    return EULER_GAMMA / a + math.lgamma(1.0 + 1.0 / a)


def psi_aa(a, s):
    """``(1/a) psi(1 + s/a) - lnGamma(1 + 1/a)``."""
    return digamma(1.0 + complex(s) / a) / a - math.lgamma(1.0 + 1.0 / a)


# -- zeta functional equation -------------------------------------------------

_G22 = ArithParams(2.0, 2.0)


def zeta_functional_sides(s, zeta_s=None, zeta_1ms=None):
    """Both sides of ``Gamma_{2,2}(s) zeta(s)/(2**s s) = Gamma_{2,2}(1-s) zeta(1-s)/(2**(1-s)(1-s))``.

    Zeta values may be supplied to evaluate outside the strip where
    :func:`zeta_fn` is defined.
    """
    s = complex(s)
    if zeta_s is None:
        zeta_s = zeta_fn(s)
    if zeta_1ms is None:
        zeta_1ms = zeta_fn(1.0 - s)
    left = gamma_ar(_G22, s) * zeta_s / (pow_real_base(2.0, s) * s)
    right = gamma_ar(_G22, 1.0 - s) * zeta_1ms / (pow_real_base(2.0, 1.0 - s) * (1.0 - s))
    return left, right


def zeta_functional_residual(s):
    """Relative residual ``|L - R| / max(|L|, |R|)`` of the zeta functional equation, 0 < Re s < 1."""
    s = complex(s)
    if not 0.0 < s.real < 1.0:
        raise DomainError(f"zeta_functional_residual needs 0 < Re s < 1, got {s}")
    left, right = zeta_functional_sides(s)
    return abs(left - right) / max(abs(left), abs(right))
