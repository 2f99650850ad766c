"""Registry of identities satisfied by the arithmetic gamma family.

Each entry evaluates one or more ``(lhs, rhs)`` pairs from closed forms at a
point ``s``. The residual of an entry is the largest ``rel(lhs, rhs)`` over
its pairs, where ``rel(u, v) = |u - v| / max(|u|, |v|, 1)``.

Entries also declare which classical-gamma arguments must stay away from
the poles {0, -1, -2, ...} and which denominators must stay away from 0;
the grid builder in :mod:`gengamma.verify` uses these to exclude points.
"""
import cmath
import math
from dataclasses import dataclass
from typing import Callable

from . import argamma as ag
from .argamma import ArithParams
from .classical import POLE_THRESHOLD, distance_to_gamma_pole, gamma_fn, pow_real_base
from .errors import DomainError, PoleProximity, UnknownIdentity

#: Standard parameter sets ``(a, r)`` for the verification grids.
STANDARD_PARAMS = (
    ArithParams(1.0, 1.0),
    ArithParams(2.0, 2.0),
    ArithParams(0.5, 1.0),
    ArithParams(3.0, 2.0),
    ArithParams(2.0, 0.5),
    ArithParams(1.0, 3.0),
)

#: ``(a, a)`` for every distinct ``a`` of the standard sets, used by the a = r family.
AA_PARAMS = tuple(ArithParams(a, a) for a in sorted({p.a for p in STANDARD_PARAMS}))

UNIT_PARAMS = (ArithParams(1.0, 1.0),)


def rel(u, v):
    return abs(u - v) / max(abs(u), abs(v), 1.0)


def _none(p, s, ex):
    return ()


def _always(p, ex):
    return True


@dataclass(frozen=True)
class Identity:
    id: str
    pairs: Callable
    gamma_args: Callable = _none
    zero_args: Callable = _none
    applies: Callable = _always
    extras: tuple = ({},)
    family: str = "standard"
    needs: tuple = ()
    summary: str = ""

    def param_sets(self):
        return {"standard": STANDARD_PARAMS, "aa": AA_PARAMS, "unit": UNIT_PARAMS}[self.family]

    def applicable(self, p, extra):
        if self.family == "aa" and p.a != p.r:
            return False
        if self.family == "unit" and (p.a, p.r) != (1.0, 1.0):
            return False
        return bool(self.applies(p, extra))


def _prod(values):
    out = 1 + 0j
    for v in values:
        out *= v
    return out


# -- identities on the generic sequence machinery, specialized to progressions --


def _scale_pairs(p, s, ex):
    al = ex["alpha"]
    g_al = ag.gamma_ar(p, al).real
    return [(ag.gamma_ar(p, al * s), pow_real_base(g_al, s) * ag.gamma_ar(ArithParams(p.a / al, p.r / al), s))]


def _neg(p):
    return ArithParams(-p.a, -p.r)


def _square_pairs(p, s, ex):
    # Gamma_A(s) Gamma_{-A}(s) = mu^(s - s^2) Gamma_{-A^2}(s^2)
    mu = ag.mu_ar(p)
    lhs = ag.gamma_ar(p, s) * ag.gamma_ar(_neg(p), s)
    rhs = pow_real_base(mu, s - s * s) * ag.gamma_neg_sq_ar(p, s * s)
    return [(lhs, rhs)]


def _square_args(p, s, ex):
    b, u = p.ratio, s / p.r
    return (p.x(s), _neg(p).x(s), b + u, b - u)


# -- main properties -------------------------------------------------------------


def _recurrence_pairs(p, s, ex):
    al = ag.alpha_const(p)
    return [(ag.gamma_ar(p, s + p.r), al**p.r * (s + p.a) / p.r * ag.gamma_ar(p, s))]


def _complement_pairs(p, s, ex):
    lhs = ag.gamma_ar(p, s) * ag.gamma_ar(p, p.r - s)
    rhs = (1.0 - s / p.a) * ag.gamma_ar_at_r(p) / ag.sin_ar(p, s)
    return [(lhs, rhs)]


def _complement_args(p, s, ex):
    b, u = p.ratio, s / p.r
    return (p.x(s), p.x(p.r - s), b + u, b - u)


def _duplication_pairs(p, s, ex):
    r, a = p.r, p.a
    k2 = ag.duplication_constant(p)
    lhs = pow_real_base(2.0, 2.0 * s / r) * ag.gamma_ar(p, s) * ag.gamma_ar(p, s + r / 2.0)
    rhs = k2 * ag.gamma_ar(p, 2.0 * s + a)
    alt = (ag.gamma_ar(p, r / 2.0) / ag.gamma_ar(p, a)).real
    return [(lhs, rhs), (k2, alt)]


def _duplication_args(p, s, ex):
    return (p.x(s), p.x(s + p.r / 2.0), p.x(2.0 * s + p.a))


def _multiplication_pairs(p, s, ex):
    n = ex["n"]
    r, a = p.r, p.a
    kn = ag.multiplication_constant(p, n)
    lhs = pow_real_base(n, n * s / r) * _prod(ag.gamma_ar(p, s + k * r / n) for k in range(n))
    rhs = kn * ag.gamma_ar(p, n * s + (n - 1) * a)
    return [(lhs, rhs), (kn, ag.multiplication_constant_product(p, n))]


def _multiplication_args(p, s, ex):
    n = ex["n"]
    args = [p.x(s + k * p.r / n) for k in range(n)]
    args.append(p.x(n * s + (n - 1) * p.a))
    return args


def _triple_pairs(p, s, ex):
    r, a = p.r, p.a
    c = ag.triple_constant(p)
    lhs = ag.gamma_ar(p, 3.0 * s + 2.0 * a)
    rhs = c * pow_real_base(3.0, 3.0 * s / r) * _prod(ag.gamma_ar(p, s + k * r / 3.0) for k in range(3))
    alt = (ag.gamma_ar(p, 2.0 * a) / (ag.gamma_ar(p, r / 3.0) * ag.gamma_ar(p, 2.0 * r / 3.0))).real
    return [(lhs, rhs), (c, alt)]


def _triple_args(p, s, ex):
    return _multiplication_args(p, s, {"n": 3})


def _psi_recurrence_pairs(p, s, ex):
    return [(ag.psi_ar(p, s + p.r) - ag.psi_ar(p, s), 1.0 / (s + p.a))]


def _x_and_shift_r(p, s, ex):
    return (p.x(s), p.x(s + p.r))


# -- various properties ------------------------------------------------------------


def _split_pairs(p, s, ex):
    n = ex["n"]
    parts = (ag.gamma_ar(ArithParams(p.a + k * p.r, n * p.r), s) for k in range(n))
    return [(ag.gamma_ar(p, s), _prod(parts))]


def _split_args(p, s, ex):
    n = ex["n"]
    return [(s + p.a + k * p.r) / (n * p.r) for k in range(n)] + [p.x(s)]


def _beta_ratio_pairs(p, s, ex):
    n, k = ex["n"], ex["k"]
    direct = ag.gamma_ar(ArithParams(p.a, n * p.r), s) / ag.gamma_ar(ArithParams(p.a + k * p.r, n * p.r), s)
    first = ag.beta_ratio(p, n, k, s)
    return [(direct, first), (first, ag.beta_ratio_alt(p, n, k, s))]


def _beta_ratio_args(p, s, ex):
    nr = ex["n"] * p.r
    return ((s + p.a) / nr, (s + p.a + ex["k"] * p.r) / nr, s / nr)


def _shift_applies(p, ex):
    return p.r > 0 and p.a - ex["h"] > 0


def _shift_pairs(p, s, ex):
    h = ex["h"]
    c, q = ag.shift_constants(p, h)
    lhs = ag.gamma_ar(ArithParams(p.a - h, p.r), s + h)
    rhs = c * pow_real_base(q, s) * ag.gamma_ar(p, s)
    pairs = [(lhs, rhs)]
    # the second beta form of q degenerates when h/r is a non-negative integer
    if distance_to_gamma_pole(-h / p.r) > 1e-3:
        pairs.append((q, ag.shift_q_alt(p, h)))
    return pairs


def _rescale_pairs(p, s, ex):
    b = p.ratio
    ratio = ag.gamma_ar_at_r(p) / b
    rhs = pow_real_base(ratio, s / p.r) * gamma_fn(s / p.r + b) / math.gamma(b)
    return [(ag.gamma_ar(p, s), rhs)]


def _x_only(p, s, ex):
    return (p.x(s),)


def _reciprocal_sin_pairs(p, s, ex):
    return [(ag.sin_ar(p, s), 1.0 / (ag.gamma_ar(p, s) * ag.gamma_ar(p, -s)))]


def _x_pm(p, s, ex):
    return (p.x(s), p.x(-s))


# -- a = r family ------------------------------------------------------------------


def _aa_sin_pairs(p, s, ex):
    return [(ag.sin_ar(p, s), ag.sin_aa(p.a, s))]


def _aa_const_pairs(p, s, ex):
    return [(ag.gamma_ar_constant(p), ag.euler_constant_aa(p.a))]


def _aa_closed_pairs(p, s, ex):
    return [(ag.gamma_ar(p, s), ag.gamma_aa(p.a, s))]


def _aa_recurrence_pairs(p, s, ex):
    a = p.a
    g = math.gamma(1.0 + 1.0 / a)
    return [(ag.gamma_ar(p, s + a), g ** (-a) * (s + a) / a * ag.gamma_ar(p, s))]


def _aa_complement_pairs(p, s, ex):
    a = p.a
    g = math.gamma(1.0 + 1.0 / a)
    z = math.pi * s / a
    return [(ag.gamma_ar(p, s) * ag.gamma_ar(p, a - s), g ** (-a) * (1.0 - s / a) * z / cmath.sin(z))]


def _aa_complement_args(p, s, ex):
    return (p.x(s), p.x(p.a - s), 1.0 + s / p.a, 1.0 - s / p.a)


def _aa_crossscale_pairs(p, s, ex):
    a, b = p.a, ex["b"]
    g = ag.gamma_ar(p, a / b).real
    return [(ag.gamma_ar(p, a * s / b), pow_real_base(g, s) * ag.gamma_ar(ArithParams(b, b), s))]


def _aa_crossscale_args(p, s, ex):
    return (1.0 + s / ex["b"],)


def _aa_psi_pairs(p, s, ex):
    return [(ag.psi_ar(p, s), ag.psi_aa(p.a, s))]


# -- sine family --------------------------------------------------------------------


def _sin_args(p, s, ex):
    b, u = p.ratio, s / p.r
    return (b + u, b - u)


def _sin_scale_pairs(p, s, ex):
    lam = ex["lam"]
    base = ag.sin_ar(p, s)
    return [
        (base, ag.sin_ar(ArithParams(lam * p.a, lam * p.r), lam * s)),
        (base, ag.sin_ar(ArithParams(p.ratio, 1.0), s / p.r)),
    ]


def _sin_shift_r_pairs(p, s, ex):
    b, u = p.ratio, s / p.r
    return [(ag.sin_ar(p, s + p.r) / (u - b + 1.0), -ag.sin_ar(p, s) / (u + b))]


def _sin_shift_r_zeros(p, s, ex):
    b, u = p.ratio, s / p.r
    return (u - b + 1.0, u + b)


def _sin_shift_half_pairs(p, s, ex):
    b, u = p.ratio, s / p.r
    c = math.exp(2.0 * (math.lgamma(b) - math.lgamma(b + 0.5)))
    lhs = ag.sin_ar(p, s + p.r / 2.0) / (u - b + 0.5)
    rhs = -c * ag.sin_ar(ArithParams(p.a + p.r / 2.0, p.r), s)
    return [(lhs, rhs)]


def _sin_shift_half_zeros(p, s, ex):
    return (s / p.r - p.ratio + 0.5,)


def _sin_reflect_half_applies(p, ex):
    return p.r > 0 and p.a - p.r / 2.0 > 0


def _sin_reflect_half_pairs(p, s, ex):
    c = p.a - p.r / 2.0
    lhs = ag.sin_ar(ArithParams(c, p.r), s)
    rhs = (1.0 - s * s / (c * c)) * ag.sin_ar(ArithParams(p.a + p.r / 2.0, p.r), s)
    return [(lhs, rhs)]


def _sin_mult_pairs(p, s, ex):
    n = ex["n"]
    parts = (ag.sin_ar(ArithParams(p.a / n + k * p.r / n, p.r), s) for k in range(n))
    return [(ag.sin_ar(p, n * s), _prod(parts))]


def _sin_double_pairs(p, s, ex):
    rhs = ag.sin_ar(ArithParams(p.a / 2.0, p.r), s) * ag.sin_ar(ArithParams(p.a / 2.0 + p.r / 2.0, p.r), s)
    return [(ag.sin_ar(p, 2.0 * s), rhs)]


_S11 = ArithParams(1.0, 1.0)
_S_HALF = ArithParams(0.5, 1.0)


def _classical_pairs(p, s, ex):
    pi = math.pi
    s11 = ag.sin_ar(_S11, s)
    sh = ag.sin_ar(_S_HALF, s)
    s11_shift = ag.sin_ar(_S11, s + 0.5)
    return [
        (s11, cmath.sin(pi * s) / (pi * s)),
        (sh, cmath.cos(pi * s)),
        (sh, pi * (s + 0.5) * s11_shift),
        (ag.sin_ar(_S_HALF, s + 1.0), -sh),
        (ag.sin_ar(_S11, 2.0 * s), s11 * sh),
        (ag.sin_ar(_S11, 2.0 * s), pi * (s + 0.5) * s11 * s11_shift),
    ]


def _classical_zeros(p, s, ex):
    return (s,)


def _euler_pairs(p, s, ex):
    return [(ag.gamma_ar(_S11, s) / s, gamma_fn(s))]


def _euler_args(p, s, ex):
    return (s, 1.0 + s)


def _a_gt_one(p, ex):
    return p.r > 0 and p.a > 1.0


REGISTRY = {
    i.id: i
    for i in (
        Identity("scale_seq", _scale_pairs, lambda p, s, ex: (p.x(ex["alpha"] * s),),
                 extras=({"alpha": 0.5}, {"alpha": 2.0}, {"alpha": 3.0}), needs=("alpha",),
                 summary="Gamma_A(alpha s) = Gamma_A(alpha)^s Gamma_{A/alpha}(s)"),
        Identity("square_seq", _square_pairs, _square_args, applies=_a_gt_one,
                 summary="Gamma_A(s) Gamma_{-A}(s) = mu_A^(s-s^2) Gamma_{-A^2}(s^2)"),
        Identity("recurrence", _recurrence_pairs, _x_and_shift_r,
                 summary="Gamma(s+r) = alpha^r (s+a)/r Gamma(s)"),
        Identity("complement", _complement_pairs, _complement_args,
                 summary="Gamma(s) Gamma(r-s) = (1 - s/a) Gamma(r) / sin_{a,r}(s)"),
        Identity("duplication", _duplication_pairs, _duplication_args,
                 summary="2^(2s/r) Gamma(s) Gamma(s+r/2) = Gamma(r/2)/Gamma(a) Gamma(2s+a)"),
        Identity("multiplication", _multiplication_pairs, _multiplication_args,
                 extras=({"n": 2}, {"n": 3}, {"n": 4}), needs=("n",),
                 summary="n^(ns/r) prod_k Gamma(s+kr/n) = K_n Gamma(ns+(n-1)a)"),
        Identity("triple", _triple_pairs, _triple_args,
                 summary="Gamma(3s+2a) = C 3^(3s/r) Gamma(s) Gamma(s+r/3) Gamma(s+2r/3)"),
        Identity("psi_recurrence", _psi_recurrence_pairs, _x_and_shift_r,
                 summary="Psi(s+r) - Psi(s) = 1/(s+a)"),
        Identity("split", _split_pairs, _split_args, extras=({"n": 2}, {"n": 3}), needs=("n",),
                 summary="Gamma_{a,r} = prod_k Gamma_{a+kr,nr}"),
        Identity("beta_ratio_forms", _beta_ratio_pairs, _beta_ratio_args,
                 extras=({"n": 2, "k": 1}, {"n": 3, "k": 1}, {"n": 3, "k": 2}), needs=("n", "k"),
                 summary="Gamma_{a,nr}/Gamma_{a+kr,nr} through beta functions, both forms"),
        Identity("shift", _shift_pairs, _x_only, applies=_shift_applies,
                 extras=({"h": 0.25}, {"h": 0.5}), needs=("h",),
                 summary="Gamma_{a-h,r}(s+h) = C q^s Gamma_{a,r}(s)"),
        Identity("rescale", _rescale_pairs, _x_only,
                 summary="Gamma_{a,r}(s) = Gamma_{a,r}(r)^(s/r) (a/r)^(-s/r) Gamma(s/r+a/r)/Gamma(a/r)"),
        Identity("reciprocal_sin", _reciprocal_sin_pairs, _x_pm,
                 summary="sin_{a,r}(s) = 1/(Gamma(s) Gamma(-s))"),
        Identity("aa_sin", _aa_sin_pairs, family="aa", summary="sin_{a,a}(s) = a sin(pi s/a)/(pi s)"),
        Identity("aa_const", _aa_const_pairs, family="aa", summary="gamma_{a,a} = gamma/a + lnGamma(1+1/a)"),
        Identity("aa_closed", _aa_closed_pairs, _x_only, family="aa",
                 summary="Gamma_{a,a}(s) = Gamma(1+s/a)/Gamma(1+1/a)^s"),
        Identity("aa_recurrence", _aa_recurrence_pairs, _x_and_shift_r, family="aa",
                 summary="Gamma_{a,a}(s+a) = Gamma(1+1/a)^(-a) (s+a)/a Gamma_{a,a}(s)"),
        Identity("aa_complement", _aa_complement_pairs, _aa_complement_args, family="aa",
                 summary="Gamma_{a,a}(s) Gamma_{a,a}(a-s) = Gamma(1+1/a)^(-a) (1-s/a) (pi s/a)/sin(pi s/a)"),
        Identity("aa_crossscale", _aa_crossscale_pairs, _aa_crossscale_args, family="aa",
                 extras=({"b": 0.75}, {"b": 3.0}), needs=("b",),
                 summary="Gamma_{a,a}(a s/b) = Gamma_{a,a}(a/b)^s Gamma_{b,b}(s)"),
        Identity("aa_psi", _aa_psi_pairs, _x_only, family="aa",
                 summary="Psi_{a,a}(s) = Psi(1+s/a)/a - lnGamma(1+1/a)"),
        Identity("sin_scale", _sin_scale_pairs, extras=({"lam": 0.5}, {"lam": 2.5}), needs=("lam",),
                 summary="sin_{a,r}(s) = sin_{la,lr}(ls) = sin_{a/r,1}(s/r)"),
        Identity("sin_shift_r", _sin_shift_r_pairs, zero_args=_sin_shift_r_zeros,
                 summary="sin(s+r)/(s/r-a/r+1) = -sin(s)/(s/r+a/r)"),
        Identity("sin_shift_half", _sin_shift_half_pairs, zero_args=_sin_shift_half_zeros,
                 summary="sin(s+r/2)/(s/r-a/r+1/2) = -Gamma(a/r)^2/Gamma(a/r+1/2)^2 sin_{a+r/2,r}(s)"),
        Identity("sin_reflect_half", _sin_reflect_half_pairs, applies=_sin_reflect_half_applies,
                 summary="sin_{a-r/2,r}(s) = (1 - s^2/(a-r/2)^2) sin_{a+r/2,r}(s)"),
        Identity("sin_mult", _sin_mult_pairs, extras=({"n": 2}, {"n": 3}), needs=("n",),
                 summary="sin_{a,r}(ns) = prod_k sin_{a/n+kr/n,r}(s)"),
        Identity("sin_double", _sin_double_pairs,
                 summary="sin_{a,r}(2s) = sin_{a/2,r}(s) sin_{a/2+r/2,r}(s)"),
        Identity("classical_sin_cos", _classical_pairs, zero_args=_classical_zeros, family="unit",
                 summary="sin_{1,1}, sin_{1/2,1} against sin(pi s)/(pi s) and cos(pi s)"),
        Identity("euler_relation", _euler_pairs, _euler_args, family="unit",
                 summary="Gamma(s) = Gamma_{1,1}(s)/s"),
    )
}


def get_identity(identity_id):
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {identity_id!r}") from None


def singular_distance(identity, p, s, extra):
    """Smallest distance from any declared singular argument to its singular set."""
    d = math.inf
    for w in identity.gamma_args(p, s, extra):
        d = min(d, distance_to_gamma_pole(w))
    for w in identity.zero_args(p, s, extra):
        d = min(d, abs(complex(w)))
    return d


def identity_residual(identity_id, p, s, extra=None):
    """Relative residual of one registry identity at ``s``."""
    identity = get_identity(identity_id)
    extra = dict(extra or {})
    missing = [k for k in identity.needs if k not in extra]
    if missing:
        raise DomainError(f"identity {identity_id!r} needs extra parameters {missing}")
    if not identity.applicable(p, extra):
        raise DomainError(f"identity {identity_id!r} does not apply to a={p.a:g}, r={p.r:g}, {extra}")
    s = complex(s)
    if singular_distance(identity, p, s, extra) < POLE_THRESHOLD:
        raise PoleProximity(f"s = {s} is within {POLE_THRESHOLD:g} of a singular point of {identity_id}")
    return max(rel(complex(u), complex(v)) for u, v in identity.pairs(p, s, extra))
