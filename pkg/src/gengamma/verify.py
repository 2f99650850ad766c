"""Grid construction, residual aggregation and reporting for the identity registry."""
import json
import math
from dataclasses import dataclass, field

from .argamma import ArithParams
from .errors import EmptyGrid, GenGammaError, PoleProximity, UnknownIdentity
from .identities import REGISTRY, get_identity, identity_residual, singular_distance

DEFAULT_THRESHOLD = 1e-8

# offsets keep every default point off the integers and half-integers
DEFAULT_RE = tuple(round(-3.7 + 0.5 * k, 10) for k in range(17))
DEFAULT_IM = (0.0, 0.7, -0.7, 2.3, -2.3)

RECORD_FIELDS = (
    "identity", "a", "r", "extra", "points_tested", "max_rel_residual",
    "threshold", "pass", "worst_point_re", "worst_point_im",
)


@dataclass(frozen=True)
class GridSpec:
    re_points: tuple = DEFAULT_RE
    im_points: tuple = DEFAULT_IM
    pole_margin: float = 0.05

    def __post_init__(self):
        object.__setattr__(self, "re_points", tuple(float(x) for x in self.re_points))
        object.__setattr__(self, "im_points", tuple(float(y) for y in self.im_points))
        if not self.pole_margin >= 0:
            raise ValueError(f"pole_margin must be non-negative, got {self.pole_margin!r}")

    def points(self):
        """All candidate points, real part major."""
        return [complex(x, y) for x in self.re_points for y in self.im_points]


@dataclass
class IdentityReport:
    identity: str
    params: ArithParams | None
    extra: dict
    points_tested: int
    max_rel_residual: float
    threshold: float
    passed: bool
    worst_point: complex | None
    excluded: int = 0
    error: str | None = None

    def record(self):
        def num(v):
            return None if v is None or not math.isfinite(v) else float(v)

        return {
            "identity": self.identity,
            "a": None if self.params is None else self.params.a,
            "r": None if self.params is None else self.params.r,
            "extra": dict(self.extra),
            "points_tested": self.points_tested,
            "max_rel_residual": num(self.max_rel_residual),
            "threshold": self.threshold,
            "pass": self.passed,
            "worst_point_re": None if self.worst_point is None else self.worst_point.real,
            "worst_point_im": None if self.worst_point is None else self.worst_point.imag,
        }


def build_grid(spec, identity, p, extra=None):
    """Points of ``spec`` farther than ``spec.pole_margin`` from every singular argument."""
    ident = get_identity(identity) if isinstance(identity, str) else identity
    extra = dict(extra or {})
    pts = [s for s in spec.points() if singular_distance(ident, p, s, extra) > spec.pole_margin]
    if not pts:
        raise EmptyGrid(f"every grid point is excluded for {ident.id} at a={p.a:g}, r={p.r:g}")
    return pts


def run_identity(identity, p, extra=None, grid=GridSpec(), threshold=DEFAULT_THRESHOLD):
    """Maximum residual of one identity over the grid.

    Points that still hit a pole after the pre-scan are skipped and counted in
    ``excluded``. A NaN residual counts as infinite, so it always fails.
    """
    extra = dict(extra or {})
    worst, worst_pt, tested, skipped = -1.0, None, 0, 0
    for s in build_grid(grid, identity, p, extra):
        try:
            res = identity_residual(identity, p, s, extra)
        except PoleProximity:
            skipped += 1
            continue
        if math.isnan(res):
            res = math.inf
        tested += 1
        if res > worst:
            worst, worst_pt = res, s
    if tested == 0:
        raise EmptyGrid(f"no point of the grid could be evaluated for {identity}")
    return IdentityReport(identity, p, extra, tested, worst, threshold, worst <= threshold, worst_pt, skipped)


@dataclass(frozen=True)
class SuiteConfig:
    """Which identities to run and where.

    ``identities=None`` means the whole registry. When ``params`` or ``extra``
    is given it replaces each identity's default parameter sets or extras, and
    a combination the identity does not apply to becomes a failed report
    instead of being skipped.
    """

    identities: tuple | None = None
    params: tuple | None = None
    extra: dict | None = None
    grid: GridSpec = field(default_factory=GridSpec)
    threshold: float = DEFAULT_THRESHOLD


@dataclass
class SuiteResult:
    reports: list
    passed: bool

    def document(self):
        return {"pass": self.passed, "records": [r.record() for r in self.reports]}

    def to_json(self, indent=2):
        return json.dumps(self.document(), indent=indent, allow_nan=False)


def _failed(identity, p, extra, threshold, exc):
    return IdentityReport(identity, p, dict(extra or {}), 0, math.inf, threshold, False, None,
                          error=f"{type(exc).__name__}: {exc}")


def _cases(config):
    explicit = config.params is not None or config.extra is not None
    for iid in config.identities or tuple(REGISTRY):
        if iid not in REGISTRY:
            yield iid, None, {}, UnknownIdentity(f"unknown identity {iid!r}")
            continue
        ident = REGISTRY[iid]
        params = config.params if config.params is not None else ident.param_sets()
        extras = (config.extra,) if config.extra is not None else ident.extras
        for p in params:
            for ex in extras:
                if missing := [k for k in ident.needs if k not in ex]:
                    yield iid, p, ex, UnknownIdentity(f"{iid} needs extra parameters {missing}")
                elif ident.applicable(p, ex):
                    yield iid, p, ex, None
                elif explicit:
                    yield iid, p, ex, ValueError(f"{iid} does not apply to a={p.a:g}, r={p.r:g}, {ex}")


def run_all(config=SuiteConfig()):
    """Run every configured (identity, parameters, extra) case in declared order."""
    reports = []
    for iid, p, ex, err in _cases(config):
        if err is not None:
            reports.append(_failed(iid, p, ex, config.threshold, err))
            continue
        try:
            reports.append(run_identity(iid, p, ex, config.grid, config.threshold))
        except (GenGammaError, ArithmeticError, ValueError) as exc:
            reports.append(_failed(iid, p, ex, config.threshold, exc))
    return SuiteResult(reports, bool(reports) and all(r.passed for r in reports))
