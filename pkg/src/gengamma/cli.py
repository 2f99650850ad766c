"""Command-line interface: ``gengamma {eval,constants,verify,table}``.

Options may be given as flags (``--a 1``) or as bare ``key=value`` tokens
(``a=1``); ``s=0.4+0.5j`` sets both parts of ``s``. A JSON file passed with
``--config`` supplies defaults that explicit options override.

Exit status: 0 success, 1 verification failure, 2 usage, domain or pole error.
"""
import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import asdict, dataclass, fields

from . import argamma as ag
from . import seqgamma as sq
from .argamma import ArithParams
from .errors import GenGammaError
from .identities import REGISTRY
from .verify import RECORD_FIELDS, GridSpec, SuiteConfig, run_all

FUNCTIONS = ("gamma_ar", "gamma_ar_product", "sin_ar", "psi_ar", "gamma_seq_arith")
FORMATS = ("plain", "json", "csv")
EXTRA_KEYS = ("n", "k", "h", "lambda", "b", "alpha")


@dataclass(frozen=True)
class CliConfig:
    command: str
    function: str | None = None
    a: float | None = None
    r: float | None = None
    s_re: float = 0.0
    s_im: float = 0.0
    tol: float = 1e-10
    max_terms: int = 10_000_000
    n: int | None = None
    k: int | None = None
    h: float | None = None
    lam: float | None = None
    b: float | None = None
    alpha: float | None = None
    start: float = 0.0
    stop: float = 0.0
    step: float = 1.0
    suite: str = "all"
    threshold: float = 1e-8
    pole_margin: float = 0.05
    format: str | None = None

    def normalized(self):
        """Plain dict of every field; ``CliConfig(**cfg.normalized()) == cfg``."""
        return asdict(self)

    def params(self):
        """``(a, r)``, each defaulting to 1."""
        return ArithParams(1.0 if self.a is None else self.a, 1.0 if self.r is None else self.r)

    @property
    def s(self):
        return complex(self.s_re, self.s_im)

    def extra(self):
        raw = {"n": self.n, "k": self.k, "h": self.h, "lam": self.lam, "b": self.b, "alpha": self.alpha}
        return {key: v for key, v in raw.items() if v is not None}


class UsageError(Exception):
    pass


_INT_FIELDS = {"n", "k", "max_terms"}
_STR_FIELDS = {"command", "function", "suite", "format"}


def _coerce(name, value):
    if value is None or name in _STR_FIELDS:
        return value
    if name in _INT_FIELDS:
        if isinstance(value, float) and not value.is_integer():
            raise UsageError(f"{name} must be an integer, got {value!r}")
        return int(value)
    return float(value)


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with default option values")
    common.add_argument("--a", type=float)
    common.add_argument("--r", type=float)
    common.add_argument("--format", choices=FORMATS + ("structured",))

    pt = argparse.ArgumentParser(add_help=False)
    pt.add_argument("--s", type=complex, help="complex point, e.g. 0.4+0.5j")
    pt.add_argument("--s-re", dest="s_re", type=float)
    pt.add_argument("--s-im", dest="s_im", type=float)
    pt.add_argument("--tol", type=float, help="tolerance for product evaluations")
    pt.add_argument("--max-terms", dest="max_terms", type=int)

    ex = argparse.ArgumentParser(add_help=False)
    for key in EXTRA_KEYS:
        ex.add_argument(f"--{key}", dest="lam" if key == "lambda" else key,
                        type=int if key in ("n", "k") else float)

    root = argparse.ArgumentParser(prog="gengamma", description="Generalized gamma functions Gamma_{a,r}(s).")
    sub = root.add_subparsers(dest="command", required=True)
    p_eval = sub.add_parser("eval", parents=[common, pt], help="evaluate a function at one point")
    p_eval.add_argument("function", nargs="?", choices=FUNCTIONS)
    sub.add_parser("constants", parents=[common, ex], help="print the constants of (a, r)")
    p_ver = sub.add_parser("verify", parents=[common, ex], help="run identity checks")
    p_ver.add_argument("--suite", help="'all' or comma-separated identity ids")
    p_ver.add_argument("--threshold", type=float)
    p_ver.add_argument("--pole-margin", dest="pole_margin", type=float)
    p_tab = sub.add_parser("table", parents=[common, pt], help="tabulate a function on a real range")
    p_tab.add_argument("function", nargs="?", choices=FUNCTIONS)
    p_tab.add_argument("--start", type=float)
    p_tab.add_argument("--stop", type=float)
    p_tab.add_argument("--step", type=float)
    return root


_KV = re.compile(r"^([A-Za-z][A-Za-z0-9_-]*)=(.*)$")


def _expand_kv(argv):
    out = []
    for tok in argv:
        m = _KV.match(tok)
        if m:
            # joined form so values such as "-1" are not read as options
            out.append(f"--{m.group(1).replace('_', '-')}={m.group(2)}")
        else:
            out.append(tok)
    return out


def _load_config_file(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError(f"config {path} must hold a JSON object")
    data = {k.replace("-", "_"): v for k, v in data.items()}
    if "lambda" in data:
        data["lam"] = data.pop("lambda")
    return data


def parse_config(argv):
    """Parse arguments (plus optional config file) into a :class:`CliConfig`."""
    ns = vars(_parser().parse_args(_expand_kv(argv)))
    merged = _load_config_file(ns["config"]) if ns.get("config") else {}
    s = ns.pop("s", None)
    if s is not None:
        ns["s_re"], ns["s_im"] = s.real, s.imag
    merged.update({k: v for k, v in ns.items() if v is not None and k != "config"})
    if merged.get("format") == "structured":
        merged["format"] = "json"
    known = {f.name for f in fields(CliConfig)}
    unknown = sorted(set(merged) - known)
    if unknown:
        raise UsageError(f"unknown option(s) in config: {', '.join(unknown)}")
    cfg = CliConfig(**{k: _coerce(k, v) for k, v in merged.items()})
    if cfg.format is not None and cfg.format not in FORMATS:
        raise UsageError(f"unknown format {cfg.format!r}")
    if cfg.command in ("eval", "table") and cfg.function not in FUNCTIONS:
        raise UsageError(f"function must be one of {', '.join(FUNCTIONS)}")
    return cfg


# -- formatting -----------------------------------------------------------------------


def _plain(x):
    txt = f"{x:.10g}"
    if re.fullmatch(r"-?\d+", txt):
        txt += ".0"
    return txt


def _plain_complex(z):
    sign = "-" if z.imag < 0 or (z.imag == 0 and math.copysign(1.0, z.imag) < 0) else "+"
    return f"{_plain(z.real)} {sign} {_plain(abs(z.imag))}i"


def _full(x):
    return f"{x:.17g}"


def _json_num(x):
    # repr round-trips exactly and never needs more than 17 significant digits
    return float(x) if math.isfinite(x) else None


def _emit_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- commands -------------------------------------------------------------------------


def _policy(cfg):
    return sq.TruncationPolicy(tol=cfg.tol, max_terms=cfg.max_terms)


def _evaluate(cfg, p, s):
    """Value of ``cfg.function`` at ``s``; product paths also return the EvalResult."""
    f = cfg.function
    if f == "gamma_ar":
        return ag.gamma_ar(p, s), None
    if f == "sin_ar":
        return ag.sin_ar(p, s), None
    if f == "psi_ar":
        return ag.psi_ar(p, s), None
    if f == "gamma_ar_product":
        res = ag.gamma_ar_product(p, s, _policy(cfg))
    else:
        res = sq.gamma_seq(p.sequence(), s, _policy(cfg))
    return complex(res.value), res


def cmd_eval(cfg):
    p = cfg.params()
    value, res = _evaluate(cfg, p, cfg.s)
    fmt = cfg.format or "plain"
    rec = {"function": cfg.function, "a": p.a, "r": p.r, "s_re": cfg.s_re, "s_im": cfg.s_im,
           "re": value.real, "im": value.imag}
    if res is not None:
        rec.update(abs_error_bound=float(res.abs_error_bound), terms_used=int(res.terms_used),
                   status=res.status.value)
    if fmt == "json":
        return json.dumps({k: _json_num(v) if isinstance(v, float) else v for k, v in rec.items()}) + "\n", 0
    if fmt == "csv":
        return _emit_csv(list(rec), [[_full(v) if isinstance(v, float) else v for v in rec.values()]]), 0
    lines = [f"{cfg.function}(a={_plain(p.a)}, r={_plain(p.r)}, s={_plain_complex(cfg.s)}) = {_plain_complex(value)}"]
    if res is not None:
        lines += [f"abs_error_bound = {_plain(res.abs_error_bound)}", f"terms_used = {res.terms_used}",
                  f"status = {res.status.value}"]
    return "\n".join(lines) + "\n", 0


def cmd_constants(cfg):
    p = cfg.params()
    out = {
        "gamma_ar_constant": ag.gamma_ar_constant(p),
        "alpha": ag.alpha_const(p),
        "gamma_ar_at_r": ag.gamma_ar_at_r(p),
    }
    if p.r > 0 and p.a > 1:
        out["mu"] = ag.mu_ar(p)
    out["duplication_constant"] = ag.duplication_constant(p)
    if cfg.n is not None:
        out["multiplication_constant"] = ag.multiplication_constant(p, cfg.n)
    if cfg.h is not None:
        out["shift_C"], out["shift_q"] = ag.shift_constants(p, cfg.h)
    fmt = cfg.format or "plain"
    if fmt == "json":
        return json.dumps({"a": p.a, "r": p.r, **{k: _json_num(v) for k, v in out.items()}}) + "\n", 0
    if fmt == "csv":
        return _emit_csv(["name", "value"], [[k, _full(v)] for k, v in out.items()]), 0
    return "".join(f"{k} = {_plain(v)}\n" for k, v in out.items()), 0


def _suite_ids(cfg):
    if cfg.suite == "all":
        return None
    ids = tuple(x.strip() for x in cfg.suite.split(",") if x.strip())
    bad = [x for x in ids if x not in REGISTRY]
    if bad or not ids:
        raise UsageError(f"unknown identity suite {cfg.suite!r}")
    return ids


def cmd_verify(cfg):
    ids = _suite_ids(cfg)
    params = None if cfg.a is None and cfg.r is None else (cfg.params(),)
    config = SuiteConfig(identities=ids, params=params, extra=cfg.extra() or None,
                         grid=GridSpec(pole_margin=cfg.pole_margin), threshold=cfg.threshold)
    result = run_all(config)
    fmt = cfg.format or "json"
    if fmt == "json":
        text = result.to_json() + "\n"
    elif fmt == "csv":
        rows = []
        for rec in (r.record() for r in result.reports):
            rec["extra"] = json.dumps(rec["extra"], sort_keys=True)
            rows.append(["" if rec[f] is None else _full(rec[f]) if isinstance(rec[f], float) else rec[f]
                         for f in RECORD_FIELDS])
        text = _emit_csv(RECORD_FIELDS, rows)
    else:
        lines = []
        for r in result.reports:
            tag = "PASS" if r.passed else "FAIL"
            where = "" if r.params is None else f" a={_plain(r.params.a)} r={_plain(r.params.r)}"
            extra = "".join(f" {k}={v}" for k, v in r.extra.items())
            detail = r.error or f"max_rel_residual={r.max_rel_residual:.3e} points={r.points_tested}"
            lines.append(f"{tag} {r.identity}{where}{extra} {detail}")
        lines.append(f"overall: {'PASS' if result.passed else 'FAIL'} ({len(result.reports)} reports)")
        text = "\n".join(lines) + "\n"
    return text, 0 if result.passed else 1


def table_points(start, stop, step):
    if not step > 0:
        raise UsageError(f"step must be positive, got {step!r}")
    if stop < start:
        return []
    count = math.floor((stop - start) / step * (1 + 1e-12) + 1e-9) + 1
    return [start + i * step for i in range(count)]


def cmd_table(cfg):
    p = cfg.params()
    rows, omitted = [], 0
    for x in table_points(cfg.start, cfg.stop, cfg.step):
        try:
            v, _ = _evaluate(cfg, p, complex(x, cfg.s_im))
        except (GenGammaError, ValueError, ArithmeticError):
            omitted += 1
            continue
        rows.append((x, v))
    fmt = cfg.format or "csv"
    if fmt == "json":
        doc = {"rows": [{"s": x, "re": _json_num(v.real), "im": _json_num(v.imag)} for x, v in rows],
               "omitted": omitted}
        return json.dumps(doc) + "\n", 0
    if fmt == "plain":
        text = "".join(f"{_plain(x)} {_plain_complex(v)}\n" for x, v in rows)
    else:
        text = _emit_csv(["s", "re", "im"], [[repr(float(x)), _full(v.real), _full(v.imag)] for x, v in rows])
    if omitted:
        text += f"# omitted {omitted}\n"
    return text, 0


COMMANDS = {"eval": cmd_eval, "constants": cmd_constants, "verify": cmd_verify, "table": cmd_table}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
        text, code = COMMANDS[cfg.command](cfg)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    except (UsageError, GenGammaError, ValueError, ArithmeticError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"gengamma: error: {msg}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code
