"""``gfnu`` command line: spectrum, sweep, wavefunction and verify."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .errors import (
    DomainError,
    GFNUError,
    NoBoundStateError,
    NonNormalizableError,
    NoRealSolutionError,
)
from .gfd import FractionalOrder
from .oracle import fd_eigensolve
from .potentials import make_potential
from .spectrum import sample, solve_energy, state_wavefunction
from .verify import SCHEMA_VERSION, all_passed, run_verify

SPECTRUM_COLUMNS = ("family", "n", "l", "alpha", "beta", "E_root", "E_closed", "residual", "E_oracle", "flags")
WAVE_COLUMNS = ("r", "s", "psi")
INDEX_LIMIT = 50

DEFAULTS = {
    "potential": "HarmonicOscillator",
    "n_max": 0,
    "l_max": 0,
    "n": 0,
    "l": 0,
    "alpha": 1.0,
    "beta": 1.0,
    "alpha_range": None,
    "beta_range": None,
    "branch": None,
    "oracle": "on",
    "format": "csv",
    "out": None,
    "npts": 201,
}

_INT_KEYS = {"n_max", "l_max", "n", "l", "npts"}
_FLOAT_KEYS = {"alpha", "beta"}


class ConfigError(Exception):
    pass


# -- configuration -------------------------------------------------------------

def read_config(path: str) -> dict:
    """Flat ``key = value`` file; ``param.NAME`` keys set potential parameters."""
    out, params = {}, {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value, got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key.startswith("param."):
            params[key[6:]] = value
        elif key in DEFAULTS:
            out[key] = value
        else:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    out["params"] = params
    return out


def _coerce(key, value):
    if value is None:
        return None
    try:
        if key in _INT_KEYS:
            return int(value)
        if key in _FLOAT_KEYS:
            return float(value)
    except ValueError:
        raise ConfigError(f"{key} must be a number, got {value!r}") from None
    return value


def _parse_params(items) -> dict:
    params = {}
    for item in items:
        if "=" not in item:
            raise ConfigError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        params[k.strip()] = v.strip()
    return params


def _param_values(params: dict) -> dict:
    out = {}
    for k, v in params.items():
        try:
            out[k] = int(v) if k == "l" else float(v)
        except ValueError:
            raise ConfigError(f"parameter {k} must be a number, got {v!r}") from None
    return out


def parse_range(text: str, name: str) -> list:
    """``lo:hi:step`` inclusive of ``hi``; every value must lie in (0, 1]."""
    try:
        lo, hi, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise ConfigError(f"--{name}-range expects lo:hi:step, got {text!r}") from None
    if step <= 0 or hi < lo:
        raise ConfigError(f"--{name}-range needs lo <= hi and step > 0, got {text!r}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    values = [round(lo + i * step, 12) for i in range(count)]
    if any(not (0 < v <= 1) for v in values):
        raise ConfigError(f"--{name}-range values must lie in (0, 1], got {text!r}")
    return values


def resolve(args: argparse.Namespace) -> dict:
    """Merge defaults < config file < flags."""
    cfg = dict(DEFAULTS)
    params = {}
    if getattr(args, "config", None):
        filecfg = read_config(args.config)
        params.update(filecfg.pop("params"))
        cfg.update(filecfg)
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    params.update(_parse_params(getattr(args, "param", None) or []))
    cfg = {k: _coerce(k, v) for k, v in cfg.items()}
    cfg["params"] = _param_values(params)
    for key in ("n_max", "l_max", "n", "l"):
        if not 0 <= cfg[key] <= INDEX_LIMIT:
            raise ConfigError(f"{key.replace('_', '-')} must lie in [0, {INDEX_LIMIT}], got {cfg[key]}")
    for key in ("alpha", "beta"):
        if not 0 < cfg[key] <= 1:
            raise ConfigError(f"--{key} must lie in (0, 1], got {cfg[key]}")
    if cfg["oracle"] not in ("on", "off"):
        raise ConfigError(f"--oracle must be on or off, got {cfg['oracle']!r}")
    if cfg["format"] not in ("csv", "json"):
        raise ConfigError(f"--format must be csv or json, got {cfg['format']!r}")
    if cfg["npts"] < 2:
        raise ConfigError("--npts must be >= 2")
    return cfg


def build_spec(cfg: dict):
    params = dict(cfg["params"])
    try:
        return make_potential(cfg["potential"], **params)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None


# -- formatting ------------------------------------------------------------------

def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render(columns, rows, fmt_name: str, meta: dict | None = None) -> str:
    if fmt_name == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([fmt(row[c]) for c in columns])
        return buf.getvalue()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "columns": list(columns),
        "rows": [{c: _json_value(row[c]) for c in columns} for row in rows],
    }
    if meta:
        doc["meta"] = meta
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _failure_flag(exc: Exception) -> str:
    if isinstance(exc, NoBoundStateError):
        return "no-bound-state-bracketed"
    if isinstance(exc, NoRealSolutionError):
        return "no-real-solution"
    if isinstance(exc, NonNormalizableError):
        return "non-normalizable"
    return "domain-error"


# -- commands ------------------------------------------------------------------

def spectrum_rows(spec, cfg, a: float, b: float) -> list:
    order = FractionalOrder(a, b)
    rows = []
    oracle_levels = {}
    use_oracle = cfg["oracle"] == "on" and order.is_classical
    for l in range(cfg["l_max"] + 1):
        spec_l = spec.with_l(l)
        if use_oracle:
            try:
                oracle_levels[l] = fd_eigensolve(spec_l, l, cfg["n_max"] + 1).energies
            except GFNUError:
                oracle_levels[l] = []
        for n in range(cfg["n_max"] + 1):
            row = {"family": spec.family, "n": n, "l": l, "alpha": a, "beta": b,
                   "E_root": None, "E_closed": None, "residual": None, "E_oracle": None}
            flags = []
            if l > 0 and not spec.l_dependent:
                flags.append("l-independent-map")
            try:
                res = solve_energy(spec_l, n, order=order, branch=cfg["branch"])
                row.update(E_root=res.energy, E_closed=res.closed_form_energy, residual=res.residual)
                flags.extend(res.flags)
            except GFNUError as exc:
                flags.append(_failure_flag(exc))
                try:
                    row["E_closed"] = spec_l.closed_form(n, order)
                except GFNUError:
                    pass
            if use_oracle:
                levels = oracle_levels.get(l, [])
                if n < len(levels):
                    row["E_oracle"] = levels[n]
                else:
                    flags.append("oracle-no-level")
            row["flags"] = ";".join(flags)
            rows.append(row)
    return rows


def cmd_spectrum(cfg) -> str:
    spec = build_spec(cfg)
    rows = spectrum_rows(spec, cfg, cfg["alpha"], cfg["beta"])
    rows.sort(key=lambda r: (r["alpha"], r["beta"], r["n"], r["l"]))
    return render(SPECTRUM_COLUMNS, rows, cfg["format"])


def cmd_sweep(cfg) -> str:
    spec = build_spec(cfg)
    a_values = parse_range(cfg["alpha_range"], "alpha") if cfg["alpha_range"] else [cfg["alpha"]]
    b_values = parse_range(cfg["beta_range"], "beta") if cfg["beta_range"] else [cfg["beta"]]
    rows = []
    for a in a_values:
        for b in b_values:
            rows.extend(spectrum_rows(spec, cfg, a, b))
    rows.sort(key=lambda r: (r["alpha"], r["beta"], r["n"], r["l"]))
    return render(SPECTRUM_COLUMNS, rows, cfg["format"])


def cmd_wavefunction(cfg) -> str:
    spec = build_spec(cfg).with_l(cfg["l"])
    order = FractionalOrder(cfg["alpha"], cfg["beta"])
    state = state_wavefunction(spec, cfg["n"], order, branch=cfg["branch"])
    r, s, psi = sample(state, cfg["npts"])
    rows = [{"r": float(x), "s": float(y), "psi": float(z)} for x, y, z in zip(r, s, psi)]
    meta = {"family": spec.family, "n": cfg["n"], "l": cfg["l"], "alpha": order.a,
            "beta": order.b, "energy": state.energy, "measure": "r^2 dr" if spec.radial_kind == "R" else "dr"}
    return render(WAVE_COLUMNS, rows, cfg["format"], meta)


def _clean(obj):
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if hasattr(obj, "item"):
        return _clean(obj.item())
    return obj


def cmd_verify(cfg, perturb_c9=None):
    report = run_verify(oracle=cfg["oracle"] == "on", perturb_c9=perturb_c9)
    text = json.dumps(_clean(report), sort_keys=True, indent=2) + "\n"
    return text, all_passed(report)


# -- entry point -----------------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    p.add_argument("--potential", help="potential family (e.g. HarmonicOscillator, Morse, ho, drm)")
    p.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="potential parameter, repeatable (e.g. --param D0=8)")
    p.add_argument("--alpha", type=float, help="fractional order a in (0, 1] (default 1)")
    p.add_argument("--beta", type=float, help="fractional order b in (0, 1] (default 1)")
    p.add_argument("--branch", choices=("neg", "pos"), help="K-branch (default: family default)")
    p.add_argument("--oracle", choices=("on", "off"), help="finite-difference oracle (default on)")
    p.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    p.add_argument("--config", metavar="PATH", help="flat key = value config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gfnu", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="energy table for n <= n-max, l <= l-max")
    _common(sp)
    sp.add_argument("--n-max", dest="n_max", type=int)
    sp.add_argument("--l-max", dest="l_max", type=int)

    sw = sub.add_parser("sweep", help="energy table over a grid of fractional orders")
    _common(sw)
    sw.add_argument("--n-max", dest="n_max", type=int)
    sw.add_argument("--l-max", dest="l_max", type=int)
    sw.add_argument("--alpha-range", dest="alpha_range", metavar="LO:HI:STEP")
    sw.add_argument("--beta-range", dest="beta_range", metavar="LO:HI:STEP")

    wf = sub.add_parser("wavefunction", help="normalized (r, s, psi) samples of one state")
    _common(wf)
    wf.add_argument("--n", type=int)
    wf.add_argument("--l", type=int)
    wf.add_argument("--npts", type=int, help="number of samples (default 201)")

    vf = sub.add_parser("verify", help="run the invariant suite and print a JSON report")
    _common(vf)
    vf.add_argument("--perturb-c9", dest="perturb_c9", type=float, help=argparse.SUPPRESS)
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve(args)
        if args.command == "verify":
            text, ok = cmd_verify(cfg, args.perturb_c9)
            _emit(text, cfg["out"])
            return 0 if ok else 1
        handler = {"spectrum": cmd_spectrum, "sweep": cmd_sweep, "wavefunction": cmd_wavefunction}
        _emit(handler[args.command](cfg), cfg["out"])
        return 0
    except (ConfigError, DomainError, GFNUError) as exc:
        print(f"gfnu: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
