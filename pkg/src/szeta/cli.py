"""Command-line surface.

Subcommands
-----------
extremal  evaluate kernels, Fourier transforms and L1 gaps
bound     envelope constants, single point or CSV sweep over alpha
verify    explicit-formula / representation / asymptotic / envelope runs
selftest  the full acceptance suite

Exit codes: 0 success (verify: within band), 1 verification outside its
band or selftest failure, 2 usage error, 3 parameter-region violation,
4 missing zeros file.

Output is deterministic: JSON fields appear in fixed insertion order
and every float is rendered with 15 significant digits in scientific
notation, so identical flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import bounds as bd
from . import explicit_formula as ef
from . import selftest as stst
from . import zeta_core as zc
from .numkit import DomainError
from .odd_extremal import OddExtremalPair
from .poisson_extremal import PoissonExtremalPair

EXIT_OK = 0
EXIT_BAND = 1
EXIT_USAGE = 2
EXIT_REGION = 3
EXIT_ZEROS = 4


@dataclass
class Config:
    """Resolved runtime configuration."""

    zeros_path: str | None = None
    mangoldt_limit: int = 2
    tol: float = 1e-5
    slack: float = 10.0
    output: str = "json"

    def __post_init__(self):
        if self.mangoldt_limit < 2:
            raise DomainError("mangoldt_limit must be >= 2")
        if self.tol <= 0:
            raise DomainError("tol must be > 0")


# ---------------------------------------------------------------------------
# deterministic serialization
# ---------------------------------------------------------------------------

def _jfloat(v: float) -> str:
    if v != v:
        return '"nan"'
    if v in (math.inf, -math.inf):
        return f'"{v}"'
    return f"{v:.14e}"


def dumps(obj, _ind: str = "") -> str:
    """JSON with fixed field order and %.14e float formatting."""
    pad = _ind + "  "
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = (f'{pad}"{k}": {dumps(v, pad)}' for k, v in obj.items())
        return "{\n" + ",\n".join(items) + "\n" + _ind + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = (f"{pad}{dumps(v, pad)}" for v in obj)
        return "[\n" + ",\n".join(items) + "\n" + _ind + "]"
    if isinstance(obj, bool) or obj is None:
        return {True: "true", False: "false", None: "null"}[obj]
    if isinstance(obj, float):
        return _jfloat(obj)
    if isinstance(obj, int):
        return str(obj)
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _emit(obj: dict, cfg: Config) -> None:
    if cfg.output == "json":
        print(dumps(obj))
    else:
        for k, v in obj.items():
            print(f"{k}: {_jfloat(v) if isinstance(v, float) else v}")


# ---------------------------------------------------------------------------
# configuration / zero-table resolution
# ---------------------------------------------------------------------------

def _read_config_file(path: str) -> dict:
    out = {}
    try:
        with open(path) as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line and "=" in line:
                    k, v = line.split("=", 1)
                    out[k.strip()] = v.strip()
    except OSError:
        pass
    return out


def build_config(args) -> Config:
    filecfg = _read_config_file(getattr(args, "config", None)
                                or "szeta.cfg")
    zeros = getattr(args, "zeros", None) or filecfg.get("zeros_path")
    return Config(
        zeros_path=zeros,
        mangoldt_limit=int(filecfg.get("mangoldt_limit", 2)),
        tol=float(getattr(args, "tol", None)
                  or filecfg.get("tol", 1e-5)),
        slack=float(getattr(args, "slack", None)
                    or filecfg.get("slack", 10.0)),
        output=getattr(args, "output", None)
        or filecfg.get("output", "json"),
    )


def _load_zeros(cfg: Config) -> zc.ZeroTable:
    if cfg.zeros_path is None:
        return stst._default_zeros()
    try:
        return zc.load_zeros(cfg.zeros_path)
    except OSError:
        print(f"error: zeros file not found: {cfg.zeros_path}",
              file=sys.stderr)
        sys.exit(EXIT_ZEROS)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_extremal(args) -> int:
    cfg = build_config(args)
    if args.family == "poisson":
        pair = PoissonExtremalPair(beta=args.beta, delta=args.delta)
        params = {"family": "poisson", "beta": args.beta,
                  "delta": args.delta}
        ev = lambda s, x: float(pair.m_real(s, x))
        ft = pair.ft_m
        l1 = pair.l1_gap
        target = pair.h
    else:
        pair = OddExtremalPair(m=args.m, alpha=args.alpha,
                               delta=args.delta)
        params = {"family": "odd", "m": args.m, "alpha": args.alpha,
                  "delta": args.delta}
        ev = lambda s, x: float(pair.g_real(s, x))
        ft = pair.ft_g
        l1 = pair.l1_gap_odd
        target = pair.f_odd
    out = dict(params)
    if args.eval is not None:
        out["x"] = args.eval
        out["target"] = float(target(args.eval))
        out["majorant"] = ev("+", args.eval)
        out["minorant"] = ev("-", args.eval)
        out["formula"] = "interpolation_series" \
            if args.family == "odd" else "closed_form"
    if args.ft is not None:
        out["xi"] = args.ft
        out["ft_majorant"] = ft("+", args.ft)
        out["ft_minorant"] = ft("-", args.ft)
        out["formula"] = "frequency_series" \
            if args.family == "odd" else "closed_form"
    if args.l1:
        out["l1_majorant"] = l1("+")
        out["l1_minorant"] = l1("-")
        out["formula"] = "closed_sigma_integral" \
            if args.family == "odd" else "closed_form"
    _emit(out, cfg)
    return EXIT_OK


_CSV_COLS = ("n", "alpha", "t", "lower_main", "upper_main", "ell",
             "err_scale", "observed", "flag")


def _envelope_row(n: int, alpha: float, t: float, c: float) -> dict:
    env = bd.envelope(n, alpha, t, c)
    return {"n": n, "alpha": alpha, "t": t,
            "lower_main": env.lower_main, "upper_main": env.upper_main,
            "ell": env.ell, "err_scale": env.err_scale,
            "observed": "", "flag": ""}


def cmd_bound(args) -> int:
    cfg = build_config(args)
    if not args.sweep and args.alpha is None:
        print("error: either --alpha or --sweep is required",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.sweep:
            name, lo, hi, step = args.sweep.split(":")
            if name != "alpha":
                raise DomainError("only alpha sweeps are supported")
            lo, hi, step = float(lo), float(hi), float(step)
            alphas = []
            a = lo
            while a <= hi + 1e-12:
                alphas.append(round(a, 12))
                a += step
            with ThreadPoolExecutor(max_workers=4) as pool:
                rows = list(pool.map(
                    lambda a: _envelope_row(args.n, a, args.t, args.c),
                    alphas))
            buf = io.StringIO()
            w = csv.DictWriter(buf, fieldnames=_CSV_COLS,
                               lineterminator="\n")
            w.writeheader()
            for row in rows:
                w.writerow({k: (_jfloat(v).strip('"')
                                if isinstance(v, float) else v)
                            for k, v in row.items()})
            sys.stdout.write(buf.getvalue())
        else:
            env = bd.envelope(args.n, args.alpha, args.t, args.c)
            _emit(env.to_dict(), cfg)
    except DomainError as exc:
        print(f"region violation: {exc}", file=sys.stderr)
        return EXIT_REGION
    return EXIT_OK


def _verify_gw(args, cfg: Config) -> int:
    zeros = _load_zeros(cfg)
    if args.kernel == "poisson":
        kernel = PoissonExtremalPair(beta=args.beta, delta=args.delta)
    else:
        kernel = OddExtremalPair(m=args.m, alpha=args.alpha,
                                 delta=args.delta)
    rep = ef.gw_evaluate(kernel, args.sign, args.t, args.delta, zeros)
    band = rep.zero_tail_bound + rep.prime_tail_bound + cfg.tol
    out = rep.to_dict()
    out["band"] = band
    out["within_band"] = abs(rep.residual) <= band
    _emit(out, cfg)
    return EXIT_OK if out["within_band"] else EXIT_BAND


def _verify_rep(args, cfg: Config) -> int:
    zeros = _load_zeros(cfg)
    rep = ef.rep_sum(args.n, args.alpha, args.t, zeros)
    direct = zc.s_n_direct(args.n, args.alpha, args.t, zeros)
    band = (0.05 + rep.est_error) if args.n == -1 else 5.0
    out = {"n": args.n, "alpha": args.alpha, "t": args.t,
           "zero_sum": rep.value, "direct": direct.value,
           "difference": rep.value - direct.value, "band": band,
           "within_band": abs(rep.value - direct.value) <= band}
    _emit(out, cfg)
    return EXIT_OK if out["within_band"] else EXIT_BAND


def _verify_appendix(args, cfg: Config) -> int:
    params = {"x": args.x}
    for key in ("alpha", "m", "k", "beta"):
        v = getattr(args, key, None)
        if v is not None:
            params[key] = v
    chk = ef.appendix_asymptotic(args.id, params)
    band = stst._A_BANDS.get((args.id, args.m or 0),
                             stst._B_BANDS.get((args.id, args.m or 0),
                                               cfg.slack))
    out = chk.to_dict()
    out["band"] = band
    out["within_band"] = chk.deviation_multiple <= band
    _emit(out, cfg)
    return EXIT_OK if out["within_band"] else EXIT_BAND


def _verify_envelope(args, cfg: Config) -> int:
    zeros = _load_zeros(cfg) if args.with_observed else None
    try:
        chk = bd.check_envelope(args.n, args.alpha, args.t, args.c,
                                zeros=zeros, slack=cfg.slack)
    except DomainError as exc:
        print(f"region violation: {exc}", file=sys.stderr)
        return EXIT_REGION
    _emit(chk.to_dict(), cfg)
    return EXIT_OK  # report-only by contract


def cmd_verify(args) -> int:
    cfg = build_config(args)
    try:
        return {"gw": _verify_gw, "rep": _verify_rep,
                "appendix": _verify_appendix,
                "envelope": _verify_envelope}[args.what](args, cfg)
    except DomainError as exc:
        print(f"region violation: {exc}", file=sys.stderr)
        return EXIT_REGION


def cmd_selftest(args) -> int:
    cfg = build_config(args)
    zeros_path = cfg.zeros_path
    try:
        results = stst.run_all(zeros_path)
    except (OSError, zc.ZeroTableError) as exc:
        print(f"error: cannot load zeros: {exc}", file=sys.stderr)
        return EXIT_BAND
    if args.json:
        print(dumps({"checks": [r.to_dict() for r in results],
                     "passed": all(r.passed for r in results)}))
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"{mark} {r.name} ({r.runtime:.1f}s)")
            if not r.passed:
                for f in r.details.get("failures", []):
                    print(f"     {f}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_BAND


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _common(p):
    p.add_argument("--config", help="key=value configuration file")
    p.add_argument("--output", choices=("json", "csv", "text"))
    p.add_argument("--zeros", help="path to a zero-ordinate table")
    p.add_argument("--tol", type=float)
    p.add_argument("--slack", type=float)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="szeta",
        description="Extremal bandlimited kernels, explicit-formula "
                    "verification, and bound envelopes.")
    sub = ap.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("extremal", help="evaluate extremal pairs")
    exsub = ex.add_subparsers(dest="family", required=True)
    for fam in ("poisson", "odd"):
        p = exsub.add_parser(fam)
        if fam == "poisson":
            p.add_argument("--beta", type=float, required=True)
        else:
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--delta", type=float, required=True)
        p.add_argument("--eval", type=float)
        p.add_argument("--ft", type=float)
        p.add_argument("--l1", action="store_true")
        _common(p)
        p.set_defaults(func=cmd_extremal)

    b = sub.add_parser("bound", help="bound envelopes")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--alpha", type=float)
    b.add_argument("--t", type=float, required=True)
    b.add_argument("--c", type=float, default=1.0)
    b.add_argument("--sweep", help="alpha:lo:hi:step")
    _common(b)
    b.set_defaults(func=cmd_bound)

    v = sub.add_parser("verify", help="run a verification")
    vsub = v.add_subparsers(dest="what", required=True)
    g = vsub.add_parser("gw")
    g.add_argument("--kernel", choices=("poisson", "odd"),
                   required=True)
    g.add_argument("--beta", type=float, default=0.25)
    g.add_argument("--m", type=int, default=0)
    g.add_argument("--alpha", type=float, default=0.75)
    g.add_argument("--delta", type=float, required=True)
    g.add_argument("--sign", choices=("+", "-"), default="+")
    g.add_argument("--t", type=float, required=True)
    _common(g)
    r = vsub.add_parser("rep")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--alpha", type=float, required=True)
    r.add_argument("--t", type=float, required=True)
    _common(r)
    a = vsub.add_parser("appendix")
    a.add_argument("--id", required=True,
                   choices=("A1", "A2", "A3", "A4", "A5",
                            "B1", "B2", "B3", "B4"))
    a.add_argument("--x", type=float, required=True)
    a.add_argument("--alpha", type=float)
    a.add_argument("--m", type=int)
    a.add_argument("--k", type=int)
    a.add_argument("--beta", type=float)
    _common(a)
    e = vsub.add_parser("envelope")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--alpha", type=float, required=True)
    e.add_argument("--t", type=float, required=True)
    e.add_argument("--c", type=float, default=1.0)
    e.add_argument("--with-observed", action="store_true")
    _common(e)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("selftest", help="run the acceptance suite")
    s.add_argument("--json", action="store_true")
    _common(s)
    s.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
