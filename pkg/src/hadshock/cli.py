"""Command-line surface.

Subcommands: ``material check``/``material list``, ``shock``,
``classify``, ``sweep``, ``grid`` and ``verify``.  Structured reports
are JSON (17 significant digits), grids and sweeps are CSV (9
significant digits); every number printed comes from a library call.
Exit codes: 0 ok, 2 configuration error, 3 domain error, 4 verification
failure.  ``HADSHOCK_THREADS`` overrides the worker count used to fan
out grid and sweep evaluations.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import classifier, lopatinskii, materials, oracle, shock
from .errors import ConfigError, HadshockError

__all__ = ["main"]


# ---------------------------------------------------------------------------
# formatting

def _fmt_json_value(x):
    if isinstance(x, (bool, np.bool_)) or x is None or isinstance(x, (str, int)):
        return json.dumps(bool(x) if isinstance(x, np.bool_) else x)
    if isinstance(x, float):
        if not np.isfinite(x):
            return json.dumps(None)
        return f"{x + 0.0:.17g}"
    if isinstance(x, complex):
        return _fmt_json_value({"re": x.real, "im": x.imag})
    if isinstance(x, np.ndarray):
        return _fmt_json_value(x.tolist())
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_fmt_json_value(v) for v in x) + "]"
    if isinstance(x, dict):
        items = (f"{json.dumps(str(k))}: {_fmt_json_value(v)}" for k, v in x.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(x, (np.floating,)):
        return _fmt_json_value(float(x))
    if isinstance(x, (np.integer,)):
        return json.dumps(int(x))
    raise TypeError(f"cannot serialize {type(x)!r}")


def to_json(obj) -> str:
    return _fmt_json_value(obj)


def _csv_cell(x) -> str:
    if isinstance(x, float) or isinstance(x, np.floating):
        return "" if not np.isfinite(x) else f"{float(x):.9g}"
    return "" if x is None else str(x)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _thread_count() -> int:
    env = os.environ.get("HADSHOCK_THREADS", "").strip()
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def _parallel_map(fn, items):
    workers = _thread_count()
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# configuration parsing

def _material_from_spec(spec: dict) -> materials.MaterialModel:
    spec = dict(spec)
    name = spec.pop("name", None)
    if name is None:
        raise ConfigError("material config needs a 'name'")
    params = dict(spec.pop("params", {}) or {})
    if name == "custom":
        form = params.pop("form", None)
        if form is None:
            raise ConfigError("custom material config needs params.form naming a built-in h-form")
        name = form
    for key in ("dimension", "dim", "d"):
        if key in spec and spec[key] is not None:
            params.setdefault("d", int(spec[key]))
    for key in ("mu", "kappa", "b", "cbar", "c1"):
        if key in spec and spec[key] is not None:
            params.setdefault(key, spec[key])
    return materials.catalog(name, params)


def _material_from_args(args) -> materials.MaterialModel:
    if getattr(args, "config", None):
        with open(args.config) as fh:
            cfg = json.load(fh)
        spec = cfg.get("material", cfg)
        return _material_from_spec(spec)
    name = getattr(args, "material", None) or getattr(args, "name", None)
    if not name:
        raise ConfigError("provide --config or a material name")
    spec = {
        "name": name,
        "dimension": args.dim,
        "mu": args.mu,
        "kappa": args.kappa,
        "b": getattr(args, "b", None),
        "cbar": getattr(args, "cbar", None),
        "c1": getattr(args, "c1", None),
    }
    return _material_from_spec({k: v for k, v in spec.items() if v is not None})


def _parse_matrix(text: str, d: int) -> np.ndarray:
    if text.strip().lower() == "identity":
        return np.eye(d)
    vals = [float(v) for v in text.replace(";", ",").split(",") if v.strip()]
    if len(vals) != d * d:
        raise ConfigError(f"--Uplus needs {d * d} entries (row-major), got {len(vals)}")
    return np.array(vals).reshape(d, d)


def _parse_vector(text, d: int) -> np.ndarray:
    if text is None or (isinstance(text, str) and text.strip().lower() in ("", "zero", "zeros")):
        return np.zeros(d)
    vals = [float(v) for v in str(text).split(",") if v.strip()]
    if len(vals) != d:
        raise ConfigError(f"vector needs {d} entries, got {len(vals)}")
    return np.array(vals)


def _scenario_from_args(args):
    """Material, base state and intensity from --config or inline flags."""
    if getattr(args, "config", None):
        with open(args.config) as fh:
            cfg = json.load(fh)
        m = _material_from_spec(cfg.get("material", cfg))
        d = m.dimension or 3
        U = np.asarray(cfg.get("U_plus", np.eye(d).tolist()), dtype=float)
        v = np.asarray(cfg.get("v_plus", np.zeros(U.shape[0]).tolist()), dtype=float)
        alpha = cfg.get("alpha", getattr(args, "alpha", None))
        if alpha is None:
            raise ConfigError("scenario needs alpha")
        return m, shock.ElasticState(U, v), float(alpha)
    m = _material_from_args(args)
    d = m.dimension or args.dim or 3
    U = _parse_matrix(args.Uplus or "identity", d)
    v = _parse_vector(getattr(args, "vplus", None), d)
    alpha = getattr(args, "alpha", None)
    if alpha is None:
        raise ConfigError("scenario needs --alpha")
    return m, shock.ElasticState(U, v), float(alpha)


def _report_from_shock(sf: shock.ShockFront) -> dict:
    lax = shock.lax_check(sf)
    return {
        "material": {
            "name": sf.material.name,
            "mu": sf.material.mu,
            "kappa": sf.material.declared_bulk,
            "dimension": sf.dim,
        },
        "alpha": sf.alpha,
        "alpha_max": sf.alpha_max,
        "speed": sf.speed,
        "J_plus": sf.Jplus,
        "J_minus": sf.Jminus,
        "U_plus": sf.plus.U,
        "U_minus": sf.minus.U,
        "v_plus": sf.plus.v,
        "v_minus": sf.minus.v,
        "V": sf.V,
        "theta": sf.theta,
        "Theta": sf.Theta,
        "M": sf.M,
        "kappa2_plus": sf.kappa2_plus,
        "kappa2_minus": sf.kappa2_minus,
        "rho": sf.rho,
        "tau": sf.tau,
        "lax": {"ok": lax.ok, "margins": list(lax.margins)},
    }


def _verdict_report(sf, verdict, *_unused) -> dict:
    lax = shock.lax_check(sf)
    rep = {
        "kind": verdict.kind,
        "rho": verdict.rho,
        "min_criterion": verdict.min_criterion,
    }
    if verdict.witness is not None:
        rep["witness"] = {
            "xi_t": verdict.witness.xi_t,
            "t_root": verdict.witness.t_root,
            "criterion_value": verdict.witness.criterion_value,
        }
    if verdict.marginal:
        rep["marginal"] = True
    if verdict.diagnostic:
        rep["diagnostic"] = verdict.diagnostic
    rep["diagnostics"] = {"lax_margins": list(lax.margins), "alpha_max": sf.alpha_max}
    return rep


# ---------------------------------------------------------------------------
# subcommands

def _cmd_material(args) -> int:
    if args.material_cmd == "list":
        _emit(to_json({"models": list(materials.CATALOG_NAMES)}), args.out)
        return 0
    m = _material_from_args(args)
    d = m.dimension or args.dim or 3
    rep = materials.check_hypotheses(m, d)
    payload = {
        "name": m.name,
        "dimension": d,
        "mu": m.mu,
        "declared_bulk": m.declared_bulk,
        "h2_positive": rep.h2_positive,
        "h3_negative": rep.h3_negative,
        "free_stress": rep.free_stress,
        "bulk_relation": rep.bulk_relation,
        "poisson": rep.poisson,
        "lame_first": rep.lame_first,
        "effective_bulk": rep.effective_bulk,
        "h_nonincreasing": rep.h_nonincreasing,
        "fd_consistent": rep.fd_consistent,
        "fd_max_rel_err": rep.fd_max_rel_err,
        "all_ok": rep.all_ok,
    }
    _emit(to_json(payload), args.out)
    return 0 if rep.all_ok else 4


def _cmd_shock(args) -> int:
    m, state, alpha = _scenario_from_args(args)
    sf = shock.build(m, state, alpha)
    _emit(to_json(_report_from_shock(sf)), args.out)
    return 0


def _cmd_classify(args) -> int:
    m, state, alpha = _scenario_from_args(args)
    sf = shock.build(m, state, alpha)
    verdict = classifier.classify(sf, sphere_resolution=args.sphere_resolution)
    _emit(to_json(_verdict_report(sf, verdict)), args.out)
    return 0


def _cmd_sweep(args) -> int:
    m, state, _ = _scenario_from_args_sweep(args)
    lo, hi = _parse_range(args.alpha_range)
    alphas = np.linspace(lo, hi, args.steps)

    def row(alpha):
        try:
            sf = shock.build(m, state, float(alpha))
            verdict = classifier.classify(sf, sphere_resolution=args.sphere_resolution)
            return (float(alpha), sf.rho, verdict.min_criterion, verdict.kind)
        except HadshockError as exc:
            return (float(alpha), None, None, f"error:{type(exc).__name__}")

    rows = _parallel_map(row, alphas)
    if args.format == "json":
        payload = [
            {"alpha": a, "rho": r, "min_criterion": c, "verdict": v} for a, r, c, v in rows
        ]
        _emit(to_json(payload), args.out)
    else:
        lines = ["alpha,rho,min_criterion,verdict"]
        lines += [",".join(_csv_cell(x) for x in r) for r in rows]
        _emit("\n".join(lines), args.out)
    return 0


def _scenario_from_args_sweep(args):
    if getattr(args, "config", None):
        m, state, _ = _scenario_from_args(args)
        return m, state, None
    m = _material_from_args(args)
    d = m.dimension or args.dim or 3
    U = _parse_matrix(args.Uplus or "identity", d)
    v = _parse_vector(getattr(args, "vplus", None), d)
    return m, shock.ElasticState(U, v), None


def _parse_range(text: str):
    vals = [float(v) for v in text.split(",") if v.strip()]
    if len(vals) != 2:
        raise ConfigError(f"range needs two comma-separated numbers, got {text!r}")
    return vals[0], vals[1]


def _restricted_xi(sf, gamma: complex, direction: np.ndarray):
    """Transverse vector on the remapped hemisphere for a given gamma.

    Solves |lambda(gamma, m*dir)|^2 + m^2 = 1 for the magnitude m >= 0;
    returns None when gamma lies outside the hemisphere.
    """
    k2, s = sf.kappa2_plus, sf.speed
    eta_dir = float(sf.theta[0, 1:] @ direction)
    w = np.sqrt((k2 - s * s) / k2) * gamma
    a = s * sf.h2_plus * eta_dir / k2
    # m^2 (1 + a^2) - 2 a Im(w) m + |w|^2 - 1 = 0
    A = 1.0 + a * a
    B = -2.0 * a * w.imag
    C = abs(w) ** 2 - 1.0
    disc = B * B - 4.0 * A * C
    if disc < 0:
        return None
    for mroot in ((-B + np.sqrt(disc)) / (2 * A), (-B - np.sqrt(disc)) / (2 * A)):
        if mroot >= 0:
            return mroot * direction
    return None


def _cmd_grid(args) -> int:
    m, state, alpha = _scenario_from_args(args)
    sf = shock.build(m, state, alpha)
    re_lo, re_hi = _parse_range(args.grid_re)
    im_lo, im_hi = _parse_range(args.grid_im)
    n_re, n_im = (int(v) for v in args.grid_n.split(","))
    if n_re < 2 or n_im < 2:
        raise ConfigError("grid needs at least 2 nodes per axis")
    xi = _parse_vector(args.xi, sf.dim - 1) if args.xi else np.eye(sf.dim - 1)[0]
    res = np.linspace(re_lo, re_hi, n_re)
    ims = np.linspace(im_lo, im_hi, n_im)

    def eval_row(im):
        gam = res + 1j * im
        if args.var == "gamma":
            if args.restrict_gamma_tilde:
                direction = xi / np.linalg.norm(xi)
                vals = []
                for g in gam:
                    xt = _restricted_xi(sf, complex(g), direction)
                    if xt is None:
                        vals.append(complex(np.nan, np.nan))
                    else:
                        vals.append(
                            lopatinskii.delta_v2(sf, lopatinskii.TransformedFrequency(g, xt))
                        )
                return np.array(vals)
            return lopatinskii.delta_v2_values(sf, gam, xi)
        vals = []
        for g in gam:
            fp = lopatinskii.FrequencyPoint(complex(g), xi)
            vals.append(lopatinskii.delta_v1(sf, fp))
        return np.array(vals)

    rows = _parallel_map(eval_row, ims)
    records = []
    for im, vals in zip(ims, rows):
        for re, v in zip(res, vals):
            records.append(
                (float(re), float(im), float(v.real), float(v.imag), float(abs(v)),
                 float(np.angle(v)))
            )
    if args.format == "json":
        payload = [
            {"re": r, "im": i, "delta_re": dr, "delta_im": di, "delta_abs": da, "delta_arg": dg}
            for r, i, dr, di, da, dg in records
        ]
        _emit(to_json(payload), args.out)
    else:
        lines = ["re,im,delta_re,delta_im,delta_abs,delta_arg"]
        lines += [",".join(_csv_cell(x) for x in rec) for rec in records]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_verify(args) -> int:
    dims = tuple(int(v) for v in args.dims.split(","))
    report = oracle.verify_suite(seed=args.seed, scenarios=args.scenarios, dims=dims)
    _emit(to_json(report), args.out)
    return 0 if report["ok"] else 4


# ---------------------------------------------------------------------------
# argument wiring

def _add_material_flags(p, with_name_flag=False):
    if with_name_flag:
        p.add_argument("--name", help="catalog model name")
    else:
        p.add_argument("--material", help="catalog model name")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--dim", type=int, default=None, help="space dimension d >= 2")
    p.add_argument("--mu", type=float, default=None, help="shear modulus")
    p.add_argument("--kappa", type=float, default=None, help="bulk modulus")
    p.add_argument("--b", type=float, default=None, help="empirical coefficient b")
    p.add_argument("--cbar", type=float, default=None, help="empirical coefficient c-bar")
    p.add_argument("--c1", type=float, default=None, help="foam exponent coefficient c1")


def _add_state_flags(p):
    p.add_argument("--Uplus", default="identity", help="base deformation gradient, row-major or 'identity'")
    p.add_argument("--vplus", default=None, help="base velocity, comma list or 'zero'")


def _add_common_out(p, default_format="json"):
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("json", "csv"), default=default_format)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hadshock", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    mat = sub.add_parser("material", help="material inspection")
    msub = mat.add_subparsers(dest="material_cmd", required=True)
    mchk = msub.add_parser("check", help="verify the material hypotheses")
    _add_material_flags(mchk, with_name_flag=True)
    _add_common_out(mchk)
    mlist = msub.add_parser("list", help="list catalog models")
    _add_common_out(mlist)

    shk = sub.add_parser("shock", help="build a Lax front and report it")
    _add_material_flags(shk)
    _add_state_flags(shk)
    shk.add_argument("--alpha", type=float, default=None, help="shock intensity")
    _add_common_out(shk)

    cls = sub.add_parser("classify", help="uniform/weak stability verdict")
    _add_material_flags(cls)
    _add_state_flags(cls)
    cls.add_argument("--alpha", type=float, default=None)
    cls.add_argument("--sphere-resolution", type=int, default=128)
    _add_common_out(cls)

    swp = sub.add_parser("sweep", help="verdict sweep over an intensity range")
    _add_material_flags(swp)
    _add_state_flags(swp)
    swp.add_argument("--alpha-range", required=True, help="lo,hi")
    swp.add_argument("--steps", type=int, default=100)
    swp.add_argument("--sphere-resolution", type=int, default=128)
    _add_common_out(swp, default_format="csv")

    grd = sub.add_parser("grid", help="complex-plane grid of the stability function")
    _add_material_flags(grd)
    _add_state_flags(grd)
    grd.add_argument("--alpha", type=float, default=None)
    grd.add_argument("--var", choices=("gamma", "lambda"), default="gamma")
    grd.add_argument("--grid-re", default="0,2", help="lo,hi")
    grd.add_argument("--grid-im", default="-2,2", help="lo,hi")
    grd.add_argument("--grid-n", default="100,100", help="n_re,n_im")
    grd.add_argument("--xi", default=None, help="transverse frequency direction")
    grd.add_argument("--restrict-gamma-tilde", action="store_true",
                     help="eliminate |xi|^2 through the remapped hemisphere constraint")
    _add_common_out(grd, default_format="csv")

    ver = sub.add_parser("verify", help="run the oracle identity suite")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--scenarios", type=int, default=50)
    ver.add_argument("--dims", default="2,3,4")
    _add_common_out(ver)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "material": _cmd_material,
        "shock": _cmd_shock,
        "classify": _cmd_classify,
        "sweep": _cmd_sweep,
        "grid": _cmd_grid,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.cmd](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (json.JSONDecodeError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except HadshockError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
