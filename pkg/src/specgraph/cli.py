"""Command line front end.

Subcommands: simulate, estimate, select, score, bench.  Each run resolves
its settings from built-in defaults, then an optional --config JSON file,
then explicit flags, writes the resolved settings (with a content hash)
next to its outputs, and produces only deterministic artifacts, so a rerun
with the same inputs reproduces every file byte for byte.

Exit codes: 0 success, 2 usage error, 3 unusable input data, 4 numerical
failure during estimation.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .admm import SolverOptions, select_edges, solve
from .bench import (
    KNOWN_METHODS,
    TrialConfig,
    default_window,
    gen_var_clusters,
    run_trials,
    score as score_edges,
    simulate as simulate_model,
    true_ipsd,
)
from .errors import (
    DomainError,
    IngestError,
    InsufficientSamplesError,
    InvalidDataError,
    InvalidWindowError,
    ShapeError,
    SpecGraphError,
)
from .penalty import KIND_SGL, KIND_SGLSP, PenaltyConfig, PrecisionSet
from .select import BicRecord, bic_score, bic_search_grid, lambda_range, search
from .spectral import SpectralStats, TimeSeriesMatrix, build_frequency_plan, dft, smoothed_psd

PACKAGE = "specgraph"


# ---------------------------------------------------------------- file I/O


def _fmt(x) -> str:
    return repr(float(x))


def _write_rows(path: Path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def write_real_matrix(path: Path, mat: np.ndarray, header):
    _write_rows(path, header, ([_fmt(v) for v in row] for row in np.atleast_2d(mat)))


def read_real_matrix(path: Path):
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None:
                raise IngestError(f"{path}: empty file")
            rows = []
            for ln, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != len(header):
                    raise IngestError(f"{path}:{ln}: expected {len(header)} fields")
                try:
                    rows.append([float(v) for v in row])
                except ValueError as exc:
                    raise IngestError(f"{path}:{ln}: non-numeric value") from exc
    except OSError as exc:
        raise IngestError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise IngestError(f"{path}: no data rows")
    return header, np.asarray(rows)


def write_complex_matrix(path: Path, mat: np.ndarray):
    """Complex p x q matrix as 2q columns: c0_re, c0_im, c1_re, ..."""
    p, q = mat.shape
    header = []
    for j in range(q):
        header += [f"c{j}_re", f"c{j}_im"]
    rows = []
    for i in range(p):
        row = []
        for j in range(q):
            row += [_fmt(mat[i, j].real), _fmt(mat[i, j].imag)]
        rows.append(row)
    _write_rows(path, header, rows)


def read_complex_matrix(path: Path) -> np.ndarray:
    _, data = read_real_matrix(path)
    if data.shape[1] % 2:
        raise IngestError(f"{path}: odd column count for a complex matrix")
    return data[:, 0::2] + 1j * data[:, 1::2]


def write_edges(path: Path, edges, weights=None):
    rows = []
    for idx, (i, j) in enumerate(edges):
        wt = _fmt(weights[idx]) if weights is not None else ""
        rows.append([i, j, wt])
    _write_rows(path, ["i", "j", "weight"], rows)


def read_edges(path: Path) -> set:
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None:
                raise IngestError(f"{path}: empty file")
            try:
                ci, cj = header.index("i"), header.index("j")
            except ValueError as exc:
                raise IngestError(f"{path}: header must contain columns 'i' and 'j'") from exc
            edges = set()
            for ln, row in enumerate(reader, start=2):
                if not row:
                    continue
                try:
                    i, j = int(row[ci]), int(row[cj])
                except (ValueError, IndexError) as exc:
                    raise IngestError(f"{path}:{ln}: bad edge row") from exc
                if i != j:
                    edges.add((min(i, j), max(i, j)))
    except OSError as exc:
        raise IngestError(f"cannot read {path}: {exc}") from exc
    return edges


def write_json(path: Path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def config_hash(cfg: dict) -> str:
    canon = json.dumps(cfg, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


def provenance(cfg: dict) -> dict:
    return {
        "config_sha256": config_hash(cfg),
        "package": PACKAGE,
        "version": __version__,
        "numpy": np.__version__,
    }


# ------------------------------------------------------------- ingestion


def load_series(path, center: bool, log_returns: bool):
    """Read a CSV (rows = time, columns = variables) into a series.

    Applies the log-return transform and/or centering when asked, then
    truncates an odd-length series to even length with a warning.
    """
    names, data = read_real_matrix(Path(path))
    if log_returns:
        if np.any(data <= 0):
            raise IngestError("log-return transform needs strictly positive values")
        data = np.diff(np.log(data), axis=0)
    if data.shape[0] < 2:
        raise IngestError("need at least 2 time samples after transforms")
    if data.shape[0] % 2:
        print(
            f"note: dropping last sample to make the length even "
            f"({data.shape[0]} -> {data.shape[0] - 1})",
            file=sys.stderr,
        )
        data = data[:-1]
    try:
        x = TimeSeriesMatrix(data.T)
    except InvalidDataError as exc:
        raise IngestError(str(exc)) from exc
    if x.p > x.n:
        print(
            f"warning: more variables ({x.p}) than samples ({x.n}); "
            "estimates will be heavily regularized",
            file=sys.stderr,
        )
    if center:
        x = x.centered()
    return names, x


# ------------------------------------------------- config resolution


def resolve(defaults: dict, args, preset: dict | None = None) -> dict:
    """defaults < preset < --config file < explicit flags."""
    cfg = dict(defaults)
    if preset:
        cfg.update({k: v for k, v in preset.items() if k in cfg})
    config_path = getattr(args, "config", None)
    if config_path:
        try:
            with open(config_path) as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise IngestError(f"cannot read config {config_path}: {exc}") from exc
        unknown = set(loaded) - set(cfg) - {"config_sha256"}
        if unknown:
            raise IngestError(f"config {config_path}: unknown keys {sorted(unknown)}")
        cfg.update({k: v for k, v in loaded.items() if k in cfg})
    for key in cfg:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    return cfg


def _solver_options(cfg: dict) -> SolverOptions:
    return SolverOptions(
        rho0=cfg["rho0"],
        eps_abs=cfg["eps_abs"],
        eps_rel=cfg["eps_rel"],
        max_inner=cfg["max_inner"],
        outer_iters=cfg["outer_iters"],
        outer_tol=cfg["outer_tol"],
    )


def _parse_alphas(value) -> tuple:
    if isinstance(value, (list, tuple)):
        return tuple(float(v) for v in value)
    try:
        return tuple(float(v) for v in str(value).split(",") if v != "")
    except ValueError as exc:
        raise IngestError(f"bad alpha list {value!r}") from exc


def _outdir(cfg: dict) -> Path:
    out = Path(cfg["out"])
    out.mkdir(parents=True, exist_ok=True)
    return out


# ------------------------------------------------------------- simulate


SIM_DEFAULTS = {
    "out": None,
    "p": 16,
    "cluster_size": 8,
    "order": 3,
    "density": 0.1,
    "coef_range": 0.8,
    "stability_cap": 0.95,
    "n": 1024,
    "burn_in": 100,
    "seed": 0,
    "K": None,
    "M": None,
}


def cmd_simulate(args) -> int:
    cfg = resolve(SIM_DEFAULTS, args)
    out = _outdir(cfg)
    if cfg["K"] is None or cfg["M"] is None:
        K, M = default_window(cfg["n"])
        cfg["K"] = cfg["K"] or K
        cfg["M"] = cfg["M"] or M
    plan = build_frequency_plan(cfg["n"], cfg["K"], M_override=cfg["M"])
    try:
        model = gen_var_clusters(
            cfg["p"],
            cluster_size=cfg["cluster_size"],
            order=cfg["order"],
            density=cfg["density"],
            coef_range=cfg["coef_range"],
            stability_cap=cfg["stability_cap"],
            seed=cfg["seed"],
        )
    except (ShapeError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    truth = true_ipsd(model, plan.center_freqs)
    x = simulate_model(model, cfg["n"], burn_in=cfg["burn_in"], seed=cfg["seed"] + 1)
    names = [f"x{i + 1}" for i in range(cfg["p"])]
    write_real_matrix(out / "data.csv", x.values.T, names)
    write_edges(out / "truth_edges.csv", sorted(truth.edges))
    for k in range(plan.M):
        write_complex_matrix(out / f"omega0_{k + 1:02d}.csv", truth.ipsd[k])
    write_json(out / "config.json", {**cfg, "config_sha256": config_hash(cfg)})
    print(f"wrote {cfg['n']} samples of p={cfg['p']} with {truth.edge_count} true edges to {out}")
    return 0


# ------------------------------------------------------------- estimate


EST_DEFAULTS = {
    "input": None,
    "out": None,
    "center": False,
    "log_returns": False,
    "K": 15,
    "M": None,
    "method": KIND_SGLSP,
    "lam": None,
    "alpha": None,
    "bic": False,
    "epsilon": 1e-4,
    "tol": 0.0,
    "n_lambda": 10,
    "alphas": "0,0.05,0.1,0.15,0.2,0.25,0.3",
    "rho0": 2.0,
    "eps_abs": 1e-4,
    "eps_rel": 1e-4,
    "max_inner": 500,
    "outer_iters": 5,
    "outer_tol": 1e-3,
}


def _estimate_stats(cfg, x: TimeSeriesMatrix):
    if cfg["method"] == "iid":
        cov = x.values @ x.values.T / x.n
        cov = (cov + cov.T) / 2.0
        return SpectralStats(p=x.p, M=1, matrices=cov[None].astype(complex), plan=None)
    plan = build_frequency_plan(x.n, cfg["K"], M_override=cfg["M"])
    return smoothed_psd(dft(x), plan)


def _iid_bic_choose(s, n, opts, epsilon, n_lambda):
    """Level-only BIC sweep for the time-domain baseline.

    The baseline keeps the split pinned at 1 (entrywise penalty only, with
    reweighting), so only stage 1 runs.  The covariance block stands in
    for n/2 Fourier measurements, giving the classic ln(n) complexity
    weight.
    """
    lam_lo, lam_hi = lambda_range(
        s, kind=KIND_SGLSP, opts=opts, alpha0=1.0, epsilon=epsilon
    )
    grid = bic_search_grid(lam_lo, lam_hi, n_lambda=n_lambda, alpha0=1.0)
    k_eff = n // 2
    records = []
    best = None
    state = None
    for lam in grid.lambda_values:
        pc = PenaltyConfig(kind=KIND_SGLSP, lam=lam, alpha=1.0, epsilon=epsilon)
        phi, w, rep = solve(s, pc, opts, warm=state)
        state = rep.final_state
        rec = BicRecord(
            lam=lam,
            alpha=1.0,
            bic=bic_score(phi, s, k_eff, 1, sparse=w),
            edge_count=select_edges(w).edge_count,
            converged=rep.converged,
            stage=1,
        )
        records.append(rec)
        if best is None or rec.bic < best.bic:
            best = rec
    chosen = PenaltyConfig(kind=KIND_SGLSP, lam=best.lam, alpha=1.0, epsilon=epsilon)
    return chosen, records


def cmd_estimate(args) -> int:
    cfg = resolve(EST_DEFAULTS, args)
    if cfg["input"] is None or cfg["out"] is None:
        raise IngestError("estimate needs --input and --out")
    if cfg["method"] not in (KIND_SGLSP, KIND_SGL, "iid"):
        print(f"error: unknown method {cfg['method']!r}", file=sys.stderr)
        return 2
    fixed = cfg["lam"] is not None
    if fixed == bool(cfg["bic"]):
        print("error: give either --lam (with --alpha) or --bic", file=sys.stderr)
        return 2
    out = _outdir(cfg)
    names, x = load_series(cfg["input"], cfg["center"], cfg["log_returns"])
    opts = _solver_options(cfg)
    s = _estimate_stats(cfg, x)
    kind = KIND_SGL if cfg["method"] == KIND_SGL else KIND_SGLSP
    records = None
    if fixed:
        alpha = 1.0 if cfg["method"] == "iid" else (
            cfg["alpha"] if cfg["alpha"] is not None else 0.1
        )
        chosen = PenaltyConfig(kind=kind, lam=cfg["lam"], alpha=alpha, epsilon=cfg["epsilon"])
    elif cfg["method"] == "iid":
        chosen, records = _iid_bic_choose(s, x.n, opts, cfg["epsilon"], cfg["n_lambda"])
    else:
        lam_lo, lam_hi = lambda_range(s, kind=kind, opts=opts, epsilon=cfg["epsilon"])
        grid = bic_search_grid(
            lam_lo, lam_hi, n_lambda=cfg["n_lambda"], alpha_values=_parse_alphas(cfg["alphas"])
        )
        chosen, records = search(s, grid, kind=kind, opts=opts, epsilon=cfg["epsilon"])
    phi, w, report = solve(s, chosen, opts)
    graph = select_edges(w, tol=cfg["tol"])
    _write_estimate_artifacts(out, cfg, names, s, chosen, phi, w, graph, report, records)
    print(f"estimated {graph.edge_count} edges over {x.p} nodes; artifacts in {out}")
    return 0


def _write_estimate_artifacts(out, cfg, names, s, chosen, phi, w, graph, report, records):
    write_json(out / "config.json", {**cfg, "config_sha256": config_hash(cfg)})
    artifact = {
        "nodes": names,
        "p": graph.p,
        "edges": [
            {"i": int(i), "j": int(j), "weight": float(wt)}
            for (i, j), wt in zip(graph.edges, graph.weights)
        ],
        "edge_count": graph.edge_count,
        "method": cfg["method"],
        "lambda": chosen.lam,
        "alpha": chosen.alpha,
        "epsilon": chosen.epsilon,
        "K": s.plan.K if s.plan else None,
        "M": s.M,
        "converged": bool(report.converged),
        "provenance": provenance(cfg),
    }
    write_json(out / "graph.json", artifact)
    write_real_matrix(out / "adjacency.csv", graph.adjacency(), names)
    write_edges(out / "edges.csv", graph.edges, graph.weights)
    for k in range(s.M):
        write_complex_matrix(out / f"phi_{k + 1:02d}.csv", phi.matrices[k])
    if records is not None:
        _write_bic_table(out / "bic_table.csv", records)


def _write_bic_table(path, records):
    rows = [
        [r.stage, _fmt(r.lam), _fmt(r.alpha), _fmt(r.bic), r.edge_count, int(r.converged)]
        for r in records
    ]
    _write_rows(path, ["stage", "lambda", "alpha", "bic", "edge_count", "converged"], rows)


# --------------------------------------------------------------- select


SEL_DEFAULTS = {k: v for k, v in EST_DEFAULTS.items() if k not in ("lam", "alpha", "bic", "tol")}


def cmd_select(args) -> int:
    cfg = resolve(SEL_DEFAULTS, args)
    if cfg["input"] is None or cfg["out"] is None:
        raise IngestError("select needs --input and --out")
    if cfg["method"] == "iid":
        print("error: --method iid has no tuning search", file=sys.stderr)
        return 2
    out = _outdir(cfg)
    _, x = load_series(cfg["input"], cfg["center"], cfg["log_returns"])
    opts = _solver_options(cfg)
    s = _estimate_stats(cfg, x)
    kind = KIND_SGL if cfg["method"] == KIND_SGL else KIND_SGLSP
    lam_lo, lam_hi = lambda_range(s, kind=kind, opts=opts, epsilon=cfg["epsilon"])
    grid = bic_search_grid(
        lam_lo, lam_hi, n_lambda=cfg["n_lambda"], alpha_values=_parse_alphas(cfg["alphas"])
    )
    chosen, records = search(s, grid, kind=kind, opts=opts, epsilon=cfg["epsilon"])
    write_json(out / "config.json", {**cfg, "config_sha256": config_hash(cfg)})
    _write_bic_table(out / "bic_table.csv", records)
    best = min((r for r in records if r.stage == 2), key=lambda r: r.bic)
    write_json(
        out / "chosen.json",
        {
            "lambda": chosen.lam,
            "alpha": chosen.alpha,
            "bic": best.bic,
            "edge_count": best.edge_count,
            "kind": chosen.kind,
            "provenance": provenance(cfg),
        },
    )
    print(f"selected lambda={chosen.lam:.6g} alpha={chosen.alpha:.3g}; table in {out}")
    return 0


# ---------------------------------------------------------------- score


def cmd_score(args) -> int:
    est = read_edges(Path(args.estimated))
    truth = read_edges(Path(args.truth))
    m = score_edges(est, truth)
    payload = {"precision": m.precision, "recall": m.recall, "f1": m.f1}
    text = json.dumps(payload, indent=2, sort_keys=True)
    print(text)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        write_json(Path(args.out), payload)
    return 0


# ---------------------------------------------------------------- bench


BENCH_DEFAULTS = {
    "out": None,
    "preset": None,
    "p": 16,
    "cluster_size": 8,
    "order": 3,
    "density": 0.1,
    "coef_range": 0.8,
    "stability_cap": 0.95,
    "burn_in": 100,
    "n": None,
    "windows": 4,
    "methods": "sglsp,sgl",
    "tuning": "oracle",
    "trials": 5,
    "seed": 0,
    "n_lambda": 10,
    "alphas": "0,0.05,0.1,0.15,0.2,0.25,0.3",
    "epsilon": 1e-4,
}

BENCH_PRESETS = {
    # Small enough to run on a workstation while still showing the method
    # ordering; the full preset mirrors the large synthetic study.
    "desk": {"p": 16, "trials": 20, "n": [256, 1024], "methods": "sglsp,sgl,iid"},
    "full": {
        "p": 128,
        "trials": 100,
        "n": [128, 256, 512, 1024, 2048],
        "methods": "sglsp,sgl,iid,sglsp-bic",
    },
}


def cmd_bench(args) -> int:
    preset = BENCH_PRESETS.get(getattr(args, "preset", None) or "")
    cfg = resolve(BENCH_DEFAULTS, args, preset=preset)
    if cfg["out"] is None:
        raise IngestError("bench needs --out")
    out = _outdir(cfg)
    n_values = tuple(cfg["n"]) if cfg["n"] else (256, 1024)
    cfg["n"] = list(n_values)
    methods = tuple(m for m in str(cfg["methods"]).split(",") if m)
    bad = set(methods) - set(KNOWN_METHODS)
    if bad:
        print(
            f"error: unknown methods {sorted(bad)}; choose from {sorted(KNOWN_METHODS)}",
            file=sys.stderr,
        )
        return 2
    trial_cfg = TrialConfig(
        p=cfg["p"],
        cluster_size=cfg["cluster_size"],
        order=cfg["order"],
        density=cfg["density"],
        coef_range=cfg["coef_range"],
        stability_cap=cfg["stability_cap"],
        burn_in=cfg["burn_in"],
        n_values=n_values,
        windows=cfg["windows"],
        methods=methods,
        tuning=cfg["tuning"],
        n_lambda=cfg["n_lambda"],
        alpha_values=_parse_alphas(cfg["alphas"]),
        epsilon=cfg["epsilon"],
    )
    rows, summary = run_trials(trial_cfg, cfg["trials"], seed=cfg["seed"])
    write_json(out / "config.json", {**cfg, "config_sha256": config_hash(cfg)})
    cols = [
        "method", "n", "K", "M", "trial", "seed", "lam", "alpha",
        "precision", "recall", "f1", "frob_error", "runtime_ms",
    ]
    _write_rows(
        out / "results.csv",
        cols,
        ([_cell(row[c]) for c in cols] for row in rows),
    )
    sum_cols = ["method", "n", "trials", "mean_f1", "stderr_f1", "mean_frob", "stderr_frob"]
    _write_rows(
        out / "summary.csv",
        sum_cols,
        ([_cell(row[c]) for c in sum_cols] for row in summary),
    )
    for row in summary:
        print(
            f"{row['method']:>10s}  n={row['n']:<5d} mean F1 {row['mean_f1']:.3f} "
            f"(se {row['stderr_f1']:.3f})"
        )
    print(f"tables in {out}")
    return 0


def _cell(v):
    if isinstance(v, float):
        return "" if math.isnan(v) else _fmt(v)
    return v


# ----------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PACKAGE,
        description="Learn which channels of a multivariate time series are "
        "conditionally dependent, from sparse inverse spectral density estimates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--config", help="JSON file with settings; flags override it")

    sp = sub.add_parser("simulate", help="draw a clustered VAR model and a sample path")
    add_common(sp)
    sp.add_argument("--out", help="output directory")
    for flag in ("p", "cluster-size", "order", "n", "burn-in", "seed", "K", "M"):
        sp.add_argument(f"--{flag}", type=int)
    for flag in ("density", "coef-range", "stability-cap"):
        sp.add_argument(f"--{flag}", type=float)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("estimate", help="fit the graph from a series CSV")
    add_common(sp)
    sp.add_argument("--input")
    sp.add_argument("--out")
    sp.add_argument("--center", action="store_true", default=None)
    sp.add_argument("--log-returns", action="store_true", default=None)
    sp.add_argument("--method", choices=[KIND_SGLSP, KIND_SGL, "iid"])
    sp.add_argument("--bic", action="store_true", default=None)
    sp.add_argument("--lam", type=float)
    sp.add_argument("--alpha", type=float)
    for flag in ("K", "M", "max-inner", "outer-iters", "n-lambda"):
        sp.add_argument(f"--{flag}", type=int)
    for flag in ("epsilon", "tol", "rho0", "eps-abs", "eps-rel", "outer-tol"):
        sp.add_argument(f"--{flag}", type=float)
    sp.add_argument("--alphas")
    sp.set_defaults(func=cmd_estimate)

    sp = sub.add_parser("select", help="BIC table and chosen tuning for a series CSV")
    add_common(sp)
    sp.add_argument("--input")
    sp.add_argument("--out")
    sp.add_argument("--center", action="store_true", default=None)
    sp.add_argument("--log-returns", action="store_true", default=None)
    sp.add_argument("--method", choices=[KIND_SGLSP, KIND_SGL])
    for flag in ("K", "M", "max-inner", "outer-iters", "n-lambda"):
        sp.add_argument(f"--{flag}", type=int)
    for flag in ("epsilon", "rho0", "eps-abs", "eps-rel", "outer-tol"):
        sp.add_argument(f"--{flag}", type=float)
    sp.add_argument("--alphas")
    sp.set_defaults(func=cmd_select)

    sp = sub.add_parser("score", help="compare an estimated edge list against truth")
    sp.add_argument("--estimated", required=True)
    sp.add_argument("--truth", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_score)

    sp = sub.add_parser("bench", help="Monte Carlo comparison on synthetic models")
    add_common(sp)
    sp.add_argument("--out")
    sp.add_argument("--preset", choices=sorted(BENCH_PRESETS))
    sp.add_argument("--n", type=int, action="append")
    for flag in ("p", "cluster-size", "order", "burn-in", "windows", "trials", "seed", "n-lambda"):
        sp.add_argument(f"--{flag}", type=int)
    for flag in ("density", "coef-range", "stability-cap", "epsilon"):
        sp.add_argument(f"--{flag}", type=float)
    sp.add_argument("--methods")
    sp.add_argument("--alphas")
    sp.add_argument("--tuning", choices=["oracle", "bic"])
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidWindowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IngestError, InvalidDataError, InsufficientSamplesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SpecGraphError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
