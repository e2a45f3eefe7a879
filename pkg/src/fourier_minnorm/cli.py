"""Experiment runner CLI: deterministic sweeps serialised to CSV/JSON.

Subcommands: risk-curve, mc-risk, heatmap, bound-check, interp,
concentration.  Every command accepts ``--config <json-file>`` (strictly
validated, unknown keys rejected) with CLI flags taking precedence, and
``--out/--format/--threads`` plus command-specific parameters.

Output contracts:

* CSV: UTF-8, comma-separated, one header row, LF line endings, floats with
  17 significant digits (round-trip exact for doubles);
* JSON: UTF-8, sorted keys;
* outputs are pure functions of (spec, seed) and byte-identical across
  reruns and thread counts (rows are computed in grid order and merged in
  submission order);
* skipped out-of-domain rows are logged to a ``<out>.log`` sidecar, never
  into data files.

Exit codes: 0 success, 2 configuration error, 3 numerical inconsistency.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, ClassVar, Sequence

import numpy as np

from .errors import ConfigurationError, NumericalInconsistencyError, SingularSystemError
from .interpolation import (
    UNIT_DOMAIN,
    InterpolationProblem,
    Method,
    WeightKind,
    builtin_targets,
    fit_interpolant,
    sample_axis,
    training_samples,
)
from .model import build_spectrum, classify_grid
from .montecarlo import CoefficientModel, McConfig, concentration_check, empirical_risk
from .risktheory import asymptotic_bound, concentration_bound, risk_over_closed, theory_risk

# ---------------------------------------------------------------------------
# Serialisation helpers
# ---------------------------------------------------------------------------


def render_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def write_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(render_cell(v) for v in row) for row in rows)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_json(path: Path, payload) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _json_value(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    return value


def write_table(path: Path, fmt: str, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    if fmt == "csv":
        write_csv(path, header, rows)
    else:
        payload = {"columns": list(header), "rows": [[_json_value(v) for v in row] for row in rows]}
        write_json(path, payload)


def ordered_map(fn: Callable, items: Sequence, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# Experiment specs (strict construction, lossless round-trips)
# ---------------------------------------------------------------------------


def _tuple_fields(cls) -> dict[str, type]:
    out = {}
    for f in dataclasses.fields(cls):
        if "tuple" in str(f.type):
            out[f.name] = int if "int" in str(f.type) else (str if "str" in str(f.type) else float)
    return out


def spec_from_dict(cls, data: dict):
    data = dict(data)
    command = data.pop("command", cls.COMMAND)
    if command != cls.COMMAND:
        raise ConfigurationError(f"config is for command {command!r}, expected {cls.COMMAND!r}")
    names = {f.name for f in dataclasses.fields(cls)}
    unknown = sorted(set(data) - names)
    if unknown:
        raise ConfigurationError(f"unknown config field(s) for {cls.COMMAND}: {', '.join(unknown)}")
    converters = _tuple_fields(cls)
    for name, scalar in converters.items():
        if name in data and data[name] is not None:
            data[name] = tuple(scalar(v) for v in data[name])
    try:
        return cls(**data)
    except TypeError as exc:
        raise ConfigurationError(f"invalid {cls.COMMAND} config: {exc}") from None


def spec_to_dict(spec) -> dict:
    out = {"command": spec.COMMAND}
    for f in dataclasses.fields(spec):
        value = getattr(spec, f.name)
        out[f.name] = list(value) if isinstance(value, tuple) else value
    return out


def _check_format(fmt: str) -> None:
    if fmt not in ("csv", "json"):
        raise ConfigurationError(f"format must be 'csv' or 'json', got {fmt!r}")


@dataclass(frozen=True)
class RiskCurveSpec:
    COMMAND: ClassVar[str] = "risk-curve"
    D: int
    n: int
    r_values: tuple[float, ...]
    q_values: tuple[float, ...] | None = None  # None: q = r per curve
    p_values: tuple[int, ...] | None = None  # None: use p_rule
    p_rule: str = "paper"
    out: str = "risk_curve.csv"
    format: str = "csv"
    threads: int = 1


@dataclass(frozen=True)
class McRiskSpec:
    COMMAND: ClassVar[str] = "mc-risk"
    D: int
    n: int
    r_values: tuple[float, ...]
    q_values: tuple[float, ...] | None = None
    p_values: tuple[int, ...] | None = None
    p_rule: str = "paper"
    trials: int = 100
    seed: int = 0
    confidence: float = 0.8
    coefficient_model: str = "complex-gaussian"
    out: str = "mc_risk.csv"
    format: str = "csv"
    threads: int = 1


@dataclass(frozen=True)
class HeatmapSpec:
    COMMAND: ClassVar[str] = "heatmap"
    D: int
    n: int
    r_values: tuple[float, ...]
    q_rule: str = "match-r"  # or "fixed"
    q_fixed: float = 0.0
    p_values: tuple[int, ...] | None = None
    p_rule: str = "paper"
    out: str = "heatmap.csv"
    format: str = "csv"
    threads: int = 1


@dataclass(frozen=True)
class BoundCheckSpec:
    COMMAND: ClassVar[str] = "bound-check"
    n_values: tuple[int, ...]
    r_values: tuple[float, ...]
    l_values: tuple[int, ...] = (2, 4)
    tau_multipliers: tuple[int, ...] = (2, 4)
    out: str = "bound_check.csv"
    format: str = "csv"
    threads: int = 1


@dataclass(frozen=True)
class InterpSpec:
    COMMAND: ClassVar[str] = "interp"
    n_axis: int
    p_axis: int
    D_axis: int
    q: float
    dimension: int = 1
    target: str | None = None
    samples_file: str | None = None
    methods: tuple[str, ...] = ("weighted-min-norm", "plain-min-norm")
    weight_kind: str = "euclidean"
    noise_sigma: float = 0.0
    eval_points: int = 512
    seed: int = 0
    out: str = "interp"
    format: str = "csv"
    threads: int = 1


@dataclass(frozen=True)
class ConcentrationSpec:
    COMMAND: ClassVar[str] = "concentration"
    D: int
    n: int
    p: int
    r: float
    q: float
    t_multipliers: tuple[float, ...] = (0.5, 1.0, 2.0)
    trials: int = 2000
    seed: int = 0
    confidence: float = 0.8
    coefficient_model: str = "complex-gaussian"
    out: str = "concentration.csv"
    format: str = "csv"
    threads: int = 1


SPEC_TYPES = {
    cls.COMMAND: cls
    for cls in (RiskCurveSpec, McRiskSpec, HeatmapSpec, BoundCheckSpec, InterpSpec, ConcentrationSpec)
}


# ---------------------------------------------------------------------------
# Runners
# ---------------------------------------------------------------------------


def _resolve_p_grid(spec) -> list[int]:
    if spec.p_values is not None:
        p_list = sorted(set(spec.p_values))
    elif spec.p_rule == "paper":
        if spec.D % spec.n != 0:
            raise ConfigurationError(f"p_rule 'paper' needs n | D, got D={spec.D}, n={spec.n} (field n)")
        p_list = list(range(1, spec.n)) + [l * spec.n for l in range(1, spec.D // spec.n + 1)]
    else:
        raise ConfigurationError(f"unknown p_rule {spec.p_rule!r} (field p_rule)")
    if not p_list:
        raise ConfigurationError("p grid is empty (field p_values)")
    for p in p_list:
        classify_grid(spec.D, spec.n, p)  # raises with the offending value named
    return p_list


def _curve_params(spec) -> list[tuple[float, float, int]]:
    if not spec.r_values:
        raise ConfigurationError("r grid is empty (field r_values)")
    p_list = _resolve_p_grid(spec)
    params = []
    for r in sorted(set(spec.r_values)):
        q_list = sorted(set(spec.q_values)) if spec.q_values is not None else [r]
        for q in q_list:
            params.extend((r, q, p) for p in p_list)
    return params


def run_risk_curve(spec: RiskCurveSpec) -> list[Path]:
    _check_format(spec.format)
    params = _curve_params(spec)
    spectra = {r: build_spectrum(spec.D, r) for r, _, _ in params}

    def compute(item):
        r, q, p = item
        grid = classify_grid(spec.D, spec.n, p)
        return [spec.D, spec.n, p, r, q, grid.regime.value, theory_risk(spectra[r], grid, q)]

    rows = ordered_map(compute, params, spec.threads)
    path = Path(spec.out)
    write_table(path, spec.format, ["D", "n", "p", "r", "q", "regime", "risk_theory"], rows)
    return [path]


def run_mc_risk(spec: McRiskSpec) -> list[Path]:
    _check_format(spec.format)
    params = _curve_params(spec)
    spectra = {r: build_spectrum(spec.D, r) for r, _, _ in params}
    mc = McConfig(
        trials=spec.trials,
        seed=spec.seed,
        coefficient_model=CoefficientModel(spec.coefficient_model),
        confidence=spec.confidence,
    )

    def compute(item):
        r, q, p = item
        grid = classify_grid(spec.D, spec.n, p)
        est = empirical_risk(spectra[r], grid, q, mc)
        theory = theory_risk(spectra[r], grid, q)
        return [spec.D, spec.n, p, r, q, grid.regime.value, theory, est.mean, est.ci_low, est.ci_high]

    rows = ordered_map(compute, params, spec.threads)
    path = Path(spec.out)
    header = ["D", "n", "p", "r", "q", "regime", "risk_theory", "risk_mc_mean", "ci_low", "ci_high"]
    write_table(path, spec.format, header, rows)
    return [path]


def run_heatmap(spec: HeatmapSpec) -> list[Path]:
    _check_format(spec.format)
    if spec.q_rule not in ("match-r", "fixed"):
        raise ConfigurationError(f"q_rule must be 'match-r' or 'fixed', got {spec.q_rule!r} (field q_rule)")
    if not spec.r_values:
        raise ConfigurationError("r grid is empty (field r_values)")
    p_list = _resolve_p_grid(spec)
    params = [(r, p) for r in sorted(set(spec.r_values)) for p in p_list]
    spectra = {r: build_spectrum(spec.D, r) for r, _ in params}

    def compute(item):
        r, p = item
        q = r if spec.q_rule == "match-r" else spec.q_fixed
        grid = classify_grid(spec.D, spec.n, p)
        risk = theory_risk(spectra[r], grid, q)
        log_risk = math.log10(risk) if risk > 0 else None
        return [spec.D, spec.n, p, r, q, risk, log_risk]

    rows = ordered_map(compute, params, spec.threads)
    path = Path(spec.out)
    write_table(path, spec.format, ["D", "n", "p", "r", "q", "risk", "log10_risk"], rows)
    return [path]


def run_bound_check(spec: BoundCheckSpec) -> list[Path]:
    _check_format(spec.format)
    if not (spec.n_values and spec.r_values and spec.l_values and spec.tau_multipliers):
        raise ConfigurationError("bound-check grids must be nonempty")
    params = [
        (r, n, l, m)
        for r in sorted(set(spec.r_values))
        for n in sorted(set(spec.n_values))
        for l in sorted(set(spec.l_values))
        for m in sorted(set(spec.tau_multipliers))
    ]
    rows = []
    warnings = []
    for r, n, l, m in params:
        tau = m * l
        D, p = tau * n, l * n
        label = f"r={r} n={n} l={l} tau={tau}"
        if r <= 0.5:
            warnings.append(f"skipped {label}: rate bound needs q = r > 1/2")
            continue
        if l < 2:
            warnings.append(f"skipped {label}: rate bound needs l >= 2")
            continue
        spectrum = build_spectrum(D, r)
        grid = classify_grid(D, n, p)
        risk = risk_over_closed(spectrum, grid, q=r).risk
        report = asymptotic_bound(spectrum, grid)
        slack = report.bound - risk
        rows.append(["config", D, n, p, r, r, risk, report.bound, slack, slack >= 0.0])
    if rows:
        min_slack = min(row[8] for row in rows)
        all_valid = all(row[9] for row in rows)
        rows.append(["summary", None, None, None, None, None, None, None, min_slack, all_valid])
    path = Path(spec.out)
    header = ["kind", "D", "n", "p", "r", "q", "risk", "bound", "slack", "valid"]
    write_table(path, spec.format, header, rows)
    paths = [path]
    if warnings:
        log_path = Path(str(spec.out) + ".log")
        with open(log_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(warnings) + "\n")
        paths.append(log_path)
    return paths


def run_concentration(spec: ConcentrationSpec) -> list[Path]:
    _check_format(spec.format)
    spectrum = build_spectrum(spec.D, spec.r)
    grid = classify_grid(spec.D, spec.n, spec.p)
    mc = McConfig(
        trials=spec.trials,
        seed=spec.seed,
        coefficient_model=CoefficientModel(spec.coefficient_model),
        confidence=spec.confidence,
    )
    T_q = concentration_bound(spec.r, spec.q, 0.0).T_q
    t_grid = [m * T_q for m in spec.t_multipliers]
    rows = [
        [spec.D, spec.n, spec.p, spec.r, spec.q, spec.trials, row.t, row.empirical_tail, row.bound_tail, row.std_err]
        for row in concentration_check(spectrum, grid, spec.q, t_grid, mc)
    ]
    path = Path(spec.out)
    header = ["D", "n", "p", "r", "q", "trials", "t", "empirical_tail", "bound_tail", "std_err"]
    write_table(path, spec.format, header, rows)
    return [path]


def _load_samples_file(path: str, dimension: int, n_axis: int, domain: tuple[float, float]) -> np.ndarray:
    """Read a training-sample CSV (x columns then y, row-major grid order)."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ConfigurationError(f"samples file {path} is empty")
    header = lines[0].split(",")
    expected = [f"x{i}" for i in range(dimension)] + ["y"]
    if header != expected:
        raise ConfigurationError(f"samples file header {header} != expected {expected}")
    values = np.array([[float(cell) for cell in line.split(",")] for line in lines[1:]])
    if values.shape[0] != n_axis**dimension:
        raise ConfigurationError(f"samples file has {values.shape[0]} rows, expected {n_axis**dimension}")
    grid_points = training_grid_points(dimension, n_axis, domain)
    if not np.allclose(values[:, :dimension], grid_points, atol=1e-12):
        raise ConfigurationError("samples file coordinates do not match the equispaced training grid")
    return values[:, -1].reshape((n_axis,) * dimension)


def training_grid_points(dimension: int, n_axis: int, domain: tuple[float, float]) -> np.ndarray:
    axes = [sample_axis(n_axis, domain)] * dimension
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack(mesh, axis=-1).reshape(-1, dimension)


def run_interp(spec: InterpSpec) -> list[Path]:
    _check_format(spec.format)
    if (spec.target is None) == (spec.samples_file is None):
        raise ConfigurationError("exactly one of 'target' and 'samples_file' must be set")
    if not spec.methods:
        raise ConfigurationError("method list is empty (field methods)")
    if spec.target is not None:
        dimension = builtin_targets(spec.target).dimension
        target: str | np.ndarray = spec.target
    else:
        dimension = spec.dimension
        target = _load_samples_file(spec.samples_file, dimension, spec.n_axis, UNIT_DOMAIN)
    problem = InterpolationProblem(
        dimension=dimension,
        n_axis=spec.n_axis,
        p_axis=spec.p_axis,
        D_axis=spec.D_axis,
        q=spec.q,
        target=target,
        noise_sigma=spec.noise_sigma,
        weight_kind=WeightKind(spec.weight_kind),
        noise_seed=spec.seed,
    )
    named = spec.target is not None
    _, observed = training_samples(problem)
    eval_axes = problem.axes(spec.eval_points)
    mesh = np.stack(np.meshgrid(*eval_axes, indexing="ij"), axis=-1)
    coords = mesh.reshape(-1, dimension)
    if named:
        fn = builtin_targets(spec.target)
        truth = (fn(mesh[..., 0]) if dimension == 1 else fn(mesh)).ravel()

    paths = []
    metrics: dict = {
        "problem": {
            "dimension": dimension,
            "n_axis": spec.n_axis,
            "p_axis": spec.p_axis,
            "D_axis": spec.D_axis,
            "q": spec.q,
            "target": spec.target,
            "samples_file": spec.samples_file,
            "weight_kind": spec.weight_kind,
            "noise_sigma": spec.noise_sigma,
            "seed": spec.seed,
            "eval_points": spec.eval_points,
        },
        "samples": [float(v) for v in observed.ravel()],
        "per_method": {},
    }
    coord_header = [f"x{i}" for i in range(dimension)]
    for name in spec.methods:
        method = Method(name)
        fit = fit_interpolant(problem, method)
        values = fit.evaluate(eval_axes).ravel()
        max_imag = float(np.max(np.abs(values.imag))) if values.size else 0.0
        if named:
            header = coord_header + ["f_true", "f_hat"]
            rows = [
                list(coords[i]) + [truth[i], values[i].real] for i in range(len(coords))
            ]
            rmse = float(np.sqrt(np.mean(np.abs(values - truth) ** 2)))
        else:
            header = coord_header + ["f_hat"]
            rows = [list(coords[i]) + [values[i].real] for i in range(len(coords))]
            rmse = None
        suffix = "csv" if spec.format == "csv" else "json"
        grid_path = Path(f"{spec.out}.{method.value}.{suffix}")
        write_table(grid_path, spec.format, header, rows)
        paths.append(grid_path)
        metrics["per_method"][method.value] = {
            "sample_residual": fit.residual,
            "weighted_norm": fit.weighted_norm,
            "plain_norm": fit.plain_norm,
            "rmse": rmse,
            "max_abs_imag": max_imag,
        }
    metrics_path = Path(f"{spec.out}.metrics.json")
    write_json(metrics_path, metrics)
    paths.append(metrics_path)
    return paths


RUNNERS = {
    "risk-curve": run_risk_curve,
    "mc-risk": run_mc_risk,
    "heatmap": run_heatmap,
    "bound-check": run_bound_check,
    "interp": run_interp,
    "concentration": run_concentration,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(",") if v.strip())


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(",") if v.strip())


def _strs(text: str) -> tuple[str, ...]:
    return tuple(v.strip() for v in text.split(",") if v.strip())


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="JSON config file; CLI flags override its fields")
    sub.add_argument("--out", help="output path (or path stem for interp)")
    sub.add_argument("--format", choices=("csv", "json"), help="output format")
    sub.add_argument("--threads", type=int, help="worker threads for grid sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourier-minnorm",
        description="Risk and interpolation experiments for min-norm Fourier regression.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("risk-curve", "mc-risk"):
        p = sub.add_parser(name)
        p.add_argument("--ambient", "-D", dest="D", type=int, help="ambient feature count D")
        p.add_argument("--samples", "-n", dest="n", type=int, help="sample count n")
        p.add_argument("--r-values", type=_floats, help="comma-separated decay exponents")
        p.add_argument("--q-values", type=_floats, help="comma-separated weighting exponents (default q=r)")
        p.add_argument("--p-values", type=_ints, help="explicit comma-separated truncations")
        p.add_argument("--p-rule", help="p grid rule when p-values absent (default 'paper')")
        if name == "mc-risk":
            p.add_argument("--trials", type=int, help="Monte Carlo trials per configuration")
            p.add_argument("--seed", type=int, help="base RNG seed")
            p.add_argument("--confidence", type=float, help="confidence level for percentile CIs")
            p.add_argument("--coefficient-model", choices=[m.value for m in CoefficientModel])
        _add_common(p)

    p = sub.add_parser("heatmap")
    p.add_argument("--ambient", "-D", dest="D", type=int)
    p.add_argument("--samples", "-n", dest="n", type=int)
    p.add_argument("--r-values", type=_floats)
    p.add_argument("--q-rule", choices=("match-r", "fixed"))
    p.add_argument("--q-fixed", type=float)
    p.add_argument("--p-values", type=_ints)
    p.add_argument("--p-rule")
    _add_common(p)

    p = sub.add_parser("bound-check")
    p.add_argument("--n-values", type=_ints)
    p.add_argument("--r-values", type=_floats)
    p.add_argument("--l-values", type=_ints)
    p.add_argument("--tau-multipliers", type=_ints)
    _add_common(p)

    p = sub.add_parser("interp")
    p.add_argument("--target", help="built-in target name (stage1d, cubic1d, cos2d)")
    p.add_argument("--samples-file", help="CSV of training samples (x columns then y)")
    p.add_argument("--dimension", type=int, help="dimension (required for samples-file input)")
    p.add_argument("--n-axis", type=int, help="per-axis sample count")
    p.add_argument("--p-axis", type=int, help="per-axis truncation")
    p.add_argument("--d-axis", dest="D_axis", type=int, help="per-axis ambient feature count")
    p.add_argument("--q", type=float, help="weighting exponent for the weighted fit")
    p.add_argument("--methods", type=_strs, help="comma-separated method list")
    p.add_argument("--weight-kind", choices=[k.value for k in WeightKind])
    p.add_argument("--noise-sigma", type=float, help="additive Gaussian noise level")
    p.add_argument("--eval-points", type=int, help="dense evaluation points per axis")
    p.add_argument("--seed", type=int, help="noise RNG seed")
    _add_common(p)

    p = sub.add_parser("concentration")
    p.add_argument("--ambient", "-D", dest="D", type=int)
    p.add_argument("--samples", "-n", dest="n", type=int)
    p.add_argument("--truncation", "-p", dest="p", type=int)
    p.add_argument("--r", type=float, help="decay exponent")
    p.add_argument("--q", type=float, help="weighting exponent")
    p.add_argument("--t-multipliers", type=_floats, help="deviation levels as multiples of T_q")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--confidence", type=float)
    p.add_argument("--coefficient-model", choices=[m.value for m in CoefficientModel])
    _add_common(p)

    return parser


def spec_from_args(args: argparse.Namespace):
    cls = SPEC_TYPES[args.command]
    file_config: dict = {}
    if args.config:
        try:
            file_config = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise ConfigurationError(f"config file not found: {args.config}") from None
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"config file is not valid JSON: {exc}") from None
        if not isinstance(file_config, dict):
            raise ConfigurationError("config file must hold a JSON object")
    field_names = {f.name for f in dataclasses.fields(cls)}
    overrides = {
        name: value
        for name, value in vars(args).items()
        if name in field_names and value is not None
    }
    merged = dict(file_config)
    merged.update(overrides)
    return spec_from_dict(cls, merged)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = spec_from_args(args)
        for path in RUNNERS[args.command](spec):
            print(f"wrote {path}")
        return 0
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SingularSystemError, NumericalInconsistencyError) as exc:
        print(f"numerical inconsistency: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
