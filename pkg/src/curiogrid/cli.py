"""Command-line front door: parse flags (optionally over a JSON config
file), run the experiment, and write the data products.

Outputs, all under --out-dir (falling back to the CURIO_OUT_DIR environment
variable, then ./out):

  values_mean.csv   grid_size rows x grid_size columns, row 0 = top grid row
  values_std.csv    same shape, population std over trials
  series.csv        step,v_inducing_mean,v_inducing_std,v_satisfying_mean,v_satisfying_std
  config_echo.json  every resolved parameter plus the derived trial seeds
  heatmap.pgm       optional plain-text (P2) grayscale render of values_mean,
                    with the scaling documented in heatmap_scale.txt
  trial_NNN.steps.csv  optional per-trial step logs

Numbers are serialized with full round-trip precision, so identical
configurations produce byte-identical files. Exit codes: 0 success, 2 flag
or validation errors, 3 output I/O errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .agent import LearnerParams
from .curiosity import TEMP_VALUE_FORMS
from .gridworld import ACTIONS
from .harness import STEP_LOG_COLUMNS, ExperimentConfig, ExperimentResult, run_experiment

_CONFIG_KEYS = (
    "grid_size", "steps", "trials", "seed", "gamma", "alpha", "epsilon",
    "snapshot_every", "temp_value_form", "out_dir", "emit_heatmap",
    "emit_step_logs",
)


@dataclass(frozen=True)
class EmitOptions:
    out_dir: Path
    emit_heatmap: bool = False
    emit_step_logs: bool = False


@dataclass(frozen=True)
class OutputManifest:
    out_dir: Path
    files: tuple[Path, ...]


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(2)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curiogrid",
        description="Run the curiosity grid-world experiment and write CSV/PGM data products.",
    )
    parser.add_argument("--config", type=Path, default=None,
                        help="JSON file with defaults; explicit flags override it")
    parser.add_argument("--grid-size", type=int, default=None,
                        help="odd grid size >= 5 (default 11)")
    parser.add_argument("--steps", type=int, default=None,
                        help="steps per trial (default 5000)")
    parser.add_argument("--trials", type=int, default=None,
                        help="number of independently seeded trials (default 30)")
    parser.add_argument("--seed", type=int, default=None,
                        help="base seed; trial seeds derive from it (default 0)")
    parser.add_argument("--gamma", type=float, default=None,
                        help="discount in [0, 1) (default 0.9)")
    parser.add_argument("--alpha", type=float, default=None,
                        help="step size in (0, 1] (default 0.1)")
    parser.add_argument("--epsilon", type=float, default=None,
                        help="exploration rate in [0, 1] (default 0.1)")
    parser.add_argument("--snapshot-every", type=int, default=None,
                        help="series sampling stride (default 1)")
    parser.add_argument("--temp-value-form", choices=TEMP_VALUE_FORMS, default=None,
                        help="shape of the temporary value table (default negative-distance)")
    parser.add_argument("--out-dir", type=Path, default=None,
                        help="output directory (fallback: $CURIO_OUT_DIR, then ./out)")
    parser.add_argument("--emit-heatmap", action="store_true", default=None,
                        help="also write heatmap.pgm and its scale sidecar")
    parser.add_argument("--emit-step-logs", action="store_true", default=None,
                        help="also write one step log CSV per trial")
    return parser


def parse_config(argv: list[str] | None = None) -> tuple[ExperimentConfig, EmitOptions]:
    """Resolve defaults < config file < explicit flags, then validate.

    Exits with code 2 and a one-line diagnostic naming the offending flag on
    any validation failure.
    """
    args = _build_parser().parse_args(argv)

    resolved: dict = {
        "grid_size": 11, "steps": 5000, "trials": 30, "seed": 0,
        "gamma": 0.9, "alpha": 0.1, "epsilon": 0.1, "snapshot_every": 1,
        "temp_value_form": "negative-distance", "out_dir": None,
        "emit_heatmap": False, "emit_step_logs": False,
    }

    if args.config is not None:
        try:
            loaded = json.loads(Path(args.config).read_text())
        except OSError as exc:
            _fail(f"--config {args.config}: {exc}")
        except json.JSONDecodeError as exc:
            _fail(f"--config {args.config} is not valid JSON: {exc}")
        if not isinstance(loaded, dict):
            _fail(f"--config {args.config} must hold a JSON object")
        for key, value in loaded.items():
            if key not in _CONFIG_KEYS:
                _fail(f"--config {args.config} has unknown key {key!r}")
            resolved[key] = value

    for key in _CONFIG_KEYS:
        if key == "out_dir":
            continue
        cli_value = getattr(args, key)
        if cli_value is not None:
            resolved[key] = cli_value
    if args.out_dir is not None:
        resolved["out_dir"] = args.out_dir

    if resolved["out_dir"] is None:
        resolved["out_dir"] = os.environ.get("CURIO_OUT_DIR", "out")

    size = resolved["grid_size"]
    if not isinstance(size, int) or size < 5 or size % 2 == 0:
        _fail(f"--grid-size must be an odd integer >= 5 (no grid centre otherwise), got {size}")
    if resolved["steps"] < 1:
        _fail(f"--steps must be >= 1, got {resolved['steps']}")
    if resolved["trials"] < 1:
        _fail(f"--trials must be >= 1, got {resolved['trials']}")
    if resolved["snapshot_every"] < 1:
        _fail(f"--snapshot-every must be >= 1, got {resolved['snapshot_every']}")
    if not 0.0 <= resolved["gamma"] < 1.0:
        _fail(f"--gamma must be in [0, 1), got {resolved['gamma']}")
    if not 0.0 < resolved["alpha"] <= 1.0:
        _fail(f"--alpha must be in (0, 1], got {resolved['alpha']}")
    if not 0.0 <= resolved["epsilon"] <= 1.0:
        _fail(f"--epsilon must be in [0, 1], got {resolved['epsilon']}")
    if resolved["temp_value_form"] not in TEMP_VALUE_FORMS:
        _fail(f"--temp-value-form must be one of {TEMP_VALUE_FORMS}, got {resolved['temp_value_form']!r}")
    if resolved["temp_value_form"] == "discounted" and resolved["gamma"] == 0.0:
        _fail("--temp-value-form discounted needs --gamma > 0")

    config = ExperimentConfig(
        grid_size=size,
        steps_per_trial=resolved["steps"],
        trials=resolved["trials"],
        base_seed=resolved["seed"],
        params=LearnerParams(
            gamma=resolved["gamma"], alpha=resolved["alpha"], epsilon=resolved["epsilon"]
        ),
        snapshot_every=resolved["snapshot_every"],
        temp_value_form=resolved["temp_value_form"],
    )
    options = EmitOptions(
        out_dir=Path(resolved["out_dir"]),
        emit_heatmap=bool(resolved["emit_heatmap"]),
        emit_step_logs=bool(resolved["emit_step_logs"]),
    )
    return config, options


def _csv_float(x: float) -> str:
    """Shortest decimal that round-trips to the same float64."""
    return repr(float(x))


def _write_value_grid(path: Path, grid: np.ndarray) -> None:
    lines = [",".join(_csv_float(v) for v in row) for row in grid]
    path.write_text("\n".join(lines) + "\n")


def _write_series(path: Path, result: ExperimentResult) -> None:
    lines = ["step,v_inducing_mean,v_inducing_std,v_satisfying_mean,v_satisfying_std"]
    for i, t in enumerate(result.series_steps):
        lines.append(",".join([
            str(int(t)),
            _csv_float(result.inducing_mean[i]),
            _csv_float(result.inducing_std[i]),
            _csv_float(result.satisfying_mean[i]),
            _csv_float(result.satisfying_std[i]),
        ]))
    path.write_text("\n".join(lines) + "\n")


def _config_echo(config: ExperimentConfig, options: EmitOptions) -> dict:
    """Everything needed to reproduce the run byte for byte. The output
    directory is deliberately left out: it does not affect the data."""
    return {
        "grid_size": config.grid_size,
        "steps_per_trial": config.steps_per_trial,
        "trials": config.trials,
        "base_seed": config.base_seed,
        "gamma": config.params.gamma,
        "alpha": config.params.alpha,
        "epsilon": config.params.epsilon,
        "snapshot_every": config.snapshot_every,
        "temp_value_form": config.temp_value_form,
        "curiosity_enabled": config.curiosity_enabled,
        "trial_seeds": config.trial_seeds(),
        "emit_heatmap": options.emit_heatmap,
        "emit_step_logs": options.emit_step_logs,
    }


def _write_heatmap(pgm_path: Path, sidecar_path: Path, grid: np.ndarray) -> None:
    """Plain (P2) grayscale PGM: the minimum value renders white (255), the
    maximum black (0), linear in between."""
    vmin = float(grid.min())
    vmax = float(grid.max())
    span = vmax - vmin
    if span == 0.0:
        pixels = np.full(grid.shape, 255, dtype=np.int64)
    else:
        pixels = np.rint(255.0 * (1.0 - (grid - vmin) / span)).astype(np.int64)
    rows, cols = grid.shape
    lines = ["P2", f"{cols} {rows}", "255"]
    lines += [" ".join(str(p) for p in row) for row in pixels]
    pgm_path.write_text("\n".join(lines) + "\n")
    sidecar_path.write_text(
        "heatmap.pgm renders values_mean.csv as plain (P2) grayscale.\n"
        "pixel = round(255 * (1 - (value - vmin) / (vmax - vmin)))\n"
        "so vmin maps to 255 (white) and vmax to 0 (black); a flat grid is all white.\n"
        f"vmin = {_csv_float(vmin)}\n"
        f"vmax = {_csv_float(vmax)}\n"
        "row 0 of the image is the top grid row.\n"
    )


def _write_step_logs(out_dir: Path, result: ExperimentResult) -> list[Path]:
    paths = []
    header = ",".join(STEP_LOG_COLUMNS)
    for trial in result.trials:
        if trial.step_log is None:
            raise ValueError("step logs were not recorded for this run")
        path = out_dir / f"trial_{trial.trial_index:03d}.steps.csv"
        lines = [header]
        for row in trial.step_log:
            t, r, c, a, temp, delta, curious = row
            lines.append(",".join([
                str(int(t)), str(int(r)), str(int(c)), ACTIONS[int(a)].name,
                _csv_float(temp), _csv_float(delta), str(int(curious)),
            ]))
        path.write_text("\n".join(lines) + "\n")
        paths.append(path)
    return paths


def emit_outputs(result: ExperimentResult, options: EmitOptions) -> OutputManifest:
    """Write all requested files under options.out_dir.

    Raises OSError (mapped to exit code 3 by main) when the directory cannot
    be created or written.
    """
    out = Path(options.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = []

    mean_path = out / "values_mean.csv"
    _write_value_grid(mean_path, result.mean_values)
    files.append(mean_path)

    std_path = out / "values_std.csv"
    _write_value_grid(std_path, result.std_values)
    files.append(std_path)

    series_path = out / "series.csv"
    _write_series(series_path, result)
    files.append(series_path)

    echo_path = out / "config_echo.json"
    echo_path.write_text(
        json.dumps(_config_echo(result.config, options), indent=2, sort_keys=True) + "\n"
    )
    files.append(echo_path)

    if options.emit_heatmap:
        pgm_path = out / "heatmap.pgm"
        sidecar_path = out / "heatmap_scale.txt"
        _write_heatmap(pgm_path, sidecar_path, result.mean_values)
        files += [pgm_path, sidecar_path]

    if options.emit_step_logs:
        files += _write_step_logs(out, result)

    return OutputManifest(out_dir=out, files=tuple(files))


def main(argv: list[str] | None = None) -> int:
    config, options = parse_config(argv)
    result = run_experiment(config, record_steps=options.emit_step_logs)
    try:
        manifest = emit_outputs(result, options)
    except OSError as exc:
        print(f"error: cannot write outputs under {options.out_dir}: {exc}", file=sys.stderr)
        return 3
    for path in manifest.files:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
