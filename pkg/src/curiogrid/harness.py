"""Experiment driver.

One trial is a single unbroken stream of steps (no episodes, no resets)
starting at the inducing cell with an all-zero persistent table. Per step
the loop runs: trigger check at the current cell, action selection,
transition, value update (reading the temporary value at the departed
cell), satisfaction check at the arrival cell, then series sampling. The
trigger check also fires at step 1, so curiosity starts immediately.

Trials are independently seeded from (base_seed, trial_index) by a
splitmix64 mix and may run sequentially or in a process pool; aggregation
folds them in trial-index order either way, so results are bit-identical.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .agent import LearnerParams, select_action, td_update, zero_value_table
from .curiosity import IDLE, TEMP_VALUE_FORMS, maybe_satisfy, maybe_trigger, temp_value
from .gridworld import ACTIONS, WorldLayout, step

_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    """One splitmix64 output step, standard constants."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def trial_seed(base_seed: int, trial_index: int) -> int:
    """Stream seed for one trial: splitmix64(splitmix64(base) + index).

    Documented so runs can be reproduced exactly from the config echo.
    """
    return _splitmix64(_splitmix64(base_seed & _MASK64) + trial_index)


@dataclass(frozen=True)
class ExperimentConfig:
    grid_size: int = 11
    steps_per_trial: int = 5000
    trials: int = 30
    base_seed: int = 0
    params: LearnerParams = field(default_factory=LearnerParams)
    snapshot_every: int = 1
    temp_value_form: str = "negative-distance"
    # ablation switch: with curiosity off the run is plain TD(0) on a
    # reward-free world and the persistent table must stay exactly zero
    curiosity_enabled: bool = True

    def __post_init__(self) -> None:
        WorldLayout(self.grid_size)  # validates the size
        if self.steps_per_trial < 1:
            raise ValueError(f"steps_per_trial must be >= 1, got {self.steps_per_trial}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.snapshot_every < 1:
            raise ValueError(f"snapshot_every must be >= 1, got {self.snapshot_every}")
        if self.temp_value_form not in TEMP_VALUE_FORMS:
            raise ValueError(f"temp_value_form must be one of {TEMP_VALUE_FORMS}")
        if self.temp_value_form == "discounted" and self.params.gamma == 0.0:
            raise ValueError("discounted temp values need gamma > 0")

    def layout(self) -> WorldLayout:
        return WorldLayout(self.grid_size)

    def trial_seeds(self) -> list[int]:
        return [trial_seed(self.base_seed, i) for i in range(self.trials)]


# columns of the optional per-step log
STEP_LOG_COLUMNS = ("step", "row", "col", "action", "temp_at_pos", "delta", "curious")


@dataclass(frozen=True, eq=False)
class TrialResult:
    trial_index: int
    seed: int
    final_values: np.ndarray
    series_steps: np.ndarray  # sampled step numbers, starting at 0
    series_inducing: np.ndarray  # persistent value of the inducing cell
    series_satisfying: np.ndarray  # mean persistent value over satisfying cells
    trigger_count: int
    satisfaction_count: int
    step_log: np.ndarray | None = None  # optional (steps, 7) float array


@dataclass(frozen=True, eq=False)
class ExperimentResult:
    config: ExperimentConfig
    mean_values: np.ndarray
    std_values: np.ndarray  # population std over trials, per cell
    series_steps: np.ndarray
    inducing_mean: np.ndarray
    inducing_std: np.ndarray
    satisfying_mean: np.ndarray
    satisfying_std: np.ndarray
    trials: list[TrialResult]


def run_trial(
    config: ExperimentConfig, trial_index: int, record_steps: bool = False
) -> TrialResult:
    """Run one trial. Fully deterministic given (config, trial_index)."""
    layout = config.layout()
    params = config.params
    seed = trial_seed(config.base_seed, trial_index)
    rng = np.random.default_rng(seed)
    values = zero_value_table(config.grid_size)
    pos = layout.inducing
    state = IDLE
    sat_rows = np.array([p.row for p in layout.satisfying])
    sat_cols = np.array([p.col for p in layout.satisfying])

    n_samples = config.steps_per_trial // config.snapshot_every + 1
    s_steps = np.zeros(n_samples, dtype=np.int64)
    s_inducing = np.zeros(n_samples, dtype=np.float64)
    s_satisfying = np.zeros(n_samples, dtype=np.float64)
    sample_at = 1  # index 0 holds the step-0 snapshot of the all-zero table

    triggers = 0
    satisfactions = 0
    log: list[tuple] | None = [] if record_steps else None

    for t in range(1, config.steps_per_trial + 1):
        if config.curiosity_enabled:
            triggered = maybe_trigger(
                state, pos, layout, rng,
                form=config.temp_value_form, gamma=params.gamma,
            )
            if triggered is not state:
                triggers += 1
                state = triggered
        action = select_action(values, state, pos, layout, params, rng)
        nxt = step(layout, pos, action)
        temp_at_pos = temp_value(state, pos)
        delta = td_update(values, pos, nxt, 0.0, temp_at_pos, params)
        if log is not None:
            log.append(
                (t, pos.row, pos.col, ACTIONS.index(action),
                 temp_at_pos, delta, float(state.is_curious))
            )
        satisfied = maybe_satisfy(state, nxt)
        if satisfied is not state:
            satisfactions += 1
            state = satisfied
        pos = nxt
        if t % config.snapshot_every == 0:
            s_steps[sample_at] = t
            s_inducing[sample_at] = values[layout.inducing]
            s_satisfying[sample_at] = values[sat_rows, sat_cols].mean()
            sample_at += 1

    assert sample_at == n_samples
    assert satisfactions <= triggers <= satisfactions + 1
    return TrialResult(
        trial_index=trial_index,
        seed=seed,
        final_values=values,
        series_steps=s_steps,
        series_inducing=s_inducing,
        series_satisfying=s_satisfying,
        trigger_count=triggers,
        satisfaction_count=satisfactions,
        step_log=np.array(log, dtype=np.float64) if log is not None else None,
    )


def _run_trial_job(job: tuple[ExperimentConfig, int, bool]) -> TrialResult:
    config, trial_index, record_steps = job
    return run_trial(config, trial_index, record_steps)


def run_experiment(
    config: ExperimentConfig,
    parallel: bool = False,
    max_workers: int | None = None,
    record_steps: bool = False,
) -> ExperimentResult:
    """Run all trials and aggregate.

    Trials are independent; with parallel=True they run in a process pool.
    The aggregate is identical either way because each trial depends only on
    (config, trial_index) and the fold is ordered by index.
    """
    if parallel:
        jobs = [(config, i, record_steps) for i in range(config.trials)]
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(_run_trial_job, jobs))
    else:
        results = [run_trial(config, i, record_steps) for i in range(config.trials)]
    return aggregate(results, config)


def aggregate(results: list[TrialResult], config: ExperimentConfig) -> ExperimentResult:
    """Per-cell and per-step mean and population std over trials.

    Results are sorted by trial index before stacking so the floating-point
    outcome does not depend on arrival order.
    """
    if not results:
        raise ValueError("no trial results to aggregate")
    if len(results) != config.trials:
        raise ValueError(f"expected {config.trials} trial results, got {len(results)}")
    ordered = sorted(results, key=lambda r: r.trial_index)
    ref_steps = ordered[0].series_steps
    for r in ordered[1:]:
        if not np.array_equal(r.series_steps, ref_steps):
            raise ValueError("trial series were sampled at different steps")
    shape = (config.grid_size, config.grid_size)
    for r in ordered:
        if r.final_values.shape != shape:
            raise ValueError(f"trial {r.trial_index} table has shape {r.final_values.shape}")

    tables = np.stack([r.final_values for r in ordered])
    inducing = np.stack([r.series_inducing for r in ordered])
    satisfying = np.stack([r.series_satisfying for r in ordered])
    return ExperimentResult(
        config=config,
        mean_values=tables.mean(axis=0),
        std_values=tables.std(axis=0),
        series_steps=ref_steps.copy(),
        inducing_mean=inducing.mean(axis=0),
        inducing_std=inducing.std(axis=0),
        satisfying_mean=satisfying.mean(axis=0),
        satisfying_std=satisfying.std(axis=0),
        trials=ordered,
    )
