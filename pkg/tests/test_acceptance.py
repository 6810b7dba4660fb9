"""Acceptance suite: one test per exit criterion, each printing a PASS or
FAIL line (run with `pytest tests/test_acceptance.py -v -s` to see every
line; without -s the lines surface for failing criteria only).

The default experiment is the standard configuration: 11x11 grid, 30 trials
of 5000 steps, gamma 0.9, alpha 0.1, epsilon 0.1, base seed 0, trial seeds
derived by the documented splitmix64 mix.
"""
from dataclasses import replace

import numpy as np
import pytest

from curiogrid.agent import greedy_actions, select_action, zero_value_table
from curiogrid.cli import EmitOptions, emit_outputs
from curiogrid.curiosity import (
    IDLE,
    CuriosityState,
    maybe_trigger,
    plan_distance,
    synthesize_temp_values,
)
from curiogrid.gridworld import ACTIONS, GridPos, step
from curiogrid.harness import ExperimentConfig, run_experiment, run_trial


def forward_search_distance(layout, start, target):
    """Independent oracle: forward breadth-first search only."""
    if start == target:
        return 0
    seen = {start}
    frontier = [start]
    dist = 0
    while frontier:
        dist += 1
        nxt_frontier = []
        for pos in frontier:
            for action in ACTIONS:
                nxt = step(layout, pos, action)
                if nxt == target:
                    return dist
                if nxt not in seen:
                    seen.add(nxt)
                    nxt_frontier.append(nxt)
        frontier = nxt_frontier
    raise AssertionError(f"{target} unreachable from {start}")


def report(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {number}: {name}"
    if detail:
        line += f" -- {detail}"
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def default_config():
    return ExperimentConfig()


@pytest.fixture(scope="module")
def default_result(default_config):
    return run_experiment(default_config)


def test_criterion_1_voluntary_exposure(default_result):
    layout = default_result.config.layout()
    mean_v = default_result.mean_values
    flat_top = np.unravel_index(np.argmax(mean_v), mean_v.shape)
    top = GridPos(int(flat_top[0]), int(flat_top[1]))
    unique = int((mean_v == mean_v[top]).sum()) == 1
    ok = top == layout.inducing and unique
    report(1, "unique argmax of mean_V is the inducing cell", ok,
           f"argmax={tuple(top)}, value={mean_v[top]:.6f}, unique={unique}")


def test_criterion_2_cessation(default_result):
    layout = default_result.config.layout()
    mean_v = default_result.mean_values
    inducing = float(mean_v[layout.inducing])
    satisfying = float(np.mean([mean_v[p] for p in layout.satisfying]))
    ratio_ok = satisfying < 0.25 * inducing
    mask = default_result.series_steps > 500
    series_ok = bool(
        (default_result.satisfying_mean[mask] < default_result.inducing_mean[mask]).all()
    )
    ok = ratio_ok and series_ok
    report(2, "satisfying cells accrue under a quarter of the inducing value", ok,
           f"satisfying_mean={satisfying:.4f} vs 0.25*inducing={0.25 * inducing:.4f} "
           f"(ratio {satisfying / inducing:.4f}); series ordering beyond step 500: {series_ok}")


def test_criterion_3_trail_of_increasing_value(default_result):
    layout = default_result.config.layout()
    mean_v = default_result.mean_values
    limit = 2 * forward_search_distance(layout, layout.teleport_dest, layout.inducing)
    ok = True
    detail = f"all greedy branches reach {tuple(layout.inducing)} within {limit} moves, never decreasing"
    seen = set()
    stack = [(layout.teleport_dest, 0)]
    while stack:
        cur, depth = stack.pop()
        if cur == layout.inducing:
            continue
        if depth >= limit:
            ok = False
            detail = f"a greedy branch exceeds {limit} moves without reaching the inducing cell"
            break
        for action in greedy_actions(lambda p: mean_v[p], cur, layout):
            nxt = step(layout, cur, action)
            if mean_v[nxt] < mean_v[cur]:
                ok = False
                detail = (f"mean_V drops on the greedy hop {tuple(cur)} -> {tuple(nxt)}: "
                          f"{mean_v[cur]:.4f} -> {mean_v[nxt]:.4f}")
                break
            if (nxt, depth + 1) not in seen:
                seen.add((nxt, depth + 1))
                stack.append((nxt, depth + 1))
        if not ok:
            break
    report(3, "non-decreasing greedy trail from the teleport cell to the inducing cell", ok, detail)


def test_criterion_4_directedness_oracle(default_config):
    layout = default_config.layout()
    params = default_config.params
    rng = np.random.default_rng(99)
    values = zero_value_table(layout.size)
    failures = []
    checks = 0
    for target in layout.satisfying:
        dist = plan_distance(layout, target)
        state = CuriosityState(target=target, temp=synthesize_temp_values(layout, target))
        for start in layout.cells():
            checks += 1
            if dist[start] != forward_search_distance(layout, start, target):
                failures.append(f"planner != oracle at {tuple(start)} for {tuple(target)}")
                continue
            pos = start
            taken = 0
            while pos != target and taken <= dist[start]:
                pos = step(layout, pos, select_action(values, state, pos, layout, params, rng))
                taken += 1
            if pos != target or taken != dist[start]:
                failures.append(f"pursuit from {tuple(start)} to {tuple(target)} took {taken}, planned {dist[start]}")
    ok = not failures and checks == len(layout.satisfying) * layout.size**2
    report(4, "pursuit length equals planned distance; planner matches the oracle", ok,
           f"{checks} start/target pairs" + (f"; first failure: {failures[0]}" if failures else ""))


def test_criterion_5_td_reduction(default_config):
    config = replace(default_config, curiosity_enabled=False)
    worst_delta = 0.0
    all_zero = True
    updates = 0
    for trial in range(config.trials):
        result = run_trial(config, trial, record_steps=True)
        deltas = result.step_log[:, 5]
        updates += len(deltas)
        worst_delta = max(worst_delta, float(np.abs(deltas).max()))
        all_zero = all_zero and bool((result.final_values == 0.0).all())
    ok = worst_delta == 0.0 and all_zero and updates == config.trials * config.steps_per_trial
    report(5, "curiosity disabled: every delta is 0 and V stays bitwise zero", ok,
           f"{updates} updates, max |delta| = {worst_delta}")


def test_criterion_6_first_update_arithmetic(default_config):
    config = replace(default_config, steps_per_trial=1, trials=1)
    result = run_trial(config, 0, record_steps=True)
    delta = float(result.step_log[0, 5])
    v_centre = float(result.final_values[5, 5])
    ok = delta == 4.0 and v_centre == 0.4
    report(6, "first curious update: delta exactly 4, V(5,5) exactly 0.4", ok,
           f"delta={delta!r}, V(5,5)={v_centre!r}")


def test_criterion_7_temp_table_invariants(default_config):
    layout = default_config.layout()
    bad = []
    for target in layout.satisfying:
        table = synthesize_temp_values(layout, target).values
        zeros = np.argwhere(table == 0.0)
        if not (table <= 0.0).all() or zeros.shape != (1, 2) or GridPos(*zeros[0]) != target:
            bad.append(tuple(target))
    ok = not bad
    report(7, "every temp table is non-positive with its lone zero at the target", ok,
           f"{len(layout.satisfying)} targets checked" + (f"; bad: {bad}" if bad else ""))


def test_criterion_8_trigger_distribution(default_config):
    layout = default_config.layout()
    rng = np.random.default_rng(424242)
    n = 9000
    counts = {t: 0 for t in layout.satisfying}
    for _ in range(n):
        state = maybe_trigger(IDLE, layout.inducing, layout, rng)
        counts[state.target] += 1
    p = 1.0 / len(layout.satisfying)
    sigma = (p * (1 - p) / n) ** 0.5
    deviations = {t: abs(c / n - p) / sigma for t, c in counts.items()}
    worst = max(deviations.values())
    ok = worst <= 4.0
    report(8, "9000 seeded triggers hit each target within 4 sigma of 1/9", ok,
           f"worst deviation {worst:.2f} sigma")


def test_criterion_9_reproducibility(default_config, default_result, tmp_path):
    second = run_experiment(default_config)
    emit_outputs(default_result, EmitOptions(out_dir=tmp_path / "a"))
    emit_outputs(second, EmitOptions(out_dir=tmp_path / "b"))
    byte_identical = all(
        (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
        for name in ("values_mean.csv", "series.csv", "config_echo.json")
    )

    parallel = run_experiment(default_config, parallel=True, max_workers=4)
    arrays_equal = all((
        np.array_equal(default_result.mean_values, parallel.mean_values),
        np.array_equal(default_result.std_values, parallel.std_values),
        np.array_equal(default_result.series_steps, parallel.series_steps),
        np.array_equal(default_result.inducing_mean, parallel.inducing_mean),
        np.array_equal(default_result.inducing_std, parallel.inducing_std),
        np.array_equal(default_result.satisfying_mean, parallel.satisfying_mean),
        np.array_equal(default_result.satisfying_std, parallel.satisfying_std),
    ))
    ok = byte_identical and arrays_equal
    report(9, "reruns byte-identical; sequential and parallel agree bitwise", ok,
           f"files identical: {byte_identical}, parallel arrays identical: {arrays_equal}")
