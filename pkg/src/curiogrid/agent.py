"""Dual-value-function learner.

One persistent value table is updated on every transition by a TD(0) rule
that additionally subtracts the temporary curiosity value at the departed
cell. The temporary value is never positive, so an active pursuit inflates
the error and deposits lasting value along the way; while idle the rule is
exactly tabular TD(0). Action selection is epsilon-greedy on the persistent
table while idle and purely greedy on the temporary table while curious,
using one-step lookahead through the known dynamics.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .curiosity import CuriosityState
from .gridworld import ACTIONS, Action, GridPos, WorldLayout, successors


@dataclass(frozen=True)
class LearnerParams:
    gamma: float = 0.9
    alpha: float = 0.1
    epsilon: float = 0.1

    def __post_init__(self) -> None:
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError(f"gamma must be in [0, 1), got {self.gamma}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must be in [0, 1], got {self.epsilon}")


def zero_value_table(size: int) -> np.ndarray:
    """Fresh persistent value table, one float per cell, all zeros."""
    return np.zeros((size, size), dtype=np.float64)


def td_update(
    values: np.ndarray,
    x: GridPos,
    x_next: GridPos,
    reward: float,
    temp_at_x: float,
    params: LearnerParams,
) -> float:
    """Apply one update to values[x] in place and return the error delta.

    delta = reward + gamma * V(x') - (V(x) + temp_at_x)

    temp_at_x is expected to be non-positive. With temp_at_x == 0 this is
    exactly standard tabular TD(0).
    """
    delta = reward + params.gamma * values[x_next] - (values[x] + temp_at_x)
    values[x] += params.alpha * delta
    if not np.isfinite(values[x]):
        raise FloatingPointError(f"persistent value diverged at {tuple(x)}")
    return float(delta)


def greedy_actions(
    valuation: Callable[[GridPos], float],
    pos: GridPos,
    layout: WorldLayout,
) -> list[Action]:
    """Actions whose one-step successor attains the best valuation.

    Never empty; ties are kept in the fixed ACTIONS order. Actions mapping
    to the same successor (the teleport from the top row) tie together.
    """
    pairs = successors(layout, pos)
    vals = [valuation(nxt) for _, nxt in pairs]
    best = max(vals)
    return [pairs[i][0] for i, v in enumerate(vals) if v == best]


def select_action(
    values: np.ndarray,
    curiosity: CuriosityState,
    pos: GridPos,
    layout: WorldLayout,
    params: LearnerParams,
    rng: np.random.Generator,
) -> Action:
    """Pick the next move.

    Curious: a uniform draw among the actions greedy on the temporary table;
    no epsilon exploration, pursuit stays on the direct plan. Idle: with
    probability epsilon a uniform random action, otherwise a uniform draw
    among the actions greedy on the persistent table. The rng is consumed in
    a fixed order (idle mode branch first, then the tie-break draw) so runs
    replay exactly from a seed.
    """
    if curiosity.is_curious:
        choices = greedy_actions(curiosity.temp.value_at, pos, layout)
        return choices[rng.integers(len(choices))]
    if rng.random() < params.epsilon:
        return ACTIONS[rng.integers(len(ACTIONS))]
    choices = greedy_actions(lambda nxt: values[nxt], pos, layout)
    return choices[rng.integers(len(choices))]
