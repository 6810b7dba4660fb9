"""Hard-coded curiosity state machine.

A visit to the inducing cell samples one of the satisfying cells as a
target, with equal probability, and builds a short-lived non-positive value
table whose greedy ascent walks straight to that target. Reaching the
target discards the table; nothing of it persists. While idle the effective
temporary value of every cell is zero.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gridworld import GridPos, WorldLayout, successors

TEMP_VALUE_FORMS = ("negative-distance", "discounted")


@lru_cache(maxsize=None)
def _distance_field(layout: WorldLayout, target: GridPos) -> np.ndarray:
    """Moves-to-target for every cell: breadth-first search from the target
    over the reversed transition graph. Cached per (layout, target) and
    returned read-only; callers must not mutate it."""
    preds: dict[GridPos, list[GridPos]] = {}
    for pos in layout.cells():
        for _, nxt in successors(layout, pos):
            preds.setdefault(nxt, []).append(pos)
    dist = np.full((layout.size, layout.size), -1, dtype=np.int64)
    dist[target] = 0
    queue = deque([target])
    while queue:
        cell = queue.popleft()
        for prev in preds.get(cell, ()):
            if dist[prev] < 0:
                dist[prev] = dist[cell] + 1
                queue.append(prev)
    # every cell reaches every other on this grid (sideways, up, teleport)
    assert (dist >= 0).all()
    dist.setflags(write=False)
    return dist


def plan_distance(layout: WorldLayout, target: GridPos) -> np.ndarray:
    """Minimal number of moves from each cell to target, as an int grid.

    dist[target] is 0 and all entries are finite. Returns a fresh writable
    array each call.
    """
    target = GridPos(*target)
    if not layout.in_bounds(target):
        raise ValueError(f"target {target} outside the {layout.size}x{layout.size} grid")
    return np.array(_distance_field(layout, target))


@dataclass(frozen=True, eq=False)
class TempValueTable:
    """Temporary value table for one pursuit: zero at the pursued target and
    strictly negative everywhere else, so its one-step greedy ascent is the
    direct plan to the target. The array is read-only."""

    values: np.ndarray

    def value_at(self, pos: GridPos) -> float:
        return float(self.values[pos])


def synthesize_temp_values(
    layout: WorldLayout,
    target: GridPos,
    form: str = "negative-distance",
    gamma: float = 0.9,
) -> TempValueTable:
    """Build the temporary value table that guides pursuit of target.

    "negative-distance" assigns minus the number of moves to the target.
    "discounted" assigns the discounted return of one unit of cost per move
    with the target absorbing, -(1 - gamma**d) / (1 - gamma); it is a
    strictly decreasing transform of distance, so both forms rank
    successors identically. A target outside layout.satisfying signals a
    configuration bug and is rejected.
    """
    target = GridPos(*target)
    if target not in layout.satisfying:
        raise ValueError(f"target {target} is not one of the satisfying cells")
    if form not in TEMP_VALUE_FORMS:
        raise ValueError(f"unknown temp value form {form!r}")
    dist = _distance_field(layout, target).astype(np.float64)
    if form == "negative-distance":
        values = -dist
    else:
        if not 0.0 < gamma < 1.0:
            raise ValueError("discounted temp values need gamma in (0, 1)")
        values = -(1.0 - gamma**dist) / (1.0 - gamma)
    values.setflags(write=False)
    return TempValueTable(values=values)


@dataclass(frozen=True, eq=False)
class CuriosityState:
    """Either idle (both fields None) or pursuing a sampled target."""

    target: GridPos | None = None
    temp: TempValueTable | None = None

    def __post_init__(self) -> None:
        if (self.target is None) != (self.temp is None):
            raise ValueError("target and temp must be set together")

    @property
    def is_curious(self) -> bool:
        return self.target is not None


IDLE = CuriosityState()


def maybe_trigger(
    state: CuriosityState,
    pos: GridPos,
    layout: WorldLayout,
    rng: np.random.Generator,
    form: str = "negative-distance",
    gamma: float = 0.9,
) -> CuriosityState:
    """Idle at the inducing cell: sample a target uniformly from the
    satisfying cells (exactly one rng draw) and start pursuing it. Any other
    situation, including an already-active pursuit, returns state unchanged
    without touching the rng."""
    if state.is_curious or pos != layout.inducing:
        return state
    target = layout.satisfying[rng.integers(len(layout.satisfying))]
    return CuriosityState(
        target=target,
        temp=synthesize_temp_values(layout, target, form=form, gamma=gamma),
    )


def maybe_satisfy(state: CuriosityState, pos: GridPos) -> CuriosityState:
    """Pursuit ends the moment the agent stands on its target; the temporary
    table is dropped. Otherwise the state passes through unchanged."""
    if state.is_curious and pos == state.target:
        return IDLE
    return state


def temp_value(state: CuriosityState, pos: GridPos) -> float:
    """Effective temporary value at pos: 0 while idle, never positive."""
    if not state.is_curious:
        return 0.0
    return state.temp.value_at(pos)
