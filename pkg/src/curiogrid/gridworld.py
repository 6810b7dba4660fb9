"""Deterministic grid dynamics: sideways and upward moves (including
diagonals), column clamping at the side edges, and a top-row teleport back
to the middle of the bottom row.

Coordinates are (row, col) with row 0 at the top and col 0 at the left.
The world is non-episodic: no terminal cells, no reward anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, NamedTuple


class GridPos(NamedTuple):
    row: int
    col: int


class Action(Enum):
    """The five moves. There is no downward and no stay-in-place action."""

    LEFT = (0, -1)
    RIGHT = (0, 1)
    UP = (-1, 0)
    UP_LEFT = (-1, -1)
    UP_RIGHT = (-1, 1)

    @property
    def delta(self) -> tuple[int, int]:
        return self.value


# Fixed enumeration order used everywhere ties or lookahead lists are built.
ACTIONS: tuple[Action, ...] = tuple(Action)
UPWARD: frozenset[Action] = frozenset({Action.UP, Action.UP_LEFT, Action.UP_RIGHT})


@dataclass(frozen=True)
class WorldLayout:
    """Square grid with one curiosity-inducing cell at the exact centre, a
    row of candidate satisfying cells, and the teleport landing cell.

    size must be odd and at least 5 so the centre exists and the satisfying
    row (the non-edge cells of row 1) stays clear of it. The derived fields
    are computed at construction and the instance is immutable, so a layout
    can be shared freely across concurrent trial runners.
    """

    size: int = 11
    inducing: GridPos = field(init=False)
    satisfying: tuple[GridPos, ...] = field(init=False)
    teleport_dest: GridPos = field(init=False)

    def __post_init__(self) -> None:
        if self.size < 5 or self.size % 2 == 0:
            raise ValueError(
                f"grid size must be an odd integer >= 5, got {self.size}"
            )
        centre = self.size // 2
        object.__setattr__(self, "inducing", GridPos(centre, centre))
        object.__setattr__(
            self,
            "satisfying",
            tuple(GridPos(1, c) for c in range(1, self.size - 1)),
        )
        object.__setattr__(self, "teleport_dest", GridPos(self.size - 1, centre))
        assert self.inducing not in self.satisfying

    def in_bounds(self, pos: GridPos) -> bool:
        return 0 <= pos[0] < self.size and 0 <= pos[1] < self.size

    def cells(self) -> Iterator[GridPos]:
        for row in range(self.size):
            for col in range(self.size):
                yield GridPos(row, col)


def step(layout: WorldLayout, pos: GridPos, action: Action) -> GridPos:
    """Successor of pos under action. Total and deterministic.

    Any upward action taken from the top row teleports to
    layout.teleport_dest (the column component of a diagonal is ignored).
    Otherwise the move deltas apply and the column clamps into the grid, so
    sideways pressure against a side edge leaves the column in place while
    the row component of a diagonal still applies.
    """
    row, col = pos
    if row == 0 and action in UPWARD:
        return layout.teleport_dest
    d_row, d_col = action.delta
    new_col = col + d_col
    if new_col < 0:
        new_col = 0
    elif new_col >= layout.size:
        new_col = layout.size - 1
    return GridPos(row + d_row, new_col)


def successors(layout: WorldLayout, pos: GridPos) -> list[tuple[Action, GridPos]]:
    """One (action, successor) pair per action, in the fixed ACTIONS order."""
    return [(action, step(layout, pos, action)) for action in ACTIONS]
