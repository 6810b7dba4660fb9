"""Tour of the grid world and the pursuit planner.

The world is a square grid the agent can only cross sideways or upward
(diagonals included). Sideways pressure against the left or right edge
leaves the column in place, and any upward move out of the top row
teleports the agent to the middle of the bottom row, so the world has no
dead ends: everything is reachable from everywhere.

The centre cell piques curiosity. The non-edge cells of row 1 are the
candidate targets that can satisfy it, and the planner turns any one of
them into a temporary value table: zero on the target, minus the number of
moves everywhere else. Climbing that table greedily is the direct plan.
"""
import numpy as np

from curiogrid import Action, GridPos, WorldLayout, plan_distance, step, synthesize_temp_values

layout = WorldLayout(11)

print("The board (I = curiosity-inducing, S = satisfying candidates, T = teleport landing):\n")
for row in range(layout.size):
    cells = []
    for col in range(layout.size):
        pos = GridPos(row, col)
        if pos == layout.inducing:
            cells.append("I")
        elif pos in layout.satisfying:
            cells.append("S")
        elif pos == layout.teleport_dest:
            cells.append("T")
        else:
            cells.append(".")
    print("   " + " ".join(cells))

print("\nMoves are deterministic:")
print("  from (5,5), UP_RIGHT ->", tuple(step(layout, GridPos(5, 5), Action.UP_RIGHT)))
print("  from (3,0), LEFT     ->", tuple(step(layout, GridPos(3, 0), Action.LEFT)), "(column clamps at the edge)")
print("  from (0,7), UP       ->", tuple(step(layout, GridPos(0, 7), Action.UP)), "(top row teleports)")

target = GridPos(1, 5)
print(f"\nPlanned distance to the target {tuple(target)} from every cell:\n")
dist = plan_distance(layout, target)
for row in dist:
    print("   " + " ".join(f"{int(v):2d}" for v in row))

print("\nThe same field negated is the temporary value table V_temp that steers")
print("pursuit: its one and only zero sits on the target, and every greedy")
print("step up the table is one move of the shortest path.\n")
temp = synthesize_temp_values(layout, target)
for row in temp.values:
    print("   " + " ".join(f"{int(v):3d}" for v in row))

print("\nNote the top row: moving up from there teleports to the bottom, so the")
print("cheapest route back to the target from row 0 runs through the teleport,")
print("which is why row 0 sits at distance", int(dist[0, 5]), "rather than 1.")
