"""The full experiment: 30 independently seeded trials of 5000 steps.

Three things to look for in the aggregate:

1. The curiosity-inducing centre ends up the single most valuable cell,
   even though the world never pays any reward. The learner has acquired an
   enduring preference for the place that piques its curiosity.
2. A trail of value leads from the teleport landing cell up toward the
   centre, because the idle policy keeps riding it back there.
3. The satisfying cells themselves stay comparatively flat: once visited,
   a target holds no further attraction, so they only pick up what plain
   value bootstrapping leaks onto them.
"""
import numpy as np

from curiogrid import ExperimentConfig, run_experiment
from curiogrid.cli import EmitOptions, emit_outputs

config = ExperimentConfig()  # 11x11, 5000 steps, 30 trials, seed base 0
print(f"running {config.trials} trials of {config.steps_per_trial} steps ...")
result = run_experiment(config)

layout = config.layout()
mean_v = result.mean_values
print("\nmean persistent value over 30 trials:\n")
for row in mean_v:
    print("  " + " ".join(f"{v:5.2f}" for v in row))

top = np.unravel_index(np.argmax(mean_v), mean_v.shape)
inducing = mean_v[layout.inducing]
satisfying = float(np.mean([mean_v[p] for p in layout.satisfying]))
print(f"\nmost valuable cell: {tuple(int(i) for i in top)} (the inducing cell is {tuple(layout.inducing)})")
print(f"inducing value: {inducing:.3f}")
print(f"mean over satisfying cells: {satisfying:.3f} ({satisfying / inducing:.0%} of the inducing value)")

col = layout.inducing.col
trail = " -> ".join(f"{mean_v[r, col]:.2f}" for r in range(layout.size - 1, layout.inducing.row - 1, -1))
print(f"\nvalue along the return column, teleport landing up to the centre:\n  {trail}")

half = len(result.series_steps) // 2
print("\ntracked series (mean over trials):")
for k in (0, half, -1):
    print(f"  step {int(result.series_steps[k]):5d}: "
          f"inducing {result.inducing_mean[k]:6.3f}  "
          f"satisfying {result.satisfying_mean[k]:6.3f}")

out = emit_outputs(result, EmitOptions(out_dir="demo_out", emit_heatmap=True))
print("\nwrote the data products of this run:")
for path in out.files:
    print(f"  {path}")
