"""Grid-world testbed for a curiosity-driven learner with dual value
functions: a persistent table that accrues lasting preferences and a
temporary, non-positive table that steers the agent straight to whatever
target its curiosity picked."""

from .agent import (
    LearnerParams,
    greedy_actions,
    select_action,
    td_update,
    zero_value_table,
)
from .curiosity import (
    IDLE,
    TEMP_VALUE_FORMS,
    CuriosityState,
    TempValueTable,
    maybe_satisfy,
    maybe_trigger,
    plan_distance,
    synthesize_temp_values,
    temp_value,
)
from .gridworld import ACTIONS, Action, GridPos, WorldLayout, step, successors
from .harness import (
    ExperimentConfig,
    ExperimentResult,
    TrialResult,
    aggregate,
    run_experiment,
    run_trial,
    trial_seed,
)

__version__ = "0.1.0"

__all__ = [
    "ACTIONS",
    "Action",
    "CuriosityState",
    "ExperimentConfig",
    "ExperimentResult",
    "GridPos",
    "IDLE",
    "LearnerParams",
    "TEMP_VALUE_FORMS",
    "TempValueTable",
    "TrialResult",
    "WorldLayout",
    "aggregate",
    "greedy_actions",
    "maybe_satisfy",
    "maybe_trigger",
    "plan_distance",
    "run_experiment",
    "run_trial",
    "select_action",
    "step",
    "successors",
    "synthesize_temp_values",
    "td_update",
    "temp_value",
    "trial_seed",
    "zero_value_table",
]
