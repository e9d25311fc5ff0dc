"""The 7-state mental-state machine: costs, stimuli, learning, idle drift.

Transition costs derive from counted transitions (cost = 1 - relative
frequency), seeded from the packaged frequency table as 1000
pseudo-observations per row.  A stimulus picks the next state by maximizing
group strength over the cost of reaching that group's target state.
"""

import numpy as np

from mindtour import (
    GroupVector,
    MentalState,
    StateMachine,
    TransitionModel,
    load_transition_table,
)
from mindtour.mental_states import STATE_ORDER, default_group_targets, select_transition


def groups(**kwargs: float) -> GroupVector:
    strengths = [0.0] * 9
    for key, value in kwargs.items():
        strengths[int(key[1:]) - 1] = value
    return GroupVector(tuple(strengths))


table = load_transition_table()
model = TransitionModel.seed_from_table(table)

print("=== seeded costs from the quiet state ===")
for target in STATE_ORDER:
    print(f"quiet -> {target.value:9s} cost {model.cost(MentalState.QUIET, target):.3f}")

print()
print("=== a stimulus picks the cheapest strong group ===")
stimulus = groups(e2=0.8, e7=0.9)
next_state, chosen = select_transition(model, MentalState.QUIET, stimulus, default_group_targets())
print(f"e2=0.8 (joy-ish) vs e7=0.9 (anger-ish) from quiet -> {next_state.value} via group {chosen}")
print("anger is stronger, but reaching angry from quiet is much more costly")

print()
print("=== learning: observed transitions get cheaper ===")
learner = model.copy()
before = learner.cost(MentalState.QUIET, MentalState.SAD)
for _ in range(300):
    learner.observe(MentalState.QUIET, MentalState.SAD)
after = learner.cost(MentalState.QUIET, MentalState.SAD)
print(f"cost(quiet->sad): {before:.3f} -> {after:.3f} after 300 observations")

print()
print("=== idle drift ===")
machine = StateMachine(model.copy(), current=MentalState.SURPRISE)
path = [machine.current.value]
for _ in range(4):
    path.append(machine.idle_tick().value)
print("deterministic:", " -> ".join(path))

machine = StateMachine(model.copy(), current=MentalState.SURPRISE,
                       idle_mode="stochastic", seed=7)
path = [machine.current.value]
for _ in range(8):
    path.append(machine.idle_tick().value)
print("stochastic(seed=7):", " -> ".join(path))
print("(the same seed always walks the same path)")

print()
print("=== the full seeded probability matrix ===")
with np.printoptions(precision=3, suppress=True):
    print(model.probabilities())
