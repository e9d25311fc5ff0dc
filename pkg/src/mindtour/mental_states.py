"""Seven-state mental-state machine with learnable transition costs.

The machine keeps a 7x7 matrix of transition counts.  The cost of moving from
state i to state j is one minus the relative frequency of that transition in
row i, so frequently observed transitions become cheap.  A stimulus (the
9-group emotion vector) picks the next state by maximizing group strength
divided by the cost of reaching that group's target state; without stimulus
the state drifts along the seeded row distribution.
"""

from __future__ import annotations

import math
from enum import Enum
from pathlib import Path

import numpy as np

from .assets import TRANSITION_TABLE, data_path
from .config import DEFAULT_GROUP_TARGETS, EngineConfig
from .elicitation import GroupVector


class RowSumError(ValueError):
    """A seeded probability row departs from 1.0 by more than the tolerance."""


class ZeroStimulusError(ValueError):
    """apply_stimulus called with an all-zero group vector (use idle_tick)."""


class MentalState(str, Enum):
    HAPPY = "happy"
    QUIET = "quiet"
    SAD = "sad"
    SURPRISE = "surprise"
    ANGRY = "angry"
    FEAR = "fear"
    DISGUST = "disgust"


#: Canonical row/column order of the transition matrix.
STATE_ORDER: tuple[MentalState, ...] = (
    MentalState.HAPPY,
    MentalState.QUIET,
    MentalState.SAD,
    MentalState.SURPRISE,
    MentalState.ANGRY,
    MentalState.FEAR,
    MentalState.DISGUST,
)

STATE_INDEX: dict[MentalState, int] = {state: i for i, state in enumerate(STATE_ORDER)}

N_STATES = len(STATE_ORDER)

#: Printed probability rows may carry rounding error up to this much.
ROW_SUM_TOLERANCE = 0.01

#: Seeding strength: how many pseudo-observations each probability row is worth.
SEED_PSEUDO_OBSERVATIONS = 1000.0


class TransitionModel:
    """Transition counts plus the derived cost/probability views."""

    def __init__(self, counts: np.ndarray) -> None:
        counts = np.asarray(counts, dtype=float)
        if counts.shape != (N_STATES, N_STATES):
            raise ValueError(f"counts must be {N_STATES}x{N_STATES}")
        if (counts < 0).any():
            raise ValueError("counts must be non-negative")
        if (counts.sum(axis=1) <= 0).any():
            raise ValueError("every row needs a positive count sum")
        self.counts = counts

    @classmethod
    def seed_from_table(cls, probabilities: np.ndarray) -> "TransitionModel":
        """Turn a row-stochastic table (within printed rounding) into counts.

        Each cell becomes ``probability x SEED_PSEUDO_OBSERVATIONS`` counts;
        the row's rounding residue (printed rows sum to 1.0 only within
        +/- 0.01) is folded into the self-loop cell so that every row totals
        exactly the pseudo-observation count.  Off-diagonal seeded costs are
        then exactly 1 - p(i,j).
        """
        probabilities = np.asarray(probabilities, dtype=float)
        if probabilities.shape != (N_STATES, N_STATES):
            raise ValueError(f"probability table must be {N_STATES}x{N_STATES}")
        if ((probabilities < 0) | (probabilities > 1)).any():
            raise ValueError("probabilities must lie in [0, 1]")
        row_sums = probabilities.sum(axis=1)
        for i, total in enumerate(row_sums):
            if abs(total - 1.0) > ROW_SUM_TOLERANCE:
                raise RowSumError(
                    f"row {STATE_ORDER[i].value!r} sums to {total:.4f}, "
                    f"outside 1.0 +/- {ROW_SUM_TOLERANCE}"
                )
        counts = probabilities * SEED_PSEUDO_OBSERVATIONS
        counts[np.diag_indices(N_STATES)] += (1.0 - row_sums) * SEED_PSEUDO_OBSERVATIONS
        return cls(counts)

    def probabilities(self) -> np.ndarray:
        return self.counts / self.counts.sum(axis=1, keepdims=True)

    def costs(self) -> np.ndarray:
        return 1.0 - self.probabilities()

    def cost(self, source: MentalState, target: MentalState) -> float:
        row = self.counts[STATE_INDEX[source]]
        return 1.0 - row[STATE_INDEX[target]] / row.sum()

    def observe(self, source: MentalState, target: MentalState) -> None:
        """Record one observed transition; only row ``source`` changes."""
        self.counts[STATE_INDEX[source], STATE_INDEX[target]] += 1.0

    def copy(self) -> "TransitionModel":
        return TransitionModel(self.counts.copy())


def load_transition_table(path: str | Path | None = None) -> np.ndarray:
    """Read the transition-table asset: header line, then one labeled row per
    state, whitespace-separated decimal text."""
    path = Path(path) if path is not None else data_path(TRANSITION_TABLE)
    rows: dict[str, list[float]] = {}
    header: list[str] | None = None
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if header is None:
                header = parts
                continue
            label, values = parts[0], parts[1:]
            rows[label] = [float(v) for v in values]
    expected = [state.value for state in STATE_ORDER]
    if header != expected:
        raise ValueError(f"transition table columns must be {expected}, got {header}")
    if sorted(rows) != sorted(expected):
        raise ValueError(f"transition table rows must be {expected}, got {sorted(rows)}")
    if any(len(values) != N_STATES for values in rows.values()):
        raise ValueError("every transition row needs 7 values")
    return np.array([rows[state.value] for state in STATE_ORDER], dtype=float)


def select_transition(
    model: TransitionModel,
    current: MentalState,
    groups: GroupVector,
    targets: dict[int, MentalState],
) -> tuple[MentalState, int]:
    """Pick (next state, winning group) for a stimulus, without mutating.

    The winner maximizes e_k / cost(current, target_k) over groups with
    positive strength.  A zero cost counts as an infinite ratio.  Ties go to
    the lowest group index.
    """
    if groups.is_zero:
        raise ZeroStimulusError("all nine group strengths are zero")
    best_group = 0
    best_ratio = -math.inf
    for k in range(1, 10):
        strength = groups.strength(k)
        if strength <= 0.0:
            continue
        cost = model.cost(current, targets[k])
        ratio = math.inf if cost == 0.0 else strength / cost
        if ratio > best_ratio:
            best_ratio = ratio
            best_group = k
    return targets[best_group], best_group


class StateMachine:
    """Per-session mental state: current state, model, drift generator."""

    def __init__(
        self,
        model: TransitionModel,
        current: MentalState = MentalState.QUIET,
        group_targets: dict[int, MentalState] | None = None,
        idle_mode: str = "deterministic",
        learn: bool = True,
        seed: int = 0,
    ) -> None:
        if group_targets is None:
            group_targets = default_group_targets()
        if sorted(group_targets) != list(range(1, 10)):
            raise ValueError("group_targets must cover exactly groups 1..9")
        self.model = model
        self.current = current
        self.group_targets = dict(group_targets)
        self.idle_mode = idle_mode
        self.learn = learn
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    @classmethod
    def from_config(cls, config: EngineConfig) -> "StateMachine":
        table = load_transition_table(
            data_path(TRANSITION_TABLE, config.data_dir) if config.data_dir else None
        )
        targets = {k: MentalState(v) for k, v in config.group_targets.items()}
        return cls(
            TransitionModel.seed_from_table(table),
            group_targets=targets,
            idle_mode=config.idle_mode,
            learn=config.learn_from_stimuli,
            seed=config.seed,
        )

    def apply_stimulus(self, groups: GroupVector) -> tuple[MentalState, int]:
        """Transition on a non-zero group vector; returns (next, group)."""
        next_state, chosen_group = select_transition(
            self.model, self.current, groups, self.group_targets
        )
        if self.learn:
            self.model.observe(self.current, next_state)
        self.current = next_state
        return next_state, chosen_group

    def idle_tick(self) -> MentalState:
        """Drift without stimulus along the current row's distribution."""
        row = self.model.probabilities()[STATE_INDEX[self.current]]
        if self.idle_mode == "stochastic":
            index = int(self.rng.choice(N_STATES, p=row / row.sum()))
        else:
            index = int(np.argmax(row))
        self.current = STATE_ORDER[index]
        return self.current


def default_group_targets() -> dict[int, MentalState]:
    return {k: MentalState(v) for k, v in DEFAULT_GROUP_TARGETS.items()}
