"""Engine configuration: tunables shared by the library, CLI and service.

Values load from a JSON file and may be overridden per-key through
``MINDTOUR_*`` environment variables (e.g. ``MINDTOUR_BETA=0.4``,
``MINDTOUR_IDLE_MODE=stochastic``).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

#: Dummy second-axis value used when an event type defines no second element.
DEFAULT_BETA = 0.5

#: Smoothing weight for the running 6-feeling user profile.
DEFAULT_ALPHA = 0.5

#: Emotion-group -> mental-state assignment used by the transition step.
#: Shipped as a declared default; override via config file when a different
#: wiring is wanted.
DEFAULT_GROUP_TARGETS: dict[int, str] = {
    1: "happy",
    2: "happy",
    3: "sad",
    4: "sad",
    5: "sad",
    6: "disgust",
    7: "angry",
    8: "fear",
    9: "surprise",
}

INTENSITY_METRICS = ("geometric", "rms")
IDLE_MODES = ("deterministic", "stochastic")
DISTANCE_METRICS = ("euclidean", "cosine")


@dataclass(frozen=True)
class EngineConfig:
    beta: float = DEFAULT_BETA
    alpha: float = DEFAULT_ALPHA
    #: "geometric": cube root of |f1*f2*f3| (zero exactly on-axis);
    #: "rms": root mean square of the three components.
    intensity_metric: str = "geometric"
    #: Two-argument verb events list two possible axis readings; the default
    #: puts the subject on the first axis, the alternative puts the object
    #: there with the dummy value on the second axis.
    object_axis_reading: bool = False
    #: The mutual-exchange three-argument row assigns the object value to the
    #: third axis as printed; set True to use the predicate value instead.
    mutual_predicate_axis: bool = False
    idle_mode: str = "deterministic"
    #: Whether stimulus-driven transitions are fed back into the count matrix.
    learn_from_stimuli: bool = True
    distance_metric: str = "euclidean"
    seed: int = 0
    group_targets: dict[int, str] = field(default_factory=lambda: dict(DEFAULT_GROUP_TARGETS))
    #: Directory holding transition_table.txt / spots.tsv / favorite_values.tsv
    #: overrides; falls back to the packaged data for any file absent here.
    data_dir: Path | None = None
    host: str = "127.0.0.1"
    port: int = 8000
    #: When set, admin endpoints require this value in the X-Admin-Token header.
    admin_token: str | None = None
    #: Where the service persists session event logs; None keeps sessions
    #: memory-only.
    session_dir: Path | None = None

    def __post_init__(self) -> None:
        if self.intensity_metric not in INTENSITY_METRICS:
            raise ValueError(f"intensity_metric must be one of {INTENSITY_METRICS}")
        if self.idle_mode not in IDLE_MODES:
            raise ValueError(f"idle_mode must be one of {IDLE_MODES}")
        if self.distance_metric not in DISTANCE_METRICS:
            raise ValueError(f"distance_metric must be one of {DISTANCE_METRICS}")
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError("alpha must be in (0, 1]")
        if sorted(self.group_targets) != list(range(1, 10)):
            raise ValueError("group_targets must cover exactly groups 1..9")


_PATH_KEYS = {"data_dir", "session_dir"}
_ENV_PREFIX = "MINDTOUR_"


def _coerce(name: str, raw: str, current: object) -> object:
    if name in _PATH_KEYS:
        return Path(raw)
    if isinstance(current, bool):
        return raw.strip().lower() in ("1", "true", "yes", "on")
    if isinstance(current, int) and not isinstance(current, bool):
        return int(raw)
    if isinstance(current, float):
        return float(raw)
    return raw


def load_config(path: str | Path | None = None, env: dict[str, str] | None = None) -> EngineConfig:
    """Build a config from defaults, then a JSON file, then env overrides."""
    data: dict[str, object] = {}
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            loaded = json.load(handle)
        if not isinstance(loaded, dict):
            raise ValueError(f"config file {path} must hold a JSON object")
        data.update(loaded)
    if "group_targets" in data and isinstance(data["group_targets"], dict):
        data["group_targets"] = {int(k): str(v) for k, v in data["group_targets"].items()}
    for key in _PATH_KEYS:
        if data.get(key) is not None:
            data[key] = Path(str(data[key]))

    config = EngineConfig(**data)  # type: ignore[arg-type]

    env = dict(os.environ if env is None else env)
    overrides: dict[str, object] = {}
    for f in fields(EngineConfig):
        env_key = _ENV_PREFIX + f.name.upper()
        if env_key in env:
            overrides[f.name] = _coerce(f.name, env[env_key], getattr(config, f.name))
    if overrides:
        config = replace(config, **overrides)
    return config
