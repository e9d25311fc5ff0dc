"""Three-axis emotion space: vector assembly, octant valence, intensity.

Each accepted event type maps its favorite values onto three orthogonal axes.
The sign pattern of the resulting vector decides pleasure vs displeasure via
a fixed octant table; a vector touching any axis plane (a zero component)
arouses no emotion at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .case_frames import CaseFrame, SlotRole, signature_of
from .config import EngineConfig
from .favorites import FvDatabase

_DEFAULT_CONFIG = EngineConfig()


class Octant(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"
    VIII = "VIII"
    ON_AXIS = "on-axis"


class Valence(str, Enum):
    PLEASURE = "pleasure"
    DISPLEASURE = "displeasure"
    NONE = "none"


@dataclass(frozen=True)
class AxisAssignment:
    """The synthetic vector (f1, f2, f3) plus whether the dummy value filled f2."""

    f1: float
    f2: float
    f3: float
    used_beta: bool = False

    @property
    def components(self) -> tuple[float, float, float]:
        return (self.f1, self.f2, self.f3)


@dataclass(frozen=True)
class EgcResult:
    """Full evaluation of one event: vector, octant, valence, intensity."""

    vector: AxisAssignment
    area: Octant
    valence: Valence
    intensity: float
    tags: tuple[str, ...] = ()


# Axis atoms: a slot role reads that slot's favorite value, "P" the
# predicate's, "BETA" the configured dummy, and the difference atoms subtract
# with 0.0 standing in for whichever counterpart slot the signature lacks.
_BETA = "BETA"
_PRED = "P"
_TO_MINUS_FROM = "OT-OF"
_SUBJ_MINUS_SOURCE = "S-OS"

_AXIS_RULES: dict[str, tuple[str, str, str]] = {
    "V(S)": ("S", _BETA, _PRED),
    "A(S,C)": ("S", _BETA, _PRED),
    "A(S,OF,C)": ("S", _BETA, _PRED),
    "A(S,OT,C)": ("S", _BETA, _PRED),
    "A(S,OM,C)": ("S", _BETA, _PRED),
    "A(S,OS,C)": ("S", _BETA, _PRED),
    "V(S,OF)": ("S", _TO_MINUS_FROM, _PRED),
    "V(S,OT)": ("S", _TO_MINUS_FROM, _PRED),
    "V(S,OM)": ("S", "OM", _PRED),
    "V(S,OS)": (_SUBJ_MINUS_SOURCE, _BETA, _PRED),
    "V(S,O)": ("S", "O", _PRED),
    "V(S,O,OF)": ("O", _TO_MINUS_FROM, _PRED),
    "V(S,O,OT)": ("O", _TO_MINUS_FROM, _PRED),
    "V(S,O,OM)": ("O", "OM", "O"),
    "V(S,O,I)": ("O", "I", _PRED),
    "V(S,O,OC)": ("O", _BETA, "OC"),
    "A(S,O,C)": ("O", _BETA, _PRED),
}

# Alternative reading for two-argument verb events: object on the first axis,
# dummy on the second.
_OBJECT_FIRST_RULE = ("O", _BETA, _PRED)

_ROLE_BY_NAME = {role.value: role for role in SlotRole}


def assign_axes(
    frame: CaseFrame,
    db: FvDatabase,
    persona: str | None = None,
    config: EngineConfig | None = None,
) -> AxisAssignment:
    """Map a frame's favorite values onto the three axes of its event type."""
    config = config or _DEFAULT_CONFIG
    rule = _AXIS_RULES[signature_of(frame).label]
    if frame.kind.value == "V" and rule == ("S", "O", _PRED) and config.object_axis_reading:
        rule = _OBJECT_FIRST_RULE
    if rule == ("O", "OM", "O") and config.mutual_predicate_axis:
        rule = ("O", "OM", _PRED)

    def fv(term: str | None) -> float:
        if term is None:
            return 0.0
        value, _ = db.lookup(term, persona)
        return value

    def resolve(atom: str) -> float:
        if atom == _PRED:
            return fv(frame.predicate)
        if atom == _TO_MINUS_FROM:
            return fv(frame.slot(SlotRole.OBJECT_TO)) - fv(frame.slot(SlotRole.OBJECT_FROM))
        if atom == _SUBJ_MINUS_SOURCE:
            return fv(frame.slot(SlotRole.SUBJECT)) - fv(frame.slot(SlotRole.OBJECT_SOURCE))
        return fv(frame.slot(_ROLE_BY_NAME[atom]))

    used_beta = _BETA in rule
    f1, f2, f3 = (
        config.beta if atom == _BETA else resolve(atom) for atom in rule
    )
    return AxisAssignment(f1=f1, f2=f2, f3=f3, used_beta=used_beta)


_OCTANT_TABLE: dict[tuple[int, int, int], tuple[Octant, Valence]] = {
    (1, 1, 1): (Octant.I, Valence.PLEASURE),
    (-1, 1, 1): (Octant.II, Valence.DISPLEASURE),
    (-1, -1, 1): (Octant.III, Valence.PLEASURE),
    (1, -1, 1): (Octant.IV, Valence.DISPLEASURE),
    (1, 1, -1): (Octant.V, Valence.DISPLEASURE),
    (-1, 1, -1): (Octant.VI, Valence.PLEASURE),
    (-1, -1, -1): (Octant.VII, Valence.DISPLEASURE),
    (1, -1, -1): (Octant.VIII, Valence.PLEASURE),
}


def classify_octant(vector: AxisAssignment) -> tuple[Octant, Valence]:
    """Octant and valence of the sign triple; any zero component is on-axis."""
    if 0.0 in vector.components:
        return Octant.ON_AXIS, Valence.NONE
    signs = tuple(1 if c > 0 else -1 for c in vector.components)
    return _OCTANT_TABLE[signs]


def intensity(vector: AxisAssignment, metric: str = "geometric") -> float:
    """Emotion strength of the synthetic vector.

    The default is the geometric mean of the component magnitudes (the cube
    root of the rectangular solid's volume): zero exactly on-axis, monotone in
    each magnitude, and 1.0 at the unit corner.  ``metric="rms"`` gives the
    root-mean-square alternative.
    """
    f1, f2, f3 = vector.components
    if metric == "rms":
        return ((f1 * f1 + f2 * f2 + f3 * f3) / 3.0) ** 0.5
    return abs(f1 * f2 * f3) ** (1.0 / 3.0)


def egc_evaluate(
    frame: CaseFrame,
    db: FvDatabase,
    persona: str | None = None,
    config: EngineConfig | None = None,
) -> EgcResult:
    """Full pipeline for one frame: axes, octant, valence, intensity."""
    config = config or _DEFAULT_CONFIG
    vector = assign_axes(frame, db, persona=persona, config=config)
    area, valence = classify_octant(vector)
    degree = intensity(vector, metric=config.intensity_metric)
    return EgcResult(vector=vector, area=area, valence=valence, intensity=degree, tags=frame.tags)
