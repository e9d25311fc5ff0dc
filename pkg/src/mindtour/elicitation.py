"""Refine pleasure/displeasure into specific emotion types and group them.

The appraisal rule table inspects per-utterance context flags (who caused
the event, whom it affects, whether it is desirable for that other party,
prospect/confirmation status, approval) and emits emotion instances whose
strength is the eliciting vector's intensity.  Compound types fire when both
of their base conditions produced an instance in the same turn.

The eight types the rule table never emits (liking, love, shy, sadness,
perplexity, hate, reproach, surprise) enter only through explicit ``!tag``
markers on the case frame, so every group of the 9-group vector stays
reachable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .case_frames import LEXICAL_EMOTION_TAGS
from .emotion_space import EgcResult, Valence


class ContextError(ValueError):
    """Confirmation flags used without a prior prospective event."""


class EmotionType(str, Enum):
    # group 1
    GLOATING = "gloating"
    HOPE = "hope"
    SATISFACTION = "satisfaction"
    RELIEF = "relief"
    PRIDE = "pride"
    ADMIRATION = "admiration"
    LIKING = "liking"
    GRATITUDE = "gratitude"
    GRATIFICATION = "gratification"
    LOVE = "love"
    SHY = "shy"
    # group 2
    JOY = "joy"
    HAPPY_FOR = "happy_for"
    # group 3
    SORRY_FOR = "sorry_for"
    SHAME = "shame"
    REMORSE = "remorse"
    # group 4
    FEARS_CONFIRMED = "fears_confirmed"
    DISAPPOINTMENT = "disappointment"
    SADNESS = "sadness"
    # group 5
    DISTRESS = "distress"
    PERPLEXITY = "perplexity"
    # group 6
    DISLIKING = "disliking"
    HATE = "hate"
    # group 7
    RESENTMENT = "resentment"
    REPROACH = "reproach"
    ANGER = "anger"
    # group 8
    FEAR = "fear"
    # group 9
    SURPRISE = "surprise"


GROUP_MEMBERS: dict[int, frozenset[EmotionType]] = {
    1: frozenset(
        {
            EmotionType.GLOATING,
            EmotionType.HOPE,
            EmotionType.SATISFACTION,
            EmotionType.RELIEF,
            EmotionType.PRIDE,
            EmotionType.ADMIRATION,
            EmotionType.LIKING,
            EmotionType.GRATITUDE,
            EmotionType.GRATIFICATION,
            EmotionType.LOVE,
            EmotionType.SHY,
        }
    ),
    2: frozenset({EmotionType.JOY, EmotionType.HAPPY_FOR}),
    3: frozenset({EmotionType.SORRY_FOR, EmotionType.SHAME, EmotionType.REMORSE}),
    4: frozenset({EmotionType.FEARS_CONFIRMED, EmotionType.DISAPPOINTMENT, EmotionType.SADNESS}),
    5: frozenset({EmotionType.DISTRESS, EmotionType.PERPLEXITY}),
    6: frozenset({EmotionType.DISLIKING, EmotionType.HATE}),
    7: frozenset({EmotionType.RESENTMENT, EmotionType.REPROACH, EmotionType.ANGER}),
    8: frozenset({EmotionType.FEAR}),
    9: frozenset({EmotionType.SURPRISE}),
}

EMOTION_GROUP: dict[EmotionType, int] = {
    emotion: group for group, members in GROUP_MEMBERS.items() for emotion in members
}

#: Types the appraisal rule table can emit (the lexical-tag-only ones excluded).
APPRAISAL_TYPES = frozenset(
    emotion for emotion in EmotionType if emotion.value not in LEXICAL_EMOTION_TAGS
)


class Party(str, Enum):
    SELF = "self"
    OTHER = "other"


class Desirability(str, Enum):
    DESIRABLE = "desirable"
    UNDESIRABLE = "undesirable"
    NA = "n/a"


class Prospect(str, Enum):
    NONE = "none"
    PROSPECTIVE = "prospective"
    CONFIRMED = "confirmed"
    DISCONFIRMED = "disconfirmed"


class Approval(str, Enum):
    APPROVE = "approve"
    DISAPPROVE = "disapprove"
    NA = "n/a"


@dataclass(frozen=True)
class ElicitationContext:
    """Per-utterance judgment flags; the engine never infers them from text."""

    agent_of_event: Party = Party.SELF
    affected_party: Party = Party.SELF
    desirability_for_other: Desirability = Desirability.NA
    prospect: Prospect = Prospect.NONE
    approval: Approval = Approval.NA


@dataclass(frozen=True)
class EmotionInstance:
    emotion: EmotionType
    strength: float


_FORTUNES_OF_OTHERS = {
    (Valence.PLEASURE, Desirability.DESIRABLE): EmotionType.HAPPY_FOR,
    (Valence.PLEASURE, Desirability.UNDESIRABLE): EmotionType.GLOATING,
    (Valence.DISPLEASURE, Desirability.DESIRABLE): EmotionType.RESENTMENT,
    (Valence.DISPLEASURE, Desirability.UNDESIRABLE): EmotionType.SORRY_FOR,
}

_CONFIRMATION = {
    (Valence.PLEASURE, Prospect.CONFIRMED): EmotionType.SATISFACTION,
    (Valence.PLEASURE, Prospect.DISCONFIRMED): EmotionType.DISAPPOINTMENT,
    (Valence.DISPLEASURE, Prospect.CONFIRMED): EmotionType.FEARS_CONFIRMED,
    (Valence.DISPLEASURE, Prospect.DISCONFIRMED): EmotionType.RELIEF,
}

_ATTRIBUTION = {
    (Approval.APPROVE, Party.SELF): EmotionType.PRIDE,
    (Approval.APPROVE, Party.OTHER): EmotionType.ADMIRATION,
    (Approval.DISAPPROVE, Party.SELF): EmotionType.SHAME,
    (Approval.DISAPPROVE, Party.OTHER): EmotionType.DISLIKING,
}

# compound = (attribution base, well-being base); strength is the min of the two.
_COMPOUNDS = {
    EmotionType.GRATITUDE: (EmotionType.ADMIRATION, EmotionType.JOY),
    EmotionType.ANGER: (EmotionType.DISLIKING, EmotionType.DISTRESS),
    EmotionType.GRATIFICATION: (EmotionType.PRIDE, EmotionType.JOY),
    EmotionType.REMORSE: (EmotionType.SHAME, EmotionType.DISTRESS),
}


def elicit_emotions(
    result: EgcResult,
    ctx: ElicitationContext,
    pending_prospect: bool | None = None,
) -> list[EmotionInstance]:
    """Apply the appraisal rule table to one evaluated event.

    ``pending_prospect`` is the session's prospect bookkeeping: pass False to
    reject confirmation flags that have nothing to confirm.  Standalone
    callers may leave it None to skip the check.
    """
    if ctx.prospect in (Prospect.CONFIRMED, Prospect.DISCONFIRMED) and pending_prospect is False:
        raise ContextError(f"prospect={ctx.prospect.value} without a prior prospective event")
    if result.valence is Valence.NONE:
        return []

    strength = min(result.intensity, 1.0)
    emitted: dict[EmotionType, float] = {}

    if ctx.affected_party is Party.SELF and ctx.prospect is Prospect.NONE:
        base = EmotionType.JOY if result.valence is Valence.PLEASURE else EmotionType.DISTRESS
        emitted[base] = strength

    if ctx.affected_party is Party.OTHER and ctx.desirability_for_other is not Desirability.NA:
        emitted[_FORTUNES_OF_OTHERS[(result.valence, ctx.desirability_for_other)]] = strength

    if ctx.prospect is Prospect.PROSPECTIVE:
        prospective = EmotionType.HOPE if result.valence is Valence.PLEASURE else EmotionType.FEAR
        emitted[prospective] = strength

    if ctx.prospect in (Prospect.CONFIRMED, Prospect.DISCONFIRMED):
        emitted[_CONFIRMATION[(result.valence, ctx.prospect)]] = strength

    if ctx.approval is not Approval.NA:
        emitted[_ATTRIBUTION[(ctx.approval, ctx.agent_of_event)]] = strength

    for compound, (attribution_base, wellbeing_base) in _COMPOUNDS.items():
        if attribution_base in emitted and wellbeing_base in emitted:
            emitted[compound] = min(emitted[attribution_base], emitted[wellbeing_base])

    for tag in result.tags:
        emitted[EmotionType(tag)] = strength

    return [EmotionInstance(emotion, value) for emotion, value in emitted.items()]


@dataclass(frozen=True)
class GroupVector:
    """Strengths of the nine emotion groups, each the max over its members."""

    strengths: tuple[float, float, float, float, float, float, float, float, float]

    def __post_init__(self) -> None:
        if len(self.strengths) != 9:
            raise ValueError("group vector needs exactly 9 strengths")
        if any(not (0.0 <= s <= 1.0) for s in self.strengths):
            raise ValueError("group strengths must lie in [0, 1]")

    def strength(self, group: int) -> float:
        """1-based access matching the group numbering."""
        return self.strengths[group - 1]

    @property
    def is_zero(self) -> bool:
        return all(s == 0.0 for s in self.strengths)


ZERO_GROUPS = GroupVector((0.0,) * 9)


def group_vector(instances: list[EmotionInstance]) -> GroupVector:
    """Aggregate instances into the 9-group vector by per-group maximum."""
    strengths = [0.0] * 9
    for instance in instances:
        index = EMOTION_GROUP[instance.emotion] - 1
        strengths[index] = max(strengths[index], instance.strength)
    return GroupVector(tuple(strengths))
