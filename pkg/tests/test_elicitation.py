"""Appraisal rule table, compound emotions, group aggregation."""

from __future__ import annotations

import pytest

from mindtour.case_frames import LEXICAL_EMOTION_TAGS
from mindtour.elicitation import (
    APPRAISAL_TYPES,
    Approval,
    ContextError,
    Desirability,
    ElicitationContext,
    EmotionInstance,
    EmotionType,
    GROUP_MEMBERS,
    GroupVector,
    Party,
    Prospect,
    elicit_emotions,
    group_vector,
)
from mindtour.emotion_space import AxisAssignment, EgcResult, Octant, Valence

VEC = AxisAssignment(0.8, 0.5, 0.6)


def result(valence: Valence, intensity: float = 0.8, tags: tuple[str, ...] = ()) -> EgcResult:
    area = Octant.I if valence is Valence.PLEASURE else Octant.II
    if valence is Valence.NONE:
        area = Octant.ON_AXIS
    return EgcResult(vector=VEC, area=area, valence=valence, intensity=intensity, tags=tags)


def emotions_of(instances: list[EmotionInstance]) -> set[EmotionType]:
    return {instance.emotion for instance in instances}


# -- static structure ---------------------------------------------------------

def test_every_type_in_exactly_one_group():
    seen: dict[EmotionType, int] = {}
    for group, members in GROUP_MEMBERS.items():
        for emotion in members:
            assert emotion not in seen, f"{emotion} in groups {seen[emotion]} and {group}"
            seen[emotion] = group
    assert set(seen) == set(EmotionType)
    assert len(seen) == 28


def test_group_sizes_match_classification_table():
    assert [len(GROUP_MEMBERS[k]) for k in range(1, 10)] == [11, 2, 3, 3, 2, 2, 3, 1, 1]


def test_rule_table_types_are_the_twenty():
    assert len(APPRAISAL_TYPES) == 20
    assert {e.value for e in EmotionType} - {e.value for e in APPRAISAL_TYPES} == set(
        LEXICAL_EMOTION_TAGS
    )


# -- base rules ---------------------------------------------------------------

def test_wellbeing_joy():
    instances = elicit_emotions(result(Valence.PLEASURE), ElicitationContext())
    assert emotions_of(instances) == {EmotionType.JOY}
    assert instances[0].strength == pytest.approx(0.8)


def test_wellbeing_distress():
    instances = elicit_emotions(result(Valence.DISPLEASURE), ElicitationContext())
    assert emotions_of(instances) == {EmotionType.DISTRESS}


def test_prospect_hope_and_fear():
    ctx = ElicitationContext(prospect=Prospect.PROSPECTIVE)
    assert emotions_of(elicit_emotions(result(Valence.PLEASURE), ctx)) == {EmotionType.HOPE}
    assert emotions_of(elicit_emotions(result(Valence.DISPLEASURE), ctx)) == {EmotionType.FEAR}


@pytest.mark.parametrize(
    "valence,desirability,expected",
    [
        (Valence.PLEASURE, Desirability.DESIRABLE, EmotionType.HAPPY_FOR),
        (Valence.PLEASURE, Desirability.UNDESIRABLE, EmotionType.GLOATING),
        (Valence.DISPLEASURE, Desirability.DESIRABLE, EmotionType.RESENTMENT),
        (Valence.DISPLEASURE, Desirability.UNDESIRABLE, EmotionType.SORRY_FOR),
    ],
)
def test_fortunes_of_others(valence, desirability, expected):
    ctx = ElicitationContext(affected_party=Party.OTHER, desirability_for_other=desirability)
    assert emotions_of(elicit_emotions(result(valence), ctx)) == {expected}


def test_fortunes_of_others_needs_desirability():
    ctx = ElicitationContext(affected_party=Party.OTHER)
    assert elicit_emotions(result(Valence.PLEASURE), ctx) == []


@pytest.mark.parametrize(
    "valence,prospect,expected",
    [
        (Valence.PLEASURE, Prospect.CONFIRMED, EmotionType.SATISFACTION),
        (Valence.PLEASURE, Prospect.DISCONFIRMED, EmotionType.DISAPPOINTMENT),
        (Valence.DISPLEASURE, Prospect.CONFIRMED, EmotionType.FEARS_CONFIRMED),
        (Valence.DISPLEASURE, Prospect.DISCONFIRMED, EmotionType.RELIEF),
    ],
)
def test_confirmation(valence, prospect, expected):
    ctx = ElicitationContext(prospect=prospect)
    instances = elicit_emotions(result(valence), ctx, pending_prospect=True)
    assert emotions_of(instances) == {expected}


def test_confirmation_without_prior_prospect():
    ctx = ElicitationContext(prospect=Prospect.CONFIRMED)
    with pytest.raises(ContextError):
        elicit_emotions(result(Valence.PLEASURE), ctx, pending_prospect=False)
    # standalone use (no bookkeeping supplied) skips the check
    assert elicit_emotions(result(Valence.PLEASURE), ctx) != []


@pytest.mark.parametrize(
    "approval,agent,expected",
    [
        (Approval.APPROVE, Party.SELF, EmotionType.PRIDE),
        (Approval.APPROVE, Party.OTHER, EmotionType.ADMIRATION),
        (Approval.DISAPPROVE, Party.SELF, EmotionType.SHAME),
        (Approval.DISAPPROVE, Party.OTHER, EmotionType.DISLIKING),
    ],
)
def test_attribution(approval, agent, expected):
    # keep well-being out of the picture: prospective displeasure-free context
    ctx = ElicitationContext(
        agent_of_event=agent, approval=approval, prospect=Prospect.PROSPECTIVE
    )
    emitted = emotions_of(elicit_emotions(result(Valence.PLEASURE), ctx))
    assert expected in emitted


# -- compounds ----------------------------------------------------------------

def test_admiration_plus_joy_gives_gratitude():
    ctx = ElicitationContext(agent_of_event=Party.OTHER, approval=Approval.APPROVE)
    instances = elicit_emotions(result(Valence.PLEASURE), ctx)
    assert emotions_of(instances) == {
        EmotionType.ADMIRATION,
        EmotionType.JOY,
        EmotionType.GRATITUDE,
    }


@pytest.mark.parametrize(
    "valence,approval,agent,compound",
    [
        (Valence.PLEASURE, Approval.APPROVE, Party.OTHER, EmotionType.GRATITUDE),
        (Valence.DISPLEASURE, Approval.DISAPPROVE, Party.OTHER, EmotionType.ANGER),
        (Valence.PLEASURE, Approval.APPROVE, Party.SELF, EmotionType.GRATIFICATION),
        (Valence.DISPLEASURE, Approval.DISAPPROVE, Party.SELF, EmotionType.REMORSE),
    ],
)
def test_compound_table(valence, approval, agent, compound):
    ctx = ElicitationContext(agent_of_event=agent, approval=approval)
    assert compound in emotions_of(elicit_emotions(result(valence), ctx))


def test_compound_strength_is_min_of_bases():
    ctx = ElicitationContext(agent_of_event=Party.OTHER, approval=Approval.APPROVE)
    instances = {i.emotion: i.strength for i in elicit_emotions(result(Valence.PLEASURE, 0.6), ctx)}
    assert instances[EmotionType.GRATITUDE] == pytest.approx(
        min(instances[EmotionType.ADMIRATION], instances[EmotionType.JOY])
    )


def test_compound_requires_both_bases():
    # disapprove+other without self-affected displeasure: disliking but no anger
    ctx = ElicitationContext(
        agent_of_event=Party.OTHER,
        affected_party=Party.OTHER,
        desirability_for_other=Desirability.DESIRABLE,
        approval=Approval.DISAPPROVE,
    )
    emitted = emotions_of(elicit_emotions(result(Valence.DISPLEASURE), ctx))
    assert EmotionType.DISLIKING in emitted
    assert EmotionType.ANGER not in emitted


# -- edges ----------------------------------------------------------------------

def test_on_axis_produces_nothing():
    assert elicit_emotions(result(Valence.NONE), ElicitationContext()) == []


def test_strength_clamped_to_one():
    instances = elicit_emotions(result(Valence.PLEASURE, intensity=1.2), ElicitationContext())
    assert instances[0].strength == 1.0


def test_deterministic():
    ctx = ElicitationContext(agent_of_event=Party.OTHER, approval=Approval.APPROVE)
    a = elicit_emotions(result(Valence.PLEASURE), ctx)
    b = elicit_emotions(result(Valence.PLEASURE), ctx)
    assert a == b


def test_lexical_tags_emit_extra_types():
    instances = elicit_emotions(
        result(Valence.PLEASURE, tags=("surprise",)), ElicitationContext()
    )
    assert emotions_of(instances) == {EmotionType.JOY, EmotionType.SURPRISE}


# -- group vector -----------------------------------------------------------------

def test_group_vector_empty():
    assert group_vector([]).strengths == (0.0,) * 9


def test_group_vector_single_joy():
    groups = group_vector([EmotionInstance(EmotionType.JOY, 0.8)])
    assert groups.strength(2) == 0.8
    assert sum(groups.strengths) == 0.8


def test_group_vector_max_aggregation():
    groups = group_vector(
        [EmotionInstance(EmotionType.HOPE, 0.3), EmotionInstance(EmotionType.RELIEF, 0.7)]
    )
    assert groups.strength(1) == 0.7


def test_group_vector_validation():
    with pytest.raises(ValueError):
        GroupVector((0.5,) * 8)
    with pytest.raises(ValueError):
        GroupVector((0.5,) * 8 + (1.5,))
