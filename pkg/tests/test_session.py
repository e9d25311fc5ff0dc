"""Engine/session wiring: pipeline turns, prospects, isolation, replay."""

from __future__ import annotations

import pytest

from mindtour.config import EngineConfig
from mindtour.elicitation import ContextError, ElicitationContext, EmotionType, Prospect
from mindtour.mental_states import MentalState
from mindtour.session import Engine, context_from_flags, create_event, turn_event

from test_mental_states import groups


@pytest.fixture(scope="module")
def engine() -> Engine:
    return Engine(EngineConfig())


def test_fresh_session_is_quiet(engine):
    session = engine.create_session()
    assert session.state is MentalState.QUIET
    assert session.history == []


def test_joy_utterance_moves_quiet_to_happy(engine):
    session = engine.create_session()
    report = engine.post_utterance(session, "V(S:I, O:cake, P:eat)")
    assert report.state_before is MentalState.QUIET
    assert report.state_after is MentalState.HAPPY
    assert report.chosen_group == 2
    assert [e.emotion for e in report.emotions] == [EmotionType.JOY]
    assert len(report.recommendations) == 3


def test_group_stimulus_mirrors_machine_example(engine):
    session = engine.create_session()
    report = engine.post_groups(session, groups(e2=0.8, e7=0.9))
    assert report.state_after is MentalState.HAPPY
    assert report.chosen_group == 2


def test_on_axis_utterance_drifts_idle(engine):
    session = engine.create_session()
    report = engine.post_utterance(session, "V(S:unknownling, O:cake, P:eat)")
    assert report.chosen_group is None
    assert report.egc is not None and report.egc.intensity == 0.0
    # deterministic drift from quiet stays quiet (dominant self-loop)
    assert report.state_after is MentalState.QUIET
    # no feeling change without stimulus
    assert session.affect.current.as_tuple() == (0.0,) * 6


def test_affect_profile_accumulates(engine):
    session = engine.create_session()
    engine.post_utterance(session, "V(S:I, O:cake, P:eat)")
    happy_once = session.affect.current.happy
    assert happy_once > 0.0
    engine.post_utterance(session, "V(S:I, O:souvenir, P:buy)")
    assert session.affect.current.happy > happy_once


def test_malformed_utterance_leaves_session_untouched(engine):
    session = engine.create_session()
    with pytest.raises(Exception):
        engine.post_utterance(session, "V(S:I, X:foo, P:go)")
    assert session.state is MentalState.QUIET
    assert session.history == []


def test_prospect_bookkeeping(engine):
    session = engine.create_session()
    engine.post_utterance(
        session, "V(S:I, O:restaurant, P:visit)", context_from_flags({"prospect": "prospective"})
    )
    assert session.pending_prospects == 1
    report = engine.post_utterance(
        session, "V(S:I, O:restaurant, P:visit)", context_from_flags({"prospect": "confirmed"})
    )
    assert session.pending_prospects == 0
    assert [e.emotion for e in report.emotions] == [EmotionType.SATISFACTION]


def test_confirmation_without_prospect_rejected(engine):
    session = engine.create_session()
    with pytest.raises(ContextError):
        engine.post_utterance(
            session,
            "V(S:I, O:restaurant, P:visit)",
            ElicitationContext(prospect=Prospect.DISCONFIRMED),
        )
    assert session.pending_prospects == 0
    assert session.history == []


def test_context_flag_parsing_errors():
    with pytest.raises(ValueError):
        context_from_flags({"nonsense": "x"})
    with pytest.raises(ValueError):
        context_from_flags({"prospect": "perhaps"})


def test_sessions_are_isolated(engine):
    a = engine.create_session()
    b = engine.create_session()
    engine.post_utterance(a, "V(S:I, O:cake, P:eat)")
    assert b.state is MentalState.QUIET and b.history == []
    engine.post_utterance(b, "V(S:I, O:wallet, P:lose)")
    assert a.state is MentalState.HAPPY
    # learning in one machine does not leak into the other
    assert a.machine.model.counts.sum() != b.machine.model.counts.sum() or (
        a.machine.model.counts != b.machine.model.counts
    ).any()


def test_recommendations_before_any_utterance(engine):
    session = engine.create_session()
    ranked = engine.recommendations(session, limit=3)
    assert len(ranked) == 3  # zero-profile query still ranks the catalog


def test_recommendations_with_geo(engine):
    session = engine.create_session()
    ranked = engine.recommendations(session, here=(34.3955, 132.4536), radius_km=5.0)
    names = {r.spot.name for r in ranked}
    assert "Miyajima" not in names  # ~16.5 km away
    assert all(r.distance_km <= 5.0 for r in ranked)


def test_replay_reproduces_state_sequence():
    config = EngineConfig(idle_mode="stochastic", seed=1234)
    engine = Engine(config)
    session = engine.create_session(persona="traveler")
    events = [create_event(session)]
    script = [
        ("utterance", "V(S:I, O:cake, P:eat)", {}),
        ("idle", None, None),
        ("utterance", "V(S:I, O:rain, P:see)", {}),
        ("groups", groups(e9=0.9), None),
        ("idle", None, None),
        ("utterance", "V(S:I, O:restaurant, P:visit)", {"prospect": "prospective"}),
        ("utterance", "V(S:I, O:restaurant, P:visit)", {"prospect": "disconfirmed"}),
        ("idle", None, None),
    ]
    states = []
    for kind, payload, flags in script:
        if kind == "utterance":
            ctx = context_from_flags(flags)
            report = engine.post_utterance(session, payload, ctx)
            events.append(turn_event(session, report, ctx))
        elif kind == "groups":
            report = engine.post_groups(session, payload)
            events.append(turn_event(session, report, None))
        else:
            report = engine.idle(session)
            events.append(turn_event(session, report, None))
        states.append(report.state_after)

    assert engine.replay_states(events) == states
    rebuilt = engine.rebuild_session(events)
    assert rebuilt.state == session.state
    assert len(rebuilt.history) == len(session.history)
    assert rebuilt.affect.current == session.affect.current


def test_turn_report_serialization(engine):
    session = engine.create_session()
    report = engine.post_utterance(session, "V(S:I, O:cake, P:eat)")
    payload = report.to_dict()
    assert payload["state_after"] == "happy"
    assert payload["egc"]["valence"] == "pleasure"
    assert len(payload["recommendations"]) == 3
    assert payload["emotions"][0]["emotion"] == "joy"
