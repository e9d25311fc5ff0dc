"""A whole scripted dialogue through the session engine.

Each turn runs the full pipeline: notation -> favorite values -> emotion
vector -> emotion types -> 9-group stimulus -> state transition -> affect
profile -> fresh recommendations.  The same engine backs the CLI REPL and
the HTTP service.
"""

from mindtour import Engine, EngineConfig, context_from_flags
from mindtour.traces import reports_to_csv

engine = Engine(EngineConfig(seed=11))
session = engine.create_session(persona=None)
print(f"session starts in state {session.state.value!r}")
print()

script = [
    ("V(S:I, O:okonomiyaki, P:eat)", {}),
    ("A(S:scenery, C:beautiful)", {}),
    ("V(S:I, O:ferry, P:miss)", {}),
    ("V(S:I, O:restaurant, P:visit)", {"prospect": "prospective"}),
    ("V(S:I, O:restaurant, P:visit)", {"prospect": "disconfirmed"}),
    ("V(S:I, O:fireworks, P:see)!surprise", {}),
]

reports = []
for text, flags in script:
    report = engine.post_utterance(session, text, context_from_flags(flags))
    reports.append(report)
    flag_note = f"  [{' '.join(f'{k}={v}' for k, v in flags.items())}]" if flags else ""
    print(f"> {text}{flag_note}")
    emitted = ", ".join(f"{e.emotion.value} {e.strength:.2f}" for e in report.emotions) or "none"
    print(f"  emotions: {emitted}")
    print(f"  state:    {report.state_before.value} -> {report.state_after.value}")
    print(f"  suggest:  {', '.join(r.spot.name for r in report.recommendations)}")
    print()

print("affect profile after the dialogue:")
print("  ", {k: round(v, 3) for k, v in zip(
    ("happy", "angry", "surprise", "sad", "disgust", "fear"),
    session.affect.current.as_tuple())})

print()
print("the same turns as eval-style CSV:")
print(reports_to_csv(reports))
