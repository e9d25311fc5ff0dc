"""Line-oriented scenario traces: scripted stimuli for batch evaluation.

Trace grammar (one entry per line, ``#`` comments and blanks skipped)::

    @state happy                    set the machine state (scenario setup)
    @persona alice                  switch favorite-value persona
    !feelings 3.6 0.1 1.4 0.3 0.3 0.6    six 0-4 grades -> group stimulus
    !groups 0 0.8 0 0 0 0 0.2 0 0        direct 9-group stimulus
    !idle                           stimulus-free tick
    V(S:I, O:cake, P:eat) | prospect=prospective    utterance + context flags

The CSV emitted for a run has the frozen column order::

    turn,kind,stimulus,state_before,state_after,chosen_group,valence,intensity
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

from .elicitation import GroupVector
from .mental_states import MentalState
from .recommend import FeelingVector6, GRADE_MAX, groups_from_feelings
from .session import Engine, Session, TurnReport, context_from_flags

CSV_COLUMNS = (
    "turn",
    "kind",
    "stimulus",
    "state_before",
    "state_after",
    "chosen_group",
    "valence",
    "intensity",
)


class TraceError(ValueError):
    """A trace line cannot be interpreted; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def run_trace_lines(engine: Engine, lines: list[str], persona: str | None = None) -> tuple[Session, list[TurnReport]]:
    """Execute trace lines against a fresh session; returns it plus reports."""
    session = engine.create_session(persona=persona)
    reports: list[TurnReport] = []
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            report = _run_line(engine, session, line)
        except TraceError:
            raise
        except ValueError as exc:
            raise TraceError(str(exc), line_number) from exc
        if report is not None:
            reports.append(report)
    return session, reports


def run_trace_file(engine: Engine, path: str | Path, persona: str | None = None) -> tuple[Session, list[TurnReport]]:
    with open(path, encoding="utf-8") as handle:
        return run_trace_lines(engine, handle.read().splitlines(), persona=persona)


def _run_line(engine: Engine, session: Session, line: str) -> TurnReport | None:
    if line.startswith("@state"):
        _, _, name = line.partition(" ")
        session.machine.current = MentalState(name.strip())
        return None
    if line.startswith("@persona"):
        _, _, name = line.partition(" ")
        session.persona = name.strip() or None
        return None
    if line.startswith("!feelings"):
        grades = [float(v) for v in line.split()[1:]]
        if any(not (0.0 <= g <= GRADE_MAX) for g in grades):
            raise ValueError(f"feeling grades must lie in [0, {GRADE_MAX}]")
        feelings = FeelingVector6.from_sequence(g / GRADE_MAX for g in grades)
        return engine.post_groups(session, groups_from_feelings(feelings), label=line)
    if line.startswith("!groups"):
        strengths = tuple(float(v) for v in line.split()[1:])
        return engine.post_groups(session, GroupVector(strengths), label=line)
    if line == "!idle":
        return engine.idle(session)
    if line.startswith(("!", "@")):
        raise ValueError(f"unknown trace directive {line.split()[0]!r}")

    text, _, flag_text = line.partition("|")
    flags = dict(
        part.split("=", 1) if "=" in part else (_bad_flag(part), "")
        for part in flag_text.split()
    )
    return engine.post_utterance(session, text.strip(), context_from_flags(flags))


def _bad_flag(part: str) -> str:
    raise ValueError(f"context flag {part!r} must look like key=value")


def reports_to_csv(reports: list[TurnReport]) -> str:
    """Render reports with the frozen CSV column order."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for turn, report in enumerate(reports, start=1):
        valence = report.egc.valence.value if report.egc else ""
        degree = f"{report.egc.intensity:.6f}" if report.egc else ""
        writer.writerow(
            [
                turn,
                report.kind,
                report.stimulus,
                report.state_before.value,
                report.state_after.value,
                report.chosen_group if report.chosen_group is not None else "",
                valence,
                degree,
            ]
        )
    return buffer.getvalue()
