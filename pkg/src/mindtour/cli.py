"""Operator command line: REPL, batch trace evaluation, fixture inspection.

Subcommands::

    mindtour repl                         interactive turn-by-turn session
    mindtour eval TRACE [--out CSV]       run a scenario trace, emit CSV
    mindtour inspect {transition|groups|spots|fv}
    mindtour fv {get|set|import|export}
    mindtour serve [--static-dir DIR]     launch the HTTP service

All subcommands accept --config/--seed/--idle-mode/--beta/--alpha/--data-dir;
a fixed seed makes repl/eval runs reproducible.
"""

from __future__ import annotations

import argparse
import dataclasses
import shutil
import sys
from pathlib import Path

from .assets import FV_LEXICON, SPOT_CATALOG, TRANSITION_TABLE, data_path
from .case_frames import CaseFrameError
from .config import EngineConfig, load_config
from .elicitation import ContextError, GROUP_MEMBERS
from .favorites import DEFAULT_LAYER, FvStore, load_fv_file, save_fv_file
from .mental_states import ROW_SUM_TOLERANCE, STATE_ORDER, load_transition_table
from .recommend import EmptyCatalogError, FEELING_ORDER, load_spot_catalog
from .session import Engine, Session, TurnReport, context_from_flags
from .traces import TraceError, reports_to_csv, run_trace_file


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mindtour", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON engine-config file")
    common.add_argument("--seed", type=int, help="random seed for idle drift")
    common.add_argument("--idle-mode", choices=("deterministic", "stochastic"))
    common.add_argument("--beta", type=float, help="dummy second-axis value")
    common.add_argument("--alpha", type=float, help="affect-profile smoothing weight")
    common.add_argument("--data-dir", type=Path, help="directory overriding packaged data files")

    sub = parser.add_subparsers(dest="command", required=True)

    repl = sub.add_parser("repl", parents=[common], help="interactive session")
    repl.add_argument("--persona", help="favorite-value persona layer")

    evalp = sub.add_parser("eval", parents=[common], help="run a trace file, emit per-turn CSV")
    evalp.add_argument("trace", type=Path)
    evalp.add_argument("--out", type=Path, help="CSV output path (default: stdout)")
    evalp.add_argument("--persona")

    inspect = sub.add_parser("inspect", parents=[common], help="pretty-print fixture tables")
    inspect.add_argument("table", choices=("transition", "groups", "spots", "fv"))

    fv = sub.add_parser("fv", help="favorite-value admin")
    fv_sub = fv.add_subparsers(dest="fv_command", required=True)
    fv_get = fv_sub.add_parser("get", parents=[common])
    fv_get.add_argument("term")
    fv_get.add_argument("--persona")
    fv_set = fv_sub.add_parser("set", parents=[common])
    fv_set.add_argument("term")
    fv_set.add_argument("value", type=float)
    fv_set.add_argument("--layer", default=DEFAULT_LAYER)
    fv_import = fv_sub.add_parser("import", parents=[common])
    fv_import.add_argument("path", type=Path)
    fv_export = fv_sub.add_parser("export", parents=[common])
    fv_export.add_argument("path", type=Path)

    serve = sub.add_parser("serve", parents=[common], help="launch the HTTP service")
    serve.add_argument("--host")
    serve.add_argument("--port", type=int)
    serve.add_argument("--static-dir", type=Path, help="also serve this directory at /app")
    serve.add_argument("--session-dir", type=Path, help="persist session event logs here")

    return parser


def resolve_config(args: argparse.Namespace) -> EngineConfig:
    config = load_config(args.config) if args.config else load_config()
    overrides = {}
    for name in ("seed", "idle_mode", "beta", "alpha", "data_dir", "host", "port", "session_dir"):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    return dataclasses.replace(config, **overrides) if overrides else config


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = resolve_config(args)
        if args.command == "repl":
            return cmd_repl(config, args)
        if args.command == "eval":
            return cmd_eval(config, args)
        if args.command == "inspect":
            return cmd_inspect(config, args)
        if args.command == "fv":
            return cmd_fv(config, args)
        if args.command == "serve":
            return cmd_serve(config, args)
    except (OSError, ValueError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


# -- repl -------------------------------------------------------------------

_REPL_HELP = """\
Enter a case frame, optionally with context flags after '|':
    V(S:I, O:cake, P:eat)
    V(S:I, O:restaurant, P:visit) | prospect=prospective
    A(S:scenery, C:beautiful) | affected_party=other desirability_for_other=desirable
Commands:
    :state                     current mental state and affect profile
    :idle                      one stimulus-free drift tick
    :recommend [lat lon [radius_km]]
    :help                      this text
    :quit"""


def cmd_repl(config: EngineConfig, args: argparse.Namespace) -> int:
    engine = Engine(config)
    session = engine.create_session(persona=args.persona)
    print(f"session {session.id[:8]} started in state {session.state.value!r} (:help for help)")
    while True:
        try:
            line = input("mindtour> ").strip()
        except (EOFError, KeyboardInterrupt):
            print()
            return 0
        if not line:
            continue
        if line in (":quit", ":q", ":exit"):
            return 0
        if line == ":help":
            print(_REPL_HELP)
            continue
        if line == ":state":
            print(f"state: {session.state.value}")
            print("affect: " + _format_feelings(session.affect.current.as_tuple()))
            continue
        if line == ":idle":
            report = engine.idle(session)
            print(f"state: {report.state_before.value} -> {report.state_after.value} (idle drift)")
            continue
        if line.startswith(":recommend"):
            _repl_recommend(engine, session, line.split()[1:])
            continue
        if line.startswith(":"):
            print(f"unknown command {line.split()[0]!r} (:help for help)")
            continue
        text, _, flag_text = line.partition("|")
        try:
            flags = dict(part.split("=", 1) for part in flag_text.split())
            ctx = context_from_flags(flags)
            report = engine.post_utterance(session, text.strip(), ctx)
        except (CaseFrameError, ContextError, ValueError) as exc:
            print(f"error: {exc} (state unchanged: {session.state.value})")
            continue
        print(format_turn_report(report))


def _repl_recommend(engine: Engine, session: Session, params: list[str]) -> None:
    here = None
    radius = None
    if len(params) >= 2:
        here = (float(params[0]), float(params[1]))
        if len(params) >= 3:
            radius = float(params[2])
    try:
        ranked = engine.recommendations(session, here=here, radius_km=radius, limit=5)
    except EmptyCatalogError as exc:
        print(f"error: {exc}")
        return
    for i, r in enumerate(ranked, start=1):
        geo = f", {r.distance_km:.1f} km away" if r.distance_km is not None else ""
        print(f"{i}. {r.spot.name} (profile distance {r.affect_distance:.3f}{geo})")


def _format_feelings(values: tuple[float, ...]) -> str:
    return "  ".join(f"{name}={value:.3f}" for name, value in zip(FEELING_ORDER, values))


def format_turn_report(report: TurnReport) -> str:
    lines = []
    group = f" via group {report.chosen_group}" if report.chosen_group else " (idle drift)"
    lines.append(f"state: {report.state_before.value} -> {report.state_after.value}{group}")
    if report.egc is not None:
        v = report.egc.vector
        lines.append(
            f"vector: ({v.f1:+.3f}, {v.f2:+.3f}, {v.f3:+.3f})"
            f"{' [dummy f2]' if v.used_beta else ''}  area {report.egc.area.value}"
            f"  {report.egc.valence.value}  intensity {report.egc.intensity:.3f}"
        )
    if report.emotions:
        lines.append(
            "emotions: "
            + ", ".join(f"{e.emotion.value} {e.strength:.3f}" for e in report.emotions)
        )
    else:
        lines.append("emotions: none")
    if report.recommendations:
        lines.append(
            "suggested: "
            + "; ".join(
                f"{r.spot.name} ({r.affect_distance:.3f})" for r in report.recommendations
            )
        )
    return "\n".join(lines)


# -- eval ---------------------------------------------------------------------

def cmd_eval(config: EngineConfig, args: argparse.Namespace) -> int:
    engine = Engine(config)
    try:
        session, reports = run_trace_file(engine, args.trace, persona=args.persona)
    except TraceError as exc:
        print(f"error: {args.trace}: {exc}", file=sys.stderr)
        return 2
    csv_text = reports_to_csv(reports)
    if args.out:
        args.out.write_text(csv_text, encoding="utf-8")
        print(f"{len(reports)} turns -> {args.out} (final state: {session.state.value})")
    else:
        sys.stdout.write(csv_text)
    return 0


# -- inspect ------------------------------------------------------------------

def cmd_inspect(config: EngineConfig, args: argparse.Namespace) -> int:
    if args.table == "transition":
        return _inspect_transition(config)
    if args.table == "groups":
        for group in sorted(GROUP_MEMBERS):
            members = ", ".join(sorted(e.value for e in GROUP_MEMBERS[group]))
            target = config.group_targets[group]
            print(f"group {group} -> {target}: {members}")
        return 0
    if args.table == "spots":
        catalog = load_spot_catalog(data_path(SPOT_CATALOG, config.data_dir))
        for spot in catalog:
            feelings = _format_feelings(spot.profile.as_tuple())
            print(f"{spot.name}  ({spot.latitude:.4f}, {spot.longitude:.4f})  {feelings}")
        print(f"{len(catalog)} spots ok")
        return 0
    db = load_fv_file(data_path(FV_LEXICON, config.data_dir))
    for layer, term, value in db.records():
        print(f"{layer}\t{term}\t{value:+.2f}")
    print(f"{len(db)} favorite values ok")
    return 0


def _inspect_transition(config: EngineConfig) -> int:
    table = load_transition_table(data_path(TRANSITION_TABLE, config.data_dir))
    names = [state.value for state in STATE_ORDER]
    print(" " * 9 + "  ".join(f"{name:>8}" for name in names) + "       sum")
    drift = False
    for name, row in zip(names, table):
        total = float(row.sum())
        flag = ""
        if abs(total - 1.0) > ROW_SUM_TOLERANCE:
            flag = "  <- row-sum drift"
            drift = True
        cells = "  ".join(f"{value:8.3f}" for value in row)
        print(f"{name:<9}{cells}  {total:8.3f}{flag}")
    if drift:
        print(f"row sums drift beyond +/- {ROW_SUM_TOLERANCE}", file=sys.stderr)
        return 1
    print("row sums within tolerance")
    return 0


# -- fv -----------------------------------------------------------------------

def _writable_store(config: EngineConfig) -> FvStore:
    if config.data_dir is None:
        raise ValueError("fv writes need --data-dir (packaged defaults are read-only)")
    path = Path(config.data_dir) / FV_LEXICON
    if not path.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy(data_path(FV_LEXICON), path)
    return FvStore(path)


def cmd_fv(config: EngineConfig, args: argparse.Namespace) -> int:
    if args.fv_command == "get":
        db = load_fv_file(data_path(FV_LEXICON, config.data_dir))
        value, provenance = db.lookup(args.term, getattr(args, "persona", None))
        print(f"{args.term}\t{value}\t{provenance.value}")
        return 0
    if args.fv_command == "set":
        store = _writable_store(config)
        store.upsert(args.term, args.value, args.layer)
        print(f"{args.layer}\t{args.term}\t{args.value}")
        return 0
    if args.fv_command == "import":
        store = _writable_store(config)
        count = store.merge(load_fv_file(args.path))
        print(f"imported {count} records into {store.path}")
        return 0
    db = load_fv_file(data_path(FV_LEXICON, config.data_dir))
    save_fv_file(db, args.path)
    print(f"exported {len(db)} records to {args.path}")
    return 0


# -- serve ----------------------------------------------------------------------

def cmd_serve(config: EngineConfig, args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(config)
    if args.static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/app", StaticFiles(directory=args.static_dir, html=True), name="app")
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
