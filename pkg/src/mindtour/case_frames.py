"""Case-frame notation: parsing, validation and event-type signatures.

A case frame is a structured stand-in for a parsed utterance: an event kind
(verb event or attribute event), a set of role slots, a predicate and optional
lexical emotion tags.  The notation is hand-writable:

    V(S:I, O:cake, P:eat)
    A(S:scenery, C:beautiful)
    V(S:I, O:fireworks, P:see)!surprise

``V`` frames carry their predicate in ``P:``; ``A`` frames carry the adjective
in ``C:`` and it is stored in the predicate field.  Only slot combinations
listed in the event-type signature table are accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping


class CaseFrameError(ValueError):
    """Base class for case-frame notation failures."""


class NotationSyntaxError(CaseFrameError):
    """Input text does not follow the case-frame grammar."""


class DuplicateSlotError(CaseFrameError):
    """The same role appears more than once in one frame."""


class UnknownSignatureError(CaseFrameError):
    """The slot combination matches no known event-type signature."""


class UnknownEmotionTagError(CaseFrameError):
    """A ``!tag`` suffix names no lexically taggable emotion type."""


class EventKind(str, Enum):
    VERB = "V"
    ATTRIBUTE = "A"


class SlotRole(str, Enum):
    """Role slots a frame may carry (predicate carriers P/C excluded)."""

    SUBJECT = "S"
    OBJECT = "O"
    OBJECT_FROM = "OF"
    OBJECT_TO = "OT"
    OBJECT_MUTUAL = "OM"
    OBJECT_SOURCE = "OS"
    OBJECT_CONTENT = "OC"
    INSTRUMENT = "I"


# Display / rendering order for slots inside a frame label.
_ROLE_ORDER = (
    SlotRole.SUBJECT,
    SlotRole.OBJECT,
    SlotRole.OBJECT_FROM,
    SlotRole.OBJECT_TO,
    SlotRole.OBJECT_MUTUAL,
    SlotRole.OBJECT_SOURCE,
    SlotRole.OBJECT_CONTENT,
    SlotRole.INSTRUMENT,
)

# Emotion types that may be attached directly to a frame as a "!tag".
# These are exactly the types unreachable through the appraisal rule table.
LEXICAL_EMOTION_TAGS = frozenset(
    {"liking", "love", "shy", "sadness", "perplexity", "hate", "reproach", "surprise"}
)


@dataclass(frozen=True)
class EventTypeSignature:
    """One row of the event-type table: kind plus required slot roles."""

    kind: EventKind
    slots: tuple[SlotRole, ...]

    @property
    def label(self) -> str:
        parts = [role.value for role in self.slots]
        if self.kind is EventKind.ATTRIBUTE:
            parts.append("C")
        return f"{self.kind.value}({','.join(parts)})"

    @property
    def slot_set(self) -> frozenset[SlotRole]:
        return frozenset(self.slots)


def _sig(kind: EventKind, *roles: SlotRole) -> EventTypeSignature:
    return EventTypeSignature(kind, roles)


_S = SlotRole.SUBJECT
_O = SlotRole.OBJECT
_OF = SlotRole.OBJECT_FROM
_OT = SlotRole.OBJECT_TO
_OM = SlotRole.OBJECT_MUTUAL
_OS = SlotRole.OBJECT_SOURCE
_OC = SlotRole.OBJECT_CONTENT
_I = SlotRole.INSTRUMENT

#: The closed set of accepted event types.  The three-argument verb row whose
#: second axis reads the instrument value is spelled V(S,O,I): a literal
#: second O would collide with the duplicate-slot rule.
SIGNATURES: tuple[EventTypeSignature, ...] = (
    _sig(EventKind.VERB, _S),
    _sig(EventKind.ATTRIBUTE, _S),
    _sig(EventKind.ATTRIBUTE, _S, _OF),
    _sig(EventKind.ATTRIBUTE, _S, _OT),
    _sig(EventKind.ATTRIBUTE, _S, _OM),
    _sig(EventKind.ATTRIBUTE, _S, _OS),
    _sig(EventKind.VERB, _S, _OF),
    _sig(EventKind.VERB, _S, _OT),
    _sig(EventKind.VERB, _S, _OM),
    _sig(EventKind.VERB, _S, _OS),
    _sig(EventKind.VERB, _S, _O),
    _sig(EventKind.VERB, _S, _O, _OF),
    _sig(EventKind.VERB, _S, _O, _OT),
    _sig(EventKind.VERB, _S, _O, _OM),
    _sig(EventKind.VERB, _S, _O, _I),
    _sig(EventKind.VERB, _S, _O, _OC),
    _sig(EventKind.ATTRIBUTE, _S, _O),
)

_SIGNATURE_INDEX: dict[tuple[EventKind, frozenset[SlotRole]], EventTypeSignature] = {
    (sig.kind, sig.slot_set): sig for sig in SIGNATURES
}

SIGNATURES_BY_LABEL: dict[str, EventTypeSignature] = {sig.label: sig for sig in SIGNATURES}


@dataclass(frozen=True)
class CaseFrame:
    """A validated event: kind, role slots, predicate, optional tags."""

    kind: EventKind
    slots: Mapping[SlotRole, str]
    predicate: str
    tags: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        key = (self.kind, frozenset(self.slots))
        if SlotRole.SUBJECT not in self.slots:
            raise UnknownSignatureError("frame has no subject slot")
        if key not in _SIGNATURE_INDEX:
            raise UnknownSignatureError(
                f"slot combination {sorted(r.value for r in self.slots)} "
                f"matches no {self.kind.value}-event signature"
            )
        if not self.predicate:
            raise NotationSyntaxError("frame has an empty predicate")
        for tag in self.tags:
            if tag not in LEXICAL_EMOTION_TAGS:
                raise UnknownEmotionTagError(
                    f"unknown emotion tag {tag!r}; valid tags: "
                    f"{', '.join(sorted(LEXICAL_EMOTION_TAGS))}"
                )

    def slot(self, role: SlotRole) -> str | None:
        return self.slots.get(role)


_FRAME_RE = re.compile(r"^\s*(?P<kind>[VA])\s*\((?P<body>[^()]*)\)\s*(?P<tags>(?:!\s*[\w-]+\s*)*)$")
_TAG_RE = re.compile(r"!\s*([\w-]+)")
_TOKEN_FORBIDDEN = re.compile(r"[():,!]")

_PREDICATE_ROLES = {"P", "C"}
_ROLE_BY_NAME = {role.value: role for role in SlotRole}


def parse_case_frame(text: str) -> CaseFrame:
    """Parse case-frame notation into a validated :class:`CaseFrame`.

    Parsing is total and deterministic: any input either yields exactly one
    frame or raises a :class:`CaseFrameError` subclass.
    """
    if not text or not text.strip():
        raise NotationSyntaxError("empty input")
    match = _FRAME_RE.match(text)
    if match is None:
        raise NotationSyntaxError(f"not case-frame notation: {text.strip()!r}")
    kind = EventKind(match.group("kind"))
    tags = tuple(_TAG_RE.findall(match.group("tags")))

    body = match.group("body")
    if not body.strip():
        raise NotationSyntaxError("frame has no role pairs")

    slots: dict[SlotRole, str] = {}
    unknown_roles: list[str] = []
    predicate: str | None = None
    predicate_role_seen: str | None = None
    for raw_pair in body.split(","):
        if ":" not in raw_pair:
            raise NotationSyntaxError(f"malformed pair {raw_pair.strip()!r}: expected ROLE:token")
        role_text, token = raw_pair.split(":", 1)
        role_name = role_text.strip()
        token = token.strip()
        if not role_name:
            raise NotationSyntaxError(f"missing role name in pair {raw_pair.strip()!r}")
        if not token:
            raise NotationSyntaxError(f"empty token for role {role_name!r}")
        if _TOKEN_FORBIDDEN.search(token):
            raise NotationSyntaxError(f"token {token!r} contains a reserved character")
        if role_name in _PREDICATE_ROLES:
            if predicate_role_seen is not None:
                raise DuplicateSlotError(f"predicate given twice ({predicate_role_seen} and {role_name})")
            predicate_role_seen = role_name
            predicate = token
        elif role_name in _ROLE_BY_NAME:
            role = _ROLE_BY_NAME[role_name]
            if role in slots:
                raise DuplicateSlotError(f"slot {role_name} appears twice")
            slots[role] = token
        else:
            unknown_roles.append(role_name)

    if unknown_roles:
        raise UnknownSignatureError(
            f"role(s) {unknown_roles} belong to no event-type signature"
        )
    expected_predicate_role = "P" if kind is EventKind.VERB else "C"
    if predicate_role_seen is None:
        raise NotationSyntaxError(
            f"{kind.value}-frame is missing its predicate pair ({expected_predicate_role}:...)"
        )
    if predicate_role_seen != expected_predicate_role:
        raise UnknownSignatureError(
            f"{kind.value}-frame cannot carry {predicate_role_seen}:...; expected "
            f"{expected_predicate_role}:..."
        )
    assert predicate is not None
    return CaseFrame(kind=kind, slots=slots, predicate=predicate, tags=tags)


def render_case_frame(frame: CaseFrame) -> str:
    """Render a frame back to canonical notation (reparses to an equal frame)."""
    pairs = [f"{role.value}:{frame.slots[role]}" for role in _ROLE_ORDER if role in frame.slots]
    predicate_role = "P" if frame.kind is EventKind.VERB else "C"
    pairs.append(f"{predicate_role}:{frame.predicate}")
    rendered = f"{frame.kind.value}({', '.join(pairs)})"
    return rendered + "".join(f"!{tag}" for tag in frame.tags)


def signature_of(frame: CaseFrame) -> EventTypeSignature:
    """Return the unique event-type signature a valid frame matches."""
    return _SIGNATURE_INDEX[(frame.kind, frozenset(frame.slots))]
