"""Feeling profiles and nearest-profile sightseeing recommendation.

Spots carry a six-feeling questionnaire profile (0-4 grades, normalized to
[0, 1] at load).  The user's running profile is an exponential smoothing of
the per-turn feelings derived from the 9-group emotion vector.  Ranking is
nearest-profile first, optionally restricted to spots within a great-circle
radius of the user's position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .assets import SPOT_CATALOG, data_path
from .elicitation import GroupVector

EARTH_RADIUS_KM = 6371.0

#: Questionnaire grade scale: integers 0..4, stored normalized by /4.
GRADE_MAX = 4.0

#: Canonical feeling order used by files, CSV columns and API payloads.
FEELING_ORDER = ("happy", "angry", "surprise", "sad", "disgust", "fear")


class CatalogFormatError(ValueError):
    """A spot-catalog line cannot be parsed; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class CatalogRangeError(ValueError):
    """A grade or coordinate falls outside its documented range."""


class EmptyCatalogError(LookupError):
    """No spot passed the geo filter (or the catalog is empty)."""


@dataclass(frozen=True)
class FeelingVector6:
    happy: float = 0.0
    angry: float = 0.0
    surprise: float = 0.0
    sad: float = 0.0
    disgust: float = 0.0
    fear: float = 0.0

    def __post_init__(self) -> None:
        for name in FEELING_ORDER:
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise CatalogRangeError(f"feeling {name}={value} outside [0, 1]")

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(getattr(self, name) for name in FEELING_ORDER)

    @classmethod
    def from_sequence(cls, values) -> "FeelingVector6":
        values = tuple(float(v) for v in values)
        if len(values) != len(FEELING_ORDER):
            raise ValueError(f"expected {len(FEELING_ORDER)} feelings, got {len(values)}")
        return cls(**dict(zip(FEELING_ORDER, values)))


ZERO_FEELINGS = FeelingVector6()


def feeling_vector_from_groups(groups: GroupVector) -> FeelingVector6:
    """Collapse the 9 emotion groups onto the six questionnaire feelings."""
    e = groups.strength
    return FeelingVector6(
        happy=max(e(1), e(2)),
        sad=max(e(3), e(4), e(5)),
        disgust=e(6),
        angry=e(7),
        fear=e(8),
        surprise=e(9),
    )


def groups_from_feelings(feelings: FeelingVector6) -> GroupVector:
    """Lift six feelings back into a group vector via one representative
    group per feeling (the coarse inverse of :func:`feeling_vector_from_groups`)."""
    strengths = [0.0] * 9
    strengths[1] = feelings.happy  # joy group
    strengths[3] = feelings.sad  # sadness group
    strengths[5] = feelings.disgust
    strengths[6] = feelings.angry
    strengths[7] = feelings.fear
    strengths[8] = feelings.surprise
    return GroupVector(tuple(strengths))


@dataclass(frozen=True)
class UserAffectProfile:
    current: FeelingVector6 = ZERO_FEELINGS
    alpha: float = 0.5

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError("alpha must be in (0, 1]")


def update_user_profile(profile: UserAffectProfile, feelings: FeelingVector6) -> UserAffectProfile:
    """Blend the new feelings in: current <- alpha*new + (1-alpha)*current."""
    a = profile.alpha
    blended = tuple(
        a * new + (1.0 - a) * old
        for new, old in zip(feelings.as_tuple(), profile.current.as_tuple())
    )
    return UserAffectProfile(current=FeelingVector6.from_sequence(blended), alpha=a)


@dataclass(frozen=True)
class SpotProfile:
    name: str
    latitude: float
    longitude: float
    profile: FeelingVector6
    description: str = ""

    def __post_init__(self) -> None:
        if not (-90.0 <= self.latitude <= 90.0):
            raise CatalogRangeError(f"latitude {self.latitude} outside [-90, 90]")
        if not (-180.0 <= self.longitude <= 180.0):
            raise CatalogRangeError(f"longitude {self.longitude} outside [-180, 180]")


@dataclass(frozen=True)
class RankedSpot:
    spot: SpotProfile
    affect_distance: float
    distance_km: float | None = None


def haversine_km(lat1: float, lon1: float, lat2: float, lon2: float) -> float:
    """Great-circle distance in kilometers."""
    phi1, phi2 = math.radians(lat1), math.radians(lat2)
    dphi = math.radians(lat2 - lat1)
    dlam = math.radians(lon2 - lon1)
    a = math.sin(dphi / 2.0) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2.0) ** 2
    return EARTH_RADIUS_KM * 2.0 * math.atan2(math.sqrt(a), math.sqrt(1.0 - a))


def _profile_distances(user: FeelingVector6, spots: list[SpotProfile], metric: str) -> np.ndarray:
    matrix = np.array([spot.profile.as_tuple() for spot in spots], dtype=float)
    target = np.array(user.as_tuple(), dtype=float)
    if metric == "cosine":
        spot_norms = np.linalg.norm(matrix, axis=1)
        target_norm = np.linalg.norm(target)
        if target_norm == 0.0:
            return np.where(spot_norms == 0.0, 0.0, 1.0)
        sims = np.zeros(len(spots))
        nonzero = spot_norms > 0.0
        sims[nonzero] = matrix[nonzero] @ target / (spot_norms[nonzero] * target_norm)
        return 1.0 - sims
    return np.linalg.norm(matrix - target, axis=1)


def rank_spots(
    profile: UserAffectProfile,
    catalog: list[SpotProfile],
    here: tuple[float, float] | None = None,
    radius_km: float | None = None,
    metric: str = "euclidean",
) -> list[RankedSpot]:
    """Order spots by feeling-profile proximity, nearest first.

    ``here`` adds great-circle distances to the result; with ``radius_km``
    it also drops every spot farther than the radius.  Ties in profile
    distance break by spot name.
    """
    if radius_km is not None and here is None:
        raise ValueError("radius_km given without a location")

    candidates: list[tuple[SpotProfile, float | None]] = []
    for spot in catalog:
        geo: float | None = None
        if here is not None:
            geo = haversine_km(here[0], here[1], spot.latitude, spot.longitude)
            if radius_km is not None and geo > radius_km:
                continue
        candidates.append((spot, geo))
    if not candidates:
        raise EmptyCatalogError(
            "no spot within range" if catalog else "spot catalog is empty"
        )

    distances = _profile_distances(profile.current, [spot for spot, _ in candidates], metric)
    ranked = [
        RankedSpot(spot=spot, affect_distance=float(d), distance_km=geo)
        for (spot, geo), d in zip(candidates, distances)
    ]
    ranked.sort(key=lambda r: (r.affect_distance, r.spot.name))
    return ranked


def load_spot_catalog(path: str | Path | None = None) -> list[SpotProfile]:
    """Read the spot catalog: ``name TAB lat TAB lon TAB grades TAB description``
    per line, the grades field holding six space-separated 0-4 values."""
    path = Path(path) if path is not None else data_path(SPOT_CATALOG)
    spots: list[SpotProfile] = []
    seen_names: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 5:
                raise CatalogFormatError(
                    f"expected 5 tab-separated fields, got {len(parts)}", line_number
                )
            name, lat_text, lon_text, grades_text, description = (p.strip() for p in parts)
            if not name:
                raise CatalogFormatError("empty spot name", line_number)
            if name in seen_names:
                raise CatalogFormatError(f"duplicate spot {name!r}", line_number)
            try:
                latitude, longitude = float(lat_text), float(lon_text)
                grades = [float(g) for g in grades_text.split()]
            except ValueError:
                raise CatalogFormatError("bad number", line_number) from None
            if len(grades) != len(FEELING_ORDER):
                raise CatalogFormatError(
                    f"expected {len(FEELING_ORDER)} grades, got {len(grades)}", line_number
                )
            for grade in grades:
                if not (0.0 <= grade <= GRADE_MAX):
                    raise CatalogRangeError(
                        f"line {line_number}: grade {grade} outside [0, {GRADE_MAX}]"
                    )
            seen_names.add(name)
            spots.append(
                SpotProfile(
                    name=name,
                    latitude=latitude,
                    longitude=longitude,
                    profile=FeelingVector6.from_sequence(g / GRADE_MAX for g in grades),
                    description=description,
                )
            )
    return spots
