"""Feeling profiles and nearest-profile sightseeing recommendation.

The running user profile is an exponential smoothing of per-turn feelings;
spots carry six-feeling questionnaire profiles.  Ranking is nearest profile
first, optionally inside a great-circle radius.
"""

from mindtour import (
    FeelingVector6,
    UserAffectProfile,
    feeling_vector_from_groups,
    load_spot_catalog,
    rank_spots,
    update_user_profile,
)
from mindtour.recommend import FEELING_ORDER

catalog = load_spot_catalog()
print(f"=== packaged catalog: {len(catalog)} spots ===")
for spot in catalog:
    cells = " ".join(f"{name[:2]}={value:.2f}" for name, value in
                     zip(FEELING_ORDER, spot.profile.as_tuple()))
    print(f"{spot.name:22s} {cells}")

print()
print("=== a cheerful afternoon, one update at a time ===")
profile = UserAffectProfile(alpha=0.5)
for feelings in [
    FeelingVector6(happy=0.9),
    FeelingVector6(happy=0.7, surprise=0.5),
    FeelingVector6(happy=0.8),
]:
    profile = update_user_profile(profile, feelings)
print("profile now:", {n: round(v, 3) for n, v in zip(FEELING_ORDER, profile.current.as_tuple())})

print()
print("top three spots for this mood:")
for i, r in enumerate(rank_spots(profile, catalog)[:3], start=1):
    print(f"{i}. {r.spot.name} (profile distance {r.affect_distance:.3f})")

print()
print("=== a somber turn ===")
profile = update_user_profile(profile, FeelingVector6(sad=0.9, disgust=0.5))
profile = update_user_profile(profile, FeelingVector6(sad=0.8, fear=0.4))
print("profile now:", {n: round(v, 3) for n, v in zip(FEELING_ORDER, profile.current.as_tuple())})
for i, r in enumerate(rank_spots(profile, catalog)[:3], start=1):
    print(f"{i}. {r.spot.name} (profile distance {r.affect_distance:.3f})")

print()
print("=== geo filtering: only spots near the city center ===")
here = (34.3955, 132.4536)
for r in rank_spots(profile, catalog, here=here, radius_km=3.0):
    print(f"{r.spot.name:22s} {r.distance_km:5.2f} km   distance {r.affect_distance:.3f}")
