"""How an utterance becomes a point in the three-axis emotion space.

Each accepted event type maps the favorite values of its participants onto
three axes; the octant of the resulting vector decides pleasure vs
displeasure, and the rectangular solid it spans gives the intensity.
"""

from mindtour import (
    FvDatabase,
    assign_axes,
    classify_octant,
    egc_evaluate,
    intensity,
    parse_case_frame,
    signature_of,
)

db = FvDatabase()
for term, value in {
    "I": 0.5, "cake": 0.8, "eat": 0.6,
    "scenery": 0.7, "beautiful": 0.9,
    "wallet": 0.4, "lose": -0.7,
    "rival": 0.7, "race": 0.5,
}.items():
    db.upsert(term, value)

print("=== from notation to a vector ===")
for text in [
    "V(S:I, O:cake, P:eat)",          # plain two-argument verb event
    "A(S:scenery, C:beautiful)",      # attribute event: dummy second axis
    "V(S:I, O:wallet, P:lose)",       # negative predicate flips the third axis
    "V(S:I, OS:rival, P:race)",       # source row: first axis is a difference
]:
    frame = parse_case_frame(text)
    vector = assign_axes(frame, db)
    area, valence = classify_octant(vector)
    print(f"{text:32s} {signature_of(frame).label:10s} "
          f"({vector.f1:+.2f}, {vector.f2:+.2f}, {vector.f3:+.2f})"
          f"{' [dummy]' if vector.used_beta else '        '}"
          f" area {area.value:7s} {valence.value:11s} intensity {intensity(vector):.3f}")

print()
print("=== the on-axis rule ===")
frame = parse_case_frame("V(S:somebody, O:cake, P:eat)")  # unknown subject -> 0.0
result = egc_evaluate(frame, db)
print(f"unknown subject: vector {result.vector.components} -> {result.area.value}, "
      f"valence {result.valence.value}, intensity {result.intensity}")
print("a zero component means the event arouses no emotion at all")
