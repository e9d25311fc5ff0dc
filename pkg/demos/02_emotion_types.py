"""From raw pleasure/displeasure to specific emotion types.

Context flags describe what the utterance is about: who caused it, whom it
affects, whether it is a prospect or a confirmation, and whether the act is
approved of.  The rule table turns (valence, flags) into concrete types, and
compounds fire when both of their bases are present.
"""

from mindtour import (
    Approval,
    Desirability,
    ElicitationContext,
    FvDatabase,
    Party,
    Prospect,
    egc_evaluate,
    elicit_emotions,
    group_vector,
    parse_case_frame,
)

db = FvDatabase()
for term, value in {
    "I": 0.5, "friend": 0.8, "cake": 0.8, "eat": 0.6,
    "restaurant": 0.6, "visit": 0.5, "ticket": 0.3, "win": 0.8,
}.items():
    db.upsert(term, value)


def show(text: str, ctx: ElicitationContext, note: str) -> None:
    result = egc_evaluate(parse_case_frame(text), db)
    instances = elicit_emotions(result, ctx)
    emitted = ", ".join(f"{i.emotion.value} {i.strength:.2f}" for i in instances) or "(none)"
    print(f"{note:34s} -> {emitted}")


print("=== well-being: the default reading ===")
show("V(S:I, O:cake, P:eat)", ElicitationContext(), "plain pleasant event")

print()
print("=== prospect and confirmation ===")
show("V(S:I, O:restaurant, P:visit)",
     ElicitationContext(prospect=Prospect.PROSPECTIVE), "looking forward to it")
show("V(S:I, O:restaurant, P:visit)",
     ElicitationContext(prospect=Prospect.CONFIRMED), "it worked out")
show("V(S:I, O:restaurant, P:visit)",
     ElicitationContext(prospect=Prospect.DISCONFIRMED), "it fell through")

print()
print("=== fortunes of others ===")
show("V(S:friend, O:ticket, P:win)",
     ElicitationContext(affected_party=Party.OTHER,
                        desirability_for_other=Desirability.DESIRABLE),
     "a friend wins a ticket")

print()
print("=== attribution and its compounds ===")
show("V(S:friend, O:cake, P:eat)",
     ElicitationContext(agent_of_event=Party.OTHER, approval=Approval.APPROVE),
     "someone else did a fine thing")
print("   (admiration + joy firing together is what elicits gratitude)")

print()
print("=== aggregation into the nine groups ===")
result = egc_evaluate(parse_case_frame("V(S:friend, O:cake, P:eat)"), db)
instances = elicit_emotions(
    result, ElicitationContext(agent_of_event=Party.OTHER, approval=Approval.APPROVE)
)
groups = group_vector(instances)
for k in range(1, 10):
    if groups.strength(k) > 0:
        print(f"group {k}: {groups.strength(k):.2f}")
