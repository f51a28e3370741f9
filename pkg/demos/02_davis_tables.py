"""
Southern Women: who is most central?
====================================

Eighteen women and the fourteen social events they attended in 1936. The
two tables below rank each side by closeness centralization, computed over
the whole two-mode network.
"""

import json

from twomode import analyze, fixture_path

# %%
# Women. Three of them tie for first place at exactly the same value.
women = analyze(fixture_path("davis"), "left")
print(women.text)

# %%
# Events. ``September 16th`` is the most central event by a wide margin.
events = analyze(fixture_path("davis"), "right")
print(events.text)

# %%
# The JSON form carries exact numerators and denominators, so ties can be
# checked without rounding.
doc = json.loads(analyze(fixture_path("davis"), "left", "json").text)
top = doc["nodes"][:3]
print("tied leaders:", doc["argmax"])
print("their C1 values:", {(r["C1"]["num"], r["C1"]["den"]) for r in top})
