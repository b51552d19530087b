"""The law registry and checking engine: exhaustive or seeded-random runs,
side conditions, and deterministic reports.

Run: python3 demos/06_law_checking.py
"""

import json

from multirel.laws import check
from multirel.registry import law_by_id, registry

laws = registry()
print(f"The registry holds {len(laws)} laws; a few of them:")
for law in laws[:3] + [law_by_id("REG-nonassoc-triple")]:
    print(f"  {law.id:40s} [{law.kind}] {law.anchor}")

print("\nChecking the transpose round-trip exhaustively at sizes 2,2:")
rep = check(law_by_id("L2.1-lambda-alpha-inverse"), sizes=(2, 2))
print(f"  verdict={rep.verdict} mode={rep.mode} checked={rep.checked}")

print("\nA law with a side condition draws its slot constructively and")
print("records how many tuples the guard filtered out:")
rep = check(law_by_id("L5-prefix-fusion-total"), sizes=(2, 2))
print(f"  verdict={rep.verdict} checked={rep.checked} "
      f"skipped_by_condition={rep.skipped_by_condition}")

print("\nA pinned regression fails exactly as recorded:")
rep = check(law_by_id("REG-nonassoc-triple"))
print(f"  verdict={rep.verdict} (expected {rep.expected}; "
      f"as declared: {rep.as_declared})")

print("\nA NEG law hunts for its own counterexample and shrinks it:")
rep = check(law_by_id("NEG-peleg-assoc-general"), seed=7)
print(f"  verdict={rep.verdict} after {rep.checked} random triples")
print("  smallest witness:")
print(json.dumps(rep.counterexamples[0], sort_keys=True, indent=4))

print("\nReports are canonical: same law, sizes and seed give identical JSON.")
a = json.dumps(check(law_by_id("NEG-peleg-assoc-general"), seed=7).to_json())
b = json.dumps(check(law_by_id("NEG-peleg-assoc-general"), seed=7).to_json())
print("  identical:", a == b)
