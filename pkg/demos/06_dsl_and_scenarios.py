"""Form syntax, canonical printing, and the scenario reports.

Run:  python demos/06_dsl_and_scenarios.py
"""

import json

from pqforms import ParseError, scenario_runner
from pqforms.cli import main
from pqforms.dsl import parse_form, pretty_print

# ---------------------------------------------------------------------------
# parse and print: one canonical spelling per form
# ---------------------------------------------------------------------------
for src in (
    "dz1^dz2",
    "dzb1^dz1",
    "(z1*zb4+3)*dz1^dz2^dzb3^dzb4",
    "(dz1+dz2)^dzb3",
    "-i*dzb1 + 1/2",
):
    form = parse_form(src, 4)
    print(f"{src!r:45} -> {pretty_print(form)}")

# diagnostics carry positions and expected tokens
try:
    parse_form("dz1^", 2)
except ParseError as err:
    print(f"\ndiagnostic: {err}")
try:
    parse_form("dz9", 2)
except ParseError as err:
    print(f"diagnostic: {err}")

# ---------------------------------------------------------------------------
# scenario reports: engine result vs claimed result, per convention
# ---------------------------------------------------------------------------
report = scenario_runner("lemma31")
print(f"\nscenario lemma31 overall pass: {report.overall_pass}")
for check in report.checks:
    conv = check.convention.describe()
    print(f"  {conv['conjugation']}/{conv['output_index']}: match={check.match} (expected {check.expected_match})")

print("\nscenario k3 as JSON:")
print(json.dumps(scenario_runner("k3").to_dict(), indent=2, sort_keys=True)[:400] + " ...")

# the same reports through the CLI entry point
print("\nvia the CLI:")
main(["scenario", "lemma33"])
