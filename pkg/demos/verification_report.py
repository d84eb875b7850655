"""Run the verification suites from Python and look at the report.

The same report comes from ``cullen verify run --suite ring-laws --format text``.

Run: python3 demos/verification_report.py
"""
import json

from cullen.verify import SuiteConfig, emit_report, run_suites

cfg = SuiteConfig(suites=("ring-laws", "reciprocal"), seed=7, backend="analytic")
report = run_suites(cfg)
print(emit_report(report, "text").decode())

doc = json.loads(emit_report(report))
first = doc["suites"][0]["checks"][0]
print(first["name"], "->", first["paper_anchor"])
print("overall:", doc["overall_pass"])
