"""
Running the claim registry
==========================

Every registered statement is recomputed; a few registered expectations are
known to be off and show up as documented discrepancies.
"""

from gincalc.report import VerifyConfig, to_text, verify_paper

report = verify_paper(VerifyConfig(seed=0))
print(to_text(report))
for c in report.claims:
    if c.status == "documented-discrepancy":
        print(c.id, "computed", c.computed, "registered", c.expected)
