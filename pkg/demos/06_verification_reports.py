"""
Identity suites
===============

Run every suite on F_19 and F_37 and print the one-line summaries.  FAIL and
MIXED are outcomes, with the failing instances kept in each report.
"""

import json

from cyclolab.sums import context_for
from cyclolab.verify import run_all

for p in (19, 37):
    for rep in run_all(context_for(p, 1, 18)):
        print(rep.summary())

rep = run_all(context_for(19, 1, 18), ["JAC-SYM"])[0]
print(json.dumps(rep.counterexample, indent=2))
