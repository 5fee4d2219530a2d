"""
Scanning the small-group catalog
================================

Classify every stored group up to order 24 and tabulate the JND ones, then
run the implication checks over everything up to order 64.
"""

from collections import Counter

from jndgroups.catalog import load_catalog
from jndgroups.classify import classify
from jndgroups.implications import check_implications

entries = load_catalog(64)
counts = Counter(e.order for e in entries if e.order <= 24)
print("groups per order:", [counts[n] for n in range(1, 25)])

###############################################################################
# JND groups of order at most 24

reports = {e.id: classify(e.group) for e in entries}
for e in entries:
    r = reports[e.id]
    if e.order <= 24 and r.jnd:
        print(f"{e.id:20s} jna={r.jna!s:5s} solvable={r.solvable!s:5s} monolith={r.monolith_order}")

###############################################################################
# Every implication either does not apply or holds.

bad = [(e.id, c.name) for e in entries for c in check_implications(e.group, reports[e.id]) if c.violated]
print(len(entries), "groups checked,", len(bad), "violations")
