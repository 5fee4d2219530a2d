"""
Semisimple JND groups from wreath products over A5
==================================================

Aut A5 = S5 and Out A5 = Z2.  Inside (Aut A5)^r x| S_r the preimage of a
subgroup D of (Out A5)^r x| S_r is JND when D is Dedekind and acts freely and
transitively on the r coordinates.
"""

import time

from jndgroups.catalog import alternating
from jndgroups.errors import CapExceeded, ConditionsFailed
from jndgroups.semisimple import (
    build_semisimple_jnd,
    build_wreath,
    check_theorem_conditions,
    compute_automorphisms,
    find_q8_witness,
)

pkg = compute_automorphisms(alternating(5))
print("Aut", pkg.aut.order, "Inn", pkg.inn.order, "Out", pkg.out_group.order)
print("Aut A5 acts faithfully on", pkg.rep.degree, "points")

###############################################################################
# r = 1: D is all of Out A5, and the preimage is S5 again.

w1 = build_wreath(pkg, 1)
b = build_semisimple_jnd(pkg, 1, w1.out_wreath.whole, w=w1)
print(b.group.order, b.report.jnd, b.report.monolith_order)

###############################################################################
# r = 2: D is generated by the swap of the two coordinates.

t0 = time.perf_counter()
w2 = build_wreath(pkg, 2)
b = build_semisimple_jnd(pkg, 2, w2.subgroup_from_words("t(0 1)"), w=w2)
print(b.group.order, "jnd", b.report.jnd, "jna", b.report.jna, "monolith", b.report.monolith_order)
print("%.2f s" % (time.perf_counter() - t0))

# an Out generator in one coordinate alone does not move the coordinates
try:
    build_semisimple_jnd(pkg, 2, w2.subgroup_from_words("b1"), w=w2)
except ConditionsFailed as exc:
    print("refused:", exc.failed)

###############################################################################
# r = 4: a quaternion D with beta(D) regular on 4 points.  The conditions are
# checked on the Out side (order 384); the preimage itself has 60^4 * 8
# elements and is reported rather than built.

w4 = build_wreath(pkg, 4)
d, _ = find_q8_witness(w4)
c = check_theorem_conditions(w4, d)
print("D order", c.d_order, "beta(D) order", c.beta_order, "free", c.free, "transitive", c.transitive)
try:
    build_semisimple_jnd(pkg, 4, d, w=w4)
except CapExceeded as exc:
    print("preimage needs", exc.size, "elements")
