"""
A solvable JND group of order 72
================================

Build (Z3 x Z3) x| Q8, check that every proper quotient is Dedekind while the
group itself is not, and take apart its structure.
"""

from jndgroups.catalog import example_72, quaternion
from jndgroups.classify import classify, solvable_jnd_structure, verify_c1
from jndgroups.implications import second_derived
from jndgroups.structure import derived_series, fingerprint, monolith

g = example_72()
print(g)

###############################################################################
# The classification report carries every predicate at once.

r = classify(g)
for name, value in r.flags().items():
    print(f"{name:12s} {value}")
print("center order", r.center_order, "monolith order", r.monolith_order)

###############################################################################
# The derived series drops 72 -> 18 -> 9 -> 1, and the second term from the
# top is exactly the monolith.

print(derived_series(g).orders())
print(second_derived(g) == monolith(g))

###############################################################################
# Split off the elementary abelian monolith A and a complement X.  X acts
# on A = GF(3)^2 faithfully and irreducibly, and it is a quaternion group.

s = solvable_jnd_structure(g)
print("A:", s.a.order, "= %d^%d" % (s.p, s.n), " X:", s.x.order)
print("X is Q8:", fingerprint(s.x.as_group()) == fingerprint(quaternion()))

# the order of X divides p^n - 1 and no nonzero vector is fixed
c1 = verify_c1(s)
print("stabilizers trivial:", c1.stabilizers_trivial, " |X| divides", c1.modulus, ":", c1.order_divides)
