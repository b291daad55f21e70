"""Tour of the intersection lattice: named classes, pairings, ampleness, descent.

Run:  python3 demos/lattice_tour.py
"""

from ellspec import (
    Surface,
    descent_not_effective,
    intersect,
    invariant_subspace_has_integral_point,
    is_ample_fxi,
    named_class,
    named_combination,
    pairing_table,
)

BP = Surface.BPRIME

# The lattice has rank 10 with basis l, e1..e9 and form diag(1, -1, ..., -1).
# Named combinations cover the classes used everywhere else: the fiber f,
# the zero section e, the I2 fiber components n1 + o1 = n2 + o2 = f, and the
# section-like classes zeta and xi.
f = named_class(BP, "f")
e = named_class(BP, "e")
print("f*f =", intersect(f, f), " e*f =", intersect(e, f), " e*e =", intersect(e, e))

for name in ("n1", "o1", "n2", "o2"):
    cls = named_class(BP, name)
    print(f"{name}: self-intersection {intersect(cls, cls)}, against f {intersect(cls, f)}")

# A fixed 3-frame shows up in every constraint: e + zeta, f, n1 + o2.
frame = [
    named_combination(BP, {"e": 1, "zeta": 1}),
    f,
    named_combination(BP, {"n1": 1, "o2": 1}),
]
print("\npairing matrix of (e+zeta, f, n1+o2):")
for row in pairing_table(frame):
    print("  ", [str(v) for v in row])

# Ampleness in the (f, e1, xi) frame reduces to six positive witnesses.
cert = is_ample_fxi(25, 144, 168)
print("\n25f' + 144e1' + 168xi' ample?", cert.ample)
print("witnesses:", tuple(str(w) for w in cert.witnesses()))

# A class is certified non-effective by pairing against nef classes and
# peeling off xi and e1 until the pairing with f' goes negative.
target = named_combination(BP, {"zeta": 6, "xi": 6, "f": -1})
descent = descent_not_effective(target)
print(f"\ndescent on 6*zeta' + 6*xi' - f': {descent.verdict} in {len(descent.steps)} steps")
for step in descent.steps[:3]:
    print(f"   subtract {step.subtracted}: {step.result}")
print("   ...")

# The sign ambiguity in the search cannot be fixed by an integral twist:
# the relevant affine subspace misses the integer lattice entirely.
result = invariant_subspace_has_integral_point()
print("\nintegral point on the invariant subspace?", result.exists)
print("obstruction functional value:", result.obstruction_value, "(must be integral, is not)")
