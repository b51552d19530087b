"""Determinisation: fusion and fission approximate a multirelation by an
outer or inner deterministic one; the co-maps are their conjugates.

Run: python3 demos/05_determinisation.py
"""

from multirel import (
    Carrier,
    MRel,
    alpha,
    closed_repr,
    cofission,
    cofusion,
    fission,
    fixpoint_class,
    fusion,
    preorder,
)

X = Carrier(2, names=("a", "b"))
R = MRel.from_pairs(X, X, [(0, 0b01), (0, 0b11)])
print("R offers a the alternatives {a} and {a,b}; b is unrelated:")
print("  R =", R)

print("\nFusion merges each row into one set, fission splits the reachable")
print("elements into singletons; both represent the approximation alpha(R):")
print("  alpha(R)   =", sorted(alpha(R).pairs()))
print("  fusion(R)  =", fusion(R), " (note the invented (b,{}) pair)")
print("  fission(R) =", fission(R))

print("\nBoth are Hoare-order adjoints of the identity embeddings:")
print("  R below fusion(R):", preorder("hoare", R, fusion(R)))
print("  fission(R) below R:", preorder("hoare", fission(R), R))

print("\nThe co-maps intersect instead of uniting (empty rows get the")
print("whole carrier, the empty intersection):")
print("  cofusion(R)  =", cofusion(R))
print("  cofission(R) =", cofission(R))

print("\nClosed representations pack fusion and fission into one value:")
print("  down-closed:", closed_repr("down", R))
print("  up-closed:  ", closed_repr("up", R))

rep = fixpoint_class(R)
print("\nFixpoint report: fusion fixes R?", rep.is_fix_fusion,
      "fission fixes R?", rep.is_fix_fission)
print("  (the fixpoints of the two maps are exactly the outer and inner")
print("   deterministic multirelations)")
