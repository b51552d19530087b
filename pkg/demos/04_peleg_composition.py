"""Peleg composition: choice functions over intermediate sets, the two
liftings, and why associativity fails in general.

Run: python3 demos/04_peleg_composition.py
"""

from multirel import (
    Carrier,
    MRel,
    d_subrelations,
    eta,
    kleisli_compose,
    kleisli_lift,
    peleg_compose,
    peleg_lift,
)

X = Carrier(3, names=("a", "b", "c"))


def m(pairs):
    return MRel.from_pairs(X, X, [(a, sum(1 << e for e in elems)) for a, elems in pairs])


R = m([(0, [0, 1]), (1, [0]), (2, [2])])
S = m([(0, [0]), (0, [1]), (1, [0]), (1, [2]), (2, [2])])

print("R commits a to the set {a,b}; S offers a a choice of {a} or {b}:")
print("  R =", R)
print("  S =", S)

print("\nPeleg composition picks one S-alternative per element of each")
print("R-set and unions the choices:")
print("  R * S =", peleg_compose(R, S))
print("Kleisli composition instead unions all alternatives at once:")
print("  R @ S =", kleisli_compose(R, S))

print("\nBoth liftings act on subsets; they agree exactly on the outer")
print("deterministic multirelations:")
one = eta(Carrier(2))
print("  peleg_lift(eta) rows:", peleg_lift(one).rows)
print("  kleisli_lift(eta) rows:", kleisli_lift(one).rows)

print("\nEvery multirelation is the union of its univalent same-domain")
print("parts; S splits into", len(list(d_subrelations(S))), "of them.")

print("\nAssociativity fails: composing towards the right keeps choices")
print("independent that the left bracketing has already merged.")
left = peleg_compose(peleg_compose(R, R), S)
right = peleg_compose(R, peleg_compose(R, S))
w = 0b111
print("  (R*R)*S has (a,{a,b,c}):", left.has(0, w))
print("  R*(R*S) has (a,{a,b,c}):", right.has(0, w))
from multirel import is_submrel

print("  left bracketing is always included in the right:", is_submrel(left, right))
