"""The powerset layer: membership, power transpose, approximation, image
functor and the monad constants.

Run: python3 demos/02_powerset_layer.py
"""

from multirel import (
    Carrier,
    Rel,
    alpha,
    ccomp,
    eta,
    image_functor,
    member_rel,
    mrel_to_rel,
    mu,
    omega,
    power_transpose,
    rel_compose,
)

Y = Carrier(2, names=("p", "q"))

print("Subsets of a carrier are ordered by their numeric masks, so P(Y)")
print("for Y = {p, q} lists {}, {p}, {q}, {p, q} in that order.")
mem = member_rel(Y)
print("  membership (element, subset-index):", sorted(mem.pairs()))

R = Rel.from_pairs(Carrier(2), Y, [(0, 0), (0, 1)])
LR = power_transpose(R)
print("\nThe power transpose boxes each image set into a single pair:")
print("  L(R) =", LR)
print("  alpha(L(R)) == R:", alpha(LR) == R)

print("\nThe image functor is the transpose of the whole powerset action:")
P = image_functor(R)
print("  P(R) maps subset-index i to the index of R's image:",
      sorted(P.pairs()))

print("\nMonad structure: eta boxes singletons, mu flattens families:")
print("  eta =", eta(Y))
m = mu(Y)
flat = sorted(b for b in range(4) if m.has(0b1010, b))
print("  mu sends the family {{p}, {p,q}} (index 0b1010) to subset index", flat)

print("\nOmega is the subset order, C complementation; both are plain")
print("relations over the materialized powerset:")
print("  Omega =", sorted(omega(Y).pairs()))
print("  C     =", sorted(ccomp(Y).pairs()))
print("  up-closure of eta equals membership:",
      rel_compose(mrel_to_rel(eta(Y)), omega(Y)) == mem)
