"""Relational core: carriers, bit-matrix relations, residuals and the
symmetric quotient.

Run: python3 demos/01_relations.py
"""

from multirel import (
    Carrier,
    Rel,
    classify_rel,
    domain,
    is_subrel,
    rel_bool,
    rel_compose,
    rel_const,
    rel_converse,
    residual,
    symmetric_quotient,
)

X = Carrier(3, names=("a", "b", "c"))
Y = Carrier(2, names=("p", "q"))

R = Rel.from_pairs(X, Y, [(0, 0), (0, 1), (2, 1)])
S = Rel.from_pairs(Y, X, [(0, 2), (1, 1)])

print("R relates a to both p and q, and c to q:")
print("  R =", sorted(R.pairs()), "as JSON:", R.to_json())

print("\nComposition chains R with S, converse transposes:")
print("  R;S  =", sorted(rel_compose(R, S).pairs()))
print("  R~   =", sorted(rel_converse(R).pairs()))

print("\nThe boolean structure is word-parallel on packed rows:")
U = rel_const("universal", X, Y)
print("  -R        =", sorted(rel_bool("complement", R).pairs()))
print("  R & U     =", sorted(rel_bool("inter", R, U).pairs()), "(= R)")

print("\nResiduation: R;S <= T iff R <= T/S iff S <= R\\T.")
T = rel_compose(R, S)
print("  R;S <= R;S:", is_subrel(rel_compose(R, S), T))
print("  R <= (R;S)/S:", is_subrel(R, residual("left", T, S)))
print("  S <= R\\(R;S):", is_subrel(S, residual("right", R, T)))

print("\nThe symmetric quotient compares columns; syq(R~, R~) is the")
print("coarsest relation identifying elements with equal R-rows:")
print("  syq =", sorted(symmetric_quotient(rel_converse(R), rel_converse(R)).pairs()))

print("\ndomain(R) is a test: the partial identity on sources with images:")
print("  dom(R) =", sorted(domain(R).pairs()))
print("  flags of R:", classify_rel(R))
