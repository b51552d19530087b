"""The law registry: every supported algebraic result as an executable
entry, plus pinned regressions for the known failure examples and NEG
entries for statements that are expected to have counterexamples.

Groups, by id prefix:
    L2.1-*  relational core and powerset structure
    L2.2-*  multirelations, liftings and Peleg composition
    L3.*-*  deterministic multirelations, determinisation, Galois layer
    L4-*    inner univalent multirelations, terminal/non-terminal split
    L5-*    pre/postfixpoint refinements and totality
    L6-*    co-determinisation and closed representations
    A-*     basis concordance: derived definitions vs direct code
    NEG-*   non-theorems: the checker must find a counterexample
    REG-*   regressions pinned to a fixed environment
"""

from __future__ import annotations

from .errors import UnknownLaw
from .laws import Law, Slot


def _r(name: str, src: str = "X", dst: str = "Y", *needs: str) -> Slot:
    return Slot(name, "rel", src, dst, tuple(needs))


def _m(name: str, src: str = "X", dst: str = "Y", *needs: str) -> Slot:
    return Slot(name, "mrel", src, dst, tuple(needs))


def _law(law_id, kind, anchor, claim, slots=(), roles=None, **kw) -> Law:
    if roles is None:
        seen = []
        for s in slots:
            for role in (s.src, s.dst):
                if role not in seen:
                    seen.append(role)
        roles = tuple(seen) or ("X", "Y")
    return Law(law_id, kind, anchor, claim, tuple(slots), tuple(roles), **kw)


def _thm(law_id, anchor, claim, slots=(), **kw) -> Law:
    return _law(law_id, "theorem", anchor, claim, slots, **kw)


def _neg(law_id, anchor, claim, slots=(), **kw) -> Law:
    kw.setdefault("expected", "fail")
    return _law(law_id, "neg", anchor, claim, slots, **kw)


def _reg(law_id, anchor, claim, pinned, expected, roles=("X", "Y"), **kw) -> Law:
    return Law(
        law_id, "regression", anchor, claim, (), tuple(roles),
        pinned=pinned, expected=expected, **kw,
    )


def _mrel_json(src, dst, pairs):
    rows = [[] for _ in range(src)]
    for a, elems in pairs:
        rows[a].append(sorted(elems))
    return {"src": src, "dst": dst, "rows": rows}


def _rel_json(src, dst, pairs):
    return {"src": src, "dst": dst, "pairs": [list(p) for p in pairs]}


_LAWS: list[Law] = [
    # ------------------------------------------------------------------
    # Relational core
    _thm("L2.1-residuation-left", "R;S <= T iff R <= T/S",
         "((R ; S) <= T) == (R <= (T / S))",
         [_r("R", "X", "Y"), _r("S", "Y", "Z"), _r("T", "X", "Z")]),
    _thm("L2.1-residuation-right", "R;S <= T iff S <= R\\T",
         "((R ; S) <= T) == (S <= (R \\ T))",
         [_r("R", "X", "Y"), _r("S", "Y", "Z"), _r("T", "X", "Z")]),
    _thm("L2.1-modular-law", "R;S & T <= (R & T;S~);S",
         "((R ; S) & T) <= ((R & (T ; S^)) ; S)",
         [_r("R", "X", "Y"), _r("S", "Y", "Z"), _r("T", "X", "Z")]),
    _thm("L2.1-univalent-exchange", "P;Q & S = (P & S;Q~);Q for univalent Q",
         "((P ; Q) & S) == ((P & (S ; Q^)) ; Q)",
         [_r("P", "X", "Y"), _r("Q", "Y", "Z", "univalent"), _r("S", "X", "Z")]),
    _thm("L2.1-residual-conjugate", "T\\S = (S~/T~)~",
         "(T \\ S) == ((S^ / T^))^",
         [_r("T", "Z", "X"), _r("S", "Z", "Y")]),
    _thm("L2.1-syq-formula", "syq(T,S) = (T\\S) & (T~/S~)",
         "syq(T, S) == ((T \\ S) & (T^ / S^))",
         [_r("T", "Z", "X"), _r("S", "Z", "Y")]),
    _thm("L2.1-domain-converse", "dom(R) = Id & R;R~",
         "dom(R) == (Id(X) & (R ; R^))", [_r("R")]),
    _thm("L2.1-domain-universal", "dom(R) = Id & R;U",
         "dom(R) == (Id(X) & (R ; U(Y, X)))", [_r("R")]),
    _thm("L2.1-decomposition-rel", "R is the union of its univalent same-domain parts",
         "a(dsup(R ; eta(Y))) == R", [_r("R")]),
    _thm("L2.2-decomposition-mrel", "a multirelation is the union of its univalent parts",
         "dsup(R) == R", [_m("R")]),
    # ------------------------------------------------------------------
    # Power structure
    _thm("L2.1-lambda-alpha-inverse", "a(L(R)) = R",
         "a(L(R)) == R", [_r("R")]),
    _thm("L2.1-alpha-lambda-inverse-det", "L(a(f)) = f for outer deterministic f",
         "L(a(f)) == f", [_m("f", "X", "Y", "outer_deterministic")]),
    _thm("L2.1-lambda-bijection", "f = L(R) iff R = a(f), f outer deterministic",
         "(f == L(R)) == (R == a(f))",
         [_m("f", "X", "Y", "outer_deterministic"), _r("R")]),
    _thm("L2.1-pow-functor", "P(R;S) = P(R);P(S)",
         "Pf(R ; S) == (Pf(R) ; Pf(S))",
         [_r("R", "X", "Y"), _r("S", "Y", "Z")]),
    _thm("L2.1-pow-functor-id", "P(Id) = Id",
         "Pf(Id(X)) == Id(pw(X))", roles=("X",)),
    _thm("L2.1-lambda-compose", "L(R;S) = L(R);P(S)",
         "L(R ; S) == (L(R) ; Pf(S))",
         [_r("R", "X", "Y"), _r("S", "Y", "Z")]),
    _thm("L2.1-eta-pow-lambda", "eta;P(R) = L(R)",
         "(eta(X) ; Pf(R)) == L(R)", [_r("R")]),
    _thm("L2.1-pow-right-inverse", "a(eta;P(R)) = R",
         "a(eta(X) ; Pf(R)) == R", [_r("R")]),
    _thm("L2.1-lambda-det", "L(f) = f;eta for deterministic f",
         "L(f) == (f ; eta(Y))", [_r("f", "X", "Y", "deterministic")]),
    _thm("L2.1-eta-natural", "eta;P(f) = f;eta for deterministic f",
         "(eta(X) ; Pf(f)) == (f ; eta(Y))",
         [_r("f", "X", "Y", "deterministic")]),
    _thm("L2.1-mu-natural", "P(P(f));mu = mu;P(f) for deterministic f",
         "(Pf(Pf(f)) ; mu(Y)) == (mu(X) ; Pf(f))",
         [_r("f", "X", "Y", "deterministic")], size_cap=2),
    _thm("L2.1-monad-assoc", "P(mu);mu = mu;mu",
         "(Pf(mu(X)) ; mu(X)) == (mu(pw(X)) ; mu(X))", roles=("X",), size_cap=2),
    _thm("L2.1-monad-unit-pow", "P(eta);mu = Id",
         "(Pf(eta(X)) ; mu(X)) == Id(pw(X))", roles=("X",)),
    _thm("L2.1-monad-unit-eta", "eta;mu = Id",
         "(eta(pw(X)) ; mu(X)) == Id(pw(X))", roles=("X",)),
    _thm("L2.1-alpha-eta-id", "a(eta) = Id",
         "a(eta(X)) == Id(X)", roles=("X",)),
    _thm("L2.1-lambda-c-complement", "L(R);C = L(-R)",
         "(L(R) ; Cc(Y)) == L(-R)", [_r("R")]),
    _thm("L2.1-lambda-omega-residual", "L(R);Om = R~\\mem",
         "(L(R) ; Om(Y)) == (R^ \\ mem(Y))", [_r("R")]),
    _thm("L2.1-lambda-omega-converse", "L(R);Om = (mem~/R)~",
         "(L(R) ; Om(Y)) == ((mem(Y)^ / R))^", [_r("R")]),
    _thm("L2.1-lambda-has-identity", "L(mem~) = Id on the powerset",
         "L(mem(X)^) == Id(pw(X))", roles=("X",)),
    _thm("L2.1-lambda-natural-det", "f;L(R) = L(f;R) for deterministic f",
         "(f ; L(R)) == L(f ; R)",
         [_r("f", "X", "Y", "deterministic"), _r("R", "Y", "Z")]),
    # ------------------------------------------------------------------
    # Inner structure
    _thm("L2.2-icup-unit", "inner union has the inner unit as unit",
         "icup(R, ilow(X, Y)) == R", [_m("R")]),
    _thm("L2.2-icup-comm", "inner union is commutative",
         "icup(R, S) == icup(S, R)", [_m("R"), _m("S")]),
    _thm("L2.2-icup-assoc", "inner union is associative",
         "icup(icup(R, S), T) == icup(R, icup(S, T))",
         [_m("R"), _m("S"), _m("T")]),
    _thm("L2.2-icap-comm", "inner intersection is commutative",
         "icap(R, S) == icap(S, R)", [_m("R"), _m("S")]),
    _thm("L2.2-icap-assoc", "inner intersection is associative",
         "icap(icap(R, S), T) == icap(R, icap(S, T))",
         [_m("R"), _m("S"), _m("T")]),
    _thm("L2.2-icup-idempotent-univalent", "inner union is idempotent on outer univalent",
         "icup(R, R) == R", [_m("R", "X", "Y", "outer_univalent")]),
    _neg("NEG-icup-idempotent", "inner union is not idempotent in general",
         "icup(R, R) == R", [_m("R")], density=0.3),
    _thm("L2.2-up-closure-omega", "up(R) = R;Om",
         "up(R) == (R ; Om(Y))", [_m("R")]),
    _thm("L2.2-down-closure-omega", "down(R) = R;Om~",
         "down(R) == (R ; Om(Y)^)", [_m("R")]),
    _thm("L2.2-smyth-def", "R below S in the Smyth order iff S <= up(R)",
         "(R <u= S) == (S <= up(R))", [_m("R"), _m("S")]),
    _thm("L2.2-hoare-def", "R below S in the Hoare order iff R <= down(S)",
         "(R <d= S) == (R <= down(S))", [_m("R"), _m("S")]),
    _thm("L2.2-em-def", "under Hoare, Egli-Milner reduces to Smyth",
         "(R <ud= S) == (R <u= S)", [_m("R"), _m("S")], guard="R <d= S"),
    _thm("L3.2-preorders-coincide-det", "the three orders agree on outer deterministic",
         "(R <u= S) == (R <d= S)",
         [_m("R", "X", "Y", "outer_deterministic"),
          _m("S", "X", "Y", "outer_deterministic")]),
    _thm("L3.2-preorders-coincide-det-em", "Egli-Milner agrees too on outer deterministic",
         "(R <ud= S) == (R <d= S)",
         [_m("R", "X", "Y", "outer_deterministic"),
          _m("S", "X", "Y", "outer_deterministic")]),
    _thm("L2.2-fix-inner-det-relview", "R;1~;1 = R iff R is a set of atoms",
         "(((R ; eta(Y)^) ; eta(Y)) == R) == (R == (R & At(X, Y)))", [_m("R")]),
    _thm("L2.2-downclosure-peleg", "down(R) = R * down(eta)",
         "down(R) == (R * down(eta))", [_m("R")]),
    _thm("L2.2-down-peleg", "down-closing a Peleg composition lowers its second factor",
         "down(R * S) == (R * down(S))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z")],
         note="an instance of associativity with a union-closed third "
              "factor: the lowered unit is union-closed"),
    _thm("L2.2-down-unit-lift", "the lift of the lowered unit is the superset order",
         "pl(down(eta(X))) == Om(X)^", roles=("X",)),
    # ------------------------------------------------------------------
    # Liftings and Peleg composition
    _thm("L2.2-klift-functor-mu", "kl(R) = P(R);mu",
         "kl(R) == (Pf(R) ; mu(Y))", [_m("R")]),
    _thm("L2.2-klift-ext-compose", "kl(R @ S) = kl(R);kl(S)",
         "kl(R @ S) == (kl(R) ; kl(S))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z")]),
    _thm("L2.2-klift-eta", "kl(eta) = Id",
         "kl(eta(X)) == Id(pw(X))", roles=("X",)),
    _thm("L2.2-klift-left-unit-det", "eta;kl(f) = f for outer deterministic f",
         "(eta(X) ; kl(f)) == f", [_m("f", "X", "Y", "outer_deterministic")]),
    _thm("L2.2-pow-from-klift", "P(R) = kl(R;eta)",
         "Pf(R) == kl(R ; eta(Y))", [_r("R")]),
    _thm("L2.2-mu-as-id-lift", "mu = kl of the identity multirelation",
         "mu(X) == kl(L(mem(X)^))", roles=("X",)),
    _thm("L2.2-univalent-embed", "R = dom(R);eta;kl(R) for univalent R",
         "((dom(R) ; eta(X)) ; kl(R)) == R",
         [_m("R", "X", "Y", "outer_univalent")]),
    _thm("L2.2-univalent-lift", "pl(R) = pl(dom(R);eta);kl(R) for univalent R",
         "pl(R) == (pl(dom(R) ; eta(X)) ; kl(R))",
         [_m("R", "X", "Y", "outer_univalent")]),
    _thm("L2.2-det-embed", "R = eta;kl(R) for outer deterministic R",
         "(eta(X) ; kl(R)) == R", [_m("R", "X", "Y", "outer_deterministic")]),
    _thm("L2.2-det-lift", "pl(R) = kl(R) for outer deterministic R",
         "pl(R) == kl(R)", [_m("R", "X", "Y", "outer_deterministic")]),
    _thm("L2.2-eta-star-id", "pl(eta) = Id",
         "pl(eta(X)) == Id(pw(X))", roles=("X",)),
    _thm("L2.2-peleg-left-unit", "eta is a left unit for Peleg composition",
         "(1 * R) == R", [_m("R")]),
    _thm("L2.2-peleg-right-unit", "eta is a right unit for Peleg composition",
         "(R * 1) == R", [_m("R")]),
    _thm("L2.2-subassociativity", "(R*S)*T <= R*(S*T)",
         "((R * S) * T) <= (R * (S * T))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z"), _m("T", "Z", "W")]),
    _neg("NEG-peleg-assoc-general", "Peleg composition is not associative",
         "((R * S) * T) == (R * (S * T))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z"), _m("T", "Z", "W")],
         count=400, density=0.3),
    _thm("L2.2-assoc-union-closed-third", "associativity holds when the third factor is union-closed",
         "((R * S) * T) == (R * (S * T))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z"), _m("T", "Z", "W", "union_closed")],
         note="exploratory: union-closedness is read as closure of each row "
              "under binary unions of its members"),
    _thm("L2.2-first-arg-sup", "Peleg composition joins over its first argument",
         "((R | S) * T) == ((R * T) | (S * T))",
         [_m("R", "X", "Y"), _m("S", "X", "Y"), _m("T", "Y", "Z")]),
    _thm("L2.2-univalent-ext", "pl(S * f) = pl(S);pl(f) for univalent f",
         "pl(S * f) == (pl(S) ; pl(f))",
         [_m("S", "X", "Y"), _m("f", "Y", "Z", "outer_univalent")]),
    _thm("L2.2-univalent-assoc", "(R*S)*f = R*(S*f) for univalent f",
         "((R * S) * f) == (R * (S * f))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z"), _m("f", "Z", "W", "outer_univalent")]),
    _thm("L2.2-closure-univalent", "outer univalence is closed under Peleg composition",
         "(((R * S)^) ; (R * S)) <= Id(pw(Z))",
         [_m("R", "X", "Y", "outer_univalent"), _m("S", "Y", "Z", "outer_univalent")]),
    _thm("L5-closure-outer-total", "outer totality is closed under Peleg composition",
         "Id(X) <= ((R * S) ; (R * S)^)",
         [_m("R", "X", "Y", "outer_total"), _m("S", "Y", "Z", "outer_total")]),
    _thm("L5-closure-inner-total", "inner totality is closed under Peleg composition",
         "(R * S) <= -ilow(X, Z)",
         [_m("R", "X", "Y", "inner_total"), _m("S", "Y", "Z", "inner_total")]),
    _thm("L4-closure-inner-univalent", "inner univalence is closed under Peleg composition",
         "(R * S) <= (At(X, Z) | ilow(X, Z))",
         [_m("R", "X", "Y", "inner_univalent"), _m("S", "Y", "Z", "inner_univalent")]),
    _thm("L4-assoc-inner-univalent", "inner univalent multirelations compose associatively",
         "((Q * R) * S) == (Q * (R * S))",
         [_m("Q", "X", "Y", "inner_univalent"), _m("R", "Y", "Z", "inner_univalent"),
          _m("S", "Z", "W", "inner_univalent")]),
    _thm("L3.2-closure-inner-det", "inner determinism is closed under Peleg composition",
         "(R * S) <= At(X, Z)",
         [_m("R", "X", "Y", "inner_deterministic"),
          _m("S", "Y", "Z", "inner_deterministic")]),
    _thm("L3.2-assoc-inner-det", "inner deterministic multirelations compose associatively",
         "((Q * R) * S) == (Q * (R * S))",
         [_m("Q", "X", "Y", "inner_deterministic"),
          _m("R", "Y", "Z", "inner_deterministic"),
          _m("S", "Z", "W", "inner_deterministic")]),
    _thm("L3.2-assoc-outer-det", "outer deterministic multirelations compose associatively",
         "((Q * R) * S) == (Q * (R * S))",
         [_m("Q", "X", "Y", "outer_deterministic"),
          _m("R", "Y", "Z", "outer_deterministic"),
          _m("S", "Z", "W", "outer_deterministic")]),
    # ------------------------------------------------------------------
    # Bijections and functors
    _thm("L3.1-alpha-eta-id", "a(R;eta) = R",
         "a(R ; eta(Y)) == R", [_r("R")]),
    _thm("L3.1-eta-alpha-inner-det", "a(S);eta = S for inner deterministic S",
         "(a(S) ; eta(Y)) == S", [_m("S", "X", "Y", "inner_deterministic")]),
    _thm("L3.1-eta-bijection", "S = eta(R) iff R = a(S), S inner deterministic",
         "(S == (R ; eta(Y))) == (R == a(S))",
         [_m("S", "X", "Y", "inner_deterministic"), _r("R")]),
    _thm("L3.1-eta-inner-det", "R;eta is a set of atoms",
         "(R ; eta(Y)) <= At(X, Y)", [_r("R")]),
    _thm("L3.1-lambda-outer-det", "the transpose is a mapping",
         "-L(R) == (L(R) ; -Id(pw(Y)))", [_r("R")]),
    _thm("L3.2-lambda-functor", "L(R;S) = L(R) * L(S)",
         "L(R ; S) == (L(R) * L(S))",
         [_r("R", "X", "Y"), _r("S", "Y", "Z")]),
    _thm("L3.2-lambda-functor-id", "L(Id) = eta",
         "L(Id(X)) == eta(X)", roles=("X",)),
    _thm("L3.2-eta-functor", "(R;S);eta = (R;eta) * (S;eta)",
         "((R ; S) ; eta(Z)) == ((R ; eta(Y)) * (S ; eta(Z)))",
         [_r("R", "X", "Y"), _r("S", "Y", "Z")]),
    _thm("L3.2-alpha-mult-outer-det", "a is multiplicative on outer deterministic",
         "a(R * S) == (a(R) ; a(S))",
         [_m("R", "X", "Y", "outer_deterministic"),
          _m("S", "Y", "Z", "outer_deterministic")]),
    _thm("L3.2-alpha-mult-inner-det", "a is multiplicative on inner deterministic",
         "a(R * S) == (a(R) ; a(S))",
         [_m("R", "X", "Y", "inner_deterministic"),
          _m("S", "Y", "Z", "inner_deterministic")]),
    _thm("L3.2-inner-det-peleg-form", "R * S = R;1~;S for inner deterministic R",
         "(R * S) == ((R ; eta(Y)^) ; S)",
         [_m("R", "X", "Y", "inner_deterministic"), _m("S", "Y", "Z")]),
    _thm("L3.2-inner-det-alpha-form", "a(R) = R;1~ for inner deterministic R",
         "a(R) == (R ; eta(Y)^)", [_m("R", "X", "Y", "inner_deterministic")]),
    _thm("L3.2-kleisli-assoc", "Kleisli composition is associative",
         "((R @ S) @ T) == (R @ (S @ T))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z"), _m("T", "Z", "W")]),
    _thm("L3.2-kleisli-standard", "Kleisli composition factors through the image functor",
         "(R @ S) == ((R ; Pf(S)) ; mu(Z))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z")]),
    _thm("L3.2-kleisli-right-unit", "eta is a right unit for Kleisli composition",
         "(R @ 1) == R", [_m("R")]),
    _thm("L3.2-kleisli-left-unit-det", "eta is a left Kleisli unit on outer deterministic",
         "(1 @ R) == R", [_m("R", "X", "Y", "outer_deterministic")]),
    _neg("NEG-kleisli-left-unit", "eta is not a left Kleisli unit in general",
         "(1 @ R) == R", [_m("R")], density=0.3),
    _thm("L3.2-quantaloid-inner-det", "Peleg joins over unions of inner deterministic",
         "(T * (S1 | S2)) == ((T * S1) | (T * S2))",
         [_m("T", "X", "Y", "inner_deterministic"),
          _m("S1", "Y", "Z", "inner_deterministic"),
          _m("S2", "Y", "Z", "inner_deterministic")]),
    _thm("L3.2-quantaloid-inner-det-empty", "the empty union behaves for inner deterministic",
         "(T * 0(Y, Z)) == 0(X, Z)",
         [_m("T", "X", "Y", "inner_deterministic")], roles=("X", "Y", "Z")),
    _thm("L3.2-quantaloid-outer-det", "Peleg joins over inner unions of outer deterministic",
         "(T * icup(S1, S2)) == icup(T * S1, T * S2)",
         [_m("T", "X", "Y", "outer_deterministic"),
          _m("S1", "Y", "Z", "outer_deterministic"),
          _m("S2", "Y", "Z", "outer_deterministic")]),
    _thm("L3.2-quantaloid-outer-det-empty", "the empty inner union behaves for outer deterministic",
         "(T * ilow(Y, Z)) == ilow(X, Z)",
         [_m("T", "X", "Y", "outer_deterministic")], roles=("X", "Y", "Z")),
    _thm("L3.2-eta-preserves-unions", "embedding by eta preserves unions",
         "((R | S) ; eta(Y)) == ((R ; eta(Y)) | (S ; eta(Y)))",
         [_r("R"), _r("S")]),
    _thm("L3.2-lambda-union-icup", "the transpose turns unions into inner unions",
         "L(R | S) == icup(L(R), L(S))", [_r("R"), _r("S")]),
    _thm("L3.2-alpha-preserves-unions", "a preserves unions",
         "a(R | S) == (a(R) | a(S))", [_m("R"), _m("S")]),
    _thm("L3.2-alpha-icup-det", "a turns inner unions of outer deterministic into unions",
         "a(icup(R, S)) == (a(R) | a(S))",
         [_m("R", "X", "Y", "outer_deterministic"),
          _m("S", "X", "Y", "outer_deterministic")]),
    _reg("REG-lambda-not-subset-monotone",
         "R <= S does not give L(R) <= L(S)",
         "L(R) <= L(S)",
         {"carriers": {"X": 1, "Y": 1},
          "rels": {"R": _rel_json(1, 1, []), "S": _rel_json(1, 1, [(0, 0)])}},
         expected="fail"),
    # ------------------------------------------------------------------
    # Determinisation: Galois layer
    _thm("L3.3-galois-alpha-lambda", "a(R) <= T iff R below L(T) in the Hoare order",
         "(a(R) <= T) == (R <d= L(T))", [_m("R"), _r("T")]),
    _thm("L3.3-galois-eta-alpha", "eta(T) below S iff T <= a(S)",
         "((T ; eta(Y)) <d= S) == (T <= a(S))", [_r("T"), _m("S")]),
    _thm("L3.3-galois-fission-fusion", "di(R) below S iff R below do(S)",
         "(di(R) <d= S) == (R <d= do(S))", [_m("R"), _m("S")]),
    _thm("L3.3-alpha-icap", "a(R icap S) = a(R) & a(S)",
         "a(icap(R, S)) == (a(R) & a(S))", [_m("R"), _m("S")]),
    _thm("L3.3-lambda-monotone", "L is monotone into the Hoare order",
         "L(T) <d= L(T | V)", [_r("T"), _r("V")]),
    _thm("L3.3-eta-monotone", "eta is monotone into the Hoare order",
         "(T ; eta(Y)) <d= ((T | V) ; eta(Y))", [_r("T"), _r("V")]),
    _thm("L3.3-alpha-monotone", "a is monotone from the Hoare order",
         "a(R & down(S)) <= a(S)", [_m("R"), _m("S")]),
    _thm("L3.3-lambda-em-monotone", "L is monotone into the Egli-Milner order",
         "L(T) <ud= L(T | V)", [_r("T"), _r("V")]),
    _thm("L3.3-alpha-union-monotone", "a is monotone for plain inclusion",
         "a(R) <= a(R | S)", [_m("R"), _m("S")]),
    _thm("L3.3-fusion-extensive", "R below do(R)",
         "R <d= do(R)", [_m("R")]),
    _thm("L3.3-fission-intensive", "di(R) below R",
         "di(R) <d= R", [_m("R")]),
    _thm("L3.3-fusion-idempotent", "do is idempotent",
         "do(do(R)) == do(R)", [_m("R")]),
    _thm("L3.3-fission-idempotent", "di is idempotent",
         "di(di(R)) == di(R)", [_m("R")]),
    _thm("L3.3-fusion-monotone", "do is monotone in the Hoare order",
         "do(R & down(S)) <d= do(S)", [_m("R"), _m("S")]),
    _thm("L3.3-fission-monotone", "di is monotone in the Hoare order",
         "di(R & down(S)) <d= di(S)", [_m("R"), _m("S")]),
    _thm("L3.3-fusion-least-above", "do(R) is the least outer deterministic above R",
         "do(R) <d= S", [_m("R"), _m("S", "X", "Y", "outer_deterministic")],
         guard="R <d= S"),
    _thm("L3.3-fission-greatest-below", "di(R) is the greatest inner deterministic below R",
         "S <d= di(R)", [_m("R"), _m("S", "X", "Y", "inner_deterministic")],
         guard="S <d= R"),
    _thm("L3.4-idempotence-fission-fusion", "di after do is di",
         "di(do(R)) == di(R)", [_m("R")]),
    _thm("L3.4-idempotence-fusion-fission", "do after di is do",
         "do(di(R)) == do(R)", [_m("R")]),
    _thm("L3.3-explicit-fission", "di(R) = down(R) & atoms",
         "di(R) == (down(R) & At(X, Y))", [_m("R")]),
    _thm("L3.3-explicit-down-fusion", "down(do(R)) by complements of closures",
         "down(do(R)) == -up(-down(R) & At(X, Y))", [_m("R")]),
    _thm("L3.3-explicit-up-fusion", "up(do(R)) by complements of closures",
         "up(do(R)) == -down(icpl(down(R)) & coAt(X, Y))", [_m("R")]),
    _thm("L3.3-explicit-up-fusion-dual", "up(do(R)) is the dual of up(di(R))",
         "up(do(R)) == dual(up(di(R)))", [_m("R")]),
    _thm("L3.3-explicit-fusion", "do(R) as the meet of the two closure complements",
         "do(R) == (-up(-down(R) & At(X, Y)) & -down(icpl(down(R)) & coAt(X, Y)))",
         [_m("R")]),
    _thm("L3.3-lambda-injective", "the power transpose is injective",
         "(L(R) == L(S)) == (R == S)", [_r("R"), _r("S")],
         note="with surjectivity of a (the round-trip law) this gives the "
              "epi-mono factorisation of do; uniqueness up to isomorphism "
              "is not mechanized"),
    _thm("L3.3-eta-injective", "the unit embedding is injective",
         "((R ; eta(Y)) == (S ; eta(Y))) == (R == S)", [_r("R"), _r("S")],
         note="epi-mono factorisation of di; uniqueness up to isomorphism "
              "is not mechanized"),
    _thm("L3.3-fix-fusion", "fixpoints of do are exactly the mappings",
         "(do(R) == R) == (-R == (R ; -Id(pw(Y))))", [_m("R")]),
    _thm("L3.3-fix-fission", "fixpoints of di are exactly the sets of atoms",
         "(di(R) == R) == (R <= At(X, Y))", [_m("R")]),
    _thm("L3.4-klift-fusion", "kl(R) = do(has;R)",
         "kl(R) == do(mem(X)^ ; R)", [_m("R")]),
    _thm("L3.4-fusion-via-eta-klift", "do(R) = eta;kl(R)",
         "do(R) == (eta(X) ; kl(R))", [_m("R")]),
    _thm("L3.4-fusion-via-lambda-mu", "do(R) = L(R);mu",
         "do(R) == (L(R) ; mu(Y))", [_m("R")]),
    _thm("L3.4-alpha-lift-factorization", "a(pl(R)) factors through the domain lift",
         "a(pl(R)) == (a(pl(dom(R) ; eta(X))) ; a(R))", [_m("R")]),
    _thm("L3.4-fission-peleg-precompose", "di(R) * S = a(R);S",
         "(di(R) * S) == (a(R) ; S)", [_m("R", "X", "Y"), _m("S", "Y", "Z")]),
    _thm("L3.4-fission-subdistributive", "di(R*S) <= di(R)*di(S)",
         "di(R * S) <= (di(R) * di(S))", [_m("R", "X", "Y"), _m("S", "Y", "Z")]),
    _thm("L3.4-fusion-em-subdistributive", "do(R*S) Egli-Milner-below do(R)*do(S)",
         "do(R * S) <ud= (do(R) * do(S))", [_m("R", "X", "Y"), _m("S", "Y", "Z")]),
    _thm("L3.4-alpha-peleg-subdistributive", "a(R*S) <= a(R);a(S)",
         "a(R * S) <= (a(R) ; a(S))", [_m("R", "X", "Y"), _m("S", "Y", "Z")]),
    _neg("NEG-alpha-peleg-multiplicative", "a(R*S) = a(R);a(S) fails in general",
         "a(R * S) == (a(R) ; a(S))", [_m("R", "X", "Y"), _m("S", "Y", "Z")],
         density=0.3),
    # ------------------------------------------------------------------
    # Terminal split and inner univalence
    _thm("L4-alpha-nu", "a ignores the terminal part",
         "a(nu(R)) == a(R)", [_m("R")]),
    _thm("L4-alpha-tau", "a annihilates the terminal part",
         "a(tau(R)) == 0", [_m("R")]),
    _thm("L4-fission-nonterminal", "di(R) has no terminal part",
         "nu(di(R)) == di(R)", [_m("R")]),
    _thm("L4-fission-of-nonterminal", "di only sees the non-terminal part",
         "di(nu(R)) == di(R)", [_m("R")]),
    _thm("L4-tau-of-fission", "tau(di(R)) is empty",
         "tau(di(R)) == 0", [_m("R")]),
    _thm("L4-fusion-of-nonterminal", "do only sees the non-terminal part",
         "do(nu(R)) == do(R)", [_m("R")]),
    _thm("L4-peleg-nu-tau", "R*S = nu(R)*S | tau(R)",
         "(R * S) == ((nu(R) * S) | tau(R))", [_m("R", "X", "Y"), _m("S", "Y", "Z")]),
    _thm("L4-tau-peleg", "tau(R*S) = tau(R) | nu(R)*tau(S)",
         "tau(R * S) == (tau(R) | (nu(R) * tau(S)))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z")]),
    _thm("L4-iuniv-char-atoms", "inner univalent iff the non-terminal part is atoms",
         "(nu(R) <= At(X, Y)) == (R <= (At(X, Y) | ilow(X, Y)))", [_m("R")]),
    _thm("L4-iuniv-char-fission", "inner univalent iff nu(R) = di(R)",
         "(nu(R) == di(R)) == (R <= (At(X, Y) | ilow(X, Y)))", [_m("R")]),
    _thm("L4-iuniv-char-decomp", "inner univalent iff R = di(R) | tau(R)",
         "(R == (di(R) | tau(R))) == (R <= (At(X, Y) | ilow(X, Y)))", [_m("R")]),
    _thm("L4-iuniv-fission-below", "di(R) <= R for inner univalent R",
         "di(R) <= R", [_m("R", "X", "Y", "inner_univalent")]),
    _thm("L4-iuniv-peleg-form", "R*S = a(R);S | tau(R) for inner univalent R",
         "(R * S) == ((a(R) ; S) | tau(R))",
         [_m("R", "X", "Y", "inner_univalent"), _m("S", "Y", "Z")]),
    _thm("L4-iuniv-alpha-multiplicative", "a is multiplicative when the first factor is inner univalent",
         "a(R * S) == (a(R) ; a(S))",
         [_m("R", "X", "Y", "inner_univalent"), _m("S", "Y", "Z")]),
    _thm("L4-iuniv-fission-functor", "di splits Peleg composition at inner univalent first factor",
         "di(R * S) == (di(R) * di(S))",
         [_m("R", "X", "Y", "inner_univalent"), _m("S", "Y", "Z")]),
    _thm("L4-iuniv-fusion-functor", "do splits Peleg composition at inner univalent first factor",
         "do(R * S) == (do(R) * do(S))",
         [_m("R", "X", "Y", "inner_univalent"), _m("S", "Y", "Z")]),
    _thm("L4-iuniv-union-closed", "inner univalent multirelations are closed under unions",
         "(R | S) <= (At(X, Y) | ilow(X, Y))",
         [_m("R", "X", "Y", "inner_univalent"), _m("S", "X", "Y", "inner_univalent")]),
    _thm("L4-second-arg-nonempty-sups", "Peleg joins over non-empty unions in the second argument",
         "(R * (S1 | S2)) == ((R * S1) | (R * S2))",
         [_m("R", "X", "Y", "inner_univalent"), _m("S1", "Y", "Z"), _m("S2", "Y", "Z")]),
    _thm("L4-inner-total-peleg-zero", "R * empty = empty for inner total R",
         "(R * 0(Y, Z)) == 0(X, Z)",
         [_m("R", "X", "Y", "inner_total")], roles=("X", "Y", "Z")),
    _reg("REG-quantaloid-union-empty",
         "R * empty union fails to be empty without inner totality",
         "(R * Z) == Z",
         {"carriers": {"X": 1, "Y": 1},
          "mrels": {"R": _mrel_json(1, 1, [(0, [])]),
                    "Z": _mrel_json(1, 1, [])}},
         expected="fail"),
    _reg("REG-quantaloid-cup-empty",
         "empty * (empty inner union) fails to be the inner unit",
         "(R * ilow(X, X)) == ilow(X, X)",
         {"carriers": {"X": 1},
          "mrels": {"R": _mrel_json(1, 1, [])}},
         expected="fail", roles=("X",)),
    # ------------------------------------------------------------------
    # Totality refinements
    _thm("L5-total-alpha-multiplicative", "a is multiplicative on outer total",
         "a(R * S) == (a(R) ; a(S))",
         [_m("R", "X", "Y", "outer_total"), _m("S", "Y", "Z", "outer_total")]),
    _thm("L5-total-fission-functor", "di splits Peleg composition on outer total",
         "di(R * S) == (di(R) * di(S))",
         [_m("R", "X", "Y", "outer_total"), _m("S", "Y", "Z", "outer_total")]),
    _thm("L5-total-fusion-functor", "do splits Peleg composition on outer total",
         "do(R * S) == (do(R) * do(S))",
         [_m("R", "X", "Y", "outer_total"), _m("S", "Y", "Z", "outer_total")]),
    _reg("REG-det-peleg-fission",
         "di does not split Peleg composition for merely univalent factors",
         "di(R * S) == (di(R) * di(S))",
         {"carriers": {"X": 2, "Y": 2},
          "mrels": {"R": _mrel_json(2, 2, [(0, [0, 1])]),
                    "S": _mrel_json(2, 2, [(0, [0])])}},
         expected="fail"),
    _reg("REG-det-peleg-fusion",
         "do does not split Peleg composition for merely univalent factors",
         "do(R * S) == (do(R) * do(S))",
         {"carriers": {"X": 2, "Y": 2},
          "mrels": {"R": _mrel_json(2, 2, [(0, [0, 1])]),
                    "S": _mrel_json(2, 2, [(0, [0])])}},
         expected="fail"),
    _reg("REG-alpha-strict",
         "a(R*R) = a(R);a(R) fails on a two-element set",
         "a(R * R) == (a(R) ; a(R))",
         {"carriers": {"X": 2, "Y": 2},
          "mrels": {"R": _mrel_json(2, 2, [(0, [0, 1])])}},
         expected="fail"),
    _reg("REG-nonassoc-triple",
         "a total triple violating associativity of Peleg composition",
         "((R * R) * S) == (R * (R * S))",
         {"carriers": {"X": 3},
          "mrels": {"R": _mrel_json(3, 3, [(0, [0, 1]), (1, [0]), (2, [2])]),
                    "S": _mrel_json(3, 3, [(0, [0]), (0, [1]), (1, [0]), (1, [2]),
                                           (2, [2])])}},
         expected="fail", roles=("X",)),
    _reg("REG-nu-fusion",
         "nu(do(R)) = do(R) fails: do invents terminal pairs",
         "nu(do(R)) == do(R)",
         {"carriers": {"X": 2, "Y": 2},
          "mrels": {"R": _mrel_json(2, 2, [(0, [])])}},
         expected="fail"),
    _reg("REG-galois-subset-alpha-lambda",
         "the (a, L) Galois connection fails for plain inclusion",
         "(a(R) <= S) == (R <= L(S))",
         {"carriers": {"X": 1, "Y": 1},
          "mrels": {"R": _mrel_json(1, 1, [(0, [])])},
          "rels": {"S": _rel_json(1, 1, [(0, 0)])}},
         expected="fail"),
    _reg("REG-galois-subset-lambda-alpha",
         "the (L, a) Galois connection fails for plain inclusion",
         "(R <= a(S)) == (L(R) <= S)",
         {"carriers": {"X": 1, "Y": 1},
          "rels": {"R": _rel_json(1, 1, [])},
          "mrels": {"S": _mrel_json(1, 1, [(0, [0])])}},
         expected="fail"),
    _reg("REG-galois-subset-alpha-eta",
         "the (a, eta) Galois connection fails for plain inclusion",
         "(a(R) <= S) == (R <= (S ; eta(Y)))",
         {"carriers": {"X": 1, "Y": 2},
          "mrels": {"R": _mrel_json(1, 2, [(0, [0, 1])])},
          "rels": {"S": _rel_json(1, 2, [(0, 0), (0, 1)])}},
         expected="fail"),
    _reg("REG-galois-subset-eta-alpha",
         "the (eta, a) Galois connection fails for plain inclusion",
         "(R <= a(S)) == ((R ; eta(Y)) <= S)",
         {"carriers": {"X": 1, "Y": 2},
          "rels": {"R": _rel_json(1, 2, [(0, 0), (0, 1)])},
          "mrels": {"S": _mrel_json(1, 2, [(0, [0, 1])])}},
         expected="fail"),
    # ------------------------------------------------------------------
    # Fixpoint refinements
    _thm("L5-postfix-fusion-univalent", "outer univalent iff R <= do(R)",
         "(R <= do(R)) == ((R^ ; R) <= Id(pw(Y)))", [_m("R")]),
    _thm("L5-prefix-up-fusion-univalent", "outer univalent iff do(R) Smyth-prefixes R",
         "(R <= do(R)) == (do(R) <u= R)", [_m("R")]),
    _thm("L5-prefix-fusion-total", "prefixpoints of do under inclusion are outer total",
         "Id(X) <= (R ; R^)", [_m("R")], guard="do(R) <= R"),
    _thm("L5-prefix-down-fusion-total", "Hoare prefixpoints of do are outer total",
         "Id(X) <= (R ; R^)", [_m("R")], guard="do(R) <d= R"),
    _thm("L5-postfix-up-fusion-total", "Smyth postfixpoints of do are outer total",
         "Id(X) <= (R ; R^)", [_m("R")], guard="R <u= do(R)"),
    _thm("L5-postfix-em-up-coincide", "Egli-Milner and Smyth postfixpoints of do coincide",
         "(R <ud= do(R)) == (R <u= do(R))", [_m("R")]),
    _thm("L5-prefix-em-fusion-det", "Egli-Milner prefixpoints of do are outer deterministic",
         "-R == (R ; -Id(pw(Y)))", [_m("R")], guard="do(R) <ud= R"),
    _thm("L5-iuniv-prefix-subset", "inner univalent are inclusion-prefixpoints of di",
         "di(R) <= R", [_m("R", "X", "Y", "inner_univalent")]),
    _thm("L5-iuniv-postfix-up", "inner univalent are Smyth postfixpoints of di",
         "R <u= di(R)", [_m("R", "X", "Y", "inner_univalent")]),
    _thm("L5-postfix-down-fission-iuniv", "Hoare postfixpoints of di are inner univalent",
         "R <= (At(X, Y) | ilow(X, Y))", [_m("R")], guard="R <d= di(R)"),
    _thm("L5-postfix-em-down-coincide", "Egli-Milner and Hoare postfixpoints of di coincide",
         "(R <ud= di(R)) == (R <d= di(R))", [_m("R")]),
    _thm("L5-prefix-up-fission-total", "inner total iff di(R) Smyth-prefixes R",
         "(di(R) <u= R) == (R <= -ilow(X, Y))", [_m("R")]),
    _thm("L5-prefix-em-up-fission-coincide", "Egli-Milner and Smyth prefixpoints of di coincide",
         "(di(R) <ud= R) == (di(R) <u= R)", [_m("R")]),
    _thm("L5-postfix-subset-fission-det", "inclusion-postfixpoints of di are inner deterministic",
         "R <= At(X, Y)", [_m("R")], guard="R <= di(R)"),
    # ------------------------------------------------------------------
    # Co-determinisation and closed representations
    _thm("L6-cofusion-def", "cfo(R) conjugates do under inner complement",
         "cfo(R) == icpl(do(icpl(R)))", [_m("R")]),
    _thm("L6-cofission-def", "cfi(R) conjugates di under inner complement",
         "cfi(R) == icpl(di(icpl(R)))", [_m("R")]),
    _thm("L6-cofission-upclosure", "cfi(R) = up(R) & co-atoms",
         "cfi(R) == (up(R) & coAt(X, Y))", [_m("R")]),
    _thm("L6-cofusion-closures", "cfo(R) by complements of closures",
         "cfo(R) == (-down(-up(R) & coAt(X, Y)) & -up(icpl(up(R)) & At(X, Y)))",
         [_m("R")]),
    _thm("L6-cofusion-closures-odot", "cfo(R) with the odot variant of the second factor",
         "cfo(R) == (-down(-up(R) & coAt(X, Y)) & -up(odot(up(R) & coAt(X, Y), icpl(1))))",
         [_m("R")]),
    _thm("L6-down-repr-fusion", "the down-closed representation recovers the fusion",
         "do(down(do(R))) == do(R)", [_m("R")]),
    _thm("L6-down-repr-fission", "the down-closed representation contains the fission",
         "di(R) == (down(do(R)) & At(X, Y))", [_m("R")]),
    _thm("L6-up-repr-cofusion", "co-fusion recovers the fusion from the up-closed representation",
         "cfo(up(do(R))) == do(R)", [_m("R")]),
    _thm("L6-up-repr-cofission", "the up-closed representation contains the co-fission of the fusion",
         "cfi(do(R)) == (up(do(R)) & coAt(X, Y))", [_m("R")]),
    _reg("REG-cofission-up-repr-literal",
         "cfi(R) = up(do(R)) & co-atoms fails for multi-set rows",
         "cfi(R) == (up(do(R)) & coAt(X, Y))",
         {"carriers": {"X": 1, "Y": 2},
          "mrels": {"R": _mrel_json(1, 2, [(0, [0]), (0, [1])])}},
         expected="fail"),
    _thm("L6-galois-cofission-cofusion", "S below cfi(R) iff cfo(S) below R, in the Smyth order",
         "(S <u= cfi(R)) == (cfo(S) <u= R)", [_m("R"), _m("S")],
         note="the Smyth-order Galois connection for the co-maps, conjugate "
              "to the Hoare-order one for fission and fusion"),
    _thm("L6-down-peleg-det", "down-closure splits Peleg composition at deterministic second factor",
         "down(R * S) == (down(R) * down(S))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z", "outer_deterministic")]),
    _neg("NEG-down-peleg-chain", "down-closure does not split Peleg composition in general",
         "down(R * S) == (down(R) * down(S))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z")], density=0.3),
    _thm("L6-down-icup-det", "down-closure joins over inner unions of outer deterministic",
         "down(icup(R, S)) == icup(down(R), down(S))",
         [_m("R", "X", "Y", "outer_deterministic"),
          _m("S", "X", "Y", "outer_deterministic")]),
    _thm("L6-up-peleg-inner-det", "up-closure splits Peleg composition at inner deterministic first factor",
         "up(R * S) == (up(R) * up(S))",
         [_m("R", "X", "Y", "inner_deterministic"), _m("S", "Y", "Z")]),
    # ------------------------------------------------------------------
    # Basis concordance
    _thm("A-union", "union from complement and intersection",
         "(R | S) == -(-R & -S)", [_r("R"), _r("S")]),
    _thm("A-empty", "the empty relation as R & -R",
         "(R & -R) == 0", [_r("R")]),
    _thm("A-universal", "the universal relation as the complement of empty",
         "-(R & -R) == U(X, Y)", [_r("R")]),
    _thm("A-up-closure", "up(R) = R icup universal",
         "up(R) == icup(R, U(X, Y))", [_m("R")]),
    _thm("A-member", "membership is the up-closure of the unit",
         "mem(Y) == up(eta(Y))", roles=("Y",)),
    _thm("A-identity", "Id = eta/eta",
         "Id(X) == (eta(X) / eta(X))", roles=("X",)),
    _thm("A-converse", "converse from complement and left residual",
         "R^ == -(-Id(Y) / R)", [_r("R")]),
    _thm("A-compose", "composition from complement and left residual",
         "(S ; R) == -(-S / R^)", [_r("S", "X", "Y"), _r("R", "Y", "Z")]),
    _thm("A-residual-right", "right residual from the left one",
         "(T \\ S) == ((S^ / T^))^", [_r("T", "Z", "X"), _r("S", "Z", "Y")]),
    _thm("A-syq", "symmetric quotient from the residuals",
         "syq(T, S) == ((T \\ S) & (T^ / S^))", [_r("T", "Z", "X"), _r("S", "Z", "Y")]),
    _thm("A-transpose", "the power transpose as a symmetric quotient",
         "L(R) == syq(R^, mem(Y))", [_r("R")]),
    _thm("A-image-functor", "P(R) = L(has;R)",
         "Pf(R) == L(mem(X)^ ; R)", [_r("R")]),
    _thm("A-kleisli-lift", "kl(R) = P(a(R))",
         "kl(R) == Pf(a(R))", [_m("R")]),
    _thm("A-mu", "mu = P(has)",
         "mu(X) == Pf(mem(X)^)", roles=("X",)),
    _thm("A-omega", "the subset order as mem\\mem",
         "Om(Y) == (mem(Y) \\ mem(Y))", roles=("Y",)),
    _thm("A-ccomp", "complementation as syq(mem, -mem)",
         "Cc(Y) == syq(mem(Y), -mem(Y))", roles=("Y",)),
    _thm("A-eta-syq", "eta as syq(Id, mem)",
         "eta(X) == syq(Id(X), mem(X))", roles=("X",)),
    _thm("A-eta-lambda", "eta as the transpose of the identity",
         "eta(X) == L(Id(X))", roles=("X",)),
    _thm("A-inner-complement", "inner complement as postcomposition with Cc",
         "icpl(R) == (R ; Cc(Y))", [_m("R")]),
    _thm("A-icap", "inner intersection by de Morgan",
         "icap(R, S) == icpl(icup(icpl(R), icpl(S)))", [_m("R"), _m("S")]),
    _thm("A-down-closure", "down(R) = R icap universal",
         "down(R) == icap(R, U(X, Y))", [_m("R")]),
    _thm("A-convex", "the convex closure as the meet of the closures",
         "convex(R) == (up(R) & down(R))", [_m("R")]),
    _thm("A-inner-unit", "the inner unit as eta icap its inner complement",
         "ilow(X, X) == icap(eta(X), icpl(eta(X)))", roles=("X",)),
    _thm("A-inner-counit", "the inner co-unit as the complement of the inner unit",
         "ihigh(X, Y) == icpl(ilow(X, Y))"),
    _thm("A-dual", "duality as outer complement of inner complement",
         "dual(R) == -icpl(R)", [_m("R")]),
    _thm("A-odot", "odot as the inner-complement conjugate of Peleg composition",
         "odot(R, S) == icpl(R * icpl(S))",
         [_m("R", "X", "Y"), _m("S", "Y", "Z")]),
    _thm("A-peleg-lift", "the Peleg lift from transpose, boxed values and mu",
         "pl(R) == ((L(mem(X)^ ; eta(X)) * ((eta(X)^ ; R) ; eta(pw(Y)))) ; mu(Y))",
         [_m("R")]),
    _thm("A-atoms", "the atoms as universal;eta",
         "At(X, Y) == (U(X, Y) ; eta(Y))"),
    _thm("A-coatoms", "the co-atoms as the inner complement of the atoms",
         "coAt(X, Y) == icpl(At(X, Y))"),
    _thm("A-nu", "the non-terminal part as R minus the inner unit",
         "nu(R) == (R & -ilow(X, Y))", [_m("R")]),
    _thm("A-tau", "the terminal part as R meet the inner unit",
         "tau(R) == (R & ilow(X, Y))", [_m("R")]),
    _thm("A-tau-peleg-empty", "the terminal part as R * empty",
         "tau(R) == (R * 0(Y, Y))", [_m("R")]),
    _thm("A-alpha", "a as postcomposition with the has-element relation",
         "a(R) == (R ; mem(Y)^)", [_m("R")]),
    _thm("A-fission", "fission as down-closure meet atoms",
         "di(R) == (down(R) & At(X, Y))", [_m("R")]),
    _thm("A-fusion", "fusion as eta;kl",
         "do(R) == (eta(X) ; kl(R))", [_m("R")]),
    _thm("A-cofission", "co-fission as up-closure meet co-atoms",
         "cfi(R) == (up(R) & coAt(X, Y))", [_m("R")]),
    _thm("A-cofusion", "co-fusion as the conjugate of fusion",
         "cfo(R) == icpl(do(icpl(R)))", [_m("R")]),
    _thm("A-domain", "the domain test from converse and intersection",
         "dom(R) == (Id(X) & (R ; R^))", [_r("R")]),
    _thm("A-smyth", "the Smyth order via up-closure",
         "(R <u= S) == (S <= up(R))", [_m("R"), _m("S")]),
    _thm("A-hoare", "the Hoare order via down-closure",
         "(R <d= S) == (R <= down(S))", [_m("R"), _m("S")]),
    _thm("A-egli-milner", "the Egli-Milner order combines the two",
         "(R <ud= S) == (R <u= S)", [_m("R"), _m("S")], guard="R <d= S"),
]


def registry() -> list[Law]:
    """The registry, in stable order; ids are unique."""
    return list(_LAWS)


def law_by_id(law_id: str) -> Law:
    for law in _LAWS:
        if law.id == law_id:
            return law
    raise UnknownLaw(f"no law with id {law_id!r}")


def _check_registry_integrity():
    ids = [law.id for law in _LAWS]
    if len(ids) != len(set(ids)):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise AssertionError(f"duplicate law ids: {dupes}")
    for law in _LAWS:
        if law.kind == "regression":
            if law.pinned is None:
                raise AssertionError(f"{law.id}: regression without pinned data")
        elif not law.anchor:
            raise AssertionError(f"{law.id}: missing anchor")


_check_registry_integrity()
