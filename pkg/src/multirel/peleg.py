"""Peleg and Kleisli liftings and compositions, and the decomposition of a
multirelation into its univalent same-domain parts.

The direct composition enumerates choice functions per pair and is guarded
by ENUM_CAP; the oracle recomputes the same composition through the
decomposition-and-lifting route so the two can be played against each
other in tests.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .errors import ENUM_CAP, EnumerationTooLarge, ShapeMismatch
from .mrel import MRel, inner_bool, mrel_to_rel, rel_to_mrel
from .power import alpha, image_functor
from .rel import Rel, bits, pow_carrier, rel_bool, rel_compose


def _dom_indices(r: MRel) -> list[int]:
    return [a for a, row in enumerate(r.rows) if row]


def d_subrelations(r: MRel) -> Iterator[MRel]:
    """All univalent parts of ``r`` with the same domain, in lexicographic
    selection order.  Their union is ``r``."""
    dom = _dom_indices(r)
    size = 1
    for a in dom:
        size *= len(r.rows[a])
        if size > ENUM_CAP:
            raise EnumerationTooLarge(
                f"{size}+ univalent parts exceed cap {ENUM_CAP}", size
            )
    for choice in product(*(r.rows[a] for a in dom)):
        rows: list[tuple[int, ...]] = [()] * r.src.size
        for a, m in zip(dom, choice):
            rows[a] = (m,)
        yield MRel(r.src, r.dst, tuple(rows))


def kleisli_lift(r: MRel) -> Rel:
    """P(src) <-> P(dst): each subset to the union of the images of its
    elements under the flattening of ``r``.  Deterministic."""
    flat = alpha(r)
    px = pow_carrier(r.src)
    py = pow_carrier(r.dst)
    rows = []
    for a_mask in range(px.size):
        image = 0
        for a in bits(a_mask):
            image |= flat.rows[a]
        rows.append(1 << image)
    return Rel(px, py, tuple(rows))


def peleg_lift(r: MRel) -> Rel:
    """P(src) <-> P(dst): (A, B) present iff B is the union of one chosen
    set per element of A; requires every element of A to have a choice."""
    px = pow_carrier(r.src)
    py = pow_carrier(r.dst)
    dom_mask = 0
    for a, row in enumerate(r.rows):
        if row:
            dom_mask |= 1 << a
    rows = []
    for a_mask in range(px.size):
        if a_mask & ~dom_mask:
            rows.append(0)
            continue
        rows.append(_choice_unions(r, a_mask, f"subset {a_mask}"))
    return Rel(px, py, tuple(rows))


def _choice_unions(s: MRel, b_mask: int, what: str) -> int:
    """Bitset over P(dst) of all unions of one chosen mask per element of
    ``b_mask``; 1<<0 when the mask is empty (the empty union)."""
    size = 1
    for b in bits(b_mask):
        size *= len(s.rows[b])
        if size > ENUM_CAP:
            raise EnumerationTooLarge(
                f"{what}: choice product {size}+ exceeds cap {ENUM_CAP}", size
            )
    acc = {0}
    for b in bits(b_mask):
        acc = {c | m for c in acc for m in s.rows[b]}
    out = 0
    for c in acc:
        out |= 1 << c
    return out


def peleg_compose(r: MRel, s: MRel) -> MRel:
    """Compose through choice functions over each intermediate set.

    A pair (a, B) of ``r`` contributes every union of one ``s``-choice per
    element of B, provided each element of B has a non-empty ``s``-row;
    B empty contributes (a, empty).
    """
    if r.dst.size != s.src.size:
        raise ShapeMismatch(
            f"peleg compose: inner carriers {r.dst.size} and {s.src.size} differ"
        )
    out_rows: list[set[int]] = []
    for a, row in enumerate(r.rows):
        acc: set[int] = set()
        for b_mask in row:
            if any(not s.rows[b] for b in bits(b_mask)):
                continue
            acc_pair = {0}
            size = 1
            for b in bits(b_mask):
                size *= len(s.rows[b])
                if size > ENUM_CAP:
                    raise EnumerationTooLarge(
                        f"pair ({a},{b_mask}): choice product {size}+ exceeds cap {ENUM_CAP}",
                        size,
                    )
            for b in bits(b_mask):
                acc_pair = {c | m for c in acc_pair for m in s.rows[b]}
            acc |= acc_pair
        out_rows.append(acc)
    return MRel.make(r.src, s.dst, out_rows)


def peleg_compose_oracle(r: MRel, s: MRel) -> MRel:
    """Same composition, computed as r composed with the union of the
    liftings of the univalent parts of s.  Exercises a disjoint code path
    (decomposition, materialized powersets, relational composition)."""
    if r.dst.size != s.src.size:
        raise ShapeMismatch(
            f"peleg compose: inner carriers {r.dst.size} and {s.src.size} differ"
        )
    py = pow_carrier(s.src)
    pz = pow_carrier(s.dst)
    dom_mask = 0
    for b, row in enumerate(s.rows):
        if row:
            dom_mask |= 1 << b
    lift_union = Rel(py, pz, (0,) * py.size)
    for t in d_subrelations(s):
        t_p = image_functor(alpha(t))
        rows = tuple(
            t_p.rows[a_mask] if a_mask & ~dom_mask == 0 else 0
            for a_mask in range(py.size)
        )
        lift_union = rel_bool("union", lift_union, Rel(py, pz, rows))
    return rel_to_mrel(rel_compose(mrel_to_rel(r), lift_union))


def kleisli_compose(r: MRel, s: MRel) -> MRel:
    """Compose with the Kleisli lifting of the second factor, computed
    row-wise without materializing the powerset of the source."""
    if r.dst.size != s.src.size:
        raise ShapeMismatch(
            f"kleisli compose: inner carriers {r.dst.size} and {s.src.size} differ"
        )
    fused = [0] * s.src.size
    for b, row in enumerate(s.rows):
        for m in row:
            fused[b] |= m
    out_rows = []
    for row in r.rows:
        acc = set()
        for b_mask in row:
            c = 0
            for b in bits(b_mask):
                c |= fused[b]
            acc.add(c)
        out_rows.append(acc)
    return MRel.make(r.src, s.dst, out_rows)


def odot(r: MRel, s: MRel) -> MRel:
    """The inner-complement conjugate of Peleg composition."""
    return inner_bool("icomp", peleg_compose(r, inner_bool("icomp", s)))
