"""Powerset machinery: membership, power transpose, approximation, the
relational image functor and the powerset-monad constants.

Constants that live over materialized powersets (membership, subset order,
complementation, the monad multiplication) are computed directly from
subset semantics; their residual/quotient characterizations are verified
in the law suite rather than used as definitions.
"""

from __future__ import annotations

from .errors import MASK_CAP, MaskTooWide
from .mrel import MRel
from .rel import Carrier, Rel, bits, full_mask, pow_carrier, rel_converse


def member_rel(y: Carrier) -> Rel:
    """The membership relation y <-> P(y): (b, A) present iff b in A."""
    py = pow_carrier(y)
    rows = []
    for b in range(y.size):
        acc = 0
        for a in range(py.size):
            if a >> b & 1:
                acc |= 1 << a
        rows.append(acc)
    return Rel(y, py, tuple(rows))


def has_element_rel(y: Carrier) -> Rel:
    """The converse of membership: P(y) <-> y."""
    return rel_converse(member_rel(y))


def power_transpose(r: Rel) -> MRel:
    """Each source element is sent to its single image set."""
    if r.dst.size > MASK_CAP:
        raise MaskTooWide(
            f"image sets over carrier of size {r.dst.size} exceed mask cap {MASK_CAP}"
        )
    return MRel(r.src, r.dst, tuple((row,) for row in r.rows))


def alpha(m: MRel) -> Rel:
    """Flatten a multirelation to the relation 'b lies in some related set'."""
    return Rel(m.src, m.dst, tuple(_union(row) for row in m.rows))


def _union(masks) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def image_functor(r: Rel) -> Rel:
    """P(r): maps every subset to its relational image; deterministic."""
    px = pow_carrier(r.src)
    py = pow_carrier(r.dst)
    rows = []
    for a_mask in range(px.size):
        image = 0
        for a in bits(a_mask):
            image |= r.rows[a]
        rows.append(1 << image)
    return Rel(px, py, tuple(rows))


def eta(x: Carrier) -> MRel:
    """Unit of the powerset monad: each element to its singleton."""
    if x.size > MASK_CAP:
        raise MaskTooWide(f"carrier of size {x.size} exceeds mask cap {MASK_CAP}")
    return MRel(x, x, tuple((1 << a,) for a in range(x.size)))


def mu(x: Carrier) -> Rel:
    """Multiplication of the powerset monad: union-flattening P^2(x) -> P(x)."""
    px = pow_carrier(x)
    ppx = pow_carrier(px)
    rows = []
    for fam in range(ppx.size):
        flat = 0
        for subset in bits(fam):
            flat |= subset
        rows.append(1 << flat)
    return Rel(ppx, px, tuple(rows))


def omega(y: Carrier) -> Rel:
    """The subset order on P(y)."""
    py = pow_carrier(y)
    top = full_mask(y.size)
    rows = []
    for a in range(py.size):
        acc = 1 << a
        free = top ^ a
        s = free
        while s:
            acc |= 1 << (a | s)
            s = (s - 1) & free
        rows.append(acc)
    return Rel(py, py, tuple(rows))


def ccomp(y: Carrier) -> Rel:
    """The complementation bijection on P(y)."""
    py = pow_carrier(y)
    top = full_mask(y.size)
    return Rel(py, py, tuple(1 << (a ^ top) for a in range(py.size)))


def monad_const(kind: str, x: Carrier) -> Rel | MRel:
    if kind == "eta":
        return eta(x)
    if kind == "mu":
        return mu(x)
    if kind == "omega":
        return omega(x)
    if kind == "ccomp":
        return ccomp(x)
    raise ValueError(f"unknown monad constant {kind!r}")
