"""Finite carriers and the relational core.

A relation between finite carriers is stored as one bitmask row per source
element: bit ``b`` of ``rows[a]`` means the pair ``(a, b)`` is present.
All boolean structure, composition, converse, residuals, the symmetric
quotient, the domain map and the basic classification predicates live here.

Carrier elements are 0-based indices.  Display names, when present, are
presentation only: they never affect semantics, equality or serialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    POW_CAP,
    IdentityShapeMismatch,
    PowersetTooLarge,
    ShapeMismatch,
)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Carrier:
    """A finite set of ``size`` elements, optionally labelled.

    ``base`` is set when this carrier is the materialized powerset of
    another carrier; the subsets are ordered by increasing numeric mask
    (binary counting), and that order is part of the serialization
    contract.
    """

    size: int
    names: tuple[str, ...] | None = None
    base: "Carrier | None" = None

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("carrier size must be non-negative")
        if self.names is not None:
            if len(self.names) != self.size:
                raise ValueError("names length must equal carrier size")
            if len(set(self.names)) != self.size:
                raise ValueError("names must be pairwise distinct")
        if self.base is not None and self.size != 1 << self.base.size:
            raise ValueError("powerset carrier size must be 2^base.size")

    def name_of(self, i: int) -> str:
        if self.names is not None:
            return self.names[i]
        return str(i)


def pow_carrier(base: Carrier) -> Carrier:
    """The materialized powerset of ``base``, in numeric mask order."""
    if base.size > POW_CAP:
        raise PowersetTooLarge(
            f"cannot materialize powerset of carrier of size {base.size} (cap {POW_CAP})"
        )
    return Carrier(1 << base.size, base=base)


@dataclass(frozen=True, eq=False)
class Rel:
    """A relation src <-> dst as a packed bit matrix."""

    src: Carrier
    dst: Carrier
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.src.size:
            raise ValueError("row count must equal source carrier size")
        top = full_mask(self.dst.size)
        for r in self.rows:
            if r < 0 or r & ~top:
                raise ValueError("row mask exceeds destination carrier")

    # Names and powerset tags are presentation/metadata; equality is
    # carrier sizes plus content.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Rel):
            return NotImplemented
        return (
            self.src.size == other.src.size
            and self.dst.size == other.dst.size
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.src.size, self.dst.size, self.rows))

    def __repr__(self) -> str:
        return f"Rel({self.src.size}x{self.dst.size}, {sorted(self.pairs())})"

    def pairs(self) -> Iterator[tuple[int, int]]:
        for a, row in enumerate(self.rows):
            for b in bits(row):
                yield (a, b)

    def has(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def to_json(self) -> dict:
        return {
            "src": self.src.size,
            "dst": self.dst.size,
            "pairs": [[a, b] for a, b in sorted(self.pairs())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Rel":
        src = Carrier(int(data["src"]))
        dst = Carrier(int(data["dst"]))
        rows = [0] * src.size
        for a, b in data["pairs"]:
            rows[a] |= 1 << b
        return cls(src, dst, tuple(rows))

    @classmethod
    def from_pairs(cls, src: Carrier, dst: Carrier, pairs: Iterable[tuple[int, int]]) -> "Rel":
        rows = [0] * src.size
        for a, b in pairs:
            rows[a] |= 1 << b
        return cls(src, dst, tuple(rows))


@dataclass(frozen=True)
class RelFlags:
    univalent: bool
    total: bool
    deterministic: bool
    test: bool


def _require_same_shape(r: Rel, s: Rel, op: str):
    if r.src.size != s.src.size or r.dst.size != s.dst.size:
        raise ShapeMismatch(
            f"{op}: shapes {r.src.size}x{r.dst.size} and {s.src.size}x{s.dst.size} differ"
        )


def rel_const(kind: str, src: Carrier, dst: Carrier) -> Rel:
    """The named constant: ``identity``, ``empty`` or ``universal``."""
    if kind == "identity":
        if src.size != dst.size:
            raise IdentityShapeMismatch(
                f"identity needs equal carriers, got {src.size} and {dst.size}"
            )
        return Rel(src, dst, tuple(1 << a for a in range(src.size)))
    if kind == "empty":
        return Rel(src, dst, (0,) * src.size)
    if kind == "universal":
        return Rel(src, dst, (full_mask(dst.size),) * src.size)
    raise ValueError(f"unknown relation constant {kind!r}")


def rel_bool(op: str, r: Rel, s: Rel | None = None) -> Rel:
    """Pointwise boolean combination of relations of equal shape."""
    if op == "complement":
        top = full_mask(r.dst.size)
        return Rel(r.src, r.dst, tuple(row ^ top for row in r.rows))
    if s is None:
        raise ValueError(f"{op} needs a second operand")
    _require_same_shape(r, s, op)
    if op == "union":
        rows = tuple(x | y for x, y in zip(r.rows, s.rows))
    elif op == "inter":
        rows = tuple(x & y for x, y in zip(r.rows, s.rows))
    elif op == "minus":
        rows = tuple(x & ~y for x, y in zip(r.rows, s.rows))
    else:
        raise ValueError(f"unknown boolean operation {op!r}")
    return Rel(r.src, r.dst, rows)


def rel_compose(r: Rel, s: Rel) -> Rel:
    """Relational composition: (a,c) iff some b with r(a,b) and s(b,c)."""
    if r.dst.size != s.src.size:
        raise ShapeMismatch(
            f"compose: inner carriers {r.dst.size} and {s.src.size} differ"
        )
    out = []
    for row in r.rows:
        acc = 0
        for b in bits(row):
            acc |= s.rows[b]
        out.append(acc)
    return Rel(r.src, s.dst, tuple(out))


def rel_converse(r: Rel) -> Rel:
    cols = [0] * r.dst.size
    for a, row in enumerate(r.rows):
        for b in bits(row):
            cols[b] |= 1 << a
    return Rel(r.dst, r.src, tuple(cols))


def is_subrel(r: Rel, s: Rel) -> bool:
    _require_same_shape(r, s, "inclusion")
    return all(x & ~y == 0 for x, y in zip(r.rows, s.rows))


def residual(side: str, t: Rel, s: Rel) -> Rel:
    """Left residual t/s or right residual t\\s.

    left:  t: X<->Y, s: Z<->Y, result X<->Z, (x,z) iff s(z) subset of t(x);
    right: t: Z<->X, s: Z<->Y, result X<->Y, (x,y) iff column x of t is a
    subset of column y of s.  Both agree with the complement formulas
    -( -t ; s~ ) and -( t~ ; -s ).
    """
    if side == "left":
        if t.dst.size != s.dst.size:
            raise ShapeMismatch(
                f"left residual: target carriers {t.dst.size} and {s.dst.size} differ"
            )
        rows = tuple(
            _subset_row(s.rows, trow) for trow in t.rows
        )
        return Rel(t.src, s.src, rows)
    if side == "right":
        if t.src.size != s.src.size:
            raise ShapeMismatch(
                f"right residual: source carriers {t.src.size} and {s.src.size} differ"
            )
        tc = rel_converse(t)
        sc = rel_converse(s)
        rows = tuple(_superset_row(sc.rows, tcol) for tcol in tc.rows)
        return Rel(t.dst, s.dst, rows)
    raise ValueError(f"unknown residual side {side!r}")


def _subset_row(candidates: tuple[int, ...], bound: int) -> int:
    acc = 0
    for i, c in enumerate(candidates):
        if c & ~bound == 0:
            acc |= 1 << i
    return acc


def _superset_row(candidates: tuple[int, ...], bound: int) -> int:
    acc = 0
    for i, c in enumerate(candidates):
        if bound & ~c == 0:
            acc |= 1 << i
    return acc


def symmetric_quotient(t: Rel, s: Rel) -> Rel:
    """syq(t, s): (x, y) present iff column x of t equals column y of s.

    t: Z<->X and s: Z<->Y give a result X<->Y.  Computed by direct column
    comparison; agreement with (t\\s) & (t~/s~) is checked in the law suite.
    """
    if t.src.size != s.src.size:
        raise ShapeMismatch(
            f"syq: source carriers {t.src.size} and {s.src.size} differ"
        )
    tc = rel_converse(t)
    sc = rel_converse(s)
    rows = []
    for col_t in tc.rows:
        acc = 0
        for y, col_s in enumerate(sc.rows):
            if col_t == col_s:
                acc |= 1 << y
        rows.append(acc)
    return Rel(t.dst, s.dst, tuple(rows))


def domain(r: Rel) -> Rel:
    """The domain test: (a,a) for every a related to something."""
    return Rel(r.src, r.src, tuple(1 << a if row else 0 for a, row in enumerate(r.rows)))


def classify_rel(r: Rel) -> RelFlags:
    univalent = all(row.bit_count() <= 1 for row in r.rows)
    total = all(row != 0 for row in r.rows)
    test = r.src.size == r.dst.size and all(
        row & ~(1 << a) == 0 for a, row in enumerate(r.rows)
    )
    return RelFlags(univalent, total, univalent and total, test)
