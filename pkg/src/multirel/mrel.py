"""Multirelations and their inner structure.

A multirelation relates each source element to a set of subsets of the
destination carrier.  Per source element we keep a strictly ascending
tuple of subset masks; this canonical form makes equality cheap and
serialization deterministic.

The inner operations (union, intersection, complement) act on the subset
masks; the outer boolean operations act on the pair set itself, exactly as
for ordinary relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import MASK_CAP, POW_CAP, MaskTooWide, PowersetTooLarge, ShapeMismatch
from .rel import Carrier, Rel, bits, full_mask, pow_carrier


@dataclass(frozen=True, eq=False)
class MRel:
    """A multirelation src <-> P(dst); rows hold sorted subset masks."""

    src: Carrier
    dst: Carrier
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dst.size > MASK_CAP:
            raise MaskTooWide(
                f"destination carrier of size {self.dst.size} exceeds mask cap {MASK_CAP}"
            )
        if len(self.rows) != self.src.size:
            raise ValueError("row count must equal source carrier size")
        top = full_mask(self.dst.size)
        for row in self.rows:
            if any(m < 0 or m & ~top for m in row):
                raise ValueError("subset mask exceeds destination carrier")
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError("row masks must be strictly ascending")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MRel):
            return NotImplemented
        return (
            self.src.size == other.src.size
            and self.dst.size == other.dst.size
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.src.size, self.dst.size, self.rows))

    def __repr__(self) -> str:
        body = ", ".join(
            f"({a},{{{','.join(str(b) for b in bits(m))}}})" for a, m in self.pairs()
        )
        return f"MRel({self.src.size}<->P{self.dst.size}, [{body}])"

    @classmethod
    def make(cls, src: Carrier, dst: Carrier, rows: Sequence[Iterable[int]]) -> "MRel":
        return cls(src, dst, tuple(tuple(sorted(set(row))) for row in rows))

    @classmethod
    def from_pairs(
        cls, src: Carrier, dst: Carrier, pairs: Iterable[tuple[int, int]]
    ) -> "MRel":
        rows: list[set[int]] = [set() for _ in range(src.size)]
        for a, m in pairs:
            rows[a].add(m)
        return cls.make(src, dst, rows)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for a, row in enumerate(self.rows):
            for m in row:
                yield (a, m)

    def has(self, a: int, m: int) -> bool:
        return m in self.rows[a]

    def count(self) -> int:
        return sum(len(row) for row in self.rows)

    def to_json(self) -> dict:
        return {
            "src": self.src.size,
            "dst": self.dst.size,
            "rows": [[[b for b in bits(m)] for m in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MRel":
        src = Carrier(int(data["src"]))
        dst = Carrier(int(data["dst"]))
        rows = []
        for row in data["rows"]:
            masks = set()
            for elems in row:
                m = 0
                for b in elems:
                    m |= 1 << b
                masks.add(m)
            rows.append(masks)
        return cls.make(src, dst, rows)


@dataclass(frozen=True)
class PropertyFlags:
    outer_total: bool
    outer_univalent: bool
    outer_deterministic: bool
    inner_total: bool
    inner_univalent: bool
    inner_deterministic: bool
    up_closed: bool
    down_closed: bool
    union_closed: bool

    def matches(self, required: Iterable[str]) -> bool:
        return all(getattr(self, name) for name in required)


def _require_same_shape(r: MRel, s: MRel, op: str):
    if r.src.size != s.src.size or r.dst.size != s.dst.size:
        raise ShapeMismatch(
            f"{op}: shapes {r.src.size}<->P{r.dst.size} and "
            f"{s.src.size}<->P{s.dst.size} differ"
        )


def _require_pow_ok(dst: Carrier, op: str):
    if dst.size > POW_CAP:
        raise PowersetTooLarge(
            f"{op}: would materialize 2^{dst.size} subset masks (cap 2^{POW_CAP})"
        )


def mrel_const(kind: str, x: Carrier, y: Carrier) -> MRel:
    """Named constant multirelations over x <-> P(y).

    ``eta`` requires equal carrier sizes; ``universal`` materializes the
    full powerset per row and is therefore guarded by POW_CAP.
    """
    if y.size > MASK_CAP:
        raise MaskTooWide(f"carrier of size {y.size} exceeds mask cap {MASK_CAP}")
    if kind == "inner_unit":
        return MRel(x, y, ((0,),) * x.size)
    if kind == "inner_counit":
        return MRel(x, y, ((full_mask(y.size),),) * x.size)
    if kind == "atoms":
        row = tuple(1 << b for b in range(y.size))
        return MRel(x, y, (row,) * x.size)
    if kind == "coatoms":
        top = full_mask(y.size)
        row = tuple(sorted(top ^ (1 << b) for b in range(y.size)))
        return MRel(x, y, (row,) * x.size)
    if kind == "empty":
        return MRel(x, y, ((),) * x.size)
    if kind == "universal":
        _require_pow_ok(y, "universal multirelation")
        row = tuple(range(1 << y.size))
        return MRel(x, y, (row,) * x.size)
    if kind == "eta":
        if x.size != y.size:
            raise ShapeMismatch(
                f"eta needs equal carriers, got {x.size} and {y.size}"
            )
        return MRel(x, y, tuple((1 << a,) for a in range(x.size)))
    raise ValueError(f"unknown multirelation constant {kind!r}")


def inner_bool(op: str, r: MRel, s: MRel | None = None) -> MRel:
    """Inner union/intersection of rows, or per-mask complement."""
    if op == "icomp":
        top = full_mask(r.dst.size)
        return MRel.make(r.src, r.dst, [[m ^ top for m in row] for row in r.rows])
    if s is None:
        raise ValueError(f"{op} needs a second operand")
    _require_same_shape(r, s, op)
    rows = []
    for row_r, row_s in zip(r.rows, s.rows):
        if op == "icup":
            rows.append({m | n for m in row_r for n in row_s})
        elif op == "icap":
            rows.append({m & n for m in row_r for n in row_s})
        else:
            raise ValueError(f"unknown inner operation {op!r}")
    return MRel.make(r.src, r.dst, rows)


def icup(r: MRel, s: MRel) -> MRel:
    return inner_bool("icup", r, s)


def icap(r: MRel, s: MRel) -> MRel:
    return inner_bool("icap", r, s)


def icomp(r: MRel) -> MRel:
    return inner_bool("icomp", r)


def inner_union_family(rs: Sequence[MRel], shape: tuple[Carrier, Carrier] | None = None) -> MRel:
    """Inner union of a finite family; the empty family yields the inner unit."""
    if not rs:
        if shape is None:
            raise ValueError("empty family needs an explicit shape")
        return mrel_const("inner_unit", shape[0], shape[1])
    acc = rs[0]
    for r in rs[1:]:
        acc = inner_bool("icup", acc, r)
    return acc


def mrel_bool(op: str, r: MRel, s: MRel | None = None) -> MRel:
    """Outer boolean structure: multirelations are relations into a powerset."""
    if op == "complement":
        _require_pow_ok(r.dst, "outer complement")
        everything = range(1 << r.dst.size)
        return MRel.make(
            r.src, r.dst, [[m for m in everything if m not in set(row)] for row in r.rows]
        )
    if s is None:
        raise ValueError(f"{op} needs a second operand")
    _require_same_shape(r, s, op)
    rows = []
    for row_r, row_s in zip(r.rows, s.rows):
        if op == "union":
            rows.append(set(row_r) | set(row_s))
        elif op == "inter":
            rows.append(set(row_r) & set(row_s))
        elif op == "minus":
            rows.append(set(row_r) - set(row_s))
        else:
            raise ValueError(f"unknown boolean operation {op!r}")
    return MRel.make(r.src, r.dst, rows)


def is_submrel(r: MRel, s: MRel) -> bool:
    _require_same_shape(r, s, "inclusion")
    return all(set(a) <= set(b) for a, b in zip(r.rows, s.rows))


def closure(mode: str, r: MRel) -> MRel:
    """Up-, down- or convex closure at the mask level.

    Materializes super-/submasks, so the destination is POW_CAP bounded.
    """
    if mode == "convex":
        return mrel_bool("inter", closure("up", r), closure("down", r))
    _require_pow_ok(r.dst, f"{mode}-closure")
    top = full_mask(r.dst.size)
    rows = []
    for row in r.rows:
        out: set[int] = set()
        for m in row:
            if mode == "up":
                free = top ^ m
                s = free
                while True:
                    out.add(m | s)
                    if s == 0:
                        break
                    s = (s - 1) & free
            elif mode == "down":
                s = m
                while True:
                    out.add(s)
                    if s == 0:
                        break
                    s = (s - 1) & m
            else:
                raise ValueError(f"unknown closure mode {mode!r}")
        rows.append(out)
    return MRel.make(r.src, r.dst, rows)


def up(r: MRel) -> MRel:
    return closure("up", r)


def down(r: MRel) -> MRel:
    return closure("down", r)


def convex(r: MRel) -> MRel:
    return closure("convex", r)


def preorder(mode: str, r: MRel, s: MRel) -> bool:
    """Smyth, Hoare and Egli-Milner preorders and their equivalences.

    Checked pointwise without materializing closures: r is Smyth-below s
    iff every pair of s dominates some pair of r, and Hoare-below iff
    every pair of r is dominated by some pair of s.
    """
    _require_same_shape(r, s, "preorder")
    if mode == "smyth":
        return all(
            all(any(m & ~a == 0 for m in row_r) for a in row_s)
            for row_r, row_s in zip(r.rows, s.rows)
        )
    if mode == "hoare":
        return all(
            all(any(a & ~m == 0 for m in row_s) for a in row_r)
            for row_r, row_s in zip(r.rows, s.rows)
        )
    if mode == "egli_milner":
        return preorder("smyth", r, s) and preorder("hoare", r, s)
    if mode == "eq_up":
        return preorder("smyth", r, s) and preorder("smyth", s, r)
    if mode == "eq_down":
        return preorder("hoare", r, s) and preorder("hoare", s, r)
    if mode == "eq_updown":
        return preorder("egli_milner", r, s) and preorder("egli_milner", s, r)
    raise ValueError(f"unknown preorder mode {mode!r}")


def classify_mrel(r: MRel) -> PropertyFlags:
    outer_total = all(len(row) > 0 for row in r.rows)
    outer_univalent = all(len(row) <= 1 for row in r.rows)
    inner_total = all(0 not in row for row in r.rows)
    inner_univalent = all(m.bit_count() <= 1 for row in r.rows for m in row)
    # One-step checks suffice for closedness: adding or removing a single
    # element at a time reaches every super-/submask.
    up_closed = True
    down_closed = True
    union_closed = True
    width = r.dst.size
    for row in r.rows:
        present = set(row)
        for m in row:
            for b in range(width):
                bit = 1 << b
                if not m & bit and (m | bit) not in present:
                    up_closed = False
                if m & bit and (m ^ bit) not in present:
                    down_closed = False
        for m in row:
            for n in row:
                if (m | n) not in present:
                    union_closed = False
    return PropertyFlags(
        outer_total=outer_total,
        outer_univalent=outer_univalent,
        outer_deterministic=outer_total and outer_univalent,
        inner_total=inner_total,
        inner_univalent=inner_univalent,
        inner_deterministic=inner_total and inner_univalent,
        up_closed=up_closed,
        down_closed=down_closed,
        union_closed=union_closed,
    )


def split_terminal(r: MRel) -> tuple[MRel, MRel]:
    """Partition into the non-terminal part (non-empty sets) and the
    terminal part (empty sets)."""
    nu_rows = [tuple(m for m in row if m != 0) for row in r.rows]
    tau_rows = [tuple(m for m in row if m == 0) for row in r.rows]
    return MRel(r.src, r.dst, tuple(nu_rows)), MRel(r.src, r.dst, tuple(tau_rows))


def nu(r: MRel) -> MRel:
    return split_terminal(r)[0]


def tau(r: MRel) -> MRel:
    return split_terminal(r)[1]


def inner_dual(r: MRel) -> MRel:
    """Duality between inner and outer structure: outer complement of the
    inner complement."""
    return mrel_bool("complement", inner_bool("icomp", r))


def mrel_to_rel(r: MRel) -> Rel:
    """The same arrow viewed as a relation into the materialized powerset."""
    _require_pow_ok(r.dst, "powerset view")
    rows = []
    for row in r.rows:
        acc = 0
        for m in row:
            acc |= 1 << m
        rows.append(acc)
    return Rel(r.src, pow_carrier(r.dst), tuple(rows))


def rel_to_mrel(r: Rel) -> MRel:
    """Inverse of the powerset view; the destination must be a powerset
    carrier so the subset decoding is unambiguous."""
    if r.dst.base is None:
        raise ShapeMismatch(
            "relation destination is not a materialized powerset carrier"
        )
    return MRel.make(r.src, r.dst.base, [list(bits(row)) for row in r.rows])
