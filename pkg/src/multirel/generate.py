"""Instance generators: exhaustive enumeration and seeded random sampling
of relations and multirelations, with property filters.

Randomness comes from splitmix64, chosen because it is tiny, fast and
portable: the stream for a given seed is identical everywhere.  Instance
``k`` of a random stream is generated from the sub-seed ``mix64(seed ^ k)``
so a stream can be split into chunks without changing its contents.

Exhaustive streams use numeric encoding order: instance ``i`` contains the
candidate pair ``(a, b)`` (or ``(a, mask)``) exactly when the corresponding
bit of ``i`` is set, candidates ordered row-major.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .errors import ENUM_CAP, POW_CAP, EnumerationTooLarge, PowersetTooLarge
from .mrel import MRel, classify_mrel
from .rel import Carrier, Rel, classify_rel

_MASK64 = (1 << 64) - 1

# Exhaustive enumeration is capped at 2^EXHAUSTIVE_BITS instances.
EXHAUSTIVE_BITS = 24


def mix64(x: int) -> int:
    """The splitmix64 output function."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class SplitMix64:
    """splitmix64 stream; state advances by the golden-ratio increment."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        x = self.state
        x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
        return x ^ (x >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def bernoulli(self, threshold: int) -> bool:
        return self.next_u64() < threshold


def density_threshold(p: float) -> int:
    if not 0.0 <= p <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    return min(1 << 64, max(0, round(p * (1 << 64))))


@dataclass(frozen=True)
class GenSpec:
    """What to generate: shape, mode and an optional property filter.

    ``where`` lists flag names that must hold (flags of ``classify_rel``
    or ``classify_mrel`` depending on the kind).
    """

    shape: tuple[int, int]
    mode: str = "exhaustive"
    count: int = 0
    density: float = 0.5
    seed: int = 0
    where: frozenset[str] = field(default_factory=frozenset)


# Filters with constructive generators: rows are drawn from a restricted
# vocabulary instead of rejecting after the fact.  The outer generators
# pick whole rows (ignoring density), the inner ones filter mask sets.
_CONSTRUCTIVE = (
    "inner_deterministic",
    "inner_univalent",
    "outer_deterministic",
    "outer_univalent",
)


def _allowed_masks(filter_name: str, dst: int) -> list[int] | None:
    if filter_name == "inner_deterministic":
        return [1 << b for b in range(dst)]
    if filter_name == "inner_univalent":
        return [0] + [1 << b for b in range(dst)]
    return None


def _check_exhaustive_bits(bits_needed: int, what: str):
    if bits_needed > EXHAUSTIVE_BITS:
        raise EnumerationTooLarge(
            f"exhaustive {what} needs 2^{bits_needed} instances (cap 2^{EXHAUSTIVE_BITS})",
            bits_needed,
        )


def _rel_stream(spec: GenSpec) -> Iterator[Rel]:
    ns, nd = spec.shape
    src, dst = Carrier(ns), Carrier(nd)
    if spec.mode == "exhaustive":
        _check_exhaustive_bits(ns * nd, "relations")
        for code in range(1 << (ns * nd)):
            rows = tuple((code >> (a * nd)) & ((1 << nd) - 1) for a in range(ns))
            yield Rel(src, dst, rows)
        return
    threshold = density_threshold(spec.density)
    for k in range(spec.count):
        rng = SplitMix64(mix64(spec.seed ^ k))
        rows = []
        for _ in range(ns):
            row = 0
            for b in range(nd):
                if rng.bernoulli(threshold):
                    row |= 1 << b
            rows.append(row)
        yield Rel(src, dst, tuple(rows))


def _mrel_rows_from_code(code: int, ns: int, per_row: int, masks: list[int]) -> list[list[int]]:
    rows = []
    for a in range(ns):
        chunk = (code >> (a * per_row)) & ((1 << per_row) - 1)
        rows.append([masks[i] for i in range(per_row) if chunk >> i & 1])
    return rows


def _mrel_stream(spec: GenSpec) -> Iterator[MRel]:
    ns, nd = spec.shape
    src, dst = Carrier(ns), Carrier(nd)
    constructive = next((f for f in _CONSTRUCTIVE if f in spec.where), None)
    residual_filter = set(spec.where)
    if constructive:
        residual_filter.discard(constructive)

    if spec.mode == "exhaustive":
        if constructive in ("outer_deterministic", "outer_univalent"):
            if nd > POW_CAP:
                raise PowersetTooLarge(
                    f"single-valued rows need 2^{nd} masks (cap 2^{POW_CAP})"
                )
            per_row = (1 << nd) + (1 if constructive == "outer_univalent" else 0)
            total = per_row ** ns
            if total > ENUM_CAP:
                raise EnumerationTooLarge(
                    f"{total} {constructive} instances exceed cap {ENUM_CAP}", total
                )
            rows_vocab: list[tuple[int, ...]] = [()] if constructive == "outer_univalent" else []
            rows_vocab += [(c,) for c in range(1 << nd)]
            for choice in product(rows_vocab, repeat=ns):
                m = MRel(src, dst, tuple(choice))
                if not residual_filter or classify_mrel(m).matches(residual_filter):
                    yield m
            return
        masks = _allowed_masks(constructive, nd) if constructive else None
        if masks is None:
            if nd > POW_CAP:
                raise PowersetTooLarge(
                    f"exhaustive multirelations need 2^{nd} masks per row (cap 2^{POW_CAP})"
                )
            masks = list(range(1 << nd))
        per_row = len(masks)
        _check_exhaustive_bits(ns * per_row, "multirelations")
        for code in range(1 << (ns * per_row)):
            m = MRel.make(src, dst, _mrel_rows_from_code(code, ns, per_row, masks))
            if not residual_filter or classify_mrel(m).matches(residual_filter):
                yield m
        return

    threshold = density_threshold(spec.density)
    produced = 0
    candidate = 0
    budget = max(1000, spec.count * 1000)
    while produced < spec.count:
        if candidate >= budget:
            raise EnumerationTooLarge(
                f"rejection sampling for {sorted(spec.where)} exhausted after "
                f"{candidate} candidates",
                candidate,
            )
        rng = SplitMix64(mix64(spec.seed ^ candidate))
        candidate += 1
        if constructive in ("outer_deterministic", "outer_univalent"):
            if nd > POW_CAP:
                raise PowersetTooLarge(
                    f"single-valued rows need 2^{nd} masks (cap 2^{POW_CAP})"
                )
            rows = []
            for _ in range(ns):
                if constructive == "outer_univalent":
                    pick = rng.below((1 << nd) + 1)
                    rows.append(() if pick == 0 else (pick - 1,))
                else:
                    rows.append((rng.below(1 << nd),))
            m = MRel(src, dst, tuple(rows))
        else:
            masks = _allowed_masks(constructive, nd) if constructive else None
            if masks is None:
                if nd > POW_CAP:
                    raise PowersetTooLarge(
                        f"random multirelations need 2^{nd} candidate masks per row "
                        f"(cap 2^{POW_CAP})"
                    )
                masks = list(range(1 << nd))
            rows = []
            for _ in range(ns):
                rows.append([m for m in masks if rng.bernoulli(threshold)])
            m = MRel.make(src, dst, rows)
        if residual_filter and not classify_mrel(m).matches(residual_filter):
            continue
        produced += 1
        yield m


def instances(kind: str, spec: GenSpec) -> Iterator[Rel] | Iterator[MRel]:
    """Stream of generated instances; see the module docstring for order
    and determinism guarantees."""
    if kind == "rel":
        stream = _rel_stream(spec)
        if spec.where and spec.mode == "exhaustive":
            return (r for r in stream if _rel_matches(r, spec.where))
        if spec.where:
            return _rel_rejection(spec)
        return stream
    if kind == "mrel":
        return _mrel_stream(spec)
    raise ValueError(f"unknown instance kind {kind!r}")


def _rel_matches(r: Rel, where: frozenset[str]) -> bool:
    flags = classify_rel(r)
    return all(getattr(flags, name) for name in where)


def _rel_rejection(spec: GenSpec) -> Iterator[Rel]:
    ns, nd = spec.shape
    src, dst = Carrier(ns), Carrier(nd)
    threshold = density_threshold(spec.density)
    produced = 0
    candidate = 0
    budget = max(1000, spec.count * 1000)
    while produced < spec.count:
        if candidate >= budget:
            raise EnumerationTooLarge(
                f"rejection sampling for {sorted(spec.where)} exhausted after "
                f"{candidate} candidates",
                candidate,
            )
        rng = SplitMix64(mix64(spec.seed ^ candidate))
        candidate += 1
        rows = []
        for _ in range(ns):
            row = 0
            for b in range(nd):
                if rng.bernoulli(threshold):
                    row |= 1 << b
            rows.append(row)
        r = Rel(src, dst, tuple(rows))
        if _rel_matches(r, spec.where):
            produced += 1
            yield r


def count_matching(kind: str, spec: GenSpec) -> int:
    """Cardinality of the stream the same spec would produce."""
    return sum(1 for _ in instances(kind, spec))
