"""Law checking engine: run registry entries over generated instances,
shrink counterexamples, and report deterministically.

A law's claim (and optional guard) are boolean terms over named slots;
slots are filled from the instance generators, honoring per-slot property
requirements through the constructive generators where available.  Reports
are canonical: given the same law, sizes and seed, two runs produce
byte-identical JSON.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .dsl import Env, Term, env_from_json, eval_term, parse
from .errors import (
    EnumerationTooLarge,
    MaskTooWide,
    PowersetTooLarge,
    ShapeMismatch,
    UnknownLaw,
)
from .generate import GenSpec, instances, mix64
from .mrel import MRel
from .rel import Carrier, Rel


@dataclass(frozen=True)
class Slot:
    """One generated operand: its sort, carrier roles and required flags."""

    name: str
    sort: str  # "rel" | "mrel"
    src: str  # carrier role name
    dst: str
    needs: tuple[str, ...] = ()


@dataclass(frozen=True)
class Law:
    """An executable property with a stable id.

    ``kind`` is "theorem" (expected to hold), "neg" (expected to fail on
    some generated instance) or "regression" (evaluated on a pinned
    environment).  ``anchor`` states the checked result symbolically.
    """

    id: str
    kind: str
    anchor: str
    claim: str
    slots: tuple[Slot, ...] = ()
    roles: tuple[str, ...] = ("X", "Y")
    guard: str | None = None
    pinned: dict | None = None
    expected: str = "pass"
    size_cap: int = 3
    budget: int = 1 << 16  # exhaustive tuple budget before degrading to random
    count: int = 200  # random tuples when degraded
    density: float = 0.5
    note: str = ""

    def parsed_claim(self) -> Term:
        return parse(self.claim)


@dataclass
class LawReport:
    law: str
    kind: str
    mode: str
    sizes: dict[str, int]
    checked: int
    skipped_by_condition: int
    verdict: str  # pass | fail | skipped
    reason: str | None
    expected: str
    as_declared: bool
    counterexamples: list[dict]
    seed: int
    elapsed_ms: int

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "law": self.law,
            "kind": self.kind,
            "mode": self.mode,
            "sizes": {k: self.sizes[k] for k in sorted(self.sizes)},
            "checked": self.checked,
            "skipped_by_condition": self.skipped_by_condition,
            "verdict": self.verdict,
            "reason": self.reason,
            "expected": self.expected,
            "as_declared": self.as_declared,
            "counterexamples": self.counterexamples,
            "seed": self.seed,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _fnv1a(text: str) -> int:
    h = 0xCBF29CE484222325
    for byte in text.encode():
        h ^= byte
        h = (h * 0x100000001B3) & ((1 << 64) - 1)
    return h


def law_seed(global_seed: int, law_id: str) -> int:
    return mix64(global_seed ^ _fnv1a(law_id))


def _value_json(v) -> dict:
    return v.to_json()


def _counterexample_json(carriers: dict[str, Carrier], values: dict[str, Rel | MRel]) -> dict:
    return {
        "carriers": {k: carriers[k].size for k in sorted(carriers)},
        "slots": {k: _value_json(values[k]) for k in sorted(values)},
    }


def _resolve_sizes(law: Law, sizes: Sequence[int] | None) -> dict[str, int]:
    out = {}
    for i, role in enumerate(law.roles):
        if sizes is None:
            v = 2
        elif i == 0:
            v = sizes[0]
        else:
            v = sizes[1] if len(sizes) > 1 else sizes[0]
        out[role] = max(1, min(v, law.size_cap))
    return out


def _exhaustive_count(slot: Slot, sizes: dict[str, int], budget: int) -> int:
    """Stream length for a slot, constructive filters included.

    For rejection-filtered slots whose raw space already exceeds the
    budget, the raw size is returned instead of enumerating: the check
    will degrade to random sampling either way.
    """
    ns, nd = sizes[slot.src], sizes[slot.dst]
    if slot.sort == "rel":
        raw = 1 << (ns * nd)
        if slot.needs:
            if raw > budget:
                return raw
            return sum(1 for _ in _slot_stream(slot, sizes, "exhaustive", 0, 0, 0.5))
        return raw
    if "inner_deterministic" in slot.needs and len(slot.needs) == 1:
        return 1 << (ns * nd)
    if "inner_univalent" in slot.needs and len(slot.needs) == 1:
        return 1 << (ns * (nd + 1))
    if "outer_deterministic" in slot.needs and len(slot.needs) == 1:
        return (1 << nd) ** ns
    if "outer_univalent" in slot.needs and len(slot.needs) == 1:
        return ((1 << nd) + 1) ** ns
    raw = 1 << (ns * (1 << nd))
    if slot.needs:
        if raw > budget:
            return raw
        return sum(1 for _ in _slot_stream(slot, sizes, "exhaustive", 0, 0, 0.5))
    return raw


def _slot_stream(
    slot: Slot,
    sizes: dict[str, int],
    mode: str,
    seed: int,
    count: int,
    density: float,
) -> Iterator:
    spec = GenSpec(
        (sizes[slot.src], sizes[slot.dst]),
        mode,
        count=count,
        density=density,
        seed=seed,
        where=frozenset(slot.needs),
    )
    return instances(slot.sort, spec)


def check(
    law: Law,
    sizes: Sequence[int] | None = None,
    seed: int = 0,
    count: int | None = None,
    density: float | None = None,
    collect: int = 3,
) -> LawReport:
    """Evaluate one law and report; never raises for cap overruns."""
    started = time.monotonic()
    base_seed = law_seed(seed, law.id)
    resolved = _resolve_sizes(law, sizes)
    claim = law.parsed_claim()
    guard = parse(law.guard) if law.guard else None
    density = law.density if density is None else density

    def finish(mode, checked, skipped, verdict, reason, cex):
        return LawReport(
            law=law.id,
            kind=law.kind,
            mode=mode,
            sizes=resolved,
            checked=checked,
            skipped_by_condition=skipped,
            verdict=verdict,
            reason=reason,
            expected=law.expected,
            as_declared=verdict == law.expected,
            counterexamples=cex,
            seed=seed,
            elapsed_ms=int((time.monotonic() - started) * 1000),
        )

    if law.kind == "regression":
        env = env_from_json(law.pinned or {})
        resolved = {
            name: value.size
            for name, value in env.bindings.items()
            if isinstance(value, Carrier)
        }
        try:
            ok = bool(eval_term(claim, env))
        except (PowersetTooLarge, MaskTooWide, EnumerationTooLarge) as e:
            return finish("pinned", 0, 0, "skipped", str(e), [])
        verdict = "pass" if ok else "fail"
        cex = []
        if not ok:
            cex = [_pinned_json(law.pinned or {})]
        return finish("pinned", 1, 0, verdict, None, cex)

    carriers = {role: Carrier(resolved[role]) for role in law.roles}
    base_env = Env(dict(carriers))

    # choose exhaustive vs seeded-random by the size of the tuple space
    try:
        space = 1
        for slot in law.slots:
            space *= _exhaustive_count(slot, resolved, law.budget)
    except (EnumerationTooLarge, PowersetTooLarge, MaskTooWide) as e:
        return finish("exhaustive", 0, 0, "skipped", str(e), [])
    mode = "exhaustive" if space <= law.budget else "random"
    n_random = count if count is not None else law.count

    # NEG entries hunt for a witness: in random mode they sweep several
    # densities (deterministically) before reporting none found
    if mode == "random" and law.kind == "neg":
        densities = [density] + [d for d in (0.15, 0.5, 0.75) if d != density]
    else:
        densities = [density]

    def tuples() -> Iterator[tuple]:
        if not law.slots:
            yield ()
            return
        if mode == "exhaustive":
            streams = [
                list(_slot_stream(s, resolved, "exhaustive", 0, 0, density))
                for s in law.slots
            ]
            yield from product(*streams)
            return
        for phase, d in enumerate(densities):
            streams = [
                _slot_stream(
                    s,
                    resolved,
                    "random",
                    mix64(base_seed ^ (1000 * phase + i + 1)),
                    n_random,
                    d,
                )
                for i, s in enumerate(law.slots)
            ]
            yield from zip(*streams)

    checked = 0
    skipped = 0
    failures: list[dict] = []
    try:
        for tup in tuples():
            env = Env(base_env.bindings)
            for slot, value in zip(law.slots, tup):
                env.bindings[slot.name] = value
            if guard is not None and not eval_term(guard, env):
                skipped += 1
                continue
            checked += 1
            if not eval_term(claim, env):
                small = shrink(law, carriers, dict(zip((s.name for s in law.slots), tup)))
                failures.append(_counterexample_json(*small))
                if len(failures) >= collect:
                    break
    except (PowersetTooLarge, MaskTooWide, EnumerationTooLarge) as e:
        return finish(mode, checked, skipped, "skipped", str(e), [])
    failures = sorted({_stable_key(c): c for c in failures}.values(), key=_stable_key)
    verdict = "fail" if failures else "pass"
    return finish(mode, checked, skipped, verdict, None, failures)


def _stable_key(cex: dict) -> str:
    import json

    return json.dumps(cex, sort_keys=True)


def _pinned_json(pinned: dict) -> dict:
    out = {"carriers": dict(pinned.get("carriers") or {}), "slots": {}}
    for name, data in (pinned.get("rels") or {}).items():
        out["slots"][name] = data
    for name, data in (pinned.get("mrels") or {}).items():
        out["slots"][name] = data
    return out


# ---------------------------------------------------------------------------
# Shrinking


def _still_fails(law: Law, carriers: dict[str, Carrier], values: dict) -> bool:
    env = Env({**carriers, **values})
    try:
        for slot in law.slots:
            v = values[slot.name]
            if slot.needs:
                from .mrel import classify_mrel
                from .rel import classify_rel

                flags = classify_mrel(v) if slot.sort == "mrel" else classify_rel(v)
                if not all(getattr(flags, n) for n in slot.needs):
                    return False
        if law.guard is not None and not eval_term(parse(law.guard), env):
            return False
        return not eval_term(law.parsed_claim(), env)
    except (ShapeMismatch, PowersetTooLarge, MaskTooWide, EnumerationTooLarge):
        return False


def _drop_pair(value, pair):
    if isinstance(value, Rel):
        a, b = pair
        rows = list(value.rows)
        rows[a] &= ~(1 << b)
        return Rel(value.src, value.dst, tuple(rows))
    a, m = pair
    rows = [list(r) for r in value.rows]
    rows[a] = [x for x in rows[a] if x != m]
    return MRel.make(value.src, value.dst, rows)


def _mask_step(value: MRel, a: int, m: int, bit: int) -> MRel | None:
    smaller = m & ~bit
    if smaller in value.rows[a]:
        return None
    rows = [list(r) for r in value.rows]
    rows[a] = [smaller if x == m else x for x in rows[a]]
    return MRel.make(value.src, value.dst, rows)


def _drop_top_element(law: Law, carriers, values, role):
    """Remove the top element of a carrier role if nothing references it."""
    size = carriers[role].size
    if size <= 1:
        return None
    top = size - 1
    new_values = {}
    for slot in law.slots:
        v = values[slot.name]
        src_hit = slot.src == role
        dst_hit = slot.dst == role
        if isinstance(v, Rel):
            if src_hit and v.rows[top]:
                return None
            if dst_hit and any(r >> top & 1 for r in v.rows):
                return None
            rows = [r for a, r in enumerate(v.rows) if not (src_hit and a == top)]
            new_values[slot.name] = (rows, "rel", slot)
        else:
            if src_hit and v.rows[top]:
                return None
            if dst_hit and any(m >> top & 1 for row in v.rows for m in row):
                return None
            rows = [list(r) for a, r in enumerate(v.rows) if not (src_hit and a == top)]
            new_values[slot.name] = (rows, "mrel", slot)
    new_carriers = dict(carriers)
    new_carriers[role] = Carrier(size - 1)
    rebuilt = {}
    for name, (rows, sort, slot) in new_values.items():
        src = new_carriers[slot.src]
        dst = new_carriers[slot.dst]
        if sort == "rel":
            rebuilt[name] = Rel(src, dst, tuple(rows))
        else:
            rebuilt[name] = MRel.make(src, dst, rows)
    return new_carriers, rebuilt


def shrink(
    law: Law, carriers: dict[str, Carrier], values: dict
) -> tuple[dict[str, Carrier], dict]:
    """Greedy reduction: drop pairs, then clear mask bits, then drop unused
    top carrier elements; every accepted step still fails the law."""
    carriers = dict(carriers)
    values = dict(values)
    changed = True
    while changed:
        changed = False
        for slot in law.slots:
            v = values[slot.name]
            pairs = sorted(v.pairs())
            for pair in pairs:
                cand = dict(values)
                cand[slot.name] = _drop_pair(v, pair)
                if _still_fails(law, carriers, cand):
                    values = cand
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        for slot in law.slots:
            v = values[slot.name]
            if not isinstance(v, MRel):
                continue
            for a, m in sorted(v.pairs()):
                if m == 0:
                    continue
                probe = m
                while probe:
                    b = probe & -probe
                    cand_val = _mask_step(v, a, m, b)
                    probe &= ~b
                    if cand_val is None:
                        continue
                    cand = dict(values)
                    cand[slot.name] = cand_val
                    if _still_fails(law, carriers, cand):
                        values = cand
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
        if changed:
            continue
        for role in law.roles:
            out = _drop_top_element(law, carriers, values, role)
            if out is not None and _still_fails(law, out[0], out[1]):
                carriers, values = out
                changed = True
                break
    return carriers, values
