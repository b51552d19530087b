"""Command-line interface: evaluate terms, list and check laws, hunt for
counterexamples, and canonicalize serialized values.

Exit codes: 0 success / all laws as declared; 1 law failed or
counterexample found; 2 usage error; 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dsl import (
    BINARY_OPS,
    CONSTS,
    UNARY_OPS,
    Bin,
    Call,
    Cmp,
    Const,
    Env,
    Term,
    Un,
    Var,
    env_from_json,
    evaluate,
    parse,
)
from .errors import (
    EnumerationTooLarge,
    MaskTooWide,
    MultirelError,
    PowersetTooLarge,
    ShapeMismatch,
    TermSyntaxError,
    UnboundVariable,
    UnknownLaw,
)
from .laws import Law, LawReport, Slot, check
from .mrel import MRel
from .registry import law_by_id, registry
from .rel import Rel

_CAP_ERRORS = (PowersetTooLarge, MaskTooWide, EnumerationTooLarge)


def _value_json(v):
    if isinstance(v, bool):
        return v
    return v.to_json()


def _parse_sizes(text: str) -> tuple[int, int]:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise SystemExit(2)
    if len(parts) != 2 or any(p < 1 for p in parts):
        print("error: --sizes expects two positive integers, e.g. 2,2", file=sys.stderr)
        raise SystemExit(2)
    return parts[0], parts[1]


def _cmd_eval(args) -> int:
    try:
        with open(args.env) as fh:
            env = env_from_json(json.load(fh))
    except (OSError, ValueError, KeyError) as e:
        print(f"error: cannot load environment: {e}", file=sys.stderr)
        return 2
    try:
        value = evaluate(args.expr, env)
    except _CAP_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (TermSyntaxError, UnboundVariable, ShapeMismatch) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = json.dumps(_value_json(value), indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_laws(args) -> int:
    for law in registry():
        if args.filter and not law.id.startswith(args.filter):
            continue
        print(f"{law.id:44s} {law.kind:10s} {law.anchor}")
        line = f"    claim: {law.claim}"
        if law.guard:
            line += f"   [given {law.guard}]"
        if law.kind != "theorem":
            line += f"   [expected to {law.expected}]"
        print(line)
    return 0


def _report_lines(rep: LawReport) -> str:
    status = "as declared" if rep.as_declared else "NOT as declared"
    line = (
        f"{rep.law:44s} {rep.verdict:7s} (expected {rep.expected}; {status}; "
        f"mode {rep.mode}; checked {rep.checked}"
    )
    if rep.skipped_by_condition:
        line += f"; {rep.skipped_by_condition} skipped by side condition"
    line += ")"
    if rep.reason:
        line += f"\n    reason: {rep.reason}"
    for cex in rep.counterexamples[:1]:
        line += f"\n    witness: {json.dumps(cex, sort_keys=True)}"
    return line


def _cmd_check(args) -> int:
    sizes = _parse_sizes(args.sizes) if args.sizes else None
    kwargs = dict(sizes=sizes, seed=args.seed)
    if args.random is not None:
        kwargs["count"] = args.random
    if args.density is not None:
        kwargs["density"] = args.density
    if args.law:
        try:
            law = law_by_id(args.law)
        except UnknownLaw as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
        rep = check(law, **kwargs)
        if args.json:
            print(json.dumps(rep.to_json(timing=args.timing), indent=2))
        else:
            print(_report_lines(rep))
        if rep.verdict == "skipped":
            return 3
        return 0 if rep.verdict == "pass" else 1
    reports = [check(law, **kwargs) for law in registry()]
    ok = all(r.as_declared for r in reports)
    if args.json:
        payload = {
            "seed": args.seed,
            "sizes": list(sizes) if sizes else [2, 2],
            "all_as_declared": ok,
            "reports": [r.to_json(timing=args.timing) for r in reports],
        }
        print(json.dumps(payload, indent=2))
    else:
        for rep in reports:
            if not rep.as_declared or args.verbose:
                print(_report_lines(rep))
        declared = sum(r.as_declared for r in reports)
        print(f"{declared}/{len(reports)} laws behaved as declared")
    return 0 if ok else 1


_MREL_ARG_OPS = set(
    ("icup", "icap", "odot", "up", "down", "convex", "icpl", "dual", "nu",
     "tau", "a", "kl", "pl", "do", "di", "cfo", "cfi", "dsup")
)
_REL_ARG_OPS = {"cnv", "dom", "L", "Pf", "syq"}


def _infer_sorts(t: Term, expected: str | None, out: dict[str, set]):
    """Collect the sort expectations each free variable appears under."""
    if isinstance(t, Var):
        out.setdefault(t.name, set())
        if expected:
            out[t.name].add(expected)
        return
    if isinstance(t, Const):
        return
    if isinstance(t, Call):
        want = "mrel" if t.op in _MREL_ARG_OPS else "rel" if t.op in _REL_ARG_OPS else None
        for a in t.args:
            _infer_sorts(a, want, out)
        return
    if isinstance(t, Un):
        _infer_sorts(t.arg, "rel" if t.op == "^" else expected, out)
        return
    if isinstance(t, (Bin, Cmp)):
        op = t.op
        if op in ("*", "@"):
            want = "mrel"
        elif op in (";", "\\", "/"):
            want = "rel"
        else:
            want = None
        _infer_sorts(t.left, want, out)
        _infer_sorts(t.right, want, out)


def _cmd_find_cex(args) -> int:
    sizes = _parse_sizes(args.sizes)
    claim = f"({args.lhs}) {args.rel} ({args.rhs})"
    try:
        lhs_t, rhs_t = parse(args.lhs), parse(args.rhs)
        parse(claim)
    except TermSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    wants: dict[str, set] = {}
    _infer_sorts(lhs_t, None, wants)
    _infer_sorts(rhs_t, None, wants)
    for role in ("X", "Y"):
        wants.pop(role, None)
    # an operand required as a multirelation anywhere is generated as one;
    # multirelations coerce to their powerset view in relational positions
    sorts = {
        name: ("mrel" if "mrel" in kinds or not kinds else "rel")
        for name, kinds in wants.items()
    }
    if args.vars:
        for piece in args.vars.split(","):
            name, _, sort = piece.partition("=")
            if sort not in ("rel", "mrel"):
                print(f"error: bad --vars entry {piece!r}", file=sys.stderr)
                return 2
            sorts[name.strip()] = sort
    slots = tuple(
        Slot(name, sorts[name], "X", "Y") for name in sorted(sorts)
    )
    law = Law(
        id="adhoc",
        kind="neg",
        anchor=claim,
        claim=claim,
        slots=slots,
        roles=("X", "Y"),
        expected="fail",
        size_cap=max(sizes),
        count=args.random if args.random is not None else 2000,
        density=args.density if args.density is not None else 0.5,
    )
    try:
        rep = check(law, sizes=sizes, seed=args.seed, collect=1)
    except _CAP_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    if rep.verdict == "skipped":
        print(f"skipped: {rep.reason}", file=sys.stderr)
        return 3
    if rep.counterexamples:
        print(json.dumps(rep.counterexamples[0], sort_keys=True, indent=2))
        return 1
    print(
        f"no counterexample found ({rep.mode} search, {rep.checked} instances)"
    )
    return 0


def _cmd_convert(args) -> int:
    try:
        with open(args.infile) as fh:
            data = json.load(fh)
    except (OSError, ValueError) as e:
        print(f"error: cannot read input: {e}", file=sys.stderr)
        return 2
    try:
        out = _canonicalize(data)
    except (KeyError, ValueError, TypeError, IndexError, MultirelError) as e:
        print(f"error: malformed value file: {e}", file=sys.stderr)
        return 2
    with open(args.outfile, "w") as fh:
        fh.write(json.dumps(out, indent=2) + "\n")
    return 0


def _canonicalize(data):
    if isinstance(data, dict) and "pairs" in data:
        return Rel.from_json(data).to_json()
    if isinstance(data, dict) and "rows" in data:
        return MRel.from_json(data).to_json()
    # environment file
    env = env_from_json(data)
    out = {"carriers": {}, "rels": {}, "mrels": {}}
    for name in sorted(env.bindings):
        v = env.bindings[name]
        if isinstance(v, Rel):
            out["rels"][name] = v.to_json()
        elif isinstance(v, MRel):
            out["mrels"][name] = v.to_json()
        else:
            out["carriers"][name] = (
                v.size if v.names is None else {"size": v.size, "names": list(v.names)}
            )
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(
        prog="multirel",
        description="finite-model workbench for the algebra of binary multirelations",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term against an environment file")
    p.add_argument("--env", required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--out")

    p = sub.add_parser("laws", help="list the law registry")
    p.add_argument("--filter", default=None, help="id prefix filter")

    p = sub.add_parser("check", help="check one law or the whole registry")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--law")
    g.add_argument("--all", action="store_true")
    p.add_argument("--sizes", default=None, help="carrier sizes, e.g. 2,2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=None, help="random tuples per law")
    p.add_argument("--density", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms in JSON")
    p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("find-cex", help="search for a counterexample to lhs REL rhs")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--rel", required=True, choices=["==", "<=", "<u=", "<d=", "<ud="])
    p.add_argument("--sizes", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=None)
    p.add_argument("--density", type=float, default=None)
    p.add_argument("--vars", default=None, help="override sorts, e.g. R=rel,S=mrel")

    p = sub.add_parser("convert", help="canonicalize a value or environment file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)

    args = ap.parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "laws":
            return _cmd_laws(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "find-cex":
            return _cmd_find_cex(args)
        if args.command == "convert":
            return _cmd_convert(args)
    except _CAP_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    return 2


if __name__ == "__main__":
    sys.exit(main())
