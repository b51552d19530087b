"""Term language for relational and multirelational expressions.

Operator tokens are ASCII; the concordance table in the README maps each
token to its usual symbol.  Precedence, tightest first:

    postfix ^ (converse)
    prefix  - (complement)
    ;  @  *   (relational / Kleisli / Peleg composition, left associative)
    &
    |
    \\  /     (residuals, non-associative: parenthesize chains)
    ==  <=  <u=  <d=  <ud=   (comparisons, non-associative)

Named operations use call syntax, e.g. ``do(R)`` or ``syq(T, S)``.
Constants may take explicit carrier arguments (``Id(X)``, ``mem(Y)``,
``At(X,Y)``, ``eta(pw(X))``); without arguments their carriers are
inferred from the surrounding operation where that is unambiguous.

Multirelations and relations into a materialized powerset are freely
interchangeable: operations that need the other view convert on the fly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .determinise import determinise as _determinise
from . import mrel as _mrel
from . import peleg as _peleg
from . import power as _power
from . import rel as _rel
from .errors import ShapeMismatch, TermSyntaxError, UnboundVariable
from .mrel import MRel
from .rel import Carrier, Rel


# ---------------------------------------------------------------------------
# Syntax trees


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class CRef:
    name: str


@dataclass(frozen=True)
class CPow:
    arg: "CRef | CPow"


@dataclass(frozen=True)
class Const:
    name: str
    args: tuple["CRef | CPow", ...] = ()


@dataclass(frozen=True)
class Call:
    op: str
    args: tuple["Term", ...]


@dataclass(frozen=True)
class Un:
    op: str  # "-" or "^"
    arg: "Term"


@dataclass(frozen=True)
class Bin:
    op: str  # ; @ * & | \ /
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Cmp:
    op: str  # == <= <u= <d= <ud=
    left: "Term"
    right: "Term"


Term = Var | Const | Call | Un | Bin | Cmp

UNARY_OPS = (
    "cnv", "cpl", "icpl", "up", "down", "convex", "dual", "nu", "tau",
    "dom", "L", "a", "Pf", "kl", "pl", "do", "di", "cfo", "cfi", "dsup",
)
BINARY_OPS = ("icup", "icap", "odot", "syq")
CONSTS = ("Id", "0", "U", "1", "eta", "ilow", "ihigh", "At", "coAt", "mem", "Om", "Cc", "mu")
# constant name -> number of carrier arguments accepted in explicit form
_CONST_ARITY = {
    "Id": (1,), "0": (2,), "U": (2,), "1": (1,), "eta": (1,),
    "ilow": (2,), "ihigh": (2,), "At": (2,), "coAt": (2,), "mem": (1,),
    "Om": (1,), "Cc": (1,), "mu": (1,),
}

_CMP_OPS = ("==", "<=", "<u=", "<d=", "<ud=")


# ---------------------------------------------------------------------------
# Lexer


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _lex(text: str) -> list[_Tok]:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("ident", text[i:j], i))
            i = j
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("ident", text[i:j], i))
            i = j
            continue
        if c == "=" and text[i : i + 2] == "==":
            toks.append(_Tok("op", "==", i))
            i += 2
            continue
        if c == "<":
            for form in ("<ud=", "<u=", "<d=", "<="):
                if text[i : i + len(form)] == form:
                    toks.append(_Tok("op", form, i))
                    i += len(form)
                    break
            else:
                raise TermSyntaxError(
                    f"stray '<' at position {i}", i, ("<=", "<u=", "<d=", "<ud=")
                )
            continue
        if c in ";@*&|\\/^-(),":
            toks.append(_Tok("op", c, i))
            i += 1
            continue
        raise TermSyntaxError(f"unexpected character {c!r} at position {i}", i)
    toks.append(_Tok("end", "", n))
    return toks


# ---------------------------------------------------------------------------
# Parser (recursive descent)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.text != text:
            raise TermSyntaxError(
                f"expected {text!r} at position {t.pos}, found {t.text!r}",
                t.pos,
                (text,),
            )
        return self.take()

    def parse(self) -> Term:
        t = self.comparison()
        end = self.peek()
        if end.kind != "end":
            raise TermSyntaxError(
                f"trailing input at position {end.pos}: {end.text!r}", end.pos
            )
        return t

    def comparison(self) -> Term:
        left = self.residual()
        t = self.peek()
        if t.text in _CMP_OPS:
            self.take()
            right = self.residual()
            nxt = self.peek()
            if nxt.text in _CMP_OPS:
                raise TermSyntaxError(
                    f"comparison chains need parentheses (position {nxt.pos})", nxt.pos
                )
            return Cmp(t.text, left, right)
        return left

    def residual(self) -> Term:
        left = self.union()
        t = self.peek()
        if t.text in ("\\", "/"):
            self.take()
            right = self.union()
            nxt = self.peek()
            if nxt.text in ("\\", "/"):
                raise TermSyntaxError(
                    f"residual chains need parentheses (position {nxt.pos})", nxt.pos
                )
            return Bin(t.text, left, right)
        return left

    def union(self) -> Term:
        left = self.inter()
        while self.peek().text == "|":
            self.take()
            left = Bin("|", left, self.inter())
        return left

    def inter(self) -> Term:
        left = self.compose()
        while self.peek().text == "&":
            self.take()
            left = Bin("&", left, self.compose())
        return left

    def compose(self) -> Term:
        left = self.prefix()
        while self.peek().text in (";", "@", "*"):
            op = self.take().text
            left = Bin(op, left, self.prefix())
        return left

    def prefix(self) -> Term:
        if self.peek().text == "-":
            self.take()
            return Un("-", self.prefix())
        return self.postfix()

    def postfix(self) -> Term:
        t = self.atom()
        while self.peek().text == "^":
            self.take()
            t = Un("^", t)
        return t

    def atom(self) -> Term:
        t = self.peek()
        if t.text == "(":
            self.take()
            inner = self.comparison()
            self.expect(")")
            return inner
        if t.kind != "ident":
            raise TermSyntaxError(
                f"expected a term at position {t.pos}, found {t.text!r}",
                t.pos,
                ("identifier", "("),
            )
        self.take()
        name = t.text
        if name in UNARY_OPS or name in BINARY_OPS:
            self.expect("(")
            args = [self.comparison()]
            while self.peek().text == ",":
                self.take()
                args.append(self.comparison())
            self.expect(")")
            want = 1 if name in UNARY_OPS else 2
            if len(args) != want:
                raise TermSyntaxError(
                    f"{name} takes {want} argument(s), got {len(args)} "
                    f"(position {t.pos})",
                    t.pos,
                )
            return Call(name, tuple(args))
        if name in CONSTS:
            if self.peek().text == "(":
                self.take()
                args = [self.carrier_expr()]
                while self.peek().text == ",":
                    self.take()
                    args.append(self.carrier_expr())
                self.expect(")")
                if len(args) not in _CONST_ARITY[name]:
                    raise TermSyntaxError(
                        f"{name} takes {_CONST_ARITY[name][0]} carrier argument(s) "
                        f"(position {t.pos})",
                        t.pos,
                    )
                return Const(name, tuple(args))
            return Const(name)
        if self.peek().text == "(":
            raise TermSyntaxError(
                f"unknown operation {name!r} at position {t.pos}", t.pos
            )
        return Var(name)

    def carrier_expr(self) -> CRef | CPow:
        t = self.peek()
        if t.kind != "ident":
            raise TermSyntaxError(
                f"expected a carrier name at position {t.pos}", t.pos, ("identifier",)
            )
        self.take()
        if t.text == "pw":
            self.expect("(")
            inner = self.carrier_expr()
            self.expect(")")
            return CPow(inner)
        return CRef(t.text)


def parse(text: str) -> Term:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Printer

_LEVEL_CMP, _LEVEL_RES, _LEVEL_UNION, _LEVEL_INTER, _LEVEL_COMP, _LEVEL_PRE, _LEVEL_POST, _LEVEL_ATOM = range(8)

_BIN_LEVEL = {";": _LEVEL_COMP, "@": _LEVEL_COMP, "*": _LEVEL_COMP,
              "&": _LEVEL_INTER, "|": _LEVEL_UNION, "\\": _LEVEL_RES, "/": _LEVEL_RES}


def _carrier_text(c: CRef | CPow) -> str:
    if isinstance(c, CPow):
        return f"pw({_carrier_text(c.arg)})"
    return c.name


def _show(t: Term) -> tuple[str, int]:
    if isinstance(t, Var):
        return t.name, _LEVEL_ATOM
    if isinstance(t, Const):
        if t.args:
            return f"{t.name}({', '.join(_carrier_text(a) for a in t.args)})", _LEVEL_ATOM
        return t.name, _LEVEL_ATOM
    if isinstance(t, Call):
        inner = ", ".join(_show(a)[0] for a in t.args)
        return f"{t.op}({inner})", _LEVEL_ATOM
    if isinstance(t, Un):
        if t.op == "^":
            body, lvl = _show(t.arg)
            if lvl < _LEVEL_POST:
                body = f"({body})"
            return f"{body}^", _LEVEL_POST
        body, lvl = _show(t.arg)
        if lvl < _LEVEL_PRE:
            body = f"({body})"
        return f"-{body}", _LEVEL_PRE
    if isinstance(t, Bin):
        lvl = _BIN_LEVEL[t.op]
        lt, ll = _show(t.left)
        rt, rl = _show(t.right)
        # the residual level is non-associative: parenthesize both children
        # at equal level; left-associative levels admit equal-level left
        # children only
        if ll < lvl or (ll == lvl and lvl == _LEVEL_RES):
            lt = f"({lt})"
        if rl <= lvl:
            rt = f"({rt})"
        return f"{lt} {t.op} {rt}", lvl
    if isinstance(t, Cmp):
        lt, ll = _show(t.left)
        rt, rl = _show(t.right)
        if ll <= _LEVEL_CMP:
            lt = f"({lt})"
        if rl <= _LEVEL_CMP:
            rt = f"({rt})"
        return f"{lt} {t.op} {rt}", _LEVEL_CMP
    raise TypeError(f"not a term: {t!r}")


def print_term(t: Term) -> str:
    return _show(t)[0]


# ---------------------------------------------------------------------------
# Evaluation

Value = Rel | MRel | bool


@dataclass(frozen=True)
class _Poly:
    """A constant whose carriers (and possibly sort) are still open.

    Shape-preserving unary operations applied to an unresolved constant are
    queued in ``pending`` and replayed once the carriers are known, so terms
    like ``R * down(eta)`` infer the unit's carrier from ``R``.
    """

    name: str
    shape: tuple[Carrier, Carrier] | None = None
    pending: tuple[str, ...] = ()


# unary operations that keep an operand's carriers unchanged
_SHAPE_PRESERVING = (
    "up", "down", "convex", "icpl", "dual", "nu", "tau",
    "do", "di", "cfo", "cfi", "-", "cpl",
)


def _as_rel(v) -> Rel:
    if isinstance(v, MRel):
        return _mrel.mrel_to_rel(v)
    if isinstance(v, Rel):
        return v
    raise ShapeMismatch(f"expected a relation, got {type(v).__name__}")


def _as_mrel(v) -> MRel:
    if isinstance(v, MRel):
        return v
    if isinstance(v, Rel):
        return _mrel.rel_to_mrel(v)
    raise ShapeMismatch(f"expected a multirelation, got {type(v).__name__}")


def _resolve(p: _Poly, sort: str | None, src: Carrier | None, dst: Carrier | None):
    """Build the constant ``p`` for the inferred context, or fail."""
    v = _resolve_base(p, sort, src, dst)
    for op in p.pending:
        if op == "-":
            v = _complement(v)
        else:
            v = _UNARY_IMPL[op](v)
    return v


def _resolve_base(p: _Poly, sort: str | None, src: Carrier | None, dst: Carrier | None):
    name = p.name
    if p.shape is not None:
        src, dst = p.shape
    if name in ("0", "U"):
        if src is None or dst is None or sort is None:
            raise ShapeMismatch(f"cannot infer the shape of constant {name}")
        kind = "empty" if name == "0" else "universal"
        if sort == "mrel":
            return _mrel.mrel_const(kind, src, dst)
        return _rel.rel_const(kind, src, dst)
    if name == "Id":
        s = src or dst
        if s is None:
            raise ShapeMismatch("cannot infer the carrier of Id")
        return _rel.rel_const("identity", s, s)
    if name in ("1", "eta"):
        base = None
        if sort == "mrel":
            base = src or dst
        else:
            # relation view Y <-> P(Y): a powerset endpoint pins the carrier
            if dst is not None and dst.base is not None:
                base = dst.base
            elif src is not None and src.base is None:
                base = src
            elif src is not None and src.base is not None:
                base = src  # eta over a powerset carrier itself
        if base is None:
            raise ShapeMismatch("cannot infer the carrier of eta")
        return _power.eta(base)
    if name == "mem":
        if src is not None and src.base is None:
            return _power.member_rel(src)
        if dst is not None and dst.base is not None:
            return _power.member_rel(dst.base)
        if src is not None and src.base is not None:
            return _power.member_rel(src)
        raise ShapeMismatch("cannot infer the carrier of mem")
    if name in ("Om", "Cc"):
        c = src or dst
        if c is None or c.base is None:
            raise ShapeMismatch(f"cannot infer the carrier of {name}")
        build = _power.omega if name == "Om" else _power.ccomp
        return build(c.base)
    if name == "mu":
        if dst is not None and dst.base is not None:
            return _power.mu(dst.base)
        if src is not None and src.base is not None and src.base.base is not None:
            return _power.mu(src.base.base)
        raise ShapeMismatch("cannot infer the carrier of mu")
    if name in ("ilow", "ihigh", "At", "coAt"):
        if src is None or dst is None:
            raise ShapeMismatch(f"cannot infer the shape of {name}")
        inner = dst.base if dst.base is not None else dst
        kind = {
            "ilow": "inner_unit",
            "ihigh": "inner_counit",
            "At": "atoms",
            "coAt": "coatoms",
        }[name]
        return _mrel.mrel_const(kind, src, inner)
    raise ShapeMismatch(f"cannot resolve constant {name}")


def _mrel_shape(v) -> tuple[Carrier, Carrier]:
    m = _as_mrel(v)
    return m.src, m.dst


def _rel_shape(v) -> tuple[Carrier, Carrier]:
    r = _as_rel(v)
    return r.src, r.dst


class Env:
    """Name bindings for evaluation: carriers, relations, multirelations."""

    def __init__(self, bindings: Mapping[str, Carrier | Rel | MRel] | None = None):
        self.bindings: dict[str, Carrier | Rel | MRel] = dict(bindings or {})

    def bind(self, name: str, value: Carrier | Rel | MRel) -> "Env":
        out = Env(self.bindings)
        out.bindings[name] = value
        return out

    def __getitem__(self, name: str):
        try:
            return self.bindings[name]
        except KeyError:
            raise UnboundVariable(f"unbound name {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self.bindings


def env_from_json(data: Mapping) -> Env:
    """Environment files: {"carriers": {...}, "rels": {...}, "mrels": {...}}.

    Carriers are either a size or {"size": n, "names": [...]}.
    """
    env = Env()
    seen: set[str] = set()

    def add(name, value):
        if name in seen:
            raise ValueError(f"duplicate environment name {name!r}")
        seen.add(name)
        env.bindings[name] = value

    for name, c in (data.get("carriers") or {}).items():
        if isinstance(c, int):
            add(name, Carrier(c))
        else:
            names = tuple(c["names"]) if c.get("names") else None
            add(name, Carrier(int(c["size"]), names))
    for name, r in (data.get("rels") or {}).items():
        add(name, Rel.from_json(r))
    for name, m in (data.get("mrels") or {}).items():
        add(name, MRel.from_json(m))
    return env


def _carrier_value(c: CRef | CPow, env: Env) -> Carrier:
    if isinstance(c, CPow):
        return _rel.pow_carrier(_carrier_value(c.arg, env))
    v = env[c.name]
    if not isinstance(v, Carrier):
        raise ShapeMismatch(f"{c.name!r} is not a carrier")
    return v


_UNARY_IMPL: dict[str, Callable] = {
    "cnv": lambda v: _rel.rel_converse(_as_rel(v)),
    "cpl": lambda v: _complement(v),
    "icpl": lambda v: _mrel.inner_bool("icomp", _as_mrel(v)),
    "up": lambda v: _mrel.closure("up", _as_mrel(v)),
    "down": lambda v: _mrel.closure("down", _as_mrel(v)),
    "convex": lambda v: _mrel.closure("convex", _as_mrel(v)),
    "dual": lambda v: _mrel.inner_dual(_as_mrel(v)),
    "nu": lambda v: _mrel.split_terminal(_as_mrel(v))[0],
    "tau": lambda v: _mrel.split_terminal(_as_mrel(v))[1],
    "dom": lambda v: _rel.domain(_as_rel(v)),
    "L": lambda v: _power.power_transpose(_as_rel(v)),
    "a": lambda v: _power.alpha(_as_mrel(v)),
    "Pf": lambda v: _power.image_functor(_as_rel(v)),
    "kl": lambda v: _peleg.kleisli_lift(_as_mrel(v)),
    "pl": lambda v: _peleg.peleg_lift(_as_mrel(v)),
    "do": lambda v: _determinise("fusion", _as_mrel(v)),
    "di": lambda v: _determinise("fission", _as_mrel(v)),
    "cfo": lambda v: _determinise("cofusion", _as_mrel(v)),
    "cfi": lambda v: _determinise("cofission", _as_mrel(v)),
    "dsup": lambda v: _dsup(_as_mrel(v)),
}


def _dsup(m: MRel) -> MRel:
    acc = _mrel.mrel_const("empty", m.src, m.dst)
    for part in _peleg.d_subrelations(m):
        acc = _mrel.mrel_bool("union", acc, part)
    return acc


def _complement(v):
    if isinstance(v, MRel):
        return _mrel.mrel_bool("complement", v)
    return _rel.rel_bool("complement", _as_rel(v))


def _pair_for_lattice(lv, rv):
    """Bring the operands of &, |, ==, <= to a common sort."""
    if isinstance(lv, MRel) and isinstance(rv, MRel):
        return lv, rv, "mrel"
    if isinstance(lv, (Rel, MRel)) and isinstance(rv, (Rel, MRel)):
        return _as_rel(lv), _as_rel(rv), "rel"
    raise ShapeMismatch("boolean structure needs two relational operands")


class _Located(ShapeMismatch):
    """A shape error already annotated with its sub-term."""


def _eval(t: Term, env: Env):
    if isinstance(t, Var):
        v = env[t.name]
        if isinstance(v, Carrier):
            raise _Located(f"{t.name!r} names a carrier, not a value")
        return v
    if isinstance(t, Const):
        return _eval_const(t, env)
    # evaluate children first, then apply this node inside an error frame
    if isinstance(t, Call):
        args = [_eval(a, env) for a in t.args]
        return _apply(t, lambda: _eval_call(t.op, args))
    if isinstance(t, Un):
        v = _eval(t.arg, env)
        return _apply(t, lambda: _eval_un(t.op, v))
    if isinstance(t, Bin):
        lv = _eval(t.left, env)
        rv = _eval(t.right, env)
        return _apply(t, lambda: _eval_bin(t.op, lv, rv))
    if isinstance(t, Cmp):
        lv = _eval(t.left, env)
        rv = _eval(t.right, env)
        return _apply(t, lambda: _eval_cmp(t.op, lv, rv))
    raise TypeError(f"not a term: {t!r}")


def _apply(t: Term, f):
    try:
        return f()
    except _Located:
        raise
    except ShapeMismatch as e:
        raise _Located(f"{e} [in sub-term: {print_term(t)}]") from None


def _eval_const(t: Const, env: Env):
    if not t.args:
        return _Poly(t.name)
    carriers = tuple(_carrier_value(a, env) for a in t.args)
    if t.name in ("0", "U"):
        return _Poly(t.name, (carriers[0], carriers[1]))
    if t.name == "Id":
        return _rel.rel_const("identity", carriers[0], carriers[0])
    if t.name in ("1", "eta"):
        return _power.eta(carriers[0])
    if t.name == "mem":
        return _power.member_rel(carriers[0])
    if t.name == "Om":
        return _power.omega(carriers[0])
    if t.name == "Cc":
        return _power.ccomp(carriers[0])
    if t.name == "mu":
        return _power.mu(carriers[0])
    kind = {
        "ilow": "inner_unit",
        "ihigh": "inner_counit",
        "At": "atoms",
        "coAt": "coatoms",
    }[t.name]
    return _mrel.mrel_const(kind, carriers[0], carriers[1])


_MREL_OPERAND_OPS = (
    "icup", "icap", "odot", "up", "down", "convex", "icpl", "dual", "nu",
    "tau", "a", "kl", "pl", "do", "di", "cfo", "cfi", "dsup",
)


def _eval_call(op: str, args: list):
    if len(args) == 1 and isinstance(args[0], _Poly) and op in _SHAPE_PRESERVING:
        p = args[0]
        if p.shape is None:
            return _Poly(p.name, p.shape, p.pending + (op,))
    if len(args) == 1 and isinstance(args[0], _Poly) and args[0].shape is not None:
        sort = "mrel" if op in _MREL_OPERAND_OPS else "rel"
        args = [_resolve(args[0], sort, None, None)]
    if len(args) == 2 and isinstance(args[0], _Poly) != isinstance(args[1], _Poly):
        i = 0 if isinstance(args[0], _Poly) else 1
        sib = args[1 - i]
        p = args[i]
        if op in ("icup", "icap"):
            src, dst = _mrel_shape(sib)
            args[i] = _resolve(p, "mrel", src, dst)
        elif op == "odot":
            src, dst = _mrel_shape(sib)
            args[i] = _resolve(p, "mrel", None, src) if i == 0 else _resolve(p, "mrel", dst, None)
        elif op == "syq":
            src, _ = _rel_shape(sib)
            args[i] = _resolve(p, "rel", src, None)
    if any(isinstance(a, _Poly) for a in args):
        raise ShapeMismatch(
            f"operand of {op} has no inferable shape; give the constant "
            f"explicit carrier arguments"
        )
    if op in _UNARY_IMPL:
        return _UNARY_IMPL[op](args[0])
    if op == "icup":
        return _mrel.inner_bool("icup", _as_mrel(args[0]), _as_mrel(args[1]))
    if op == "icap":
        return _mrel.inner_bool("icap", _as_mrel(args[0]), _as_mrel(args[1]))
    if op == "odot":
        return _peleg.odot(_as_mrel(args[0]), _as_mrel(args[1]))
    if op == "syq":
        return _rel.symmetric_quotient(_as_rel(args[0]), _as_rel(args[1]))
    raise ShapeMismatch(f"unknown operation {op!r}")


def _eval_un(op: str, v):
    if isinstance(v, _Poly):
        if op == "-":
            return _Poly(v.name, v.shape, v.pending + ("-",))
        raise ShapeMismatch(f"operand of {op} has no inferable shape")
    if op == "^":
        return _rel.rel_converse(_as_rel(v))
    return _complement(v)


def _eval_bin(op: str, lv, rv):
    if op in (";",):
        if isinstance(lv, _Poly) and isinstance(rv, _Poly):
            raise ShapeMismatch("cannot infer shapes on both sides of ';'")
        if isinstance(lv, _Poly):
            rs, _ = _rel_shape(rv)
            lv = _resolve(lv, "rel", None, rs)
        if isinstance(rv, _Poly):
            _, ld = _rel_shape(lv)
            rv = _resolve(rv, "rel", ld, None)
        return _rel.rel_compose(_as_rel(lv), _as_rel(rv))
    if op in ("*", "@"):
        if isinstance(lv, _Poly) and isinstance(rv, _Poly):
            raise ShapeMismatch(f"cannot infer shapes on both sides of {op!r}")
        if isinstance(lv, _Poly):
            rs, _ = _mrel_shape(rv)
            lv = _resolve(lv, "mrel", None, rs)
        if isinstance(rv, _Poly):
            _, ld = _mrel_shape(lv)
            rv = _resolve(rv, "mrel", ld, None)
        f = _peleg.peleg_compose if op == "*" else _peleg.kleisli_compose
        return f(_as_mrel(lv), _as_mrel(rv))
    if op in ("&", "|"):
        lv, rv = _resolve_against_sibling(lv, rv)
        a, b, sort = _pair_for_lattice(lv, rv)
        name = "inter" if op == "&" else "union"
        if sort == "mrel":
            return _mrel.mrel_bool(name, a, b)
        return _rel.rel_bool(name, a, b)
    if op in ("\\", "/"):
        if isinstance(lv, _Poly) or isinstance(rv, _Poly):
            lv, rv = _resolve_against_sibling(lv, rv)
        side = "right" if op == "\\" else "left"
        return _rel.residual(side, _as_rel(lv), _as_rel(rv))
    raise ShapeMismatch(f"unknown operator {op!r}")


def _resolve_against_sibling(lv, rv):
    if isinstance(lv, _Poly) and isinstance(rv, _Poly):
        raise ShapeMismatch("cannot infer shapes: both operands are bare constants")
    if isinstance(lv, _Poly):
        if isinstance(rv, MRel):
            lv = _resolve(lv, "mrel", rv.src, rv.dst)
        elif isinstance(rv, Rel):
            lv = _resolve(lv, "rel", rv.src, rv.dst)
        else:
            raise ShapeMismatch("cannot infer a constant's shape from a boolean")
    if isinstance(rv, _Poly):
        if isinstance(lv, MRel):
            rv = _resolve(rv, "mrel", lv.src, lv.dst)
        elif isinstance(lv, Rel):
            rv = _resolve(rv, "rel", lv.src, lv.dst)
        else:
            raise ShapeMismatch("cannot infer a constant's shape from a boolean")
    return lv, rv


def _eval_cmp(op: str, lv, rv) -> bool:
    if isinstance(lv, bool) or isinstance(rv, bool):
        if op != "==" or not (isinstance(lv, bool) and isinstance(rv, bool)):
            raise ShapeMismatch("booleans can only be compared with '=='")
        return lv == rv
    lv, rv = _resolve_against_sibling(lv, rv)
    if op == "==":
        if isinstance(lv, MRel) and isinstance(rv, MRel):
            return lv == rv
        return _as_rel(lv) == _as_rel(rv)
    if op == "<=":
        if isinstance(lv, MRel) and isinstance(rv, MRel):
            return _mrel.is_submrel(lv, rv)
        return _rel.is_subrel(_as_rel(lv), _as_rel(rv))
    mode = {"<u=": "smyth", "<d=": "hoare", "<ud=": "egli_milner"}[op]
    return _mrel.preorder(mode, _as_mrel(lv), _as_mrel(rv))


def eval_term(t: Term, env: Env):
    """Evaluate a term; shape errors carry the offending sub-term text."""
    v = _eval(t, env)
    if isinstance(v, _Poly):
        raise ShapeMismatch(
            f"term {print_term(t)!r} is a constant with no inferable shape"
        )
    return v


def evaluate(text: str, env: Env):
    """Parse and evaluate in one step."""
    return eval_term(parse(text), env)
