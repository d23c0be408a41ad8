"""Formula abstract syntax, concrete grammar, printing, and quantifier degree.

Two languages live here.  The modal language has falsum, proposition
letters p1, p2, ..., conjunction, disjunction, implication, box and
diamond; there is no primitive negation or verum (write ``false -> false``
for a formula that is true everywhere).  The correspondence language is
classical first-order logic without identity over unary predicates
P1, P2, ... and the three binary relations R, Rb (the box relation) and
Rd (the diamond relation).

Concrete grammars (box and dia bind tightest, then ``&``, then ``|``,
then right-associative ``->``; parentheses always accepted)::

    modal:  false | p<digits> | f & f | f "|" f | f -> f | box f | dia f | (f)
    fol:    false | P<digits>(v) | R(v,v) | Rb(v,v) | Rd(v,v)
            | forall v. f | exists v. f | same binary connectives

Quantifier bodies extend as far to the right as possible.
"""

from __future__ import annotations

import random
import re
from typing import Iterator

REL_NAMES = ("R", "Rb", "Rd")

# Proposition-letter signatures are plain frozensets of positive indices.
Signature = frozenset


class ParseError(ValueError):
    """Raised on malformed formula text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# Modal abstract syntax
# ---------------------------------------------------------------------------
#
# Nodes precompute their hash and syntactic size at construction time, so
# both stay O(1) even when formulas share subtrees heavily (the bounded
# enumeration in the types module builds such DAGs on purpose).


class ModalFormula:
    __slots__ = ("_hash", "size")

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(self) is not type(other) or self._hash != other._hash:
            return False
        return self._fields() == other._fields()

    def _fields(self) -> tuple:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {format_modal(self)!r}>"


class Bottom(ModalFormula):
    __slots__ = ()

    def __init__(self):
        self._hash = hash(("m.bot",))
        self.size = 1

    def _fields(self) -> tuple:
        return ()


class Prop(ModalFormula):
    __slots__ = ("index",)

    def __init__(self, index: int):
        if not isinstance(index, int) or isinstance(index, bool) or index < 1:
            raise ValueError(f"proposition index must be a positive integer, got {index!r}")
        self.index = index
        self._hash = hash(("m.prop", index))
        self.size = 1

    def _fields(self) -> tuple:
        return (self.index,)


class _ModalBinary(ModalFormula):
    __slots__ = ("left", "right")
    _tag = ""

    def __init__(self, left: ModalFormula, right: ModalFormula):
        self.left = left
        self.right = right
        self._hash = hash((self._tag, left._hash, right._hash))
        self.size = 1 + left.size + right.size

    def _fields(self) -> tuple:
        return (self.left, self.right)


class And(_ModalBinary):
    __slots__ = ()
    _tag = "m.and"


class Or(_ModalBinary):
    __slots__ = ()
    _tag = "m.or"


class Implies(_ModalBinary):
    __slots__ = ()
    _tag = "m.imp"


class _ModalUnary(ModalFormula):
    __slots__ = ("child",)
    _tag = ""

    def __init__(self, child: ModalFormula):
        self.child = child
        self._hash = hash((self._tag, child._hash))
        self.size = 1 + child.size

    def _fields(self) -> tuple:
        return (self.child,)


class Box(_ModalUnary):
    __slots__ = ()
    _tag = "m.box"


class Diamond(_ModalUnary):
    __slots__ = ()
    _tag = "m.dia"


# ---------------------------------------------------------------------------
# First-order abstract syntax
# ---------------------------------------------------------------------------


class FolFormula:
    __slots__ = ("_hash", "size")

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(self) is not type(other) or self._hash != other._hash:
            return False
        return self._fields() == other._fields()

    def _fields(self) -> tuple:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {format_fol(self)!r}>"


class FolBottom(FolFormula):
    __slots__ = ()

    def __init__(self):
        self._hash = hash(("f.bot",))
        self.size = 1

    def _fields(self) -> tuple:
        return ()


class PredAtom(FolFormula):
    __slots__ = ("index", "var")

    def __init__(self, index: int, var: str):
        if not isinstance(index, int) or isinstance(index, bool) or index < 1:
            raise ValueError(f"predicate index must be a positive integer, got {index!r}")
        self.index = index
        self.var = var
        self._hash = hash(("f.pred", index, var))
        self.size = 1

    def _fields(self) -> tuple:
        return (self.index, self.var)


class RelAtom(FolFormula):
    __slots__ = ("rel", "var1", "var2")

    def __init__(self, rel: str, var1: str, var2: str):
        if rel not in REL_NAMES:
            raise ValueError(f"unknown relation name {rel!r}, expected one of {REL_NAMES}")
        self.rel = rel
        self.var1 = var1
        self.var2 = var2
        self._hash = hash(("f.rel", rel, var1, var2))
        self.size = 1

    def _fields(self) -> tuple:
        return (self.rel, self.var1, self.var2)


class _FolBinary(FolFormula):
    __slots__ = ("left", "right")
    _tag = ""

    def __init__(self, left: FolFormula, right: FolFormula):
        self.left = left
        self.right = right
        self._hash = hash((self._tag, left._hash, right._hash))
        self.size = 1 + left.size + right.size

    def _fields(self) -> tuple:
        return (self.left, self.right)


class FolAnd(_FolBinary):
    __slots__ = ()
    _tag = "f.and"


class FolOr(_FolBinary):
    __slots__ = ()
    _tag = "f.or"


class FolImplies(_FolBinary):
    __slots__ = ()
    _tag = "f.imp"


class _Quantifier(FolFormula):
    __slots__ = ("var", "body")
    _tag = ""

    def __init__(self, var: str, body: FolFormula):
        self.var = var
        self.body = body
        self._hash = hash((self._tag, var, body._hash))
        self.size = 1 + body.size

    def _fields(self) -> tuple:
        return (self.var, self.body)


class Forall(_Quantifier):
    __slots__ = ()
    _tag = "f.all"


class Exists(_Quantifier):
    __slots__ = ()
    _tag = "f.ex"


# ---------------------------------------------------------------------------
# Tokenizer shared by both parsers
# ---------------------------------------------------------------------------

_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_KEYWORDS = {"false", "box", "dia", "forall", "exists"}
_PRED = re.compile(r"P[0-9]+\Z")
_PROP = re.compile(r"p[0-9]+\Z")


def _tokenize(text: str) -> Iterator[tuple[str, int]]:
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if text.startswith("->", i):
            yield "->", i
            i += 2
            continue
        if ch in "&|(),.":
            yield ch, i
            i += 1
            continue
        m = _WORD.match(text, i)
        if m:
            yield m.group(0), i
            i = m.end()
            continue
        raise ParseError(f"unknown token {ch!r}", i)
    yield "", n


class _TokenStream:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.pos = 0

    def peek(self) -> tuple[str, int]:
        return self.tokens[self.pos]

    def next(self) -> tuple[str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != "":
            self.pos += 1
        return tok

    def expect(self, wanted: str) -> None:
        tok, at = self.next()
        if tok != wanted:
            raise ParseError(f"expected {wanted!r}, found {tok!r}", at)


# ---------------------------------------------------------------------------
# Modal parser
# ---------------------------------------------------------------------------


def parse_modal(text: str) -> ModalFormula:
    """Parse a modal formula from concrete syntax."""
    ts = _TokenStream(text)
    f = _modal_implies(ts)
    tok, at = ts.peek()
    if tok != "":
        raise ParseError(f"unexpected trailing token {tok!r}", at)
    return f


def _modal_implies(ts: _TokenStream) -> ModalFormula:
    left = _modal_or(ts)
    if ts.peek()[0] == "->":
        ts.next()
        return Implies(left, _modal_implies(ts))
    return left


def _modal_or(ts: _TokenStream) -> ModalFormula:
    f = _modal_and(ts)
    while ts.peek()[0] == "|":
        ts.next()
        f = Or(f, _modal_and(ts))
    return f


def _modal_and(ts: _TokenStream) -> ModalFormula:
    f = _modal_unary(ts)
    while ts.peek()[0] == "&":
        ts.next()
        f = And(f, _modal_unary(ts))
    return f


def _modal_unary(ts: _TokenStream) -> ModalFormula:
    tok, at = ts.peek()
    if tok == "box":
        ts.next()
        return Box(_modal_unary(ts))
    if tok == "dia":
        ts.next()
        return Diamond(_modal_unary(ts))
    return _modal_atom(ts)


def _modal_atom(ts: _TokenStream) -> ModalFormula:
    tok, at = ts.next()
    if tok == "false":
        return Bottom()
    if tok == "(":
        f = _modal_implies(ts)
        ts.expect(")")
        return f
    if _PROP.match(tok):
        index = int(tok[1:])
        if index < 1:
            raise ParseError(f"proposition letters start at p1, got {tok!r}", at)
        return Prop(index)
    if tok == "":
        raise ParseError("unexpected end of input", at)
    raise ParseError(f"unexpected token {tok!r}", at)


# ---------------------------------------------------------------------------
# First-order parser
# ---------------------------------------------------------------------------


def parse_fol(text: str) -> FolFormula:
    """Parse a correspondence-language formula from concrete syntax."""
    ts = _TokenStream(text)
    f = _fol_implies(ts)
    tok, at = ts.peek()
    if tok != "":
        raise ParseError(f"unexpected trailing token {tok!r}", at)
    return f


def _fol_implies(ts: _TokenStream) -> FolFormula:
    left = _fol_or(ts)
    if ts.peek()[0] == "->":
        ts.next()
        return FolImplies(left, _fol_implies(ts))
    return left


def _fol_or(ts: _TokenStream) -> FolFormula:
    f = _fol_and(ts)
    while ts.peek()[0] == "|":
        ts.next()
        f = FolOr(f, _fol_and(ts))
    return f


def _fol_and(ts: _TokenStream) -> FolFormula:
    f = _fol_atom(ts)
    while ts.peek()[0] == "&":
        ts.next()
        f = FolAnd(f, _fol_atom(ts))
    return f


def _fol_variable(ts: _TokenStream) -> str:
    tok, at = ts.next()
    if not tok or not _WORD.fullmatch(tok):
        raise ParseError(f"expected a variable, found {tok!r}", at)
    if tok in _KEYWORDS or tok in REL_NAMES or _PRED.match(tok):
        raise ParseError(f"reserved name {tok!r} cannot be a variable", at)
    return tok


def _fol_atom(ts: _TokenStream) -> FolFormula:
    tok, at = ts.next()
    if tok == "false":
        return FolBottom()
    if tok == "(":
        f = _fol_implies(ts)
        ts.expect(")")
        return f
    if tok in ("forall", "exists"):
        var = _fol_variable(ts)
        ts.expect(".")
        body = _fol_implies(ts)
        return (Forall if tok == "forall" else Exists)(var, body)
    if _PRED.match(tok):
        index = int(tok[1:])
        if index < 1:
            raise ParseError(f"predicates start at P1, got {tok!r}", at)
        ts.expect("(")
        var = _fol_variable(ts)
        ts.expect(")")
        return PredAtom(index, var)
    if tok in REL_NAMES:
        ts.expect("(")
        v1 = _fol_variable(ts)
        ts.expect(",")
        v2 = _fol_variable(ts)
        ts.expect(")")
        return RelAtom(tok, v1, v2)
    if tok == "":
        raise ParseError("unexpected end of input", at)
    raise ParseError(f"unexpected token {tok!r}", at)


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------
#
# Minimal parenthesization: a subformula is wrapped exactly when its
# operator binds looser than the context requires, so parse(format(f))
# always returns a structurally identical tree.

_M_ATOM, _M_UNARY, _M_AND, _M_OR, _M_IMP = 4, 3, 2, 1, 0


def format_modal(f: ModalFormula) -> str:
    """Render a modal formula in concrete syntax."""
    return _fm(f, 0)


def _fm(f: ModalFormula, min_prec: int) -> str:
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Prop):
        return f"p{f.index}"
    if isinstance(f, Box):
        s = f"box {_fm(f.child, _M_UNARY)}"
        prec = _M_UNARY
    elif isinstance(f, Diamond):
        s = f"dia {_fm(f.child, _M_UNARY)}"
        prec = _M_UNARY
    elif isinstance(f, And):
        s = f"{_fm(f.left, _M_AND)} & {_fm(f.right, _M_AND + 1)}"
        prec = _M_AND
    elif isinstance(f, Or):
        s = f"{_fm(f.left, _M_OR)} | {_fm(f.right, _M_OR + 1)}"
        prec = _M_OR
    elif isinstance(f, Implies):
        s = f"{_fm(f.left, _M_IMP + 1)} -> {_fm(f.right, _M_IMP)}"
        prec = _M_IMP
    else:
        raise TypeError(f"not a modal formula: {f!r}")
    if prec < min_prec:
        return f"({s})"
    return s


def format_fol(f: FolFormula) -> str:
    """Render a correspondence-language formula in concrete syntax."""
    return _ff(f, 0)


def _ff(f: FolFormula, min_prec: int) -> str:
    if isinstance(f, FolBottom):
        return "false"
    if isinstance(f, PredAtom):
        return f"P{f.index}({f.var})"
    if isinstance(f, RelAtom):
        return f"{f.rel}({f.var1},{f.var2})"
    if isinstance(f, (Forall, Exists)):
        word = "forall" if isinstance(f, Forall) else "exists"
        body = _ff(f.body, 0)
        if isinstance(f.body, (FolAnd, FolOr, FolImplies)):
            body = f"({body})"
        s = f"{word} {f.var}. {body}"
        prec = _M_IMP
    elif isinstance(f, FolAnd):
        s = f"{_ff(f.left, _M_AND)} & {_ff(f.right, _M_AND + 1)}"
        prec = _M_AND
    elif isinstance(f, FolOr):
        s = f"{_ff(f.left, _M_OR)} | {_ff(f.right, _M_OR + 1)}"
        prec = _M_OR
    elif isinstance(f, FolImplies):
        s = f"{_ff(f.left, _M_IMP + 1)} -> {_ff(f.right, _M_IMP)}"
        prec = _M_IMP
    else:
        raise TypeError(f"not a FOL formula: {f!r}")
    if prec < min_prec:
        return f"({s})"
    return s


# ---------------------------------------------------------------------------
# Degree and free variables
# ---------------------------------------------------------------------------


def degree(f: FolFormula) -> int:
    """Maximal quantifier nesting depth: 0 on atoms, max over binary
    connectives, plus one per quantifier."""
    memo: dict[int, int] = {}

    def walk(g: FolFormula) -> int:
        key = id(g)
        if key in memo:
            return memo[key]
        if isinstance(g, (FolBottom, PredAtom, RelAtom)):
            d = 0
        elif isinstance(g, (FolAnd, FolOr, FolImplies)):
            d = max(walk(g.left), walk(g.right))
        elif isinstance(g, (Forall, Exists)):
            d = walk(g.body) + 1
        else:
            raise TypeError(f"not a FOL formula: {g!r}")
        memo[key] = d
        return d

    return walk(f)


def free_vars(f: FolFormula) -> frozenset:
    """The set of free variables of a correspondence formula."""
    memo: dict[int, frozenset] = {}

    def walk(g: FolFormula) -> frozenset:
        key = id(g)
        if key in memo:
            return memo[key]
        if isinstance(g, FolBottom):
            vs = frozenset()
        elif isinstance(g, PredAtom):
            vs = frozenset((g.var,))
        elif isinstance(g, RelAtom):
            vs = frozenset((g.var1, g.var2))
        elif isinstance(g, (FolAnd, FolOr, FolImplies)):
            vs = walk(g.left) | walk(g.right)
        elif isinstance(g, (Forall, Exists)):
            vs = walk(g.body) - {g.var}
        else:
            raise TypeError(f"not a FOL formula: {g!r}")
        memo[key] = vs
        return vs

    return walk(f)


# ---------------------------------------------------------------------------
# Random formulas for the property suites
# ---------------------------------------------------------------------------


def random_modal_formula(max_depth: int, props: tuple, rng: random.Random) -> ModalFormula:
    """Draw a random modal formula of connective depth at most max_depth.

    Deterministic in the state of rng; props lists the candidate letter
    indices (may be empty, in which case every leaf is falsum).
    """
    if max_depth <= 0 or rng.random() < 0.2:
        if props and rng.random() >= 0.25:
            return Prop(rng.choice(list(props)))
        return Bottom()
    kind = rng.choice(("and", "or", "imp", "box", "dia"))
    if kind == "box":
        return Box(random_modal_formula(max_depth - 1, props, rng))
    if kind == "dia":
        return Diamond(random_modal_formula(max_depth - 1, props, rng))
    left = random_modal_formula(max_depth - 1, props, rng)
    right = random_modal_formula(max_depth - 1, props, rng)
    if kind == "and":
        return And(left, right)
    if kind == "or":
        return Or(left, right)
    return Implies(left, right)
