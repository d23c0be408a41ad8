"""Satisfaction for both languages, in each of the four clause systems.

A clause-system variant picks one of two box clauses and one of two
diamond clauses.  With s the evaluation world:

* box 1:  every Rb-successor of s satisfies the argument;
* box 2:  every Rb-successor of every R-successor of s does;
* diamond 1:  some Rd-successor of s satisfies the argument;
* diamond 2:  every R-successor of s has some Rd-successor that does.

Implication is the same in all four systems: at every R-successor t of
s, if the antecedent holds at t then so does the consequent.  Note that
R is not assumed reflexive, so s itself participates only if sRs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kripke import KripkeStructure
from .syntax import (
    And,
    Bottom,
    Box,
    Diamond,
    Exists,
    FolAnd,
    FolBottom,
    FolFormula,
    FolImplies,
    FolOr,
    Forall,
    Implies,
    ModalFormula,
    Or,
    PredAtom,
    Prop,
    RelAtom,
)


@dataclass(frozen=True)
class Variant:
    """A choice of box clause and diamond clause, each 1 or 2."""

    box_clause: int
    diamond_clause: int

    def __post_init__(self):
        if self.box_clause not in (1, 2) or self.diamond_clause not in (1, 2):
            raise ValueError(
                f"clause selectors must be 1 or 2, got "
                f"({self.box_clause}, {self.diamond_clause})"
            )

    @property
    def code(self) -> str:
        return f"{self.box_clause}{self.diamond_clause}"

    @classmethod
    def from_code(cls, code: str) -> "Variant":
        if len(code) != 2 or code[0] not in "12" or code[1] not in "12":
            raise ValueError(f"variant codes are 11, 12, 21 or 22, got {code!r}")
        return cls(int(code[0]), int(code[1]))


VARIANTS = (Variant(1, 1), Variant(1, 2), Variant(2, 1), Variant(2, 2))


# ---------------------------------------------------------------------------
# Modal satisfaction
# ---------------------------------------------------------------------------


def eval_modal(M: KripkeStructure, w, formula: ModalFormula, variant: Variant) -> bool:
    """Does formula hold at world w of M under the given clause system?"""
    if w not in M.worlds:
        raise ValueError(f"{w!r} is not a world of the structure")
    if not isinstance(variant, Variant):
        raise TypeError(f"expected a Variant, got {variant!r}")
    memo: dict = {}

    def ev(u, f: ModalFormula) -> bool:
        key = (id(f), u)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(f, Bottom):
            res = False
        elif isinstance(f, Prop):
            res = M.prop_true(f.index, u)
        elif isinstance(f, And):
            res = ev(u, f.left) and ev(u, f.right)
        elif isinstance(f, Or):
            res = ev(u, f.left) or ev(u, f.right)
        elif isinstance(f, Implies):
            res = all(not ev(t, f.left) or ev(t, f.right) for t in M.succ("R", u))
        elif isinstance(f, Box):
            if variant.box_clause == 1:
                res = all(ev(t, f.child) for t in M.succ("Rb", u))
            else:
                res = all(
                    ev(r, f.child)
                    for t in M.succ("R", u)
                    for r in M.succ("Rb", t)
                )
        elif isinstance(f, Diamond):
            if variant.diamond_clause == 1:
                res = any(ev(t, f.child) for t in M.succ("Rd", u))
            else:
                res = all(
                    any(ev(r, f.child) for r in M.succ("Rd", t))
                    for t in M.succ("R", u)
                )
        else:
            raise TypeError(f"not a modal formula: {f!r}")
        memo[key] = res
        return res

    return ev(w, formula)


# ---------------------------------------------------------------------------
# First-order satisfaction
# ---------------------------------------------------------------------------


def eval_fol(M: KripkeStructure, env: dict, formula: FolFormula) -> bool:
    """Classical satisfaction of a correspondence formula under env.

    env maps variable names to worlds of M and must cover every free
    variable of the formula; extra bindings are ignored.
    """
    free_map: dict = {}

    def fv(f: FolFormula) -> frozenset:
        key = id(f)
        hit = free_map.get(key)
        if hit is not None:
            return hit
        if isinstance(f, FolBottom):
            vs = frozenset()
        elif isinstance(f, PredAtom):
            vs = frozenset((f.var,))
        elif isinstance(f, RelAtom):
            vs = frozenset((f.var1, f.var2))
        elif isinstance(f, (FolAnd, FolOr, FolImplies)):
            vs = fv(f.left) | fv(f.right)
        elif isinstance(f, (Forall, Exists)):
            vs = fv(f.body) - {f.var}
        else:
            raise TypeError(f"not a FOL formula: {f!r}")
        free_map[key] = vs
        return vs

    missing = fv(formula) - set(env)
    if missing:
        raise ValueError(f"unbound variables: {sorted(missing)}")
    for v, w in env.items():
        if w not in M.worlds:
            raise ValueError(f"env binds {v!r} to {w!r}, not a world of the structure")

    # Subformulas of standard translations carry at most two free
    # variables, so keying the memo on the restriction of env to the
    # subformula's free variables keeps evaluation polynomial even on
    # deeply nested guarded quantifiers.
    memo: dict = {}

    def ev(f: FolFormula, env_: dict) -> bool:
        key = (id(f), tuple(sorted((v, env_[v]) for v in free_map[id(f)])))
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(f, FolBottom):
            res = False
        elif isinstance(f, PredAtom):
            res = M.prop_true(f.index, env_[f.var])
        elif isinstance(f, RelAtom):
            res = (env_[f.var1], env_[f.var2]) in M.pairs(f.rel)
        elif isinstance(f, FolAnd):
            res = ev(f.left, env_) and ev(f.right, env_)
        elif isinstance(f, FolOr):
            res = ev(f.left, env_) or ev(f.right, env_)
        elif isinstance(f, FolImplies):
            res = not ev(f.left, env_) or ev(f.right, env_)
        elif isinstance(f, Forall):
            res = all(ev(f.body, {**env_, f.var: w}) for w in M.sorted_worlds())
        elif isinstance(f, Exists):
            res = any(ev(f.body, {**env_, f.var: w}) for w in M.sorted_worlds())
        else:
            raise TypeError(f"not a FOL formula: {f!r}")
        memo[key] = res
        return res

    return ev(formula, dict(env))


# ---------------------------------------------------------------------------
# Vectorized modal satisfaction over several structures at once
# ---------------------------------------------------------------------------


class _VectorSemantics:
    """Truth vectors of modal formulas as int bitmasks.

    One bit per (structure index, world) point across a fixed tuple of
    structures.  Connective actions are bitwise, so the truth vector of a
    compound is computed from its children's vectors without revisiting
    the structures; this is what makes bounded formula enumeration with
    semantic deduplication cheap.
    """

    def __init__(self, models: tuple):
        self.models = tuple(models)
        points = []
        for i, M in enumerate(self.models):
            if not isinstance(M, KripkeStructure):
                raise TypeError(f"expected KripkeStructure, got {M!r}")
            for w in M.sorted_worlds():
                points.append((i, w))
        self.points = tuple(points)
        self.bit_of = {pt: b for b, pt in enumerate(points)}
        self.n = len(points)
        self.full = (1 << self.n) - 1
        self.mask = {}
        for rel in ("R", "Rb", "Rd"):
            masks = []
            for i, w in self.points:
                m = 0
                for u in self.models[i].succ(rel, w):
                    m |= 1 << self.bit_of[(i, u)]
                masks.append(m)
            self.mask[rel] = masks

    def prop(self, index: int) -> int:
        v = 0
        for b, (i, w) in enumerate(self.points):
            if self.models[i].prop_true(index, w):
                v |= 1 << b
        return v

    def v_and(self, a: int, b: int) -> int:
        return a & b

    def v_or(self, a: int, b: int) -> int:
        return a | b

    def _all_under_r(self, vec: int) -> int:
        # bit p set iff every R-successor point of p has its bit set in vec
        out = 0
        miss = self.full ^ vec
        masks = self.mask["R"]
        for b in range(self.n):
            if masks[b] & miss == 0:
                out |= 1 << b
        return out

    def v_implies(self, a: int, b: int) -> int:
        return self._all_under_r((self.full ^ a) | b)

    def v_box(self, a: int, variant: Variant) -> int:
        out = 0
        miss = self.full ^ a
        masks = self.mask["Rb"]
        for b in range(self.n):
            if masks[b] & miss == 0:
                out |= 1 << b
        if variant.box_clause == 1:
            return out
        return self._all_under_r(out)

    def v_dia(self, a: int, variant: Variant) -> int:
        out = 0
        masks = self.mask["Rd"]
        for b in range(self.n):
            if masks[b] & a:
                out |= 1 << b
        if variant.diamond_clause == 1:
            return out
        return self._all_under_r(out)

    def vector(self, f: ModalFormula, variant: Variant) -> int:
        memo: dict = {}

        def walk(g: ModalFormula) -> int:
            key = id(g)
            hit = memo.get(key)
            if hit is not None:
                return hit
            if isinstance(g, Bottom):
                v = 0
            elif isinstance(g, Prop):
                v = self.prop(g.index)
            elif isinstance(g, And):
                v = walk(g.left) & walk(g.right)
            elif isinstance(g, Or):
                v = walk(g.left) | walk(g.right)
            elif isinstance(g, Implies):
                v = self.v_implies(walk(g.left), walk(g.right))
            elif isinstance(g, Box):
                v = self.v_box(walk(g.child), variant)
            elif isinstance(g, Diamond):
                v = self.v_dia(walk(g.child), variant)
            else:
                raise TypeError(f"not a modal formula: {g!r}")
            memo[key] = v
            return v

        return walk(f)

    def truth(self, vec: int, model_index: int, w) -> bool:
        return bool(vec >> self.bit_of[(model_index, w)] & 1)
