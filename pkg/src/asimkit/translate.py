"""Translation of modal formulas into the classical correspondence language.

The translation is parametric in the clause-system variant and commutes
with satisfaction: a modal formula holds at world w exactly when its
translation holds under the assignment sending the entry variable to w.
Letters become unary predicates of the same index, implication becomes a
guarded universal over R, and the modalities unfold to one quantifier
(clause 1) or a guarded pair of quantifiers (clause 2) over Rb or Rd.

Fresh bound variables are drawn as y0, y1, ... in pre-order, skipping
the entry variable, so the output is deterministic.
"""

from __future__ import annotations

import re

from .semantics import Variant
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

_VAR = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RESERVED = re.compile(r"(false|box|dia|forall|exists|R|Rb|Rd|P[0-9]+)\Z")


def _check_entry_var(x: str) -> str:
    if not isinstance(x, str) or not _VAR.match(x):
        raise ValueError(f"entry variable must be an identifier, got {x!r}")
    if _RESERVED.match(x):
        raise ValueError(f"reserved name {x!r} cannot be a variable")
    return x


class _FreshVars:
    """Yields y0, y1, ... skipping names in the avoid set."""

    def __init__(self, avoid=()):
        self.avoid = set(avoid)
        self.counter = 0

    def next(self) -> str:
        while True:
            name = f"y{self.counter}"
            self.counter += 1
            if name not in self.avoid:
                return name


def _translate_at(
    f: ModalFormula, var: str, variant: Variant, fresh: _FreshVars, memo: dict
) -> FolFormula:
    # Keyed on (subformula identity, entry variable): fresh variables are
    # unique per call, so a cached subtree is only reused in positions
    # where its one free variable is bound by the same quantifier.
    key = (id(f), var)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if isinstance(f, Bottom):
        res: FolFormula = FolBottom()
    elif isinstance(f, Prop):
        res = PredAtom(f.index, var)
    elif isinstance(f, And):
        res = FolAnd(
            _translate_at(f.left, var, variant, fresh, memo),
            _translate_at(f.right, var, variant, fresh, memo),
        )
    elif isinstance(f, Or):
        res = FolOr(
            _translate_at(f.left, var, variant, fresh, memo),
            _translate_at(f.right, var, variant, fresh, memo),
        )
    elif isinstance(f, Implies):
        y = fresh.next()
        res = Forall(
            y,
            FolImplies(
                RelAtom("R", var, y),
                FolImplies(
                    _translate_at(f.left, y, variant, fresh, memo),
                    _translate_at(f.right, y, variant, fresh, memo),
                ),
            ),
        )
    elif isinstance(f, Box):
        if variant.box_clause == 1:
            y = fresh.next()
            res = Forall(
                y,
                FolImplies(
                    RelAtom("Rb", var, y),
                    _translate_at(f.child, y, variant, fresh, memo),
                ),
            )
        else:
            y = fresh.next()
            z = fresh.next()
            res = Forall(
                y,
                FolImplies(
                    RelAtom("R", var, y),
                    Forall(
                        z,
                        FolImplies(
                            RelAtom("Rb", y, z),
                            _translate_at(f.child, z, variant, fresh, memo),
                        ),
                    ),
                ),
            )
    elif isinstance(f, Diamond):
        if variant.diamond_clause == 1:
            y = fresh.next()
            res = Exists(
                y,
                FolAnd(
                    RelAtom("Rd", var, y),
                    _translate_at(f.child, y, variant, fresh, memo),
                ),
            )
        else:
            y = fresh.next()
            z = fresh.next()
            res = Forall(
                y,
                FolImplies(
                    RelAtom("R", var, y),
                    Exists(
                        z,
                        FolAnd(
                            RelAtom("Rd", y, z),
                            _translate_at(f.child, z, variant, fresh, memo),
                        ),
                    ),
                ),
            )
    else:
        raise TypeError(f"not a modal formula: {f!r}")
    memo[key] = res
    return res


def translate(formula: ModalFormula, variant: Variant, x: str = "x") -> FolFormula:
    """Standard translation of a modal formula with entry variable x."""
    if not isinstance(variant, Variant):
        raise TypeError(f"expected a Variant, got {variant!r}")
    _check_entry_var(x)
    return _translate_at(formula, x, variant, _FreshVars(avoid=(x,)), {})


def translation_degree(formula: ModalFormula, variant: Variant) -> int:
    """Quantifier depth of translate(formula, variant, x), without building it.

    Atoms contribute 0; conjunction and disjunction take the maximum of
    their sides; implication adds 1; a modality adds 1 under clause 1 and
    2 under clause 2.
    """
    if not isinstance(variant, Variant):
        raise TypeError(f"expected a Variant, got {variant!r}")
    memo: dict = {}

    def walk(f: ModalFormula) -> int:
        key = id(f)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(f, (Bottom, Prop)):
            d = 0
        elif isinstance(f, (And, Or)):
            d = max(walk(f.left), walk(f.right))
        elif isinstance(f, Implies):
            d = 1 + max(walk(f.left), walk(f.right))
        elif isinstance(f, Box):
            d = walk(f.child) + (1 if variant.box_clause == 1 else 2)
        elif isinstance(f, Diamond):
            d = walk(f.child) + (1 if variant.diamond_clause == 1 else 2)
        else:
            raise TypeError(f"not a modal formula: {f!r}")
        memo[key] = d
        return d

    return walk(formula)
