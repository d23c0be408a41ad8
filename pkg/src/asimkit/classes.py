"""Axiomatically defined structure classes and relativized invariance checks.

A model class is cut out of the structures by a finite list of closed
first-order sentences over the correspondence vocabulary.  Everything
here quantifies over a supplied finite corpus of structures, never over
all structures, so results are evidence rather than proofs: an empty
counterexample list does not certify invariance, but a non-empty one
refutes it on the corpus.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .asimulation import _maximal_relations, _pair_sort_key
from .kripke import KripkeStructure, world_sort_key
from .semantics import Variant, eval_fol, eval_modal
from .syntax import FolFormula, free_vars, parse_fol
from .types import FormulaPool


@dataclass(frozen=True)
class ModelClassSpec:
    """A named finite axiom list; all axioms must be sentences."""

    name: str
    axioms: tuple

    def __post_init__(self):
        object.__setattr__(self, "axioms", tuple(self.axioms))
        for ax in self.axioms:
            if not isinstance(ax, FolFormula):
                raise TypeError(f"axioms must be FolFormula, got {ax!r}")
            fv = free_vars(ax)
            if fv:
                raise ValueError(
                    f"axiom has free variables {sorted(fv)}; axioms must be sentences"
                )


def load_axioms(path: str, name: str = "") -> ModelClassSpec:
    """One sentence per line; blank lines and lines starting with # skipped."""
    axioms = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                axioms.append(parse_fol(text))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return ModelClassSpec(name or os.path.basename(path), tuple(axioms))


def _spec(name: str, *texts: str) -> ModelClassSpec:
    return ModelClassSpec(name, tuple(parse_fol(t) for t in texts))


AXIOM_SETS = {
    "none": _spec("none"),
    "reflexive": _spec("reflexive", "forall x. R(x,x)"),
    "transitive": _spec(
        "transitive",
        "forall x. forall y. forall z. (R(x,y) & R(y,z)) -> R(x,z)",
    ),
    "refl-trans": _spec(
        "refl-trans",
        "forall x. R(x,x)",
        "forall x. forall y. forall z. (R(x,y) & R(y,z)) -> R(x,z)",
    ),
    "box-equals-dia": _spec(
        "box-equals-dia",
        "forall x. forall y. Rb(x,y) -> Rd(x,y)",
        "forall x. forall y. Rd(x,y) -> Rb(x,y)",
    ),
    # composed left to right: (S after T)(x,y) iff exists z. T(x,z) & S(z,y)
    "composition": _spec(
        "composition",
        "forall x. forall y. (exists z. R(x,z) & Rb(z,y)) -> (exists w. Rb(x,w) & R(w,y))",
    ),
}


def satisfies_axioms(M: KripkeStructure, spec: ModelClassSpec) -> bool:
    """Does the structure satisfy every axiom of the class?"""
    if not isinstance(spec, ModelClassSpec):
        raise TypeError(f"expected a ModelClassSpec, got {spec!r}")
    return all(eval_fol(M, {}, ax) for ax in spec.axioms)


@dataclass(frozen=True)
class Counterexample:
    """A maximal-relation pair along which the formula is not preserved.

    Model indices refer to positions in the corpus as supplied, before
    axiom filtering.
    """

    source_model: int
    target_model: int
    source_world: object
    target_world: object

    def __str__(self) -> str:
        return (
            f"M{self.source_model}:{self.source_world} -> "
            f"M{self.target_model}:{self.target_world}"
        )


def _single_free_var(phi: FolFormula) -> str:
    fv = free_vars(phi)
    if len(fv) != 1:
        raise ValueError(
            f"the formula must have exactly one free variable, found {sorted(fv)}"
        )
    return next(iter(fv))


def kappa_invariance_test(
    phi: FolFormula, corpus, spec: ModelClassSpec, variant: Variant
) -> list:
    """Hunt for preservation failures of phi along maximal relations.

    Restricts the corpus to structures satisfying the axioms, computes
    the greatest fixpoint between every pair of survivors (self-pairs
    included), and reports each related pair whose source satisfies phi
    while its target does not.  An empty result is evidence of
    invariance over this corpus only.
    """
    var = _single_free_var(phi)
    models = [M for M in corpus]
    for M in models:
        if not isinstance(M, KripkeStructure):
            raise TypeError(f"corpus entries must be KripkeStructure, got {M!r}")
    filtered = [(i, M) for i, M in enumerate(models) if satisfies_axioms(M, spec)]
    if not filtered:
        raise ValueError(f"no corpus structure satisfies the axiom set {spec.name!r}")

    truth = {
        i: {w: eval_fol(M, {var: w}, phi) for w in M.sorted_worlds()}
        for i, M in filtered
    }

    out = []
    for ii in range(len(filtered)):
        for jj in range(ii, len(filtered)):
            oi, Mi = filtered[ii]
            oj, Mj = filtered[jj]
            relA, _ = _maximal_relations(Mi, Mj, variant)
            for p in sorted(relA, key=_pair_sort_key):
                if ii == jj and p.direction == "21":
                    continue  # self-pair relations are tag-symmetric
                src, tgt = (oi, oj) if p.direction == "12" else (oj, oi)
                if truth[src][p.source] and not truth[tgt][p.target]:
                    out.append(Counterexample(src, tgt, p.source, p.target))
    out.sort(
        key=lambda c: (
            c.source_model,
            c.target_model,
            world_sort_key(c.source_world),
            world_sort_key(c.target_world),
        )
    )
    return out


def modal_companion_search(
    phi: FolFormula,
    corpus,
    spec: ModelClassSpec,
    variant: Variant,
    pool: FormulaPool,
) -> list:
    """Rank pool members by agreement with phi over the filtered corpus.

    Agreement is the fraction of (structure, world) points where the
    candidate's modal truth value matches phi's first-order one; 1 means
    corpus-indistinguishable.  Ties keep pool order.
    """
    var = _single_free_var(phi)
    filtered = [M for M in corpus if satisfies_axioms(M, spec)]
    if not filtered:
        raise ValueError(f"no corpus structure satisfies the axiom set {spec.name!r}")
    points = [(M, w) for M in filtered for w in M.sorted_worlds()]
    want = [eval_fol(M, {var: w}, phi) for M, w in points]
    ranked = []
    for idx, f in enumerate(pool.members):
        got = [eval_modal(M, w, f, variant) for M, w in points]
        matches = sum(1 for a, b in zip(want, got) if a == b)
        ranked.append((f, Fraction(matches, len(points)), idx))
    ranked.sort(key=lambda item: (-item[1], item[2]))
    return [(f, agreement) for f, agreement, _ in ranked]
