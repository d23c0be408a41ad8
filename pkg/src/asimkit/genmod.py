"""Generalized guarded modalities: translations and condition schemas.

A modality signature is a non-empty prefix of guarded quantifiers,
written outermost-first, each a (quantifier, relation) pair over the
three accessibility relations.  The four built-in modalities arise as

    box  clause 1:  A:Rb          box  clause 2:  A:R;A:Rb
    dia  clause 1:  E:Rd          dia  clause 2:  A:R;E:Rd

gen_st unfolds a signature into its guarded first-order prefix; for the
four built-ins it coincides with the modal clause of translate.

gen_conditions derives the matching closure-condition schemas by
recursion on the prefix, innermost-first.  Repeating the previous
quantifier lengthens the last schema's guard chain; an alternation
allocates a fresh relation index, retargets the last schema's premise
to it, and appends a hand-off schema of the new quantifier's
orientation.  The schema count is therefore 1 + the number of
alternations, and the final schema's premise is always the main
relation A1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .asimulation import DirectedPair, Verdict, Violation, _flip, _pair_sort_key, _sides
from .kripke import KripkeStructure
from .semantics import Variant
from .syntax import FolFormula, ModalFormula, RelAtom, Exists, FolAnd, FolImplies, Forall
from .translate import _check_entry_var, _FreshVars, _translate_at

_QUANTS = ("A", "E")
_RELS = ("R", "Rb", "Rd")


@dataclass(frozen=True)
class ModalitySignature:
    """Outermost-first (quantifier, relation) prefix; A = forall, E = exists."""

    prefix: tuple

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(tuple(e) for e in self.prefix))
        if not self.prefix:
            raise ValueError("a modality signature needs at least one quantifier")
        for e in self.prefix:
            if len(e) != 2 or e[0] not in _QUANTS or e[1] not in _RELS:
                raise ValueError(
                    f"prefix entries are (\"A\"|\"E\", \"R\"|\"Rb\"|\"Rd\"), got {e!r}"
                )

    def __str__(self) -> str:
        return print_signature(self)


BOX_1 = ModalitySignature((("A", "Rb"),))
BOX_2 = ModalitySignature((("A", "R"), ("A", "Rb")))
DIA_1 = ModalitySignature((("E", "Rd"),))
DIA_2 = ModalitySignature((("A", "R"), ("E", "Rd")))


def parse_signature(text: str) -> ModalitySignature:
    """Parse the text form "A:R;A:Rb" (outermost-first)."""
    entries = []
    for part in text.split(";"):
        part = part.strip()
        bits = part.split(":")
        if len(bits) != 2 or bits[0] not in _QUANTS or bits[1] not in _RELS:
            raise ValueError(
                f"signature entries look like \"A:R\" or \"E:Rd\", got {part!r}"
            )
        entries.append((bits[0], bits[1]))
    return ModalitySignature(tuple(entries))


def print_signature(sig: ModalitySignature) -> str:
    return ";".join(f"{q}:{r}" for q, r in sig.prefix)


@dataclass(frozen=True)
class ConditionSchema:
    """One closure condition: premise relation, guard chain, conclusion.

    form "forall": an A_premise pair whose target side walks the chain
    must be matched by a source-side walk ending in A_conclusion.
    form "exists": the walked and matching sides swap.
    """

    name: str
    form: str
    premise_index: int
    chain: tuple
    conclusion_index: int

    def __post_init__(self):
        if self.form not in ("forall", "exists"):
            raise ValueError(f"form must be \"forall\" or \"exists\", got {self.form!r}")
        object.__setattr__(self, "chain", tuple(self.chain))
        if not self.chain:
            raise ValueError("the guard chain must be non-empty")

    def __str__(self) -> str:
        chain = ",".join(self.chain)
        return (
            f"{self.name} form={self.form} premise=A{self.premise_index} "
            f"chain={chain} conclusion=A{self.conclusion_index}"
        )


# ---------------------------------------------------------------------------
# Translation scheme
# ---------------------------------------------------------------------------


def gen_st(
    sig: ModalitySignature,
    formula: ModalFormula,
    x: str = "x",
    variant: Variant = Variant(2, 2),
) -> FolFormula:
    """Unfold the signature into its guarded prefix over the translation.

    Each prefix entry quantifies a fresh variable guarded from the
    previous one (the entry variable for the outermost); forall guards
    with an implication, exists with a conjunction.  The argument
    formula is translated at the innermost variable under the given
    variant (which matters only when it contains modalities itself).
    """
    if not isinstance(sig, ModalitySignature):
        raise TypeError(f"expected a ModalitySignature, got {sig!r}")
    _check_entry_var(x)
    fresh = _FreshVars(avoid=(x,))
    names = [fresh.next() for _ in sig.prefix]
    out = _translate_at(formula, names[-1], variant, fresh, {})
    for idx in range(len(sig.prefix) - 1, -1, -1):
        quant, rel = sig.prefix[idx]
        outer = names[idx - 1] if idx > 0 else x
        guard = RelAtom(rel, outer, names[idx])
        if quant == "A":
            out = Forall(names[idx], FolImplies(guard, out))
        else:
            out = Exists(names[idx], FolAnd(guard, out))
    return out


# ---------------------------------------------------------------------------
# Condition generation
# ---------------------------------------------------------------------------


def gen_conditions(sig: ModalitySignature) -> list:
    """Derive the condition schemas for a signature, innermost-first.

    Returns them in creation order; premise indices are a permutation of
    1..k, the last schema's premise is A1, and k - 1 equals the number
    of quantifier alternations in the prefix.
    """
    if not isinstance(sig, ModalitySignature):
        raise TypeError(f"expected a ModalitySignature, got {sig!r}")
    schemas: list = []
    prev_quant = ""
    k = 0
    for quant, rel in reversed(sig.prefix):
        form = "forall" if quant == "A" else "exists"
        if not schemas:
            k = 1
            schemas.append(
                ConditionSchema(
                    name="", form=form, premise_index=1, chain=(rel,), conclusion_index=1
                )
            )
        elif quant == prev_quant:
            last = schemas[-1]
            schemas[-1] = replace(last, chain=(rel,) + last.chain)
        else:
            k += 1
            schemas[-1] = replace(schemas[-1], premise_index=k)
            schemas.append(
                ConditionSchema(
                    name="", form=form, premise_index=1, chain=(rel,), conclusion_index=k
                )
            )
        prev_quant = quant
    return [replace(s, name=f"r{i}") for i, s in enumerate(schemas, start=1)]


# ---------------------------------------------------------------------------
# Checking generated conditions on finite structures
# ---------------------------------------------------------------------------


def _walks(M: KripkeStructure, start, rels: tuple) -> list:
    """All successor walks from start along rels, without the start point."""
    seqs = [(start,)]
    for rel in rels:
        seqs = [s + (n,) for s in seqs for n in M.succ(rel, s[-1])]
    return [s[1:] for s in seqs]


def check_generated(
    M1: KripkeStructure,
    t,
    M2: KripkeStructure,
    u,
    sig: ModalitySignature,
    relations,
) -> Verdict:
    """Check the basic conditions plus every generated schema.

    relations supplies one directed-pair set per relation index, main
    relation first.  A1 carries the shared conditions (elem at the root
    pair, base, step); every relation is type-checked; schema violations
    are reported under the schema's name.
    """
    if t not in M1.worlds:
        raise ValueError(f"{t!r} is not a world of the first structure")
    if u not in M2.worlds:
        raise ValueError(f"{u!r} is not a world of the second structure")
    schemas = gen_conditions(sig)
    k = len(schemas)
    rels = [frozenset(r) for r in relations]
    if len(rels) != k:
        raise ValueError(
            f"signature {print_signature(sig)!r} needs {k} relations, got {len(rels)}"
        )
    for rel in rels:
        for p in rel:
            if not isinstance(p, DirectedPair):
                raise TypeError(f"relation members must be DirectedPair, got {p!r}")

    letters = sorted(M1.letters() | M2.letters())
    violations: list = []

    def well_typed(p: DirectedPair) -> bool:
        Ms, Mt = _sides(p.direction, M1, M2)
        return p.source in Ms.worlds and p.target in Mt.worlds

    typed = []
    for i, rel in enumerate(rels, start=1):
        good = []
        for p in sorted(rel, key=_pair_sort_key):
            if well_typed(p):
                good.append(p)
            else:
                violations.append(Violation("type", (f"A{i}", p)))
        typed.append(good)
    typed_sets = [frozenset(g) for g in typed]

    if DirectedPair("12", t, u) not in typed_sets[0]:
        violations.append(Violation("elem", (t, u)))

    for p in typed[0]:
        Ms, Mt = _sides(p.direction, M1, M2)
        for letter in letters:
            if Ms.prop_true(letter, p.source) and not Mt.prop_true(letter, p.target):
                violations.append(Violation("base", (p, f"p{letter}")))

    for p in typed[0]:
        Ms, Mt = _sides(p.direction, M1, M2)
        d = p.direction
        for dd in Mt.succ("R", p.target):
            if not any(
                DirectedPair(d, c, dd) in typed_sets[0]
                and DirectedPair(_flip(d), dd, c) in typed_sets[0]
                for c in Ms.succ("R", p.source)
            ):
                violations.append(Violation("step", (p, dd)))

    for schema in schemas:
        premise = typed[schema.premise_index - 1]
        target_rel = typed_sets[schema.conclusion_index - 1]
        for p in premise:
            Ms, Mt = _sides(p.direction, M1, M2)
            d = p.direction
            if schema.form == "forall":
                for walk in _walks(Mt, p.target, schema.chain):
                    if not any(
                        DirectedPair(d, w2[-1], walk[-1]) in target_rel
                        for w2 in _walks(Ms, p.source, schema.chain)
                    ):
                        violations.append(Violation(schema.name, (p,) + walk))
            else:
                for walk in _walks(Ms, p.source, schema.chain):
                    if not any(
                        DirectedPair(d, walk[-1], w2[-1]) in target_rel
                        for w2 in _walks(Mt, p.target, schema.chain)
                    ):
                        violations.append(Violation(schema.name, (p,) + walk))

    return Verdict.of(violations)
