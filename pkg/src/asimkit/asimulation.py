"""Asimulation relations: checkers, the greatest fixpoint, and separators.

An asimulation between pointed structures (M1, t) and (M2, u) is a set of
directed world pairs, each tagged "12" (source in M1, target in M2) or
"21" (the reverse), obeying closure conditions that depend on the clause
system.  Every variant requires:

* (type)  pairs relate worlds of the structures in tag order;
* (elem)  the root pair t -> u with tag "12" is present;
* (base)  letters true at the source are true at the target;
* (step)  an R-move on the target side is matched by an R-move on the
          source side landing on a pair related in both directions.

The box clause adds (box-1) or (box-2), matching Rb-moves on the target
side (through an R-step first under clause 2).  Diamond clause 1 adds
(diam-1), matching source-side Rd-moves.  Diamond clause 2 instead uses
an auxiliary directed relation: (diam-2(1)) sends R-moves into it, and
(diam-2(2)) makes its pairs match source-side Rd-moves back into the
main relation.  The auxiliary relation is required exactly when the
diamond clause is 2.

A k-indexed refinement replaces world pairs by pairs of equal-length
world sequences; each condition extends the sequences and only fires
while the length bound leaves room.  Sequence conditions carry a "p-"
prefix in violation reports.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .kripke import KripkeStructure, world_sort_key
from .semantics import Variant, _VectorSemantics
from .syntax import And, Bottom, Box, Diamond, Implies, ModalFormula, Or, Prop

_DIRECTIONS = ("12", "21")


def _flip(direction: str) -> str:
    return "21" if direction == "12" else "12"


@dataclass(frozen=True)
class DirectedPair:
    """One related world pair; direction "12" means source lives in M1."""

    direction: str
    source: object
    target: object

    def __post_init__(self):
        if self.direction not in _DIRECTIONS:
            raise ValueError(f"direction must be \"12\" or \"21\", got {self.direction!r}")

    def flipped(self) -> "DirectedPair":
        return DirectedPair(_flip(self.direction), self.target, self.source)

    def __str__(self) -> str:
        return f"{self.direction}:{self.source}->{self.target}"


@dataclass(frozen=True)
class SeqPair:
    """A pair of equal-length world sequences with a direction tag."""

    direction: str
    sources: tuple
    targets: tuple

    def __post_init__(self):
        if self.direction not in _DIRECTIONS:
            raise ValueError(f"direction must be \"12\" or \"21\", got {self.direction!r}")
        object.__setattr__(self, "sources", tuple(self.sources))
        object.__setattr__(self, "targets", tuple(self.targets))
        if len(self.sources) != len(self.targets):
            raise ValueError("source and target sequences must have equal length")
        if not self.sources:
            raise ValueError("sequences must be non-empty")

    def extended(self, more_sources: tuple, more_targets: tuple) -> "SeqPair":
        return SeqPair(
            self.direction,
            self.sources + tuple(more_sources),
            self.targets + tuple(more_targets),
        )

    def flipped_extended(self, more_sources: tuple, more_targets: tuple) -> "SeqPair":
        return SeqPair(
            _flip(self.direction),
            self.targets + tuple(more_targets),
            self.sources + tuple(more_sources),
        )

    def __str__(self) -> str:
        s = ",".join(str(w) for w in self.sources)
        t = ",".join(str(w) for w in self.targets)
        return f"{self.direction}:({s})->({t})"


@dataclass(frozen=True)
class Asimulation:
    relA: frozenset
    relB: Optional[frozenset] = None

    def __post_init__(self):
        object.__setattr__(self, "relA", frozenset(self.relA))
        if self.relB is not None:
            object.__setattr__(self, "relB", frozenset(self.relB))
        for p in self.relA:
            if not isinstance(p, DirectedPair):
                raise TypeError(f"relA members must be DirectedPair, got {p!r}")
        for p in self.relB or ():
            if not isinstance(p, DirectedPair):
                raise TypeError(f"relB members must be DirectedPair, got {p!r}")


@dataclass(frozen=True)
class SeqAsimulation:
    relA: frozenset
    relB: Optional[frozenset] = None

    def __post_init__(self):
        object.__setattr__(self, "relA", frozenset(self.relA))
        if self.relB is not None:
            object.__setattr__(self, "relB", frozenset(self.relB))
        for p in self.relA:
            if not isinstance(p, SeqPair):
                raise TypeError(f"relA members must be SeqPair, got {p!r}")
        for p in self.relB or ():
            if not isinstance(p, SeqPair):
                raise TypeError(f"relB members must be SeqPair, got {p!r}")


@dataclass(frozen=True)
class Violation:
    """A failed condition together with the witnesses that break it."""

    condition: str
    witness: tuple

    def __str__(self) -> str:
        parts = " ".join(str(w) for w in self.witness)
        return f"({self.condition}) {parts}"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple = field(default_factory=tuple)

    @classmethod
    def of(cls, violations) -> "Verdict":
        vs = tuple(violations)
        return cls(ok=not vs, violations=vs)


def _pair_sort_key(p: DirectedPair) -> tuple:
    return (p.direction, world_sort_key(p.source), world_sort_key(p.target))


def _seq_sort_key(p: SeqPair) -> tuple:
    return (
        p.direction,
        len(p.sources),
        tuple(world_sort_key(w) for w in p.sources),
        tuple(world_sort_key(w) for w in p.targets),
    )


def _sides(direction: str, M1: KripkeStructure, M2: KripkeStructure):
    return (M1, M2) if direction == "12" else (M2, M1)


def _check_rel_shape(variant: Optional[Variant], rel) -> None:
    if variant is not None and variant.diamond_clause == 2:
        if rel.relB is None:
            raise ValueError(
                f"variant {variant.code} needs the auxiliary relation relB"
            )
    else:
        if rel.relB is not None:
            name = variant.code if variant is not None else "basic"
            raise ValueError(
                f"variant {name} takes no auxiliary relation, but relB was given"
            )


# ---------------------------------------------------------------------------
# Plain checker
# ---------------------------------------------------------------------------


def check_asimulation(
    M1: KripkeStructure,
    t,
    M2: KripkeStructure,
    u,
    variant: Optional[Variant],
    rel: Asimulation,
) -> Verdict:
    """Check the closure conditions of rel between (M1, t) and (M2, u).

    variant=None checks only the conditions shared by all four systems
    (type, elem, base, step).  All violations are collected; the verdict
    is ok exactly when there are none.
    """
    if t not in M1.worlds:
        raise ValueError(f"{t!r} is not a world of the first structure")
    if u not in M2.worlds:
        raise ValueError(f"{u!r} is not a world of the second structure")
    if not isinstance(rel, Asimulation):
        raise TypeError(f"expected an Asimulation, got {rel!r}")
    _check_rel_shape(variant, rel)

    letters = sorted(M1.letters() | M2.letters())
    violations: list = []

    def well_typed(p: DirectedPair) -> bool:
        Ms, Mt = _sides(p.direction, M1, M2)
        return p.source in Ms.worlds and p.target in Mt.worlds

    pairsA = sorted(rel.relA, key=_pair_sort_key)
    typedA = []
    for p in pairsA:
        if well_typed(p):
            typedA.append(p)
        else:
            violations.append(Violation("type", (p,)))
    relA = frozenset(typedA)

    if DirectedPair("12", t, u) not in relA:
        violations.append(Violation("elem", (t, u)))

    for p in typedA:
        Ms, Mt = _sides(p.direction, M1, M2)
        for letter in letters:
            if Ms.prop_true(letter, p.source) and not Mt.prop_true(letter, p.target):
                violations.append(Violation("base", (p, f"p{letter}")))

    for p in typedA:
        Ms, Mt = _sides(p.direction, M1, M2)
        d = p.direction
        for dd in Mt.succ("R", p.target):
            if not any(
                DirectedPair(d, c, dd) in relA
                and DirectedPair(_flip(d), dd, c) in relA
                for c in Ms.succ("R", p.source)
            ):
                violations.append(Violation("step", (p, dd)))

    if variant is not None:
        if variant.box_clause == 1:
            for p in typedA:
                Ms, Mt = _sides(p.direction, M1, M2)
                for dd in Mt.succ("Rb", p.target):
                    if not any(
                        DirectedPair(p.direction, c, dd) in relA
                        for c in Ms.succ("Rb", p.source)
                    ):
                        violations.append(Violation("box-1", (p, dd)))
        else:
            for p in typedA:
                Ms, Mt = _sides(p.direction, M1, M2)
                for dd in Mt.succ("R", p.target):
                    for f in Mt.succ("Rb", dd):
                        if not any(
                            DirectedPair(p.direction, e, f) in relA
                            for c in Ms.succ("R", p.source)
                            for e in Ms.succ("Rb", c)
                        ):
                            violations.append(Violation("box-2", (p, dd, f)))

        if variant.diamond_clause == 1:
            for p in typedA:
                Ms, Mt = _sides(p.direction, M1, M2)
                for c in Ms.succ("Rd", p.source):
                    if not any(
                        DirectedPair(p.direction, c, dd) in relA
                        for dd in Mt.succ("Rd", p.target)
                    ):
                        violations.append(Violation("diam-1", (p, c)))
        else:
            pairsB = sorted(rel.relB, key=_pair_sort_key)
            typedB = []
            for p in pairsB:
                if well_typed(p):
                    typedB.append(p)
                else:
                    violations.append(Violation("B-type", (p,)))
            relB = frozenset(typedB)
            for p in typedA:
                Ms, Mt = _sides(p.direction, M1, M2)
                for dd in Mt.succ("R", p.target):
                    if not any(
                        DirectedPair(p.direction, c, dd) in relB
                        for c in Ms.succ("R", p.source)
                    ):
                        violations.append(Violation("diam-2(1)", (p, dd)))
            for p in typedB:
                Ms, Mt = _sides(p.direction, M1, M2)
                for c in Ms.succ("Rd", p.source):
                    if not any(
                        DirectedPair(p.direction, c, dd) in relA
                        for dd in Mt.succ("Rd", p.target)
                    ):
                        violations.append(Violation("diam-2(2)", (p, c)))

    return Verdict.of(violations)


# ---------------------------------------------------------------------------
# Sequence (k-indexed) checker
# ---------------------------------------------------------------------------


def check_k_asimulation(
    M1: KripkeStructure,
    t,
    M2: KripkeStructure,
    u,
    k: int,
    variant: Optional[Variant],
    rel: SeqAsimulation,
) -> Verdict:
    """Check the k-indexed closure conditions of a sequence relation.

    Sequences of length m+1 only owe a condition while the guard on m
    leaves room below k; the box conditions and the hand-off into the
    auxiliary relation stop one step earlier than the others because they
    consume quantifier depth twice.
    """
    if t not in M1.worlds:
        raise ValueError(f"{t!r} is not a world of the first structure")
    if u not in M2.worlds:
        raise ValueError(f"{u!r} is not a world of the second structure")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    if not isinstance(rel, SeqAsimulation):
        raise TypeError(f"expected a SeqAsimulation, got {rel!r}")
    _check_rel_shape(variant, rel)

    letters = sorted(M1.letters() | M2.letters())
    violations: list = []

    def well_typed(p: SeqPair) -> bool:
        Ms, Mt = _sides(p.direction, M1, M2)
        return all(w in Ms.worlds for w in p.sources) and all(
            w in Mt.worlds for w in p.targets
        )

    pairsA = sorted(rel.relA, key=_seq_sort_key)
    typedA = []
    for p in pairsA:
        if well_typed(p):
            typedA.append(p)
        else:
            violations.append(Violation("p-type", (p,)))
    relA = frozenset(typedA)

    if SeqPair("12", (t,), (u,)) not in relA:
        violations.append(Violation("p-elem", (t, u)))

    for p in typedA:
        Ms, Mt = _sides(p.direction, M1, M2)
        for letter in letters:
            if Ms.prop_true(letter, p.sources[-1]) and not Mt.prop_true(
                letter, p.targets[-1]
            ):
                violations.append(Violation("p-base", (p, f"p{letter}")))

    for p in typedA:
        m = len(p.sources) - 1
        if m >= k:
            continue
        Ms, Mt = _sides(p.direction, M1, M2)
        a, b = p.sources[-1], p.targets[-1]
        for dd in Mt.succ("R", b):
            if not any(
                p.extended((c,), (dd,)) in relA
                and p.flipped_extended((c,), (dd,)) in relA
                for c in Ms.succ("R", a)
            ):
                violations.append(Violation("p-step", (p, dd)))

    if variant is not None:
        if variant.box_clause == 1:
            for p in typedA:
                m = len(p.sources) - 1
                if m + 1 >= k:
                    continue
                Ms, Mt = _sides(p.direction, M1, M2)
                a, b = p.sources[-1], p.targets[-1]
                for dd in Mt.succ("Rb", b):
                    if not any(
                        p.extended((c,), (dd,)) in relA for c in Ms.succ("Rb", a)
                    ):
                        violations.append(Violation("p-box-1", (p, dd)))
        else:
            for p in typedA:
                m = len(p.sources) - 1
                if m + 1 >= k:
                    continue
                Ms, Mt = _sides(p.direction, M1, M2)
                a, b = p.sources[-1], p.targets[-1]
                for dd in Mt.succ("R", b):
                    for f in Mt.succ("Rb", dd):
                        if not any(
                            p.extended((c, e), (dd, f)) in relA
                            for c in Ms.succ("R", a)
                            for e in Ms.succ("Rb", c)
                        ):
                            violations.append(Violation("p-box-2", (p, dd, f)))

        if variant.diamond_clause == 1:
            for p in typedA:
                m = len(p.sources) - 1
                if m >= k:
                    continue
                Ms, Mt = _sides(p.direction, M1, M2)
                a, b = p.sources[-1], p.targets[-1]
                for c in Ms.succ("Rd", a):
                    if not any(
                        p.extended((c,), (dd,)) in relA for dd in Mt.succ("Rd", b)
                    ):
                        violations.append(Violation("p-diam-1", (p, c)))
        else:
            pairsB = sorted(rel.relB, key=_seq_sort_key)
            typedB = []
            for p in pairsB:
                if well_typed(p):
                    typedB.append(p)
                else:
                    violations.append(Violation("p-B-type", (p,)))
            relB = frozenset(typedB)
            for p in typedA:
                m = len(p.sources) - 1
                if m + 1 >= k:
                    continue
                Ms, Mt = _sides(p.direction, M1, M2)
                a, b = p.sources[-1], p.targets[-1]
                for dd in Mt.succ("R", b):
                    if not any(
                        p.extended((c,), (dd,)) in relB for c in Ms.succ("R", a)
                    ):
                        violations.append(Violation("p-diam-2(1)", (p, dd)))
            for p in typedB:
                m = len(p.sources) - 1
                if m >= k:
                    continue
                Ms, Mt = _sides(p.direction, M1, M2)
                a, b = p.sources[-1], p.targets[-1]
                for c in Ms.succ("Rd", a):
                    if not any(
                        p.extended((c,), (dd,)) in relA for dd in Mt.succ("Rd", b)
                    ):
                        violations.append(Violation("p-diam-2(2)", (p, c)))

    return Verdict.of(violations)


# ---------------------------------------------------------------------------
# Greatest fixpoint
# ---------------------------------------------------------------------------


def _maximal_relations(
    M1: KripkeStructure, M2: KripkeStructure, variant: Optional[Variant]
) -> tuple:
    """Largest (relA, relB) closed under every condition except (elem).

    Starts from all base-respecting cross pairs (and all cross pairs for
    the auxiliary relation) and deletes pairs whose obligations fail,
    re-examining only pairs that relied on a deleted witness.  variant
    None drops the modal conditions entirely (the basic family).
    """
    if variant is not None and not isinstance(variant, Variant):
        raise TypeError(f"expected a Variant or None, got {variant!r}")
    letters = sorted(M1.letters() | M2.letters())
    needs_b = variant is not None and variant.diamond_clause == 2

    sides = {"12": (M1, M2), "21": (M2, M1)}
    aliveA: set = set()
    for d, (Ms, Mt) in sides.items():
        for a in Ms.sorted_worlds():
            for b in Mt.sorted_worlds():
                if all(
                    not Ms.prop_true(p, a) or Mt.prop_true(p, b) for p in letters
                ):
                    aliveA.add((d, a, b))
    aliveB: set = set()
    if needs_b:
        for d, (Ms, Mt) in sides.items():
            for a in Ms.sorted_worlds():
                for b in Mt.sorted_worlds():
                    aliveB.add((d, a, b))

    def check(kind: str, d: str, a, b) -> tuple:
        """(passes, witness keys used); short-circuits on first failure."""
        Ms, Mt = sides[d]
        used: list = []
        if kind == "B":
            for c in Ms.succ("Rd", a):
                found = None
                for dd in Mt.succ("Rd", b):
                    if (d, c, dd) in aliveA:
                        found = ("A", d, c, dd)
                        break
                if found is None:
                    return False, ()
                used.append(found)
            return True, tuple(used)
        fd = _flip(d)
        for dd in Mt.succ("R", b):
            found = None
            for c in Ms.succ("R", a):
                if (d, c, dd) in aliveA and (fd, dd, c) in aliveA:
                    found = (("A", d, c, dd), ("A", fd, dd, c))
                    break
            if found is None:
                return False, ()
            used.extend(found)
        if variant is None:
            return True, tuple(used)
        if variant.box_clause == 1:
            for dd in Mt.succ("Rb", b):
                found = None
                for c in Ms.succ("Rb", a):
                    if (d, c, dd) in aliveA:
                        found = ("A", d, c, dd)
                        break
                if found is None:
                    return False, ()
                used.append(found)
        else:
            for dd in Mt.succ("R", b):
                for f in Mt.succ("Rb", dd):
                    found = None
                    for c in Ms.succ("R", a):
                        for e in Ms.succ("Rb", c):
                            if (d, e, f) in aliveA:
                                found = ("A", d, e, f)
                                break
                        if found:
                            break
                    if found is None:
                        return False, ()
                    used.append(found)
        if variant.diamond_clause == 1:
            for c in Ms.succ("Rd", a):
                found = None
                for dd in Mt.succ("Rd", b):
                    if (d, c, dd) in aliveA:
                        found = ("A", d, c, dd)
                        break
                if found is None:
                    return False, ()
                used.append(found)
        else:
            for dd in Mt.succ("R", b):
                found = None
                for c in Ms.succ("R", a):
                    if (d, c, dd) in aliveB:
                        found = ("B", d, c, dd)
                        break
                if found is None:
                    return False, ()
                used.append(found)
        return True, tuple(used)

    def key_order(key: tuple) -> tuple:
        d, a, b = key
        return (d, world_sort_key(a), world_sort_key(b))

    dependents: dict = {}
    queue = deque()
    queued: set = set()
    queue.extend(("A",) + key for key in sorted(aliveA, key=key_order))
    queue.extend(("B",) + key for key in sorted(aliveB, key=key_order))
    queued.update(queue)

    while queue:
        item = queue.popleft()
        queued.discard(item)
        kind, d, a, b = item
        alive = aliveA if kind == "A" else aliveB
        if (d, a, b) not in alive:
            continue
        ok, used = check(kind, d, a, b)
        if ok:
            for w in used:
                dependents.setdefault(w, set()).add(item)
        else:
            alive.discard((d, a, b))
            for dep in dependents.pop((kind, d, a, b), ()):
                dep_kind = dep[0]
                dep_alive = aliveA if dep_kind == "A" else aliveB
                if dep[1:] in dep_alive and dep not in queued:
                    queue.append(dep)
                    queued.add(dep)

    relA = frozenset(DirectedPair(d, a, b) for d, a, b in aliveA)
    relB = frozenset(DirectedPair(d, a, b) for d, a, b in aliveB) if needs_b else None
    return relA, relB


def maximal_asimulation(
    M1: KripkeStructure, t, M2: KripkeStructure, u, variant: Optional[Variant]
) -> tuple:
    """The largest relation closed under all conditions except (elem).

    Returns (Asimulation, contains_root) where contains_root says whether
    the root pair t -> u survived; when it did, the result restricted to
    the root is an actual asimulation between the pointed structures.
    """
    if t not in M1.worlds:
        raise ValueError(f"{t!r} is not a world of the first structure")
    if u not in M2.worlds:
        raise ValueError(f"{u!r} is not a world of the second structure")
    relA, relB = _maximal_relations(M1, M2, variant)
    contains_root = DirectedPair("12", t, u) in relA
    return Asimulation(relA, relB), contains_root


# ---------------------------------------------------------------------------
# Distinguishing formulas
# ---------------------------------------------------------------------------


def distinguishing_formula(
    M1: KripkeStructure,
    t,
    M2: KripkeStructure,
    u,
    variant: Variant,
    max_depth: int,
) -> Optional[ModalFormula]:
    """A formula true at (M1, t) and false at (M2, u), or None.

    Searches by connective depth, keeping one representative per truth
    vector over the disjoint union of the structures; if a depth level
    produces no new vector the space is saturated and the search stops
    early.  None therefore means no separating formula exists within
    max_depth (and, on saturation, at any depth).
    """
    if t not in M1.worlds:
        raise ValueError(f"{t!r} is not a world of the first structure")
    if u not in M2.worlds:
        raise ValueError(f"{u!r} is not a world of the second structure")
    if not isinstance(max_depth, int) or isinstance(max_depth, bool) or max_depth < 0:
        raise ValueError(f"max_depth must be a non-negative integer, got {max_depth!r}")

    vs = _VectorSemantics((M1, M2))
    t_bit = 1 << vs.bit_of[(0, t)]
    u_bit = 1 << vs.bit_of[(1, u)]

    seen: set = set()
    items: list = []  # (formula, vector, level) in insertion order

    def admit(f: ModalFormula, vec: int, level: int) -> Optional[ModalFormula]:
        if vec in seen:
            return None
        seen.add(vec)
        items.append((f, vec, level))
        if vec & t_bit and not vec & u_bit:
            return f
        return None

    hit = admit(Bottom(), 0, 0)
    if hit is not None:
        return hit
    for letter in sorted(M1.letters() | M2.letters()):
        f = Prop(letter)
        hit = admit(f, vs.prop(letter), 0)
        if hit is not None:
            return hit

    for level in range(1, max_depth + 1):
        frontier = [(f, vec) for f, vec, lv in items if lv == level - 1]
        if not frontier:
            return None
        snapshot = list(items)
        for f, vec in frontier:
            hit = admit(Box(f), vs.v_box(vec, variant), level)
            if hit is not None:
                return hit
        for f, vec in frontier:
            hit = admit(Diamond(f), vs.v_dia(vec, variant), level)
            if hit is not None:
                return hit
        for ctor, op in (
            (And, vs.v_and),
            (Or, vs.v_or),
            (Implies, vs.v_implies),
        ):
            for f, fv, flv in snapshot:
                for g, gv, glv in snapshot:
                    if max(flv, glv) != level - 1:
                        continue
                    hit = admit(ctor(f, g), op(fv, gv), level)
                    if hit is not None:
                        return hit
    return None


# ---------------------------------------------------------------------------
# JSON interchange for relations
# ---------------------------------------------------------------------------


def _pair_to_doc(p: DirectedPair) -> dict:
    return {"dir": p.direction, "from": p.source, "to": p.target}


def _pair_from_doc(doc: dict) -> DirectedPair:
    if not isinstance(doc, dict):
        raise ValueError(f"relation entries must be objects, got {doc!r}")
    unknown = set(doc) - {"dir", "from", "to"}
    if unknown:
        raise ValueError(f"unknown keys in relation entry: {sorted(unknown)}")
    for key in ("dir", "from", "to"):
        if key not in doc:
            raise ValueError(f"relation entry is missing \"{key}\"")
    return DirectedPair(doc["dir"], doc["from"], doc["to"])


def _seq_pair_to_doc(p: SeqPair) -> dict:
    return {"dir": p.direction, "from": list(p.sources), "to": list(p.targets)}


def _seq_pair_from_doc(doc: dict) -> SeqPair:
    if not isinstance(doc, dict):
        raise ValueError(f"relation entries must be objects, got {doc!r}")
    unknown = set(doc) - {"dir", "from", "to"}
    if unknown:
        raise ValueError(f"unknown keys in relation entry: {sorted(unknown)}")
    for key in ("dir", "from", "to"):
        if key not in doc:
            raise ValueError(f"relation entry is missing \"{key}\"")
    if not isinstance(doc["from"], list) or not isinstance(doc["to"], list):
        raise ValueError("sequence entries need \"from\" and \"to\" arrays")
    return SeqPair(doc["dir"], tuple(doc["from"]), tuple(doc["to"]))


def asim_to_dict(rel: Asimulation) -> dict:
    out = {"relA": [_pair_to_doc(p) for p in sorted(rel.relA, key=_pair_sort_key)]}
    if rel.relB is not None:
        out["relB"] = [_pair_to_doc(p) for p in sorted(rel.relB, key=_pair_sort_key)]
    return out


def asim_from_dict(data: dict) -> Asimulation:
    if not isinstance(data, dict):
        raise ValueError("relation document must be a JSON object")
    unknown = set(data) - {"relA", "relB"}
    if unknown:
        raise ValueError(f"unknown keys in relation document: {sorted(unknown)}")
    if "relA" not in data or not isinstance(data["relA"], list):
        raise ValueError("relation document needs a \"relA\" array")
    relA = frozenset(_pair_from_doc(d) for d in data["relA"])
    relB = None
    if data.get("relB") is not None:
        if not isinstance(data["relB"], list):
            raise ValueError("\"relB\" must be an array or null")
        relB = frozenset(_pair_from_doc(d) for d in data["relB"])
    return Asimulation(relA, relB)


def seq_asim_to_dict(rel: SeqAsimulation) -> dict:
    out = {"relA": [_seq_pair_to_doc(p) for p in sorted(rel.relA, key=_seq_sort_key)]}
    if rel.relB is not None:
        out["relB"] = [
            _seq_pair_to_doc(p) for p in sorted(rel.relB, key=_seq_sort_key)
        ]
    return out


def seq_asim_from_dict(data: dict) -> SeqAsimulation:
    if not isinstance(data, dict):
        raise ValueError("relation document must be a JSON object")
    unknown = set(data) - {"relA", "relB"}
    if unknown:
        raise ValueError(f"unknown keys in relation document: {sorted(unknown)}")
    if "relA" not in data or not isinstance(data["relA"], list):
        raise ValueError("relation document needs a \"relA\" array")
    relA = frozenset(_seq_pair_from_doc(d) for d in data["relA"])
    relB = None
    if data.get("relB") is not None:
        if not isinstance(data["relB"], list):
            raise ValueError("\"relB\" must be an array or null")
        relB = frozenset(_seq_pair_from_doc(d) for d in data["relB"])
    return SeqAsimulation(relA, relB)


def load_asimulation(path: str) -> Asimulation:
    with open(path, "r", encoding="utf-8") as fh:
        return asim_from_dict(json.load(fh))


def dump_asimulation(rel: Asimulation, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(asim_to_dict(rel), fh, indent=2)
        fh.write("\n")


def load_seq_asimulation(path: str) -> SeqAsimulation:
    with open(path, "r", encoding="utf-8") as fh:
        return seq_asim_from_dict(json.load(fh))


def dump_seq_asimulation(rel: SeqAsimulation, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(seq_asim_to_dict(rel), fh, indent=2)
        fh.write("\n")
