"""Bounded formula pools, type sets, and the canonical constructions.

A pool collects one representative modal formula per truth class over a
fixed corpus of structures, among formulas whose translation has
quantifier depth at most a given bound.  Truth classes are int bitmasks
(one bit per corpus point), so deduplication and the inclusion tests
below are set operations on small integers.

Type sets of a point: tp = pool members true there, tpbar = the rest,
imp = the intersection of tpbar over the point's Rd-successors (the
whole pool when it has none).  The two canonical constructions build
relations out of tp/imp inclusions; their degree bookkeeping mirrors the
cost table of translation_degree.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Mapping, Optional

from .asimulation import Asimulation, DirectedPair, SeqAsimulation, SeqPair, _flip
from .kripke import KripkeStructure
from .semantics import Variant, _VectorSemantics, eval_modal
from .syntax import And, Bottom, Box, Diamond, Implies, ModalFormula, Or, Prop
from .translate import translation_degree


@dataclass(frozen=True)
class FormulaPool:
    """Representatives of truth classes over a corpus, stratified by degree.

    members[i] was admitted at stratum strata[i], which equals its
    translation degree; strata is non-decreasing, so the pool bounded by
    l is a prefix.  vectors[i] is the truth bitmask of members[i] over
    the corpus points in (model index, sorted world) order.
    """

    signature: frozenset
    variant: Variant
    degree_bound: int
    members: tuple
    corpus: tuple
    vectors: tuple
    strata: tuple

    def __len__(self) -> int:
        return len(self.members)

    def restrict(self, bound: int) -> "FormulaPool":
        """The pool of the same corpus at a smaller degree bound."""
        if not 0 <= bound <= self.degree_bound:
            raise ValueError(
                f"restriction bound must lie in [0, {self.degree_bound}], got {bound}"
            )
        if bound == self.degree_bound:
            return self
        cut = bisect_right(self.strata, bound)
        return FormulaPool(
            signature=self.signature,
            variant=self.variant,
            degree_bound=bound,
            members=self.members[:cut],
            corpus=self.corpus,
            vectors=self.vectors[:cut],
            strata=self.strata[:cut],
        )

    @property
    def saturated(self) -> bool:
        """True when the top stratum admitted nothing new.

        Once a stratum is empty every later one is too, so a saturated
        pool already represents the truth classes of formulas of every
        degree over its corpus.
        """
        if self.degree_bound == 0:
            return False
        return not self.strata or self.strata[-1] < self.degree_bound

    def corpus_index(self, M: KripkeStructure) -> Optional[int]:
        for i, c in enumerate(self.corpus):
            if M is c:
                return i
        for i, c in enumerate(self.corpus):
            if M == c:
                return i
        return None

    def point_bit(self, model_index: int, w) -> int:
        off = 0
        for j in range(model_index):
            off += len(self.corpus[j].worlds)
        return off + self.corpus[model_index].sorted_worlds().index(w)


@dataclass(frozen=True)
class TypeSet:
    """A subset of a pool, as member indices, with the kind that built it."""

    kind: str
    pool: FormulaPool
    indices: frozenset

    @property
    def formulas(self) -> tuple:
        return tuple(self.pool.members[i] for i in sorted(self.indices))

    def is_subset_of(self, other: "TypeSet") -> bool:
        if self.pool is not other.pool and self.pool != other.pool:
            raise ValueError("type sets over different pools are not comparable")
        return self.indices <= other.indices


# ---------------------------------------------------------------------------
# Pool enumeration
# ---------------------------------------------------------------------------


def enumerate_pool(
    sig,
    variant: Variant,
    degree_bound: int,
    dedup_corpus,
    size_cap: Optional[int] = None,
) -> FormulaPool:
    """Saturate the truth classes reachable at each degree stratum.

    Stratum 0 closes falsum and the letters under conjunction and
    disjunction.  Stratum d seeds implications over lower strata and
    modalities over the stratum that the variant's cost table points at,
    then closes again; only the first formula found for each truth
    vector is kept.  With a size_cap, candidates whose syntactic size
    exceeds it are skipped before deduplication.
    """
    signature = frozenset(sig)
    for p in signature:
        if isinstance(p, bool) or not isinstance(p, int) or p < 1:
            raise ValueError(f"signature members must be positive ints, got {p!r}")
    if not isinstance(variant, Variant):
        raise TypeError(f"expected a Variant, got {variant!r}")
    if not isinstance(degree_bound, int) or isinstance(degree_bound, bool) or degree_bound < 0:
        raise ValueError(f"degree_bound must be a non-negative integer, got {degree_bound!r}")
    corpus = tuple(dedup_corpus)
    if not corpus:
        raise ValueError("the dedup corpus must contain at least one structure")
    for M in corpus:
        if not isinstance(M, KripkeStructure):
            raise TypeError(f"corpus entries must be KripkeStructure, got {M!r}")
    if size_cap is not None and (not isinstance(size_cap, int) or size_cap < 1):
        raise ValueError(f"size_cap must be a positive integer or None, got {size_cap!r}")

    vs = _VectorSemantics(corpus)
    cost_box = 1 if variant.box_clause == 1 else 2
    cost_dia = 1 if variant.diamond_clause == 1 else 2

    members: list = []
    vectors: list = []
    strata: list = []
    seen: set = set()

    def admit(f: ModalFormula, vec: int, stratum: int) -> bool:
        if size_cap is not None and f.size > size_cap:
            return False
        if vec in seen:
            return False
        seen.add(vec)
        members.append(f)
        vectors.append(vec)
        strata.append(stratum)
        return True

    def close_lattice(stratum: int, first_new: int) -> None:
        # combine every member admitted this stratum with everything
        # admitted so far; new results join the frontier
        frontier = list(range(first_new, len(members)))
        done = 0
        while done < len(frontier):
            i = frontier[done]
            done += 1
            fi, vi = members[i], vectors[i]
            for j in range(len(members)):
                fj, vj = members[j], vectors[j]
                before = len(members)
                admit(And(fi, fj), vi & vj, stratum)
                admit(Or(fi, fj), vi | vj, stratum)
                frontier.extend(range(before, len(members)))

    admit(Bottom(), 0, 0)
    for letter in sorted(signature):
        admit(Prop(letter), vs.prop(letter), 0)
    close_lattice(0, 0)

    for d in range(1, degree_bound + 1):
        prev = len(members)  # everything so far has stratum <= d-1
        for i in range(prev):
            for j in range(prev):
                if max(strata[i], strata[j]) != d - 1:
                    continue
                admit(
                    Implies(members[i], members[j]),
                    vs.v_implies(vectors[i], vectors[j]),
                    d,
                )
        if d >= cost_box:
            for i in range(prev):
                if strata[i] == d - cost_box:
                    admit(Box(members[i]), vs.v_box(vectors[i], variant), d)
        if d >= cost_dia:
            for i in range(prev):
                if strata[i] == d - cost_dia:
                    admit(Diamond(members[i]), vs.v_dia(vectors[i], variant), d)
        close_lattice(d, prev)

    return FormulaPool(
        signature=signature,
        variant=variant,
        degree_bound=degree_bound,
        members=tuple(members),
        corpus=corpus,
        vectors=tuple(vectors),
        strata=tuple(strata),
    )


# ---------------------------------------------------------------------------
# Type sets
# ---------------------------------------------------------------------------

_KINDS = ("tp", "tpbar", "imp")


def type_set(M: KripkeStructure, a, pool: FormulaPool, kind: str) -> TypeSet:
    """The tp/tpbar/imp set of a point, as indices into pool.members."""
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    if a not in M.worlds:
        raise ValueError(f"{a!r} is not a world of the structure")
    if kind == "imp":
        succ = M.succ("Rd", a)
        idx: frozenset = frozenset(range(len(pool.members)))
        for b in succ:
            idx &= type_set(M, b, pool, "tpbar").indices
        return TypeSet("imp", pool, idx)
    tp = _tp_indices(M, a, pool)
    if kind == "tp":
        return TypeSet("tp", pool, tp)
    return TypeSet("tpbar", pool, frozenset(range(len(pool.members))) - tp)


def _tp_indices(M: KripkeStructure, a, pool: FormulaPool) -> frozenset:
    mi = pool.corpus_index(M)
    if mi is not None:
        bit = pool.point_bit(mi, a)
        return frozenset(i for i, vec in enumerate(pool.vectors) if vec >> bit & 1)
    return frozenset(
        i for i, f in enumerate(pool.members) if eval_modal(M, a, f, pool.variant)
    )


def complete_conjunction(M: KripkeStructure, a, pool: FormulaPool) -> ModalFormula:
    """The conjunction, in pool order, of every pool member true at a.

    From bound 1 on the tp set is never empty (the always-true class has
    a representative); at bound 0 a point with no true atoms has nothing
    to conjoin, which is an error rather than a fabricated formula.
    """
    tp = sorted(type_set(M, a, pool, "tp").indices)
    if not tp:
        raise ValueError(f"the point {a!r} satisfies no pool member; nothing to conjoin")
    out = pool.members[tp[0]]
    for i in tp[1:]:
        out = And(out, pool.members[i])
    return out


# ---------------------------------------------------------------------------
# Canonical k-indexed construction
# ---------------------------------------------------------------------------


def make_pools(
    M1: KripkeStructure,
    M2: KripkeStructure,
    k: int,
    variant: Variant,
    size_cap: Optional[int] = None,
) -> dict:
    """Pools over the two structures for every bound the construction uses."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    sig = M1.letters() | M2.letters()
    master = enumerate_pool(sig, variant, k + 2, (M1, M2), size_cap)
    return {l: master.restrict(l) for l in range(1, k + 3)}


def canonical_k_asimulation(
    M1: KripkeStructure,
    t,
    M2: KripkeStructure,
    u,
    k: int,
    variant: Variant,
    pools: Mapping,
) -> SeqAsimulation:
    """The type-inclusion sequence relation, materialized by reachability.

    Singleton pairs enter the main relation when the source point's tp at
    bound k+2 is included in the target's (and the auxiliary relation,
    under diamond clause 2, when the imp sets at bound k+1 are included
    the other way around).  Longer sequences are added exactly where the
    closure conditions can reach them, with the bound dropping as the
    sequences grow, per the cost of the condition that reaches them.
    """
    if t not in M1.worlds:
        raise ValueError(f"{t!r} is not a world of the first structure")
    if u not in M2.worlds:
        raise ValueError(f"{u!r} is not a world of the second structure")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    if not isinstance(variant, Variant):
        raise TypeError(f"expected a Variant, got {variant!r}")

    by_bound: dict = {}
    for l in range(1, k + 3):
        try:
            pool = pools[l]
        except (KeyError, IndexError, TypeError):
            raise ValueError(f"no pool supplied for degree bound {l}") from None
        if not isinstance(pool, FormulaPool):
            raise TypeError(f"pools[{l}] must be a FormulaPool, got {pool!r}")
        if pool.variant != variant:
            raise ValueError(
                f"pools[{l}] was built for variant {pool.variant.code}, expected "
                f"{variant.code}"
            )
        if pool.degree_bound < l:
            raise ValueError(
                f"pools[{l}] has degree bound {pool.degree_bound}, needs at least {l}"
            )
        by_bound[l] = pool.restrict(l)

    models = (M1, M2)
    needs_b = variant.diamond_clause == 2

    tp_cache: dict = {}
    imp_cache: dict = {}

    def tp(side: int, w, bound: int) -> frozenset:
        key = (side, w, bound)
        hit = tp_cache.get(key)
        if hit is None:
            hit = type_set(models[side], w, by_bound[bound], "tp").indices
            tp_cache[key] = hit
        return hit

    def imp(side: int, w, bound: int) -> frozenset:
        key = (side, w, bound)
        hit = imp_cache.get(key)
        if hit is None:
            hit = type_set(models[side], w, by_bound[bound], "imp").indices
            imp_cache[key] = hit
        return hit

    def src_side(d: str) -> int:
        return 0 if d == "12" else 1

    def a_included(d: str, a, b, bound: int) -> bool:
        s = src_side(d)
        return tp(s, a, bound) <= tp(1 - s, b, bound)

    def b_included(d: str, a, b, bound: int) -> bool:
        s = src_side(d)
        return imp(1 - s, b, bound) <= imp(s, a, bound)

    relA: set = set()
    relB: set = set()
    queue: list = []

    def add(kind: str, pair: SeqPair) -> None:
        rel = relA if kind == "A" else relB
        if pair not in rel:
            rel.add(pair)
            queue.append((kind, pair))

    for d in ("12", "21"):
        s = src_side(d)
        for a in models[s].sorted_worlds():
            for b in models[1 - s].sorted_worlds():
                if a_included(d, a, b, k + 2):
                    add("A", SeqPair(d, (a,), (b,)))
                if needs_b and b_included(d, a, b, k + 1):
                    add("B", SeqPair(d, (a,), (b,)))

    head = 0
    while head < len(queue):
        kind, p = queue[head]
        head += 1
        d = p.direction
        s = src_side(d)
        Ms, Mt = models[s], models[1 - s]
        a, b = p.sources[-1], p.targets[-1]
        m = len(p.sources) - 1

        if kind == "B":
            if m < k:
                bound = k - m + 1
                for c in Ms.succ("Rd", a):
                    for dd in Mt.succ("Rd", b):
                        if a_included(d, c, dd, bound):
                            add("A", p.extended((c,), (dd,)))
            continue

        if m < k:
            bound = k - m + 1
            for c in Ms.succ("R", a):
                for dd in Mt.succ("R", b):
                    if a_included(d, c, dd, bound):
                        add("A", p.extended((c,), (dd,)))
                    if a_included(_flip(d), dd, c, bound):
                        add("A", p.flipped_extended((c,), (dd,)))

        if variant.box_clause == 1:
            if m + 1 < k:
                bound = k - m + 1
                for c in Ms.succ("Rb", a):
                    for dd in Mt.succ("Rb", b):
                        if a_included(d, c, dd, bound):
                            add("A", p.extended((c,), (dd,)))
        else:
            if m + 1 < k:
                bound = k - m
                for c in Ms.succ("R", a):
                    for e in Ms.succ("Rb", c):
                        for dd in Mt.succ("R", b):
                            for f in Mt.succ("Rb", dd):
                                if a_included(d, e, f, bound):
                                    add("A", p.extended((c, e), (dd, f)))

        if variant.diamond_clause == 1:
            if m < k:
                bound = k - m + 1
                for c in Ms.succ("Rd", a):
                    for dd in Mt.succ("Rd", b):
                        if a_included(d, c, dd, bound):
                            add("A", p.extended((c,), (dd,)))
        else:
            if m + 1 < k:
                bound = k - m
                for c in Ms.succ("R", a):
                    for dd in Mt.succ("R", b):
                        if b_included(d, c, dd, bound):
                            add("B", p.extended((c,), (dd,)))

    return SeqAsimulation(frozenset(relA), frozenset(relB) if needs_b else None)


# ---------------------------------------------------------------------------
# Canonical unbounded construction on finite structures
# ---------------------------------------------------------------------------


def canonical_asimulation(
    M1: KripkeStructure,
    t,
    M2: KripkeStructure,
    u,
    variant: Variant,
    stabilization_bound: int,
    size_cap: Optional[int] = None,
) -> tuple:
    """Type-inclusion world pairs up to a degree bound, plus a stability flag.

    relA holds the directed pairs whose tp sets are included at every
    bound up to stabilization_bound (with prefix pools, inclusion at the
    top bound implies the rest); relB, for diamond clause 2, uses the
    reversed imp inclusion.  The flag reports whether bound+1 would have
    produced the same relations; on saturated pools this is permanent,
    and relA then coincides with the greatest fixpoint's main relation.
    """
    if t not in M1.worlds:
        raise ValueError(f"{t!r} is not a world of the first structure")
    if u not in M2.worlds:
        raise ValueError(f"{u!r} is not a world of the second structure")
    if not isinstance(stabilization_bound, int) or isinstance(stabilization_bound, bool):
        raise ValueError("stabilization_bound must be an integer")
    if stabilization_bound < 1:
        raise ValueError(f"stabilization_bound must be at least 1, got {stabilization_bound}")

    L = stabilization_bound
    sig = M1.letters() | M2.letters()
    master = enumerate_pool(sig, variant, L + 1, (M1, M2), size_cap)
    needs_b = variant.diamond_clause == 2
    models = (M1, M2)

    def relations_at(bound: int) -> tuple:
        pool = master.restrict(bound)
        tp_of: dict = {}
        imp_of: dict = {}
        for side in (0, 1):
            for w in models[side].sorted_worlds():
                tp_of[(side, w)] = type_set(models[side], w, pool, "tp").indices
                if needs_b:
                    imp_of[(side, w)] = type_set(models[side], w, pool, "imp").indices
        relA = set()
        relB = set()
        for d in ("12", "21"):
            s = 0 if d == "12" else 1
            for a in models[s].sorted_worlds():
                for b in models[1 - s].sorted_worlds():
                    if tp_of[(s, a)] <= tp_of[(1 - s, b)]:
                        relA.add(DirectedPair(d, a, b))
                    if needs_b and imp_of[(1 - s, b)] <= imp_of[(s, a)]:
                        relB.add(DirectedPair(d, a, b))
        return relA, relB

    relA, relB = relations_at(L)
    nextA, nextB = relations_at(L + 1)
    stabilized = relA == nextA and relB == nextB
    return Asimulation(frozenset(relA), frozenset(relB) if needs_b else None), stabilized
