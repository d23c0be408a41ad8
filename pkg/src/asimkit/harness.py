"""Seeded property suites exercising the library end to end.

Every suite is deterministic in (name, trials, seed, bounds): trial i
draws everything from a generator seeded with splitmix64(seed, i), so a
failure line can be replayed in isolation.  Report bodies contain no
timing and are byte-identical across reruns; wall-clock time lives on
the report object and in the JSON sidecar only.

Suites
    st-agreement          modal satisfaction equals first-order
                          satisfaction of the translation, per variant
    degree                quantifier depth of translations matches the
                          closed-form degree
    preservation          along maximal-relation pairs, formulas true at
                          the source hold at the target
    fixpoint-oracle       the fixpoint equals a brute-force union over
                          all candidate subsets on small instances
    separation-duality    pairs in the maximal relation admit no
                          separating formula; pairs outside admit a
                          verified one
    bounded-canonical     the k-indexed canonical construction passes
                          the checker (elem aside)
    stabilized-canonical  on saturated pools, canonical type-inclusion
                          pairs equal the fixpoint's main relation
    genmod-consistency    generated schemas agree with the hand-coded
                          checker on the four built-in signatures, and
                          the schema translations match translate
    kappa                 translations are preserved on an
                          axiom-filtered corpus; the documented
                          non-translation witnesses produce
                          counterexamples
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional

from .asimulation import (
    Asimulation,
    DirectedPair,
    Verdict,
    _maximal_relations,
    check_asimulation,
    check_k_asimulation,
    distinguishing_formula,
    maximal_asimulation,
)
from .classes import AXIOM_SETS, kappa_invariance_test, satisfies_axioms
from .genmod import BOX_1, BOX_2, DIA_1, DIA_2, check_generated, gen_st, print_signature
from .kripke import KripkeStructure, model_to_dict, random_model
from .semantics import VARIANTS, Variant, _VectorSemantics, eval_fol, eval_modal
from .syntax import (
    Box,
    Diamond,
    Prop,
    degree,
    format_modal,
    free_vars,
    parse_fol,
    random_modal_formula,
)
from .translate import translate, translation_degree
from .types import canonical_asimulation, canonical_k_asimulation, enumerate_pool, make_pools

_M64 = (1 << 64) - 1


def _mix64(seed: int, index: int) -> int:
    """splitmix64 of seed + (index+1) * golden gamma; the per-trial seed."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return (z ^ (z >> 31)) & _M64


def _model_json(M: KripkeStructure) -> str:
    return json.dumps(model_to_dict(M), separators=(",", ":"))


def _rand_structure(rng: random.Random, max_worlds: int, letters: int) -> KripkeStructure:
    n = rng.randint(1, max_worlds)
    density = rng.uniform(0.12, 0.5)
    return random_model(n, density, letters, seed=rng.getrandbits(48))


@dataclass(frozen=True)
class SuiteReport:
    name: str
    trials: int
    seed: int
    failures: tuple
    skipped: int
    elapsed: float
    trial_rows: tuple

    @property
    def ok(self) -> bool:
        return not self.failures

    def body(self) -> str:
        """Byte-stable text form; no timing."""
        lines = [
            f"suite: {self.name}",
            f"trials: {self.trials}",
            f"seed: {self.seed}",
            f"failures: {len(self.failures)}",
            f"skipped: {self.skipped}",
        ]
        lines.extend(self.failures)
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "trials": self.trials,
            "seed": self.seed,
            "failures": list(self.failures),
            "skipped": self.skipped,
            "result": "PASS" if self.ok else "FAIL",
            "elapsed_seconds": round(self.elapsed, 3),
        }


# ---------------------------------------------------------------------------
# Individual suites; each returns (failures, skipped, trial_rows)
# ---------------------------------------------------------------------------


def _suite_st_agreement(trials: int, seed: int, b: dict):
    failures = []
    rows = []
    for i in range(trials):
        tseed = _mix64(seed, i)
        rng = random.Random(tseed)
        variant = VARIANTS[i % 4]
        M = _rand_structure(rng, b["max_worlds"], b["letters"])
        f = random_modal_formula(b["max_depth"], tuple(range(1, b["letters"] + 1)), rng)
        w = rng.choice(M.sorted_worlds())
        got_modal = eval_modal(M, w, f, variant)
        got_fol = eval_fol(M, {"x": w}, translate(f, variant, "x"))
        ok = got_modal == got_fol
        rows.append((i, tseed, "pass" if ok else "fail"))
        if not ok:
            failures.append(
                f"FAIL trial={i} seed={tseed} variant={variant.code} world={w!r} "
                f"modal={got_modal} fol={got_fol} formula={format_modal(f)!r} "
                f"model={_model_json(M)}"
            )
    return failures, 0, rows


def _suite_degree(trials: int, seed: int, b: dict):
    failures = []
    rows = []
    for i in range(trials):
        tseed = _mix64(seed, i)
        rng = random.Random(tseed)
        f = random_modal_formula(b["max_depth"], tuple(range(1, b["letters"] + 1)), rng)
        bad = [
            v.code
            for v in VARIANTS
            if degree(translate(f, v, "x")) != translation_degree(f, v)
        ]
        rows.append((i, tseed, "pass" if not bad else "fail"))
        if bad:
            failures.append(
                f"FAIL trial={i} seed={tseed} variants={','.join(bad)} "
                f"formula={format_modal(f)!r}"
            )
    return failures, 0, rows


def _suite_preservation(trials: int, seed: int, b: dict):
    failures = []
    rows = []
    per_pair = b["formulas_per_pair"]
    for i in range(trials):
        tseed = _mix64(seed, i)
        rng = random.Random(tseed)
        M1 = _rand_structure(rng, b["max_worlds"], b["letters"])
        M2 = _rand_structure(rng, b["max_worlds"], b["letters"])
        formulas = [
            random_modal_formula(b["max_depth"], tuple(range(1, b["letters"] + 1)), rng)
            for _ in range(per_pair)
        ]
        engine = _VectorSemantics((M1, M2))
        bad = None
        for variant in VARIANTS:
            relA, _ = _maximal_relations(M1, M2, variant)
            vecs = [engine.vector(f, variant) for f in formulas]
            for p in relA:
                si, ti = (0, 1) if p.direction == "12" else (1, 0)
                sbit = engine.bit_of[(si, p.source)]
                tbit = engine.bit_of[(ti, p.target)]
                for fi, vec in enumerate(vecs):
                    if vec >> sbit & 1 and not vec >> tbit & 1:
                        bad = (variant, p, formulas[fi])
                        break
                if bad:
                    break
            if bad:
                break
        rows.append((i, tseed, "pass" if bad is None else "fail"))
        if bad is not None:
            variant, p, f = bad
            failures.append(
                f"FAIL trial={i} seed={tseed} variant={variant.code} pair={p} "
                f"formula={format_modal(f)!r} m1={_model_json(M1)} m2={_model_json(M2)}"
            )
    return failures, 0, rows


# -- brute-force oracle for the fixpoint -----------------------------------


def _oracle_union(M1: KripkeStructure, M2: KripkeStructure, variant: Variant):
    """Union of all relations passing the closure conditions, by subset
    enumeration.  Independent of the worklist engine: conditions are
    compiled to bitmask tests over the candidate universe.  Returns
    (relA_union, relB_union or None, universe_size)."""
    letters = sorted(M1.letters() | M2.letters())
    sides = {"12": (M1, M2), "21": (M2, M1)}

    universe = []
    for d in ("12", "21"):
        Ms, Mt = sides[d]
        for a in Ms.sorted_worlds():
            for b in Mt.sorted_worlds():
                if all(not Ms.prop_true(p, a) or Mt.prop_true(p, b) for p in letters):
                    universe.append((d, a, b))
    index = {key: ix for ix, key in enumerate(universe)}
    n = len(universe)

    needs_b = variant.diamond_clause == 2
    b_universe = []
    if needs_b:
        for d in ("12", "21"):
            Ms, Mt = sides[d]
            for a in Ms.sorted_worlds():
                for b in Mt.sorted_worlds():
                    b_universe.append((d, a, b))
    b_index = {key: ix for ix, key in enumerate(b_universe)}

    def bit(key) -> int:
        ix = index.get(key)
        return 0 if ix is None else 1 << ix

    # For each universe element: a list of obligations.  ("opts", masks)
    # needs some mask fully inside A (used by step, whose witness is a
    # pair of elements); ("any", mask) needs a non-empty intersection
    # with A; ("anyB", mask) the same against the derived relB.
    obligations = []
    for d, a, b in universe:
        Ms, Mt = sides[d]
        fd = "21" if d == "12" else "12"
        obls = []
        for dd in Mt.succ("R", b):
            opts = []
            for c in Ms.succ("R", a):
                m1 = bit((d, c, dd))
                m2 = bit((fd, dd, c))
                if m1 and m2:
                    opts.append(m1 | m2)
            obls.append(("opts", tuple(opts)))
        if variant.box_clause == 1:
            for dd in Mt.succ("Rb", b):
                mask = 0
                for c in Ms.succ("Rb", a):
                    mask |= bit((d, c, dd))
                obls.append(("any", mask))
        else:
            for dd in Mt.succ("R", b):
                for f in Mt.succ("Rb", dd):
                    mask = 0
                    for c in Ms.succ("R", a):
                        for e in Ms.succ("Rb", c):
                            mask |= bit((d, e, f))
                    obls.append(("any", mask))
        if variant.diamond_clause == 1:
            for c in Ms.succ("Rd", a):
                mask = 0
                for dd in Mt.succ("Rd", b):
                    mask |= bit((d, c, dd))
                obls.append(("any", mask))
        else:
            for dd in Mt.succ("R", b):
                mask = 0
                for c in Ms.succ("R", a):
                    ix = b_index.get((d, c, dd))
                    if ix is not None:
                        mask |= 1 << ix
                obls.append(("anyB", mask))
        obligations.append(tuple(obls))

    # relB membership depends only on A: every source-side Rd-move must
    # land on an A-pair.  One "any" mask over A per move.
    b_obligations = []
    for d, a, b in b_universe:
        Ms, Mt = sides[d]
        obls = []
        for c in Ms.succ("Rd", a):
            mask = 0
            for dd in Mt.succ("Rd", b):
                mask |= bit((d, c, dd))
            obls.append(mask)
        b_obligations.append(tuple(obls))

    def derived_b(A: int) -> int:
        out = 0
        for ix, obls in enumerate(b_obligations):
            for mask in obls:
                if not mask & A:
                    break
            else:
                out |= 1 << ix
        return out

    def passes(A: int) -> bool:
        Bstar = derived_b(A) if needs_b else 0
        rest = A
        while rest:
            low = rest & -rest
            rest ^= low
            for kind, payload in obligations[low.bit_length() - 1]:
                if kind == "opts":
                    if not any(opt & A == opt for opt in payload):
                        return False
                elif kind == "any":
                    if not payload & A:
                        return False
                else:
                    if not payload & Bstar:
                        return False
        return True

    union = 0
    for A in range(1 << n):
        if A & union == A:
            continue  # cannot add anything new
        if passes(A):
            union |= A

    relA = frozenset(
        DirectedPair(*universe[ix]) for ix in range(n) if union >> ix & 1
    )
    relB = None
    if needs_b:
        bmask = derived_b(union)
        relB = frozenset(
            DirectedPair(*b_universe[ix])
            for ix in range(len(b_universe))
            if bmask >> ix & 1
        )
    return relA, relB, n


def _suite_fixpoint_oracle(trials: int, seed: int, b: dict):
    failures = []
    rows = []
    combos = [(x, y) for x in range(1, 4) for y in range(1, 4)]
    cap = b["universe_cap"]
    for i in range(trials):
        tseed = _mix64(seed, i)
        n1, n2 = combos[i % len(combos)]
        # bounded re-draws keep the subset space within the time budget;
        # the draw sequence is part of the trial's deterministic replay
        M1 = M2 = None
        for attempt in range(16):
            rng = random.Random(_mix64(tseed, attempt))
            M1 = random_model(n1, rng.uniform(0.2, 0.6), 1, seed=rng.getrandbits(48))
            M2 = random_model(n2, rng.uniform(0.2, 0.6), 1, seed=rng.getrandbits(48))
            letters = sorted(M1.letters() | M2.letters())
            count = 0
            for Ms, Mt in ((M1, M2), (M2, M1)):
                for a in Ms.worlds:
                    for bb in Mt.worlds:
                        if all(
                            not Ms.prop_true(p, a) or Mt.prop_true(p, bb)
                            for p in letters
                        ):
                            count += 1
            if count <= cap:
                break
        bad = None
        for variant in VARIANTS:
            oracleA, oracleB, _ = _oracle_union(M1, M2, variant)
            relA, relB = _maximal_relations(M1, M2, variant)
            if relA != oracleA or relB != oracleB:
                bad = variant
                break
        rows.append((i, tseed, "pass" if bad is None else "fail"))
        if bad is not None:
            failures.append(
                f"FAIL trial={i} seed={tseed} variant={bad.code} "
                f"m1={_model_json(M1)} m2={_model_json(M2)}"
            )
    return failures, 0, rows


def _suite_separation_duality(trials: int, seed: int, b: dict):
    failures = []
    rows = []
    for i in range(trials):
        tseed = _mix64(seed, i)
        rng = random.Random(tseed)
        variant = VARIANTS[i % 4]
        M1 = _rand_structure(rng, b["max_worlds"], b["letters"])
        M2 = _rand_structure(rng, b["max_worlds"], b["letters"])
        t = rng.choice(M1.sorted_worlds())
        u = rng.choice(M2.sorted_worlds())
        _, contains_root = maximal_asimulation(M1, t, M2, u, variant)
        problem = ""
        if contains_root:
            f = distinguishing_formula(M1, t, M2, u, variant, b["depth_in"])
            if f is not None:
                problem = f"separator {format_modal(f)!r} found for a related pair"
        else:
            f = distinguishing_formula(M1, t, M2, u, variant, b["depth_out"])
            if f is None:
                problem = "no separator found for an unrelated pair"
            elif not eval_modal(M1, t, f, variant) or eval_modal(M2, u, f, variant):
                problem = f"separator {format_modal(f)!r} fails evaluation"
        rows.append((i, tseed, "pass" if not problem else "fail"))
        if problem:
            failures.append(
                f"FAIL trial={i} seed={tseed} variant={variant.code} t={t!r} u={u!r} "
                f"{problem} m1={_model_json(M1)} m2={_model_json(M2)}"
            )
    return failures, 0, rows


def _suite_bounded_canonical(trials: int, seed: int, b: dict):
    failures = []
    rows = []
    for i in range(trials):
        tseed = _mix64(seed, i)
        rng = random.Random(tseed)
        variant = VARIANTS[i % 4]
        k = rng.randint(0, b["max_k"])
        M1 = _rand_structure(rng, b["max_worlds"], b["letters"])
        M2 = _rand_structure(rng, b["max_worlds"], b["letters"])
        t = rng.choice(M1.sorted_worlds())
        u = rng.choice(M2.sorted_worlds())
        pools = make_pools(M1, M2, k, variant)
        rel = canonical_k_asimulation(M1, t, M2, u, k, variant, pools)
        verdict = check_k_asimulation(M1, t, M2, u, k, variant, rel)
        bad = [v for v in verdict.violations if v.condition != "p-elem"]
        rows.append((i, tseed, "pass" if not bad else "fail"))
        if bad:
            failures.append(
                f"FAIL trial={i} seed={tseed} variant={variant.code} k={k} t={t!r} "
                f"u={u!r} violations={'; '.join(str(v) for v in bad[:4])} "
                f"m1={_model_json(M1)} m2={_model_json(M2)}"
            )
    return failures, 0, rows


def _suite_stabilized_canonical(trials: int, seed: int, b: dict):
    failures = []
    skipped = 0
    rows = []
    for i in range(trials):
        tseed = _mix64(seed, i)
        rng = random.Random(tseed)
        variant = VARIANTS[i % 4]
        M1 = _rand_structure(rng, b["max_worlds"], b["letters"])
        M2 = _rand_structure(rng, b["max_worlds"], b["letters"])
        t = rng.choice(M1.sorted_worlds())
        u = rng.choice(M2.sorted_worlds())
        sig = M1.letters() | M2.letters()
        chosen = None
        for bound in range(1, b["max_bound"] + 1):
            if enumerate_pool(sig, variant, bound + 1, (M1, M2)).saturated:
                chosen = bound
                break
        if chosen is None:
            skipped += 1
            rows.append((i, tseed, "skip"))
            continue
        rel, stabilized = canonical_asimulation(M1, t, M2, u, variant, chosen)
        relA_max, _ = _maximal_relations(M1, M2, variant)
        problem = ""
        if not stabilized:
            problem = f"saturated pool at bound {chosen} but relations not stable"
        elif rel.relA != relA_max:
            problem = f"type-inclusion relation differs from fixpoint at bound {chosen}"
        rows.append((i, tseed, "pass" if not problem else "fail"))
        if problem:
            failures.append(
                f"FAIL trial={i} seed={tseed} variant={variant.code} {problem} "
                f"m1={_model_json(M1)} m2={_model_json(M2)}"
            )
    return failures, skipped, rows


# -- genmod consistency -----------------------------------------------------

_GENMOD_CASES = (
    # (signature, checker variant, conditions compared, renames)
    (BOX_1, Variant(1, 1), {"type", "elem", "base", "step", "box-1"}, {"r1": "box-1"}),
    (BOX_2, Variant(2, 1), {"type", "elem", "base", "step", "box-2"}, {"r1": "box-2"}),
    (DIA_1, Variant(1, 1), {"type", "elem", "base", "step", "diam-1"}, {"r1": "diam-1"}),
    (
        DIA_2,
        Variant(1, 2),
        {"type", "elem", "base", "step", "B-type", "diam-2(1)", "diam-2(2)"},
        {"r1": "diam-2(2)", "r2": "diam-2(1)"},
    ),
)


def _canon_generated(verdict: Verdict, renames: dict) -> Counter:
    out: Counter = Counter()
    for v in verdict.violations:
        cond, witness = v.condition, v.witness
        if cond == "type":
            label, pair = witness
            cond = "B-type" if label == "A2" else "type"
            witness = (pair,)
        else:
            cond = renames.get(cond, cond)
        out[(cond, witness)] += 1
    return out


def _canon_handwritten(verdict: Verdict, keep: set) -> Counter:
    out: Counter = Counter()
    for v in verdict.violations:
        if v.condition in keep:
            out[(v.condition, v.witness)] += 1
    return out


def _random_pair_set(rng: random.Random, M1, M2) -> frozenset:
    pairs = []
    for d, (Ms, Mt) in (("12", (M1, M2)), ("21", (M2, M1))):
        for a in Ms.sorted_worlds():
            for b in Mt.sorted_worlds():
                if rng.random() < 0.5:
                    pairs.append(DirectedPair(d, a, b))
    return frozenset(pairs)


def _suite_genmod_consistency(trials: int, seed: int, b: dict):
    failures = []
    rows = []
    row_i = 0
    for case_i, (sig, variant, keep, renames) in enumerate(_GENMOD_CASES):
        for i in range(trials):
            tseed = _mix64(seed, case_i * trials + i)
            rng = random.Random(tseed)
            M1 = _rand_structure(rng, b["max_worlds"], b["letters"])
            M2 = _rand_structure(rng, b["max_worlds"], b["letters"])
            t = rng.choice(M1.sorted_worlds())
            u = rng.choice(M2.sorted_worlds())
            relA = _random_pair_set(rng, M1, M2)
            problem = ""

            if variant.diamond_clause == 2:
                relB = _random_pair_set(rng, M1, M2)
                relations = (relA, relB)
                hand = check_asimulation(M1, t, M2, u, variant, Asimulation(relA, relB))
            else:
                relations = (relA,)
                hand = check_asimulation(M1, t, M2, u, variant, Asimulation(relA))
            gen = check_generated(M1, t, M2, u, sig, relations)
            if _canon_generated(gen, renames) != _canon_handwritten(hand, keep):
                problem = "verdicts differ"

            if not problem:
                f = random_modal_formula(3, (1, 2), rng)
                modal = (
                    Box(f) if sig in (BOX_1, BOX_2) else Diamond(f)
                )
                if gen_st(sig, f, "x", variant=variant) != translate(modal, variant, "x"):
                    problem = "translation scheme differs"

            rows.append((row_i, tseed, "pass" if not problem else "fail"))
            if problem:
                failures.append(
                    f"FAIL trial={row_i} seed={tseed} sig={print_signature(sig)} "
                    f"{problem} t={t!r} u={u!r} "
                    f"m1={_model_json(M1)} m2={_model_json(M2)}"
                )
            row_i += 1
    return failures, 0, rows


# -- kappa -------------------------------------------------------------------


def _reflexive_transitive(M: KripkeStructure) -> KripkeStructure:
    worlds = M.sorted_worlds()
    reach = {a: {a} | set(M.succ("R", a)) for a in worlds}
    for mid in worlds:
        for a in worlds:
            if mid in reach[a]:
                reach[a] |= reach[mid]
    closed = [(a, c) for a in worlds for c in reach[a]]
    return KripkeStructure(
        worlds, relR=closed, relBox=M.relBox, relDia=M.relDia, valuation=M.valuation
    )


def _suite_kappa(trials: int, seed: int, b: dict):
    failures = []
    rows = []
    spec = AXIOM_SETS["refl-trans"]
    for i in range(trials):
        tseed = _mix64(seed, i)
        rng = random.Random(tseed)
        variant = VARIANTS[i % 4]
        corpus = [
            _reflexive_transitive(_rand_structure(rng, b["max_worlds"], b["letters"]))
            for _ in range(3)
        ]
        problem = ""
        if not all(satisfies_axioms(M, spec) for M in corpus):
            problem = "closure failed to satisfy the axiom set"
        else:
            # falsum-only formulas translate to sentences; those have no
            # entry variable to relativize, so draw until x appears
            f = random_modal_formula(3, tuple(range(1, b["letters"] + 1)), rng)
            phi = translate(f, variant, "x")
            for _ in range(16):
                if free_vars(phi):
                    break
                f = random_modal_formula(3, tuple(range(1, b["letters"] + 1)), rng)
                phi = translate(f, variant, "x")
            else:
                f = Prop(1)
                phi = translate(f, variant, "x")
            hits = kappa_invariance_test(phi, corpus, spec, variant)
            if hits:
                problem = (
                    f"translation not preserved: formula={format_modal(f)!r} "
                    f"first={hits[0]}"
                )
        rows.append((i, tseed, "pass" if not problem else "fail"))
        if problem:
            failures.append(f"FAIL trial={i} seed={tseed} variant={variant.code} {problem}")

    # documented non-translation witnesses, fixed instances
    empty = AXIOM_SETS["none"]
    one_false = KripkeStructure(["w0"])
    one_true = KripkeStructure(["w0"], valuation={1: ["w0"]})
    chain = KripkeStructure(["w0", "w1"], relR=[("w0", "w1")])
    isolated = KripkeStructure(["w0"])
    fixed = (
        ("P1(x) -> false", [one_false, one_true]),
        ("exists y. R(x,y)", [chain, isolated]),
    )
    for j, (text, corpus) in enumerate(fixed):
        ok = True
        for variant in VARIANTS:
            if not kappa_invariance_test(parse_fol(text), corpus, empty, variant):
                ok = False
        rows.append((trials + j, 0, "pass" if ok else "fail"))
        if not ok:
            failures.append(
                f"FAIL trial={trials + j} seed=0 fixed witness {text!r} "
                f"produced no counterexample"
            )
    return failures, 0, rows


# ---------------------------------------------------------------------------
# Suite table and entry points
# ---------------------------------------------------------------------------

_SUITES: dict = {
    "st-agreement": (
        _suite_st_agreement,
        10000,
        {"max_worlds": 6, "max_depth": 4, "letters": 2},
    ),
    "degree": (_suite_degree, 1000, {"max_depth": 5, "letters": 3}),
    "preservation": (
        _suite_preservation,
        1000,
        {"max_worlds": 5, "max_depth": 3, "letters": 2, "formulas_per_pair": 50},
    ),
    "fixpoint-oracle": (_suite_fixpoint_oracle, 18, {"universe_cap": 14}),
    "separation-duality": (
        _suite_separation_duality,
        500,
        {"max_worlds": 4, "letters": 2, "depth_in": 3, "depth_out": 6},
    ),
    "bounded-canonical": (
        _suite_bounded_canonical,
        200,
        {"max_worlds": 4, "letters": 2, "max_k": 3},
    ),
    "stabilized-canonical": (
        _suite_stabilized_canonical,
        120,
        {"max_worlds": 3, "letters": 2, "max_bound": 7},
    ),
    "genmod-consistency": (
        _suite_genmod_consistency,
        500,
        {"max_worlds": 4, "letters": 2},
    ),
    "kappa": (_suite_kappa, 100, {"max_worlds": 4, "letters": 2}),
}

SUITE_NAMES = tuple(sorted(_SUITES))


def run_suite(
    config: str,
    trials: Optional[int] = None,
    seed: int = 0,
    bounds: Optional[dict] = None,
) -> SuiteReport:
    """Run one named suite; deterministic in all arguments.

    trials=None uses the suite's default.  bounds overrides individual
    size knobs; unknown keys are rejected.  For genmod-consistency,
    trials counts instances per built-in signature.
    """
    if config not in _SUITES:
        raise ValueError(
            f"unknown suite {config!r}; known: {', '.join(SUITE_NAMES)}"
        )
    fn, default_trials, default_bounds = _SUITES[config]
    n = default_trials if trials is None else trials
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"trials must be a non-negative integer, got {trials!r}")
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValueError(f"seed must be an integer, got {seed!r}")
    merged = dict(default_bounds)
    for key, value in (bounds or {}).items():
        if key not in merged:
            raise ValueError(
                f"unknown bound {key!r} for suite {config}; "
                f"known: {', '.join(sorted(merged))}"
            )
        merged[key] = value
    start = time.perf_counter()
    failures, skipped, rows = fn(n, seed & _M64, merged)
    elapsed = time.perf_counter() - start
    return SuiteReport(
        name=config,
        trials=n,
        seed=seed & _M64,
        failures=tuple(failures),
        skipped=skipped,
        elapsed=elapsed,
        trial_rows=tuple(rows),
    )


def invariance_test(phi, corpus, variant: Variant) -> list:
    """Counterexample hunt with no axiom restriction (empty axiom set)."""
    return kappa_invariance_test(phi, corpus, AXIOM_SETS["none"], variant)


# ---------------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------------


def write_report(report: SuiteReport, directory: str) -> list:
    """Write report.txt, report.json, trials.csv and figure.png.

    Returns the list of paths written.  Text, JSON and CSV are
    deterministic for a given report; the figure is a summary chart.
    """
    import csv
    import os

    os.makedirs(directory, exist_ok=True)
    paths = []

    txt = os.path.join(directory, "report.txt")
    with open(txt, "w", encoding="utf-8") as fh:
        fh.write(report.body())
    paths.append(txt)

    js = os.path.join(directory, "report.json")
    with open(js, "w", encoding="utf-8") as fh:
        json.dump(report.to_dict(), fh, indent=2)
        fh.write("\n")
    paths.append(js)

    rows_path = os.path.join(directory, "trials.csv")
    with open(rows_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["trial", "seed", "outcome"])
        for row in report.trial_rows:
            writer.writerow(row)
    paths.append(rows_path)

    fig_path = os.path.join(directory, "figure.png")
    _render_figure(report, fig_path)
    paths.append(fig_path)
    return paths


def _render_figure(report: SuiteReport, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    counts = Counter(outcome for _, _, outcome in report.trial_rows)
    labels = ["pass", "fail", "skip"]
    values = [counts.get(lab, 0) for lab in labels]
    colors = ["#4a7", "#c44", "#aaa"]

    fig, ax = plt.subplots(figsize=(5, 3.2))
    bars = ax.bar(labels, values, color=colors)
    for bar, value in zip(bars, values):
        ax.annotate(
            str(value),
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
            fontsize=9,
        )
    ax.set_title(f"suite {report.name}: {'PASS' if report.ok else 'FAIL'}")
    ax.set_ylabel("trials")
    ax.set_ylim(0, max(values + [1]) * 1.15)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
