"""Checkers, the greatest fixpoint, distinguishing search, interchange."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from asimkit.asimulation import (
    Asimulation,
    DirectedPair,
    SeqAsimulation,
    SeqPair,
    asim_from_dict,
    asim_to_dict,
    check_asimulation,
    check_k_asimulation,
    distinguishing_formula,
    dump_asimulation,
    load_asimulation,
    maximal_asimulation,
    seq_asim_from_dict,
    seq_asim_to_dict,
)
from asimkit.kripke import KripkeStructure, random_model
from asimkit.semantics import VARIANTS, Variant, eval_modal
from asimkit.syntax import Prop, format_modal


def _pairs(*specs):
    return frozenset(DirectedPair(d, a, b) for d, a, b in specs)


def test_directed_pair_validation():
    with pytest.raises(ValueError):
        DirectedPair("13", "a", "b")
    p = DirectedPair("12", "a", "b")
    assert p.flipped() == DirectedPair("21", "b", "a")
    assert str(p) == "12:a->b"


def test_seq_pair_validation():
    with pytest.raises(ValueError):
        SeqPair("12", ("a",), ("b", "c"))
    with pytest.raises(ValueError):
        SeqPair("12", (), ())
    p = SeqPair("12", ("a",), ("b",))
    assert p.extended(("c",), ("d",)) == SeqPair("12", ("a", "c"), ("b", "d"))
    assert p.flipped_extended(("c",), ("d",)) == SeqPair("21", ("b", "d"), ("a", "c"))


def test_relation_shape_enforced():
    M = KripkeStructure(["w"])
    both = Asimulation(_pairs(("12", "w", "w")), _pairs(("21", "w", "w")))
    only_a = Asimulation(_pairs(("12", "w", "w")))
    # auxiliary relation belongs to the (., 2) variants exactly
    with pytest.raises(ValueError):
        check_asimulation(M, "w", M, "w", Variant(1, 1), both)
    with pytest.raises(ValueError):
        check_asimulation(M, "w", M, "w", Variant(1, 2), only_a)
    with pytest.raises(ValueError):
        check_asimulation(M, "w", M, "w", None, both)


def test_checker_identical_one_point_models_ok():
    M = KripkeStructure(["w"])
    rel = Asimulation(_pairs(("12", "w", "w"), ("21", "w", "w")))
    assert check_asimulation(M, "w", M, "w", Variant(1, 1), rel).ok


def test_checker_base_violation():
    M1 = KripkeStructure(["t"], valuation={1: ["t"]})
    M2 = KripkeStructure(["u"])
    rel = Asimulation(_pairs(("12", "t", "u")))
    for code in ("11", "21"):
        verdict = check_asimulation(M1, "t", M2, "u", Variant.from_code(code), rel)
        assert not verdict.ok
        conds = {v.condition for v in verdict.violations}
        assert "base" in conds
        base = [v for v in verdict.violations if v.condition == "base"][0]
        assert base.witness == (DirectedPair("12", "t", "u"), "p1")


def test_checker_unmatched_target_move_is_step_violation():
    # the target has an R-move the source cannot mirror; the box condition
    # stays quiet because its premise runs along the box relation, which
    # is empty here
    M1 = KripkeStructure(["t"])
    M2 = KripkeStructure(["u", "d"], relR=[("u", "d")])
    rel = Asimulation(_pairs(("12", "t", "u")))
    verdict = check_asimulation(M1, "t", M2, "u", Variant(1, 1), rel)
    assert [v.condition for v in verdict.violations] == ["step"]
    assert verdict.violations[0].witness == (DirectedPair("12", "t", "u"), "d")


def test_checker_box_one_premise_runs_along_box_relation():
    M1 = KripkeStructure(["t"])
    M2 = KripkeStructure(["u", "d"], relBox=[("u", "d")])
    rel = Asimulation(_pairs(("12", "t", "u")))
    verdict = check_asimulation(M1, "t", M2, "u", Variant(1, 1), rel)
    assert [v.condition for v in verdict.violations] == ["box-1"]


def test_checker_step_requires_mutual_membership():
    # c matches d one way only; (step) wants both directions related
    M1 = KripkeStructure(["t", "c"], relR=[("t", "c")])
    M2 = KripkeStructure(["u", "d"], relR=[("u", "d")])
    one_way = Asimulation(_pairs(("12", "t", "u"), ("12", "c", "d")))
    verdict = check_asimulation(M1, "t", M2, "u", Variant(1, 1), one_way)
    assert "step" in {v.condition for v in verdict.violations}
    both_ways = Asimulation(
        _pairs(("12", "t", "u"), ("12", "c", "d"), ("21", "d", "c"), ("21", "u", "t"))
    )
    assert check_asimulation(M1, "t", M2, "u", Variant(1, 1), both_ways).ok


def test_checker_elem_requires_root():
    M = KripkeStructure(["w", "v"])
    rel = Asimulation(_pairs(("12", "v", "v")))
    verdict = check_asimulation(M, "w", M, "w", Variant(1, 1), rel)
    assert {v.condition for v in verdict.violations} == {"elem"}


def test_checker_type_excludes_foreign_worlds():
    M = KripkeStructure(["w"])
    N = KripkeStructure(["z"])
    rel = Asimulation(_pairs(("12", "w", "w"), ("12", "z", "z")))
    verdict = check_asimulation(M, "w", N, "z", Variant(1, 1), rel)
    assert "type" in {v.condition for v in verdict.violations}


def test_checker_diam_two_conditions():
    # relA pair with a target R-move must land in relB; relB pair with a
    # source diamond-move must land back in relA
    M1 = KripkeStructure(["t", "c", "cw"], relR=[("t", "c")], relDia=[("c", "cw")])
    M2 = KripkeStructure(["u", "d", "dw"], relR=[("u", "d")], relDia=[("d", "dw")])
    relA = _pairs(
        ("12", "t", "u"),
        ("21", "u", "t"),
        ("12", "c", "d"),
        ("21", "d", "c"),
        ("12", "cw", "dw"),
        ("21", "dw", "cw"),
    )
    relB = _pairs(("12", "c", "d"), ("21", "d", "c"))
    good = Asimulation(relA, relB)
    assert check_asimulation(M1, "t", M2, "u", Variant(1, 2), good).ok
    # drop a diamond landing pair: its auxiliary pair has no way back
    no_landing = Asimulation(relA - _pairs(("12", "cw", "dw")), relB)
    verdict2 = check_asimulation(M1, "t", M2, "u", Variant(1, 2), no_landing)
    assert "diam-2(2)" in {v.condition for v in verdict2.violations}
    # drop relB entirely: the main pairs' R-moves have no hand-off
    no_handoff = Asimulation(relA, frozenset())
    verdict3 = check_asimulation(M1, "t", M2, "u", Variant(1, 2), no_handoff)
    assert {v.condition for v in verdict3.violations} == {"diam-2(1)"}


def test_basic_variant_checks_only_shared_conditions():
    M1 = KripkeStructure(["t"], relBox=[("t", "t")], relDia=[("t", "t")])
    M2 = KripkeStructure(["u"])
    rel = Asimulation(_pairs(("12", "t", "u"), ("21", "u", "t")))
    assert check_asimulation(M1, "t", M2, "u", None, rel).ok


# -- k-indexed checker -------------------------------------------------------


def _seqs(*specs):
    return frozenset(SeqPair(d, tuple(s), tuple(t)) for d, s, t in specs)


def test_k_checker_k0_guards_everything():
    M1 = KripkeStructure(["t", "c"], relR=[("t", "c")])
    M2 = KripkeStructure(["u"])
    rel = SeqAsimulation(_seqs(("12", ["t"], ["u"])))
    assert check_k_asimulation(M1, "t", M2, "u", 0, Variant(1, 1), rel).ok


def test_k_checker_identical_one_point_models():
    M = KripkeStructure(["w"])
    rel = SeqAsimulation(_seqs(("12", ["w"], ["w"]), ("21", ["w"], ["w"])))
    for k in (0, 1, 3):
        assert check_k_asimulation(M, "w", M, "w", k, Variant(1, 1), rel).ok


def test_k_checker_guard_boundary():
    # a target R-move out of a length-1 sequence is owed only when 0 < k
    M1 = KripkeStructure(["t"])
    M2 = KripkeStructure(["u", "d"], relR=[("u", "d")])
    rel = SeqAsimulation(_seqs(("12", ["t"], ["u"])))
    assert check_k_asimulation(M1, "t", M2, "u", 0, Variant(1, 1), rel).ok
    verdict = check_k_asimulation(M1, "t", M2, "u", 1, Variant(1, 1), rel)
    assert "p-step" in {v.condition for v in verdict.violations}


def test_k_checker_box_guard_stops_one_earlier():
    # box consumes two quantifier ranks: at m+1 = k the obligation lapses
    M1 = KripkeStructure(["t"])
    M2 = KripkeStructure(["u", "d"], relBox=[("u", "d")])
    rel = SeqAsimulation(_seqs(("12", ["t"], ["u"])))
    assert check_k_asimulation(M1, "t", M2, "u", 1, Variant(1, 1), rel).ok
    verdict = check_k_asimulation(M1, "t", M2, "u", 2, Variant(1, 1), rel)
    assert "p-box-1" in {v.condition for v in verdict.violations}


def test_k_checker_base_on_last_elements():
    M1 = KripkeStructure(["a", "t"], valuation={1: ["t"]})
    M2 = KripkeStructure(["b", "u"])
    rel = SeqAsimulation(_seqs(("12", ["a", "t"], ["b", "u"])))
    verdict = check_k_asimulation(M1, "a", M2, "b", 3, Variant(1, 1), rel)
    conds = {v.condition for v in verdict.violations}
    assert "p-base" in conds  # p1 at t but not at u
    assert "p-elem" in conds  # singleton root pair missing


def test_k_checker_elem_is_singleton_root():
    M = KripkeStructure(["w"])
    rel = SeqAsimulation(_seqs(("21", ["w"], ["w"])))
    verdict = check_k_asimulation(M, "w", M, "w", 0, Variant(1, 1), rel)
    assert {v.condition for v in verdict.violations} == {"p-elem"}


# -- maximal asimulation -----------------------------------------------------


def test_maximal_identical_single_point_with_shared_atom():
    M = KripkeStructure(["w"], valuation={1: ["w"]})
    for v in VARIANTS:
        rel, root = maximal_asimulation(M, "w", M, "w", v)
        assert root
        assert rel.relA == _pairs(("12", "w", "w"), ("21", "w", "w"))


def test_maximal_base_asymmetry():
    M1 = KripkeStructure(["t"], valuation={1: ["t"]})
    M2 = KripkeStructure(["u"])
    for v in VARIANTS:
        rel, root = maximal_asimulation(M1, "t", M2, "u", v)
        assert not root
        assert rel.relA == _pairs(("21", "u", "t"))


def test_maximal_vacuous_target():
    # all conditions on (t -> u) hold vacuously: u has no moves at all
    M1 = KripkeStructure(["t", "t2"], relR=[("t", "t2")], valuation={1: ["t2"]})
    M2 = KripkeStructure(["u"])
    rel, root = maximal_asimulation(M1, "t", M2, "u", Variant(1, 1))
    assert root
    assert rel.relA == _pairs(("12", "t", "u"), ("21", "u", "t2"))


def test_maximal_output_passes_checker_modulo_elem():
    rng = random.Random(31)
    for _ in range(60):
        M1 = random_model(rng.randint(1, 4), rng.uniform(0.1, 0.6), 2, seed=rng.getrandbits(32))
        M2 = random_model(rng.randint(1, 4), rng.uniform(0.1, 0.6), 2, seed=rng.getrandbits(32))
        t = rng.choice(M1.sorted_worlds())
        u = rng.choice(M2.sorted_worlds())
        for v in VARIANTS + (None,):
            rel, _root = maximal_asimulation(M1, t, M2, u, v)
            verdict = check_asimulation(M1, t, M2, u, v, rel)
            assert all(x.condition == "elem" for x in verdict.violations), (
                v,
                [str(x) for x in verdict.violations],
            )


def test_union_closure_of_passing_relations():
    # enumerate all candidate subsets on tiny instances: any two passing
    # relations must union to a passing relation
    rng = random.Random(7)
    for _ in range(12):
        M1 = random_model(rng.randint(1, 2), rng.uniform(0.2, 0.7), 1, seed=rng.getrandbits(32))
        M2 = random_model(rng.randint(1, 2), rng.uniform(0.2, 0.7), 1, seed=rng.getrandbits(32))
        t = M1.sorted_worlds()[0]
        u = M2.sorted_worlds()[0]
        cross = [
            DirectedPair(d, a, b)
            for d, (Ms, Mt) in (("12", (M1, M2)), ("21", (M2, M1)))
            for a in Ms.sorted_worlds()
            for b in Mt.sorted_worlds()
        ]
        for v in (Variant(1, 1), Variant(2, 1)):
            passing = []
            for mask in range(1 << len(cross)):
                rel = Asimulation(
                    frozenset(p for i, p in enumerate(cross) if mask >> i & 1)
                )
                verdict = check_asimulation(M1, t, M2, u, v, rel)
                if all(x.condition == "elem" for x in verdict.violations):
                    passing.append(rel.relA)
            for i in range(0, len(passing), 7):
                for j in range(0, len(passing), 11):
                    union = Asimulation(passing[i] | passing[j])
                    verdict = check_asimulation(M1, t, M2, u, v, union)
                    assert all(x.condition == "elem" for x in verdict.violations)


# -- distinguishing formulas -------------------------------------------------


def test_distinguish_by_atom():
    M1 = KripkeStructure(["t"], valuation={1: ["t"]})
    M2 = KripkeStructure(["u"])
    for v in VARIANTS:
        assert distinguishing_formula(M1, "t", M2, "u", v, 2) == Prop(1)


def test_distinguish_identical_models_absent():
    M = KripkeStructure(["w", "v"], relR=[("w", "v")], valuation={1: ["v"]})
    for v in VARIANTS:
        assert distinguishing_formula(M, "w", M, "w", v, 5) is None


def test_distinguish_diamond_bottom_under_clause_two():
    M1 = KripkeStructure(["t"])
    M2 = KripkeStructure(["u", "u2"], relR=[("u", "u2")])
    from asimkit.syntax import Bottom, Diamond

    for v in (Variant(1, 2), Variant(2, 2)):
        f = distinguishing_formula(M1, "t", M2, "u", v, 4)
        assert f == Diamond(Bottom())
        assert eval_modal(M1, "t", f, v) and not eval_modal(M2, "u", f, v)


def test_distinguish_result_always_verified():
    rng = random.Random(99)
    for _ in range(40):
        M1 = random_model(rng.randint(1, 4), rng.uniform(0.1, 0.6), 2, seed=rng.getrandbits(32))
        M2 = random_model(rng.randint(1, 4), rng.uniform(0.1, 0.6), 2, seed=rng.getrandbits(32))
        t = rng.choice(M1.sorted_worlds())
        u = rng.choice(M2.sorted_worlds())
        v = VARIANTS[rng.randrange(4)]
        f = distinguishing_formula(M1, t, M2, u, v, 4)
        if f is not None:
            assert eval_modal(M1, t, f, v)
            assert not eval_modal(M2, u, f, v)


def test_distinguish_depth_zero_atoms_only():
    M1 = KripkeStructure(["t", "s"], relR=[("t", "s")], valuation={2: ["t"]})
    M2 = KripkeStructure(["u"])
    f = distinguishing_formula(M1, "t", M2, "u", Variant(1, 1), 0)
    assert f == Prop(2)


# -- interchange -------------------------------------------------------------


def test_relation_json_round_trip():
    rel = Asimulation(
        _pairs(("12", "a", "b"), ("21", "b", "a")), _pairs(("12", "a", "b"))
    )
    assert asim_from_dict(asim_to_dict(rel)) == rel
    plain = Asimulation(_pairs(("12", "a", "b")))
    assert asim_from_dict(asim_to_dict(plain)) == plain


def test_seq_relation_json_round_trip():
    rel = SeqAsimulation(
        _seqs(("12", ["a", "c"], ["b", "d"])), _seqs(("21", ["b"], ["a"]))
    )
    assert seq_asim_from_dict(seq_asim_to_dict(rel)) == rel


def test_relation_file_round_trip(tmp_path):
    rel = Asimulation(_pairs(("12", "a", "b")))
    p = tmp_path / "rel.json"
    dump_asimulation(rel, str(p))
    assert load_asimulation(str(p)) == rel


def test_relation_doc_rejects_unknown_keys():
    with pytest.raises(ValueError):
        asim_from_dict({"relA": [{"dir": "12", "from": "a", "to": "b", "x": 1}]})
    with pytest.raises(ValueError):
        asim_from_dict({"relA": [], "bogus": []})


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_maximal_agrees_with_distinguishing_search(seed):
    rng = random.Random(seed)
    M1 = random_model(rng.randint(1, 3), rng.uniform(0.1, 0.6), 1, seed=rng.getrandbits(32))
    M2 = random_model(rng.randint(1, 3), rng.uniform(0.1, 0.6), 1, seed=rng.getrandbits(32))
    t = rng.choice(M1.sorted_worlds())
    u = rng.choice(M2.sorted_worlds())
    v = VARIANTS[rng.randrange(4)]
    _, root = maximal_asimulation(M1, t, M2, u, v)
    f = distinguishing_formula(M1, t, M2, u, v, 5)
    if root:
        assert f is None, format_modal(f)
    else:
        assert f is not None
