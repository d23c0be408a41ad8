"""Clause systems, first-order evaluation, and the shared vector engine."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from asimkit.kripke import KripkeStructure, random_model
from asimkit.semantics import VARIANTS, Variant, _VectorSemantics, eval_fol, eval_modal
from asimkit.syntax import parse_fol, parse_modal, random_modal_formula


def test_variant_validation():
    with pytest.raises(ValueError):
        Variant(0, 1)
    with pytest.raises(ValueError):
        Variant(1, 3)
    assert Variant.from_code("21") == Variant(2, 1)
    assert Variant(1, 2).code == "12"
    with pytest.raises(ValueError):
        Variant.from_code("13")


def test_variants_order():
    assert tuple(v.code for v in VARIANTS) == ("11", "12", "21", "22")


# two-point structure exercising every clause
#   a --R--> b,  a --Rb--> b,  a --Rd--> b,  p1 at b only
_M = KripkeStructure(
    ["a", "b"],
    relR=[("a", "b")],
    relBox=[("a", "b")],
    relDia=[("a", "b")],
    valuation={1: ["b"]},
)


def test_atoms_and_bottom():
    for v in VARIANTS:
        assert not eval_modal(_M, "a", parse_modal("p1"), v)
        assert eval_modal(_M, "b", parse_modal("p1"), v)
        assert not eval_modal(_M, "a", parse_modal("false"), v)


def test_implication_quantifies_over_r():
    f = parse_modal("p1 -> false")
    for v in VARIANTS:
        # at a: successor b satisfies p1, so the implication fails there
        assert not eval_modal(_M, "a", f, v)
        # at b: no R-successors, vacuously true, whatever holds at b itself
        assert eval_modal(_M, "b", f, v)


def test_implication_not_reflexive():
    # p1 -> p2 at b is vacuously true even though p1 holds and p2 fails at b:
    # the clause looks only at R-successors and R is not assumed reflexive
    f = parse_modal("p1 -> p2")
    for v in VARIANTS:
        assert eval_modal(_M, "b", f, v)


def test_box_clause_one():
    f = parse_modal("box p1")
    for v in (Variant(1, 1), Variant(1, 2)):
        assert eval_modal(_M, "a", f, v)  # only Rb-successor is b
        assert eval_modal(_M, "b", f, v)  # vacuous


def test_box_clause_two():
    f = parse_modal("box p1")
    M = KripkeStructure(
        ["a", "b", "c"],
        relR=[("a", "b")],
        relBox=[("b", "c")],
        valuation={1: []},
    )
    for v in (Variant(2, 1), Variant(2, 2)):
        # a's R-successor b has Rb-successor c where p1 fails
        assert not eval_modal(M, "a", f, v)
        # direct Rb-successors of a are irrelevant under clause 2
        M2 = KripkeStructure(["a", "c"], relBox=[("a", "c")])
        assert eval_modal(M2, "a", f, v)


def test_diamond_clause_one():
    f = parse_modal("dia p1")
    for v in (Variant(1, 1), Variant(2, 1)):
        assert eval_modal(_M, "a", f, v)
        assert not eval_modal(_M, "b", f, v)


def test_diamond_clause_two():
    f = parse_modal("dia p1")
    M = KripkeStructure(
        ["a", "b", "c"],
        relR=[("a", "b")],
        relDia=[("b", "c")],
        valuation={1: ["c"]},
    )
    for v in (Variant(1, 2), Variant(2, 2)):
        assert eval_modal(M, "a", f, v)
        # drop the witness: the R-successor b now has no Rd-successor
        M2 = KripkeStructure(["a", "b"], relR=[("a", "b")])
        assert not eval_modal(M2, "a", f, v)


def test_diamond_bottom_vacuous_under_clause_two():
    # an isolated world has no R-successors, so clause 2 holds vacuously
    M = KripkeStructure(["w"])
    f = parse_modal("dia false")
    for v in (Variant(1, 2), Variant(2, 2)):
        assert eval_modal(M, "w", f, v)
    for v in (Variant(1, 1), Variant(2, 1)):
        assert not eval_modal(M, "w", f, v)


def test_eval_modal_rejects_unknown_world():
    with pytest.raises(ValueError):
        eval_modal(_M, "zz", parse_modal("p1"), Variant(1, 1))


def test_eval_fol_atoms():
    assert eval_fol(_M, {"x": "b"}, parse_fol("P1(x)"))
    assert not eval_fol(_M, {"x": "a"}, parse_fol("P1(x)"))
    assert eval_fol(_M, {"x": "a", "y": "b"}, parse_fol("R(x,y)"))
    assert not eval_fol(_M, {"x": "b", "y": "a"}, parse_fol("R(x,y)"))


def test_eval_fol_quantifiers():
    assert eval_fol(_M, {}, parse_fol("forall x. forall y. R(x,y) -> P1(y)"))
    assert eval_fol(_M, {}, parse_fol("exists x. Rd(x,x) | P1(x)"))
    assert not eval_fol(_M, {}, parse_fol("exists x. R(x,x)"))


def test_eval_fol_shadowing():
    # inner forall x rebinds; the outer binding must not leak through
    f = parse_fol("exists x. P1(x) & (forall x. P1(x) -> P1(x))")
    assert eval_fol(_M, {}, f)


def test_eval_fol_unbound_variable_errors():
    with pytest.raises(ValueError):
        eval_fol(_M, {}, parse_fol("P1(x)"))
    with pytest.raises(ValueError):
        eval_fol(_M, {"x": "a"}, parse_fol("R(x,y)"))


def test_eval_fol_env_value_must_be_world():
    with pytest.raises(ValueError):
        eval_fol(_M, {"x": "nope"}, parse_fol("P1(x)"))


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_vector_engine_matches_pointwise_evaluation(seed):
    rng = random.Random(seed)
    M1 = random_model(rng.randint(1, 4), rng.uniform(0.1, 0.6), 2, seed=rng.getrandbits(32))
    M2 = random_model(rng.randint(1, 4), rng.uniform(0.1, 0.6), 2, seed=rng.getrandbits(32))
    f = random_modal_formula(3, (1, 2), rng)
    engine = _VectorSemantics((M1, M2))
    for v in VARIANTS:
        vec = engine.vector(f, v)
        for mi, M in enumerate((M1, M2)):
            for w in M.sorted_worlds():
                assert engine.truth(vec, mi, w) == eval_modal(M, w, f, v)
