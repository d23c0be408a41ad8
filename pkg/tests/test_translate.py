import random

import pytest
from hypothesis import given, settings, strategies as st

from asimkit.semantics import VARIANTS, Variant
from asimkit.syntax import (
    And,
    Bottom,
    Box,
    Diamond,
    Implies,
    Or,
    Prop,
    degree,
    format_fol,
    free_vars,
    parse_fol,
    parse_modal,
    random_modal_formula,
)
from asimkit.translate import translate, translation_degree


def _st(text, code, var="x"):
    return format_fol(translate(parse_modal(text), Variant.from_code(code), var))


def test_box_clause_two_shape():
    expected = "forall y0. (R(x,y0) -> forall y1. (Rb(y0,y1) -> P1(y1)))"
    assert _st("box p1", "21") == expected
    assert _st("box p1", "22") == expected


def test_box_clause_one_shape():
    expected = "forall y0. (Rb(x,y0) -> P1(y0))"
    assert _st("box p1", "11") == expected
    assert _st("box p1", "12") == expected


def test_diamond_clause_one_shape():
    expected = "exists y0. (Rd(x,y0) & P1(y0))"
    assert _st("dia p1", "11") == expected
    assert _st("dia p1", "21") == expected


def test_diamond_clause_two_shape():
    expected = "forall y0. (R(x,y0) -> exists y1. (Rd(y0,y1) & P1(y1)))"
    assert _st("dia p1", "12") == expected
    assert _st("dia p1", "22") == expected


def test_implication_shape():
    for code in ("11", "12", "21", "22"):
        assert _st("p1 -> p2", code) == "forall y0. (R(x,y0) -> P1(y0) -> P2(y0))"


def test_bottom_and_lattice_are_homomorphic():
    for code in ("11", "22"):
        assert _st("false", code) == "false"
        assert _st("p1 & p2", code) == "P1(x) & P2(x)"
        assert _st("p1 | false", code) == "P1(x) | false"


def test_entry_variable_flows_through():
    assert _st("p1", "11", var="w") == "P1(w)"
    assert _st("box p1", "11", var="z9") == "forall y0. (Rb(z9,y0) -> P1(y0))"


def test_entry_variable_rejects_reserved_names():
    for bad in ("R", "Rb", "Rd", "P1", "false", "box", "dia", "forall", "exists", ""):
        with pytest.raises(ValueError):
            translate(Prop(1), Variant(1, 1), bad)


def test_fresh_variables_skip_entry_variable():
    out = _st("box p1", "11", var="y0")
    assert out == "forall y1. (Rb(y0,y1) -> P1(y1))"


def test_fresh_variables_allocated_preorder():
    # nested implication: outer guard takes y0, left child sits at y0,
    # the right child's own implication takes y1
    out = _st("p1 -> (p2 -> p3)", "11")
    assert out == (
        "forall y0. (R(x,y0) -> P1(y0) -> forall y1. (R(y0,y1) -> P2(y1) -> P3(y1)))"
    )


def test_shared_subterms_do_not_share_bound_variables():
    # the same subformula object appearing twice must get fresh variables
    # on each occurrence or the binder structure collapses
    sub = Implies(Prop(1), Prop(2))
    f = And(sub, sub)
    out = translate(f, Variant(1, 1), "x")
    text = format_fol(out)
    assert text.count("forall") == 2
    assert parse_fol(text) == out


def test_degree_examples():
    assert translation_degree(parse_modal("box p1"), Variant(2, 2)) == 2
    for code in ("11", "12", "21", "22"):
        assert translation_degree(parse_modal("p1 -> p2"), Variant.from_code(code)) == 1
    assert translation_degree(parse_modal("dia box p1"), Variant(1, 1)) == 2


def test_degree_closed_form_pieces():
    v11, v22 = Variant(1, 1), Variant(2, 2)
    assert translation_degree(Bottom(), v22) == 0
    assert translation_degree(Prop(3), v22) == 0
    assert translation_degree(And(Prop(1), Box(Prop(2))), v11) == 1
    assert translation_degree(Or(Box(Prop(1)), Diamond(Prop(2))), v22) == 2
    assert translation_degree(Implies(Box(Prop(1)), Prop(2)), v11) == 2


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=0, max_value=6))
def test_degree_law(seed, depth):
    f = random_modal_formula(depth, (1, 2, 3), random.Random(seed))
    for v in VARIANTS:
        assert degree(translate(f, v, "x")) == translation_degree(f, v)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=0, max_value=5))
def test_free_variable_set(seed, depth):
    f = random_modal_formula(depth, (1, 2), random.Random(seed))
    for v in VARIANTS:
        fv = free_vars(translate(f, v, "x"))
        if _mentions_more_than_lattice(f):
            assert fv == frozenset({"x"})
        else:
            assert fv == frozenset()


def _mentions_more_than_lattice(f):
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, (And, Or)):
            stack.extend((g.left, g.right))
        elif not isinstance(g, Bottom):
            return True
    return False
