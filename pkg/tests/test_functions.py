"""Simple functions: construction, level sets, pointwise algebra."""

from fractions import Fraction

import pytest

from choquetrn import (
    ExtReal,
    INF,
    SimpleFunction,
    ZERO,
    additive_measure,
    build_space,
    constant_function,
    equal_ae,
    function_from_values,
    indicator_function,
    is_comonotone,
)


@pytest.fixture
def space():
    return build_space(["a", "b", "c"])


def test_function_from_values(space):
    f = function_from_values(space, {"a": 1, "b": "1/2", "c": 0})
    assert f("a") == 1
    assert f("b") == Fraction(1, 2)
    with pytest.raises(ValueError):
        function_from_values(space, {"a": 1})  # missing atoms


def test_block_constancy_enforced():
    space = build_space(["a", "b"], partition=[["a", "b"]])
    with pytest.raises(ValueError):
        function_from_values(space, {"a": 1, "b": 2})
    f = function_from_values(space, {"a": 1, "b": 1})
    assert f("b") == 1


def test_level_sets(space):
    f = function_from_values(space, {"a": 2, "b": 1, "c": 0})
    assert f.level_set(1).atom_names() == ("a", "b")
    assert f.level_set(1, strict=True).atom_names() == ("a",)
    assert f.level_set(0).is_full
    assert f.level_set(0, strict=True).atom_names() == ("a", "b")


def test_infinity_set(space):
    f = function_from_values(space, {"a": "inf", "b": 1, "c": 0})
    assert f.infinity_set.atom_names() == ("a",)
    assert not f.is_finite
    assert f.distinct_values() == (ZERO, ExtReal(1), INF)


def test_cap_and_excess_are_comonotone_and_sum_to_f(space):
    f = function_from_values(space, {"a": 3, "b": "3/2", "c": 0})
    c = ExtReal(2)
    lower = f.cap(c)
    upper = f.excess(c)
    assert is_comonotone(lower, upper).holds
    assert lower + upper == f
    assert lower("a") == 2 and upper("a") == 1
    assert lower("b") == Fraction(3, 2) and upper("b") == ZERO


def test_restrict(space):
    f = function_from_values(space, {"a": 1, "b": 2, "c": 3})
    A = space.make_set(["a", "c"])
    g = f.restrict(A)
    assert g("a") == 1 and g("b") == ZERO and g("c") == 3


def test_constant_and_indicator(space):
    c = constant_function(space, "5/2")
    assert all(c(a) == Fraction(5, 2) for a in space.atoms)
    A = space.make_set(["b"])
    chi = indicator_function(A)
    assert chi("b") == 1 and chi("a") == ZERO


def test_equal_ae(space):
    nu = additive_measure(space, {"a": 1, "b": 0, "c": 1})
    f = function_from_values(space, {"a": 1, "b": 5, "c": 2})
    g = function_from_values(space, {"a": 1, "b": 7, "c": 2})
    cmp_ = equal_ae(f, g, nu)
    assert cmp_.equal
    assert cmp_.diff_set.atom_names() == ("b",)
    assert cmp_.diff_measure == ZERO
    h = function_from_values(space, {"a": 2, "b": 5, "c": 2})
    assert not equal_ae(f, h, nu).equal
