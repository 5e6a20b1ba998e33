"""Expression grammar and the canonical text form."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iwafit import (
    GroupRingSpec,
    ParseError,
    const,
    delta,
    norm_element,
    one,
    tvar,
)
from iwafit.parser import element_to_text, parse_element, tokenize

from conftest import random_element


@pytest.fixture
def spec():
    return GroupRingSpec(3, 3, (3, 9), 2, 4)


def test_precedence_and_associativity(spec):
    d1, t1 = delta(spec, 1), tvar(spec, 1)
    assert parse_element("d1 + t1 * t1", spec) == d1 + t1 * t1
    assert parse_element("(d1 + t1) * t1", spec) == (d1 + t1) * t1
    assert parse_element("d1 * t1 ^ 2", spec) == d1 * t1**2
    assert parse_element("2 ^ 3 ^ 1", spec) == const(spec, 8)
    assert parse_element("1 - 2 - 3", spec) == const(spec, -4)
    assert parse_element("-d1 + 1", spec) == one(spec) - d1
    assert parse_element("- d1 * t1", spec) == -(d1 * t1)


def test_sugar_names(spec):
    assert parse_element("tau1", spec) == delta(spec, 1) - one(spec)
    assert parse_element("tau_2", spec) == delta(spec, 2) - one(spec)
    assert parse_element("N()", spec) == norm_element(spec)
    assert parse_element("N(2)", spec) == norm_element(spec, [2])
    assert parse_element("N(1, 2)", spec) == norm_element(spec, [1, 2])


def test_coefficients_reduce_mod_pk(spec):
    assert parse_element("28", spec) == one(spec)
    assert parse_element("27 * d1", spec) == const(spec, 0)


def test_error_positions(spec):
    with pytest.raises(ParseError) as err:
        parse_element("d1 + $", spec)
    assert err.value.line == 1 and err.value.column == 6
    with pytest.raises(ParseError) as err:
        parse_element("d1 +\n+ t1", spec)
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_element("d3", spec)  # group index out of range
    with pytest.raises(ParseError):
        parse_element("t3", spec)  # T index out of range
    with pytest.raises(ParseError):
        parse_element("N(3)", spec)
    with pytest.raises(ParseError):
        parse_element("d1 t1", spec)  # missing operator
    with pytest.raises(ParseError):
        parse_element("t1 ^ t1", spec)  # exponent must be an integer
    with pytest.raises(ParseError):
        parse_element("frob", spec)  # unknown identifier
    with pytest.raises(ParseError):
        parse_element("(d1", spec)  # unbalanced parenthesis


def test_tokenizer_tracks_lines():
    toks = tokenize("a +\n b")
    assert [(t.text, t.line) for t in toks[:-1]] == [("a", 1), ("+", 1), ("b", 2)]


def test_text_round_trip(spec, rng):
    for _ in range(50):
        x = random_element(spec, rng)
        text = element_to_text(x)
        assert parse_element(text, spec) == x


def test_text_is_canonical(spec):
    t1 = tvar(spec, 1)
    tau1 = delta(spec, 1) - one(spec)
    # equal elements print identically regardless of how they were built
    a = tau1 * t1 + t1 * tau1
    b = (delta(spec, 1) - one(spec)) * t1 * 2
    assert element_to_text(a) == element_to_text(b)
    assert element_to_text(tau1) == "tau1"
    assert element_to_text(t1 * t1) == "t1^2"
    assert element_to_text(const(spec, 0)) == "0"
    assert element_to_text(one(spec) + t1) == "1 + t1"


def test_text_orders_by_degree(spec):
    x = tvar(spec, 1) ** 2 + delta(spec, 1) - one(spec) + const(spec, 5)
    assert element_to_text(x) == "5 + tau1 + t1^2"


_SMALL = GroupRingSpec(3, 2, (3,), 1, 3)


@given(st.lists(st.integers(min_value=0, max_value=8),
                min_size=_SMALL.size, max_size=_SMALL.size))
def test_round_trip_property(vec):
    from iwafit import from_vector
    import numpy as np

    x = from_vector(_SMALL, np.array(vec))
    assert parse_element(element_to_text(x), _SMALL) == x
