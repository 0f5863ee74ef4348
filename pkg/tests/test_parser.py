import pytest
from hypothesis import given
from hypothesis import strategies as st

from knot_obstruct.parser import ExpressionSyntaxError, ExpressionValidationError, parse, render
from knot_obstruct.polycore import KnotSum, TorusKnot, coprime_pairs


def test_double_t45():
    assert parse("T(4,5) # T(4,5)") == KnotSum.of((4, 5), (4, 5))


def test_signs():
    K = parse("-T(3,4)#-T(4,5)#T(5,6)")
    assert [k.sign for k in K] == [-1, -1, 1]
    assert [(k.p, k.q) for k in K] == [(3, 4), (4, 5), (5, 6)]


def test_whitespace():
    assert parse("  - T ( 2 , 3 )  #T(2,5) ") == KnotSum.of((2, 3, -1), (2, 5))


@pytest.mark.parametrize("expr,offset", [("T(4,6)", 0), ("T(5,3)", 0), ("T(1,3)", 0), ("T(2,3) # -T(4,6)", 10)])
def test_validation_errors(expr, offset):
    with pytest.raises(ExpressionValidationError) as info:
        parse(expr)
    assert info.value.offset == offset


@pytest.mark.parametrize("expr,offset", [
    ("", 0),
    ("T(2,3", 5),
    ("T(2;3)", 3),
    ("T(2,3) #", 8),
    ("T(2,3) T(2,5)", 7),
    ("S(2,3)", 0),
    ("T(,3)", 2),
    ("T(2,3)#", 7),
])
def test_syntax_errors(expr, offset):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse(expr)
    assert info.value.offset == offset


def test_offsets_are_bytes():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("é T(2,3)")
    assert info.value.offset == 0
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("T(2,3) # é")
    assert info.value.offset == 9
    assert info.value.caret().splitlines()[1] == " " * 9 + "^"


sums = st.lists(
    st.tuples(st.sampled_from(coprime_pairs(40)), st.sampled_from((1, -1))), min_size=1, max_size=6,
).map(lambda xs: KnotSum(TorusKnot(p, q, s) for (p, q), s in xs))


@given(sums)
def test_round_trip(K):
    assert parse(render(K)) == K
    assert render(parse(render(K))) == render(K)
