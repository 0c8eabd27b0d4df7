import pytest

from rookchar import errors
from rookchar.notation import format_element, parse
from rookchar.rook import IDENTITY, KILL, compose, cycle, enumerate_rn, epsilon, from_map


@pytest.mark.parametrize(
    "text, expected",
    [
        ("(1 2 3)", cycle((1, 2, 3))),
        ("(1 2)k{2}", from_map([(1, KILL), (2, 1)])),
        ("e", IDENTITY),
        ("(1 2)'", cycle((1, 2))),
        ("(1 2 3)'", cycle((3, 2, 1))),
        ("k{1,3}", epsilon({1, 3})),
        ("(1 2)(2 3)", compose(cycle((1, 2)), cycle((2, 3)))),
        (" (1  2) k{ 2 } ", from_map([(1, KILL), (2, 1)])),
        ("(5)", IDENTITY),
        ("((1 2)k{2})'", None),
    ],
)
def test_parse(text, expected):
    if expected is None:
        with pytest.raises(errors.ExprSyntaxError):
            parse(text)
    else:
        assert parse(text) == expected


def test_star_of_product():
    r = parse("(1 2)k{2}")
    assert parse("(1 2)k{2}'") == compose(cycle((1, 2)), epsilon({2}))
    assert parse("k{2}'(1 2)'") == compose(epsilon({2}), cycle((1, 2)))
    assert r != parse("k{2}(1 2)")


@pytest.mark.parametrize(
    "text, position",
    [("(1 1)", 3), ("k{0}", 2), ("(1 2", 4), ("()", 0), ("x", 0), ("", 0), ("(1,2)", 2), ("k{1 2}", 4)],
)
def test_errors_carry_position(text, position):
    with pytest.raises(errors.RookError) as info:
        parse(text)
    assert info.value.position == position


def test_error_kinds():
    with pytest.raises(errors.DuplicatePoint):
        parse("(1 1)")
    with pytest.raises(errors.EmptyCycle):
        parse("()")
    with pytest.raises(errors.ExprSyntaxError):
        parse("k{0}")


def test_format_examples():
    assert format_element(IDENTITY) == "e"
    assert format_element(epsilon({2})) == "(2)k{2}"
    assert format_element(parse("(1 2)k{2}")) == "(2 1)k{2}"
    assert format_element(parse("(3 4 5)(1 2)")) == "(1 2)(3 4 5)"


@pytest.mark.parametrize("n", [3, 4])
def test_round_trip_and_injective(n):
    elements = enumerate_rn(n)
    strings = [format_element(r) for r in elements]
    assert len(set(strings)) == len(elements)
    for r, s in zip(elements, strings):
        assert parse(s) == r
