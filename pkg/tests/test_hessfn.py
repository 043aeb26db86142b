import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessberg.errors import ArityError, InvalidHessenbergFunctionError, NotLowerIdealError
from hessberg.hessfn import (
    HessFn,
    LowerIdeal,
    complex_dimension,
    covering_subfunctions,
    enumerate_all,
    enumerate_sub,
    flag,
    from_ideal,
    from_json,
    is_subfunction,
    make,
    minimal,
    parse_hessfn,
    peterson,
    to_ideal,
    to_json,
    validate,
)
from hessberg.rootsystem import LieType, build_root_table, is_lower_ideal, positive_root_count

C3 = LieType("C", 3)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)])
def test_type_a_counts_are_catalan(n, count):
    assert len(enumerate_all(LieType("A", n))) == count


@pytest.mark.parametrize(
    "t,count",
    [
        (LieType("B", 2), 6),
        (LieType("C", 2), 6),
        (LieType("B", 3), 20),
        (LieType("C", 3), 20),
        (LieType("D", 3), 14),
        (LieType("D", 4), 50),
        (LieType("G", 3), 8),
    ],
    ids=str,
)
def test_counts(t, count):
    funcs = enumerate_all(t)
    assert len(funcs) == count
    assert funcs == sorted(funcs)


def test_violations_are_labelled():
    report = validate(HessFn(LieType("D", 4), (5, 4, 3, 4)))
    assert not report.ok
    assert report.violations == ("D(3)", "D(5)")
    with pytest.raises(InvalidHessenbergFunctionError) as info:
        parse_hessfn("D4:5,4,3,4")
    assert info.value.violations == ["D(3)", "D(5)"]


def test_type_a_decreasing_is_rejected():
    assert validate(HessFn(LieType("A", 3), (3, 2, 3))).violations == ("A(1)",)
    assert validate(HessFn(LieType("A", 3), (2, 3, 4))).violations == ("A(2)",)


def test_arity():
    with pytest.raises(ArityError):
        parse_hessfn("A2:2,3")
    with pytest.raises(ValueError):
        parse_hessfn("D4 3,5,4,7")


def test_parse_and_json():
    h = parse_hessfn("D4:3,5,4,7")
    assert h.values == (3, 5, 4, 7)
    assert h(2) == 5
    assert h.label == "D4:3,5,4,7"
    assert to_json(h) == {"type": "D", "rank": 4, "h": [3, 5, 4, 7]}
    assert from_json(to_json(h)) == h


def test_distinguished_functions():
    d4 = LieType("D", 4)
    assert minimal(d4).values == (1, 2, 3, 4)
    assert flag(d4).values == (6, 5, 4, 7)
    assert peterson(d4).values == (2, 3, 4, 5)
    assert flag(LieType("A", 3)).values == (3, 3, 3)
    assert flag(LieType("G", 3)).values == (6, 3, 3)


@pytest.mark.parametrize("t", [LieType("A", 5), LieType("B", 3), LieType("D", 4), LieType("G", 3)], ids=str)
def test_flag_dimension_counts_roots(t):
    assert complex_dimension(flag(t)) == positive_root_count(t)
    assert complex_dimension(minimal(t)) == 0


def test_complex_dimension():
    assert complex_dimension(make(LieType("A", 5), (3, 5, 5, 5, 5))) == 8


@pytest.mark.parametrize("t", [LieType("B", 3), LieType("D", 4), LieType("G", 3)], ids=str)
def test_ideal_correspondence(t):
    table = build_root_table(t)
    for h in enumerate_all(t):
        ideal = to_ideal(h)
        assert is_lower_ideal(table, ideal.members)
        assert from_ideal(ideal, table) == h


def test_from_ideal_rejects_non_ideals():
    table = build_root_table(LieType("A", 3))
    with pytest.raises(NotLowerIdealError):
        from_ideal(LowerIdeal(frozenset({(1, 3)})), table)


def test_sub_functions():
    t = LieType("A", 4)
    assert enumerate_sub(flag(t)) == enumerate_all(t)
    assert enumerate_sub(minimal(t)) == [minimal(t)]
    h = make(t, (2, 4, 4, 4))
    subs = enumerate_sub(h)
    assert h in subs
    assert all(is_subfunction(g, h) for g in subs)
    size = len(to_ideal(h))
    assert all(len(to_ideal(g)) == size - 1 for g in covering_subfunctions(h))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(enumerate_all(C3)), st.sampled_from(enumerate_all(C3)))
def test_inclusion_matches_ideals(g, h):
    assert is_subfunction(g, h) == (to_ideal(g) <= to_ideal(h))
    if is_subfunction(g, h) and is_subfunction(h, g):
        assert g == h
