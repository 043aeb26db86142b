import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessberg.errors import UnsupportedTypeError
from hessberg.hessfn import enumerate_all, enumerate_sub, to_ideal
from hessberg.rootsystem import (
    LieType,
    build_root_table,
    chain_lengths,
    covering_ok,
    exponents,
    height,
    is_lower_ideal,
    parabolic_weyl_order,
    positive_root_count,
    simple_roots,
    weyl_group_order,
)

TYPES = [LieType("A", n) for n in range(2, 6)] + [
    LieType(f, n) for f in ("B", "C") for n in range(1, 5)
] + [LieType("D", n) for n in range(2, 6)] + [LieType("G", 3)]


def test_parse_labels():
    assert LieType.parse("A4") == LieType("A", 5)
    assert LieType.parse("d4") == LieType("D", 4)
    assert LieType.parse("G2") == LieType("G", 3)
    assert LieType("A", 5).label == "A4"
    assert str(LieType("G", 3)) == "G2"


@pytest.mark.parametrize(
    "family,rank",
    [("E", 6), ("F", 4), ("Q", 3), ("A", 0), ("D", 1), ("G", 2)],
)
def test_unsupported_types(family, rank):
    with pytest.raises(UnsupportedTypeError):
        LieType(family, rank)


def test_exceptional_message_names_scope():
    with pytest.raises(UnsupportedTypeError, match="not reproduced"):
        LieType.parse("E7")


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_chains_partition_positive_roots(t):
    table = build_root_table(t)
    assert len(table.roots()) == positive_root_count(t)
    assert tuple(len(c) for c in table.chains) == chain_lengths(t)
    assert covering_ok(table)


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_heights_are_positive(t):
    table = build_root_table(t)
    for root in table.roots():
        assert height(root, table) >= 1
    assert all(height(s, table) == 1 for s in simple_roots(table))


def test_g2_heights():
    table = build_root_table(LieType("G", 3))
    assert height(table.root(2, 3), table) == 1
    assert height(table.root(1, 6), table) == 5
    assert exponents(table) == (5, 1)


def test_type_a_highest_root():
    table = build_root_table(LieType("A", 5))
    assert table.root(1, 5).coeffs == (1, 0, 0, 0, -1)
    assert height(table.root(1, 5), table) == 4


def test_root_lookup():
    table = build_root_table(LieType("D", 4))
    assert table.root(4, 5).coeffs == (0, 0, 1, 1)
    assert table.find((1, 1, 0, 0)).col == 6
    assert table.find((1, 1, 1, 1)) is None
    assert table.root(1, 2) in table
    with pytest.raises(IndexError):
        table.root(1, 7)
    with pytest.raises(IndexError):
        table.chain(5)


@pytest.mark.parametrize(
    "t,order",
    [
        (LieType("A", 5), 120),
        (LieType("B", 3), 48),
        (LieType("C", 3), 48),
        (LieType("D", 2), 4),
        (LieType("D", 3), 24),
        (LieType("D", 4), 192),
        (LieType("G", 3), 12),
    ],
    ids=str,
)
def test_weyl_group_order(t, order):
    assert weyl_group_order(build_root_table(t)) == order


def test_parabolic_orders():
    table = build_root_table(LieType("A", 3))
    assert parabolic_weyl_order(table, []) == 1
    assert parabolic_weyl_order(table, [(1, 2)]) == 2
    assert parabolic_weyl_order(table, [(1, 2), (2, 3)]) == 6
    d4 = build_root_table(LieType("D", 4))
    assert parabolic_weyl_order(d4, [(1, 2), (4, 5)]) == 4


def test_lower_ideals():
    table = build_root_table(LieType("A", 3))
    assert is_lower_ideal(table, [(1, 2), (2, 3), (1, 3)])
    assert is_lower_ideal(table, [(2, 3)])
    assert not is_lower_ideal(table, [(1, 3)])
    assert not is_lower_ideal(table, [(1, 4)])


@pytest.mark.parametrize(
    "t",
    [LieType("A", n) for n in range(2, 7)]
    + [LieType(f, n) for f in ("B", "C") for n in range(1, 7)]
    + [LieType("D", n) for n in range(2, 7)]
    + [LieType("G", 3)],
    ids=str,
)
def test_height_is_column_offset(t):
    table = build_root_table(t)
    for i, chain in enumerate(table.chains, start=1):
        for j in range(i + 1, i + len(chain) + 1):
            assert height(table.root(i, j), table) == j - i, (i, j)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_parabolic_order_divides_along_inclusion(data):
    t = data.draw(st.sampled_from([LieType("A", 6), LieType("B", 4), LieType("C", 4), LieType("D", 5), LieType("G", 3)]))
    table = build_root_table(t)
    h = data.draw(st.sampled_from(enumerate_all(t)))
    g = data.draw(st.sampled_from(enumerate_sub(h)))
    assert parabolic_weyl_order(table, to_ideal(h)) % parabolic_weyl_order(table, to_ideal(g)) == 0
