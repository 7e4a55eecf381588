import itertools

import pytest

from schutzen.errors import CapExceeded, NotAGroup, OrderTooLarge
from schutzen.green import PermGroup
from schutzen.grouptools import enumerate_group, isomorphic, table_from_mult, table_from_perm_group
from schutzen.words import MonoidPresentation

from oracle import cyclic_group_table, klein_table


def cyc(n):
    return PermGroup.generated_by(tuple(range(n)), [tuple((k + 1) % n for k in range(n))])


def klein():
    return PermGroup.generated_by((0, 1, 2, 3), [(1, 0, 3, 2), (2, 3, 0, 1)])


def sym(n):
    return PermGroup.generated_by(tuple(range(n)), [(1, 0) + tuple(range(2, n)),
                                                    tuple(range(1, n)) + (0,)])


def test_z3_order():
    p = MonoidPresentation.from_pairs("b", [("bbbb", "b"), ("bbb", "1")])
    assert enumerate_group(p).order == 3


def test_trivial_and_infinite():
    assert enumerate_group(MonoidPresentation.from_pairs("b", [("b", "1")])).order == 1
    with pytest.raises(CapExceeded):
        enumerate_group(MonoidPresentation.from_pairs("b", []), cap=10)


def test_not_a_group():
    with pytest.raises(NotAGroup):
        enumerate_group(MonoidPresentation.from_pairs("b", [("bb", "b")]))


def test_trivial_relations_ignored():
    p = MonoidPresentation.from_pairs("b", [("b", "b"), ("bb", "1")])
    assert enumerate_group(p).order == 2


def test_inverse_words():
    g = enumerate_group(MonoidPresentation.from_pairs("b", [("bbb", "1")]))
    assert g.inverse_word((0,)) == (0, 0)
    assert g.inverse_word(()) == ()


def test_isomorphic_examples():
    z3 = enumerate_group(MonoidPresentation.from_pairs("b", [("bbb", "1")]))
    assert isomorphic(z3, cyc(3))
    assert isomorphic(table_from_mult([[0]]), cyc(1))
    assert not isomorphic(table_from_mult(cyclic_group_table(4)), klein())
    assert isomorphic(table_from_mult(klein_table()), klein())


def test_too_large():
    big = table_from_mult(cyclic_group_table(513))
    with pytest.raises(OrderTooLarge):
        isomorphic(big, big)


def test_associative_small_tables():
    for g in (cyc(5), klein(), sym(3), sym(4)):
        t = table_from_perm_group(g)
        for x, y, z in itertools.product(range(t.order), repeat=3):
            assert t.mult[t.mult[x][y]][z] == t.mult[x][t.mult[y][z]]


def test_reflexive_symmetric_on_small_groups():
    groups = [cyc(1), cyc(2), cyc(3), cyc(4), klein(), cyc(6), sym(3), cyc(8), sym(4),
              table_from_mult([[(a + b) % 2 * 12 + (x + y) % 12 for b in range(2) for y in range(12)]
                               for a in range(2) for x in range(12)])]
    for g in groups:
        assert isomorphic(g, g)
    for g, h in itertools.combinations(groups, 2):
        assert isomorphic(g, h) == isomorphic(h, g)
    assert not isomorphic(cyc(6), sym(3))
    assert not isomorphic(sym(4), groups[-1])
