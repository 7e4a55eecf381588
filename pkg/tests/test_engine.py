import random
from itertools import product

import pytest

from schutzen.corpus import CORPUS, corpus_presentation
from schutzen.engine import (critical_circuits, enumerate_universe, equal, knuth_bendix, reduce)
from schutzen.errors import CapExceeded, LimitExceeded
from schutzen.paths import validate_path
from schutzen.words import MonoidPresentation

from conftest import SEED
from oracle import monoid_table


def pres(letters, pairs):
    return MonoidPresentation.from_pairs(letters, pairs)


def plain(name):
    letters, pairs = CORPUS[name]
    return letters, [(u.replace("1", ""), v.replace("1", "")) for u, v in pairs]


A4 = pres("a", [("aaaa", "a")])


def test_reduce_examples():
    cs = knuth_bendix(A4)
    assert reduce((0,) * 5, cs) == (0, 0)
    assert reduce((0,), cs) == (0,)
    assert reduce((0,) * 7, cs) == (0,)


def all_normal_forms(w, rules):
    """Every irreducible word reachable by some reduction order."""
    out, seen, stack = set(), {w}, [w]
    while stack:
        x = stack.pop()
        moved = False
        for r in rules:
            n = len(r.lhs)
            for k in range(len(x) - n + 1):
                if x[k:k + n] == r.lhs:
                    moved = True
                    y = x[:k] + r.rhs + x[k + n:]
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        if not moved:
            out.add(x)
    return out


def test_a7_unique_normal_form_by_brute_force():
    cs = knuth_bendix(A4)
    assert all_normal_forms((0,) * 7, cs.oriented_rules) == {(0,)}


def test_completion_examples():
    assert [(r.lhs, r.rhs) for r in knuth_bendix(A4).oriented_rules] == [((0,) * 4, (0,))]
    cs = knuth_bendix(pres("a", [("aa", "a")]))
    assert [(r.lhs, r.rhs) for r in cs.oriented_rules] == [((0, 0), (0,))]
    z3 = knuth_bendix(pres("ab", [("ab", "1"), ("ba", "1"), ("aaa", "1")]))
    assert len(enumerate_universe(z3)) == 3


def test_completion_deterministic():
    p = corpus_presentation("rectband")
    assert knuth_bendix(p) == knuth_bendix(p)


def test_completion_limits():
    # free commutative-ish monoid with a non-terminating completion under shortlex
    p = pres("ab", [("aba", "bab")])
    with pytest.raises(LimitExceeded):
        knuth_bendix(p, max_rules=20, max_word_len=12)
    with pytest.raises(ValueError):
        knuth_bendix(A4, max_rules=0)


def test_enumerate_examples():
    u = enumerate_universe(knuth_bendix(A4), cap=10)
    assert u.elements == ((), (0,), (0, 0), (0, 0, 0))
    assert len(enumerate_universe(knuth_bendix(pres("a", [("aa", "a")])), cap=10)) == 2
    with pytest.raises(CapExceeded):
        enumerate_universe(knuth_bendix(A4), cap=3)


def test_trivial_monoid():
    u = enumerate_universe(knuth_bendix(pres("", [])))
    assert u.elements == ((),)


def test_equal_examples():
    cs = knuth_bendix(A4)
    assert equal((0,) * 4, (0,), cs)
    assert not equal((0, 0), (0,), cs)
    assert equal((), (), cs)


def test_circuit_counts():
    assert len(critical_circuits(knuth_bendix(A4))) == 3
    assert len(critical_circuits(knuth_bendix(pres("a", [("aa", "a")])))) == 1
    disjoint = pres("abcd", [("ab", "a"), ("cd", "c")])
    assert critical_circuits(knuth_bendix(disjoint)) == []


def test_circuits_for_a4_sit_in_a5_a6_a7():
    tops = sorted(len(c.path.base) for c in critical_circuits(knuth_bendix(A4)))
    assert tops == [5, 6, 7]


def test_circuits_closed_and_valid(corpus_name):
    cs = knuth_bendix(corpus_presentation(corpus_name))
    for c in critical_circuits(cs):
        p = c.path
        assert p.closed
        assert validate_path(p, cs.presentation)
        assert c.resolution[0].tau == c.resolution[1].tau == cs.reduce(p.base)


def test_universe_matches_brute_force(corpus_name):
    letters, pairs = plain(corpus_name)
    elems, mult = monoid_table(letters, pairs)
    u = enumerate_universe(knuth_bendix(corpus_presentation(corpus_name)))
    assert len(u) == len(elems)
    # same multiplication up to the bijection given by normal forms
    fw = corpus_presentation(corpus_name).format_word
    ours = {fw(w).replace("1", ""): k for k, w in enumerate(u.elements)}
    for x, y in product(range(len(elems)), repeat=2):
        xs, ys = elems[x], elems[y]
        assert ours[elems[mult[x][y]]] == u.multiply(ours[xs], ours[ys])


def test_congruence_preserved(corpus_name):
    p = corpus_presentation(corpus_name)
    cs = knuth_bendix(p)
    for r in p.rules:
        assert reduce(r.lhs, cs) == reduce(r.rhs, cs)
    for r in cs.oriented_rules:
        assert (len(r.lhs), r.lhs) > (len(r.rhs), r.rhs)


def test_confluence_exhaustive_short_words(corpus_name):
    cs = knuth_bendix(corpus_presentation(corpus_name))
    n = len(cs.alphabet)
    for k in range(7):
        for w in product(range(n), repeat=k):
            assert all_normal_forms(w, cs.oriented_rules) == {cs.reduce(w)}


def test_confluence_random_orders(corpus_name):
    cs = knuth_bendix(corpus_presentation(corpus_name))
    rng = random.Random(SEED)
    n = len(cs.alphabet)
    for _ in range(1000):
        w = tuple(rng.randrange(n) for _ in range(rng.randint(0, 10)))
        x = w
        while True:
            spots = [(r, k) for r in cs.oriented_rules for k in range(len(x) - len(r.lhs) + 1)
                     if x[k:k + len(r.lhs)] == r.lhs]
            if not spots:
                break
            r, k = rng.choice(spots)
            x = x[:k] + r.rhs + x[k + len(r.lhs):]
        assert x == cs.reduce(w)


def test_cayley_consistency(corpus_name):
    u = enumerate_universe(knuth_bendix(corpus_presentation(corpus_name)))
    cs = u.system
    for x in range(len(u)):
        for a, b in product(range(u.ngens), repeat=2):
            y = u.right_cayley[u.right_cayley[x][a]][b]
            assert u.elements[y] == cs.reduce(u.elements[x] + (a, b))
            assert u.elements[u.left_cayley[a][x]] == cs.reduce((a,) + u.elements[x])
