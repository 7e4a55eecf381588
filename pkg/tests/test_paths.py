import pytest
from hypothesis import given
from hypothesis import strategies as st

from schutzen.errors import ConstructionError, SearchExhausted
from schutzen.paths import (DGEdge, DGPath, arrow_down, arrow_up, cancel_inverses, compose,
                            edge_endpoints, path_search, square, validate_path)
from schutzen.words import MonoidPresentation

P = MonoidPresentation.from_pairs("a", [("aaaa", "a")])
R = P.rules[0]
A = (0,)


def aw(n):
    return (0,) * n


def test_edge_endpoints():
    e = DGEdge((), R, 1, ())
    assert edge_endpoints(e) == (aw(4), aw(1))
    f = DGEdge(A, R, 1, A)
    assert edge_endpoints(f) == (aw(6), aw(3))
    assert edge_endpoints(f.inverse()) == (aw(3), aw(6))


def test_act():
    e = DGEdge((), R, 1, ())
    p = DGPath.of(e)
    assert p.act() == p
    assert e.act(A) == DGEdge(A, R, 1, ())
    q = path_search(P, aw(7), aw(1))
    assert p.then(DGPath.empty(aw(1))).act(A, A) == p.act(A, A)
    assert q.act(A, ()).iota == aw(8)


def test_bad_junction_rejected():
    e = DGEdge((), R, 1, ())
    with pytest.raises(ConstructionError):
        DGPath(aw(4), (e, e))


def test_square():
    e1 = DGEdge((), R, 1, ())
    e2 = DGEdge((), R, -1, ())
    s = square(e1, e2)
    assert len(s) == 4 and s.closed
    assert s.iota == e1.iota + e2.iota
    assert square(e1, e1).closed
    assert validate_path(s, P)


def test_arrows_units_and_endpoints():
    p = path_search(P, aw(7), aw(1))
    q = DGPath.of(DGEdge((), R, -1, ()))
    v = aw(2)
    assert arrow_down(p, DGPath.empty(v)) == p.act((), v)
    assert arrow_down(DGPath.empty(v), q) == q.act(v, ())
    pq = arrow_down(p, q)
    assert pq.iota == p.iota + q.iota and pq.tau == p.tau + q.tau
    assert arrow_down(p, q).inverse() == arrow_up(p.inverse(), q.inverse())
    assert arrow_up(p, q).inverse() == arrow_down(p.inverse(), q.inverse())


def test_arrow_associative():
    p = path_search(P, aw(7), aw(1))
    q = DGPath.of(DGEdge((), R, -1, ()))
    r = path_search(P, aw(5), aw(2))
    assert arrow_down(arrow_down(p, q), r) == arrow_down(p, arrow_down(q, r))
    assert arrow_up(arrow_up(p, q), r) == arrow_up(p, arrow_up(q, r))


def test_path_search_examples():
    p = path_search(P, aw(4), aw(1))
    assert p.edges == (DGEdge((), R, 1, ()),)
    assert len(path_search(P, aw(7), aw(1))) == 2
    with pytest.raises(SearchExhausted):
        path_search(P, aw(2), aw(1))


def test_path_search_node_cap():
    with pytest.raises(SearchExhausted):
        path_search(P, aw(7), aw(1), max_nodes=1)


def test_cancel_inverses():
    e = DGEdge(A, R, 1, ())
    p = compose(DGPath.of(e), DGPath.of(e.inverse()), DGPath.of(e))
    assert cancel_inverses(p) == DGPath.of(e)
    assert cancel_inverses(p.then(p.inverse())) == DGPath.empty(p.iota)


@given(st.integers(1, 9), st.integers(1, 9))
def test_search_is_valid_path(n, m):
    if (n - 1) % 3 != (m - 1) % 3 or (n == 0) != (m == 0):
        return
    p = path_search(P, aw(n), aw(m), max_len=max(n, m) + 4)
    assert validate_path(p, P)
    assert p.iota == aw(n) and p.tau == aw(m)
    assert p.inverse().inverse() == p
