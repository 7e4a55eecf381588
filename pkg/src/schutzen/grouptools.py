"""Finite groups from monoid presentations, and a small isomorphism test."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .engine import MonoidUniverse, enumerate_universe, knuth_bendix
from .errors import NotAGroup, OrderTooLarge
from .green import PermGroup
from .words import MonoidPresentation, Rule, Word

MAX_ISO_ORDER = 512


@dataclass(frozen=True)
class FiniteGroupTable:
    order: int
    mult: Tuple[Tuple[int, ...], ...]
    inv: Tuple[int, ...]
    element_words: Tuple[Word, ...]
    universe: Optional[MonoidUniverse] = None

    def element(self, w: Word) -> int:
        if self.universe is None:
            raise ValueError("table has no word structure")
        return self.universe.element(w)

    def inverse_word(self, w: Word) -> Word:
        """Normal form (shortlex-least word) of the inverse of ``w``."""
        return self.element_words[self.inv[self.element(w)]]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mult[y][x]
            k += 1
        return k


def enumerate_group(pres: MonoidPresentation, max_rules: int = 2000,
                    cap: int = 10_000) -> FiniteGroupTable:
    rules = [r for r in pres.rules if r.lhs != r.rhs]
    clean = MonoidPresentation(pres.alphabet, tuple(Rule(r.lhs, r.rhs, k) for k, r in enumerate(rules)))
    u = enumerate_universe(knuth_bendix(clean, max_rules=max_rules), cap=cap)
    n = len(u)
    mult = tuple(tuple(u.multiply(x, y) for y in range(n)) for x in range(n))
    inv = []
    for x in range(n):
        y = next((y for y in range(n) if mult[x][y] == 0), None)
        if y is None or mult[y][x] != 0:
            raise NotAGroup(f"element {pres.format_word(u.word(x))} has no two-sided inverse")
        inv.append(y)
    return FiniteGroupTable(n, mult, tuple(inv), u.elements, u)


def table_from_perm_group(g: PermGroup) -> FiniteGroupTable:
    elems = list(g.elements)
    ident = tuple(range(g.degree))
    elems.remove(ident)
    elems.insert(0, ident)
    where = {p: k for k, p in enumerate(elems)}
    mult = tuple(tuple(where[PermGroup.compose(s, t)] for t in elems) for s in elems)
    inv = tuple(row.index(0) for row in mult)
    return FiniteGroupTable(len(elems), mult, inv, ())


def table_from_mult(mult: Sequence[Sequence[int]], identity: int = 0) -> FiniteGroupTable:
    """Relabel an arbitrary Cayley table so the identity is 0."""
    n = len(mult)
    order = [identity] + [x for x in range(n) if x != identity]
    where = {x: k for k, x in enumerate(order)}
    m = tuple(tuple(where[mult[x][y]] for y in order) for x in order)
    inv = tuple(row.index(0) for row in m)
    return FiniteGroupTable(n, m, inv, ())


def _as_table(g):
    return table_from_perm_group(g) if isinstance(g, PermGroup) else g


def _generating_set(t: FiniteGroupTable) -> List[int]:
    gens: List[int] = []
    span = {0}
    for x in range(t.order):
        if x in span:
            continue
        gens.append(x)
        span = _closure(t, gens)
    return gens


def _closure(t, gens):
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t.mult[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _extend(t1, t2, gens, images):
    """Extend a generator assignment to a full map; None if not a homomorphism."""
    f = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, im in zip(gens, images):
                y = t1.mult[x][g]
                fy = t2.mult[f[x]][im]
                if y in f:
                    if f[y] != fy:
                        return None
                else:
                    f[y] = fy
                    nxt.append(y)
        frontier = nxt
    if len(set(f.values())) != t1.order:
        return None
    for x in range(t1.order):
        for y in range(t1.order):
            if f[t1.mult[x][y]] != t2.mult[f[x]][f[y]]:
                return None
    return f


def isomorphic(g1, g2) -> bool:
    t1, t2 = _as_table(g1), _as_table(g2)
    if max(t1.order, t2.order) > MAX_ISO_ORDER:
        raise OrderTooLarge(f"isomorphism test limited to order {MAX_ISO_ORDER}")
    if t1.order != t2.order:
        return False
    o1 = [t1.element_order(x) for x in range(t1.order)]
    o2 = [t2.element_order(x) for x in range(t2.order)]
    if Counter(o1) != Counter(o2):
        return False
    gens = _generating_set(t1)
    candidates = [[y for y in range(t2.order) if o2[y] == o1[g]] for g in gens]

    def search(k, images):
        if k == len(gens):
            return _extend(t1, t2, gens, images) is not None
        for y in candidates[k]:
            if search(k + 1, images + [y]):
                return True
        return False

    return search(0, [])
