"""Edges and paths of the derivation graph of a presentation.

An edge ``(left, rule, sign, right)`` rewrites ``left . side(sign) . right``
into ``left . side(-sign) . right``.  Paths are a base vertex plus a list of
edges; the empty path at ``v`` has no edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import ConstructionError, SearchExhausted
from .words import EMPTY, MonoidPresentation, Rule, Word


@dataclass(frozen=True)
class DGEdge:
    left: Word
    rule: Rule
    sign: int
    right: Word

    @property
    def iota(self) -> Word:
        return self.left + self.rule.side(self.sign) + self.right

    @property
    def tau(self) -> Word:
        return self.left + self.rule.side(-self.sign) + self.right

    def inverse(self) -> "DGEdge":
        return DGEdge(self.left, self.rule, -self.sign, self.right)

    def act(self, gamma: Word = EMPTY, delta: Word = EMPTY) -> "DGEdge":
        return DGEdge(tuple(gamma) + self.left, self.rule, self.sign, self.right + tuple(delta))

    @property
    def is_elementary(self):
        return not self.left and not self.right


def edge_endpoints(e: DGEdge) -> Tuple[Word, Word]:
    return e.iota, e.tau


def elementary(rule: Rule, sign: int = 1) -> DGEdge:
    return DGEdge(EMPTY, rule, sign, EMPTY)


@dataclass(frozen=True)
class DGPath:
    base: Word
    edges: Tuple[DGEdge, ...] = ()

    def __post_init__(self):
        v = self.base
        for k, e in enumerate(self.edges):
            if e.iota != v:
                raise ConstructionError(f"path edge {k} does not start where edge {k - 1} ends")
            v = e.tau

    @classmethod
    def empty(cls, v: Word) -> "DGPath":
        return cls(tuple(v), ())

    @classmethod
    def of(cls, *edges: DGEdge) -> "DGPath":
        if not edges:
            raise ValueError("use DGPath.empty for an empty path")
        return cls(edges[0].iota, tuple(edges))

    @property
    def iota(self) -> Word:
        return self.base

    @property
    def tau(self) -> Word:
        return self.edges[-1].tau if self.edges else self.base

    @property
    def closed(self) -> bool:
        return self.iota == self.tau

    def __len__(self):
        return len(self.edges)

    def inverse(self) -> "DGPath":
        return DGPath(self.tau, tuple(e.inverse() for e in reversed(self.edges)))

    def then(self, other: "DGPath") -> "DGPath":
        """Path product ``self ∘ other``."""
        if self.tau != other.iota:
            raise ConstructionError("cannot compose paths: endpoints differ")
        return DGPath(self.base, self.edges + other.edges)

    def act(self, gamma: Word = EMPTY, delta: Word = EMPTY) -> "DGPath":
        gamma, delta = tuple(gamma), tuple(delta)
        return DGPath(gamma + self.base + delta, tuple(e.act(gamma, delta) for e in self.edges))

    def vertices(self):
        out = [self.base]
        out.extend(e.tau for e in self.edges)
        return out


def compose(*paths: DGPath) -> DGPath:
    out = paths[0]
    for p in paths[1:]:
        out = out.then(p)
    return out


def validate_path(p: DGPath, pres: Optional[MonoidPresentation] = None) -> bool:
    """Literal audit: every edge's rule occurrence and every junction."""
    v = p.base
    for e in p.edges:
        if pres is not None:
            if e.rule.id >= len(pres.rules) or pres.rules[e.rule.id] != e.rule:
                return False
        if e.sign not in (1, -1) or e.iota != v:
            return False
        v = e.tau
    return True


def square(e1: DGEdge, e2: DGEdge) -> DGPath:
    """The 2-cell boundary of two disjoint rewrites ``[E1, E2]``."""
    return compose(
        DGPath.of(e1.act(EMPTY, e2.iota)),
        DGPath.of(e2.act(e1.tau, EMPTY)),
        DGPath.of(e1.inverse().act(EMPTY, e2.tau)),
        DGPath.of(e2.inverse().act(e1.iota, EMPTY)),
    )


def arrow_down(p: DGPath, q: DGPath) -> DGPath:
    return p.act(EMPTY, q.iota).then(q.act(p.tau, EMPTY))


def arrow_up(p: DGPath, q: DGPath) -> DGPath:
    return q.act(p.iota, EMPTY).then(p.act(EMPTY, q.tau))


def cancel_inverses(p: DGPath) -> DGPath:
    """Free reduction: delete adjacent ``e ∘ e⁻¹`` pairs."""
    stack = []
    for e in p.edges:
        if stack and stack[-1] == e.inverse():
            stack.pop()
        else:
            stack.append(e)
    return DGPath(p.base, tuple(stack))


def neighbours(pres: MonoidPresentation, w: Word):
    """All single rewrites of ``w``, ordered by (position, rule id, sign)."""
    for pos in range(len(w) + 1):
        for rule in pres.rules:
            if rule.lhs == rule.rhs:
                continue
            for sign in (1, -1):
                src = rule.side(sign)
                if w[pos:pos + len(src)] == src:
                    yield DGEdge(w[:pos], rule, sign, w[pos + len(src):])


def path_search(pres: MonoidPresentation, start: Word, goal: Word,
                max_len: Optional[int] = None, max_nodes: int = 200_000) -> DGPath:
    """Shortest path in the derivation graph from ``start`` to ``goal``.

    Breadth first over single rule applications, so the result is a shortest
    path; ties go to the earliest (position, rule id, sign).
    """
    start, goal = tuple(start), tuple(goal)
    if start == goal:
        return DGPath.empty(start)
    if max_len is None:
        longest = max((max(len(r.lhs), len(r.rhs)) for r in pres.rules), default=0)
        max_len = max(len(start), len(goal)) + longest
    parent = {start: None}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for e in neighbours(pres, w):
            t = e.tau
            if t in parent or len(t) > max_len:
                continue
            parent[t] = e
            if t == goal:
                edges = []
                while parent[t] is not None:
                    edge = parent[t]
                    edges.append(edge)
                    t = edge.iota
                return DGPath(start, tuple(reversed(edges)))
            if len(parent) > max_nodes:
                raise SearchExhausted(
                    f"path search exceeded {max_nodes} vertices "
                    f"({len(start)}-letter start, {len(goal)}-letter goal)")
            queue.append(t)
    raise SearchExhausted(f"no path within word length {max_len}")


def path_from_edges(base: Word, edges: Sequence[DGEdge]) -> DGPath:
    return DGPath(tuple(base), tuple(edges))
