"""Knuth-Bendix completion, normal forms, element enumeration, and the
critical-circuit homotopy base of a complete system."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import CapExceeded, ConstructionError, LimitExceeded
from .paths import DGEdge, DGPath, compose
from .words import EMPTY, Alphabet, MonoidPresentation, Rule, Word, shortlex_key

DEFAULT_MAX_RULES = 2000
DEFAULT_MAX_WORD_LEN = 64


class _Rewriter:
    """Leftmost-innermost rewriting with a fixed list of length-bounded rules."""

    def __init__(self, rules):
        self.rules = list(rules)
        self.by_lhs: Dict[Word, Rule] = {}
        for r in self.rules:
            self.by_lhs.setdefault(r.lhs, r)
        self.lengths = sorted({len(r.lhs) for r in self.rules})

    def _match(self, stack):
        best = None
        for k in self.lengths:
            if k > len(stack):
                break
            r = self.by_lhs.get(tuple(stack[len(stack) - k:]))
            if r is not None and (best is None or r.id < best.id):
                best = r
        return best

    def reduce(self, w: Word) -> Word:
        stack: List[int] = []
        todo = list(reversed(w))
        while todo:
            stack.append(todo.pop())
            r = self._match(stack)
            if r is not None:
                del stack[len(stack) - len(r.lhs):]
                todo.extend(reversed(r.rhs))
        return tuple(stack)

    def reduction_path(self, w: Word) -> DGPath:
        """The leftmost-innermost reduction of ``w`` as a positive path."""
        w = tuple(w)
        edges = []
        stack: List[int] = []
        todo = list(reversed(w))
        while todo:
            stack.append(todo.pop())
            r = self._match(stack)
            if r is not None:
                left = tuple(stack[:len(stack) - len(r.lhs)])
                right = tuple(reversed(todo))
                edges.append(DGEdge(left, r, 1, right))
                del stack[len(stack) - len(r.lhs):]
                todo.extend(reversed(r.rhs))
        return DGPath(w, tuple(edges))


@dataclass(frozen=True)
class CompleteSystem:
    alphabet: Alphabet
    oriented_rules: Tuple[Rule, ...]
    origin: Optional[MonoidPresentation] = None

    def __post_init__(self):
        object.__setattr__(self, "_rw", _Rewriter(self.oriented_rules))

    @property
    def presentation(self) -> MonoidPresentation:
        return MonoidPresentation(self.alphabet, self.oriented_rules)

    def reduce(self, w: Word) -> Word:
        return self._rw.reduce(tuple(w))

    def reduction_path(self, w: Word) -> DGPath:
        return self._rw.reduction_path(w)


def reduce(w: Word, cs: CompleteSystem) -> Word:
    return cs.reduce(w)


def equal(u: Word, v: Word, cs: CompleteSystem) -> bool:
    return cs.reduce(u) == cs.reduce(v)


def _orient(u, v):
    return (u, v) if shortlex_key(u) > shortlex_key(v) else (v, u)


def _contains(big, small):
    n = len(small)
    return any(big[i:i + n] == small for i in range(len(big) - n + 1))


def _overlaps(l1, l2, same):
    """Offsets k with a proper suffix of ``l1`` equal to a proper prefix of ``l2``."""
    top = min(len(l1), len(l2))
    for k in range(1, top):
        if l1[len(l1) - k:] == l2[:k]:
            yield k


def knuth_bendix(p: MonoidPresentation, max_rules: int = DEFAULT_MAX_RULES,
                 max_word_len: int = DEFAULT_MAX_WORD_LEN) -> CompleteSystem:
    """Complete ``p`` under shortlex with letter order = declaration order."""
    if max_rules <= 0 or max_word_len <= 0:
        raise ValueError("completion limits must be positive")
    rules: List[Tuple[Word, Word]] = []
    pending = deque((r.lhs, r.rhs) for r in p.rules)

    def rewriter():
        return _Rewriter([Rule(l, r, k) for k, (l, r) in enumerate(rules)])

    rw = rewriter()
    while True:
        while pending:
            u, v = pending.popleft()
            u, v = rw.reduce(u), rw.reduce(v)
            if u == v:
                continue
            lhs, rhs = _orient(u, v)
            if len(lhs) > max_word_len:
                raise LimitExceeded(f"completion produced a rule of length {len(lhs)}")
            kept = []
            for l, r in rules:
                if _contains(l, lhs):
                    pending.append((l, r))
                else:
                    kept.append((l, r))
            kept.append((lhs, rhs))
            rules = kept
            rw = rewriter()
            rules = [(l, rw.reduce(r)) for l, r in rules]
            rw = rewriter()
            if len(rules) > max_rules:
                raise LimitExceeded(f"completion exceeded {max_rules} rules")
        for l1, r1 in list(rules):
            for l2, r2 in list(rules):
                for k in _overlaps(l1, l2, l1 == l2):
                    a = rw.reduce(r1 + l2[k:])
                    b = rw.reduce(l1[:len(l1) - k] + r2)
                    if a != b:
                        pending.append((a, b))
        if not pending:
            break

    ordered = sorted(rules, key=lambda lr: (shortlex_key(lr[0]), shortlex_key(lr[1])))
    cs = CompleteSystem(p.alphabet, tuple(Rule(l, r, k) for k, (l, r) in enumerate(ordered)), p)
    for r in p.rules:
        if cs.reduce(r.lhs) != cs.reduce(r.rhs):
            raise ConstructionError("completion lost an input relation")
    return cs


@dataclass(frozen=True)
class MonoidUniverse:
    elements: Tuple[Word, ...]
    right_cayley: Tuple[Tuple[int, ...], ...]
    left_cayley: Tuple[Tuple[int, ...], ...]
    gen_words: Alphabet
    system: CompleteSystem

    def __post_init__(self):
        object.__setattr__(self, "_index", {w: k for k, w in enumerate(self.elements)})

    def __len__(self):
        return len(self.elements)

    @property
    def ngens(self):
        return len(self.gen_words)

    def element(self, w: Word) -> int:
        """Index of the element represented by ``w`` (walks the right Cayley graph)."""
        x = 0
        for a in w:
            x = self.right_cayley[x][a]
        return x

    def index_of_normal_form(self, w: Word) -> int:
        return self._index[tuple(w)]

    def right_mul(self, x: int, w: Word) -> int:
        for a in w:
            x = self.right_cayley[x][a]
        return x

    def left_mul(self, w: Word, x: int) -> int:
        for a in reversed(w):
            x = self.left_cayley[a][x]
        return x

    def multiply(self, x: int, y: int) -> int:
        return self.right_mul(x, self.elements[y])

    def word(self, x: int) -> Word:
        return self.elements[x]


def enumerate_universe(cs: CompleteSystem, cap: int = 10_000) -> MonoidUniverse:
    if cap <= 0:
        raise ValueError("cap must be positive")
    n = len(cs.alphabet)
    elements = [EMPTY]
    index = {EMPTY: 0}
    right = []
    queue = deque([0])
    while queue:
        x = queue.popleft()
        row = []
        for a in range(n):
            y = cs.reduce(elements[x] + (a,))
            k = index.get(y)
            if k is None:
                k = len(elements)
                if k >= cap:
                    raise CapExceeded(f"more than {cap} elements")
                index[y] = k
                elements.append(y)
                queue.append(k)
            row.append(k)
        right.append(tuple(row))
    left = tuple(tuple(index[cs.reduce((a,) + x)] for x in elements) for a in range(n))
    return MonoidUniverse(tuple(elements), tuple(right), left, cs.alphabet, cs)


@dataclass(frozen=True)
class CriticalCircuit:
    peak: Tuple[DGEdge, DGEdge]
    resolution: Tuple[DGPath, DGPath]

    @property
    def path(self) -> DGPath:
        """``E1 ∘ R1 ∘ R2⁻¹ ∘ E2⁻¹``, closed at the overlap word."""
        e1, e2 = self.peak
        r1, r2 = self.resolution
        return compose(DGPath.of(e1), r1, r2.inverse(), DGPath.of(e2.inverse()))


def critical_circuits(cs: CompleteSystem) -> List[CriticalCircuit]:
    out = []
    rules = cs.oriented_rules
    for ri in rules:
        for rj in rules:
            li, lj = ri.lhs, rj.lhs
            for k in _overlaps(li, lj, ri is rj):
                e1 = DGEdge(EMPTY, ri, 1, lj[k:])
                e2 = DGEdge(li[:len(li) - k], rj, 1, EMPTY)
                out.append(_circuit(cs, e1, e2))
            if ri is not rj and len(lj) <= len(li):
                for pos in range(len(li) - len(lj) + 1):
                    if li[pos:pos + len(lj)] == lj:
                        e1 = DGEdge(EMPTY, ri, 1, EMPTY)
                        e2 = DGEdge(li[:pos], rj, 1, li[pos + len(lj):])
                        out.append(_circuit(cs, e1, e2))
    return out


def _circuit(cs, e1, e2):
    r1 = cs.reduction_path(e1.tau)
    r2 = cs.reduction_path(e2.tau)
    if r1.tau != r2.tau:
        raise ConstructionError("critical peak does not resolve; system is not complete")
    return CriticalCircuit((e1, e2), (r1, r2))
