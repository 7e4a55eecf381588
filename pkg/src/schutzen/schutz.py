"""Representatives, the maps ψ, φ, κ, π and the presentation ⟨B|U⟩ of the
Schützenberger group of an H-class.

Words over B are tuples of generator indices; generator ``k`` is
``SchutzData.generators[k] = (λ, a)`` and prints as ``b[λ,a]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .engine import MonoidUniverse
from .errors import ActionKilled, ConstructionError, RepresentativeNotFound
from .green import (GreenStructure, Ideals, LambdaAction, StarAction, compute_green,
                    lambda_action, star_action)
from .words import EMPTY, Alphabet, MonoidPresentation, Rule, Word


def least_word(u: MonoidUniverse, start: int, pred: Callable[[int], bool]) -> Word:
    """Shortlex-least w with ``pred(start·w)``.

    Breadth-first search in letter order reaches each element first along its
    shortlex-least word, so the first hit is the answer.
    """
    if pred(start):
        return EMPTY
    parent = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for a in range(u.ngens):
            y = u.right_cayley[x][a]
            if y in parent:
                continue
            parent[y] = (x, a)
            if pred(y):
                w = []
                while parent[y] is not None:
                    y, b = parent[y]
                    w.append(b)
                return tuple(reversed(w))
            queue.append(y)
    raise RepresentativeNotFound("no word satisfies the defining condition")


@dataclass
class SchutzData:
    universe: MonoidUniverse
    green: GreenStructure
    H: int
    lam: LambdaAction
    star: StarAction
    h: Word
    e: Word
    p: Dict[int, Word]
    p_prime: Dict[int, Word]
    r: Dict[int, Word]
    kappa_base: Dict[Tuple[int, int], Word]
    pi_base: Dict[int, Word]
    generators: Tuple[Tuple[int, int], ...]
    ideals: Ideals

    @property
    def alphabet(self) -> Alphabet:
        return self.universe.gen_words

    @property
    def b_alphabet(self) -> Alphabet:
        letters = self.alphabet.letters
        return Alphabet(tuple(f"b[{lam},{letters[a]}]" for lam, a in self.generators))

    def gen_index(self, lam: int, a: int) -> int:
        return self._gen_index[(lam, a)]

    def __post_init__(self):
        self._gen_index = {g: k for k, g in enumerate(self.generators)}

    def elem(self, w: Word) -> int:
        return self.universe.element(w)

    def h_lambda_contained_in(self, lam: int, i: int) -> bool:
        """Is H_λ ⊆ S·r_i?  One point of H_λ suffices since left ideals are unions of L-classes."""
        x = self.green.h_classes[self.lam.classes[lam]][0]
        return self.ideals.in_left_ideal(x, self.elem(self.r[i]))


def choose_representatives(u: MonoidUniverse, g: Optional[GreenStructure], H: int,
                           e_word: Word = EMPTY, h_word: Optional[Word] = None) -> SchutzData:
    """Fix h, e, p_λ, p'_λ, r_i, κ(a,i) and π(b), each shortlex-least.

    ``h_word`` defaults to the normal form of the least element of H.  When
    ``e`` lies in the R-class of H it lies in H itself, and h is replaced by e
    so that the representative of that R-class can be both h and e.
    """
    g = compute_green(u) if g is None else g
    e_word = tuple(e_word)
    h_word = u.word(g.h_classes[H][0]) if h_word is None else tuple(h_word)
    if g.h_class_of[u.element(h_word)] != H:
        raise ValueError("h_word does not represent an element of H")
    star = star_action(u, g, H, e_word, h_word)
    if star.eta == star.omega:
        if g.h_class_of[u.element(e_word)] != H:
            raise ConstructionError("stabilizer word is R-related to h but not H-related")
        h_word = e_word
    lam = lambda_action(u, g, H)
    h = u.element(h_word)

    p: Dict[int, Word] = {}
    pp: Dict[int, Word] = {}
    for l, c in sorted(lam.classes.items()):
        if l == 1:
            p[l] = pp[l] = EMPTY
            continue
        p[l] = least_word(u, h, lambda y, c=c: g.h_class_of[y] == c)
        pp[l] = least_word(u, u.right_mul(h, p[l]), lambda y: y == h)

    r: Dict[int, Word] = {}
    for i in star.i_ids:
        if i == star.omega:
            r[i] = h_word
        elif i == star.eta:
            r[i] = e_word
        elif i == star.one:
            r[i] = EMPTY
        else:
            r[i] = u.word(g.r_classes[i - 1][0])

    kappa_base: Dict[Tuple[int, int], Word] = {}
    for i in star.i_ids:
        for a in range(u.ngens):
            t = star.table[(a, i)]
            if t == 0:
                continue
            target = u.element((a,) + r[i])
            kappa_base[(a, i)] = least_word(u, u.element(r[t]), lambda y, z=target: y == z)

    gens = tuple((l, a) for l in lam.lambda_ids for a in range(u.ngens)
                 if lam.table[(l, a)] != 0)
    d = SchutzData(u, g, H, lam, star, h_word, e_word, p, pp, r, kappa_base, {}, gens, Ideals(u))
    for k in range(len(gens)):
        target = u.element(h_word + psi((k,), d))
        d.pi_base[k] = least_word(u, 0, lambda y, z=target: u.multiply(y, h) == z)
    return d


def psi(w: Word, d: SchutzData) -> Word:
    """b[λ,a] ↦ p_λ a p'_{λ·a}, extended homomorphically."""
    out: List[int] = []
    for k in w:
        l, a = d.generators[k]
        out.extend(d.p[l])
        out.append(a)
        out.extend(d.p_prime[d.lam.table[(l, a)]])
    return tuple(out)


def phi(lam: int, w: Word, d: SchutzData) -> Word:
    """φ(λ, aw) = b[λ,a] φ(λ·a, w)."""
    out = []
    for a in w:
        if lam == 0:
            raise ActionKilled("λ·w = 0 along the word")
        nxt = d.lam.table[(lam, a)]
        if nxt == 0:
            raise ActionKilled("λ·w = 0 along the word")
        out.append(d.gen_index(lam, a))
        lam = nxt
    return tuple(out)


def kappa(w: Word, i: int, d: SchutzData) -> Word:
    """κ(a₁…a_k, i) = κ(a₁, a₂…a_k∗i) ⋯ κ(a_k, i)."""
    parts = []
    for a in reversed(w):
        if i == 0:
            raise ActionKilled("w∗i = 0")
        parts.append(d.kappa_base.get((a, i)))
        i = d.star.table[(a, i)]
        if i == 0:
            raise ActionKilled("w∗i = 0")
    out: List[int] = []
    for part in reversed(parts):
        out.extend(part)
    return tuple(out)


def pi(w: Word, d: SchutzData) -> Word:
    out: List[int] = []
    for k in w:
        out.extend(d.pi_base[k])
    return tuple(out)


def phi_omega(x: Word, d: SchutzData) -> Word:
    return phi(1, kappa(x, d.star.omega, d), d)


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    tags: Tuple[tuple, ...]

    @property
    def trivial(self):
        return self.lhs == self.rhs


@dataclass
class SchutzPresentation:
    """⟨B|U⟩ with every relation kept, trivial ones included; ``q`` is the same
    relations as a presentation, rule id = position in ``relations``."""

    data: SchutzData
    source: MonoidPresentation
    relations: List[Relation]
    q: MonoidPresentation
    by_tag: Dict[tuple, int]

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.q.alphabet.letters

    def nontrivial(self) -> List[Relation]:
        return [r for r in self.relations if not r.trivial]

    def rule_for(self, tag) -> Rule:
        try:
            return self.q.rules[self.by_tag[tag]]
        except KeyError:
            raise ConstructionError(f"no relation tagged {format_tag(tag, self.data)}") from None

    def format_word(self, w):
        return self.q.format_word(w)


def format_tag(tag, d: Optional[SchutzData] = None) -> str:
    kind = tag[0]
    name = d.star.name if d is not None else str
    letters = d.alphabet.letters if d is not None else None
    if kind == "R1":
        return f"R1(λ={tag[1]},rule={tag[2]})"
    if kind == "R2":
        return f"R2(λ={tag[1]},rule={tag[2]},j={name(tag[3])})"
    if kind == "R3":
        a = letters[tag[2]] if letters else tag[2]
        return f"R3(λ={tag[1]},a={a})"
    return "R4"


def build_presentation(d: SchutzData, pres: MonoidPresentation) -> SchutzPresentation:
    """Emit the families R1-R4 over the rules of ``pres`` (which must present S)."""
    raw: List[Tuple[Word, Word, tuple]] = []
    lam_ids = d.lam.lambda_ids
    for l in lam_ids:
        for rule in pres.rules:
            if d.lam.act(l, rule.lhs) != 0:
                raw.append((phi(l, rule.lhs, d), phi(l, rule.rhs, d), ("R1", l, rule.id)))
    for l in lam_ids:
        for j in d.star.j_ids:
            for rule in pres.rules:
                t = d.star.act(rule.lhs, j)
                if t == 0 or not d.h_lambda_contained_in(l, t):
                    continue
                lhs = phi(l, kappa(rule.lhs, j, d), d)
                rhs = phi(l, kappa(rule.rhs, j, d), d)
                raw.append((lhs, rhs, ("R2", l, rule.id, j)))
    for k, (l, a) in enumerate(d.generators):
        raw.append(((k,), phi_omega(pi((k,), d), d), ("R3", l, a)))
    raw.append((EMPTY, phi(1, kappa(d.h, d.star.eta, d), d), ("R4",)))

    order: Dict[Tuple[Word, Word], int] = {}
    tags: List[List[tuple]] = []
    pairs: List[Tuple[Word, Word]] = []
    by_tag: Dict[tuple, int] = {}
    for lhs, rhs, tag in raw:
        k = order.get((lhs, rhs))
        if k is None:
            k = order[(lhs, rhs)] = len(pairs)
            pairs.append((lhs, rhs))
            tags.append([])
        tags[k].append(tag)
        by_tag[tag] = k
    relations = [Relation(l, r, tuple(t)) for (l, r), t in zip(pairs, tags)]
    q = MonoidPresentation(d.b_alphabet, tuple(Rule(l, r, k) for k, (l, r) in enumerate(pairs)))
    return SchutzPresentation(d, pres, relations, q, by_tag)


def verify_relation(lhs: Word, rhs: Word, d: SchutzData) -> bool:
    return d.elem(d.h + psi(lhs, d)) == d.elem(d.h + psi(rhs, d))
