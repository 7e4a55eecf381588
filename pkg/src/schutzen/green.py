"""Green's relations of an enumerated monoid, the two actions used by the
Schützenberger construction, and the directly computed Schützenberger group.

Class ids are 0-based and relabelled so that classes are ordered by their
least element index; in particular the R-, L- and H-class of the identity
all have id 0.  Indices of the ∗-action are R-class ids shifted by one, so
that the R-class of the identity is index 1 and 0 is free to mean "killed".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .engine import MonoidUniverse
from .errors import NotPointwiseStabilizer
from .words import Word


def _strong_components(n: int, succ: Sequence[Sequence[int]]) -> List[int]:
    rows, cols = [], []
    for x in range(n):
        for y in succ[x]:
            rows.append(x)
            cols.append(y)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="strong")
    # relabel by least member
    first: Dict[int, int] = {}
    out = []
    for lab in labels:
        out.append(first.setdefault(int(lab), len(first)))
    return out


def _partition(labels):
    classes: Dict[int, List[int]] = {}
    for x, c in enumerate(labels):
        classes.setdefault(c, []).append(x)
    return tuple(tuple(classes[c]) for c in range(len(classes)))


@dataclass(frozen=True)
class GreenStructure:
    r_class_of: Tuple[int, ...]
    l_class_of: Tuple[int, ...]
    h_class_of: Tuple[int, ...]
    r_classes: Tuple[Tuple[int, ...], ...]
    l_classes: Tuple[Tuple[int, ...], ...]
    h_classes: Tuple[Tuple[int, ...], ...]


def compute_green(u: MonoidUniverse) -> GreenStructure:
    n = len(u)
    right = [u.right_cayley[x] for x in range(n)]
    left = [[u.left_cayley[a][x] for a in range(u.ngens)] for x in range(n)]
    r = _strong_components(n, right)
    l = _strong_components(n, left)
    hid: Dict[Tuple[int, int], int] = {}
    h = [hid.setdefault((r[x], l[x]), len(hid)) for x in range(n)]
    return GreenStructure(tuple(r), tuple(l), tuple(h), _partition(r), _partition(l), _partition(h))


class Ideals:
    """Left-ideal membership ``x ∈ S·y`` via reachability in the left Cayley graph."""

    def __init__(self, u: MonoidUniverse):
        self.u = u
        self._cache: Dict[int, FrozenSet[int]] = {}

    def left_ideal(self, y: int) -> FrozenSet[int]:
        got = self._cache.get(y)
        if got is None:
            seen = {y}
            queue = deque([y])
            while queue:
                x = queue.popleft()
                for a in range(self.u.ngens):
                    z = self.u.left_cayley[a][x]
                    if z not in seen:
                        seen.add(z)
                        queue.append(z)
            got = self._cache[y] = frozenset(seen)
        return got

    def in_left_ideal(self, x: int, y: int) -> bool:
        return x in self.left_ideal(y)


@dataclass(frozen=True)
class LambdaAction:
    """λ ids are 1..n; ``classes[λ]`` is the H-class id of H_λ and 1 is H itself."""

    h_class: int
    r_class: int
    classes: Dict[int, int]
    table: Dict[Tuple[int, int], int]
    ngens: int

    @property
    def lambda_ids(self) -> Tuple[int, ...]:
        return tuple(sorted(self.classes))

    def act(self, lam: int, w: Word) -> int:
        for a in w:
            if lam == 0:
                return 0
            lam = self.table[(lam, a)]
        return lam


def lambda_action(u: MonoidUniverse, g: GreenStructure, H: int) -> LambdaAction:
    """Right action of S on the H-classes of the R-class containing H, plus 0."""
    x0 = g.h_classes[H][0]
    R = g.r_class_of[x0]
    others = sorted({g.h_class_of[x] for x in g.r_classes[R]} - {H},
                    key=lambda c: g.h_classes[c][0])
    classes = {1: H}
    for k, c in enumerate(others, start=2):
        classes[k] = c
    back = {c: lam for lam, c in classes.items()}
    table = {}
    for lam, c in classes.items():
        x = g.h_classes[c][0]
        for a in range(u.ngens):
            y = u.right_cayley[x][a]
            table[(lam, a)] = back[g.h_class_of[y]] if g.r_class_of[y] == R else 0
    return LambdaAction(H, R, classes, table, u.ngens)


@dataclass(frozen=True)
class StarAction:
    """Left action of S on R-classes, restricted to the inverse orbit I of R.

    Index ``i`` stands for R-class ``i - 1``; ``table[(a, i)]`` is 0 when the
    image leaves I.
    """

    i_ids: Tuple[int, ...]
    k_ids: Tuple[int, ...]
    j_ids: Tuple[int, ...]
    table: Dict[Tuple[int, int], int]
    one: int
    omega: int
    eta: int
    e_word: Word

    def act(self, w: Word, i: int) -> int:
        for a in reversed(w):
            if i == 0:
                return 0
            i = self.table[(a, i)]
        return i

    def name(self, i: int) -> str:
        """Display name listing every distinguished role of ``i``, e.g. ``1=η``."""
        roles = [n for n, k in (("1", self.one), ("η", self.eta), ("ω", self.omega)) if k == i]
        return "=".join(roles) if roles else f"R{i}"


def rclass_action(u: MonoidUniverse, g: GreenStructure):
    """``[a][r]`` = R-class of a·x for any x in R-class r."""
    reps = [cls[0] for cls in g.r_classes]
    return [[g.r_class_of[u.left_cayley[a][x]] for x in reps] for a in range(u.ngens)]


def star_action(u: MonoidUniverse, g: GreenStructure, H: int, e_word: Word,
                h_word: Optional[Word] = None) -> StarAction:
    h = g.h_classes[H][0] if h_word is None else u.element(h_word)
    if g.h_class_of[h] != H:
        raise ValueError("h does not lie in H")
    e = u.element(e_word)
    if u.multiply(h, e) != h:
        raise NotPointwiseStabilizer("the stabilizer word does not fix h: h·e ≠ h")
    act = rclass_action(u, g)
    nr = len(g.r_classes)
    omega_r = g.r_class_of[h]
    eta_r = g.r_class_of[e]
    # I: classes R' with w∗R' = R for some w
    pred: List[List[int]] = [[] for _ in range(nr)]
    for a in range(u.ngens):
        for r in range(nr):
            pred[act[a][r]].append(r)
    inv_orbit = _reach(omega_r, pred)
    succ = [[act[a][r] for a in range(u.ngens)] for r in range(nr)]
    orbit = _reach(eta_r, succ)
    i_ids = tuple(sorted(r + 1 for r in inv_orbit))
    k_ids = tuple(sorted(r + 1 for r in orbit))
    j_ids = tuple(sorted(set(i_ids) & set(k_ids)))
    table = {}
    for i in i_ids:
        for a in range(u.ngens):
            t = act[a][i - 1] + 1
            table[(a, i)] = t if t - 1 in inv_orbit else 0
    return StarAction(i_ids, k_ids, j_ids, table, 1, omega_r + 1, eta_r + 1, tuple(e_word))


def _reach(start, succ):
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in succ[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@dataclass(frozen=True)
class PermGroup:
    """Permutations of ``points`` (element indices of H), composed as right actions:
    ``compose(s, t)`` means apply s then t."""

    points: Tuple[int, ...]
    elements: Tuple[Tuple[int, ...], ...]
    generators: Tuple[Tuple[int, ...], ...] = field(default=())

    @property
    def degree(self):
        return len(self.points)

    @property
    def order(self):
        return len(self.elements)

    @staticmethod
    def compose(s, t):
        return tuple(t[s[k]] for k in range(len(s)))

    @classmethod
    def generated_by(cls, points, gens):
        n = len(points)
        ident = tuple(range(n))
        gens = tuple(dict.fromkeys(tuple(g) for g in gens))
        seen = {ident}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = cls.compose(x, s)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return cls(tuple(points), tuple(sorted(seen)), gens)


def schutz_direct(u: MonoidUniverse, g: GreenStructure, H: int) -> PermGroup:
    """Stab(H) acting on H by right multiplication, made faithful."""
    pts = g.h_classes[H]
    where = {x: k for k, x in enumerate(pts)}
    h0 = pts[0]
    perms = set()
    for s in range(len(u)):
        if g.h_class_of[u.multiply(h0, s)] != H:
            continue
        perms.add(tuple(where[u.multiply(x, s)] for x in pts))
    gens = sorted(perms)
    return PermGroup.generated_by(pts, gens)
