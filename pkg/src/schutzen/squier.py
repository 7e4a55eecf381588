"""Transport of derivation-graph paths between the presentation 𝒫 of S and
the presentation 𝒬 = ⟨B|U⟩, and the homotopy base Y1 ∪ Y2 ∪ Y3 for 𝒬.

Paths over 𝒫 live on words over A; paths over 𝒬 live on words over B and
use the rule ids of ``SchutzPresentation.q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ConstructionError, PreconditionViolated, SearchExhausted
from .grouptools import FiniteGroupTable, enumerate_group
from .paths import (DGEdge, DGPath, arrow_down, compose, elementary, path_search)
from .schutz import SchutzPresentation, kappa, phi, phi_omega, pi, psi
from .words import EMPTY, MonoidPresentation, Word

DEFAULT_PATH_CAP = 200_000


def phi_edge(lam: int, f: DGEdge, j: int, sp: SchutzPresentation) -> DGEdge:
    """φ(λ, κ(f, j)) for an edge f = (α, r, ε, β) over 𝒫."""
    d = sp.data
    star = d.star
    start = f.iota
    t = star.act(start, j)
    if t == 0:
        raise PreconditionViolated("i", "ιf∗j = 0")
    if d.lam.act(lam, kappa(start, j, d)) == 0:
        raise PreconditionViolated("ii", "λ·κ(ιf, j) = 0")
    if not d.h_lambda_contained_in(lam, t):
        raise PreconditionViolated("iii", "H_λ is not contained in S·r_{ιf∗j}")
    alpha, rule, eps, beta = f.left, f.rule, f.sign, f.right
    side = rule.side(eps)
    j2 = star.act(beta, j)
    lam2 = d.lam.act(lam, kappa(alpha, star.act(side + beta, j), d))
    left = phi(lam, kappa(alpha, star.act(side + beta, j), d), d)
    right = phi(d.lam.act(lam, kappa(alpha + side, j2, d)), kappa(beta, j, d), d)
    qrule = sp.rule_for(("R2", lam2, rule.id, j2))
    return DGEdge(left, qrule, eps, right)


def phi_path(lam: int, p: DGPath, j: int, sp: SchutzPresentation) -> DGPath:
    d = sp.data
    t = d.star.act(p.iota, j)
    if t == 0:
        raise PreconditionViolated("i", "ιP∗j = 0")
    if not d.h_lambda_contained_in(lam, t):
        raise PreconditionViolated("iii", "H_λ is not contained in S·r_{ιP∗j}")
    base = phi(lam, kappa(p.iota, j, d), d)
    return DGPath(base, tuple(phi_edge(lam, f, j, sp) for f in p.edges))


def phi_of(p: DGPath, sp: SchutzPresentation) -> DGPath:
    """The shorthand φ(P) = φ(1, κ(P, η))."""
    return phi_path(1, p, sp.data.star.eta, sp)


class CanonicalPaths:
    """The fixed paths P[b], P[w], P[u,v] over 𝒫 and the group-side data
    W, ŷ, D_y, D*_y over 𝒬.  Every search is a BFS capped at ``path_cap`` vertices."""

    def __init__(self, sp: SchutzPresentation, pres: Optional[MonoidPresentation] = None,
                 path_cap: int = DEFAULT_PATH_CAP, group: Optional[FiniteGroupTable] = None):
        self.sp = sp
        self.d = sp.data
        self.pres = sp.source if pres is None else pres
        self.path_cap = path_cap
        self._group = group
        self._P_w: Dict[Word, DGPath] = {EMPTY: DGPath.empty(self.d.h)}
        self.P_b: Dict[int, DGPath] = {}
        self.P_uv: Dict[int, DGPath] = {}
        for k in range(len(self.d.generators)):
            self.P_b[k] = self._search(pi((k,), self.d) + self.d.h, self.d.h + psi((k,), self.d),
                                       f"P[b] for {sp.generators[k]}")
        self.W: List[Word] = []
        self.hat: Dict[Word, Word] = {}
        self.D: Dict[Word, DGPath] = {}
        self.D_star: Dict[Word, DGPath] = {}
        self._built_inverses = False

    def _search(self, start, goal, what, pres=None):
        pres = self.pres if pres is None else pres
        try:
            return path_search(pres, start, goal, max_nodes=self.path_cap)
        except SearchExhausted as exc:
            raise SearchExhausted(f"{what}: {exc}") from None

    @property
    def group(self) -> FiniteGroupTable:
        if self._group is None:
            self._group = enumerate_group(self.sp.q)
        return self._group

    def P(self, w: Word) -> DGPath:
        """P[w'b] = (π(w')·P[b]) ∘ (P[w']·ψ(b)), from π(w)h to hψ(w)."""
        w = tuple(w)
        got = self._P_w.get(w)
        if got is None:
            head, b = w[:-1], w[-1]
            got = (self.P_b[b].act(pi(head, self.d), EMPTY)
                   .then(self.P(head).act(EMPTY, psi((b,), self.d))))
            self._P_w[w] = got
        return got

    def P_rel(self, rule_id: int) -> DGPath:
        """P[u,v] from π(u)h to π(v)h."""
        got = self.P_uv.get(rule_id)
        if got is None:
            rel = self.sp.q.rules[rule_id]
            h = self.d.h
            got = self._search(pi(rel.lhs, self.d) + h, pi(rel.rhs, self.d) + h,
                               f"P[u,v] for relation {rule_id}")
            self.P_uv[rule_id] = got
        return got

    def build_inverses(self):
        if self._built_inverses:
            return
        d = self.d
        seen = set()
        for j in d.star.j_ids:
            if d.star.act(d.h, j) == 0:
                continue
            k = kappa(d.h, j, d)
            if d.lam.act(1, k) == 0:
                continue
            y = phi(1, k, d)
            if y in seen:
                continue
            seen.add(y)
            self.W.append(y)
        for y in self.W:
            yh = self.group.inverse_word(y)
            self.hat[y] = yh
            self.D[y] = self._search(y + yh, EMPTY, "D_y", self.sp.q)
            self.D_star[y] = self._search(yh + y, EMPTY, "D*_y", self.sp.q)
        self._built_inverses = True


def build_W_and_inverses(cp: CanonicalPaths):
    cp.build_inverses()
    return cp.W, cp.hat, cp.D, cp.D_star


def theta(e: DGEdge, cp: CanonicalPaths) -> DGPath:
    """θ(E) = π(w₁)·[(π(u)·P[w₂]) ∘ (P[u,v]·ψ(w₂)) ∘ (π(v)·P[w₂]⁻¹)]."""
    if e.sign == -1:
        return theta(e.inverse(), cp).inverse()
    d = cp.d
    w1, rel, w2 = e.left, e.rule, e.right
    Pw2 = cp.P(w2)
    inner = compose(Pw2.act(pi(rel.lhs, d), EMPTY),
                    cp.P_rel(rel.id).act(EMPTY, psi(w2, d)),
                    Pw2.inverse().act(pi(rel.rhs, d), EMPTY))
    return inner.act(pi(w1, d), EMPTY)


def theta_path(p: DGPath, cp: CanonicalPaths) -> DGPath:
    d = cp.d
    out = DGPath.empty(pi(p.iota, d) + d.h)
    for e in p.edges:
        out = out.then(theta(e, cp))
    return out


def h_edge(sp: SchutzPresentation) -> DGEdge:
    """ℍ: the elementary R4 edge from 1 to φ(1, κ(h, η))."""
    return elementary(sp.rule_for(("R4",)), 1)


def b_edge(k: int, sp: SchutzPresentation) -> DGEdge:
    """𝔹_b: the elementary R3 edge from b to φ_ω(π(b))."""
    lam, a = sp.data.generators[k]
    return elementary(sp.rule_for(("R3", lam, a)), 1)


def lambda_prime_path(w: Word, sp: SchutzPresentation) -> DGPath:
    """Λ'_w = 𝔹_{b₁}↓…↓𝔹_{b_k}, from w to φ_ω(π(w))."""
    out = DGPath.empty(EMPTY)
    for k in w:
        out = arrow_down(out, DGPath.of(b_edge(k, sp)))
    return out


def lambda_path(w: Word, sp: SchutzPresentation) -> Tuple[DGPath, DGPath]:
    """(Λ_w, Λ'_w) with Λ_w = Λ'_w ↓ ℍ."""
    prime = lambda_prime_path(tuple(w), sp)
    return arrow_down(prime, DGPath.of(h_edge(sp))), prime


def z_path(e: DGEdge, cp: CanonicalPaths) -> DGPath:
    """E ∘ Λ_{τE} ∘ φ(θ(E))⁻¹ ∘ Λ_{ιE}⁻¹, closed at ιE."""
    sp = cp.sp
    return compose(DGPath.of(e), lambda_path(e.tau, sp)[0],
                   phi_of(theta(e, cp), sp).inverse(), lambda_path(e.iota, sp)[0].inverse())


@dataclass
class HomotopyBase:
    presentation: MonoidPresentation
    members: List[DGPath] = field(default_factory=list)
    tags: List[str] = field(default_factory=list)

    def add(self, p: DGPath, tag: str):
        self.members.append(p)
        self.tags.append(tag)

    def by_tag(self, tag):
        return [p for p, t in zip(self.members, self.tags) if t == tag]

    def __len__(self):
        return len(self.members)

    def all_closed(self) -> bool:
        return all(p.closed for p in self.members)


def _dedup(paths):
    return list(dict.fromkeys(paths))


def build_Y1(X: Sequence[DGPath], sp: SchutzPresentation) -> List[DGPath]:
    """φ(λ', κ(P, j')) for P in X over every realizable pair (λ', j')."""
    d = sp.data
    out = []
    for P in X:
        if not P.closed:
            raise ConstructionError("homotopy base member is not closed")
        for j in d.star.j_ids:
            t = d.star.act(P.iota, j)
            if t == 0:
                continue
            for lam in d.lam.lambda_ids:
                if not d.h_lambda_contained_in(lam, t):
                    continue
                out.append(phi_path(lam, P, j, sp))
    return _dedup(out)


def build_Y2(cp: CanonicalPaths) -> List[DGPath]:
    """𝕐_y = (D_y⁻¹·y) ∘ (y·D*_y), closed at y."""
    cp.build_inverses()
    out = []
    for y in cp.W:
        out.append(cp.D[y].inverse().act(EMPTY, y).then(cp.D_star[y].act(y, EMPTY)))
    return _dedup(out)


def reachable_j(sp: SchutzPresentation) -> List[int]:
    """Closure of {η} under j ↦ ψ(b)∗j."""
    d = sp.data
    seen = [d.star.eta]
    k = 0
    while k < len(seen):
        j = seen[k]
        k += 1
        for b in range(len(d.generators)):
            t = d.star.act(psi((b,), d), j)
            if t != 0 and t not in seen:
                seen.append(t)
    return sorted(seen)


def build_Y3(cp: CanonicalPaths) -> List[DGPath]:
    """One closed path per relation u=v of 𝒬, sign ε and reachable j.

    With (s, t) = (u, v) for ε = +1 and (v, u) for ε = -1, and
    y = φ(1, κ(h, j)), ℚ = φ(1, κ(P[u,v]^ε, j))·ŷ, the member is
    Λ'_s⁻¹ ∘ A^ε ∘ Λ'_t ∘ (φ_ω(π(t))·D_y⁻¹) ∘ ℚ⁻¹ ∘ (φ_ω(π(s))·D_y).
    """
    cp.build_inverses()
    sp, d = cp.sp, cp.d
    out = []
    for j in reachable_j(sp):
        y = phi(1, kappa(d.h, j, d), d)
        if y not in cp.hat:
            raise ConstructionError("reachable index has no inverse data")
        yh, D = cp.hat[y], cp.D[y]
        for rel in sp.q.rules:
            for eps in (1, -1):
                s, t = (rel.lhs, rel.rhs) if eps == 1 else (rel.rhs, rel.lhs)
                P = cp.P_rel(rel.id)
                P = P if eps == 1 else P.inverse()
                Q = phi_path(1, P, j, sp).act(EMPTY, yh)
                ws = phi_omega(pi(s, d), d)
                wt = phi_omega(pi(t, d), d)
                member = compose(lambda_prime_path(s, sp).inverse(),
                                 DGPath.of(elementary(rel, eps)),
                                 lambda_prime_path(t, sp),
                                 D.inverse().act(wt, EMPTY),
                                 Q.inverse(),
                                 D.act(ws, EMPTY))
                out.append(member)
    return _dedup(out)


def build_homotopy_base(sp: SchutzPresentation, X: Sequence[DGPath],
                        path_cap: int = DEFAULT_PATH_CAP,
                        group: Optional[FiniteGroupTable] = None) -> Tuple[HomotopyBase, CanonicalPaths]:
    cp = CanonicalPaths(sp, path_cap=path_cap, group=group)
    base = HomotopyBase(sp.q)
    for p in build_Y1(X, sp):
        base.add(p, "Y1")
    for p in build_Y2(cp):
        base.add(p, "Y2")
    for p in build_Y3(cp):
        base.add(p, "Y3")
    return base, cp
