"""Executable versions of the identities the construction rests on.

Each check takes a :class:`SchutzData` and an iterable of instances and
returns a :class:`Tally`; an instance where a side is undefined (an action
hits 0) is counted as skipped, not failed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Tuple

from .errors import ActionKilled
from .schutz import SchutzData, SchutzPresentation, kappa, phi, pi, psi, verify_relation
from .words import Word


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    examples: List[tuple] = field(default_factory=list)

    def record(self, ok, inst):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.examples) < 5:
                self.examples.append(inst)

    @property
    def checked(self):
        return self.passed + self.failed


def words_upto(n_letters: int, max_len: int) -> Iterator[Word]:
    for k in range(max_len + 1):
        yield from itertools.product(range(n_letters), repeat=k)


def random_word(rng: random.Random, n_letters: int, max_len: int) -> Word:
    if n_letters == 0:
        return ()
    return tuple(rng.randrange(n_letters) for _ in range(rng.randint(0, max_len)))


def lemma_phi_split(d: SchutzData, cases: Iterable[Tuple[int, Word, Word]]) -> Tally:
    """φ(λ, w₁w₂) ≡ φ(λ, w₁)·φ(λ·w₁, w₂)."""
    t = Tally()
    for lam, w1, w2 in cases:
        if d.lam.act(lam, w1 + w2) == 0:
            t.skipped += 1
            continue
        ok = phi(lam, w1 + w2, d) == phi(lam, w1, d) + phi(d.lam.act(lam, w1), w2, d)
        t.record(ok, (lam, w1, w2))
    return t


def lemma_psi_phi(d: SchutzData, cases: Iterable[Tuple[int, Word]]) -> Tally:
    """h·ψ(φ(λ, w)) = h·p_λ·w·p'_{λ·w} in S."""
    t = Tally()
    for lam, w in cases:
        end = d.lam.act(lam, w)
        if end == 0:
            t.skipped += 1
            continue
        lhs = d.elem(d.h + psi(phi(lam, w, d), d))
        rhs = d.elem(d.h + d.p[lam] + w + d.p_prime[end])
        t.record(lhs == rhs, (lam, w))
    return t


def lemma_kappa_split(d: SchutzData, cases: Iterable[Tuple[Word, Word, int]]) -> Tally:
    """κ(w₁w₂, j) ≡ κ(w₁, w₂∗j)·κ(w₂, j)."""
    t = Tally()
    for w1, w2, j in cases:
        if d.star.act(w1 + w2, j) == 0:
            t.skipped += 1
            continue
        try:
            ok = kappa(w1 + w2, j, d) == kappa(w1, d.star.act(w2, j), d) + kappa(w2, j, d)
        except (ActionKilled, TypeError):
            ok = False
        t.record(ok, (w1, w2, j))
    return t


def lemma_kappa_rep(d: SchutzData, cases: Iterable[Tuple[Word, int]]) -> Tally:
    """w·r_j = r_{w∗j}·κ(w, j) in S."""
    t = Tally()
    for w, j in cases:
        i = d.star.act(w, j)
        if i == 0:
            t.skipped += 1
            continue
        try:
            ok = d.elem(w + d.r[j]) == d.elem(d.r[i] + kappa(w, j, d))
        except (ActionKilled, TypeError):
            ok = False
        t.record(ok, (w, j))
    return t


def lemma_pi(d: SchutzData, cases: Iterable[Word]) -> Tally:
    """h·ψ(w) = π(w)·h in S, for w over B."""
    t = Tally()
    for w in cases:
        t.record(d.elem(d.h + psi(w, d)) == d.elem(pi(w, d) + d.h), (w,))
    return t


def lemma_pi_omega(d: SchutzData, cases: Iterable[Word]) -> Tally:
    """π(w)∗ω = ω and 1·κ(π(w), ω) = 1."""
    t = Tally()
    om = d.star.omega
    for w in cases:
        x = pi(w, d)
        try:
            ok = d.star.act(x, om) == om and d.lam.act(1, kappa(x, om, d)) == 1
        except (ActionKilled, TypeError):
            ok = False
        t.record(ok, (w,))
    return t


def relation_soundness(sp: SchutzPresentation) -> Tally:
    t = Tally()
    for k, rel in enumerate(sp.relations):
        t.record(verify_relation(rel.lhs, rel.rhs, sp.data), (k,))
    return t


def random_cases(d: SchutzData, n: int = 1000, max_len: int = 10, seed: int = 0):
    """Instance streams for every lemma, ``n`` random draws each."""
    rng = random.Random(seed)
    na, nb = d.universe.ngens, len(d.generators)
    lams, js = d.lam.lambda_ids, d.star.i_ids

    def w():
        return random_word(rng, na, max_len)

    return {
        "phi_split": [(rng.choice(lams), w(), w()) for _ in range(n)],
        "psi_phi": [(rng.choice(lams), w()) for _ in range(n)],
        "kappa_split": [(w(), w(), rng.choice(js)) for _ in range(n)],
        "kappa_rep": [(w(), rng.choice(js)) for _ in range(n)],
        "pi": [random_word(rng, nb, max_len) for _ in range(n)],
        "pi_omega": [random_word(rng, nb, max_len) for _ in range(n)],
    }


def exhaustive_cases(d: SchutzData, max_len: int = 6, b_len: int = 4):
    """Every word of length ≤ ``max_len`` (every split of it, for the split lemmas)."""
    na, nb = d.universe.ngens, len(d.generators)
    lams, js = d.lam.lambda_ids, d.star.i_ids
    words = list(words_upto(na, max_len))
    splits = [(x[:k], x[k:]) for x in words for k in range(len(x) + 1)]
    bwords = list(words_upto(nb, b_len))
    return {
        "phi_split": [(l, a, b) for l in lams for a, b in splits],
        "psi_phi": [(l, x) for l in lams for x in words],
        "kappa_split": [(a, b, j) for a, b in splits for j in js],
        "kappa_rep": [(x, j) for x in words for j in js],
        "pi": bwords,
        "pi_omega": bwords,
    }


LEMMAS = {
    "phi_split": lemma_phi_split,
    "psi_phi": lemma_psi_phi,
    "kappa_split": lemma_kappa_split,
    "kappa_rep": lemma_kappa_rep,
    "pi": lemma_pi,
    "pi_omega": lemma_pi_omega,
}


def run_lemmas(sp: SchutzPresentation, cases: Dict[str, list]) -> Dict[str, Tally]:
    d = sp.data
    out = {name: fn(d, cases[name]) for name, fn in LEMMAS.items()}
    out["relations"] = relation_soundness(sp)
    return out
