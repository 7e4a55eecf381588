"""One test per acceptance criterion; the terminal summary prints PASS/FAIL per criterion."""

import random
import time

from schutzen.checks import exhaustive_cases, random_cases, run_lemmas, words_upto
from schutzen.cli import main
from schutzen.corpus import CORPUS, corpus_presentation, corpus_text
from schutzen.engine import critical_circuits, knuth_bendix
from schutzen.errors import PreconditionViolated
from schutzen.grouptools import enumerate_group, isomorphic, table_from_mult
from schutzen.paths import DGEdge
from schutzen.schutz import kappa, phi, phi_omega, pi
from schutzen.squier import (CanonicalPaths, build_homotopy_base, lambda_path, phi_edge,
                             theta, z_path)
from schutzen.words import MonoidPresentation

from conftest import SEED, instance
from oracle import green_brute, monoid_table, schutz_order_brute

NAMES = sorted(CORPUS)


def _h_words(inst):
    return [inst.universe.word(cls[0]) for cls in inst.green.h_classes]


def test_criterion_1_oracle_isomorphism_corpus():
    start = time.perf_counter()
    for name in NAMES:
        inst = instance(name)
        letters, pairs = CORPUS[name]
        elems, mult = monoid_table(letters, [(x.replace("1", ""), y.replace("1", ""))
                                             for x, y in pairs])
        assert len(elems) == len(inst.universe)
        _, _, H_brute = green_brute(mult)
        sizes = {}
        for k, w in enumerate(elems):
            ours = inst.universe.element(inst.pres.parse_word(w or "1"))
            sizes[ours] = (len(H_brute[k]), schutz_order_brute(mult, H_brute[k]))
        for h in _h_words(inst):
            run = inst.schutz(h)
            group = enumerate_group(run.sp.q)
            H = run.data.green.h_classes[run.H]
            assert group.order == len(H) == sizes[H[0]][0] == sizes[H[0]][1]
            assert isomorphic(group, run.direct())
    # a non-regular monoid with a non-group H-class is in the corpus
    nr = instance("nonregular")
    u = nr.universe
    assert any(not any(u.multiply(x, x) == x for x in cls) for cls in nr.green.h_classes)
    assert time.perf_counter() - start < 60


def test_criterion_2_z3_pinned():
    run = instance("z3").schutz((0,))
    sp = run.sp
    assert sp.generators == ("b[1,a]",)
    fw = sp.q.format_word
    rels = sorted((fw(r.lhs), fw(r.rhs)) for r in sp.nontrivial())
    assert ("b[1,a] b[1,a] b[1,a] b[1,a]", "b[1,a]") in rels
    assert ("b[1,a] b[1,a] b[1,a]", "1") in rels
    assert enumerate_group(sp.q).order == 3


def test_criterion_3_lemma_suites():
    for name in NAMES:
        inst = instance(name)
        small = len(inst.universe) <= 10
        total = 0
        for h in _h_words(inst):
            run = inst.schutz(h)
            tallies = run_lemmas(run.sp, random_cases(run.data, n=1000, seed=SEED))
            if small:
                ex = run_lemmas(run.sp, exhaustive_cases(run.data, max_len=6))
                for k, t in ex.items():
                    assert t.failed == 0, (name, h, k, t.examples)
            for k, t in tallies.items():
                assert t.failed == 0, (name, h, k, t.examples)
                total += t.checked
        assert total >= 1000


def _q_edges(sp, n):
    ctx = list(words_upto(len(sp.generators), n))
    return [DGEdge(w1, r, eps, w2) for r in sp.q.rules for w1 in ctx for w2 in ctx
            for eps in (1, -1)]


def test_criterion_4_path_audits():
    start = time.perf_counter()
    rng = random.Random(SEED)
    for name in NAMES:
        inst = instance(name)
        X = [c.path for c in critical_circuits(inst.system)]
        for h in _h_words(inst):
            run = inst.schutz(h, completed=True)
            sp, d = run.sp, run.data
            cp = CanonicalPaths(sp)
            edges = _q_edges(sp, 2)
            for e in edges:
                t = theta(e, cp)
                assert (t.iota, t.tau) == (pi(e.iota, d) + d.h, pi(e.tau, d) + d.h)
            for w in words_upto(len(d.generators), 3):
                lam, prime = lambda_path(w, sp)
                assert lam.iota == w
                assert prime.tau == phi_omega(pi(w, d), d)
                assert lam.tau == phi(1, kappa(pi(w, d) + d.h, d.star.eta, d), d)
            src = sp.source
            for r in src.rules:
                for al in words_upto(len(src.alphabet), 2):
                    for be in words_upto(len(src.alphabet), 2):
                        f = DGEdge(al, r, 1, be)
                        for j in d.star.j_ids:
                            for lm in d.lam.lambda_ids:
                                try:
                                    e = phi_edge(lm, f, j, sp)
                                except PreconditionViolated:
                                    continue
                                assert e.iota == phi(lm, kappa(f.iota, j, d), d)
                                assert e.tau == phi(lm, kappa(f.tau, j, d), d)
            hb, cp = build_homotopy_base(sp, X, group=run.group)
            assert hb.all_closed()
            for e in rng.sample(edges, min(100, len(edges))):
                z = z_path(e, cp)
                assert z.closed and z.iota == e.iota
    assert time.perf_counter() - start < 120


def _homotopy_json(capsys, path, h):
    code = main(["homotopy-base", "-i", str(path), "--h-class", h, "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    return out


def test_criterion_5_finiteness_and_determinism(capsys, tmp_path):
    import json
    for name in NAMES:
        inst = instance(name)
        path = tmp_path / f"{name}.txt"
        path.write_text(corpus_text(name))
        for h in _h_words(inst):
            hw = inst.pres.format_word(h)
            first = _homotopy_json(capsys, path, hw)
            second = _homotopy_json(capsys, path, hw)
            assert first == second
            doc = json.loads(first)
            sizes = doc["sizes"]
            assert all(isinstance(v, int) for v in sizes.values())
            assert len(doc["members"]) == sum(sizes.values())
            assert len(doc["presentation"]["generators"]) < 10_000
            assert doc["all_closed"]


def test_criterion_6_idempotent_stab_word():
    checked = 0
    for name in NAMES:
        inst = instance(name)
        u, g = inst.universe, inst.green
        for cls in g.h_classes:
            idem = [x for x in cls if u.multiply(x, x) == x]
            if not idem:
                continue
            run = inst.schutz(u.word(cls[0]), u.word(idem[0]))
            st = run.data.star
            assert st.eta == st.omega
            orbit, todo = {st.omega}, [st.omega]
            while todo:
                i = todo.pop()
                for a in range(u.ngens):
                    t = st.table[(a, i)]
                    if t and t not in orbit:
                        orbit.add(t)
                        todo.append(t)
            assert set(st.j_ids) <= orbit
            where = {x: k for k, x in enumerate(cls)}
            H_table = table_from_mult([[where[u.multiply(x, y)] for y in cls] for x in cls],
                                      where[idem[0]])
            assert isomorphic(enumerate_group(run.sp.q), H_table)
            checked += 1
    assert checked >= len(NAMES)


def test_criterion_7_engine_soundness():
    for name in NAMES:
        cs = knuth_bendix(corpus_presentation(name))
        n = len(cs.presentation.alphabet)
        for w in words_upto(n, 6):
            nf = cs.reduce(w)
            for r in cs.presentation.rules:
                k = len(r.lhs)
                for s in range(len(w) - k + 1):
                    if w[s:s + k] == r.lhs:
                        assert cs.reduce(w[:s] + r.rhs + w[s + k:]) == nf
            assert cs.reduce(nf) == nf
    a4 = knuth_bendix(MonoidPresentation.from_pairs("a", [("aaaa", "a")]))
    a2 = knuth_bendix(MonoidPresentation.from_pairs("a", [("aa", "a")]))
    assert len(critical_circuits(a4)) == 3
    assert len(critical_circuits(a2)) == 1
