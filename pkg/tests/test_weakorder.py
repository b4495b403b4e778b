import itertools

import numpy as np
import pytest

from coxpreproj.admissible import admissible, complete_word, enumerate_admissible, principal_word
from coxpreproj.coxgraph import INF, preset
from coxpreproj.errors import NoDescent
from coxpreproj.preproj import preprojective_roots, root_of_principal, w_alpha, w_psi
from coxpreproj.rootsys import Sign, element_of_word, enumerate_roots, root_key, sign
from coxpreproj.tracemon import TraceWord, divides, identity
from coxpreproj.weakorder import (
    approximate,
    classify_admissible,
    in_TR,
    inversion_roots,
    is_identity,
    is_reduced,
    length,
    leq_L,
)

from oracles import element_lengths, staircase_leq
from systems import CATALOG, a3_outward, standard

A2 = preset("A", 2)
A3 = preset("A", 3)
C_A2 = standard("A", 2)


def w(g, *letters):
    return TraceWord(g, letters)


def rho(g, *letters):
    return element_of_word(TraceWord(g, letters))


def all_elements(g, max_length):
    """One shortest word per element, as ``(letters, matrix)``."""
    seen = {}
    for k in range(max_length + 1):
        for seq in itertools.product(g.vertices, repeat=k):
            M = element_of_word(TraceWord(g, seq))
            seen.setdefault(root_key(M.ravel()), (seq, M))
    return list(seen.values())


class TestLength:
    def test_examples(self):
        assert length(np.eye(2), A2).length == 0
        assert length(rho(A2, 0, 1, 0), A2).length == 3

    @pytest.mark.parametrize("name,p", CATALOG)
    def test_coxeter_element_has_length_n(self, name, p):
        c = standard(name, p)
        L = length(element_of_word(complete_word(c).word), c.graph)
        assert L.length == c.graph.n
        assert np.allclose(element_of_word(L.witness), L.element)
        assert is_reduced(L.witness)

    def test_matches_cayley_bfs(self):
        for g in (A3, preset("B", 3)):
            lengths = element_lengths(g, 20)
            for seq, M in all_elements(g, 5):
                key = tuple(round(x, 6) + 0.0 for x in M.ravel())
                assert length(M, g).length == lengths[key]

    def test_no_descent(self):
        # not a group element: positive columns, yet not the identity
        with pytest.raises(NoDescent):
            length(np.diag([1.0, 2.0]), A2)

    def test_identity(self):
        assert is_identity(np.eye(3)) and not is_identity(rho(A3, 0))


class TestReduced:
    def test_examples(self):
        for s in A3.vertices:
            assert is_reduced(w(A3, s))
        assert is_reduced(w(A2, 0, 1, 0))
        assert not is_reduced(w(A2, 0, 0))
        assert is_reduced(identity(A2))

    def test_infinite_dihedral(self):
        c = standard("I2", INF)
        for X in enumerate_admissible(c, 12):
            assert is_reduced(X.word)

    @pytest.mark.parametrize("name,p", [("A", 3), ("B", 3), ("affineA", 2)])
    def test_matches_length(self, name, p):
        g = preset(name, p)
        for seq in itertools.product(g.vertices, repeat=5):
            X = TraceWord(g, seq)
            assert is_reduced(X) == (length(element_of_word(X), g).length == 5)

    @pytest.mark.parametrize("name,p", [("I2", INF), ("affineA", 2)])
    def test_coxeter_powers(self, name, p):
        c = standard(name, p)
        K = complete_word(c).word
        for t in range(1, 7):
            assert length(element_of_word(K ** t), c.graph).length == t * c.graph.n


class TestWeakOrder:
    def test_examples(self):
        s1, s2, s21 = rho(A2, 0), rho(A2, 1), rho(A2, 1, 0)
        assert leq_L(s1, s21, A2)
        assert not leq_L(s2, s21, A2)
        for _, M in all_elements(A2, 3):
            assert leq_L(np.eye(2), M, A2)

    @pytest.mark.parametrize("name,p", [("A", 2), ("A", 3)])
    def test_matches_staircase(self, name, p):
        g = preset(name, p)
        lengths = element_lengths(g, 20)
        elems = all_elements(g, 6)
        assert len(elems) == len(lengths)
        for (su, u), (sv, v) in itertools.product(elems, repeat=2):
            assert leq_L(u, v, g) == staircase_leq(g, su, sv, lengths)

    def test_inversions(self):
        assert in_TR(rho(A3, 0), [1, 0, 0])
        roots = enumerate_roots(A3, 10)
        elems = all_elements(A3, 6)
        inv = {root_key(M.ravel()): {root_key(a) for a in inversion_roots(M, roots)} for _, M in elems}
        for _, M in elems:
            assert len(inv[root_key(M.ravel())]) == length(M, A3).length
        for (_, u), (_, v) in itertools.product(elems, repeat=2):
            if leq_L(u, v, A3):
                assert inv[root_key(u.ravel())] <= inv[root_key(v.ravel())]


class TestClassify:
    def test_examples(self):
        cl = classify_admissible(admissible(w(A2, 0, 1, 0), C_A2))
        assert cl.reduced and [tuple(r.root) for r in cl.psi.roots] == [(0, 1)]
        o = a3_outward()
        cl = classify_admissible(admissible(w(A3, 2, 0), o))
        assert cl.reduced and sorted(tuple(r.root) for r in cl.psi.roots) == [(0, 0, 1), (1, 0, 0)]
        cl = classify_admissible(admissible(w(A2, 1, 0, 1, 0), C_A2))
        assert not cl.reduced and cl.psi is None

    def test_approximate(self):
        psi = approximate([np.array([1.0, 0.0]), np.array([0.0, 1.0])], C_A2)
        assert [tuple(r.root) for r in psi.roots] == [(0, 1)]
        assert approximate([], C_A2).roots == ()
        theta = [np.array([1.0, 0.0, 0.0]), np.array([0.0, 0.0, 1.0])]
        assert {r.key for r in approximate(theta, a3_outward()).roots} == {root_key(a) for a in theta}

    @pytest.mark.parametrize("name,p", [("A", 3), ("affineA", 2), ("B", 3), ("D", 4)])
    def test_w_psi_always_reduced(self, name, p):
        c = standard(name, p)
        roots = preprojective_roots(c, 3)
        for k in (1, 2, 3):
            for combo in itertools.combinations(roots, k):
                P = w_psi([r.root for r in combo], c, verify=False)
                assert is_reduced(P.w_psi.word)
                psi = approximate([r.root for r in combo], c)
                assert psi.w_psi == P.w_psi

    @pytest.mark.parametrize("name,p", CATALOG)
    def test_principal_reduced_iff_least_word(self, name, p):
        c = standard(name, p)
        for x in c.graph.vertices:
            for r in range(1, 4):
                P = principal_word(r, x, c)
                alpha = root_of_principal(P)
                matches = False
                if sign(alpha) is Sign.POSITIVE:
                    rec = w_alpha(alpha, c, r)
                    matches = rec.principal.word.word == P.word.word
                assert is_reduced(P.word.word) == matches

    @pytest.mark.parametrize("name,p", [("A", 2), ("A", 3), ("B", 3), ("H", 3)])
    def test_longest_element(self, name, p):
        c = standard(name, p)
        g = c.graph
        P = w_psi([np.eye(g.n)[s] for s in g.vertices], c)
        M = element_of_word(P.w_psi.word)
        assert length(M, g).length == len(enumerate_roots(g, 100))
        assert all(sign(M[:, s]) is Sign.NEGATIVE for s in g.vertices)

    @pytest.mark.parametrize("name,p", [("A", 3), ("affineA", 2)])
    def test_order_embedding_on_least_words(self, name, p):
        c = standard(name, p)
        recs = preprojective_roots(c, 3)
        words = [r.principal.word.word for r in recs]
        mats = [element_of_word(X) for X in words]
        for i, j in itertools.product(range(len(recs)), repeat=2):
            assert divides(words[i], words[j]) == leq_L(mats[i], mats[j], c.graph)
