"""Lengths, reduced words and the left weak order, plus the classification of
reduced admissible words as least negating words of independent root sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .admissible import AdmissibleWord, PrincipalWord, independent_decomposition
from .coxgraph import CoxeterGraph
from .errors import (
    BoundExceeded,
    InternalInconsistency,
    NoDescent,
    NumericalAmbiguity,
)
from .preproj import PsiSet, root_of_principal, w_alpha, w_psi
from .rootsys import EPS, Sign, element_of_word, reflection_matrices, sign
from .tracemon import TraceWord, transpose


@dataclass(frozen=True, eq=False)
class LengthedElement:
    """A group element with its length and a reduced witness word."""

    element: np.ndarray
    length: int
    witness: TraceWord

    def inverse(self) -> np.ndarray:
        return element_of_word(transpose(self.witness))


def is_identity(w: np.ndarray, tol: float = EPS) -> bool:
    return bool(np.max(np.abs(w - np.eye(w.shape[0])), initial=0.0) <= tol)


def _column_sign(w: np.ndarray, s: int) -> Sign:
    sg = sign(w[:, s])
    if sg in (Sign.MIXED, Sign.ZERO):
        raise NumericalAmbiguity(f"w(alpha_{s + 1}) = {w[:, s]} is not a root")
    return sg


def length(w: np.ndarray, graph: CoxeterGraph, max_steps: int = 100_000) -> LengthedElement:
    """Length by greedy right descents (smallest generator index first).

    ``l(ws) < l(w)`` iff ``w(alpha_s) < 0``; the witness collects the
    descents, so ``w = s_{a_k} ... s_{a_1}`` with ``a_1`` found first.
    """
    mats = reflection_matrices(graph)
    cur = np.array(w, dtype=float)
    found: list[int] = []
    while not is_identity(cur):
        if len(found) >= max_steps:
            raise NoDescent(f"no reduction to the identity after {max_steps} descents")
        for s in graph.vertices:
            if _column_sign(cur, s) is Sign.NEGATIVE:
                cur = cur @ mats[s]
                found.append(s)
                break
        else:
            raise NoDescent("element is not the identity but has no right descent")
    # w = s_{found[-1]} ... s_{found[0]}
    witness = TraceWord(graph, found[::-1])
    return LengthedElement(np.array(w, dtype=float), len(found), witness)


def is_reduced(X: TraceWord) -> bool:
    """Whether ``rho(X)`` has length ``l(X)``.

    Reads ``X`` left to right keeping ``w = rho(prefix)``; each new letter ``s``
    must satisfy ``w(alpha_s) > 0`` so that ``l(ws) = l(w) + 1``.
    """
    mats = reflection_matrices(X.graph)
    w = np.eye(X.graph.n)
    for s in X.letters:
        if _column_sign(w, s) is Sign.NEGATIVE:
            return False
        w = w @ mats[s]
    return True


def leq_L(u: np.ndarray, v: np.ndarray, graph: CoxeterGraph) -> bool:
    """Left weak order: ``l(v) = l(u) + l(v u^{-1})``."""
    lu = length(u, graph)
    lv = length(v, graph)
    if lv.length < lu.length:
        return False
    return length(v @ lu.inverse(), graph).length == lv.length - lu.length


def in_TR(w: np.ndarray, alpha) -> bool:
    """Whether the reflection of the positive root ``alpha`` is a right associated reflection of ``w``."""
    sg = sign(np.asarray(w) @ np.asarray(alpha, dtype=float))
    if sg in (Sign.MIXED, Sign.ZERO):
        raise NumericalAmbiguity("w(alpha) is not a root")
    return sg is Sign.NEGATIVE


def inversion_roots(w: np.ndarray, roots: Iterable) -> list:
    """Those positive roots in ``roots`` sent negative by ``w``."""
    return [a for a in roots if in_TR(w, a)]


@dataclass(frozen=True)
class Classification:
    """Outcome of :func:`classify_admissible`.

    ``psi`` is set exactly when the word is reduced; ``factors`` is the
    independent decomposition in either case.
    """

    reduced: bool
    psi: Optional[PsiSet]
    factors: tuple


def roots_of_factors(factors: Iterable[PrincipalWord]) -> Optional[list]:
    """Roots ``alpha_i`` with ``W_{alpha_i}`` equal to the given principal words, or ``None``.

    ``None`` means some factor is not the least negating word of any root.
    """
    out = []
    for P in factors:
        alpha = root_of_principal(P)
        if sign(alpha) is not Sign.POSITIVE:
            return None
        try:
            rec = w_alpha(alpha, P.word.base, r_max=P.size)
        except BoundExceeded:
            return None
        if rec.principal.word.word != P.word.word:
            return None
        out.append(alpha)
    return out


def classify_admissible(X: AdmissibleWord) -> Classification:
    """Reduced words are exactly ``W_Psi`` for independent ``Psi``; recover ``Psi``.

    Both directions are checked: a reduced word must come back as ``W_Psi``,
    and a non-reduced one must not.
    """
    c = X.base
    factors = independent_decomposition(X)
    reduced = is_reduced(X.word)
    roots = roots_of_factors(factors)
    psi = None
    if roots is not None:
        psi = w_psi(roots, c, r_max=max((P.size for P in factors), default=1), verify=False)
        if psi.w_psi.word != X.word:
            psi = None
    if reduced and psi is None:
        raise InternalInconsistency(f"reduced word {X.word} is not W_Psi of its factors")
    if not reduced and psi is not None:
        raise InternalInconsistency(f"non-reduced word {X.word} equals W_Psi")
    return Classification(reduced, psi, factors)


def approximate(theta: Iterable, c, r_max: Optional[int] = None) -> PsiSet:
    """The unique independent ``Psi`` with ``W_Psi = W_Theta``."""
    W = w_psi(list(theta), c, r_max=r_max)
    cl = classify_admissible(W.w_psi)
    if not cl.reduced:
        raise InternalInconsistency(f"W_Theta = {W.w_psi.word} is not reduced")
    return cl.psi
