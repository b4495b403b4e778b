"""Admissible words: sequences of sink reflections on an acyclic orientation.

A word ``X = x_l ... x_1`` (applied right to left, see :mod:`tracemon`) is
admissible for an orientation ``L`` when ``x_1`` is a sink of ``L``, ``x_2`` a
sink of ``x_1 . L`` and so on.  Admissible words over a fixed orientation form
a distributive lattice in which an element is determined by its multiplicity
vector; most operations here work on those vectors and realize words only
when asked.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .coxgraph import Orientation, is_filter, principal_filter
from .errors import (
    ConstructionFailed,
    DecompositionFailed,
    DifferentBase,
    NotAdmissible,
    NotAFilter,
    RealizationFailed,
)
from .tracemon import TraceWord, identity, multiplicity, quotient


def act(X: TraceWord, orient: Orientation) -> Orientation:
    """``X . L``: reflect at ``x_1``, then ``x_2``, ...; no sink checks."""
    for v in X.applied:
        orient = orient.reflect(v)
    return orient


def is_admissible(X: TraceWord, orient: Orientation) -> bool:
    """Sequential sink check on the stored representative of ``X``."""
    for v in X.applied:
        if not orient.is_sink(v):
            return False
        orient = orient.reflect(v)
    return True


@dataclass(frozen=True)
class AdmissibleWord:
    """A word together with the orientation it is admissible for.

    ``final`` is ``word . base``.  Equality is trace equality of the words
    over the same base.
    """

    word: TraceWord
    base: Orientation
    final: Orientation = field(compare=False)

    @property
    def multiplicity(self) -> tuple[int, ...]:
        return multiplicity(self.word)

    @property
    def support(self) -> frozenset:
        return self.word.support

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        return f"AdmissibleWord({self.word})"


def admissible(X: TraceWord, orient: Orientation) -> AdmissibleWord:
    """Wrap ``X`` as an admissible word over ``orient`` or raise :class:`NotAdmissible`."""
    cur = orient
    for v in X.applied:
        if not cur.is_sink(v):
            raise NotAdmissible(f"{X} is not admissible: v{v + 1} is not a sink when applied")
        cur = cur.reflect(v)
    return AdmissibleWord(X, orient, cur)


def complete_word(orient: Orientation) -> AdmissibleWord:
    """The complete word ``K``: every vertex once, sinks applied first (smallest index first)."""
    return admissible(mf_word_of_filter(orient.graph.vertices, orient), orient)


def mf_word_of_filter(theta: Iterable[int], orient: Orientation) -> TraceWord:
    """The unique multiplicity-free admissible word with support ``theta``."""
    theta = frozenset(theta)
    if not is_filter(theta, orient):
        raise NotAFilter(f"{sorted(v + 1 for v in theta)} is not a filter of {orient}")
    applied = []
    done: set[int] = set()
    while len(done) < len(theta):
        v = min(u for u in theta - done if orient.successors[u] <= done)
        applied.append(v)
        done.add(v)
    return TraceWord.from_applied(orient.graph, applied)


def hull(theta: Iterable[int], orient: Orientation) -> frozenset:
    """Smallest filter containing ``theta`` and all graph neighbours of ``theta``."""
    theta = frozenset(theta)
    if not is_filter(theta, orient):
        raise NotAFilter(f"{sorted(v + 1 for v in theta)} is not a filter of {orient}")
    grown = set(theta)
    for v in theta:
        grown |= orient.graph.neighbors[v]
    closure = set()
    for v in grown:
        closure |= orient.reachable[v]
    return frozenset(closure)


@dataclass(frozen=True)
class PrincipalWord:
    """``W_{r,x}`` with its canonical form.

    ``blocks[j]`` is the multiplicity-free block applied ``j``-th (0-based), so
    ``blocks[0]`` is ``X_1`` and ``blocks[-1]`` is ``X_r``; the word is
    ``X_r ... X_1``.
    """

    word: AdmissibleWord
    size: int
    apex: Optional[int]
    blocks: tuple

    @property
    def supports(self) -> tuple[frozenset, ...]:
        return tuple(b.support for b in self.blocks)

    def __repr__(self):
        apex = "-" if self.apex is None else f"v{self.apex + 1}"
        return f"PrincipalWord(r={self.size}, x={apex}, {self.word.word})"


@functools.lru_cache(maxsize=None)
def principal_word(r: int, x: int, orient: Orientation) -> PrincipalWord:
    """Build ``W_{r,x}`` block by block from the support chain ``<x> = S_r``, ``S_j = H(S_{j+1})``."""
    if r < 1:
        raise ValueError("principal words have size r >= 1")
    graph = orient.graph
    supports = [principal_filter(x, orient)]
    for _ in range(r - 1):
        supports.append(hull(supports[-1], orient))
    supports.reverse()  # supports[j] = Supp X_{j+1}
    blocks = []
    cur = orient
    for supp in supports:
        try:
            block = mf_word_of_filter(supp, cur)
        except NotAFilter as exc:
            raise ConstructionFailed(f"W_({r},v{x + 1}): {exc}") from exc
        blocks.append(block)
        cur = act(block, cur)
    total = identity(graph)
    for block in blocks:
        total = block * total
    if not is_admissible(total, orient):
        raise ConstructionFailed(f"W_({r},v{x + 1}) = {total} is not admissible")
    if total.letters[0] != x:
        raise ConstructionFailed(f"W_({r},v{x + 1}) = {total} does not start with its apex")
    return PrincipalWord(admissible(total, orient), r, x, tuple(blocks))


def is_principal(X: AdmissibleWord):
    """``(r, x)`` if ``X = W_{r,x}``, ``(0, None)`` for the empty word, else ``None``."""
    if len(X.word) == 0:
        return (0, None)
    mult = X.multiplicity
    for y in sorted(X.support):
        P = principal_word(mult[y], y, X.base)
        if P.word.word == X.word:
            return (mult[y], y)
    return None


def _check_same_base(X: AdmissibleWord, Y: AdmissibleWord):
    if X.base != Y.base:
        raise DifferentBase("admissible words over different orientations")


def admissible_leq(X: AdmissibleWord, Y: AdmissibleWord) -> bool:
    _check_same_base(X, Y)
    return all(a <= b for a, b in zip(X.multiplicity, Y.multiplicity))


def realize_vector(mult: Sequence[int], orient: Orientation) -> Optional[AdmissibleWord]:
    """The admissible word with multiplicity vector ``mult``, or ``None`` if there is none.

    Depth-first search over sink choices with backtracking; dead states are
    memoized by the applied vector (which fixes the current orientation).
    """
    target = tuple(int(m) for m in mult)
    graph = orient.graph
    if len(target) != graph.n or min(target, default=0) < 0:
        raise ValueError("multiplicity vector has the wrong shape")
    dead: set[tuple[int, ...]] = set()
    applied: list[int] = []

    def search(cur: list[int], o: Orientation) -> bool:
        if len(applied) == total:
            return True
        key = tuple(cur)
        if key in dead:
            return False
        for v in sorted(o.sinks):
            if cur[v] < target[v]:
                cur[v] += 1
                applied.append(v)
                if search(cur, o.reflect(v)):
                    return True
                applied.pop()
                cur[v] -= 1
        dead.add(key)
        return False

    total = sum(target)
    if not search([0] * graph.n, orient):
        return None
    return admissible(TraceWord.from_applied(graph, applied), orient)


def _realize_or_fail(mult, orient, what):
    out = realize_vector(mult, orient)
    if out is None:
        raise RealizationFailed(f"{what}: no admissible word with multiplicities {mult}")
    return out


def meet(X: AdmissibleWord, Y: AdmissibleWord) -> AdmissibleWord:
    _check_same_base(X, Y)
    vec = tuple(min(a, b) for a, b in zip(X.multiplicity, Y.multiplicity))
    return _realize_or_fail(vec, X.base, "meet")


def join(X: AdmissibleWord, Y: AdmissibleWord) -> AdmissibleWord:
    _check_same_base(X, Y)
    vec = tuple(max(a, b) for a, b in zip(X.multiplicity, Y.multiplicity))
    return _realize_or_fail(vec, X.base, "join")


def join_all(words: Iterable[AdmissibleWord], orient: Orientation) -> AdmissibleWord:
    vec = [0] * orient.graph.n
    for X in words:
        if X.base != orient:
            raise DifferentBase("admissible words over different orientations")
        vec = [max(a, b) for a, b in zip(vec, X.multiplicity)]
    return _realize_or_fail(vec, orient, "join")


def lattice_factor(X: AdmissibleWord, Y: AdmissibleWord) -> tuple[TraceWord, TraceWord]:
    """``(V, W)`` with ``X = V (X ∧ Y)`` and ``Y = W (X ∧ Y)``."""
    M = meet(X, Y)
    return quotient(X.word, M.word), quotient(Y.word, M.word)


def maximal_principal_divisor(X: AdmissibleWord, y: int) -> Optional[PrincipalWord]:
    """Largest ``W_{r,y}`` below ``X`` (``None`` if even ``W_{1,y}`` is not)."""
    mult = X.multiplicity
    best = None
    for r in range(1, mult[y] + 1):
        P = principal_word(r, y, X.base)
        if all(a <= b for a, b in zip(P.word.multiplicity, mult)):
            best = P
        else:
            break
    return best


def principal_divisors(X: AdmissibleWord) -> list[PrincipalWord]:
    """Every principal word ``W_{r,y} ⪯ X`` with ``r >= 1``."""
    mult = X.multiplicity
    out = []
    for y in X.base.graph.vertices:
        for r in range(1, mult[y] + 1):
            P = principal_word(r, y, X.base)
            if all(a <= b for a, b in zip(P.word.multiplicity, mult)):
                out.append(P)
            else:
                break
    return out


def _vec_leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def _join_vec(words, n):
    vec = [0] * n
    for P in words:
        vec = [max(a, b) for a, b in zip(vec, P.word.multiplicity)]
    return tuple(vec)


def _smallest_cover(candidates, target, n, max_size):
    """Smallest subset of ``candidates`` whose joined vector is ``target`` (size <= max_size)."""
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(candidates, k):
            if _join_vec(combo, n) == target:
                return combo
    return None


def independent_decomposition(X: AdmissibleWord, verify: bool = True) -> tuple[PrincipalWord, ...]:
    """The independent set of principal words joining to ``X``.

    Taken as the ⪯-maximal principal divisors of ``X``.  With ``verify`` the
    result is checked to join to ``X`` and to have minimal cardinality among
    all sets of principal divisors joining to ``X``.
    """
    if len(X.word) == 0:
        return ()
    n = X.base.graph.n
    target = X.multiplicity
    cands = {}
    for y in X.base.graph.vertices:
        P = maximal_principal_divisor(X, y)
        if P is not None:
            cands[P.word.multiplicity] = P
    vecs = list(cands)
    maximal = [
        cands[v] for v in vecs
        if not any(w != v and _vec_leq(v, w) for w in vecs)
    ]
    maximal.sort(key=lambda P: (P.apex, P.size))
    result = tuple(maximal)
    if _join_vec(result, n) != target:
        combo = _smallest_cover(principal_divisors(X), target, n, n)
        if combo is None:
            raise DecompositionFailed(f"no set of principal divisors joins to {X.word}")
        result = tuple(sorted(combo, key=lambda P: (P.apex, P.size)))
    elif verify and len(result) > 1:
        smaller = _smallest_cover(principal_divisors(X), target, n, len(result) - 1)
        if smaller is not None:
            result = tuple(sorted(smaller, key=lambda P: (P.apex, P.size)))
    return result


def enumerate_admissible(
    orient: Orientation, max_length: int, max_multiplicity: Optional[int] = None
) -> list[AdmissibleWord]:
    """All admissible words of length <= ``max_length``, ordered by length then vector.

    Optionally only those with every multiplicity <= ``max_multiplicity``.
    """
    graph = orient.graph
    start = (0,) * graph.n
    level = {start: (orient, ())}
    out = [AdmissibleWord(identity(graph), orient, orient)]
    for _ in range(max_length):
        nxt: dict = {}
        for vec, (o, applied) in level.items():
            for v in sorted(o.sinks):
                if max_multiplicity is not None and vec[v] >= max_multiplicity:
                    continue
                w = vec[:v] + (vec[v] + 1,) + vec[v + 1:]
                if w not in nxt:
                    nxt[w] = (o.reflect(v), applied + (v,))
        if not nxt:
            break
        for vec in sorted(nxt):
            o, applied = nxt[vec]
            out.append(AdmissibleWord(TraceWord.from_applied(graph, applied), orient, o))
        level = nxt
    return out
