"""The geometric representation of a Coxeter group.

Vectors live in the span of the simple roots ``alpha_s`` and are numpy float
arrays of length ``n``.  The bilinear form is ``B(alpha_s, alpha_t) = -2 cos(pi / m(s, t))``
(twice the more common normalization), so ``B(alpha_s, alpha_s) = 2`` and an
infinite label gives exactly ``-2``.  Group elements are ``n x n`` matrices
acting on coordinate columns.
"""

from __future__ import annotations

import enum
import functools
import math
from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .coxgraph import INF, CoxeterGraph, Orientation, check_order
from .errors import InvalidPath
from .tracemon import TraceWord

EPS = 1e-8
HASH_GRID = 1e-6


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ZERO = "zero"
    MIXED = "mixed"


def _form_entry(m) -> float:
    if m is INF:
        return -2.0
    if m == 1:
        return 2.0
    if m == 2:
        return 0.0
    if m == 3:
        return -1.0
    return -2.0 * math.cos(math.pi / m)


@functools.lru_cache(maxsize=None)
def form_matrix(graph: CoxeterGraph) -> np.ndarray:
    n = graph.n
    B = np.array([[_form_entry(graph.matrix[i][j]) for j in range(n)] for i in range(n)])
    B.setflags(write=False)
    return B


@functools.lru_cache(maxsize=None)
def reflection_matrices(graph: CoxeterGraph) -> tuple[np.ndarray, ...]:
    """Matrices of the simple reflections ``s lam = lam - B(alpha_s, lam) alpha_s``."""
    B = form_matrix(graph)
    mats = []
    for s in graph.vertices:
        S = np.eye(graph.n)
        S[s, :] -= B[s, :]
        S.setflags(write=False)
        mats.append(S)
    return tuple(mats)


def simple_root(graph: CoxeterGraph, s: int) -> np.ndarray:
    e = np.zeros(graph.n)
    e[s] = 1.0
    return e


def reflect(graph: CoxeterGraph, s: int, vec) -> np.ndarray:
    vec = np.asarray(vec, dtype=float)
    out = vec.copy()
    out[s] -= form_matrix(graph)[s] @ vec
    return out


def apply_word(X: TraceWord, vec) -> np.ndarray:
    """``rho(X) vec``: reflect by ``x_1`` first, ``x_l`` last."""
    out = np.asarray(vec, dtype=float).copy()
    B = form_matrix(X.graph)
    for s in X.applied:
        out[s] -= B[s] @ out
    return out


def element_of_word(X: TraceWord) -> np.ndarray:
    """Matrix of ``rho(X) = s_{x_l} ... s_{x_1}``."""
    mats = reflection_matrices(X.graph)
    M = np.eye(X.graph.n)
    for s in X.letters:
        M = M @ mats[s]
    return M


def coxeter_element(graph: CoxeterGraph, order: Sequence[int]) -> np.ndarray:
    """Matrix of ``c = s_n ... s_1`` for ``order = (s_1, ..., s_n)``."""
    order = check_order(graph, order)
    return element_of_word(TraceWord.from_applied(graph, order))


def preserves_form(M: np.ndarray, graph: CoxeterGraph, tol: float = EPS) -> bool:
    B = form_matrix(graph)
    return float(np.max(np.abs(M.T @ B @ M - B), initial=0.0)) <= tol


def sign(vec, eps: float = EPS) -> Sign:
    vec = np.asarray(vec, dtype=float)
    hi = float(vec.max(initial=0.0))
    lo = float(vec.min(initial=0.0))
    if hi <= eps and lo >= -eps:
        return Sign.ZERO
    if lo >= -eps:
        return Sign.POSITIVE
    if hi <= eps:
        return Sign.NEGATIVE
    return Sign.MIXED


def is_positive(vec, eps: float = EPS) -> bool:
    return sign(vec, eps) is Sign.POSITIVE


def is_negative(vec, eps: float = EPS) -> bool:
    return sign(vec, eps) is Sign.NEGATIVE


def root_key(vec) -> tuple[int, ...]:
    """Hashable key: coordinates rounded to a ``1e-6`` grid."""
    return tuple(int(round(float(c) / HASH_GRID)) for c in vec)


def same_vector(u, v, tol: float = EPS) -> bool:
    return bool(np.max(np.abs(np.asarray(u) - np.asarray(v)), initial=0.0) <= tol)


def root_support(vec, eps: float = EPS) -> frozenset:
    return frozenset(i for i, c in enumerate(vec) if abs(c) > eps)


def path_weight(path: Sequence[int], orient: Orientation) -> float:
    """Weight of a path given by its vertex sequence ``x_0 -> x_1 -> ... -> x_t``.

    Each arrow ``a: u -> w`` contributes ``-B(alpha_w, alpha_u)``; the trivial
    path ``(x,)`` has weight 1.
    """
    if len(path) == 0:
        raise InvalidPath("a path has at least one vertex")
    B = form_matrix(orient.graph)
    weight = 1.0
    for u, w in zip(path, path[1:]):
        if w not in orient.successors[u]:
            raise InvalidPath(f"v{u + 1} -> v{w + 1} is not an arrow of {orient}")
        weight *= -B[w, u]
    return weight


def all_paths(orient: Orientation, x: int, y: int) -> list[tuple[int, ...]]:
    """Every path from ``x`` to ``y`` as a vertex tuple (the orientation must be acyclic)."""
    out = []

    def walk(path):
        v = path[-1]
        if v == y:
            out.append(tuple(path))
        for w in sorted(orient.successors[v]):
            if y in orient.reachable[w]:
                path.append(w)
                walk(path)
                path.pop()

    if y in orient.reachable[x]:
        walk([x])
    return out


def enumerate_roots(graph: CoxeterGraph, depth: int) -> list[np.ndarray]:
    """Positive roots reachable from simple roots by at most ``depth`` simple reflections.

    Breadth-first over positive roots only (``s`` maps a positive root other
    than ``alpha_s`` to a positive root).  Sorted by coordinate sum, then
    lexicographically.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    seen: dict = {}
    frontier = deque()
    for s in graph.vertices:
        a = simple_root(graph, s)
        seen[root_key(a)] = a
        frontier.append(a)
    for _ in range(depth):
        nxt = deque()
        for a in frontier:
            for s in graph.vertices:
                b = reflect(graph, s, a)
                if sign(b) is not Sign.POSITIVE:
                    continue
                key = root_key(b)
                if key not in seen:
                    seen[key] = b
                    nxt.append(b)
        if not nxt:
            break
        frontier = nxt
    roots = list(seen.values())
    roots.sort(key=lambda r: (round(float(r.sum()), 6), tuple(-round(float(c), 6) for c in r)))
    return roots


def root_support_connected(graph: CoxeterGraph, vec) -> bool:
    return graph.is_connected_subset(root_support(vec))


def is_root(graph: CoxeterGraph, vec, depth: int) -> bool:
    """Whether ``vec`` is ``±`` a positive root reachable within ``depth`` reflections."""
    vec = np.asarray(vec, dtype=float)
    key = root_key(vec)
    neg = root_key(-vec)
    return any(root_key(r) in (key, neg) for r in enumerate_roots(graph, depth))


def as_vector(graph: CoxeterGraph, coords: Iterable[float]) -> np.ndarray:
    vec = np.asarray(list(coords), dtype=float)
    if vec.shape != (graph.n,):
        raise ValueError(f"expected {graph.n} coordinates, got {vec.shape[0]}")
    return vec


def format_coordinate(c: float) -> str:
    r = round(c)
    return str(int(r)) if abs(c - r) < 1e-9 else f"{c:.10g}"


def format_vector(vec) -> str:
    """Space-separated coordinates in the simple-root basis; near-integers print as integers."""
    return " ".join(format_coordinate(float(c)) for c in vec)


def parse_vector(graph: CoxeterGraph, text: str) -> np.ndarray:
    """Inverse of :func:`format_vector`; commas are accepted as separators."""
    return as_vector(graph, (float(tok) for tok in text.replace(",", " ").split()))
