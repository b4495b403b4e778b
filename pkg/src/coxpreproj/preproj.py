"""Preprojective and projective roots of a Coxeter element.

The Coxeter element ``c`` is always passed as its orientation of the Coxeter
graph (see :func:`coxgraph.orientation_from_order`); ``c^{-1}`` is the
opposite orientation.  A positive root ``alpha`` is preprojective of size
``r`` when ``c^r alpha`` is the first negative power.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .admissible import (
    AdmissibleWord,
    PrincipalWord,
    admissible,
    complete_word,
    independent_decomposition,
    join_all,
    principal_word,
)
from .coxgraph import INF, CoxeterGraph, Orientation, opposite
from .errors import (
    BadParams,
    FormulaMismatch,
    InternalInconsistency,
    NoProjectiveMatch,
    NotPreprojectiveWithinBound,
    NumericalAmbiguity,
    SearchBoundExceeded,
)
from .rootsys import (
    Sign,
    apply_word,
    element_of_word,
    form_matrix,
    format_vector,
    reflection_matrices,
    root_key,
    same_vector,
    sign,
    simple_root,
)
from .tracemon import TraceWord, identity, transpose


class Finiteness(enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


def default_rmax(graph: CoxeterGraph) -> int:
    n = graph.n
    return 2 * n * (n + 1)


@functools.lru_cache(maxsize=None)
def coxeter_matrix(c: Orientation) -> np.ndarray:
    """Matrix of ``c = rho(K)``."""
    M = element_of_word(complete_word(c).word)
    M.setflags(write=False)
    return M


@functools.lru_cache(maxsize=None)
def inverse_coxeter_matrix(c: Orientation) -> np.ndarray:
    """Matrix of ``c^{-1} = rho(K^T)``, computed without numerical inversion."""
    M = element_of_word(transpose(complete_word(c).word))
    M.setflags(write=False)
    return M


def _strict_sign(vec, what: str) -> Sign:
    sg = sign(vec)
    if sg in (Sign.MIXED, Sign.ZERO):
        raise NumericalAmbiguity(f"{what}: {np.round(vec, 10)} is neither positive nor negative")
    return sg


def _require_positive(alpha):
    alpha = np.asarray(alpha, dtype=float)
    if sign(alpha) is not Sign.POSITIVE:
        raise BadParams(f"{alpha} is not a positive vector")
    return alpha


def negates(X: TraceWord, alpha) -> bool:
    """Whether ``rho(X) alpha < 0`` for the positive root ``alpha``."""
    alpha = _require_positive(alpha)
    return _strict_sign(apply_word(X, alpha), "negates") is Sign.NEGATIVE


def preprojective_size(alpha, c: Orientation, r_max: Optional[int] = None) -> Optional[int]:
    """Least ``r <= r_max`` with ``c^r alpha < 0``; ``None`` if there is none within the bound.

    ``None`` only means "not found within ``r_max``".
    """
    alpha = _require_positive(alpha)
    if r_max is None:
        r_max = default_rmax(c.graph)
    if r_max < 1:
        raise BadParams("r_max must be >= 1")
    C = coxeter_matrix(c)
    beta = alpha
    for r in range(1, r_max + 1):
        beta = C @ beta
        if _strict_sign(beta, f"c^{r} alpha") is Sign.NEGATIVE:
            return r
    return None


def projective_root_transpose(c: Orientation, x: int) -> np.ndarray:
    """``pi_s(c) = rho(W_{1,x}^T)(-alpha_s)`` with ``s = rho(x)``."""
    W = principal_word(1, x, c).word.word
    return apply_word(transpose(W), -simple_root(c.graph, x))


def projective_root_paths(c: Orientation, x: int) -> np.ndarray:
    """``pi_s(c)`` as the sum over paths: the ``y``-coordinate is ``sum_p B(p)`` over ``p: x -> y``.

    Path sums are accumulated along a topological order, which counts every
    path exactly once.
    """
    B = form_matrix(c.graph)
    reach = c.reachable[x]
    total = {x: 1.0}
    # a vertex is final once every arrow into it from above x has been used
    pending = {v: len(c.predecessors[v] & reach) for v in reach}
    queue = [x]
    done = 0
    while queue:
        v = queue.pop()
        done += 1
        for w in c.successors[v]:
            total[w] = total.get(w, 0.0) + total[v] * (-B[w, v])
            pending[w] -= 1
            if pending[w] == 0:
                queue.append(w)
    if done != len(reach):
        raise FormulaMismatch("path sum did not visit every vertex above x")
    vec = np.zeros(c.graph.n)
    for v, val in total.items():
        vec[v] = val
    return vec


@functools.lru_cache(maxsize=None)
def _projective_table(c: Orientation) -> tuple:
    out = []
    for x in c.graph.vertices:
        a = projective_root_transpose(c, x)
        b = projective_root_paths(c, x)
        if not same_vector(a, b):
            raise FormulaMismatch(f"pi for v{x + 1}: transpose formula {a} != path sum {b}")
        a.setflags(write=False)
        out.append(a)
    keys = {root_key(v) for v in out}
    if len(keys) != len(out):
        raise FormulaMismatch("projective roots are not pairwise distinct")
    return tuple(out)


def projective_roots(c: Orientation) -> dict[int, np.ndarray]:
    """``x -> pi_{rho(x)}(c)``, computed by both formulas and cross-checked."""
    return {x: v.copy() for x, v in enumerate(_projective_table(c))}


def minus_c_image(c: Orientation) -> dict[int, tuple[np.ndarray, np.ndarray]]:
    """Check ``-c pi_s(c) = pi_s(c^{-1})`` and ``-c^{-1} pi_s(c^{-1}) = pi_s(c)``.

    Returns ``x -> (pi_s(c), pi_s(c^{-1}))``.
    """
    c_inv = opposite(c)
    P = projective_roots(c)
    Q = projective_roots(c_inv)
    C = coxeter_matrix(c)
    Ci = inverse_coxeter_matrix(c)
    for x in c.graph.vertices:
        if not same_vector(-C @ P[x], Q[x]):
            raise FormulaMismatch(f"-c pi(c) != pi(c^-1) at v{x + 1}")
        if not same_vector(-Ci @ Q[x], P[x]):
            raise FormulaMismatch(f"-c^-1 pi(c^-1) != pi(c) at v{x + 1}")
    return {x: (P[x], Q[x]) for x in c.graph.vertices}


@dataclass(frozen=True, eq=False)
class PreprojectiveRecord:
    """A preprojective root with its size ``r``, apex ``x`` and ``W_alpha = W_{r,x}``."""

    root: np.ndarray
    size: int
    apex: int
    principal: PrincipalWord

    @property
    def key(self):
        return root_key(self.root)

    def __eq__(self, other):
        if not isinstance(other, PreprojectiveRecord):
            return NotImplemented
        return self.key == other.key and self.principal.word == other.principal.word

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"PreprojectiveRecord([{format_vector(self.root)}], r={self.size}, x=v{self.apex + 1})"


def root_of_principal(P: PrincipalWord) -> np.ndarray:
    """``rho(W_{r,x}^T)(-alpha_{rho(x)})``."""
    return apply_word(transpose(P.word.word), -simple_root(P.word.base.graph, P.apex))


def w_alpha(alpha, c: Orientation, r_max: Optional[int] = None) -> PreprojectiveRecord:
    """The least admissible word negating ``alpha``, derived from powers of ``c``.

    The size comes from the first negative power, the apex from matching
    ``c^{r-1} alpha`` against the projective roots; both are then validated
    against the principal word.
    """
    alpha = _require_positive(alpha)
    r = preprojective_size(alpha, c, r_max)
    if r is None:
        raise NotPreprojectiveWithinBound(
            f"{alpha} is not negated by c^r for r <= {r_max or default_rmax(c.graph)}"
        )
    C = coxeter_matrix(c)
    beta = alpha
    for _ in range(r - 1):
        beta = C @ beta
    proj = _projective_table(c)
    matches = [x for x, p in enumerate(proj) if same_vector(beta, p)]
    if len(matches) != 1:
        raise NoProjectiveMatch(f"c^{r - 1} alpha = {beta} matches {len(matches)} projective roots")
    x = matches[0]
    P = principal_word(r, x, c)
    minus_simple = -simple_root(c.graph, x)
    if not same_vector(apply_word(P.word.word, alpha), minus_simple):
        raise FormulaMismatch(f"rho(W_({r},v{x + 1})) alpha != -alpha_{x + 1}")
    for i in range(1, r):
        gamma = root_of_principal(principal_word(i, x, c))
        if sign(gamma) is not Sign.POSITIVE:
            raise FormulaMismatch(f"rho(W_({i},v{x + 1})^T)(-alpha_{x + 1}) is not positive")
    return PreprojectiveRecord(alpha.copy(), r, x, P)


@dataclass(frozen=True)
class PsiSet:
    """A finite set of preprojective roots with its least negating word ``W_Psi``."""

    roots: tuple
    independent: bool
    w_psi: AdmissibleWord
    diagnostics: tuple = field(default=(), compare=False)

    @property
    def root_keys(self) -> frozenset:
        return frozenset(r.key for r in self.roots)


def _admissible_levels(c: Orientation, max_length: int):
    """Breadth-first over admissible words; yields ``(length, [(vec, applied, matrix), ...])``."""
    graph = c.graph
    mats = reflection_matrices(graph)
    level = {(0,) * graph.n: (c, (), np.eye(graph.n))}
    yield 0, [(v, a, M) for v, (o, a, M) in level.items()]
    for length in range(1, max_length + 1):
        nxt: dict = {}
        for vec, (o, applied, M) in level.items():
            for v in sorted(o.sinks):
                w = vec[:v] + (vec[v] + 1,) + vec[v + 1:]
                if w not in nxt:
                    nxt[w] = (o.reflect(v), applied + (v,), mats[v] @ M)
        if not nxt:
            return
        level = nxt
        yield length, [(v, a, M) for v, (o, a, M) in sorted(level.items())]


def negating_words(roots: Sequence, c: Orientation, max_length: int):
    """All admissible words of length <= ``max_length`` negating every root in ``roots``.

    Returns ``(multiplicity vector, TraceWord)`` pairs in order of length.
    """
    roots = [np.asarray(a, dtype=float) for a in roots]
    out = []
    for _, items in _admissible_levels(c, max_length):
        for vec, applied, M in items:
            if all(_strict_sign(M @ a, "search") is Sign.NEGATIVE for a in roots):
                out.append((vec, TraceWord.from_applied(c.graph, applied)))
    return out


def least_negating_word(roots: Sequence, c: Orientation, max_length: int) -> Optional[TraceWord]:
    """Brute force: the ⪯-least admissible word negating all ``roots`` among words of length <= bound."""
    found = negating_words(roots, c, max_length)
    if not found:
        return None
    for vec, X in found:
        if all(all(a <= b for a, b in zip(vec, other)) for other, _ in found):
            return X
    return None


def search_least_negating(roots: Sequence, c: Orientation, max_length: int) -> AdmissibleWord:
    """Shortest admissible word negating every root, by breadth-first search over lengths.

    A least negating word is strictly shorter than every other negating
    word, so the first length with a hit has exactly one.
    """
    roots = [np.asarray(a, dtype=float) for a in roots]
    for _, items in _admissible_levels(c, max_length):
        hits = [
            applied for _, applied, M in items
            if all(_strict_sign(M @ a, "search") is Sign.NEGATIVE for a in roots)
        ]
        if len(hits) > 1:
            raise InternalInconsistency("several negating words of minimal length")
        if hits:
            return admissible(TraceWord.from_applied(c.graph, hits[0]), c)
    raise SearchBoundExceeded(f"no negating admissible word of length <= {max_length}")


def default_search_bound(c: Orientation, records: Sequence[PreprojectiveRecord]) -> int:
    top = max((r.size for r in records), default=0)
    return c.graph.n * (top + 2)


def w_psi(
    theta: Iterable,
    c: Orientation,
    r_max: Optional[int] = None,
    search_bound: Optional[int] = None,
    verify: bool = True,
) -> PsiSet:
    """``W_Theta`` for a finite set of preprojective roots.

    When the words ``W_alpha`` form an independent set the answer is their
    join.  Otherwise admissible words are searched by increasing length.
    With ``verify`` the result is also checked to lie below every negating
    admissible word of length <= ``search_bound``.
    """
    records: list[PreprojectiveRecord] = []
    seen = set()
    for a in theta:
        rec = w_alpha(a, c, r_max)
        if rec.key not in seen:
            seen.add(rec.key)
            records.append(rec)
    records.sort(key=lambda rec: (rec.size, rec.apex))
    graph = c.graph
    if not records:
        empty = AdmissibleWord(identity(graph), c, c)
        return PsiSet((), True, empty)
    if search_bound is None:
        search_bound = default_search_bound(c, records)
    J = join_all([rec.principal.word for rec in records], c)
    independent = len(independent_decomposition(J)) == len(records)
    roots = [rec.root for rec in records]
    notes = []
    if independent or all(negates(J.word, a) for a in roots):
        W = J
        if not all(negates(W.word, a) for a in roots):
            raise FormulaMismatch("join of independent W_alpha does not negate every root")
        if not independent:
            notes.append("dependent set; join of W_alpha negates all members")
    else:
        W = search_least_negating(roots, c, search_bound)
        notes.append("dependent set; least word found by search")
    if verify:
        mult = W.multiplicity
        for vec, X in negating_words(roots, c, search_bound):
            if not all(a <= b for a, b in zip(mult, vec)):
                raise InternalInconsistency(f"{W.word} is not below the negating word {X}")
    return PsiSet(tuple(records), independent, W, tuple(notes))


def enumerate_preprojective(c: Orientation, r_max: int) -> dict[int, list[PreprojectiveRecord]]:
    """``r -> P(c, r)`` for ``r = 1 .. r_max``, each root built from its principal word.

    The root ``rho(W_{r,x}^T)(-alpha_x)`` is included when the same expression
    is positive for every ``1 < i <= r``; each hit is cross-checked against
    ``c^{-r+1} pi_x(c)``.
    """
    if r_max < 1:
        raise BadParams("r_max must be >= 1")
    proj = _projective_table(c)
    Ci = inverse_coxeter_matrix(c)
    table: dict[int, list[PreprojectiveRecord]] = {r: [] for r in range(1, r_max + 1)}
    for x in c.graph.vertices:
        back = proj[x].copy()  # c^{-(r-1)} pi_x
        for r in range(1, r_max + 1):
            P = principal_word(r, x, c)
            beta = root_of_principal(P)
            if r > 1:
                back = Ci @ back
            sg = _strict_sign(beta, f"rho(W_({r},v{x + 1})^T)(-alpha)")
            if sg is not Sign.POSITIVE:
                if _strict_sign(back, "c^-i pi") is Sign.POSITIVE:
                    raise FormulaMismatch(f"descriptions of P(c,{r}) disagree at v{x + 1}")
                break
            if not same_vector(beta, back):
                raise FormulaMismatch(f"rho(W^T)(-alpha) != c^(-r+1) pi at r={r}, v{x + 1}")
            table[r].append(PreprojectiveRecord(beta, r, x, P))
    return table


def preprojective_roots(c: Orientation, r_max: int) -> list[PreprojectiveRecord]:
    """Flattened :func:`enumerate_preprojective`, sorted by size then apex."""
    table = enumerate_preprojective(c, r_max)
    return [rec for r in sorted(table) for rec in table[r]]


def finiteness_probe(c: Orientation, r_max: Optional[int] = None) -> Finiteness:
    """FINITE if every simple root is preprojective within ``r_max``; UNKNOWN otherwise."""
    if r_max is None:
        r_max = default_rmax(c.graph)
    for s in c.graph.vertices:
        if preprojective_size(simple_root(c.graph, s), c, r_max) is None:
            return Finiteness.UNKNOWN
    return Finiteness.FINITE


def order_two_check(c: Orientation) -> bool:
    """Whether every simple root is c-projective (which happens exactly for rank 1)."""
    return all(
        preprojective_size(simple_root(c.graph, s), c, 1) == 1 for s in c.graph.vertices
    )


# ---------------------------------------------------------------------------
# classification of finite irreducible Coxeter groups (independent oracle)
# ---------------------------------------------------------------------------


def coxeter_type(graph: CoxeterGraph) -> Optional[str]:
    """Name of the finite type (``"A3"``, ``"E8"``, ``"I2(7)"``, ...) or ``None`` if infinite."""
    n = graph.n
    if n == 1:
        return "A1"
    labels = {e: graph.matrix[e[0]][e[1]] for e in graph.edges}
    if any(m is INF for m in labels.values()):
        return None
    if n == 2:
        m = labels[(0, 1)]
        return {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")
    if len(graph.edges) != n - 1:
        return None
    if any(m >= 6 for m in labels.values()):
        return None
    degree = [len(graph.neighbors[v]) for v in graph.vertices]
    big = [e for e, m in labels.items() if m > 3]
    branch = [v for v in graph.vertices if degree[v] >= 3]
    if not big:
        if not branch:
            return f"A{n}"
        if len(branch) > 1 or degree[branch[0]] > 3:
            return None
        arms = sorted(_arm_length(graph, branch[0], w) for w in graph.neighbors[branch[0]])
        p, q, r = arms
        if 1 / (p + 1) + 1 / (q + 1) + 1 / (r + 1) <= 1:
            return None
        if p == 1 and q == 1:
            return f"D{n}"
        return f"E{n}"
    if len(big) > 1 or branch:
        return None
    (i, j), = big
    m = labels[(i, j)]
    at_end = degree[i] == 1 or degree[j] == 1
    if m == 4:
        if at_end:
            return f"B{n}"
        if n == 4:
            return "F4"
        return None
    if m == 5 and at_end and n in (3, 4):
        return f"H{n}"
    return None


def _arm_length(graph: CoxeterGraph, center: int, start: int) -> int:
    length, prev, cur = 1, center, start
    while True:
        nxt = [w for w in graph.neighbors[cur] if w != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


def finite_type_oracle(graph: CoxeterGraph) -> Finiteness:
    return Finiteness.FINITE if coxeter_type(graph) is not None else Finiteness.INFINITE

