"""The graph monoid of a Coxeter graph: words up to commutation of non-adjacent letters.

Word convention, used everywhere in this package: a word ``x_l ... x_1`` is
stored left to right exactly as written, ``letters = (x_l, ..., x_1)``, and is
*applied right to left*: ``x_1`` acts first.  Concatenation ``X * Y`` is the
word ``XY``, so ``Y`` acts before ``X``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .coxgraph import CoxeterGraph
from .errors import NotADivisor

FoataForm = tuple  # tuple of sorted vertex tuples, first-applied block first


class TraceWord:
    """An element of the graph monoid.

    ``letters`` holds one representative sequence, written left to right
    (rightmost letter applied first).  Equality and hashing go through the
    Foata normal form, so two words are equal iff they are equal as traces.
    """

    __slots__ = ("graph", "letters", "_nf")

    def __init__(self, graph: CoxeterGraph, letters: Iterable[int] = ()):
        self.graph = graph
        self.letters = tuple(int(x) for x in letters)
        n = graph.n
        for x in self.letters:
            if not 0 <= x < n:
                raise ValueError(f"letter {x} is not a vertex of a rank-{n} graph")
        self._nf = None

    @classmethod
    def from_applied(cls, graph: CoxeterGraph, applied: Iterable[int]) -> "TraceWord":
        """Build from letters listed in application order (first-applied first)."""
        return cls(graph, tuple(applied)[::-1])

    @property
    def applied(self) -> tuple[int, ...]:
        """Letters in application order, ``(x_1, ..., x_l)``."""
        return self.letters[::-1]

    def normal_form(self) -> FoataForm:
        if self._nf is None:
            self._nf = normal_form(self)
        return self._nf

    def canonical(self) -> "TraceWord":
        """The same trace, with letters rearranged into Foata order."""
        blocks = self.normal_form()
        applied = [v for block in blocks for v in block]
        return TraceWord.from_applied(self.graph, applied)

    def __eq__(self, other):
        if not isinstance(other, TraceWord):
            return NotImplemented
        return equal(self, other)

    def __hash__(self):
        return hash(self.normal_form())

    def __mul__(self, other: "TraceWord") -> "TraceWord":
        if other.graph != self.graph:
            raise ValueError("cannot multiply words over different graphs")
        return TraceWord(self.graph, self.letters + other.letters)

    def __pow__(self, k: int) -> "TraceWord":
        return TraceWord(self.graph, self.letters * k)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __repr__(self):
        return f"TraceWord({format_word(self)!r})"

    def __str__(self):
        return format_word(self)

    # convenience views
    @property
    def support(self) -> frozenset:
        return support(self)

    @property
    def multiplicity(self) -> tuple[int, ...]:
        return multiplicity(self)

    @property
    def T(self) -> "TraceWord":
        return transpose(self)


def identity(graph: CoxeterGraph) -> TraceWord:
    return TraceWord(graph, ())


def format_word(X: TraceWord) -> str:
    """Space-separated 1-based vertex indices, leftmost first; the empty word is ``e``.

    The leftmost index is the last letter applied.
    """
    if not X.letters:
        return "e"
    return " ".join(str(x + 1) for x in X.letters)


def parse_word(graph: CoxeterGraph, text: str) -> TraceWord:
    """Inverse of :func:`format_word`: ``"1 2 1"`` is v1 v2 v1 (v1 applied first).

    The empty word is written ``""``, ``"e"`` or ``"()"``; ``"1"`` always means v1.
    """
    text = text.strip()
    if text in ("", "e", "()", "-"):
        return identity(graph)
    tokens = text.replace(",", " ").split()
    letters = []
    for tok in tokens:
        k = int(tok.lstrip("vV"))
        if not 1 <= k <= graph.n:
            raise ValueError(f"vertex {k} out of range 1..{graph.n}")
        letters.append(k - 1)
    return TraceWord(graph, letters)


def normal_form(X: TraceWord) -> FoataForm:
    """Foata normal form: blocks of pairwise commuting letters, first-applied block first.

    A letter lands one block above the highest block holding a letter it does
    not commute with (itself included), which is the maximality condition.
    """
    graph = X.graph
    top = [-1] * graph.n  # highest block containing each vertex so far
    blocks: list[list[int]] = []
    nbrs = graph.neighbors
    for v in X.applied:
        level = top[v]
        for w in nbrs[v]:
            if top[w] > level:
                level = top[w]
        level += 1
        if level == len(blocks):
            blocks.append([])
        blocks[level].append(v)
        top[v] = level
    return tuple(tuple(sorted(b)) for b in blocks)


def equal(X: TraceWord, Y: TraceWord) -> bool:
    if X.graph != Y.graph or len(X.letters) != len(Y.letters):
        return False
    if X.letters == Y.letters:
        return True
    return X.normal_form() == Y.normal_form()


def _strip_right(graph: CoxeterGraph, applied: list[int], y: int) -> bool:
    """Remove the first-applied occurrence of ``y`` if nothing applied before it blocks it."""
    nbrs = graph.neighbors[y]
    for k, v in enumerate(applied):
        if v == y:
            del applied[k]
            return True
        if v in nbrs:
            return False
    return False


def _strip(X: TraceWord, Y: TraceWord):
    if X.graph != Y.graph:
        raise ValueError("words over different graphs")
    rest = list(X.applied)
    for y in Y.applied:
        if not _strip_right(X.graph, rest, y):
            return None
    return rest


def divides(Y: TraceWord, X: TraceWord) -> bool:
    """``Y ⪯ X``: ``X = U Y`` for some ``U`` (``Y`` is a right divisor, applied first)."""
    if len(Y) > len(X):
        return False
    return _strip(X, Y) is not None


def quotient(X: TraceWord, Y: TraceWord) -> TraceWord:
    """The unique ``U`` with ``X = U Y``."""
    rest = _strip(X, Y) if len(Y) <= len(X) else None
    if rest is None:
        raise NotADivisor(f"{format_word(Y)} does not divide {format_word(X)} on the right")
    return TraceWord.from_applied(X.graph, rest)


def support(X: TraceWord) -> frozenset:
    return frozenset(X.letters)


def multiplicity(X: TraceWord) -> tuple[int, ...]:
    counts = [0] * X.graph.n
    for x in X.letters:
        counts[x] += 1
    return tuple(counts)


def length(X: TraceWord) -> int:
    return len(X.letters)


def transpose(X: TraceWord) -> TraceWord:
    return TraceWord(X.graph, X.letters[::-1])


def is_multiplicity_free(X: TraceWord) -> bool:
    return len(set(X.letters)) == len(X.letters)


def word(graph: CoxeterGraph, letters: Sequence[int]) -> TraceWord:
    """Shorthand for ``TraceWord(graph, letters)`` with 0-based letters written left to right."""
    return TraceWord(graph, letters)
