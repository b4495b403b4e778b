"""Coxeter matrices, Coxeter graphs and acyclic orientations.

Vertices are the integers ``0 .. n-1``; vertex ``i`` corresponds to the
generator ``s_{i+1}``.  A *vertex order* ``(s_1, ..., s_n)`` is a permutation
of the vertices and stands for the Coxeter element ``c = s_n ... s_1``.  The
matching orientation directs every edge from the vertex that comes later in
the order to the one that comes earlier, so ``s_1`` is always a sink.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    AsymmetricMatrix,
    BadDiagonal,
    BadParams,
    CyclicOrientation,
    Disconnected,
    OffDiagonalBelow2,
    TooManyGenerators,
    UnknownPreset,
)

MAX_RANK = 64


@functools.total_ordering
class _Infinity:
    """The symbolic entry ``m(s, s') = inf``; larger than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("coxpreproj.INF")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _coerce_entry(value):
    if value is INF:
        return INF
    if isinstance(value, str):
        token = value.strip().lower()
        if token in ("inf", "infinity", "oo", "∞"):
            return INF
        return int(token)
    if isinstance(value, float):
        if value == float("inf"):
            return INF
        if not value.is_integer():
            raise ValueError(f"non-integer Coxeter matrix entry {value!r}")
        return int(value)
    return int(value)


@dataclass(frozen=True)
class CoxeterGraph:
    """A validated irreducible Coxeter matrix together with its graph.

    Build instances with :func:`validate_matrix`; the constructor does not
    check anything.
    """

    matrix: tuple

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def label(self, i: int, j: int):
        return self.matrix[i][j]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.matrix[i][j] > 2
        )

    @cached_property
    def neighbors(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_index(self) -> dict:
        index = {}
        for k, (i, j) in enumerate(self.edges):
            index[i, j] = k
            index[j, i] = k
        return index

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        inc = [[] for _ in range(self.n)]
        for k, (i, j) in enumerate(self.edges):
            inc[i].append(k)
            inc[j].append(k)
        return tuple(tuple(x) for x in inc)

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.neighbors[i]

    def commute(self, i: int, j: int) -> bool:
        """Letters ``i`` and ``j`` may be interchanged in the graph monoid."""
        return i != j and j not in self.neighbors[i]

    def is_connected_subset(self, vertices: Iterable[int]) -> bool:
        """Whether the full subgraph on ``vertices`` is connected (empty counts as not)."""
        verts = set(vertices)
        if not verts:
            return False
        start = next(iter(verts))
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in self.neighbors[v]:
                if w in verts and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen == verts

    def __repr__(self):
        rows = "; ".join(" ".join(str(m) for m in row) for row in self.matrix)
        return f"CoxeterGraph([{rows}])"


def validate_matrix(raw: Sequence[Sequence]) -> CoxeterGraph:
    """Check a square table of integers / ``INF`` and return its Coxeter graph.

    Entries may also be the string ``"inf"`` or ``float("inf")``.  Reducible
    systems are rejected with :class:`Disconnected`.
    """
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 0:
        raise BadParams("empty Coxeter matrix")
    if n > MAX_RANK:
        raise TooManyGenerators(f"rank {n} exceeds the supported maximum {MAX_RANK}")
    for r in rows:
        if len(r) != n:
            raise BadParams("Coxeter matrix must be square")
    m = [[_coerce_entry(v) for v in r] for r in rows]
    for i in range(n):
        if m[i][i] != 1:
            raise BadDiagonal(f"m({i + 1},{i + 1}) = {m[i][i]}, expected 1")
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise AsymmetricMatrix(
                    f"m({i + 1},{j + 1}) = {m[i][j]} but m({j + 1},{i + 1}) = {m[j][i]}"
                )
            if m[i][j] is not INF and m[i][j] < 2:
                raise OffDiagonalBelow2(f"m({i + 1},{j + 1}) = {m[i][j]} < 2")
    graph = CoxeterGraph(tuple(tuple(r) for r in m))
    if not graph.is_connected_subset(graph.vertices):
        raise Disconnected("Coxeter graph is disconnected (reducible system)")
    return graph


def check_order(graph: CoxeterGraph, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(int(v) for v in order)
    if sorted(order) != list(graph.vertices):
        raise BadParams(f"{order} is not a permutation of the {graph.n} vertices")
    return order


@dataclass(frozen=True)
class Orientation:
    """An assignment of a direction to each edge of a Coxeter graph.

    ``heads[k]`` is the endpoint of edge ``graph.edges[k]``.  Orientations
    produced by :func:`orientation_from_order` or :func:`from_arrows` are
    acyclic; :func:`reflect_orientation` at a vertex that is neither a sink
    nor a source may produce a cyclic one.
    """

    graph: CoxeterGraph
    heads: tuple[int, ...]

    @cached_property
    def arrows(self) -> tuple[tuple[int, int], ...]:
        out = []
        for (i, j), h in zip(self.graph.edges, self.heads):
            out.append((j, i) if h == i else (i, j))
        return tuple(sorted(out))

    @cached_property
    def successors(self) -> tuple[frozenset, ...]:
        succ = [set() for _ in self.graph.vertices]
        for t, h in self.arrows:
            succ[t].add(h)
        return tuple(frozenset(s) for s in succ)

    @cached_property
    def predecessors(self) -> tuple[frozenset, ...]:
        pred = [set() for _ in self.graph.vertices]
        for t, h in self.arrows:
            pred[h].add(t)
        return tuple(frozenset(s) for s in pred)

    @cached_property
    def sinks(self) -> frozenset:
        return frozenset(v for v in self.graph.vertices if not self.successors[v])

    @cached_property
    def sources(self) -> frozenset:
        return frozenset(v for v in self.graph.vertices if not self.predecessors[v])

    def is_sink(self, v: int) -> bool:
        return not self.successors[v]

    @cached_property
    def is_acyclic(self) -> bool:
        return _topological_sinks_first(self) is not None

    @cached_property
    def reachable(self) -> tuple[frozenset, ...]:
        """``reachable[x]`` is the principal filter ``{y : x <= y}``."""
        if not self.is_acyclic:
            raise CyclicOrientation("reachability poset needs an acyclic orientation")
        reach: dict[int, frozenset] = {}
        for v in _topological_sinks_first(self):
            acc = {v}
            for w in self.successors[v]:
                acc |= reach[w]
            reach[v] = frozenset(acc)
        return tuple(reach[v] for v in self.graph.vertices)

    def reflect(self, x: int) -> "Orientation":
        heads = list(self.heads)
        for k in self.graph.incident_edges[x]:
            i, j = self.graph.edges[k]
            heads[k] = j if heads[k] == i else i
        return Orientation(self.graph, tuple(heads))

    def __repr__(self):
        arrows = ", ".join(f"v{t + 1}->v{h + 1}" for t, h in self.arrows)
        return f"Orientation({arrows})"


def _topological_sinks_first(orient: Orientation):
    """Sinks-first linear order, smallest index first among available; None if cyclic."""
    n = orient.graph.n
    remaining_out = [len(orient.successors[v]) for v in range(n)]
    placed = [False] * n
    order = []
    for _ in range(n):
        candidates = [v for v in range(n) if not placed[v] and remaining_out[v] == 0]
        if not candidates:
            return None
        v = min(candidates)
        placed[v] = True
        order.append(v)
        for u in orient.predecessors[v]:
            remaining_out[u] -= 1
    return tuple(order)


def from_arrows(graph: CoxeterGraph, arrows: Iterable[tuple[int, int]]) -> Orientation:
    """Build an orientation from ``(tail, head)`` pairs, one per edge; must be acyclic."""
    heads: list = [None] * len(graph.edges)
    for t, h in arrows:
        k = graph.edge_index.get((t, h))
        if k is None:
            raise BadParams(f"v{t + 1}-v{h + 1} is not an edge")
        if heads[k] is not None:
            raise BadParams(f"edge v{t + 1}-v{h + 1} oriented twice")
        heads[k] = h
    if any(h is None for h in heads):
        raise BadParams("every edge needs a direction")
    orient = Orientation(graph, tuple(heads))
    if not orient.is_acyclic:
        raise CyclicOrientation(f"{orient} has an oriented cycle")
    return orient


def orientation_from_order(graph: CoxeterGraph, order: Sequence[int]) -> Orientation:
    """The c-orientation of ``c = s_n ... s_1`` for ``order = (s_1, ..., s_n)``."""
    order = check_order(graph, order)
    pos = {v: k for k, v in enumerate(order)}
    heads = tuple(i if pos[j] > pos[i] else j for i, j in graph.edges)
    return Orientation(graph, heads)


def order_from_orientation(orient: Orientation) -> tuple[int, ...]:
    """Inverse of :func:`orientation_from_order` (smallest index first among ties)."""
    order = _topological_sinks_first(orient)
    if order is None:
        raise CyclicOrientation(f"{orient} has an oriented cycle")
    return order


def reflect_orientation(x: int, orient: Orientation) -> Orientation:
    return orient.reflect(x)


def sinks(orient: Orientation) -> frozenset:
    return orient.sinks


def sources(orient: Orientation) -> frozenset:
    return orient.sources


def poset_leq(x: int, y: int, orient: Orientation) -> bool:
    """``x <= y`` in the vertex poset: there is a path from ``x`` to ``y``."""
    return y in orient.reachable[x]


def principal_filter(x: int, orient: Orientation) -> frozenset:
    return orient.reachable[x]


def is_filter(vertices: Iterable[int], orient: Orientation) -> bool:
    verts = set(vertices)
    return all(orient.successors[v] <= verts for v in verts)


def opposite(orient: Orientation) -> Orientation:
    heads = tuple(i if h == j else j for (i, j), h in zip(orient.graph.edges, orient.heads))
    return Orientation(orient.graph, heads)


def all_orientations(graph: CoxeterGraph, acyclic_only: bool = True) -> list[Orientation]:
    """Every orientation of ``graph`` (2**|edges| of them before filtering)."""
    out = []
    edges = graph.edges
    for mask in range(1 << len(edges)):
        heads = tuple(j if (mask >> k) & 1 else i for k, (i, j) in enumerate(edges))
        orient = Orientation(graph, heads)
        if not acyclic_only or orient.is_acyclic:
            out.append(orient)
    return out


# ---------------------------------------------------------------------------
# preset catalog
# ---------------------------------------------------------------------------


def _from_edges(n: int, labelled_edges) -> list[list]:
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, j, label in labelled_edges:
        m[i][j] = m[j][i] = label
    return m


def _path(n: int, labels=None):
    labels = labels or [3] * (n - 1)
    return [(k, k + 1, labels[k]) for k in range(n - 1)]


def _rank(params, name):
    if len(params) != 1:
        raise BadParams(f"{name} needs exactly one parameter")
    try:
        k = int(params[0])
    except (TypeError, ValueError):
        raise BadParams(f"{name}: bad parameter {params[0]!r}") from None
    return k


def preset(name: str, *params) -> CoxeterGraph:
    """Standard Coxeter matrices by type name.

    ``preset("A", 3)``, ``preset("E", 6)`` (or ``preset("E6")``),
    ``preset("I2", 7)``, ``preset("I2", INF)``, ``preset("affineA", 2)``
    (the cycle on 3 vertices), ``preset("affineC", 2)`` and
    ``preset("infdihedral")``.  Vertex labels follow Bourbaki.
    """
    key = name.strip().replace("_", "").replace(" ", "")
    if key and key[-1].isdigit() and not params and key.upper() not in ("I2",):
        head = key.rstrip("0123456789")
        params = (key[len(head):],)
        key = head
    low = key.lower()
    if low in ("infdihedral", "infinitedihedral", "i2inf", "affinea1", "~a1"):
        return validate_matrix([[1, INF], [INF, 1]])
    if low in ("affinea", "~a", "atilde"):
        k = _rank(params, name)
        if k < 1:
            raise BadParams("affine A_n needs n >= 1")
        if k == 1:
            return validate_matrix([[1, INF], [INF, 1]])
        edges = _path(k + 1) + [(k, 0, 3)]
        return validate_matrix(_from_edges(k + 1, edges))
    if low in ("affinec", "~c", "ctilde"):
        k = _rank(params, name)
        if k < 2:
            raise BadParams("affine C_n needs n >= 2")
        labels = [4] + [3] * (k - 2) + [4]
        return validate_matrix(_from_edges(k + 1, _path(k + 1, labels)))
    if low == "i2":
        if len(params) != 1:
            raise BadParams("I2 needs the dihedral order m")
        m = _coerce_entry(params[0])
        if m is not INF and m < 3:
            raise BadParams("I2(m) needs m >= 3 (m = 2 is reducible)")
        return validate_matrix([[1, m], [m, 1]])
    k = _rank(params, name) if params else None
    up = key.upper()
    if k is None:
        raise BadParams(f"type {name} needs a rank")
    if up == "A":
        if k < 1:
            raise BadParams("A_n needs n >= 1")
        return validate_matrix(_from_edges(k, _path(k)))
    if up in ("B", "C"):
        if k < 2:
            raise BadParams("B_n needs n >= 2")
        return validate_matrix(_from_edges(k, _path(k, [3] * (k - 2) + [4])))
    if up == "D":
        if k < 4:
            raise BadParams("D_n needs n >= 4")
        edges = _path(k - 1) + [(k - 3, k - 1, 3)]
        return validate_matrix(_from_edges(k, edges))
    if up == "E":
        if k not in (6, 7, 8):
            raise BadParams("E_n needs n in {6, 7, 8}")
        # Bourbaki: 1-3-4-5-..., with 2 attached to 4
        edges = [(0, 2, 3), (1, 3, 3)] + [(j, j + 1, 3) for j in range(2, k - 1)]
        return validate_matrix(_from_edges(k, edges))
    if up == "F":
        if k != 4:
            raise BadParams("F_n only exists for n = 4")
        return validate_matrix(_from_edges(4, _path(4, [3, 4, 3])))
    if up == "H":
        if k not in (3, 4):
            raise BadParams("H_n needs n in {3, 4}")
        return validate_matrix(_from_edges(k, _path(k, [5] + [3] * (k - 2))))
    if up == "G":
        if k != 2:
            raise BadParams("G_n only exists for n = 2")
        return validate_matrix([[1, 6], [6, 1]])
    raise UnknownPreset(f"unknown Coxeter type {name!r}")


def default_order(graph: CoxeterGraph) -> tuple[int, ...]:
    return tuple(graph.vertices)
