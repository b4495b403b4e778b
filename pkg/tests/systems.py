"""Named systems shared by the tests."""

from coxpreproj.coxgraph import (
    INF,
    all_orientations,
    from_arrows,
    orientation_from_order,
    preset,
)

# Every preset with n <= 6.
CATALOG = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5), ("A", 6),
    ("B", 2), ("B", 3), ("B", 4), ("B", 5), ("B", 6),
    ("D", 4), ("D", 5), ("D", 6),
    ("E", 6), ("F", 4), ("H", 3), ("H", 4), ("G", 2),
    ("I2", 5), ("I2", 7), ("I2", INF),
    ("affineA", 2), ("affineA", 3), ("affineA", 4), ("affineA", 5),
    ("affineC", 2), ("affineC", 3), ("affineC", 4), ("affineC", 5),
]


def graph(name, param=None):
    return preset(name) if param is None else preset(name, param)


def standard(name, param=None):
    """The orientation of ``c = s_n ... s_1``."""
    g = graph(name, param)
    return orientation_from_order(g, tuple(g.vertices))


def catalog_orientations():
    """``(label, orientation)`` for every acyclic orientation of every catalog system."""
    for name, p in CATALOG:
        for k, o in enumerate(all_orientations(preset(name, p))):
            yield f"{name}{p}#{k}", o


def a3_inward():
    """A3 with arrows v1 -> v2 <- v3."""
    return from_arrows(preset("A", 3), [(0, 1), (2, 1)])


def a3_outward():
    """A3 with arrows v2 -> v1 and v2 -> v3."""
    return from_arrows(preset("A", 3), [(1, 0), (1, 2)])
