import pytest

from coxpreproj.coxgraph import (
    INF,
    all_orientations,
    from_arrows,
    is_filter,
    opposite,
    order_from_orientation,
    orientation_from_order,
    poset_leq,
    preset,
    principal_filter,
    reflect_orientation,
    sinks,
    sources,
    validate_matrix,
)
from coxpreproj.errors import (
    AsymmetricMatrix,
    BadDiagonal,
    BadParams,
    CyclicOrientation,
    Disconnected,
    OffDiagonalBelow2,
    TooManyGenerators,
    UnknownPreset,
)

from systems import CATALOG, a3_inward

A2 = preset("A", 2)
A3 = preset("A", 3)


class TestValidate:
    def test_single_edge(self):
        g = validate_matrix([[1, 3], [3, 1]])
        assert g.n == 2 and g.edges == ((0, 1),) and g.label(0, 1) == 3

    def test_reducible_rejected(self):
        with pytest.raises(Disconnected):
            validate_matrix([[1, 2], [2, 1]])

    def test_asymmetric(self):
        with pytest.raises(AsymmetricMatrix):
            validate_matrix([[1, 3], [4, 1]])

    def test_diagonal(self):
        with pytest.raises(BadDiagonal):
            validate_matrix([[2, 3], [3, 1]])

    def test_below_two(self):
        with pytest.raises(OffDiagonalBelow2):
            validate_matrix([[1, 1], [1, 1]])

    def test_infinity_tokens(self):
        for tok in ("inf", float("inf"), INF):
            g = validate_matrix([[1, tok], [tok, 1]])
            assert g.label(0, 1) is INF

    def test_rank_limit(self):
        n = 65
        m = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)] for i in range(n)]
        with pytest.raises(TooManyGenerators):
            validate_matrix(m)

    def test_infinity_is_not_an_integer(self):
        assert INF > 10**9 and INF != 10**9 and str(INF) == "inf"


class TestOrientations:
    def test_a2_order(self):
        assert orientation_from_order(A2, (0, 1)).arrows == ((1, 0),)
        assert orientation_from_order(A2, (1, 0)).arrows == ((0, 1),)

    def test_a3_middle_first(self):
        o = orientation_from_order(A3, (1, 0, 2))
        assert set(o.arrows) == {(0, 1), (2, 1)}
        assert o.sinks == {1}

    def test_order_from_orientation(self):
        o = orientation_from_order(A2, (0, 1))
        assert order_from_orientation(o) == (0, 1)
        assert order_from_orientation(a3_inward()) == (1, 0, 2)

    @pytest.mark.parametrize("name,p", CATALOG)
    def test_round_trip(self, name, p):
        g = preset(name, p)
        for o in all_orientations(g):
            assert orientation_from_order(g, order_from_orientation(o)) == o

    def test_cyclic_detected(self):
        g = preset("affineA", 2)
        with pytest.raises(CyclicOrientation):
            from_arrows(g, [(0, 1), (1, 2), (2, 0)])
        cyclic = [o for o in all_orientations(g, acyclic_only=False) if not o.is_acyclic]
        assert len(cyclic) == 2
        with pytest.raises(CyclicOrientation):
            order_from_orientation(cyclic[0])

    def test_reflect(self):
        o = orientation_from_order(A2, (0, 1))
        assert reflect_orientation(0, o).arrows == ((0, 1),)
        for name, p in CATALOG[:10]:
            for lam in all_orientations(preset(name, p)):
                for x in lam.graph.vertices:
                    assert lam.reflect(x).reflect(x) == lam
                for x in lam.sinks | lam.sources:
                    assert lam.reflect(x).is_acyclic

    def test_sinks_and_sources(self):
        o = orientation_from_order(A2, (0, 1))
        assert sinks(o) == {0} and sources(o) == {1}
        assert sinks(a3_inward()) == {1}
        for name, p in CATALOG:
            if p == 1:
                continue
            for lam in all_orientations(preset(name, p))[:8]:
                assert not (lam.sinks & lam.sources)

    def test_poset(self):
        o = orientation_from_order(A2, (0, 1))
        assert poset_leq(1, 0, o) and not poset_leq(0, 1, o)
        assert all(poset_leq(x, x, o) for x in A2.vertices)
        assert principal_filter(1, o) == {0, 1}
        assert is_filter({0}, o) and not is_filter({1}, o)

    def test_opposite(self):
        o = orientation_from_order(A2, (0, 1))
        assert opposite(o) == orientation_from_order(A2, (1, 0))
        for name, p in CATALOG:
            g = preset(name, p)
            order = tuple(g.vertices)
            lam = orientation_from_order(g, order)
            assert opposite(opposite(lam)) == lam
            assert sinks(lam) == sources(opposite(lam))
            assert opposite(lam) == orientation_from_order(g, order[::-1])

    def test_orientation_counts(self):
        for k, count in ((3, 4), (4, 8), (5, 16)):
            assert len(all_orientations(preset("A", k))) == count


class TestPresets:
    def test_textbook(self):
        assert preset("A", 2).matrix == ((1, 3), (3, 1))
        assert preset("I2", INF).matrix == ((1, INF), (INF, 1))
        b3 = preset("B", 3)
        assert b3.edges == ((0, 1), (1, 2)) and [b3.label(*e) for e in b3.edges] == [3, 4]

    def test_compact_names(self):
        assert preset("E6") == preset("E", 6)
        assert preset("H3") == preset("H", 3)
        assert preset("infdihedral") == preset("I2", "inf") == preset("affineA", 1)

    def test_affine(self):
        g = preset("affineA", 2)
        assert g.n == 3 and len(g.edges) == 3
        c2 = preset("affineC", 2)
        assert [c2.label(*e) for e in c2.edges] == [4, 4]

    def test_e8_shape(self):
        g = preset("E", 8)
        degrees = sorted(len(g.neighbors[v]) for v in g.vertices)
        assert degrees == [1, 1, 1, 2, 2, 2, 2, 3]

    def test_errors(self):
        with pytest.raises(UnknownPreset):
            preset("Q", 3)
        with pytest.raises(BadParams):
            preset("E", 5)
        with pytest.raises(BadParams):
            preset("I2", 2)
