from itertools import combinations

import pytest

from conftest import group_of, order_of
from cosetgeom.geometry import (IncidenceGeometry, geometry_from_class,
                                incidence_graph_stats, maximal_cliques,
                                pair_classes, polygon_check, recognize)
from cosetgeom.geometry import collinearity_dot, incidence_dot
from cosetgeom.perms import PermGroup, parse_cycles


def test_incidence_geometry_validation():
    IncidenceGeometry(3, ((0, 1), (0, 2)))
    with pytest.raises(ValueError):
        IncidenceGeometry(3, ((0,),))
    with pytest.raises(ValueError):
        IncidenceGeometry(3, ((1, 0),))
    with pytest.raises(ValueError):
        IncidenceGeometry(3, ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        IncidenceGeometry(3, ((0, 1), (0, 1, 2)))


def test_maximal_cliques_square_plus_diagonal():
    # 4-cycle with one chord: cliques {0,1,2} triangle and edges
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]
    cliques = maximal_cliques(4, edges)
    assert (0, 1, 2) in cliques
    assert (0, 2, 3) in cliques
    assert len(cliques) == 2


def test_pair_classes_regular_action():
    # Z4 acting on itself: all two-point stabilizers trivial
    g = PermGroup([parse_cycles("(1,2,3,4)", 4)])
    classes = pair_classes(g)
    assert all(c.stab_order == 1 for c in classes)
    assert sum(len(c.pairs) for c in classes) == 6


def test_pair_classes_sorted_and_partition(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9 and order_of(t) == 36)
    g = group_of(t)
    classes = pair_classes(g)
    assert [c.stab_order for c in classes] == [2, 1]
    assert sorted(len(c.pairs) for c in classes) == [18, 18]
    everything = set()
    for c in classes:
        everything.update(c.pairs)
    assert everything == set(combinations(range(9), 2))


def test_k19_grids(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9 and order_of(t) == 36)
    g = group_of(t)
    for cls in pair_classes(g):
        geom = geometry_from_class(g, cls.pairs)
        assert recognize(geom) == "GQ(2,1)"
        check = polygon_check(geom)
        assert check.is_gp and (check.n, check.s, check.t) == (4, 2, 1)


def test_hesse_from_fix_sets(k4_to_9):
    hits = 0
    for t in (t for t in k4_to_9 if t.n == 9 and order_of(t) == 144):
        g = group_of(t)
        (cls,) = pair_classes(g)
        geom = geometry_from_class(g, cls.pairs)
        assert recognize(geom) == "Hesse configuration"
        assert len(geom.lines) == 12
        assert not polygon_check(geom).is_gp
        hits += 1
    assert hits == 2


def test_pentagram_from_cliques(k1_to_10):
    t = next(t for t in k1_to_10 if t.n == 10 and order_of(t) == 60)
    g = group_of(t)
    classes = pair_classes(g)
    trivial = next(c for c in classes if c.stab_order == 1)
    geom = geometry_from_class(g, trivial.pairs)
    assert recognize(geom) == "Mermin pentagram"
    assert len(geom.lines) == 5 and all(len(l) == 4 for l in geom.lines)
    petersen = next(c for c in classes if c.stab_order == 2)
    assert recognize(geometry_from_class(g, petersen.pairs)) == "Petersen graph"


def test_k6_from_complete_trivial_class(k1_to_10):
    for t in (t for t in k1_to_10 if t.n == 6 and order_of(t) == 6):
        g = group_of(t)
        (cls,) = pair_classes(g)
        geom = geometry_from_class(g, cls.pairs)
        assert recognize(geom) == "K6"
        assert len(geom.lines) == 15


def test_fano(k1_pres):
    from cosetgeom import low_index_subgroups
    tables = [t for t in low_index_subgroups(k1_pres, 7) if t.n == 7]
    assert len(tables) == 2
    for t in tables:
        g = group_of(t)
        (cls,) = pair_classes(g)
        geom = geometry_from_class(g, cls.pairs)
        assert recognize(geom) == "Fano plane"
        check = polygon_check(geom)
        assert check.is_gp and (check.n, check.s, check.t) == (3, 2, 2)


def test_stats_single_line_acyclic():
    geom = IncidenceGeometry(3, ((0, 1, 2),))
    stats = incidence_graph_stats(geom)
    assert stats.connected
    assert stats.diameter == 2
    assert stats.girth is None


def test_stats_disconnected_flag():
    geom = IncidenceGeometry(4, ((0, 1), (2, 3)))
    assert not incidence_graph_stats(geom).connected


def test_polygon_check_ordinary_pentagon():
    geom = IncidenceGeometry(5, tuple(
        tuple(sorted((i, (i + 1) % 5))) for i in range(5)))
    check = polygon_check(geom)
    # thin (s=1): gonality 5 allowed despite 5 not in the thick spectrum
    assert check.is_gp and (check.n, check.s, check.t) == (5, 1, 1)


def test_recognize_no_match():
    geom = IncidenceGeometry(4, tuple(
        tuple(sorted((i, (i + 1) % 4))) for i in range(4)))
    assert recognize(geom) is None


def test_geometry_conjugation_invariance(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9 and order_of(t) == 36)
    g = group_of(t)
    sigma = parse_cycles("(1,9)(2,8)", 9)
    g2 = PermGroup([p.relabel(sigma) for p in g.generators])
    names = sorted(recognize(geometry_from_class(g, c.pairs)) or "-"
                   for c in pair_classes(g))
    names2 = sorted(recognize(geometry_from_class(g2, c.pairs)) or "-"
                    for c in pair_classes(g2))
    assert names == names2


def test_double_count_identity(k1_to_10):
    for t in k1_to_10:
        if t.n < 3:
            continue
        g = group_of(t)
        for cls in pair_classes(g):
            geom = geometry_from_class(g, cls.pairs)
            check = polygon_check(geom)
            if check.is_gp:
                assert geom.n * (check.t + 1) == len(geom.lines) * (check.s + 1)


def test_exports():
    geom = IncidenceGeometry(3, ((0, 1), (1, 2)))
    assert geom.to_json_dict() == {"points": 3, "lines": [[1, 2], [2, 3]]}
    assert collinearity_dot(geom).startswith("graph collinearity {")
    assert "p1 -- L1" in incidence_dot(geom)
