from fractions import Fraction

import pytest

from conftest import group_of, order_of
from cosetgeom.contextuality import (CosetLabeling, calibrate_mode,
                                     contextuality_report,
                                     labeling_from_table, line_commutes,
                                     to_dot)
from cosetgeom.geometry import geometry_from_class, pair_classes, recognize
from cosetgeom.toddcox import transversal


def labelings_of(table):
    g = group_of(table)
    for cls in pair_classes(g):
        geom = geometry_from_class(g, cls.pairs)
        yield cls, labeling_from_table(table, geom)


def test_labeling_validation(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9)
    g = group_of(t)
    geom = geometry_from_class(g, pair_classes(g)[0].pairs)
    with pytest.raises(ValueError):
        CosetLabeling(geom, tuple(transversal(t))[:-1], t)


def test_bad_mode(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9)
    _, lab = next(labelings_of(t))
    with pytest.raises(ValueError):
        line_commutes(lab, lab.geometry.lines[0], "quantum")


def test_k19_grid_verdicts(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9 and order_of(t) == 36)
    scores = {}
    for cls, lab in labelings_of(t):
        r = contextuality_report(lab, "coset")
        assert recognize(lab.geometry) == "GQ(2,1)"
        scores[cls.stab_order] = r.score
    assert scores == {2: Fraction(2, 3), 1: Fraction(1)}


def test_k6_gamma2_type_verdicts(k1_to_10):
    # the order-6 nonabelian quotient: 9 of 15 lines non-commuting
    t = next(t for t in k1_to_10 if t.n == 6 and order_of(t) == 6
             and group_of(t).derived_index() == 2)
    _, lab = next(labelings_of(t))
    r = contextuality_report(lab, "coset")
    assert r.score == Fraction(3, 5)
    # the abelian order-6 quotient commutes everywhere
    t2 = next(t for t in k1_to_10 if t.n == 6 and order_of(t) == 6
              and group_of(t).derived_index() == 6)
    _, lab2 = next(labelings_of(t2))
    assert contextuality_report(lab2, "coset").score == 0


def test_lines_through_identity_commute_when_reps_commute(k1_to_10):
    # pairs involving the identity coset always commute in both modes
    for t in k1_to_10:
        if t.n < 3:
            continue
        for _, lab in labelings_of(t):
            for line in lab.geometry.lines:
                if 0 in line and len(line) == 2:
                    for mode in ("perm", "coset"):
                        assert line_commutes(lab, line, mode)


def test_mode_monotonicity(k19_to_9, k1_to_10):
    for t in list(k19_to_9) + list(k1_to_10):
        if t.n < 3:
            continue
        for _, lab in labelings_of(t):
            for line in lab.geometry.lines:
                if line_commutes(lab, line, "perm"):
                    assert line_commutes(lab, line, "coset")


def test_report_shape(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9 and order_of(t) == 36)
    _, lab = next(labelings_of(t))
    r = contextuality_report(lab, "coset")
    d = r.to_json_dict()
    assert d["mode"] == "coset"
    assert len(d["lines"]) == len(lab.geometry.lines)
    assert isinstance(d["maximal"], bool)
    num, den = d["score"].split("/")
    assert int(den) > 0


def test_maximal_definition(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9 and order_of(t) == 36)
    for _, lab in labelings_of(t):
        r = contextuality_report(lab, "coset")
        expected = all((0 in line) == c for line, c in r.per_line)
        assert r.maximal == expected


def test_calibrate_mode_counts(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9 and order_of(t) == 36)
    _, lab = next(labelings_of(t))
    expected = {line: line_commutes(lab, line, "coset")
                for line in lab.geometry.lines}
    out = calibrate_mode([(lab, expected)])
    assert out["coset"] == (len(expected), len(expected))
    agree, total = out["perm"]
    assert total == len(expected)


@pytest.mark.xfail(strict=True,
                   reason="coset-mode verdicts are transversal-dependent: "
                          "[h*a, b] in H is not equivalent to [a, b] in H; "
                          "measured violations on this suite")
def test_rep_change_invariance(k1_pres):
    from cosetgeom import low_index_subgroups, schreier_generators
    for t in low_index_subgroups(k1_pres, 7):
        if t.n < 3:
            continue
        reps = transversal(t)
        hs = list(schreier_generators(t).generators)[:3]
        for _, lab in labelings_of(t):
            for line in lab.geometry.lines[:6]:
                base = line_commutes(lab, line, "coset")
                for h in hs:
                    for i in line:
                        reps2 = list(reps)
                        reps2[i] = h * reps2[i]
                        lab2 = CosetLabeling(lab.geometry, tuple(reps2), t)
                        assert line_commutes(lab2, line, "coset") == base


def test_dot_export(k19_to_9):
    t = next(t for t in k19_to_9 if t.n == 9 and order_of(t) == 36)
    _, lab = next(labelings_of(t))
    dot = to_dot(lab, "coset")
    assert dot.startswith("graph contextuality {")
    assert "red" in dot
