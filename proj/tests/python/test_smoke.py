from fractions import Fraction
from pathlib import Path

import pytest

import homarea

DATA = Path(__file__).resolve().parents[2] / "data"


def test_fixtures():
    a = homarea.min_homotopy_area([(0, 0), (4, 0)], [(0, 0), (2, 2), (4, 0)])
    assert a.sigma == 4 and a.anchors == ()
    b = homarea.min_homotopy_area([(0, 0), (4, 0)], [(0, 0), (1, 2), (3, -2), (4, 0)])
    assert b.sigma == 4
    assert [x.point for x in b.anchors] == [(2, 0)]
    assert b.segment_costs == (2, 2)
    c = homarea.min_homotopy_area([(0, 0), (4, 0)], [(0, 0), (3, 3), (6, 0), (3, -3), (4, 0)])
    assert c.sigma == 12


def test_exact_inputs():
    r = homarea.min_homotopy_area([("0", "0"), ("1/3", 0), ("0.5", "0.25")],
                                  [(0, 0), (Fraction(1, 6), Fraction(-1, 6)), (0.5, 0.25)])
    assert isinstance(r.sigma, Fraction)
    assert r.sigma == homarea.oracle_dp([(0, 0), ("1/3", 0), ("1/2", "1/4")],
                                        [(0, 0), ("1/6", "-1/6"), ("1/2", "1/4")])


def test_seeded_reruns_agree():
    p = [(0, 0), (4, 0)]
    q = [(0, 0), (3, 3), (6, 0), (3, -3), (4, 0)]
    base = homarea.min_homotopy_area(p, q)
    for seed in range(5):
        assert homarea.min_homotopy_area(p, q, seed=seed) == base


def test_sphere():
    p, q = [(0, 0), (4, 0)], [(0, 0), (2, 2), (4, 0)]
    assert homarea.min_homotopy_area_sphere(p, q, 6).sigma == 2
    assert homarea.min_homotopy_area_sphere(p, q, 100).sigma == 4
    assert homarea.oracle_sphere(p, q, 6) == 2
    with pytest.raises(homarea.InputError):
        homarea.min_homotopy_area_sphere(p, q, 3)


def test_cycles():
    nested = homarea.min_homotopy_area_cycles([(0, 0), (4, 0), (4, 4), (0, 4)], [(1, 1), (3, 1), (3, 3), (1, 3)])
    assert nested.sigma == 12 and nested.kind == "nested" and not nested.infimum
    disjoint = homarea.min_homotopy_area_cycles([(0, 0), (1, 0), (1, 1), (0, 1)], [(3, 0), (4, 0), (4, 1), (3, 1)])
    assert disjoint.sigma == 2 and disjoint.infimum
    assert homarea.oracle_cycles([(0, 0), (1, 0), (1, 1), (0, 1)], [(3, 0), (4, 0), (4, 1), (3, 1)]) == (2, True)


def test_degenerate_input_raises():
    with pytest.raises(homarea.InputError):
        homarea.min_homotopy_area([(0, 0), (4, 0)], [(0, 0), (2, 0), (4, 0)])
    with pytest.raises(homarea.InputError):
        homarea.min_homotopy_area([(0, 0), (4, 0)], [(0, 0), ("x", 1), (4, 0)])


def test_parse_and_cli():
    f = homarea.parse_curve_file((DATA / "fix_a_sphere.curves").read_text())
    assert f["kind"] == "paths" and f["sphere_area"] == 6
    code, out, _ = homarea.run("area", str(DATA / "fix_b.curves"))
    assert code == 0 and "sigma = 4" in out
    code, _, err = homarea.run("area", str(DATA / "overlap.curves"))
    assert code == 2 and err
