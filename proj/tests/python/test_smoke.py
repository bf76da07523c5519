from fractions import Fraction

import pytest

import symcert
from symcert import Polynomial


def test_version_and_orientation():
    assert symcert.__version__
    assert symcert.ORIENTATION == "dx1^dx2^dx3^dy1^dy2^dy3"


def test_polynomial_roundtrip_and_arithmetic():
    p = Polynomial.parse("1/2*x1^3*y2 - 7/6*x1")
    assert str(p) == "1/2*x1^3*y2 - 7/6*x1"
    assert Polynomial.parse(str(p)) == p
    x = Polynomial.variable(0)
    assert str(x * x - x * x) == "0"
    assert symcert.evaluate(p, [2, 0, 0, 0, 3, 0]) == Fraction(12) - Fraction(7, 3)
    with pytest.raises(ValueError):
        Polynomial.parse("x7")


def test_construction_anchor_values():
    c = symcert.build_construction()
    p = c["p"]
    assert [symcert.evaluate(p, [t, 0, 0, 0, 0, 0]) for t in (0, 1, 3)] == [1, 0, -1]
    assert symcert.evaluate(c["Q"], [3, 0, 0, 0, 0, 0]) == 22
    assert "dx1^dy1" in c["dpsi"]


def test_psi_vanishes_on_torus():
    pts = symcert.sample_torus_points(25, seed=1)
    assert len(pts) == 25
    for pt in pts:
        assert all(pt[a] ** 2 + pt[a + 3] ** 2 == 1 for a in range(3))
        assert symcert.psi_at(pt) == {}


def test_rank_four_on_sphere():
    for pt in symcert.sample_sphere_points(10, seed=2):
        assert sum(x * x for x in pt) == 3
        assert symcert.rank4_at(pt) == 4
    with pytest.raises(ValueError):
        symcert.rank4_at([0] * 6)


def test_branch_and_bound_and_replay():
    rs = symcert.reduced_system()
    x, y = Polynomial.variable(0), Polynomial.variable(1)
    simplex = [(x + y - Polynomial("3"), "le")]
    r = symcert.bb_lower_bound(rs["Q_simplex_2d"], [(0, 3), (0, 3)], simplex, Fraction(1, 200))
    assert r["status"] == "certified"
    assert r["certified_lower_bound"] >= Fraction(1, 200)
    replay = symcert.replay_certificate(r["certificate"])
    assert replay["ok"] and replay["discrepancies"] == 0
    g = symcert.grid_oracle_min(rs["Q_simplex_2d"], [(0, 3), (0, 3)], simplex, Fraction(1, 10))
    assert g["value"] >= r["certified_lower_bound"]

    tiny = symcert.bb_lower_bound(x * x, [(-1, 1)], [], -1)
    assert tiny["status"] == "certified" and tiny["certified_lower_bound"] == 0


def test_run_checks_report():
    report, code = symcert.run_checks("torus-exact", samples=100, seed=1)
    assert code == 0
    assert report["overall_status"] == "pass"
    assert report["checks"][0]["details"]["exact_zero_covectors"] == "100/100"
    again, _ = symcert.run_checks("torus-exact", samples=100, seed=1)
    assert again == report
    with pytest.raises(ValueError):
        symcert.run_checks("not-a-check")
    assert len(symcert.check_ids()) == 9
