import cmath
import math

import pytest

import tornheim


def test_T_at_two_matches_zeta6_over_3():
    v = tornheim.evaluate("T", 2, 2, 2)
    assert v.converged
    assert abs(v.value - math.pi**6 / 2835) < 1e-10
    assert v.method == "iii"


def test_T_one_one_one_is_twice_zeta3():
    assert abs(tornheim.T(1, 1, 1) - 2.4041138063191885) < 1e-9


def test_against_the_double_sum():
    s, t, u = 2.5 + 0.3j, 2.1 - 0.4j, 2.8
    o = tornheim.oracle_T(s, t, u, N=4000)
    assert abs(tornheim.T(s, t, u) - o.value) <= 1e-8 + o.tail_bound


def test_legacy_and_new_agree():
    p = (0.3 + 0.2j, -1.2 + 0.1j, 1.7)
    for fn in ("S1", "S2"):
        a = tornheim.evaluate(fn, *p, method="new").value
        b = tornheim.evaluate(fn, *p, method="legacy").value
        assert abs(a - b) < 1e-9


def test_singular_point_raises():
    with pytest.raises(tornheim.SingularPointError):
        tornheim.evaluate("T", 0.5, 0.5, 0.5)
    reports = tornheim.classify("T", 0.5, 0.5, 0.5)
    assert any(r.hyperplane == "t+u in Z<=1" and r.distance == 0 for r in reports)
    assert issubclass(tornheim.SingularPointError, tornheim.TornheimError)


def test_diagonal_and_poles():
    assert abs(tornheim.eval_T_diag(1e-6).value - 1 / 3) < 1e-4
    poles = tornheim.scan_poles(-1.0, 1.0)
    assert [round(p.location, 6) for p in poles] == [-0.5, 0.5, round(2 / 3, 6)]
    r = tornheim.residue_diag(2 / 3)
    assert abs(r.value.real - math.gamma(1 / 3) ** 3 / (2 * math.pi * math.sqrt(3))) < 1e-6
    with pytest.raises(tornheim.NotAPoleError):
        tornheim.residue_diag(0.6)


def test_literals_round_trip():
    z = complex(0.1, -2 / 3)
    assert tornheim.parse_complex(tornheim.format_complex(z)) == z
    with pytest.raises(tornheim.ParseError):
        tornheim.parse_complex("1+i")


def test_selftest_passes_and_detects_a_fault():
    assert all(r["passed"] for r in tornheim.selftest())
    failed = [r["name"] for r in tornheim.selftest(inject_eta_sign_fault=True) if not r["passed"]]
    assert failed == ["oracle-grid"]
