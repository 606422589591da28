import json
from fractions import Fraction

import pytest

import hdx


def test_triangle_weights_and_norms():
    T = hdx.Complex([["a", "b", "c"]])
    assert T.dim == 2
    assert T.num_faces(1) == 3
    assert hdx.weight(T, ["a"]) == Fraction(1, 3)
    assert hdx.norm(T, [["a", "b"], ["b", "c"]]) == Fraction(2, 3)


def test_not_pure_raises():
    with pytest.raises(hdx.HdxError, match="NotPure"):
        hdx.Complex([["a", "b", "c"], ["c", "d"]])


def test_coboundary_squares_to_zero():
    X, _ = hdx.generate("complete", n=5, d=2)
    d1 = hdx.coboundary(X, [["0"], ["2"]])
    assert d1
    assert hdx.coboundary(X, d1, k=1) == []


def test_edge_expansion():
    E = hdx.Complex([["u", "v"]])
    r = hdx.expansion(E, 0)
    assert hdx.fraction(r["value"]) == 2


def test_cycle_cosystole():
    C, _ = hdx.generate("cycle", n=8)
    assert hdx.fraction(hdx.cosystole(C, 1)["value"]) == Fraction(1, 8)


def test_minimize_reaches_locally_minimal():
    C, _ = hdx.generate("cycle", n=4)
    t = hdx.minimize(C, [["0", "1"], ["1", "2"], ["2", "3"]])
    assert len(t["final"]["faces"]) == 1


def test_fat_profile_runs():
    X, _ = hdx.generate("complete", n=5, d=2)
    p = hdx.fat_profile(X, [["0", "1"]], Fraction(1, 2))
    assert isinstance(p, dict)


def test_flag_complex_spectrum():
    P, types = hdx.generate("projective_flag", q=2, n=3)
    assert types is not None
    s = hdx.spectrum(P, types)
    assert s["spectrum"]["lambda"] == pytest.approx(2 ** 0.5 / 3, abs=1e-9)


def test_constants():
    c = hdx.constants(2)
    assert hdx.fraction(c["c0"]) == Fraction(1, 64)


def test_criterion_complete():
    X, _ = hdx.generate("complete", n=5, d=2)
    r = hdx.criterion(X)
    assert r["Q"] == 11
    assert r["hypotheses"]["verdict"] == "met"
    assert r["conclusions"]["pass"]


def test_cli_in_process():
    code, out, _ = hdx.cli("info", "--gen", "cycle", "--n", "5")
    assert code == 0
    assert json.loads(out)["schema"] == hdx.SCHEMA
