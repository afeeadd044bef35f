import pytest

import tcc


def test_parse():
    p = tcc.parse("AIVL AIVL AIVL")
    assert p["signature"] == "AIVLAIVLAIVL"
    assert p["tiles"] == ["AIVL"] * 3
    assert p["counts"]["AIV"] == 3
    assert p["counts"]["L"] == 3


def test_parse_errors():
    with pytest.raises(tcc.ParseError):
        tcc.parse("DDLDDL")
    with pytest.raises(tcc.TccError):
        tcc.parse("DDLQQLDDL")


def test_build():
    g = tcc.build("HdLHdLHdL")
    assert len(g["vertices"]) == 18
    assert tcc.to_dot("HdLHdLHdL").startswith("graph")


def test_bounds_exact():
    b = tcc.bounds("VBdLVBdLVBdL", exact=True)
    assert b["gamma"]["exact"] == 6
    assert b["gamma"]["upper"] == 6
    assert all(b["checks"].values())


def test_bounds_budget():
    b = tcc.bounds("VBdLVBdLVBdL", exact=True, max_nodes=1)
    assert b["gamma"]["status"] == "budget_exceeded"


def test_solvers_on_edge_lists():
    c6 = [(i, (i + 1) % 6) for i in range(6)]
    assert tcc.gamma(6, c6)["value"] == 2
    assert tcc.alpha(6, c6) == {"value": 3, "witness": [0, 2, 4], "status": "optimal", "nodes": tcc.alpha(6, c6)["nodes"]}
    with pytest.raises(tcc.ValidationError):
        tcc.gamma(3, [(0, 5)])


def test_verify_critical():
    assert tcc.verify_critical("DDLDDLDDL")["is_2cc"]
    k5 = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    r = tcc.verify_critical(order=5, edges=k5)
    assert r["cr_le_1"] and not r["is_2cc"]
    with pytest.raises(ValueError):
        tcc.verify_critical()


def test_family():
    f = tcc.family("G4:n=3")
    assert f["expected"] == {"alpha": 9, "vertices": 18}
    assert f["sharp_bound"] == "alpha_upper"
    with pytest.raises(tcc.ValidationError):
        tcc.family("G1:n=4")


def test_sweep_is_deterministic():
    a = tcc.sweep(3, 5, seed=4, threads=1)
    b = tcc.sweep(3, 5, seed=4, threads=2)
    assert a == b
    assert [r["index"] for r in a] == list(range(5))
    assert tcc.sweep(3, 3, seed=4, start=2, threads=1) == a[2:]
    assert all(r["ok"] for r in a)


def test_catalog_text():
    assert "picture" in tcc.catalog_text()
