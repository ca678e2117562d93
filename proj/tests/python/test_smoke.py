import pytest

import acsa


def test_construct_and_verify():
    m = acsa.construct("AB", 3, "y")
    assert m["type"] == {"kind": "AB", "d": 3, "n": "y"}
    assert m["basis"] == "constructor"
    assert m["x"]["order"] == 4
    v = acsa.verify(m)
    assert v == {"xyz_ok": True, "xy_ok": True, "irreducible": True}
    assert acsa.classify(m) == m["type"]


def test_odd_B_is_refused():
    with pytest.raises(acsa.PreconditionError):
        acsa.construct("B", 3)


def test_malformed_payload():
    with pytest.raises(acsa.ParseError):
        acsa.verify({"x": 1})


def test_eig_matches_module_spectra():
    e = acsa.eig("B", 4)
    assert e["x"] == ["4", "-2", "0", "2", "-4"]
    assert e["x"] == e["y"] == e["z"]


def test_twist_moves_the_character():
    m = acsa.construct("AB", 2, "0")
    t = acsa.twist(m, "(0 x)")
    assert t["type"] == {"kind": "AB", "d": 2, "n": "x"}
    assert t["basis"] == "ambient"
    assert acsa.verify(t)["xyz_ok"]


def test_recognition_round_trip():
    m = acsa.construct("B", 4)
    for key in ("x", "y"):
        entries = m[key]["entries"]
        scale = 3 if key == "x" else -2
        m[key]["entries"] = [
            [str(scale * int(v)) for v in row] for row in entries
        ]
    r = acsa.recognize_pair(m)
    assert r["rho"] == "36"
    assert r["rho_star"] == "16"
    assert r["xi"] == "3"
    assert r["xi_star"] == "2"
    assert r["choices"] == 4
    assert len(acsa.pair_choices(m)) == 4


def test_fit_aw_canonical():
    m = acsa.construct("AB", 5, "z")
    w = acsa.fit_aw(m)
    assert w["beta"] == "-2"
    assert w["rho"] == "4"
    assert w["rho_star"] == "4"
    assert w["unique"] is True


def test_triple_recognition_and_extension():
    m = acsa.construct("AB", 3, "x")
    out = acsa.recognize_triple(m)
    assert out["ok"] is True
    rec = out["recognition"]
    assert rec["zeta"] == "1/2"
    assert rec["type"] == {"kind": "AB", "d": 3, "n": "x"}
    ext = acsa.extend(m, "-3")
    again = acsa.recognize_triple(ext)
    assert again["ok"] is True
    assert again["recognition"]["xi_eps"] == "-3"


def test_counterexample_certificate():
    c = acsa.counterexample_d2()
    a = acsa.analyze_triple(c)
    assert a["is_leonard"] is True
    assert a["class"] == "totally_bipartite"
    out = acsa.recognize_triple(c)
    assert out["ok"] is False
    assert "no nonzero scalar" in out["certificate"]
    assert "sqrt(-1)" in out["certificate"]


def test_isomorphism_decisions():
    a = acsa.construct("AB", 3, "0")
    b = acsa.construct("AB", 3, "z")
    same = acsa.iso_pair(a, a)
    assert same["isomorphic"] is True
    assert same["intertwiner"]["order"] == 4
    diff = acsa.iso_pair(a, b)
    assert diff["isomorphic"] is False
    assert diff["discriminant"] == "tr(A)"
    t = acsa.iso_triple(a, acsa.twist(a, "(x y z)"))
    assert t["isomorphic"] is True


def test_unsupported_extension_surfaces():
    bad = {
        "x": {"order": 1, "entries": [["sqrt(2) + sqrt(3)"]]},
        "y": {"order": 1, "entries": [["1"]]},
        "z": {"order": 1, "entries": [["sqrt(5)"]]},
    }
    with pytest.raises(acsa.UnsupportedExtension):
        acsa.verify(bad)
