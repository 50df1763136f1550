import pytest

from resemblance import Calculus, Ordinal, ResemblanceError


def test_ordinal_round_trip():
    assert str(Ordinal("w^(w)*2+w+3")) == "w^w*2+w+3"
    assert str(Ordinal("w+w")) == "w*2"
    assert Ordinal("w") < Ordinal("w+1")
    assert Ordinal(3) + Ordinal("w") == Ordinal("w")
    with pytest.raises(ResemblanceError):
        Ordinal("w+")


def test_component_values():
    c = Calculus()
    assert str(c.kappa("w+1")) == "w+2"
    assert str(c.max1_kappa("w^2")) == "w^2+2"
    assert str(c.max1("w^w+w")) == "w^w+w+1"
    assert str(c.index("w+1")) == "w"
    assert c.max1_kappa("e0") is None
    assert str(Calculus(rho="w").max1_kappa("w^2")) == "w^2+1"


def test_verdicts():
    c = Calculus()
    value, trace = c.le1("w", "w+1")
    assert value == "True"
    assert "SRT" in trace
    assert c.le1("w", "w+2")[0] == "False"
    assert c.le2("e0", "e0+w")[0] == "False"
    assert str(c.nu("e0", 3)) == "e0*4"
    assert c.max2("w^(e0+1)") is None


def test_sequel_flag():
    assert str(Calculus(sequel=True).max1_kappa("e0")) == "w^(e0+1)+e0"


def test_incompressible():
    c = Calculus()
    assert [str(x) for x in c.incompressible_cover(["w*5"])] == ["0"]
    assert c.verify_incompressible([0, 1, 2])["verdict"] == "Confirmed"
    assert c.verify_incompressible(["w*5"])["verdict"] == "CounterexampleMap"


def test_patterns():
    c = Calculus()
    assert c.check_axioms(["w", "w+1", "w*2"]) == []
    assert c.iso(["w", "w+1"], ["w*2", "w*2+1"]) == "Isomorphic"
