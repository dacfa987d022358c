import pytest

import comather


def test_gr24_divisor():
    assert comather.mather("A3/P2", "21") == {"21": "1", "2": "3", "11": "3", "1": "8", "()": "6"}


def test_equivariant_leading_term():
    assert comather.mather("A1/B", "1", equivariant=True) == {"1": "1+a1", "()": "2"}


def test_csm_cell():
    assert comather.csm("A1/B", "1", equivariant=True) == {"1": "1+a1", "()": "1"}


def test_euler_obstructions():
    assert comather.euler("C2/P2", "2") == {"2": 1, "1": 1, "()": 0}
    assert not comather.cc_irreducible("C2/P2", "2")
    assert comather.cc_irreducible("A3/P2", "21")


def test_cli_roundtrip():
    code, out, err = comather.run_cli(["mather", "--space", "A3/P2", "--w", "21"])
    assert code == 0
    assert out == "[21] + 3[2] + 3[11] + 8[1] + 6[()]\n"
    assert err == ""


def test_bad_input():
    code, _, err = comather.run_cli(["mather", "--space", "A3/B", "--w", "1"])
    assert code == 2
    assert "not cominuscule" in err
    with pytest.raises(ValueError):
        comather.mather("A3/B", "1")
