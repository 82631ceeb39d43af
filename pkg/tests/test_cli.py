import json

import pytest
from hypothesis import given, strategies as st

from mfcodes.catalog import hex_torus, kitaev_chain, steane
from mfcodes.cli import main
from mfcodes.formats import FormatError, format_mfc, parse_mfc, read_code, write_code
from mfcodes.pauli import StabilizerCode


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


@pytest.fixture
def chain(tmp_path, capsys):
    path = tmp_path / "chain.mfc"
    assert run(capsys, "build", "kitaev-chain", "--n", "5", "--out", str(path))[0] == 0
    return str(path)


# -- formats ----------------------------------------------------------------------------

def test_mfc_round_trip():
    for code in (kitaev_chain(4), hex_torus(1, 1)):
        again = parse_mfc(format_mfc(code, "comment"))
        assert again == code


def test_mfc_errors():
    for text in ("gen 0 1\n", "modes 4\ngen 1 0\n", "modes 4\ngen 0 4\n", "modes 4\nfoo 1\n",
                 "modes 2\npos 0 1 1\n", "modes x\n", "modes 2\nperiodic z 3\n"):
        with pytest.raises(FormatError):
            parse_mfc(text)


def test_stab_file_round_trip(tmp_path):
    path = tmp_path / "s.stab"
    write_code(steane(), path, "Steane")
    code = read_code(path)
    assert isinstance(code, StabilizerCode) and code.to_strings() == steane().to_strings()


@given(st.integers(1, 6))
def test_chain_text_is_stable(n):
    assert format_mfc(parse_mfc(format_mfc(kitaev_chain(n)))) == format_mfc(kitaev_chain(n))


# -- commands ---------------------------------------------------------------------------

def test_build_writes_ten_modes(chain):
    assert parse_mfc(open(chain).read()).modes == 10


def test_build_cylinder(tmp_path, capsys):
    rc, out, _ = run(capsys, "build", "color-cylinder", "--R", "5", "--L", "2", "--out", str(tmp_path / "cc.mfc"))
    assert rc == 0 and "|V| = 70, |F0| = 10" in out
    rc, _, err = run(capsys, "build", "color-cylinder", "--R", "4", "--L", "2")
    assert rc == 2 and "R must be odd" in err


def test_analyze_chain(chain, capsys):
    rc, out, _ = run(capsys, "analyze", "--input", chain, "--json", "--sorted")
    d = json.loads(out)
    assert rc == 0
    assert (d["k"], d["k_odd"], d["distance"], d["l_even"]) == ("1/1", 1, 1, 10)
    assert run(capsys, "analyze", "--input", chain, "--json")[1] == out


def test_analyze_half_qubit(tmp_path, capsys):
    path = tmp_path / "sm.mfc"
    run(capsys, "build", "steane-majorana", "--out", str(path))
    d = json.loads(run(capsys, "analyze", "--input", str(path), "--json")[1])
    assert d["k"] == "1/2" and d["distance"] == 3


def test_analyze_invalid(tmp_path, capsys):
    path = tmp_path / "bad.mfc"
    path.write_text("modes 4\ngen 0 1\ngen 1 2\n")
    rc, out, _ = run(capsys, "analyze", "--input", str(path))
    assert rc == 1 and "rows 0,1" in out


def test_analyze_stab_with_anticommuting_pair(tmp_path, capsys):
    path = tmp_path / "bad.stab"
    path.write_text("XI\nZI\n")
    assert run(capsys, "analyze", "--input", str(path))[0] == 1


def test_map_commands(tmp_path, capsys):
    st_path, four, sm = tmp_path / "steane.stab", tmp_path / "four.mfc", tmp_path / "sm.mfc"
    run(capsys, "build", "steane", "--out", str(st_path))
    run(capsys, "build", "four-mode", "--out", str(four))
    run(capsys, "build", "steane-majorana", "--out", str(sm))
    out28 = tmp_path / "s28.mfc"
    rc, out, _ = run(capsys, "map", "qubit-to-majorana", "--input", str(st_path), "--out", str(out28))
    assert rc == 0 and parse_mfc(out28.read_text()).modes == 28
    dbl = tmp_path / "d.stab"
    assert run(capsys, "map", "double", "--input", str(four), "--out", str(dbl))[0] == 0
    assert read_code(dbl).to_strings() == ["XXXX", "ZZZZ"]
    rc, _, err = run(capsys, "map", "double", "--input", str(sm))
    assert rc == 2 and "odd" in err
    rc, out, _ = run(capsys, "map", "product", "--input", str(sm), "--input", str(sm), "--distance")
    assert rc == 0 and "14 modes, k = 1" in out and "d = 3" in out
    rc, out, _ = run(capsys, "map", "jordan-wigner", "--input", str(four))
    assert rc == 0 and "[[2, 1]]" in out


def test_clean(chain, capsys):
    rc, out, _ = run(capsys, "clean", "--input", chain, "--region", "0")
    assert rc == 0 and out.startswith("uncleanable") and "witness [0]" in out
    assert run(capsys, "clean", "--input", chain, "--region", "1,2")[1].startswith("cleanable")
    assert run(capsys, "clean", "--input", chain, "--region", "99")[0] == 2
    assert run(capsys, "clean", "--input", chain, "--region", "a,b")[0] == 2
    rc, out, _ = run(capsys, "clean", "--input", chain, "--region", "rect 1 0 2 0")
    assert rc == 0 and "uncleanable" in out


def test_strips(chain, tmp_path, capsys):
    rc, out, _ = run(capsys, "strips", "--input", chain, "--width", "2")
    assert rc == 0 and "case (ii): strips 0 and 4" in out
    rc, _, err = run(capsys, "strips", "--input", chain, "--width", "1")
    assert rc == 2 and "generator diameter 2" in err
    cc = tmp_path / "cc.mfc"
    run(capsys, "build", "color-cylinder", "--R", "5", "--L", "2", "--out", str(cc))
    rc, out, _ = run(capsys, "strips", "--input", str(cc), "--axis", "y", "--width", "4")
    assert rc == 0 and "case (ii): strips 0 and 1" in out


def test_scale(capsys):
    rc, out, _ = run(capsys, "scale", "--R", "3", "--L", "1", "2")
    assert rc == 0
    assert out.splitlines() == ["R,L,modes,d,l_even,min_odd_weight", "3,1,18,3,5,3", "3,2,42,3,8,3"]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert run(capsys, "analyze", "--input", "/nonexistent.mfc")[0] == 2
