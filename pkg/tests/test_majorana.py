import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from mfcodes.catalog import four_mode, hex_torus, kitaev_chain, steane_majorana
from mfcodes.errors import NoLayout, NoLogicals, OddLogicalModeCount
from mfcodes.geometry import Layout
from mfcodes.gf2 import BitMatrix
from mfcodes.majorana import (MajoranaCode, MajoranaOperator, analyze, canonical_logical_basis,
                              count_logicals, distance, k_odd, l_even, majorana_form,
                              min_logical_connected, min_weight_logicals, validate)
from mfcodes.maps import product


def code_from(rows, m, line=True):
    return MajoranaCode(m, BitMatrix(tuple(rows), m), Layout.line(m) if line else None)


@st.composite
def majorana_codes(draw, max_m=10):
    m = draw(st.integers(2, max_m))
    rows = oracles.random_majorana_code(random.Random(draw(st.integers(0, 2**32))), m)
    return code_from(rows, m)


# -- validate ---------------------------------------------------------------

def test_validate():
    assert validate(kitaev_chain(5)) == []
    odd = validate(MajoranaCode.from_supports([[0, 1, 2]], 4))
    assert [v.kind for v in odd] == ["odd-weight"]
    pair = validate(MajoranaCode.from_supports([[0, 1], [1, 2]], 4))
    assert [(v.kind, v.rows) for v in pair] == [("odd-overlap", (0, 1))]


# -- counting -------------------------------------------------------------------

def test_count_logicals():
    assert count_logicals(kitaev_chain(5)) == (2, Fraction(1))
    assert count_logicals(four_mode()) == (2, Fraction(1))
    assert count_logicals(steane_majorana()) == (1, Fraction(1, 2))


def test_k_odd():
    assert k_odd(kitaev_chain(5)) == 1
    assert k_odd(four_mode()) == 0
    assert k_odd(hex_torus(2, 2)) == 0
    assert k_odd(steane_majorana()) == 1


def test_distance_examples():
    assert distance(kitaev_chain(5)) == 1
    assert distance(four_mode()) == 2
    assert distance(steane_majorana()) == 3
    assert oracles.maj_distance(steane_majorana().generators.rows, 7) == 3
    with pytest.raises(NoLogicals):
        distance(MajoranaCode.from_supports([[0, 1]], 2))


def test_l_even_examples():
    assert l_even(kitaev_chain(5)).value == 10
    res = l_even(four_mode())
    assert res.value == 2 and res.exact
    with pytest.raises(NoLayout):
        l_even(MajoranaCode.from_supports([[0, 1, 2, 3]], 4))
    assert l_even(steane_majorana()).value is None  # all logicals odd


@pytest.mark.parametrize("s", [0, 1, 3])
def test_l_even_with_spacer_matches_enumeration(s):
    sm = steane_majorana()
    code = product(sm, sm, spacer=s)
    assert l_even(code).value == oracles.maj_l_even(code.generators.rows, code.modes, code.layout.positions)


def test_l_even_grows_with_spacer():
    sm = steane_majorana()
    vals = [l_even(product(sm, sm, spacer=s)).value for s in range(8)]
    assert all(v >= 2 * s for s, v in enumerate(vals))
    assert vals == sorted(vals)


def test_canonical_basis_kitaev():
    ((x, z),) = canonical_logical_basis(kitaev_chain(5))
    assert x.indices() == [0]
    assert z.indices() == [0, 9]


def test_canonical_basis_four_mode():
    ((x, z),) = canonical_logical_basis(four_mode())
    assert (x.indices(), z.indices()) == ([0, 1], [0, 2])


def test_canonical_basis_half_qubit():
    with pytest.raises(OddLogicalModeCount):
        canonical_logical_basis(steane_majorana())


def test_min_logical_connected():
    assert min_logical_connected(kitaev_chain(5))
    assert min_logical_connected(four_mode())
    sm = steane_majorana()
    two = product(sm, sm, spacer=3)
    assert min_logical_connected(two)
    w, vecs = min_weight_logicals(two)
    assert w == 3
    assert all(max(v.support()) < 7 or min(v.support()) >= 13 for v in vecs)


def test_operator_helpers():
    a = MajoranaOperator.from_indices([0, 1], 4)
    b = MajoranaOperator.from_indices([1, 2], 4)
    c = MajoranaOperator.from_indices([0], 4)
    assert a.is_even and not c.is_even
    assert a.commutes(MajoranaOperator.from_indices([2, 3], 4))
    assert not a.commutes(b)  # even ops with odd overlap
    assert not c.commutes(MajoranaOperator.from_indices([1], 4))  # two odd, disjoint
    assert str(a * b) == "c1 c3"


def test_report_json_fields():
    d = json.loads(analyze(steane_majorana()).to_json())
    assert d["k"] == "1/2" and d["distance"] == 3 and d["k_odd"] == 1
    assert list(d) == sorted(d)
    assert analyze(kitaev_chain(5), max_weight=0).to_dict()["distance"] == "exhausted"


# -- properties -------------------------------------------------------------

@given(majorana_codes())
def test_dimension_identities(code):
    assert validate(code) == []
    assert code.modes == 2 * code.rank + code.logical_modes
    assert code.centralizer().nrows == code.modes - code.rank


@given(majorana_codes())
def test_k_odd_zero_means_all_logicals_even(code):
    logs = oracles.maj_logicals(code.generators.rows, code.modes)
    has_odd = any(oracles.weight(v) % 2 for v in logs)
    assert k_odd(code) == int(has_odd)


@given(majorana_codes())
def test_distance_and_l_even_match_enumeration(code):
    rows, m = code.generators.rows, code.modes
    if code.logical_modes == 0:
        return
    assert distance(code) == oracles.maj_distance(rows, m)
    assert l_even(code).value == oracles.maj_l_even(rows, m, code.layout.positions)


@given(majorana_codes())
def test_canonical_basis_structure(code):
    if code.logical_modes == 0 or code.logical_modes % 2:
        return
    basis = canonical_logical_basis(code)
    logs = set(oracles.maj_logicals(code.generators.rows, code.modes))
    ops = [op for pair in basis for op in pair]
    assert len(ops) == code.logical_modes
    assert all(op.support in logs for op in ops)
    for i, a in enumerate(ops):
        for j, b in enumerate(ops):
            want = 1 if i // 2 == j // 2 and i != j else 0
            assert majorana_form(a.support, b.support) == want
    odd = [op for op in ops if op.parity]
    if k_odd(code):
        x1, z1 = basis[0]
        assert odd == [x1]
        full = (1 << code.modes) - 1
        assert z1.support ^ full in oracles.span(code.generators.rows)
    else:
        assert odd == []
    # every qubit triple X, Z, XZ is all even or has exactly two odd members
    for x, z in basis:
        parities = [x.parity, z.parity, (x * z).parity]
        assert sum(parities) in (0, 2)
