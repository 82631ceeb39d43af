from hypothesis import given, strategies as st

import oracles
from mfcodes.gf2 import (BitMatrix, BitVector, CosetSearch, Echelon, enumerate_span, in_span,
                         kernel_basis, min_weight_not_in_span, orthogonal_complement, project, rank,
                         span_within)


def strs(M):
    return [str(v) for v in M]


def kitaev_matrix(n=5):
    return BitMatrix.from_supports([(2 * j - 1, 2 * j) for j in range(1, n)], 2 * n)


@st.composite
def matrices(draw, max_m=10, max_rows=8):
    m = draw(st.integers(1, max_m))
    rows = draw(st.lists(st.integers(0, (1 << m) - 1), max_size=max_rows))
    return BitMatrix(tuple(rows), m)


# -- fixed examples -----------------------------------------------------------

def test_rank_examples():
    assert rank(BitMatrix.from_strings(["100", "010", "001"])) == 3
    assert rank(BitMatrix.from_strings(["0000", "0000"])) == 0
    assert rank(BitMatrix.from_strings(["1111", "0000"])) == 1


def test_kernel_of_single_parity_check():
    assert strs(kernel_basis(BitMatrix.from_strings(["1111"]))) == ["1100", "1010", "1001"]


def test_kernel_of_identity_is_empty():
    assert kernel_basis(BitMatrix.from_strings(["1000", "0100", "0010", "0001"])).nrows == 0


def test_kitaev_kernel_contains_end_modes():
    K = kernel_basis(kitaev_matrix())
    assert K.nrows == 6
    assert in_span(BitVector.from_str("1000000000"), K)
    assert in_span(BitVector.from_str("0000000001"), K)
    for v in K:
        assert all(v.dot(r) == 0 for r in kitaev_matrix())


def test_in_span_examples():
    M = BitMatrix.from_strings(["1100", "0011"])
    assert in_span(BitVector.zeros(4), M)
    assert in_span(BitVector.from_str("1111"), M)
    assert not in_span(BitVector.from_str("1000"), M)


def test_orthogonal_complement_examples():
    M = BitMatrix.from_strings(["1111"])
    assert Echelon(orthogonal_complement(M).rows).basis() == Echelon(kernel_basis(M).rows).basis()
    assert orthogonal_complement(BitMatrix.empty(3)).nrows == 3


def test_doubled_kitaev_rowspace_is_self_orthogonal():
    M = kitaev_matrix()
    assert all(a.dot(b) == 0 for a in M for b in M)


def test_project_examples():
    full = project(BitMatrix.from_strings(["1100", "0110"]), [1, 2])
    assert rank(full) == 2
    assert project(BitMatrix.from_strings(["1100"]), []).nrows == 0
    assert strs(project(BitMatrix.from_strings(["1111"]), [0, 1])) == ["11"]


def test_span_within_uses_whole_rowspace():
    # neither generator fits in {0, 2} but their sum does
    M = BitMatrix.from_strings(["1100", "0110"])
    assert strs(span_within(M, [0, 2])) == ["1010"]
    assert span_within(kitaev_matrix(), [0]).nrows == 0


def test_min_weight_examples():
    K = kitaev_matrix()
    res = min_weight_not_in_span(kernel_basis(K), K)
    assert res.weight == 1 and res.vector.support() in ([0], [9])
    even = min_weight_not_in_span(kernel_basis(K), K, parity="even")
    assert even.weight == 2 and even.vector.support() == [0, 9]
    four = BitMatrix.from_strings(["1111"])
    assert min_weight_not_in_span(kernel_basis(four), four).weight == 2


def test_min_weight_exhausted_below_bound():
    K = kitaev_matrix()
    assert min_weight_not_in_span(kernel_basis(K), K, max_weight=1, parity="even") is None


def test_search_rejects_span_outside_kernel():
    import pytest
    with pytest.raises(ValueError):
        CosetSearch(BitMatrix.from_strings(["1100"]), BitMatrix.from_strings(["0011"]))


def test_length_mismatch_raises():
    import pytest
    with pytest.raises(ValueError):
        BitVector.from_str("10") ^ BitVector.from_str("100")


# -- properties ----------------------------------------------------------------

@given(matrices())
def test_rank_nullity(M):
    assert rank(M) + kernel_basis(M).nrows == M.ncols


@given(matrices(), st.data())
def test_in_span_of_row_sums(M, data):
    picks = data.draw(st.lists(st.booleans(), min_size=M.nrows, max_size=M.nrows))
    v = 0
    for r, p in zip(M.rows, picks):
        if p:
            v ^= r
    assert in_span(BitVector(v, M.ncols), M)


@given(matrices())
def test_complement_is_involution(M):
    twice = orthogonal_complement(orthogonal_complement(M))
    assert set(enumerate_span(twice)) == oracles.span(M.rows)


@given(matrices(max_m=8), st.data())
def test_project_matches_enumeration(M, data):
    coords = sorted(data.draw(st.sets(st.integers(0, M.ncols - 1))))
    got = set(enumerate_span(project(M, coords)))
    want = set()
    for v in oracles.span(M.rows):
        want.add(sum(((v >> c) & 1) << j for j, c in enumerate(coords)))
    assert got == want


@given(matrices(max_m=8), st.data())
def test_span_within_matches_enumeration(M, data):
    coords = data.draw(st.sets(st.integers(0, M.ncols - 1)))
    outside = sum(1 << c for c in range(M.ncols) if c not in coords)
    want = {v for v in oracles.span(M.rows) if not v & outside}
    assert set(enumerate_span(span_within(M, coords))) == want


@given(matrices(max_m=9, max_rows=6), st.data(), st.sampled_from([None, "even", "odd"]))
def test_min_weight_matches_enumeration(M, data, parity):
    # kernel = everything orthogonal to M, span = a random subspace of it
    K = kernel_basis(M)
    sub = data.draw(st.lists(st.booleans(), min_size=K.nrows, max_size=K.nrows))
    S = BitMatrix(tuple(r for r, keep in zip(K.rows, sub) if keep), M.ncols)
    span_set = oracles.span(S.rows)
    cands = [v for v in oracles.span(K.rows) if v not in span_set]
    if parity:
        cands = [v for v in cands if oracles.weight(v) % 2 == (parity == "odd")]
    res = min_weight_not_in_span(K, S, parity=parity)
    if not cands:
        assert res is None
    else:
        best = min(map(oracles.weight, cands))
        assert res.weight == best
        assert res.vector.bits == min((v for v in cands if oracles.weight(v) == best), key=oracles.bits)
