import pytest
from hypothesis import given, settings, strategies as st

import oracles
from mfcodes.catalog import hex_torus
from mfcodes.color_code import (EXT0, EXT1, SurfaceGraph, boundary_logicals, build_cylinder, build_hex_torus,
                                check_partition, colorability, cylinder_modes, derived_g0, disjoint_path_count,
                                e0_edges, face_code, partition_faces, scaling_experiment, shortest_string_path,
                                string_logical, validate_surface, _partition_by_propagation)
from mfcodes.errors import (EvenR, InvalidSurface, NotAPath, PathDoesNotConnectExternalFaces, RTooSmall,
                            TooLarge)
from mfcodes.geometry import is_cleanable
from mfcodes.gf2 import Echelon
from mfcodes.majorana import distance, k_odd, l_even, majorana_form

SIZES = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (5, 3), (7, 2)]


def is_logical(code, support):
    return (all(majorana_form(support, r) == 0 for r in code.generators.rows)
            and support not in Echelon(code.generators.rows))


@pytest.mark.parametrize("R,L", SIZES)
def test_cylinder_is_valid(R, L):
    G = build_cylinder(R, L)
    assert validate_surface(G) == []
    assert G.num_vertices == cylinder_modes(R, L)
    assert len(G.gamma0) == len(G.gamma1) == R
    code = face_code(G)
    assert code.logical_modes == 2 and k_odd(code) == 1
    part = partition_faces(G)
    assert len(part.F0) == R * L
    assert check_partition(G, part) == []


def test_figure_instance():
    G = build_cylinder(5, 2)
    assert len(partition_faces(G).F0) == 10
    assert (len(G.gamma0), len(G.gamma1)) == (5, 5)


def test_bad_parameters():
    with pytest.raises(EvenR):
        build_cylinder(4, 2)
    with pytest.raises(RTooSmall):
        build_cylinder(1, 2)


def test_validate_reports_violations():
    assert [v.condition for v in validate_surface(build_hex_torus(2, 2))] == ["G4"]
    # hexagon with one vertex removed: a pentagon, odd vertex count, degree-2 vertices
    pent = SurfaceGraph(((0, 0), (1, 0), (2, 0), (2, 1), (1, 1)),
                        ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)),
                        ((0, 1, 2, 3, 4),), ())
    conds = {v.condition for v in validate_surface(pent)}
    assert {"G1", "G2", "G3", "G4"} <= conds
    with pytest.raises(InvalidSurface):
        face_code(pent)


def test_json_round_trip():
    G = build_cylinder(3, 2)
    assert SurfaceGraph.from_json(G.to_json()) == G


def test_boundary_logicals():
    for R, L in [(3, 1), (5, 2)]:
        G = build_cylinder(R, L)
        code = face_code(G)
        c0, c1 = boundary_logicals(G)
        assert c0.weight == c1.weight == R
        assert c0.parity == c1.parity == 1
        assert is_logical(code, c0.support) and is_logical(code, c1.support)
        assert not c0.commutes(c1)


def test_boundary_faces_are_f1():
    G = build_cylinder(5, 2)
    part = partition_faces(G)
    bnd = G.boundary_vertices()
    for fi, f in enumerate(G.faces):
        if bnd & set(f):
            assert fi in part.F1


def test_partition_independent_of_start():
    G = build_cylinder(3, 1)
    first = partition_faces(G)
    for u in G.gamma0 + G.gamma1:
        assert _partition_by_propagation(G, u) == first


def test_string_logicals():
    G = build_cylinder(5, 2)
    code = face_code(G)
    part = partition_faces(G)
    c0, c1 = boundary_logicals(G)
    p1 = shortest_string_path(G, part)
    s1 = string_logical(G, p1, part)
    assert s1.weight == 2 * len(p1) and s1.is_even
    assert is_logical(code, s1.support)
    assert not s1.commutes(c0) and not s1.commutes(c1)
    # a second, edge-disjoint path gives the same logical class
    p2 = shortest_string_path(G, part, avoid=p1)
    s2 = string_logical(G, p2, part)
    assert set(p1).isdisjoint(p2)
    assert (s1.support ^ s2.support) in Echelon(code.generators.rows)
    # X = C0, Y = C1 and the string is Z, the class of C0 C1
    assert (s1.support ^ c0.support ^ c1.support) in Echelon(code.generators.rows)


def test_string_logical_errors():
    G = build_cylinder(3, 2)
    part = partition_faces(G)
    path = shortest_string_path(G, part)
    with pytest.raises(PathDoesNotConnectExternalFaces):
        string_logical(G, path[:-1], part)
    with pytest.raises(PathDoesNotConnectExternalFaces):
        string_logical(G, path[1:], part)
    not_e0 = next(e for e in G.edges if e not in set(e0_edges(G, part)))
    with pytest.raises(NotAPath):
        string_logical(G, [not_e0], part)
    with pytest.raises(NotAPath):
        string_logical(G, [path[0], path[0]] + path[1:], part)


def test_derived_graph_and_disjoint_paths():
    for R, L in [(3, 1), (5, 2), (5, 3)]:
        G = build_cylinder(R, L)
        g0 = derived_g0(G)
        assert g0.degree(EXT0) == g0.degree(EXT1) == R
        assert disjoint_path_count(G) == R


def test_colorability():
    rep = colorability(build_cylinder(5, 2))
    assert rep.g1_bipartite is False and rep.three_colorable is False
    assert rep.cut_g1_bipartite and rep.cut_three_colorable
    assert colorability(build_hex_torus(2, 2)).three_colorable
    assert colorability(build_hex_torus(1, 1)).three_colorable


def test_hex_torus_surface_matches_catalog():
    G = build_hex_torus(2, 2)
    code = hex_torus(2, 2)
    assert [sorted(f) for f in G.faces] == code.generators.supports()
    assert face_code(G, check=False).k == 2


def test_small_cylinder_against_enumeration():
    # 18 modes: brute force over every support
    G = build_cylinder(3, 1)
    code = face_code(G)
    rows, m = code.generators.rows, code.modes
    assert distance(code) == oracles.maj_distance(rows, m) == 3
    lay = code.layout
    assert l_even(code).value == oracles.maj_l_even(rows, m, lay.positions, lay.periodic, lay.extent) == 5


def test_scaling_table_and_cap():
    rows = scaling_experiment([3], [1, 2])
    assert [(r.R, r.L, r.modes) for r in rows] == [(3, 1, 18), (3, 2, 42)]
    assert all(r.min_odd_weight == 3 == r.disjoint_paths for r in rows)
    assert rows[0].csv() == "3,1,18,3,5,3"
    with pytest.raises(TooLarge):
        scaling_experiment([9], [4], mode_cap=100)


@settings(max_examples=8)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 4))
def test_every_cylinder_encodes_one_qubit(R, L):
    G = build_cylinder(R, L)
    code = face_code(G)
    assert code.logical_modes == 2
    part = partition_faces(G)
    assert len(part.F0) == R * L
    c0, _ = boundary_logicals(G)
    assert not is_cleanable(code, G.gamma0)[0] and c0.weight == R
