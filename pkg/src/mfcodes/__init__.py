"""Majorana fermion codes and qubit stabilizer codes over GF(2)."""

from .catalog import catalog_build
from .color_code import build_cylinder, face_code, partition_faces, validate_surface
from .geometry import Layout, is_cleanable, make_strips, strip_lemma_analysis
from .gf2 import BitMatrix, BitVector, kernel_basis, rank
from .maps import double, jordan_wigner, jw_map_code, product, stabilizer_to_majorana
from .majorana import (MajoranaCode, MajoranaOperator, analyze, canonical_logical_basis, distance, k_odd,
                       l_even, validate)
from .pauli import PauliOperator, StabilizerCode, parse_pauli_code, qubit_distance

__version__ = "0.1.0"
