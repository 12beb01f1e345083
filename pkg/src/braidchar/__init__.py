"""Exact-arithmetic graded S_n-characters, Hilbert series and irreducible
decompositions for the cohomology algebras of the pure virtual and pure flat
braid groups and their Koszul duals."""

from .algebras import (ALGEBRAS, PFB_DUAL, PVB_DUAL, DecompositionTable,
                       GradedCharacter)
from .characters import (ClassFunction, cf_label, cf_tail, character_table,
                         decompose, dimension, irreducible_character,
                         multiplicity_alternating, multiplicity_trivial,
                         parse_cf_label, partition_for_tail)
from .combinatorics import (Partition, Permutation, bell, centralizer_order,
                            cycle_decomposition, lah, partitions,
                            set_partitions, stirling2)
from .formulas import (char_formula, char_pfb, char_pvb, constraint_checks,
                       decompose_formula, decompose_pfb, decompose_pvb,
                       hilbert, no_repeated_odd_count, stability_report,
                       trivial_multiplicity_pvb)
from .koszul import TruncatedSeries, dual_character, invert, verify_identity
from .oracle import (SignedIndex, act, act_indexed, basis, basis_index,
                     graded_character, iter_basis, top_degree_report)
from .symfunc import (SymFunc, ch_regular, characteristic, elementary,
                      homogeneous, plethysm, power, schur,
                      schur_expansion_json, to_schur)

__version__ = "0.1.0"
