"""Levi-module decompositions of coordinate rings of Grassmannian Schubert varieties."""

from .grassmann import (SchubertContext, all_words, bruhat_leq, count_std_monomials,
                        hasse_diagram, lower_interval, standard_monomials, stabilizer_set)
from .heads import (InvariantError, LeviContext, class_of, hasse_partition, head_of,
                    head_sequence, heads, is_head, standard_head_sequences, str_compare)
from .straightening import (chevalley_action, evaluate_plucker, restrict_to_schubert,
                            sample_point_on_schubert, shuffle, straighten)
from .tableaux import (SkewShape, SkewTableau, block_restriction, enumerate_ssyt,
                       pi_rotation, psi, reconstruct_monomial, render_tableau,
                       shapes_of_head, tableau_of_monomial)
from .lr import lr_coefficient, skew_weyl_decomposition, weyl_character, weyl_dimension
from .decomposition import (DecompositionReport, IrreducibleLabel, branching_of_rectangle,
                            character_check, decompose_degree, module_of_head,
                            verify_psi_bijection)
from .sphericity import classify, empirical_multiplicity_check, scan

__version__ = "0.1.0"
