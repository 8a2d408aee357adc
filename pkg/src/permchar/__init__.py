"""Exact computation of the irreducible constituents of maximal-subgroup
permutation characters of finite permutation groups, with a mechanical
verification harness for the structural theorems they control."""

from .cyclo import Cyclo, parse_cyclo, render_cyclo
from .permgroup import (ConjClass, EnumerationIncompleteError, OrderBoundExceeded,
                        PermGroup, Subgroup, conjugacy_classes, core,
                        coset_action, has_normal_pi_complement, is_nilpotent,
                        is_pi_separable, is_solvable, make_group,
                        normal_subgroups, o_pi_prime, quotient)
from .perms import CycleParseError, Perm, parse_cycles, parse_group_text
from .subgroups import (SubgroupClass, all_subgroups, complement_decompositions,
                        frattini, maximal_subgroups)
from .chartable import (CharacterTable, ClassFunction, character_table, fusion,
                        induce, inner_product, is_monolithic, kernel,
                        linear_characters, restrict, trivial_character)
from .pchar import (MonomialWitness, PCharEntry, PCharReport, inertia_group,
                    is_monomial, p_characters, p_pi_characters,
                    permutation_character)
from .catalog import build, parse_group_file
from .verify import (Verdict, conjecture_scan, lemma_bijection,
                     nilpotency_criterion, theorem_a, theorem_b, theorem_c)

__version__ = "0.1.0"
