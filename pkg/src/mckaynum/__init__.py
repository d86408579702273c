"""Exact character tables of permutation groups and the canonical
bijection between p'-degree irreducibles of a p-solvable group and of
its Sylow normalizer, preserving decomposition numbers at the linear
Brauer characters."""

from .chartable import (Character, CharacterTable, character_table, induce,
                        inner_product, irr_pprime, linear_characters,
                        restrict, tensor)
from .cyclotomic import Cyclotomic, one, parse_value, render_value, root_of_unity, zero
from .errors import AssertionFailure, EngineError, ensure
from .formats import (GroupSpec, parse_decomposition_file, parse_group_file,
                      render_group_file)
from .mckay import (DecompositionRecord, McKayBijection, build_bijection,
                    counterexample_check, decomposition_number_linear,
                    verify_corollary_b, verify_theorem_a)
from .permgroup import (PermGroup, Permutation, hall_p_complement, normalizer,
                        parse_cycles, render_cycles, sylow_subgroup)
from .runner import RunReport, bundled_corpus_dir, run_corpus

__version__ = "0.1.0"

__all__ = [
    "AssertionFailure", "Character", "CharacterTable", "Cyclotomic",
    "DecompositionRecord", "EngineError", "GroupSpec", "McKayBijection",
    "PermGroup", "Permutation", "RunReport", "build_bijection",
    "bundled_corpus_dir", "character_table", "counterexample_check",
    "decomposition_number_linear", "ensure", "hall_p_complement", "induce",
    "inner_product", "irr_pprime", "linear_characters", "normalizer", "one",
    "parse_cycles", "parse_decomposition_file", "parse_group_file",
    "parse_value", "render_cycles", "render_group_file", "render_value",
    "restrict", "root_of_unity", "run_corpus", "sylow_subgroup", "tensor",
    "verify_corollary_b", "verify_theorem_a", "zero",
]
