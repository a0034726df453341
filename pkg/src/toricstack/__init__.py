"""Smooth toric Deligne-Mumford stacks through their stacky fans.

Exact integer linear algebra, finitely generated abelian groups, simplicial
fans, the Picard group ``DG(beta)`` of a stacky fan, and the decomposition of
a stacky fan into its canonical fan, divisor roots and a gerbe of line-bundle
roots.
"""
__version__ = "0.1.0"

from .errors import (DuplicateRay, FanError, HasGerbe, IncomparableFans, KernelNotFree, NotAFan,
                     NotALine, NotDMTorus, NotSimplicial, RaysDoNotSpan, StackyFanError,
                     ToricStackError, ZeroFreePart)
from .matrix import (HermiteForm, IntMatrix, SmithForm, column_hnf, determinant, kernel, rank, snf,
                     solve_integer)
from .abelian import (FGAbelianGroup, GroupHom, TwoTermComplex, cokernel, complex_from_matrix,
                      cyclic_sum, direct_sum, dm_torus_form, free_group, hom_well_defined,
                      is_exact_at, pushout, quotient_mod, reduce_complex, two_term_resolution)
from .fan import (Fan, class_group, cox_patterns, in_cox_open, is_complete, is_smooth, make_fan,
                  span_defect)
from .stacky import (PicardData, QuotientPresentation, SequenceReport, StackyFan, canonical_stacky_fan,
                     canonicalize, dg_group, dm_torus, make_stacky_fan, multiplicities, picard_group,
                     quotient_presentation, rigidify, verify_pic_sequences)
from .structure import (Decomposition, Distinct, GerbeLayer, Inconclusive, Isomorphic, LineReport,
                        NotWPS, classify_toric_line, compare, decompose, line_stacky_fan,
                        recognize_wps, recompose, root_divisors, root_line_bundle, torus_split,
                        wps_stacky_fan)
