"""Exact integer-matrix and polynomial foundation."""

from brunnian.core.blocks import (BidiagonalOnes, MultiBlockForm, SeifertBlock2,
                                  SignDiagonal, compose_block2, compose_multi,
                                  decompose_block2, decompose_multi, trace_split_test)
from brunnian.core.matrix import IntMatrix, int_det
from brunnian.core.polynomial import (IntPolynomial, PolyMatrix, alexander, format_poly,
                                      parse_poly, poly_det, seifert_form)
from brunnian.core.sequiv import s_equiv_congruence, s_equiv_enlarge, s_equiv_reduce
from brunnian.core.sublinks import SublinkReport, SubsetVerdict, sublink_vanishing

__all__ = [
    "BidiagonalOnes", "IntMatrix", "IntPolynomial", "MultiBlockForm", "PolyMatrix",
    "SeifertBlock2", "SignDiagonal", "SublinkReport", "SubsetVerdict", "alexander",
    "compose_block2", "compose_multi", "decompose_block2", "decompose_multi",
    "format_poly", "int_det", "parse_poly", "poly_det", "s_equiv_congruence",
    "s_equiv_enlarge", "s_equiv_reduce", "seifert_form", "sublink_vanishing",
    "trace_split_test",
]
