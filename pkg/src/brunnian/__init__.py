"""Seifert matrices of Brunnian links: block forms, alternation laws,
sequence calculus and realizability of 2-component alternation data."""

from brunnian.core import (IntMatrix, IntPolynomial, MultiBlockForm, SeifertBlock2,
                           SignDiagonal, alexander, compose_block2, decompose_block2,
                           decompose_multi, sublink_vanishing, trace_split_test)
from brunnian.alternation import AlternationTable, alternation_table
from brunnian.realizability import check_matrix, construction_plan, witness_search
from brunnian.sequences import Seq, g_full, parse_seq

__version__ = "0.1.0"
