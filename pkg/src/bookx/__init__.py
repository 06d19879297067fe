"""Exact arithmetic and classification of Euclid's Book X irrationals."""

from .arithmetic import Rat, is_perfect_square, rat_arith, squarefree_decompose
from .errors import DivisionByZero, DomainError, NegativeRadicand, NotRepresentable, ParseError
from .expr import Add, Const, Div, Mul, Sqrt, Sub, SurdExpr
from .parser import parse_expr, print_expr
from .ranks import RankSequence, rank, s_recurrence_check, x115_sequence
from .surd import (
    QuadElem,
    SimpleSurd,
    commensurable_length,
    commensurable_power,
    normalize,
    quad_arith,
    rational_in_length,
    rational_in_power,
    sqrt,
    to_float,
)
from .taxonomy import (
    BinomialPair,
    PowerOnlyLine,
    TaxonomyClass,
    classify,
    classify_pair,
    gen_apotome,
    gen_binomial,
    is_medial,
    sqrt_first,
    x17_split,
)
from .verify import VerifyReport, verify_proposition

__version__ = "0.1.0"
