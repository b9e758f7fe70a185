"""Abstract numeration systems on bounded languages a1* a2* ... al*."""

from boundedlang.errors import (
    CapExceeded,
    EmptyRegion,
    NegativeExponent,
    NotApplicable,
    NumerationError,
    OutOfRegime,
    QTooSmall,
    SearchBoundExceeded,
    WordSyntaxError,
)
from boundedlang.combinatorics import binomial, binomial_column_period, stirling1_unsigned
from boundedlang.numeration import (
    BoundedWord,
    CombinatorialDecomposition,
    count_length,
    count_upto,
    decompose,
    exponents_from_decomposition,
    length_bounds,
    represent,
    shortlex_enumerate,
    value_of,
)

__version__ = "0.1.0"

__all__ = [
    "BoundedWord",
    "CapExceeded",
    "CombinatorialDecomposition",
    "EmptyRegion",
    "NegativeExponent",
    "NotApplicable",
    "NumerationError",
    "OutOfRegime",
    "QTooSmall",
    "SearchBoundExceeded",
    "WordSyntaxError",
    "binomial",
    "binomial_column_period",
    "count_length",
    "count_upto",
    "decompose",
    "exponents_from_decomposition",
    "length_bounds",
    "represent",
    "shortlex_enumerate",
    "stirling1_unsigned",
    "value_of",
]
