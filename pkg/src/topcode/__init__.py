"""Topcode-matrices: label matrices of graph labellings and the password
machinery built on them."""

from .core import (
    EvaluationRule,
    LabelSets,
    TopcodeMatrix,
    construct,
    equivalent,
    label_sets,
    parse_matrix,
    standard_form,
)
from .errors import TopcodeError

__all__ = [
    "EvaluationRule",
    "LabelSets",
    "TopcodeError",
    "TopcodeMatrix",
    "construct",
    "equivalent",
    "label_sets",
    "parse_matrix",
    "standard_form",
]
