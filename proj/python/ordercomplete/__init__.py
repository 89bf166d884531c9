"""Order complete bases of rings of modular functions, computed exactly."""

from fractions import Fraction
from pathlib import Path

from ._core import (
    CoprimalityError,
    DegenerateInput,
    Error,
    EvaluationError,
    GapError,
    InsufficientPrecision,
    InternalContractViolation,
    ParseError,
    PrecisionError,
    Session,
    check_congruence,
)
from . import _core

__all__ = [
    "Session",
    "expand",
    "find_relation",
    "check_congruence",
    "read_recipe",
    "Error",
    "ParseError",
    "EvaluationError",
    "CoprimalityError",
    "InsufficientPrecision",
    "PrecisionError",
    "DegenerateInput",
    "GapError",
    "InternalContractViolation",
]


def read_recipe(path):
    return Path(path).read_text()


def expand(recipe, trunc):
    """Return (valuation, [Fraction, ...], trunc) for the q-expansion of a recipe."""
    s = _core.expand(recipe, trunc)
    return s["valuation"], [Fraction(c) for c in s["coefficients"]], s["trunc"]


def find_relation(t, f):
    """Return {(i, j): c} with p(t, f) = sum c x^i y^j = 0."""
    text, _ = _core.find_relation(t, f)
    terms = {}
    for line in text.splitlines():
        i, j, c = line.split()
        terms[(int(i), int(j))] = int(c)
    return terms
