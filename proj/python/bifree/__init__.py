"""Exact two-bands bi-free cumulants with rational arithmetic.

Tables are lists of rows indexed by bidegree: ``table[m][n]`` is
phi(a^m b^n) for moments or R_{m,n} for cumulants. Entries may be ints,
Fractions or strings like "3/4"; results are Fractions.
"""

from fractions import Fraction

from . import _core
from ._core import BadNormalization, BifreeError, BoxMismatch, CapExceeded, ParseError

__all__ = [
    "BadNormalization",
    "BifreeError",
    "BoxMismatch",
    "CapExceeded",
    "ParseError",
    "biconvolve",
    "compute_partial_r",
    "free_convolve1",
    "mixed_moment",
    "partial_r_to_moments",
    "selfcheck",
]


def _str(x):
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return str(Fraction(x)) if not isinstance(x, str) else x


def _to_grid(table):
    return [[_str(x) for x in row] for row in table]


def _from_grid(grid):
    return [[Fraction(x) for x in row] for row in grid]


def compute_partial_r(moments):
    return _from_grid(_core.compute_partial_r(_to_grid(moments)))


def partial_r_to_moments(cumulants):
    return _from_grid(_core.partial_r_to_moments(_to_grid(cumulants)))


def biconvolve(t1, t2):
    return _from_grid(_core.biconvolve(_to_grid(t1), _to_grid(t2)))


def free_convolve1(m1, m2):
    return [Fraction(x) for x in _core.free_convolve1([_str(x) for x in m1], [_str(x) for x in m2])]


def mixed_moment(system_json, word):
    """Mixed moment of a rank1_system document (JSON text) for a word like "b1 a1"."""
    return Fraction(_core.mixed_moment(system_json, word))


def selfcheck(seed=None, size=None, inject_fault=False):
    """Returns (passed, report)."""
    kwargs = {"inject_fault": inject_fault}
    if seed is not None:
        kwargs["seed"] = seed
    if size is not None:
        kwargs["size"] = size
    return _core.selfcheck(**kwargs)
