"""Shared fixtures and hypothesis strategies."""

import pytest
from hypothesis import strategies as st

from superschur.algebra import Poly
from superschur.sequences import ParamSequence


@pytest.fixture(scope="session")
def sym():
    """A symbolic sequence with a window wide enough for every desk grid."""
    return ParamSequence.symbolic(-40, 40)


@pytest.fixture(scope="session")
def arith():
    """The multiplicity-free arithmetic sequence a_i = i."""
    return ParamSequence.arithmetic(0)


fractions = st.fractions(
    min_value=-6, max_value=6, max_denominator=5
)


@st.composite
def partitions(draw, max_weight=8, max_length=5):
    length = draw(st.integers(min_value=0, max_value=max_length))
    parts = []
    remaining = max_weight
    bound = max_weight
    for _ in range(length):
        if remaining <= 0 or bound <= 0:
            break
        p = draw(st.integers(min_value=1, max_value=min(bound, remaining)))
        parts.append(p)
        bound = p
        remaining -= p
    return tuple(parts)


_var_pool = [("x", 1), ("x", 2), ("y", 1), ("a", -1), ("a", 2)]


@st.composite
def polys(draw, max_terms=5, max_exp=3):
    total = Poly.zero()
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        coeff = draw(fractions)
        term = Poly.const(coeff)
        for var in draw(st.lists(st.sampled_from(_var_pool), max_size=3)):
            term = term * Poly.variable(*var) ** draw(
                st.integers(min_value=1, max_value=max_exp)
            )
        total = total + term
    return total
