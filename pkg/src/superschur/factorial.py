"""Classical factorial Schur polynomials.

Two routes to the same family: the tableau sum over semistandard fillings,
and the ratio of an alternating determinant of falling products by the
Vandermonde determinant.  One-row and one-column cases get their own direct
sums, plus numeric evaluators and truncated-series checks for the two
classical generating-series identities.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .algebra import (
    Poly,
    TruncatedSeries,
    det_poly,
    exact_divide,
    laurent_expand_inverse_linear,
    vandermonde,
)
from .backend import kernel
from .combinatorics import cells, conjugate, part, skew
from .combinatorics import enumerate_ssyt
from .sequences import eval_point, falling_product


def tableau_weight_sum(shape, x_values, seq):
    """Sum over semistandard fillings of prod (x_{T(cell)} - a_{T(cell)+content}).

    x_values supplies the value bound to each entry (a variable for the
    symbolic polynomial, any Poly for evaluations); its length is the
    largest allowed entry.
    """
    factor_cache = {}
    total = {}
    for filling in enumerate_ssyt(shape, len(x_values)):
        prod = {(): (1, 1)}
        for (i, j), t in filling.items():
            key = (t, j - i)
            factor = factor_cache.get(key)
            if factor is None:
                factor = (x_values[t - 1] - seq.get(t + j - i))._terms
                factor_cache[key] = factor
            prod = kernel.terms_mul(prod, factor)
        total = kernel.terms_add(total, prod)
    return Poly(total)


@lru_cache(maxsize=None)
def factorial_schur_tableau(shape, num_vars, seq, family="x"):
    """The skew factorial Schur polynomial as a tableau sum.

    Zero when the shape admits no column-strict filling with num_vars
    entries (in particular when the outer partition is longer than
    num_vars for a non-skew shape).
    """
    xs = tuple(Poly.variable(family, i) for i in range(1, num_vars + 1))
    return tableau_weight_sum(shape, xs, seq)


def factorial_schur_ratio(lam, num_vars, seq, family="x"):
    """The same polynomial as a ratio of determinants.

    det[(x_j | a)^(lam_i + m - i)] / Vandermonde(x), computed exactly; a
    division failure would mean the determinant is not alternating-divisible
    and is reported as NotDivisible.
    """
    m = num_vars
    if len(lam) > m:
        raise ValueError(f"partition {lam} has more than {m} parts")
    matrix = [
        [falling_product(family, j, seq, part(lam, i) + m - i) for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    numerator = det_poly(matrix)
    delta = vandermonde([(family, i) for i in range(1, m + 1)])
    return exact_divide(numerator, delta)


@lru_cache(maxsize=None)
def e_factorial(k, num_vars, seq, family="x"):
    """Factorial elementary polynomial: chains i_1 < ... < i_k.

    The r-th factor is (x_{i_r} - a_{i_r - r + 1}); zero for k < 0 or
    k > num_vars, one for k = 0.
    """
    if k < 0:
        return Poly.zero()
    total = {}
    for chain in combinations(range(1, num_vars + 1), k):
        prod = {(): (1, 1)}
        for r, i in enumerate(chain, start=1):
            factor = Poly.variable(family, i) - seq.get(i - r + 1)
            prod = kernel.terms_mul(prod, factor._terms)
        total = kernel.terms_add(total, prod)
    return Poly(total)


@lru_cache(maxsize=None)
def h_factorial(k, num_vars, seq, family="x"):
    """Factorial complete polynomial: chains i_1 <= ... <= i_k.

    The r-th factor is (x_{i_r} - a_{i_r + r - 1}); zero for k < 0, one
    for k = 0.
    """
    if k < 0:
        return Poly.zero()
    total = {}
    for chain in combinations_with_replacement(range(1, num_vars + 1), k):
        prod = {(): (1, 1)}
        for r, i in enumerate(chain, start=1):
            factor = Poly.variable(family, i) - seq.get(i + r - 1)
            prod = kernel.terms_mul(prod, factor._terms)
        total = kernel.terms_add(total, prod)
    return Poly(total)


def e_factorial_value(k, values, seq):
    """e_k evaluated at rational values, without building the polynomial."""
    if k < 0:
        return Fraction(0)
    total = Fraction(0)
    for chain in combinations(range(1, len(values) + 1), k):
        prod = Fraction(1)
        for r, i in enumerate(chain, start=1):
            prod *= values[i - 1] - seq.rational(i - r + 1)
        total += prod
    return total


def h_factorial_value(k, values, seq):
    """h_k evaluated at rational values, without building the polynomial."""
    if k < 0:
        return Fraction(0)
    total = Fraction(0)
    for chain in combinations_with_replacement(range(1, len(values) + 1), k):
        prod = Fraction(1)
        for r, i in enumerate(chain, start=1):
            prod *= values[i - 1] - seq.rational(i + r - 1)
        total += prod
    return total


def vanishing_classical(lam, sigma, num_vars, seq):
    """Evaluate s_lam at the evaluation point of sigma.

    Zero whenever lam is not contained in sigma; at lam == sigma the value
    is the explicit cell product (see evaluation_product_classical).
    Returns a constant Poly (symbolic sequences give a polynomial in the
    a-symbols, which must vanish identically in the first case).
    """
    xs = eval_point(seq, sigma, num_vars)
    return tableau_weight_sum(skew(lam), xs, seq)


def evaluation_product_classical(lam, num_vars, seq):
    """The diagonal value prod over cells (a_{lam_i+m-i+1} - a_{m-lam'_j+j})."""
    m = num_vars
    lam_c = conjugate(lam)
    result = Poly.one()
    for i, j in cells(lam):
        result = result * (seq.get(lam[i - 1] + m - i + 1) - seq.get(m - lam_c[j - 1] + j))
    return result


# ---------------------------------------------------------------------------
# generating series
# ---------------------------------------------------------------------------


def genseries_check_classical(kind, values, seq, order):
    """Check a classical one-family generating series at rational values.

    kind "h": 1 + sum_k h_k / ((t-a_{n+1})..(t-a_{n+k})) against
    prod (t-a_i) / prod (t-y_i); kind "e": the alternating elementary
    series against its rational side.  Both sides are compared after
    clearing denominators, as truncated expansions in s = 1/t, so equality
    is exact through the given order.
    """
    values = tuple(Fraction(v) for v in values)
    n = len(values)
    lhs = TruncatedSeries.one(order)
    if kind == "h":
        for k in range(1, order + 1):
            term = TruncatedSeries.constant(h_factorial_value(k, values, seq), order)
            for r in range(1, k + 1):
                term = term * laurent_expand_inverse_linear(seq.get(n + r), order)
            lhs = lhs + term
        left = lhs
        for y in values:
            left = left * TruncatedSeries.linear_unit(y, order)
        right = TruncatedSeries.one(order)
        for i in range(1, n + 1):
            right = right * TruncatedSeries.linear_unit(seq.rational(i), order)
        return left == right
    if kind == "e":
        for k in range(1, min(n, order) + 1):
            value = e_factorial_value(k, values, seq)
            term = TruncatedSeries.constant(value if k % 2 == 0 else -value, order)
            for r in range(1, k + 1):
                term = term * laurent_expand_inverse_linear(seq.get(n - k + r), order)
            lhs = lhs + term
        left = lhs
        for i in range(1, n + 1):
            left = left * TruncatedSeries.linear_unit(seq.rational(i), order)
        right = TruncatedSeries.one(order)
        for y in values:
            right = right * TruncatedSeries.linear_unit(y, order)
        return left == right
    raise ValueError(f"kind must be 'e' or 'h', got {kind!r}")
