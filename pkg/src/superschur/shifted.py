"""Shifted supersymmetric Schur polynomials.

The shifted family arises from the factorial one by fixing the arithmetic
sequence a_i = i - m and the change of variables x_i = u_{m-i+1} - m + i,
y_j = v_j + m - j.  It also has a direct tableau sum over the reversed
(weakly/strictly decreasing) hook tableaux with content weights, and a
convolution form built from one-family shifted Schur polynomials; the
implementation computes by substitution and cross-checks the direct route
on every call.

These polynomials take integer values at partition points: the vanishing
grid has hook-length products on the diagonal, which makes it the most
hand-checkable suite in the package.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .algebra import Poly
from .backend import kernel
from .combinatorics import (
    enumerate_reverse_ssyt,
    enumerate_super,
    in_hook,
    normalize_partition,
    partitions_between,
    skew,
    xi_eta,
)
from .errors import InternalMismatch, NotInHook
from .sequences import ParamSequence
from .supersym import SuperContext, super_schur_conv


@dataclass(frozen=True)
class ShiftedContext:
    """m u-variables and n v-variables."""

    m: int
    n: int

    @property
    def sequence(self):
        """The forced parameter sequence a_i = i - m."""
        return ParamSequence.arithmetic(-self.m)

    def super_context(self):
        return SuperContext(self.m, self.n, self.sequence)

    def substitution(self):
        """x_i -> u_{m-i+1} - m + i and y_j -> v_j + m - j."""
        bindings = {}
        for i in range(1, self.m + 1):
            bindings[("x", i)] = Poly.variable("u", self.m - i + 1) + (i - self.m)
        for j in range(1, self.n + 1):
            bindings[("y", j)] = Poly.variable("v", j) + (self.m - j)
        return bindings


@lru_cache(maxsize=None)
def shifted_schur(shape, num_vars, family="u"):
    """One-family shifted Schur polynomial as a tableau sum.

    Rows weakly decrease, columns strictly decrease, and a cell of content
    c filled with t contributes (u_t - c).
    """
    total = Poly.zero()
    for filling in enumerate_reverse_ssyt(shape, num_vars):
        prod = Poly.one()
        for (i, j), t in filling.items():
            prod = prod * (Poly.variable(family, t) - (j - i))
        total = total + prod
    return total


def shifted_tableau_sum(shape, u_values, v_values):
    """Direct two-family tableau route with bound entry values.

    Unprimed entries t in cells of content c contribute (u_t - c), primed
    entries (v_t + c); fillings follow the reversed hook conditions.
    """
    m, n = len(u_values), len(v_values)
    total = {}
    for filling in enumerate_super(shape, m, n, shifted=True):
        prod = {(): (1, 1)}
        for (i, j), t in filling.items():
            c = j - i
            if t > 0:
                factor = (u_values[t - 1] - c)._terms
            else:
                factor = (v_values[-t - 1] + c)._terms
            prod = kernel.terms_mul(prod, factor)
        total = kernel.terms_add(total, prod)
    return Poly(total)


@lru_cache(maxsize=None)
def shifted_super_schur(shape, ctx):
    """The shifted two-family polynomial, by substitution and by the direct
    tableau sum; the two must agree or InternalMismatch is raised."""
    factorial_poly = super_schur_conv(shape, ctx.super_context())
    by_substitution = factorial_poly.substitute(ctx.substitution())
    u_vars = tuple(Poly.variable("u", i) for i in range(1, ctx.m + 1))
    v_vars = tuple(Poly.variable("v", j) for j in range(1, ctx.n + 1))
    by_tableaux = shifted_tableau_sum(shape, u_vars, v_vars)
    if by_substitution != by_tableaux:
        raise InternalMismatch(
            f"substitution and tableau routes disagree on {shape}"
        )
    return by_tableaux


@lru_cache(maxsize=None)
def shifted_conv(shape, ctx):
    """Convolution of one-family shifted Schur polynomials over the
    intermediate partition."""
    total = Poly.zero()
    for nu in partitions_between(shape.inner, shape.outer):
        u_part = shifted_schur(skew(shape.outer, nu), ctx.m, "u")
        if not u_part:
            continue
        v_part = shifted_schur(skew(nu, shape.inner).conjugate(), ctx.n, "v")
        if v_part:
            total = total + u_part * v_part
    return total


def e_star(k, ctx):
    """One-column shifted polynomial as its explicit chain sum.

    Chains i_1 > ... > i_p and j_1 >= ... >= j_q with factors
    (v_{j_r} - r + 1) and (u_{i_r} + q + r - 1).
    """
    if k < 0:
        return Poly.zero()
    total = Poly.zero()
    for q in range(k + 1):
        p = k - q
        if p > ctx.m:
            continue
        for j_chain in combinations_with_replacement(range(1, ctx.n + 1), q):
            j_desc = tuple(reversed(j_chain))
            v_prod = Poly.one()
            for r, j in enumerate(j_desc, start=1):
                v_prod = v_prod * (Poly.variable("v", j) - (r - 1))
            for i_chain in combinations(range(1, ctx.m + 1), p):
                i_desc = tuple(reversed(i_chain))
                prod = v_prod
                for r, i in enumerate(i_desc, start=1):
                    prod = prod * (Poly.variable("u", i) + (q + r - 1))
                total = total + prod
    return total


def h_star(k, ctx):
    """One-row shifted polynomial as its explicit chain sum.

    Chains i_1 >= ... >= i_p and j_1 > ... > j_q with factors
    (v_{j_r} + r - 1) and (u_{i_r} - q - r + 1).
    """
    if k < 0:
        return Poly.zero()
    total = Poly.zero()
    for q in range(k + 1):
        p = k - q
        if q > ctx.n:
            continue
        for j_chain in combinations(range(1, ctx.n + 1), q):
            j_desc = tuple(reversed(j_chain))
            v_prod = Poly.one()
            for r, j in enumerate(j_desc, start=1):
                v_prod = v_prod * (Poly.variable("v", j) + (r - 1))
            for i_chain in combinations_with_replacement(range(1, ctx.m + 1), p):
                i_desc = tuple(reversed(i_chain))
                prod = v_prod
                for r, i in enumerate(i_desc, start=1):
                    prod = prod * (Poly.variable("u", i) - (q + r - 1))
                total = total + prod
    return total


def shifted_eval(shape, u_values, v_values):
    """The direct tableau sum at rational points, as a Fraction."""
    total = Fraction(0)
    m, n = len(u_values), len(v_values)
    for filling in enumerate_super(shape, m, n, shifted=True):
        prod = Fraction(1)
        for (i, j), t in filling.items():
            c = j - i
            if t > 0:
                prod *= u_values[t - 1] - c
            else:
                prod *= v_values[-t - 1] + c
        total += prod
    return total


def vanishing_star(lam, zeta, ctx):
    """Evaluate the shifted polynomial of lam at the partition point of zeta.

    Zero whenever lam is not contained in zeta; at lam == zeta the value is
    the product of the hook lengths of lam.
    """
    lam = normalize_partition(lam)
    zeta = normalize_partition(zeta)
    if not in_hook(lam, ctx.m, ctx.n):
        raise NotInHook(f"{lam} does not fit the ({ctx.m}, {ctx.n})-hook")
    xi, eta = xi_eta(zeta, ctx.m, ctx.n)
    u_values = tuple(Fraction(x) for x in xi)
    v_values = tuple(Fraction(x) for x in eta)
    return shifted_eval(skew(lam), u_values, v_values)
