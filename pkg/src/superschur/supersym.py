"""Factorial supersymmetric Schur polynomials.

Four routes to the same family — the two-family convolution, the hook
tableau sum, the determinant of complete one-row functions, and the
antisymmetrized-product ratio — together with the generating series for
the one-row/one-column cases, vanishing and evaluation at distinguished
points, the factorization and dual Cauchy corollaries, and expansion of an
arbitrary supersymmetric polynomial in the basis.

Everything is exact; routes are compared for identity verification rather
than trusted individually.
"""

from dataclasses import dataclass
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
from .combinatorics import (
    cells,
    contains,
    derived_shapes,
    enumerate_super,
    hook_partitions_up_to,
    in_hook,
    normalize_partition,
    part,
    partitions_between,
    permutations_with_sign,
    skew,
    xi_eta,
)
from .errors import (
    DegreeBoundExceeded,
    NotInHook,
    NotSupersymmetric,
    PreconditionViolated,
    SequenceNotMultiplicityFree,
    WindowExceeded,
)
from .factorial import (
    e_factorial,
    e_factorial_value,
    evaluation_product_classical,
    factorial_schur_tableau,
    h_factorial,
    h_factorial_value,
)
from .sequences import ParamSequence, eval_point, falling_product


@dataclass(frozen=True)
class SuperContext:
    """Ambient data: m unprimed (x) variables, n primed (y) variables, and
    the parameter sequence."""

    m: int
    n: int
    seq: ParamSequence

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("variable counts must be nonnegative")

    @property
    def star_seq(self):
        return self.seq.star(self.n)

    def shifted(self, k):
        return SuperContext(self.m, self.n, self.seq.shift(k))

    def x_vars(self):
        return tuple(Poly.variable("x", i) for i in range(1, self.m + 1))

    def y_vars(self):
        return tuple(Poly.variable("y", j) for j in range(1, self.n + 1))


# ---------------------------------------------------------------------------
# the four routes
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def super_schur_conv(shape, ctx):
    """Convolution route: sum over intermediate partitions nu of
    s_{lam/nu}(x|a) * s_{nu'/mu'}(y|a*)."""
    total = Poly.zero()
    for nu in partitions_between(shape.inner, shape.outer):
        x_part = factorial_schur_tableau(skew(shape.outer, nu), ctx.m, ctx.seq, "x")
        if not x_part:
            continue
        y_part = factorial_schur_tableau(
            skew(nu, shape.inner).conjugate(), ctx.n, ctx.star_seq, "y"
        )
        if y_part:
            total = total + x_part * y_part
    return total


def super_tableau_sum(shape, x_values, y_values, seq):
    """Sum over hook tableaux of the two-family weight products.

    Unprimed entries t contribute (x_t - a_{t+content}); primed entries t
    contribute (y_t + a_{t+content}).  x_values / y_values bind the entry
    values, so the same sum serves the symbolic polynomial and its
    evaluations.
    """
    factor_cache = {}
    total = {}
    for filling in enumerate_super(shape, len(x_values), len(y_values)):
        prod = {(): (1, 1)}
        for (i, j), t in filling.items():
            key = (t, j - i)
            factor = factor_cache.get(key)
            if factor is None:
                if t > 0:
                    factor = (x_values[t - 1] - seq.get(t + j - i))._terms
                else:
                    factor = (y_values[-t - 1] + seq.get(-t + j - i))._terms
                factor_cache[key] = factor
            prod = kernel.terms_mul(prod, factor)
        total = kernel.terms_add(total, prod)
    return Poly(total)


@lru_cache(maxsize=None)
def super_schur_tableau(shape, ctx):
    """Tableau route: direct sum over primed/unprimed hook tableaux."""
    return super_tableau_sum(shape, ctx.x_vars(), ctx.y_vars(), ctx.seq)


@lru_cache(maxsize=None)
def e_super(k, ctx):
    """One-column case via the convolution e_p(x|shift^(-q) a) h_q(y|a*)."""
    if k < 0:
        return Poly.zero()
    total = Poly.zero()
    for q in range(k + 1):
        p = k - q
        left = e_factorial(p, ctx.m, ctx.seq.shift(-q), "x")
        if not left:
            continue
        right = h_factorial(q, ctx.n, ctx.star_seq, "y")
        if right:
            total = total + left * right
    return total


@lru_cache(maxsize=None)
def h_super(k, ctx):
    """One-row case via the convolution h_p(x|shift^q a) e_q(y|a*)."""
    if k < 0:
        return Poly.zero()
    total = Poly.zero()
    for q in range(k + 1):
        p = k - q
        left = h_factorial(p, ctx.m, ctx.seq.shift(q), "x")
        if not left:
            continue
        right = e_factorial(q, ctx.n, ctx.star_seq, "y")
        if right:
            total = total + left * right
    return total


def e_super_explicit(k, ctx):
    """Independent transcription of the explicit one-column sum.

    Chains i_1 < ... < i_p and j_1 >= ... >= j_q with factors
    (y_{j_r} + a_{j_r - r + 1}) and (x_{i_r} - a_{i_r - q - r + 1}).
    Used as an oracle against e_super.
    """
    if k < 0:
        return Poly.zero()
    seq = ctx.seq
    total = Poly.zero()
    for q in range(k + 1):
        p = k - q
        if p > ctx.m:
            continue
        for j_chain in combinations_with_replacement(range(1, ctx.n + 1), q):
            j_desc = tuple(reversed(j_chain))
            y_prod = Poly.one()
            for r, j in enumerate(j_desc, start=1):
                y_prod = y_prod * (Poly.variable("y", j) + seq.get(j - r + 1))
            for i_chain in combinations(range(1, ctx.m + 1), p):
                prod = y_prod
                for r, i in enumerate(i_chain, start=1):
                    prod = prod * (Poly.variable("x", i) - seq.get(i - q - r + 1))
                total = total + prod
    return total


def h_super_explicit(k, ctx):
    """Independent transcription of the explicit one-row sum.

    Chains i_1 <= ... <= i_p and j_1 > ... > j_q with factors
    (y_{j_r} + a_{j_r + r - 1}) and (x_{i_r} - a_{i_r + q + r - 1}).
    Used as an oracle against h_super.
    """
    if k < 0:
        return Poly.zero()
    seq = ctx.seq
    total = Poly.zero()
    for q in range(k + 1):
        p = k - q
        if q > ctx.n:
            continue
        for j_chain in combinations(range(1, ctx.n + 1), q):
            j_desc = tuple(reversed(j_chain))
            y_prod = Poly.one()
            for r, j in enumerate(j_desc, start=1):
                y_prod = y_prod * (Poly.variable("y", j) + seq.get(j + r - 1))
            for i_chain in combinations_with_replacement(range(1, ctx.m + 1), p):
                prod = y_prod
                for r, i in enumerate(i_chain, start=1):
                    prod = prod * (Poly.variable("x", i) - seq.get(i + q + r - 1))
                total = total + prod
    return total


@lru_cache(maxsize=None)
def jacobi_trudi(shape, ctx):
    """Determinant route: det[h_{lam_i - mu_j - i + j}(x/y | shift^{mu_j - j + 1} a)]."""
    lam, mu = shape.outer, shape.inner
    size = len(lam)
    matrix = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            k = part(lam, i) - part(mu, j) - i + j
            row.append(h_super(k, ctx.shifted(part(mu, j) - j + 1)))
        matrix.append(row)
    return det_poly(matrix)


@lru_cache(maxsize=None)
def dual_jacobi_trudi(shape, ctx):
    """Elementary determinant det[e_{lam_i - mu_j - i + j}(x/y | shift^{-mu_j + j - 1} a)].

    Produces the conjugate-shape polynomial s_{lam'/mu'}(x/y|a).
    """
    lam, mu = shape.outer, shape.inner
    size = len(lam)
    matrix = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            k = part(lam, i) - part(mu, j) - i + j
            row.append(e_super(k, ctx.shifted(-part(mu, j) + j - 1)))
        matrix.append(row)
    return det_poly(matrix)


def sergeev_pragacz(lam, ctx):
    """Alternating-sum route: antisymmetrize the falling-product weight and
    divide by both Vandermonde determinants."""
    m, n, seq = ctx.m, ctx.n, ctx.seq
    lam = normalize_partition(lam)
    if not in_hook(lam, m, n):
        raise NotInHook(f"{lam} does not fit the ({m}, {n})-hook")
    mu, nu, rho = derived_shapes(lam, m, n)
    weight = Poly.one()
    for i in range(1, m + 1):
        weight = weight * falling_product(
            "x", i, seq, part(mu, i) + m - i, shift=part(rho, i)
        )
    star = ctx.star_seq
    for j in range(1, n + 1):
        weight = weight * falling_product("y", j, star, part(nu, j) + n - j)
    for i, j in cells(rho):
        weight = weight * (Poly.variable("x", i) + Poly.variable("y", j))

    total = Poly.zero()
    for x_perm, x_sign in permutations_with_sign(m):
        for y_perm, y_sign in permutations_with_sign(n):
            bindings = {}
            for i in range(1, m + 1):
                if x_perm[i - 1] != i:
                    bindings[("x", i)] = Poly.variable("x", x_perm[i - 1])
            for j in range(1, n + 1):
                if y_perm[j - 1] != j:
                    bindings[("y", j)] = Poly.variable("y", y_perm[j - 1])
            image = weight.substitute(bindings)
            total = total + x_sign * y_sign * image

    quotient = exact_divide(total, vandermonde([("x", i) for i in range(1, m + 1)]))
    return exact_divide(quotient, vandermonde([("y", j) for j in range(1, n + 1)]))


# ---------------------------------------------------------------------------
# generating series
# ---------------------------------------------------------------------------


def e_super_value(k, ctx, x_values, y_values):
    """e_k(x/y|a) at rational points, via the one-family numeric sums."""
    total = Fraction(0)
    for q in range(k + 1):
        p = k - q
        left = e_factorial_value(p, x_values, ctx.seq.shift(-q))
        if left:
            total += left * h_factorial_value(q, y_values, ctx.star_seq)
    return total


def h_super_value(k, ctx, x_values, y_values):
    """h_k(x/y|a) at rational points, via the one-family numeric sums."""
    total = Fraction(0)
    for q in range(k + 1):
        p = k - q
        left = h_factorial_value(p, x_values, ctx.seq.shift(q))
        if left:
            total += left * e_factorial_value(q, y_values, ctx.star_seq)
    return total


def genseries_check_super(kind, ctx, x_values, y_values, order):
    """Check the two-family generating series at rational points.

    Both sides are expanded in s = 1/t to the given order after clearing
    denominators, so agreement is exact coefficient equality.  kind "h"
    checks the complete series against
    prod(t-a_i)prod(t+y_j) / (prod(t-x_i)prod(t-a_j)); kind "e" the
    alternating elementary series against its reciprocal arrangement.
    """
    x_values = tuple(Fraction(v) for v in x_values)
    y_values = tuple(Fraction(v) for v in y_values)
    if len(x_values) != ctx.m or len(y_values) != ctx.n:
        raise ValueError("value tuples must match the context sizes")
    seq = ctx.seq
    m, n = ctx.m, ctx.n
    lhs = TruncatedSeries.one(order)
    if kind == "h":
        for k in range(1, order + 1):
            term = TruncatedSeries.constant(
                h_super_value(k, ctx, x_values, y_values), order
            )
            for r in range(1, k + 1):
                term = term * laurent_expand_inverse_linear(seq.get(m + r), order)
            lhs = lhs + term
        left = lhs
        for x in x_values:
            left = left * TruncatedSeries.linear_unit(x, order)
        for j in range(1, n + 1):
            left = left * TruncatedSeries.linear_unit(seq.rational(j), order)
        right = TruncatedSeries.one(order)
        for i in range(1, m + 1):
            right = right * TruncatedSeries.linear_unit(seq.rational(i), order)
        for y in y_values:
            right = right * TruncatedSeries.linear_unit(-y, order)
        return left == right
    if kind == "e":
        for k in range(1, order + 1):
            value = e_super_value(k, ctx, x_values, y_values)
            term = TruncatedSeries.constant(value if k % 2 == 0 else -value, order)
            for r in range(1, k + 1):
                term = term * laurent_expand_inverse_linear(seq.get(m - k + r), order)
            lhs = lhs + term
        left = lhs
        for i in range(1, m + 1):
            left = left * TruncatedSeries.linear_unit(seq.rational(i), order)
        for y in y_values:
            left = left * TruncatedSeries.linear_unit(-y, order)
        right = TruncatedSeries.one(order)
        for x in x_values:
            right = right * TruncatedSeries.linear_unit(x, order)
        for j in range(1, n + 1):
            right = right * TruncatedSeries.linear_unit(seq.rational(j), order)
        return left == right
    raise ValueError(f"kind must be 'e' or 'h', got {kind!r}")


# ---------------------------------------------------------------------------
# supersymmetry, specialization, classical reduction
# ---------------------------------------------------------------------------


def cancellation_check(p, ctx):
    """True iff substituting x_m = z, y_n = -z leaves no z dependence."""
    if ctx.m < 1 or ctx.n < 1:
        raise ValueError("cancellation needs at least one variable per family")
    z = Poly.variable("z", 0)
    image = p.substitute({("x", ctx.m): z, ("y", ctx.n): -z})
    return image.degree_in("z", 0) == 0


def is_symmetric_in_family(p, family, count):
    """Invariance under all adjacent transpositions of the family variables."""
    for i in range(1, count):
        swapped = p.substitute(
            {
                (family, i): Poly.variable(family, i + 1),
                (family, i + 1): Poly.variable(family, i),
            }
        )
        if swapped != p:
            return False
    return True


def supersymmetry_witness(p, ctx):
    """None when p is supersymmetric; otherwise a short failure description."""
    for i in range(1, ctx.m):
        swapped = p.substitute(
            {("x", i): Poly.variable("x", i + 1), ("x", i + 1): Poly.variable("x", i)}
        )
        if swapped != p:
            return f"not symmetric under x{i} <-> x{i + 1}"
    for j in range(1, ctx.n):
        swapped = p.substitute(
            {("y", j): Poly.variable("y", j + 1), ("y", j + 1): Poly.variable("y", j)}
        )
        if swapped != p:
            return f"not symmetric under y{j} <-> y{j + 1}"
    if ctx.m >= 1 and ctx.n >= 1:
        z = Poly.variable("z", 0)
        image = p.substitute({("x", ctx.m): z, ("y", ctx.n): -z})
        degree = image.degree_in("z", 0)
        if degree != 0:
            return f"z-degree {degree} after x{ctx.m}=z, y{ctx.n}=-z"
    return None


def specialize_y(p, ctx):
    """Substitute y_n = -a_n, the specialization that drops to n-1 primed
    variables."""
    if ctx.n < 1:
        raise ValueError("no y variable to specialize")
    return p.substitute({("y", ctx.n): -ctx.seq.get(ctx.n)})


def specialization_check(lam, ctx):
    """True iff specializing the last y variable reproduces the (m, n-1)
    polynomial."""
    small = SuperContext(ctx.m, ctx.n - 1, ctx.seq)
    lhs = specialize_y(super_schur_conv(skew(lam), ctx), ctx)
    rhs = super_schur_conv(skew(lam), small)
    return lhs == rhs


def highest_component(p):
    """The homogeneous part of top degree in the main variables.

    Degree counts x/y/u/v/z variables only; the parameter symbols carry
    degree zero, matching their role as coefficients.
    """
    if not p:
        return p
    decorated = []
    for decoded, coeff in p.terms():
        degree = sum(e for fam, _, e in decoded if fam != "a")
        decorated.append((degree, decoded, coeff))
    top = max(d for d, _, _ in decorated)
    total = Poly.zero()
    for degree, decoded, coeff in decorated:
        if degree == top:
            term = Poly.const(coeff)
            for fam, idx, e in decoded:
                term = term * Poly.variable(fam, idx) ** e
            total = total + term
    return total


@lru_cache(maxsize=None)
def classical_super_schur(shape, m, n):
    """The classical two-family Schur polynomial via the zero sequence."""
    zero_seq = ParamSequence.zero()
    total = Poly.zero()
    for nu in partitions_between(shape.inner, shape.outer):
        x_part = factorial_schur_tableau(skew(shape.outer, nu), m, zero_seq, "x")
        if not x_part:
            continue
        y_part = factorial_schur_tableau(
            skew(nu, shape.inner).conjugate(), n, zero_seq, "y"
        )
        if y_part:
            total = total + x_part * y_part
    return total


# ---------------------------------------------------------------------------
# factorization corollaries
# ---------------------------------------------------------------------------


def rectangle_product(m, n):
    """prod_{i<=m, j<=n} (x_i + y_j)."""
    result = Poly.one()
    for i in range(1, m + 1):
        xi = Poly.variable("x", i)
        for j in range(1, n + 1):
            result = result * (xi + Poly.variable("y", j))
    return result


def factorization(lam, ctx):
    """The factored form for hook partitions containing the full rectangle:
    s_mu(x | shift^n a) * s_nu(y | a*) * prod (x_i + y_j)."""
    m, n = ctx.m, ctx.n
    lam = normalize_partition(lam)
    if not in_hook(lam, m, n):
        raise PreconditionViolated(f"{lam} does not fit the ({m}, {n})-hook")
    if not contains(lam, tuple([n] * m)):
        raise PreconditionViolated(f"{lam} does not contain the {n}^{m} rectangle")
    mu, nu, _ = derived_shapes(lam, m, n)
    x_part = factorial_schur_tableau(skew(mu), m, ctx.seq.shift(n), "x")
    y_part = factorial_schur_tableau(skew(nu), n, ctx.star_seq, "y")
    return x_part * y_part * rectangle_product(m, n)


def dual_cauchy_check(m, n, seq):
    """Check the dual Cauchy decomposition of prod (x_i + y_j).

    The right side sums s_{complement of lam}(x|a) * s_{lam'}(y|-a) over
    partitions lam inside the n^m rectangle.
    """
    rectangle = tuple([n] * m)
    total = Poly.zero()
    neg = seq.neg()
    for lam in partitions_between((), rectangle):
        padded = tuple(lam) + (0,) * (m - len(lam))
        complement = normalize_partition(n - padded[i] for i in range(m - 1, -1, -1))
        x_part = factorial_schur_tableau(skew(complement), m, seq, "x")
        if not x_part:
            continue
        y_part = factorial_schur_tableau(
            skew(lam).conjugate(), n, neg, "y"
        )
        if y_part:
            total = total + x_part * y_part
    return total == rectangle_product(m, n)


# ---------------------------------------------------------------------------
# vanishing, evaluation, characterization
# ---------------------------------------------------------------------------


def evaluation_points(zeta, ctx):
    """The distinguished point (x, y values) attached to a hook partition."""
    xi, eta = xi_eta(zeta, ctx.m, ctx.n)
    xs = eval_point(ctx.seq, normalize_partition(xi), ctx.m)
    ys = eval_point(ctx.star_seq, normalize_partition(eta), ctx.n)
    return xs, ys


def vanishing_eval(lam, zeta, ctx):
    """Evaluate s_lam at the point of zeta (constant Poly).

    Zero whenever lam is not contained in zeta; at lam == zeta the value is
    the explicit cell product evaluation_product(lam, ctx).
    """
    lam = normalize_partition(lam)
    if not in_hook(lam, ctx.m, ctx.n):
        raise NotInHook(f"{lam} does not fit the ({ctx.m}, {ctx.n})-hook")
    xs, ys = evaluation_points(normalize_partition(zeta), ctx)
    return super_tableau_sum(skew(lam), xs, ys, ctx.seq)


def evaluation_product(lam, ctx):
    """The diagonal value prod over cells (a_{lam_i+m-i+1} - a_{m-lam'_j+j})."""
    return evaluation_product_classical(normalize_partition(lam), ctx.m, ctx.seq)


@dataclass(frozen=True)
class BasisExpansion:
    """Coefficients of a supersymmetric polynomial over the hook basis."""

    coefficients: dict
    reconstruction_exact: bool

    def reconstruct(self, ctx):
        total = Poly.zero()
        for lam, coeff in self.coefficients.items():
            total = total + coeff * super_schur_conv(skew(lam), ctx)
        return total


def expand_in_basis(p, ctx, degree_bound):
    """Expand a supersymmetric polynomial over the hook basis.

    Evaluates p and the basis at the distinguished points of all hook
    partitions of weight <= degree_bound in weight-increasing order and
    back-substitutes through the triangular system.  Requires a numeric,
    multiplicity-free sequence; coefficients come out exactly and the
    reconstruction is compared against p.
    """
    witness = supersymmetry_witness(p, ctx)
    if witness is not None:
        raise NotSupersymmetric(witness)
    if p.total_degree() > degree_bound:
        raise DegreeBoundExceeded(
            f"degree {p.total_degree()} exceeds the bound {degree_bound}"
        )
    seq = ctx.seq
    if not seq.is_numeric:
        raise ValueError("basis expansion needs a numeric sequence")
    # Distinctness over every accessible index the triangular solve can
    # touch; inaccessible indices fail later with WindowExceeded if the
    # computation truly needs them.
    seen = set()
    for i in range(1 - degree_bound - ctx.n, ctx.m + ctx.n + degree_bound + 1):
        try:
            v = seq.rational(i)
        except WindowExceeded:
            continue
        if v in seen:
            raise SequenceNotMultiplicityFree(
                f"sequence entries collide near index {i}"
            )
        seen.add(v)

    basis = hook_partitions_up_to(degree_bound, ctx.m, ctx.n)
    points = {}
    for zeta in basis:
        xs, ys = evaluation_points(zeta, ctx)
        bindings = {("x", i + 1): xs[i].constant_value() for i in range(ctx.m)}
        bindings.update(
            {("y", j + 1): ys[j].constant_value() for j in range(ctx.n)}
        )
        points[zeta] = bindings

    value_cache = {}

    def basis_value(lam, zeta):
        key = (lam, zeta)
        if key not in value_cache:
            value_cache[key] = vanishing_eval(lam, zeta, ctx).constant_value()
        return value_cache[key]

    coefficients = {}
    for zeta in basis:
        residual = p.eval_rational(points[zeta])
        for lam, coeff in coefficients.items():
            if contains(zeta, lam):
                residual -= coeff * basis_value(lam, zeta)
        if residual == 0:
            continue
        diagonal = basis_value(zeta, zeta)
        if diagonal == 0:
            raise SequenceNotMultiplicityFree(
                f"zero diagonal evaluation at {zeta}"
            )
        coefficients[zeta] = residual / diagonal

    expansion = BasisExpansion(dict(coefficients), False)
    exact = expansion.reconstruct(ctx) == p
    return BasisExpansion(dict(coefficients), exact)
