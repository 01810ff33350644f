"""Partitions, hook geometry and tableau enumeration.

Partitions are plain tuples of weakly decreasing positive ints; () is the
empty partition.  Cells are 1-based (row, column) pairs and the content of
cell (i, j) is j - i.  Super tableau entries are encoded as signed ints:
+i is the unprimed index i (an x/u variable), -j is the primed index j
(a y/v variable).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import NotInHook


def normalize_partition(parts):
    """Validate weak decrease, drop trailing zeros, return a tuple."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {parts}")
        if i and parts[i - 1] < p:
            raise ValueError(f"partition parts must weakly decrease, got {parts}")
    return parts


def conjugate(lam):
    """The transposed diagram: conjugate(lam)[j] = #{i : lam[i] > j}."""
    if not lam:
        return ()
    out = [0] * lam[0]
    for p in lam:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def contains(lam, mu):
    """True iff mu fits inside lam componentwise."""
    if len(mu) > len(lam):
        if any(p > 0 for p in mu[len(lam):]):
            return False
    return all(m <= l for l, m in zip(lam, mu))


def part(lam, i):
    """lam[i] for 1-based i, 0 beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def in_hook(lam, m, n):
    """True iff lam fits the (m, n)-hook, i.e. its (m+1)-th part is <= n."""
    return part(lam, m + 1) <= n


def derived_shapes(lam, m, n):
    """The row part, column part and rectangle part of a hook partition.

    Returns (mu, nu, rho): mu_i = lam_i - n over rows longer than n,
    nu_j = lam'_j - m over columns taller than m, rho_i = min(lam_i, n)
    for i = 1..m.
    """
    if not in_hook(lam, m, n):
        raise NotInHook(f"{lam} does not fit the ({m}, {n})-hook")
    mu = tuple(p - n for p in lam if p > n)
    nu = tuple(q - m for q in conjugate(lam) if q > m)
    rho = normalize_partition(min(part(lam, i), n) for i in range(1, m + 1))
    return mu, nu, rho


def xi_eta(zeta, m, n):
    """The padded evaluation shapes of a hook partition.

    xi is the first m parts of zeta (zeros kept); eta has n slots with
    eta_i = zeta'_i - m where the i-th column exceeds height m, else 0.
    """
    if not in_hook(zeta, m, n):
        raise NotInHook(f"{zeta} does not fit the ({m}, {n})-hook")
    xi = tuple(part(zeta, i) for i in range(1, m + 1))
    zc = conjugate(zeta)
    eta = tuple(part(zc, i) - m if part(zc, i) > m else 0 for i in range(1, n + 1))
    return xi, eta


def cells(lam):
    """All cells of the diagram, row-major."""
    return [(i, j) for i, p in enumerate(lam, start=1) for j in range(1, p + 1)]


def hook_length(lam, cell):
    """Arm + leg + 1 of a cell of lam."""
    i, j = cell
    arm = lam[i - 1] - j
    leg = conjugate(lam)[j - 1] - i
    return arm + leg + 1


def hook_product(lam):
    """Product of the hook lengths of all cells."""
    h = 1
    for cell in cells(lam):
        h *= hook_length(lam, cell)
    return h


def partitions_of(weight, max_part=None):
    """All partitions of the given weight, largest-first-lex order."""
    if max_part is None:
        max_part = weight
    if weight == 0:
        yield ()
        return
    for first in range(min(weight, max_part), 0, -1):
        for rest in partitions_of(weight - first, first):
            yield (first,) + rest


def partitions_up_to(max_weight):
    """All partitions of weight <= max_weight, weight-increasing order."""
    for w in range(max_weight + 1):
        yield from partitions_of(w)


def hook_partitions_up_to(max_weight, m, n):
    """All (m, n)-hook partitions of weight <= max_weight, weight order."""
    return [lam for lam in partitions_up_to(max_weight) if in_hook(lam, m, n)]


def partitions_between(mu, lam):
    """All nu with mu contained in nu contained in lam, componentwise."""
    if not contains(lam, mu):
        return
    rows = len(lam)

    def build(i, prev, acc):
        if i == rows:
            yield normalize_partition(acc)
            return
        lo = part(mu, i + 1)
        hi = min(lam[i], prev)
        for v in range(lo, hi + 1):
            yield from build(i + 1, v, acc + [v])

    yield from build(0, lam[0] if lam else 0, [])


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram outer/inner with inner contained in outer."""

    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", normalize_partition(self.outer))
        object.__setattr__(self, "inner", normalize_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} not contained in {self.outer}")

    @property
    def weight(self):
        return sum(self.outer) - sum(self.inner)

    def cells(self):
        """Cells of the skew diagram, row-major."""
        out = []
        for i, p in enumerate(self.outer, start=1):
            for j in range(part(self.inner, i) + 1, p + 1):
                out.append((i, j))
        return out

    def conjugate(self):
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def __str__(self):
        if self.inner:
            return f"{list(self.outer)}/{list(self.inner)}"
        return f"{list(self.outer)}"


def skew(outer, inner=()):
    return SkewShape(tuple(outer), tuple(inner))


# ---------------------------------------------------------------------------
# tableau enumeration
# ---------------------------------------------------------------------------
#
# All enumerators fill the skew diagram in row-major order, checking each
# entry against its left and upper neighbours only; the ordering conditions
# are transitive along rows and columns, so local checks are enough, and
# they prune partial fillings early.


def _iter_fillings(shape, entries, row_ok, col_ok):
    cell_list = shape.cells()
    if not cell_list:
        yield {}
        return
    in_shape = set(cell_list)
    assignment = {}

    def rec(k):
        if k == len(cell_list):
            yield dict(assignment)
            return
        i, j = cell_list[k]
        left = assignment.get((i, j - 1)) if (i, j - 1) in in_shape else None
        up = assignment.get((i - 1, j)) if (i - 1, j) in in_shape else None
        for e in entries:
            if left is not None and not row_ok(left, e):
                continue
            if up is not None and not col_ok(up, e):
                continue
            assignment[(i, j)] = e
            yield from rec(k + 1)
        assignment.pop((i, j), None)

    yield from rec(0)


def enumerate_ssyt(shape, max_entry):
    """Semistandard tableaux: rows weakly increase, columns strictly increase.

    Entries run over 1..max_entry; yields dict cell -> entry.
    """
    return _iter_fillings(
        shape,
        range(1, max_entry + 1),
        lambda left, e: e >= left,
        lambda up, e: e > up,
    )


def enumerate_reverse_ssyt(shape, max_entry):
    """Reverse tableaux: rows weakly decrease, columns strictly decrease."""
    return _iter_fillings(
        shape,
        range(1, max_entry + 1),
        lambda left, e: e <= left,
        lambda up, e: e < up,
    )


def _super_rules(shifted):
    # Signed entries: negative = primed.  Primed entries sit left of/above
    # unprimed ones, strictly decrease along rows and weakly decrease down
    # columns.  Unprimed entries weakly increase along rows and strictly
    # increase down columns; the shifted flavor reverses both to weakly
    # decrease / strictly decrease.
    def row_ok(left, e):
        if left < 0:
            return e > left if e < 0 else True
        if e < 0:
            return False
        return e <= left if shifted else e >= left

    def col_ok(up, e):
        if up < 0:
            return e >= up if e < 0 else True
        if e < 0:
            return False
        return e < up if shifted else e > up

    return row_ok, col_ok


def enumerate_super(shape, m, n, shifted=False):
    """Hook tableaux with primed entries -1..-n and unprimed entries 1..m.

    Yields dict cell -> signed entry; each valid filling exactly once.
    """
    entries = [-j for j in range(1, n + 1)] + list(range(1, m + 1))
    row_ok, col_ok = _super_rules(shifted)
    return _iter_fillings(shape, entries, row_ok, col_ok)


@lru_cache(maxsize=None)
def permutations_with_sign(n):
    """All permutations of (1..n) with their signs, in lexicographic order."""
    out = []
    for perm in permutations(range(1, n + 1)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)
