"""Partitions, hooks, derived shapes and tableau enumeration.

Enumerator tests brute-force every assignment of entries to cells and
filter with independently written global monotonicity predicates, then
compare against the backtracking generators.
"""

from itertools import product

import pytest
from hypothesis import given

from superschur.combinatorics import (
    cells,
    conjugate,
    contains,
    derived_shapes,
    enumerate_reverse_ssyt,
    enumerate_ssyt,
    enumerate_super,
    hook_partitions_up_to,
    hook_product,
    in_hook,
    normalize_partition,
    partitions_between,
    partitions_up_to,
    permutations_with_sign,
    skew,
    xi_eta,
)
from superschur.errors import NotInHook

from conftest import partitions


def test_normalize():
    assert normalize_partition([3, 1, 0, 0]) == (3, 1)
    assert normalize_partition([]) == ()
    with pytest.raises(ValueError):
        normalize_partition([1, 2])
    with pytest.raises(ValueError):
        normalize_partition([2, -1])


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)


@given(partitions())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_contains_examples():
    assert contains((2, 1), ())
    assert contains((2, 1), (1, 1))
    assert not contains((2, 1), (3,))


def test_contains_partial_order_weight_8():
    all_parts = list(partitions_up_to(8))
    for lam in all_parts:
        assert contains(lam, lam)
    for lam in all_parts:
        for mu in all_parts:
            if contains(lam, mu) and contains(mu, lam):
                assert lam == mu
    import random

    rng = random.Random(0)
    for _ in range(4000):
        lam, mu, nu = rng.choice(all_parts), rng.choice(all_parts), rng.choice(all_parts)
        if contains(lam, mu) and contains(mu, nu):
            assert contains(lam, nu)


def test_in_hook_examples():
    assert in_hook((3, 3), 2, 0)
    assert not in_hook((3, 3, 1), 2, 0)
    assert in_hook((5, 1, 1), 1, 2)


def test_derived_shapes_examples():
    assert derived_shapes((1, 1), 2, 1) == ((), (), (1, 1))
    assert derived_shapes((3, 1), 1, 1) == ((2,), (1,), (1,))
    # (2,2) at m=2, n=1: both columns have height exactly m, so the column
    # part is empty (the antisymmetrized route only divides evenly with this
    # reading).
    assert derived_shapes((2, 2), 2, 1) == ((1, 1), (), (1, 1))
    with pytest.raises(NotInHook):
        derived_shapes((3, 3, 1), 2, 0)


@given(partitions(max_weight=8))
def test_derived_shapes_lengths(lam):
    for m in range(3):
        for n in range(3):
            if not in_hook(lam, m, n):
                continue
            mu, nu, _ = derived_shapes(lam, m, n)
            assert len(mu) <= m
            assert len(nu) <= n


def test_xi_eta_examples():
    assert xi_eta((), 2, 1) == ((0, 0), (0,))
    assert xi_eta((1,), 2, 1) == ((1, 0), (0,))
    assert xi_eta((2, 1, 1), 1, 2) == ((2,), (2, 0))


def test_hook_product_examples():
    assert hook_product(()) == 1
    assert hook_product((1,)) == 1
    assert hook_product((2, 1)) == 3
    assert hook_product((2, 2)) == 12


def test_hook_product_oracle():
    # independent route: count cells at arm+leg+1 straight from the diagram
    for lam in partitions_up_to(6):
        expected = 1
        for (i, j) in cells(lam):
            arm = lam[i - 1] - j
            leg = sum(1 for q in lam[i:] if q >= j)
            expected *= arm + leg + 1
        assert hook_product(lam) == expected


def test_skew_shape():
    shape = skew((3, 1), (1,))
    assert shape.weight == 3
    assert shape.cells() == [(1, 2), (1, 3), (2, 1)]
    assert shape.conjugate().outer == (2, 1, 1)
    with pytest.raises(ValueError):
        skew((1,), (2,))


def test_partitions_between():
    nus = list(partitions_between((1,), (2, 1)))
    assert nus == [(1,), (1, 1), (2,), (2, 1)]
    assert list(partitions_between((), ())) == [()]


def test_hook_partitions_weight_order():
    hooks = hook_partitions_up_to(4, 1, 1)
    weights = [sum(lam) for lam in hooks]
    assert weights == sorted(weights)
    assert all(in_hook(lam, 1, 1) for lam in hooks)
    assert (2, 2) not in hooks


# -- enumerators against brute force ----------------------------------------


def brute_force_ssyt(shape, max_entry, row_increase, col_increase):
    """All fillings satisfying global monotonicity, by exhaustive search.

    row_increase/col_increase: +1 weak increase, +2 strict increase,
    -1 weak decrease, -2 strict decrease along rows/columns.
    """

    def ok(order, prev, cur):
        if order == 1:
            return cur >= prev
        if order == 2:
            return cur > prev
        if order == -1:
            return cur <= prev
        return cur < prev

    cell_list = shape.cells()
    valid = []
    for values in product(range(1, max_entry + 1), repeat=len(cell_list)):
        filling = dict(zip(cell_list, values))
        good = True
        for (i, j), value in filling.items():
            if (i, j - 1) in filling and not ok(row_increase, filling[(i, j - 1)], value):
                good = False
                break
            if (i - 1, j) in filling and not ok(col_increase, filling[(i - 1, j)], value):
                good = False
                break
        if good:
            valid.append(filling)
    return valid


@pytest.mark.parametrize(
    "outer,inner,max_entry",
    [((1,), (), 2), ((1, 1), (), 2), ((2, 1), (), 2), ((2, 2), (1,), 3),
     ((3, 1), (1,), 2), ((2, 2, 1), (1,), 3)],
)
def test_enumerate_ssyt_matches_brute_force(outer, inner, max_entry):
    shape = skew(outer, inner)
    ours = list(enumerate_ssyt(shape, max_entry))
    brute = brute_force_ssyt(shape, max_entry, 1, 2)
    assert len(ours) == len(set(tuple(sorted(t.items())) for t in ours))
    assert sorted(tuple(sorted(t.items())) for t in ours) == sorted(
        tuple(sorted(t.items())) for t in brute
    )


def test_enumerate_ssyt_examples():
    assert len(list(enumerate_ssyt(skew((1,)), 2))) == 2
    assert len(list(enumerate_ssyt(skew((1, 1)), 2))) == 1
    assert len(list(enumerate_ssyt(skew((2, 1)), 2))) == 2
    assert list(enumerate_ssyt(skew(()), 3)) == [{}]


@pytest.mark.parametrize(
    "outer,inner,max_entry",
    [((2, 1), (), 2), ((2, 2), (), 3), ((3, 1), (1,), 2)],
)
def test_enumerate_reverse_ssyt_matches_brute_force(outer, inner, max_entry):
    shape = skew(outer, inner)
    ours = sorted(tuple(sorted(t.items())) for t in enumerate_reverse_ssyt(shape, max_entry))
    brute = sorted(
        tuple(sorted(t.items())) for t in brute_force_ssyt(shape, max_entry, -1, -2)
    )
    assert ours == brute


def brute_force_super(shape, m, n, shifted):
    """Exhaustive filter of all signed fillings against the hook rules."""
    cell_list = shape.cells()
    entries = [-j for j in range(1, n + 1)] + list(range(1, m + 1))
    valid = []
    for values in product(entries, repeat=len(cell_list)):
        filling = dict(zip(cell_list, values))
        good = True
        for (i, j), e in filling.items():
            left = filling.get((i, j - 1))
            up = filling.get((i - 1, j))
            if left is not None:
                if left < 0 and e < 0 and not e > left:
                    good = False
                if left > 0 and e < 0:
                    good = False
                if left > 0 and e > 0:
                    if shifted and not e <= left:
                        good = False
                    if not shifted and not e >= left:
                        good = False
            if up is not None:
                if up < 0 and e < 0 and not e >= up:
                    good = False
                if up > 0 and e < 0:
                    good = False
                if up > 0 and e > 0:
                    if shifted and not e < up:
                        good = False
                    if not shifted and not e > up:
                        good = False
        if good:
            valid.append(filling)
    return valid


@pytest.mark.parametrize("shifted", [False, True])
@pytest.mark.parametrize(
    "outer,inner,m,n",
    [((1,), (), 1, 1), ((1, 1), (), 1, 1), ((2, 1), (), 2, 1),
     ((2, 2), (1,), 1, 2), ((3, 1), (), 2, 2)],
)
def test_enumerate_super_matches_brute_force(outer, inner, m, n, shifted):
    shape = skew(outer, inner)
    ours = sorted(
        tuple(sorted(t.items())) for t in enumerate_super(shape, m, n, shifted)
    )
    brute = sorted(
        tuple(sorted(t.items())) for t in brute_force_super(shape, m, n, shifted)
    )
    assert ours == brute


def test_enumerate_super_examples():
    assert len(list(enumerate_super(skew((1,)), 1, 1))) == 2
    assert len(list(enumerate_super(skew((1, 1)), 1, 1))) == 2
    # a row of two cells cannot hold two strictly decreasing primed entries
    assert list(enumerate_super(skew((2,)), 0, 1)) == []


def test_enumerate_super_reduces_to_ssyt():
    for outer in [(2, 1), (3,), (2, 2)]:
        shape = skew(outer)
        with_primes = sorted(
            tuple(sorted(t.items())) for t in enumerate_super(shape, 2, 0)
        )
        plain = sorted(tuple(sorted(t.items())) for t in enumerate_ssyt(shape, 2))
        assert with_primes == plain


def test_permutations_with_sign():
    perms = dict(permutations_with_sign(3))
    assert perms[(1, 2, 3)] == 1
    assert perms[(2, 1, 3)] == -1
    assert perms[(3, 1, 2)] == 1
    assert len(perms) == 6
    assert sum(sign for _, sign in permutations_with_sign(4)) == 0
