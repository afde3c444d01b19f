from __future__ import annotations

from itertools import product as cartesian
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_lines.tableau import (EMPTY, Tableau, block_starts, c_count, c_tableaux, canonical,
                                    catalan, enumerate_standard, hook_length_count, multi_star,
                                    partial_star, partition, partitions_of, plus_set, star_extend,
                                    star_set, variant)
from strategies import tableau_sets, two_row_tableaux

T = Tableau.of


def brute_force_standard(shape):
    """Every filling of the diagram by 1..n, kept if rows and columns increase."""
    n = sum(shape)
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    out = []
    from itertools import permutations
    for perm in permutations(range(1, n + 1)):
        rows = [[None] * r for r in shape]
        for (i, j), v in zip(cells, perm):
            rows[i][j] = v
        try:
            out.append(T(rows))
        except ValueError:
            pass
    return sorted(out)


def brute_force_star(t: Tableau, alpha: int) -> list[Tableau]:
    """Definition-level oracle: place the new entries in every possible row pattern."""
    d = t.degree
    out = []
    for pattern in cartesian((0, 1), repeat=alpha):
        rows = [list(t.row(0)), list(t.row(1))]
        for k, r in enumerate(pattern):
            rows[r].append(d + k + 1)
        try:
            cand = T(rows)
        except ValueError:
            continue
        cols = [cand.position(d + k + 1)[1] for k in range(alpha)]
        if all(a < b for a, b in zip(cols, cols[1:])):
            out.append(cand)
    return sorted(out)


def test_tableau_validation():
    with pytest.raises(ValueError):
        T([[1, 3], [2, 2]])
    with pytest.raises(ValueError):
        T([[2, 1]])
    with pytest.raises(ValueError):
        T([[1], [2, 3]])
    assert T([[1, 2], []]) == T([[1, 2]])


def test_partition_helpers():
    assert partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    assert len(partitions_of(6)) == 11
    assert partitions_of(4, 2) == [(4,), (3, 1), (2, 2)]


def test_json_round_trip():
    t = T([[1, 2, 4], [3]])
    assert Tableau.from_json(t.to_json()) == t
    assert Tableau.from_json([[1, 2, 4], [3]]) == t


def test_canonical_rejects_duplicates():
    with pytest.raises(AssertionError):
        canonical([T([[1]]), T([[1]])])


def test_canonical_order_separates_shapes():
    a, b = T([[1, 2], [3]]), T([[1, 2, 3]])
    assert a != b and canonical([a, b]) == canonical([b, a])


@pytest.mark.parametrize("shape, expected", [
    ((1,), [T([[1]])]),
    ((2, 2), [T([[1, 2], [3, 4]]), T([[1, 3], [2, 4]])]),
])
def test_enumerate_standard_small(shape, expected):
    assert enumerate_standard(shape) == sorted(expected)


@pytest.mark.parametrize("shape", [(3, 2), (2, 2, 1), (3, 1, 1), (4, 2), (2, 2, 2)])
def test_enumerate_standard_matches_filling_oracle(shape):
    assert enumerate_standard(shape) == brute_force_standard(shape)


@pytest.mark.parametrize("s", range(0, 9))
def test_square_counts_are_catalan(s):
    expected = factorial(2 * s) // (factorial(s) * factorial(s + 1))
    assert len(enumerate_standard((s, s))) == hook_length_count((s, s)) == catalan(s) == expected


@pytest.mark.parametrize("d", range(1, 8))
def test_hook_length_counts(d):
    for lam in partitions_of(d):
        assert hook_length_count(lam) == len(enumerate_standard(lam))


def test_star_extend_golden():
    assert star_extend(T([[1, 2, 3], [4]]), 4) == [
        T([[1, 2, 3, 5, 6, 7, 8], [4]]),
        T([[1, 2, 3, 6, 7, 8], [4, 5]]),
        T([[1, 2, 3, 7, 8], [4, 5, 6]]),
    ]


def test_star_extend_of_empty():
    assert star_extend(EMPTY, 1) == [T([[1]])]
    assert star_extend(EMPTY, 2) == [T([[1, 2]])]


@pytest.mark.parametrize("alpha", [0, -1])
def test_star_extend_rejects_nonpositive(alpha):
    with pytest.raises(ValueError):
        star_extend(T([[1]]), alpha)


def test_variant_examples():
    t = T([[1, 2, 3], [4]])
    assert variant(t, 4, 0) == T([[1, 2, 3, 5, 6, 7, 8], [4]])
    assert variant(t, 4, 2) == T([[1, 2, 3, 7, 8], [4, 5, 6]])
    assert variant(t, 4, 3) is None
    assert variant(EMPTY, 2, 1) is None


@settings(max_examples=150, deadline=None)
@given(two_row_tableaux(7), st.integers(1, 5))
def test_star_extend_matches_definition(t, alpha):
    got = star_extend(t, alpha)
    assert sorted(got) == brute_force_star(t, alpha)
    assert len(set(got)) == len(got)
    assert all(x.restrict(t.degree) == t for x in got)
    variants = {variant(t, alpha, s) for s in range(alpha + 1)} - {None}
    assert set(got) == variants


@settings(max_examples=100, deadline=None)
@given(tableau_sets(6), st.integers(1, 4))
def test_partial_star_recursion(tabs, alpha):
    for s in range(1, alpha + 1):
        assert set(partial_star(tabs, s, alpha)) == (
            set(partial_star(tabs, s - 1, alpha)) | set(plus_set(tabs, s, alpha)))
    assert partial_star(tabs, alpha, alpha) == star_set(tabs, alpha)


def test_multi_star_examples():
    four = multi_star([1, 1, 1, 1])
    assert len(four) == 6
    shapes = [t.shape for t in four]
    assert shapes.count((4,)) == 1 and shapes.count((3, 1)) == 3 and shapes.count((2, 2)) == 2
    assert sorted(t.shape for t in multi_star([2, 2])) == [(2, 2), (3, 1), (4,)]
    capped = [t for t in multi_star([1, 1, 1, 1], cap=3) if t.shape == (2, 2)]
    assert capped == c_tableaux((2, 2), [1, 1, 1, 1])


def test_multi_star_cap_drops_long_rows():
    assert all(len(t.row(0)) <= 2 for t in multi_star([1, 1, 1, 1], cap=3))


def test_block_starts_are_prefix_sums():
    assert block_starts([2, 3, 1]) == [0, 2, 5]


@pytest.mark.parametrize("shape, alphas, expected", [
    ((2, 2), [1, 1, 1, 1], 2),
    ((2, 2), [2, 2], 1),
    ((3, 1), [2, 2], 1),
    ((4,), [2, 2], 1),
    ((3, 3), [2, 2, 2], 1),
    ((4, 2), [2, 2, 2], 3),  # Kostka: second rows 22, 23, 33
])
def test_c_count_examples(shape, alphas, expected):
    assert c_count(shape, alphas) == expected


def test_c_count_rejects_size_mismatch():
    with pytest.raises(ValueError):
        c_count((2, 2), [1, 1])


@pytest.mark.parametrize("n", range(2, 7))
def test_c_count_catalan(n):
    assert c_count((n - 1, n - 1), [1] * (2 * n - 2)) == catalan(n - 1)


def compositions(total: int):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


@pytest.mark.parametrize("total", range(1, 9))
def test_c_count_sums_to_multi_star(total):
    for alphas in compositions(total):
        by_star = multi_star(alphas)
        counts = sum(c_count(lam, alphas) for lam in partitions_of(total, 2))
        assert counts == len(by_star)
        for lam in partitions_of(total, 2):
            assert [t for t in by_star if t.shape == lam] == c_tableaux(lam, alphas)
