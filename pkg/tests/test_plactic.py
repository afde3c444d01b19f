from __future__ import annotations

import random
from collections import deque
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_lines.chow import fits_box, product
from schubert_lines.plactic import (FormalSum, SkewTableau, circ, circ_sums, knuth_equivalent,
                                    lr_ballot, phi_mn, phi_shape, rectify, row_tableau,
                                    skew_fillings, union_shift)
from schubert_lines.tableau import (EMPTY, Tableau, enumerate_standard, hook_length_count,
                                    partitions_of, star_extend)
from strategies import tableaux, two_row_tableaux

T = Tableau.of


# Knuth moves on reading words: a decision procedure independent of jeu de taquin.

def reading_word(u: SkewTableau) -> tuple[int, ...]:
    """Rows from bottom to top, each left to right."""
    return tuple(v for r in reversed(u.rows) for v in r if v is not None)


def elementary_moves(w: tuple[int, ...]):
    """``y z x <-> y x z`` and ``x z y <-> z x y`` for ``x < y < z``."""
    for i in range(len(w) - 2):
        a, b, c = w[i:i + 3]
        pre, post = w[:i], w[i + 3:]
        if c < a < b or b < a < c:
            yield pre + (a, c, b) + post
        if a < c < b or b < c < a:
            yield pre + (b, a, c) + post


def knuth_class(w: tuple[int, ...]) -> set[tuple[int, ...]]:
    seen, todo = {w}, deque([w])
    while todo:
        for y in elementary_moves(todo.popleft()):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def knuth_equivalent_by_moves(u: SkewTableau, t: Tableau) -> bool:
    return reading_word(SkewTableau.straight(t)) in knuth_class(reading_word(u))


@st.composite
def skew_tableaux(draw, max_size: int = 7):
    """Standard skew tableaux grown by adding outer corners in order."""
    inner = draw(st.sampled_from([(), (1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (3, 2, 1)]))
    size = draw(st.integers(0, max_size))
    shape, cells = list(inner), {}
    for k in range(1, size + 1):
        choices = [r for r in range(len(shape) + 1)
                   if r == 0 or r == len(shape) or shape[r] < shape[r - 1]]
        r = draw(st.sampled_from(choices))
        c = shape[r] if r < len(shape) else 0
        cells[(r, c)] = k
        if r < len(shape):
            shape[r] += 1
        else:
            shape.append(1)
    return SkewTableau.from_cells(inner, cells)


def all_skew(inner, outer):
    """Every standard filling of ``outer / inner`` (exhaustive)."""
    out = []
    size = sum(outer) - sum(inner)

    def rec(shape, cells, k):
        if k > size:
            out.append(SkewTableau.from_cells(inner, dict(cells)))
            return
        for r in range(len(outer)):
            have = shape[r] if r < len(shape) else 0
            if have < outer[r] and (r == 0 or have < shape[r - 1]):
                cells[(r, have)] = k
                new = list(shape)
                new[r] += 1
                rec(new, cells, k + 1)
                del cells[(r, have)]

    rec(list(inner) + [0] * (len(outer) - len(inner)), {}, 1)
    return out


# skew tableaux and rectification

def test_skew_validation():
    with pytest.raises(ValueError):
        SkewTableau((2, 1), (1,), ((None, 1), (1,)))
    with pytest.raises(ValueError):
        SkewTableau((2,), (1,), ((1, None),))
    with pytest.raises(ValueError):
        SkewTableau((1,), (2,), ((None,),))


def test_skew_json_round_trip():
    u = SkewTableau((3, 1), (1,), ((None, 1, 3), (2,)))
    assert SkewTableau.from_json(u.to_json()) == u


def test_rectify_straight_is_identity():
    for t in enumerate_standard((3, 2)):
        assert rectify(SkewTableau.straight(t)) == t


def test_rectify_single_slides():
    assert rectify(SkewTableau((2, 1), (1,), ((None, 1), (2,)))) == T([[1], [2]])
    assert rectify(SkewTableau((2, 1), (1,), ((None, 2), (1,)))) == T([[1, 2]])


def test_knuth_equivalent_examples():
    t = T([[1, 2], [3]])
    assert knuth_equivalent(SkewTableau.straight(t), t)
    second_summand = SkewTableau((6, 2), (3, 1), ((None, None, None, 2, 3, 4), (None, 1)))
    assert knuth_equivalent(second_summand, T([[1, 2, 3, 4]]))
    assert not knuth_equivalent(SkewTableau((2, 1), (1,), ((None, 2), (1,))), T([[1], [2]]))
    with pytest.raises(ValueError):
        knuth_equivalent(SkewTableau.straight(t), T([[1]]))


@settings(max_examples=300, deadline=None)
@given(skew_tableaux(8), st.integers(0, 2 ** 32))
def test_rectify_independent_of_slide_order(u, seed):
    assert rectify(u, random.Random(seed)) == rectify(u)


@settings(max_examples=150, deadline=None)
@given(skew_tableaux(6))
def test_rectification_agrees_with_knuth_moves(u):
    r = rectify(u)
    assert knuth_equivalent_by_moves(u, r)
    for other in enumerate_standard(r.shape):
        if other != r:
            assert not knuth_equivalent_by_moves(u, other)


def test_union_shift_examples():
    u = SkewTableau((3, 1), (), ((1, 2, 3), (4,)))
    assert union_shift(EMPTY, u) == T([[1, 2, 3], [4]])
    s = T([[1, 2, 3], [4]])
    strip = SkewTableau((7, 1), (3, 1), ((None, None, None, 1, 2, 3, 4), (None,)))
    assert union_shift(s, strip) == T([[1, 2, 3, 5, 6, 7, 8], [4]])
    fourth = SkewTableau((6, 1, 1), (3, 1), ((None, None, None, 2, 3, 4), (None,), (1,)))
    assert union_shift(s, fourth) == T([[1, 2, 3, 6, 7, 8], [4], [5]])
    with pytest.raises(ValueError):
        union_shift(T([[1]]), strip)


@pytest.mark.parametrize("inner, t", [
    ((2, 1), T([[1, 2], [3]])), ((1,), T([[1, 3], [2]])), ((2,), T([[1, 2, 3]])),
    ((2, 2), T([[1, 3], [2], [4]])),
])
def test_skew_fillings_match_exhaustive_search(inner, t):
    d = t.degree
    expected = set()
    for lam in partitions_of(sum(inner) + d):
        if all(a >= b for a, b in zip(lam + (0,) * 5, inner)) and len(lam) >= len(inner):
            for u in all_skew(inner, lam):
                if rectify(u) == t:
                    expected.add(u)
    assert set(skew_fillings(inner, t)) == expected
    assert set(skew_fillings(inner, t, prune=False)) == expected


# the product

GOLDEN = [T([[1, 2, 3, 5, 6, 7, 8], [4]]), T([[1, 2, 3, 6, 7, 8], [4, 5]]),
          T([[1, 2, 3, 7, 8], [4, 5, 6]]), T([[1, 2, 3, 6, 7, 8], [4], [5]]),
          T([[1, 2, 3, 7, 8], [4, 6], [5]]), T([[1, 2, 3, 8], [4, 6, 7], [5]])]


def test_circ_golden():
    got = circ(T([[1, 2, 3], [4]]), T([[1, 2, 3, 4]]))
    assert got == FormalSum({t: 1 for t in GOLDEN})
    assert sorted(got.by_shape()) == sorted([(7, 1), (6, 2), (5, 3), (6, 1, 1), (5, 2, 1), (4, 3, 1)])


def test_non_commutativity_witness():
    one, two = T([[1]]), T([[1, 2]])
    assert circ(one, two) == FormalSum({T([[1, 2, 3]]): 1, T([[1, 3], [2]]): 1})
    assert circ(two, one) == FormalSum({T([[1, 2, 3]]): 1, T([[1, 2], [3]]): 1})
    assert circ(one, two) != circ(two, one)


def test_product_is_not_plactic():
    # a plactic product of two tableaux is a single tableau
    assert len(circ(T([[1]]), T([[1]]))) == 2


@settings(max_examples=100, deadline=None)
@given(tableaux(8))
def test_unit(t):
    assert circ(EMPTY, t) == FormalSum.of(t)
    assert circ(t, EMPTY) == FormalSum.of(t)


def small_tableaux(max_degree):
    return [t for d in range(max_degree + 1) for lam in partitions_of(d) for t in enumerate_standard(lam)]


def test_associativity_exhaustive_degree_four():
    pool = small_tableaux(4)
    for r in pool:
        for s in pool:
            rs = circ(r, s)
            for t in pool:
                assert circ_sums(rs, FormalSum.of(t)) == circ_sums(FormalSum.of(r), circ(s, t))


@settings(max_examples=40, deadline=None)
@given(tableaux(5), tableaux(5), tableaux(5))
def test_associativity_random(r, s, t):
    assert circ_sums(circ(r, s), FormalSum.of(t)) == circ_sums(FormalSum.of(r), circ(s, t))


@settings(max_examples=100, deadline=None)
@given(two_row_tableaux(6), st.integers(1, 4))
def test_two_row_part_of_row_product_is_star(t, alpha):
    two_rows = [x for x in circ(t, row_tableau(alpha)) if len(x.rows) <= 2]
    assert two_rows == star_extend(t, alpha)


def test_formal_sum_arithmetic_and_json():
    a = FormalSum.of(T([[1]]))
    b = 2 * a + FormalSum.of(T([[1, 2]]))
    assert b[T([[1]])] == 2 and len(b) == 2
    assert FormalSum.from_json(b.to_json()) == b
    assert (a + (-1 * a)) == FormalSum()


# Littlewood-Richardson coefficients

def test_lr_examples():
    assert lr_ballot((2, 1), (1,), (1, 1)) == 1
    assert lr_ballot((2, 1), (1,), (2,)) == 1
    assert lr_ballot((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_ballot((4, 2), (2, 1), (2, 1)) == 1
    for mu in partitions_of(4):
        for lam in partitions_of(4):
            assert lr_ballot(lam, mu, ()) == (lam == mu)


@pytest.mark.parametrize("total", range(0, 7))
def test_lr_hook_length_identity(total):
    """sum_lam c^lam_{mu nu} f^lam = C(|mu|+|nu|, |mu|) f^mu f^nu."""
    for a in range(total + 1):
        for mu in partitions_of(a):
            for nu in partitions_of(total - a):
                lhs = sum(lr_ballot(lam, mu, nu) * hook_length_count(lam) for lam in partitions_of(total))
                assert lhs == comb(total, a) * hook_length_count(mu) * hook_length_count(nu)


@pytest.mark.parametrize("total", range(0, 9))
def test_graded_product_is_lr(total):
    rng = random.Random(total)
    for a in range(total + 1):
        for mu in partitions_of(a):
            for nu in partitions_of(total - a):
                ms, ns = enumerate_standard(mu), enumerate_standard(nu)
                picks = {(ms[0], ns[0]), (ms[-1], ns[-1]), (rng.choice(ms), rng.choice(ns))}
                for s, t in picks:
                    graded = circ(s, t).by_shape()
                    for lam in partitions_of(total):
                        assert graded.get(lam, 0) == lr_ballot(lam, mu, nu)


# the maps to Schur functions and Chow rings

def test_phi_examples():
    assert phi_shape(T([[1, 3], [2, 4]])) == (2, 2)
    assert phi_mn(T([[1, 2], [3, 4]]), 1, 3) == (2, 2)
    for t in enumerate_standard((3, 1)):
        assert phi_mn(t, 1, 3) is None


def test_strict_vanishing_rule_kills_nonzero_classes():
    assert phi_mn(T([[1, 2], [3, 4]]), 1, 3, convention="strict") is None
    assert phi_mn(T([[1], [2]]), 1, 3, convention="strict") is None
    assert phi_mn(T([[1], [2]]), 1, 3) == (1, 1)
    with pytest.raises(ValueError):
        phi_mn(T([[1]]), 1, 3, convention="other")


@pytest.mark.parametrize("n", [3, 4, 5])
def test_phi_is_multiplicative_into_chow(n):
    for d1 in range(0, 5):
        for d2 in range(0, 9 - d1):
            for mu in partitions_of(d1, 2):
                for nu in partitions_of(d2, 2):
                    if not (fits_box(mu, n) and fits_box(nu, n)):
                        continue
                    s, t = enumerate_standard(mu)[-1], enumerate_standard(nu)[0]
                    image = {}
                    for x, c in circ(s, t).items():
                        lam = phi_mn(x, 1, n)
                        if lam is not None:
                            key = (lam + (0, 0))[:2]
                            image[key] = image.get(key, 0) + c
                    assert image == dict(product([(mu + (0, 0))[:2], (nu + (0, 0))[:2]], n).coeffs)
