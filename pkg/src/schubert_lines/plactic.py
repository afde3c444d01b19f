"""Skew tableaux, jeu de taquin and the associative product on tableaux.

``circ(S, T)`` sums ``S ∪ U`` over every standard skew tableau ``U`` of shape
``nu / shape(S)`` that rectifies to ``T``.  Knuth equivalence is decided by
jeu de taquin rectification.  :func:`lr_ballot` computes Littlewood-Richardson
coefficients from lattice-word fillings and shares no code with the product,
so comparing the two is a genuine cross-check.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .tableau import EMPTY, Partition, Tableau, canonical, contains, partition

Cell = tuple[int, int]


@dataclass(frozen=True)
class SkewTableau:
    """A standard filling of ``outer / inner`` by ``1..|outer|-|inner|``.

    ``rows`` is padded with ``None`` over the inner boxes.
    """

    outer: Partition
    inner: Partition
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self) -> None:
        outer, inner = partition(self.outer), partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        rows = tuple(tuple(r) for r in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        if not contains(outer, inner):
            raise ValueError(f"inner {inner} is not inside outer {outer}")
        if tuple(len(r) for r in rows) != outer:
            raise ValueError(f"rows {rows} do not have shape {outer}")
        cells = self.cells()
        for i, r in enumerate(rows):
            mu = inner[i] if i < len(inner) else 0
            if any(x is not None for x in r[:mu]) or any(x is None for x in r[mu:]):
                raise ValueError(f"row {i} of {rows} is not padded to inner shape {inner}")
        if sorted(cells.values()) != list(range(1, len(cells) + 1)):
            raise ValueError(f"entries of {rows} are not 1..{len(cells)}")
        for (i, j), v in cells.items():
            right, below = cells.get((i, j + 1)), cells.get((i + 1, j))
            if (right is not None and right <= v) or (below is not None and below <= v):
                raise ValueError(f"filling {rows} is not standard")

    @classmethod
    def from_cells(cls, inner: Sequence[int], cells: Mapping[Cell, int]) -> "SkewTableau":
        inner = partition(inner)
        nrows = max([i + 1 for i, _ in cells] + [len(inner)])
        rows: list[list[int | None]] = []
        for i in range(nrows):
            mu = inner[i] if i < len(inner) else 0
            length = max([j + 1 for (r, j) in cells if r == i] + [mu])
            rows.append([None] * mu + [cells[(i, j)] for j in range(mu, length)])
        outer = partition(len(r) for r in rows)
        return cls(outer, inner, tuple(tuple(r) for r in rows))

    @classmethod
    def straight(cls, t: Tableau) -> "SkewTableau":
        return cls(t.shape, (), t.rows)

    def cells(self) -> dict[Cell, int]:
        return {(i, j): v for i, r in enumerate(self.rows) for j, v in enumerate(r) if v is not None}

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner),
                "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "SkewTableau":
        return cls(tuple(data["outer"]), tuple(data.get("inner", ())),
                   tuple(tuple(r) for r in data["rows"]))


def _inner_corners(inner: list[int]) -> list[int]:
    return [i for i in range(len(inner))
            if inner[i] > 0 and (i + 1 == len(inner) or inner[i + 1] < inner[i])]


def _rectify_cells(inner: Sequence[int], cells: dict[Cell, int],
                   rng: random.Random | None = None) -> dict[Cell, int]:
    cells = dict(cells)
    inner = list(inner)
    while any(inner):
        corners = _inner_corners(inner)
        r = rng.choice(corners) if rng is not None else corners[-1]
        inner[r] -= 1
        hole = (r, inner[r])
        while True:
            i, j = hole
            right, below = cells.get((i, j + 1)), cells.get((i + 1, j))
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                src = (i, j + 1)
            else:
                src = (i + 1, j)
            cells[hole] = cells.pop(src)
            hole = src
    return cells


def _cells_to_rows(cells: Mapping[Cell, int]) -> tuple[tuple[int, ...], ...]:
    rows: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for (i, j), v in cells.items():
        rows[i].append((j, v))
    return tuple(tuple(v for _, v in sorted(rows[r])) for r in range(len(rows)))


def _cells_to_tableau(cells: Mapping[Cell, int]) -> Tableau:
    return Tableau(_cells_to_rows(cells))


def rectify(u: SkewTableau, rng: random.Random | None = None) -> Tableau:
    """Jeu de taquin rectification.

    Slides go into the lowest inner corner unless ``rng`` is given, in which
    case each corner is picked at random (the result does not depend on it).
    """
    return _cells_to_tableau(_rectify_cells(u.inner, u.cells(), rng))


def knuth_equivalent(u: SkewTableau, t: Tableau) -> bool:
    if u.size != t.degree:
        raise ValueError(f"degree mismatch: |U| = {u.size}, |T| = {t.degree}")
    return rectify(u) == t


def union_shift(s: Tableau, u: SkewTableau) -> Tableau:
    """``S ∪ U``: ``S`` on the inner shape, entries of ``U`` shifted up by ``|S|``."""
    if u.inner != s.shape:
        raise ValueError(f"inner shape {u.inner} differs from shape {s.shape} of {s}")
    d = s.degree
    rows = []
    for i, r in enumerate(u.rows):
        rows.append(list(s.row(i)) + [v + d for v in r if v is not None])
    return Tableau.of(rows)


def _outer_corners(shape: Sequence[int]) -> list[int]:
    rows = [i for i in range(len(shape)) if i == 0 or shape[i - 1] > shape[i]]
    rows.append(len(shape))
    return rows


@lru_cache(maxsize=200_000)
def skew_fillings(inner: Partition, t: Tableau, prune: bool = True) -> tuple[SkewTableau, ...]:
    """All standard skew tableaux with inner shape ``inner`` that rectify to ``t``.

    Fillings grow one entry at a time.  With ``prune`` a partial filling on
    ``1..k`` is kept only if it rectifies to ``t`` restricted to ``1..k``; this
    is sound because rectification commutes with restriction to initial
    segments of the entries.
    """
    inner = partition(inner)
    d = t.degree
    targets = [t.restrict(k).rows for k in range(d + 1)]
    out: list[SkewTableau] = []

    def grow(shape: list[int], cells: dict[Cell, int], k: int) -> None:
        if k == d:
            if prune or _cells_to_rows(_rectify_cells(inner, cells)) == t.rows:
                out.append(SkewTableau.from_cells(inner, cells))
            return
        for r in _outer_corners(shape):
            c = shape[r] if r < len(shape) else 0
            cells[(r, c)] = k + 1
            new_shape = list(shape)
            if r < len(new_shape):
                new_shape[r] += 1
            else:
                new_shape.append(1)
            if not prune or _cells_to_rows(_rectify_cells(inner, cells)) == targets[k + 1]:
                grow(new_shape, cells, k + 1)
            del cells[(r, c)]

    grow(list(inner), {}, 0)
    return tuple(out)


class FormalSum:
    """A finite ℤ-combination of tableaux with nonzero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tableau, int] | Iterable[tuple[Tableau, int]] = ()):
        acc: dict[Tableau, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for t, c in items:
            acc[t] += c
        self._terms = {t: acc[t] for t in canonical(acc) if acc[t] != 0}

    @classmethod
    def of(cls, t: Tableau) -> "FormalSum":
        return cls({t: 1})

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[Tableau]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, t: Tableau) -> int:
        return self._terms.get(t, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Tableau):
            other = FormalSum.of(other)
        return isinstance(other, FormalSum) and self._terms == other._terms

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(list(self.items()) + list(other.items()))

    def __rmul__(self, k: int) -> "FormalSum":
        return FormalSum({t: k * c for t, c in self.items()})

    def by_shape(self) -> dict[Partition, int]:
        out: dict[Partition, int] = defaultdict(int)
        for t, c in self.items():
            out[t.shape] += c
        return dict(out)

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "tableau": t.to_json()} for t, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "FormalSum":
        return cls((Tableau.from_json(d["tableau"]), int(d["coeff"])) for d in data)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{t!r}" if c != 1 else repr(t) for t, c in self.items())
        return f"FormalSum({body or '0'})"


@lru_cache(maxsize=100_000)
def circ(s: Tableau, t: Tableau) -> FormalSum:
    """The product ``S ∘ T``; every qualifying skew tableau contributes once.

    Results are cached; treat the returned sum as immutable.
    """
    terms = [union_shift(s, u) for u in skew_fillings(s.shape, t)]
    if len(set(terms)) != len(terms):
        raise AssertionError(f"distinct skew tableaux gave equal terms in {s} ∘ {t}")
    return FormalSum((x, 1) for x in terms)


def circ_sums(a: FormalSum, b: FormalSum) -> FormalSum:
    """Bilinear extension of :func:`circ`."""
    acc: dict[Tableau, int] = defaultdict(int)
    for x, cx in a.items():
        for y, cy in b.items():
            for z, cz in circ(x, y).items():
                acc[z] += cx * cy * cz
    return FormalSum(acc)


def row_tableau(alpha: int) -> Tableau:
    """``Y_alpha``, the single-row tableau."""
    return Tableau((tuple(range(1, alpha + 1)),)) if alpha else EMPTY


def lr_ballot(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient ``c^lam_{mu nu}``.

    Counts semistandard fillings of ``lam / mu`` with content ``nu`` whose
    reverse reading word (rows top to bottom, right to left) is a lattice word.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    cells = [(i, j) for i in range(len(lam))
             for j in range(lam[i] - 1, (mu[i] if i < len(mu) else 0) - 1, -1)]
    filling: dict[Cell, int] = {}
    used = [0] * (len(nu) + 1)

    def rec(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        total = 0
        hi = filling.get((i, j + 1), len(nu))
        lo = filling.get((i - 1, j), 0) + 1
        for v in range(lo, hi + 1):
            if used[v] >= nu[v - 1]:
                continue
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            used[v] += 1
            filling[(i, j)] = v
            total += rec(pos + 1)
            del filling[(i, j)]
            used[v] -= 1
        return total

    return rec(0)


def phi_shape(t: Tableau) -> Partition:
    """Label of the Schur function ``s_lambda`` attached to ``t``."""
    return t.shape


def phi_mn(t: Tableau, m: int, n: int, convention: str = "box") -> Partition | None:
    """Image of ``t`` in the Chow ring of the Grassmannian of m-planes in P^n.

    ``convention="box"`` keeps ``sigma_lambda`` when lambda fits the
    ``(m+1) x (n-m)`` box.  ``convention="strict"`` applies the literal rule
    ``0 if lambda_1 + m >= n or lambda_{m+1} != 0``, which also kills classes
    that are nonzero in the ring (kept for comparison only).
    Returns the partition of the surviving class, or ``None`` for zero.
    """
    if not 0 <= m < n:
        raise ValueError(f"need 0 <= m < n, got m={m}, n={n}")
    lam = t.shape
    first = lam[0] if lam else 0
    if convention == "box":
        zero = first > n - m or len(lam) > m + 1
    elif convention == "strict":
        zero = first + m >= n or len(lam) > m
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return None if zero else lam
