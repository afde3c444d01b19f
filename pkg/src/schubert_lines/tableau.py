"""Partitions, standard Young tableaux and the star calculus on two-row tableaux.

A tableau is stored as a tuple of rows; the empty tableau has no rows.
Sets of tableaux are returned as lists in canonical order (see
:func:`canonical`), which keeps golden tests and JSON output stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import comb, factorial
from typing import Iterable, Sequence

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and drop trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def partitions_of(size: int, max_rows: int | None = None) -> list[Partition]:
    """All partitions of ``size`` (optionally with at most ``max_rows`` rows)."""
    out: list[Partition] = []

    def rec(rest: int, cap: int, acc: tuple[int, ...]) -> None:
        if rest == 0:
            out.append(acc)
            return
        if max_rows is not None and len(acc) >= max_rows:
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + (p,))

    rec(size, size, ())
    return out


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True when the diagram of ``inner`` sits inside the diagram of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


@dataclass(frozen=True)
class Tableau:
    """A standard Young tableau of straight shape."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(r) for r in rows)
        if any(a < b for a, b in zip(shape, shape[1:])) or any(n == 0 for n in shape):
            raise ValueError(f"rows {rows} do not form a partition shape")
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries of {rows} are not 1..{len(entries)}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError(f"columns of {rows} are not increasing")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def degree(self) -> int:
        return sum(len(r) for r in self.rows)

    def row(self, i: int) -> tuple[int, ...]:
        """Row ``i`` (0-based); rows beyond the shape are empty."""
        return self.rows[i] if i < len(self.rows) else ()

    @property
    def is_rectangular(self) -> bool:
        """Two-row rectangular: both rows have equal length (the empty tableau included)."""
        return len(self.row(0)) == len(self.row(1)) and len(self.rows) <= 2

    def restrict(self, k: int) -> "Tableau":
        """The subtableau on entries ``1..k``."""
        return Tableau(tuple(tuple(x for x in r if x <= k) for r in self.rows))

    def position(self, entry: int) -> tuple[int, int]:
        for i, r in enumerate(self.rows):
            if entry in r:
                return i, r.index(entry)
        raise KeyError(entry)

    def sort_key(self) -> tuple:
        flat = tuple(x for r in self.rows for x in r)
        return (len(flat), flat, self.shape)

    def __lt__(self, other: "Tableau") -> bool:
        return self.sort_key() < other.sort_key()

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data) -> "Tableau":
        if isinstance(data, dict):
            data = data["rows"]
        return cls.of(data)

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self.rows]})"


EMPTY = Tableau(())


def canonical(tableaux: Iterable[Tableau]) -> list[Tableau]:
    """Sort into canonical order, refusing duplicates."""
    out = sorted(tableaux, key=Tableau.sort_key)
    for a, b in zip(out, out[1:]):
        if a == b:
            raise AssertionError(f"duplicate tableau {a} in a tableau set")
    return out


def _outer_corners(shape: Sequence[int]) -> list[int]:
    """Rows where a box can be added keeping a partition shape."""
    rows = [i for i in range(len(shape)) if i == 0 or shape[i - 1] > shape[i]]
    rows.append(len(shape))
    return rows


@lru_cache(maxsize=None)
def _standard(shape: Partition) -> tuple[Tableau, ...]:
    if not shape:
        return (EMPTY,)
    n = sum(shape)
    out = []
    # remove the box holding the largest entry, which sits at an inner corner
    for i in range(len(shape)):
        if i + 1 < len(shape) and shape[i + 1] == shape[i]:
            continue
        smaller = list(shape)
        smaller[i] -= 1
        for t in _standard(partition(smaller)):
            rows = [list(r) for r in t.rows]
            while len(rows) <= i:
                rows.append([])
            rows[i].append(n)
            out.append(Tableau.of(rows))
    return tuple(canonical(out))


def enumerate_standard(shape: Sequence[int]) -> list[Tableau]:
    """All standard tableaux of ``shape`` in canonical order."""
    return list(_standard(partition(shape)))


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of ``shape`` by the hook length formula."""
    shape = partition(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0] if shape else 0)]
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(shape)) // hooks


def catalan(s: int) -> int:
    return comb(2 * s, s) // (s + 1)


def _check_two_row(t: Tableau) -> None:
    if len(t.rows) > 2:
        raise ValueError(f"{t} has more than two rows")


def variant(t: Tableau, alpha: int, s: int) -> Tableau | None:
    """``T^{+s}(alpha - s)``: entries ``|T|+1..|T|+s`` go to row 2, the rest to row 1.

    Returns ``None`` when row 2 would outgrow row 1.
    """
    _check_two_row(t)
    if not 0 <= s <= alpha:
        raise ValueError(f"need 0 <= s <= alpha, got s={s}, alpha={alpha}")
    top, bottom = t.row(0), t.row(1)
    if len(bottom) + s > len(top):
        return None
    d = t.degree
    new_bottom = bottom + tuple(range(d + 1, d + s + 1))
    new_top = top + tuple(range(d + s + 1, d + alpha + 1))
    return Tableau((new_top, new_bottom))


def star_extend(t: Tableau, alpha: int) -> list[Tableau]:
    """``T * alpha``: extensions by ``alpha`` entries in distinct columns, increasing
    left to right, restricted to two rows."""
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    out = (variant(t, alpha, s) for s in range(alpha + 1))
    return canonical(v for v in out if v is not None)


def star_set(tableaux: Iterable[Tableau], alpha: int) -> list[Tableau]:
    """``𝒯 * alpha`` as a disjoint union."""
    return canonical(v for t in tableaux for v in star_extend(t, alpha))


def plus_set(tableaux: Iterable[Tableau], s: int, alpha: int) -> list[Tableau]:
    """``𝒯^{+s}(alpha - s)``; with ``alpha == s`` this is ``𝒯^{+s}``."""
    out = (variant(t, alpha, s) for t in tableaux)
    return canonical(v for v in out if v is not None)


def partial_star(tableaux: Iterable[Tableau], s: int, alpha: int) -> list[Tableau]:
    """``𝒯_{s,alpha} = 𝒯(alpha) ∪ 𝒯^{+}(alpha-1) ∪ ... ∪ 𝒯^{+s}(alpha-s)``."""
    tableaux = list(tableaux)
    if not 0 <= s <= alpha:
        raise ValueError(f"need 0 <= s <= alpha, got s={s}, alpha={alpha}")
    return canonical(v for k in range(s + 1) for v in plus_set(tableaux, k, alpha))


def multi_star(alphas: Sequence[int], cap: int | None = None) -> list[Tableau]:
    """``alpha_1 * ... * alpha_m`` starting from the empty tableau.

    With ``cap = n`` tableaux whose first row exceeds ``n - 1`` are discarded,
    since their Schubert conditions are empty in the Grassmannian of lines in P^n.
    """
    if not alphas:
        raise ValueError("need at least one alpha")
    current = [EMPTY]
    for a in alphas:
        current = star_set(current, a)
        if cap is not None:
            current = [t for t in current if len(t.row(0)) <= cap - 1]
    return current


def block_starts(alphas: Sequence[int]) -> list[int]:
    """Offsets ``alpha_1 + ... + alpha_{i-1}`` of each block."""
    return [0] + list(accumulate(alphas))[:-1]


def satisfies_blocks(t: Tableau, alphas: Sequence[int]) -> bool:
    """Each block of consecutive entries lies in distinct columns, increasing left to right."""
    for start, a in zip(block_starts(alphas), alphas):
        cols = [t.position(e)[1] for e in range(start + 1, start + a + 1)]
        if any(x >= y for x, y in zip(cols, cols[1:])):
            return False
    return True


def c_tableaux(shape: Sequence[int], alphas: Sequence[int]) -> list[Tableau]:
    """Standard tableaux of ``shape`` whose blocks satisfy :func:`satisfies_blocks`."""
    shape = partition(shape)
    if sum(shape) != sum(alphas):
        raise ValueError(f"|shape| = {sum(shape)} but alphas sum to {sum(alphas)}")
    if any(a <= 0 for a in alphas):
        raise ValueError(f"alphas must be positive: {alphas}")
    return [t for t in enumerate_standard(shape) if satisfies_blocks(t, alphas)]


def c_count(shape: Sequence[int], alphas: Sequence[int]) -> int:
    """The tableau count ``c^shape_{alphas}`` (a Kostka number for two-row shapes)."""
    return len(c_tableaux(shape, alphas))
