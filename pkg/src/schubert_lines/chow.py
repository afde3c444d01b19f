"""Chow ring of the Grassmannian of lines in P^n.

Schubert classes are two-row partitions ``(a, b)`` with ``n-1 >= a >= b >= 0``.
Products come from tableau counts (:func:`product`); the classical Pieri rule
(:func:`pieri`) is kept as an independent route for cross-checks.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .tableau import c_count

Klass = tuple[int, int]


def fits_box(lam: Sequence[int], n: int) -> bool:
    a, b = _two_row(lam)
    return n - 1 >= a >= b >= 0


def _two_row(lam: Sequence[int]) -> Klass:
    lam = tuple(lam)
    if len(lam) > 2 or any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not a two-row partition")
    a = lam[0] if lam else 0
    b = lam[1] if len(lam) > 1 else 0
    if a < b:
        raise ValueError(f"{lam} is not a partition")
    return a, b


@dataclass(frozen=True)
class ChowElement:
    """Integer combination of Schubert classes in A*(G_1 P^n)."""

    n: int
    coeffs: Mapping[Klass, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Klass, int] = {}
        for lam, c in self.coeffs.items():
            lam = _two_row(lam)
            if c == 0:
                continue
            if not fits_box(lam, self.n):
                raise ValueError(f"class {lam} does not fit the box for n={self.n}")
            clean[lam] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), key=lambda kv: _grade_key(kv[0]))))

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self.coeffs.get(_two_row(lam), 0)

    def __add__(self, other: "ChowElement") -> "ChowElement":
        _same_n(self, other)
        acc = defaultdict(int, self.coeffs)
        for lam, c in other.coeffs.items():
            acc[lam] += c
        return ChowElement(self.n, acc)

    def __eq__(self, other) -> bool:
        return isinstance(other, ChowElement) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.coeffs.items())))

    def terms(self) -> list[tuple[Klass, int]]:
        return list(self.coeffs.items())

    def to_json(self) -> dict[str, int]:
        return {f"({a},{b})": c for (a, b), c in self.coeffs.items()}


def _same_n(x: ChowElement, y: ChowElement) -> None:
    if x.n != y.n:
        raise ValueError(f"ambient mismatch: n={x.n} vs n={y.n}")


def _grade_key(lam: Klass) -> tuple[int, int]:
    return (lam[0] + lam[1], -lam[0])


def basis(n: int) -> list[Klass]:
    """Schubert basis of A*(G_1 P^n), graded by codimension."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return sorted(((a, b) for a in range(n) for b in range(a + 1)), key=_grade_key)


def pieri(lam: Sequence[int], alpha: int, n: int) -> ChowElement:
    """``sigma_lam * sigma_alpha`` by the Pieri rule for two-row shapes."""
    a, b = _two_row(lam)
    if not fits_box((a, b), n):
        raise ValueError(f"class {(a, b)} does not fit the box for n={n}")
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    total = a + b + alpha
    out = {}
    for b2 in range(b, a + 1):
        a2 = total - b2
        if a2 >= a and a2 <= n - 1:
            out[(a2, b2)] = 1
    return ChowElement(n, out)


def product(classes: Iterable[Sequence[int]], n: int) -> ChowElement:
    """Expand ``sigma_{lam^1} ... sigma_{lam^m}`` in the Schubert basis.

    Writing ``lam^i = (alpha_i + beta_i, beta_i)``, the coefficient of
    ``sigma_{(beta+a, beta+b)}`` is the tableau count ``c^{(a,b)}`` over the
    positive ``alpha_i``, where ``beta`` is the total of the ``beta_i``.
    Classes outside the box vanish.
    """
    classes = [_two_row(lam) for lam in classes]
    for lam in classes:
        if not fits_box(lam, n):
            raise ValueError(f"class {lam} does not fit the box for n={n}")
    beta = sum(b for _, b in classes)
    alphas = [a - b for a, b in classes if a > b]
    total = sum(alphas)
    out = {}
    for b in range(total // 2 + 1):
        a = total - b
        lam = (beta + a, beta + b)
        if lam[0] > n - 1:
            continue
        c = c_count((a, b), alphas)
        if c:
            out[lam] = c
    return ChowElement(n, out)


def product_by_pieri(classes: Iterable[Sequence[int]], n: int) -> ChowElement:
    """Same product computed by iterated Pieri steps.

    ``sigma_{(a,b)} = sigma_{(b,b)} * sigma_{a-b}`` in this ring and
    ``sigma_{(b,b)}`` acts by shifting both rows, so every factor reduces to
    Pieri multiplications and shifts.
    """
    current = ChowElement(n, {(0, 0): 1})
    for lam in classes:
        a, b = _two_row(lam)
        acc: dict[Klass, int] = defaultdict(int)
        for (x, y), c in current.terms():
            shifted = (x + b, y + b)
            if not fits_box(shifted, n):
                continue
            for mu, d in pieri(shifted, a - b, n).terms():
                acc[mu] += c * d
        current = ChowElement(n, acc)
    return current


def intersection_number(classes: Iterable[Sequence[int]], n: int) -> int:
    """Number of lines meeting general Schubert conditions of the given types."""
    classes = [_two_row(lam) for lam in classes]
    if sum(a + b for a, b in classes) != 2 * n - 2:
        raise ValueError(
            f"codimensions sum to {sum(a + b for a, b in classes)}, expected {2 * n - 2}")
    return product(classes, n)[(n - 1, n - 1)]


def parse_classes(text: str) -> list[Klass]:
    """Parse ``"(1,0),(1,0)"`` or ``"1,1,1,1"`` (bare integers are one-row classes)."""
    text = text.replace(" ", "")
    if "(" not in text:
        return [(int(x), 0) for x in text.split(",") if x]
    out = []
    for chunk in text.strip("()").split("),("):
        parts = [int(x) for x in chunk.split(",") if x]
        out.append(_two_row(parts))
    return out
