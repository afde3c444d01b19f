"""Exact linear algebra over ℚ and prime fields, and subspaces of projective space.

A projective subspace of P^n is stored as the linear subspace of k^{n+1} it
spans, by its reduced row echelon basis, so equal subspaces compare equal.
The empty projective subspace is the zero space (rank 0).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple
Matrix = tuple[Vector, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Base class for the two supported fields.  Elements are plain Python
    numbers: :class:`~fractions.Fraction` for ℚ, reduced ``int`` for F_p."""

    finite = False

    def __call__(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def render(self, x) -> str:
        return str(x)

    def random_element(self, rng: random.Random, bound: int = 20):
        raise NotImplementedError

    def tag(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(Field):
    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            return Fraction(x)
        if isinstance(x, float):
            raise TypeError("floating point input is not allowed")
        return Fraction(x)

    def inv(self, x) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def random_element(self, rng: random.Random, bound: int = 20) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def tag(self) -> dict:
        return {"field": "Q"}

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int
    finite = True

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, x) -> int:
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, float):
            raise TypeError("floating point input is not allowed")
        return int(x) % self.p

    def inv(self, x) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def random_element(self, rng: random.Random, bound: int = 20) -> int:
        return rng.randrange(self.p)

    def elements(self) -> range:
        return range(self.p)

    def tag(self) -> dict:
        return {"field": "Fp", "p": self.p}

    def __str__(self) -> str:
        return f"F{self.p}"


QQ = Rationals()


def field_from_tag(tag: dict) -> Field:
    if tag.get("field") == "Q":
        return QQ
    if tag.get("field") == "Fp":
        return PrimeField(int(tag["p"]))
    raise ValueError(f"unknown field tag {tag!r}")


def parse_field(text: str) -> Field:
    """``"Q"`` or ``"Fp:5"`` / ``"F5"``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        return PrimeField(int(text[3:]))
    if text.startswith("F") and text[1:].isdigit():
        return PrimeField(int(text[1:]))
    raise ValueError(f"cannot parse field {text!r}")


def _reduce(field: Field, x):
    return x % field.p if field.finite else x


def rref(rows: Iterable[Sequence], field: Field, ncols: int | None = None) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns.  Zero rows are dropped."""
    m = [[field(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][col])
        m[r] = [_reduce(field, x * inv) for x in m[r]]
        for i in range(len(m)):
            f = m[i][col]
            if i != r and f != 0:
                m[i] = [_reduce(field, a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank(rows: Iterable[Sequence], field: Field) -> int:
    return len(rref(rows, field)[0])


def kernel(rows: Iterable[Sequence], field: Field, ncols: int) -> Matrix:
    """Basis (in echelon form) of ``{x : A x = 0}``."""
    red, pivots = rref(rows, field, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field(0)] * ncols
        v[f] = field(1)
        for row, pc in zip(red, pivots):
            v[pc] = _reduce(field, -row[f])
        basis.append(v)
    return rref(basis, field, ncols)[0]


def mat_vec(rows: Sequence[Sequence], v: Sequence, field: Field) -> tuple:
    return tuple(_reduce(field, sum(a * b for a, b in zip(r, v))) for r in rows)


@dataclass(frozen=True)
class Subspace:
    """A projective subspace of P^n over ``field``."""

    field: Field
    n: int
    basis: Matrix

    @classmethod
    def span(cls, field: Field, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != n + 1:
                raise ValueError(f"vector {v} does not live in k^{n + 1}")
        return cls(field, n, rref(vectors, field, n + 1)[0])

    @classmethod
    def from_equations(cls, field: Field, n: int, forms: Iterable[Sequence]) -> "Subspace":
        return cls(field, n, kernel(list(forms), field, n + 1))

    @classmethod
    def ambient(cls, field: Field, n: int) -> "Subspace":
        return cls.span(field, n, [[int(i == j) for j in range(n + 1)] for i in range(n + 1)])

    @classmethod
    def empty(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def coordinate(cls, field: Field, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard basis vectors ``e_i`` for ``i`` in ``indices``."""
        return cls.span(field, n, [[int(i == j) for j in range(n + 1)] for i in indices])

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        """Projective dimension; -1 for the empty subspace."""
        return self.rank - 1

    @property
    def codim(self) -> int:
        return self.n + 1 - self.rank

    @property
    def is_empty(self) -> bool:
        return self.rank == 0

    def equations(self) -> Matrix:
        """Linear forms cutting out the subspace, in echelon form."""
        return kernel(self.basis, self.field, self.n + 1)

    def _check(self, other: "Subspace") -> None:
        if self.n != other.n or self.field != other.field:
            raise ValueError(f"incompatible subspaces: P^{self.n}/{self.field} vs P^{other.n}/{other.field}")

    def join(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.n, self.basis + other.basis)

    def meet(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_equations(self.field, self.n, self.equations() + other.equations())

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return self.join(other).rank == other.rank

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.rank < other.rank

    def contains_vector(self, v: Sequence) -> bool:
        return rank(self.basis + (tuple(v),), self.field) == self.rank

    def to_json(self) -> list[list[str]]:
        return [[self.field.render(x) for x in row] for row in self.basis]

    @classmethod
    def from_json(cls, field: Field, n: int, rows: Sequence[Sequence[str]]) -> "Subspace":
        return cls.span(field, n, [[field(x) for x in r] for r in rows])

    def __repr__(self) -> str:
        return f"Subspace(P^{self.n}/{self.field}, {self.to_json()})"


def meet(a: Subspace, b: Subspace) -> Subspace:
    return a.meet(b)


def join(a: Subspace, b: Subspace) -> Subspace:
    return a.join(b)


def meet_all(spaces: Iterable[Subspace], field: Field, n: int) -> Subspace:
    forms: list = []
    for s in spaces:
        forms.extend(s.equations())
    return Subspace.from_equations(field, n, forms)


def proper_meet(a: Subspace, b: Subspace) -> bool:
    """Codimensions of ``a`` and ``b`` add in the intersection (capped at the empty set)."""
    return a.meet(b).codim == min(a.codim + b.codim, a.n + 1)


@dataclass(frozen=True)
class Flag:
    """Complete flag ``F_n ⊂ ... ⊂ F_1 ⊂ F_0 = P^n`` with ``dim F_i = n - i``."""

    field: Field
    n: int
    spaces: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        if len(self.spaces) != self.n + 1:
            raise ValueError(f"a complete flag in P^{self.n} has {self.n + 1} members")
        for i, f in enumerate(self.spaces):
            if f.dim != self.n - i:
                raise ValueError(f"F_{i} has dimension {f.dim}, expected {self.n - i}")
            if i and not f < self.spaces[i - 1]:
                raise ValueError(f"F_{i} is not inside F_{i - 1}")

    @classmethod
    def from_basis(cls, field: Field, n: int, vectors: Sequence[Sequence]) -> "Flag":
        """``F_i`` spanned by ``vectors[i:]``."""
        return cls(field, n, tuple(Subspace.span(field, n, vectors[i:]) for i in range(n + 1)))

    @classmethod
    def standard(cls, field: Field, n: int) -> "Flag":
        return cls.from_basis(field, n, [[int(i == j) for j in range(n + 1)] for i in range(n + 1)])

    def __getitem__(self, i: int) -> Subspace:
        """``F_i``; ambient for ``i <= 0`` and empty for ``i > n``."""
        if i > self.n:
            return Subspace.empty(self.field, self.n)
        return self.spaces[max(i, 0)]

    def to_json(self) -> list:
        return [f.to_json() for f in self.spaces]

    @classmethod
    def from_json(cls, field: Field, n: int, data: Sequence) -> "Flag":
        return cls(field, n, tuple(Subspace.from_json(field, n, m) for m in data))


def _random_vector(field: Field, size: int, rng: random.Random, bound: int) -> list:
    return [field.random_element(rng, bound) for _ in range(size)]


def random_flag(n: int, field: Field, seed: int, bound: int = 20, attempts: int = 1000) -> Flag:
    """A random complete flag, deterministic in ``seed``."""
    rng = random.Random(seed)
    for _ in range(attempts):
        vectors = [_random_vector(field, n + 1, rng, bound) for _ in range(n + 1)]
        if rank(vectors, field) == n + 1:
            return Flag.from_basis(field, n, vectors)
    raise RuntimeError(f"no invertible matrix found for a flag in P^{n}/{field} after {attempts} attempts")


def random_subspace(n: int, codim: int, field: Field, seed: int | random.Random,
                    bound: int = 20, attempts: int = 1000) -> Subspace:
    """A random subspace of the given projective codimension."""
    if not 0 <= codim <= n + 1:
        raise ValueError(f"codimension {codim} out of range for P^{n}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    want = n + 1 - codim
    for _ in range(attempts):
        s = Subspace.span(field, n, [_random_vector(field, n + 1, rng, bound) for _ in range(want)])
        if s.rank == want:
            return s
    raise RuntimeError(f"no subspace of codimension {codim} in P^{n}/{field} after {attempts} attempts")


def random_subspace_between(inner: Subspace, outer: Subspace, codim: int, rng: random.Random,
                            bound: int = 20, attempts: int = 1000) -> Subspace:
    """A random subspace ``S`` of codimension ``codim`` with ``inner ⊆ S ⊆ outer``."""
    field, n = outer.field, outer.n
    want = n + 1 - codim
    if not inner.rank <= want <= outer.rank:
        raise ValueError(f"no subspace of codimension {codim} between ranks {inner.rank} and {outer.rank}")
    for _ in range(attempts):
        extra = []
        for _ in range(want - inner.rank):
            coeffs = _random_vector(field, outer.rank, rng, bound)
            extra.append([_reduce(field, sum(c * b[j] for c, b in zip(coeffs, outer.basis)))
                          for j in range(n + 1)])
        s = Subspace.span(field, n, inner.basis + tuple(tuple(v) for v in extra))
        if s.rank == want:
            return s
    raise RuntimeError(f"no subspace of codimension {codim} found after {attempts} attempts")


def projective_points(field: PrimeField, size: int) -> list[tuple[int, ...]]:
    """Normalized representatives of the points of P^{size-1}(F_p): first nonzero entry 1."""
    p = field.p
    out = []
    for lead in range(size):
        tail = size - lead - 1
        for k in range(p ** tail):
            v = [0] * lead + [1]
            digits = []
            for _ in range(tail):
                k, d = divmod(k, p)
                digits.append(d)
            out.append(tuple(v + digits[::-1]))
    return out
