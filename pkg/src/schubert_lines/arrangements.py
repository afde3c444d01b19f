"""Arrangements of hyperplanes against a complete flag, and the Schubert
conditions they attach to two-row tableaux.

An arrangement in P^n is a complete flag ``F`` with hyperplanes
``H_2, ..., H_{2n-2}`` such that for every ``p``

1. ``H_p ∩ F_{p//2} = F_{p//2+1}``;
2. for tableaux ``S, T`` of degree at most ``p-1``, ``H_T ∩ H_S ⊆ H_p``
   forces ``H_T ∩ H_S = F_{p//2+1}``,

where ``H_T`` is the intersection of the ``H_j`` over the second row of ``T``.
:func:`verify` checks these directly and, independently, through the
per-level conditions used by :func:`build`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .linalg import (Field, Flag, PrimeField, Subspace, kernel, parse_field, field_from_tag,
                     projective_points, proper_meet, random_flag, rank)
from .tableau import Tableau, catalan, enumerate_standard, variant


class ArrangementNotFound(RuntimeError):
    """The candidate search for some hyperplane ran dry."""

    def __init__(self, message: str, m: int | None = None, p: int | None = None):
        super().__init__(message)
        self.m = m
        self.p = p


@dataclass(frozen=True)
class SchubertCondition:
    """The pair ``K ⊆ M``; its variety is the set of lines in ``M`` meeting ``K``."""

    K: Subspace
    M: Subspace

    def __post_init__(self) -> None:
        if not self.K <= self.M:
            raise ValueError("K must be contained in M")

    @classmethod
    def omega(cls, K: Subspace) -> "SchubertCondition":
        """``Ω_K``: all lines meeting ``K``."""
        return cls(K, Subspace.ambient(K.field, K.n))

    @property
    def type(self) -> tuple[int, int]:
        """Partition ``(alpha, beta)`` with ``codim K = alpha + 1``, ``codim M = beta``.

        When ``K`` is a hyperplane of ``M`` or equal to it, every line of ``M``
        qualifies and the type is ``(beta, beta)``.
        """
        beta = self.M.codim
        return max(self.K.codim - 1, beta), beta

    def to_json(self) -> dict:
        return {"K": self.K.to_json(), "M": self.M.to_json()}

    @classmethod
    def from_json(cls, fld: Field, n: int, data: dict) -> "SchubertCondition":
        M = (Subspace.from_json(fld, n, data["M"]) if "M" in data
             else Subspace.ambient(fld, n))
        return cls(Subspace.from_json(fld, n, data["K"]), M)


def ballot_sets(top: int) -> list[tuple[int, ...]]:
    """Subsets ``b_1 < ... < b_k`` of ``{2..top}`` with ``b_j >= 2j``: exactly the
    second rows of two-row standard tableaux with entries at most ``top``."""
    out: list[tuple[int, ...]] = [()]

    def rec(acc: tuple[int, ...]) -> None:
        j = len(acc) + 1
        start = max(2 * j, acc[-1] + 1 if acc else 2)
        for b in range(start, top + 1):
            out.append(acc + (b,))
            rec(acc + (b,))

    rec(())
    return sorted(out, key=lambda b: (len(b), b))


def tableau_with_second_row(row: Sequence[int], degree: int | None = None) -> Tableau:
    """The two-row tableau with given second row and degree (default: smallest)."""
    row = tuple(row)
    if degree is None:
        degree = max(row, default=0)
    first = tuple(x for x in range(1, degree + 1) if x not in row)
    return Tableau((first, row))


def exclusion_family(m: int) -> list[tuple[int, ...]]:
    """Index sets ``3,2<4<...<2j-2<a_{j+1}<...<a_m <= 2m`` with ``a_i >= 2i`` for ``i > j``.

    ``j = 0`` contributes the second rows of rectangular ``(m, m)`` tableaux and each
    ``2 <= j <= m`` a prefix ``{2, 3, 4, 6, ..., 2j-2}`` followed by a ballot tail.
    """
    out = []
    for j in [0] + list(range(2, m + 1)):
        prefix = () if j == 0 else tuple(sorted({3} | set(range(2, 2 * j - 1, 2))))

        def tails(i: int, prev: int, acc: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
            if i > m:
                yield acc
                return
            for a in range(max(2 * i, prev + 1), 2 * m + 1):
                yield from tails(i + 1, a, acc + (a,))

        for tail in tails(j + 1, prefix[-1] if prefix else 1, ()):
            out.append(prefix + tail)
    return sorted(out)


def s_bound(n: int) -> int:
    """Field size sufficient for an arrangement in P^n, as the closed formula
    ``C(n-2) + sum_{i=1}^{n-4} C(i)`` in Catalan numbers ``C``."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return catalan(n - 2) + sum(catalan(i) for i in range(1, n - 3))


@dataclass
class Arrangement:
    n: int
    field: Field
    flag: Flag
    hyperplanes: dict[int, Subspace]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        want = set(range(2, 2 * self.n - 1))
        if set(self.hyperplanes) != want:
            raise ValueError(f"need hyperplanes H_2..H_{2 * self.n - 2}, got {sorted(self.hyperplanes)}")
        for p, h in self.hyperplanes.items():
            if h.codim != 1:
                raise ValueError(f"H_{p} is not a hyperplane")

    def F(self, i: int) -> Subspace:
        return self.flag[i]

    def H(self, p: int) -> Subspace:
        return self.hyperplanes[p]

    def H_set(self, indices: Iterable[int]) -> Subspace:
        """``H_A``: intersection of the listed hyperplanes (ambient when empty)."""
        key = frozenset(indices)
        if key not in self._cache:
            if not key:
                self._cache[key] = Subspace.ambient(self.field, self.n)
            else:
                forms = [self.H(p).equations()[0] for p in sorted(key)]
                self._cache[key] = Subspace.from_equations(self.field, self.n, forms)
        return self._cache[key]

    def to_json(self) -> dict:
        return {"n": self.n, "field": self.field.tag(), "flag": self.flag.to_json(),
                "hyperplanes": {str(p): h.to_json() for p, h in sorted(self.hyperplanes.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "Arrangement":
        fld = field_from_tag(data["field"])
        n = int(data["n"])
        flag = Flag.from_json(fld, n, data["flag"])
        hyper = {int(p): Subspace.from_json(fld, n, m) for p, m in data["hyperplanes"].items()}
        return cls(n, fld, flag, hyper)


def _form_kills(form: Sequence, space: Subspace) -> bool:
    fld = space.field
    for v in space.basis:
        s = sum(a * b for a, b in zip(form, v))
        if (s % fld.p if fld.finite else s) != 0:
            return False
    return True


def h_of_tableau(arr: Arrangement, t: Tableau, check: bool = True) -> Subspace:
    """``H_T``; with ``check`` the codimension is asserted to equal the second-row length."""
    if t.degree > 2 * arr.n - 2:
        raise ValueError(f"tableau degree {t.degree} exceeds 2n-2 = {2 * arr.n - 2}")
    if len(t.rows) > 2:
        raise ValueError(f"{t} is not a two-row tableau")
    h = arr.H_set(t.row(1))
    if check and h.codim != len(t.row(1)):
        raise AssertionError(f"codim H_T = {h.codim} but second row of {t} has length {len(t.row(1))}")
    return h


def omega_of_tableau(arr: Arrangement, t: Tableau) -> SchubertCondition:
    """``Ω(T) = Ω(F_{alpha+1}, H_T)``; ``K`` is empty when ``alpha >= n``."""
    return SchubertCondition(arr.F(len(t.row(0)) + 1), h_of_tableau(arr, t))


def properness_failures(arr: Arrangement, L: Subspace, l: int, s: int, alpha: int,
                        tableaux: Iterable[Tableau] | None = None) -> list[str]:
    """Clauses of "L meets the arrangement properly at level (l, s)" that fail."""
    bad = []
    if L.codim != alpha - s + 1:
        bad.append(f"codim L = {L.codim}, expected {alpha - s + 1}")
    for j in range((l + s) // 2 + 1, l + 2):
        if not proper_meet(L, arr.F(j)):
            bad.append(f"L does not meet F_{j} properly")
    if L.meet(arr.F(l + 1)) != arr.F(l + alpha - s + 2):
        bad.append(f"L ∩ F_{l + 1} != F_{l + alpha - s + 2}")
    if tableaux is None:
        tableaux = [t for b in range(l // 2 + 1) for t in enumerate_standard((l - b, b))]
    for t in tableaux:
        if t.degree != l:
            raise ValueError(f"{t} does not have degree {l}")
        for k in (s - 1, s):
            if k < 0:
                continue
            x = variant(t, k, k)
            if x is None or x.degree > 2 * arr.n - 2:
                continue
            if not proper_meet(L, arr.H_set(x.row(1))):
                bad.append(f"L does not meet H_T properly for T = {x.rows}")
    return bad


def meets_properly(arr: Arrangement, L: Subspace, l: int, s: int, alpha: int,
                   tableaux: Iterable[Tableau] | None = None) -> bool:
    return not properness_failures(arr, L, l, s, alpha, tableaux)


def omega_T_L(arr: Arrangement, t: Tableau, L: Subspace, l: int, s: int, alpha: int,
              check: bool = True) -> SchubertCondition:
    """``Ω(T; L)`` for ``T`` in ``𝒯_{s-1, alpha}`` with ``𝒯`` of degree ``l``.

    First row length ``b``: ``Ω(F_{b+1}, H_T)`` if ``b >= l + 1``, otherwise
    ``Ω(F_{b-alpha+s} ∩ L, H_T)``.
    """
    if t.degree != l + alpha:
        raise ValueError(f"{t} has degree {t.degree}, expected {l + alpha}")
    if check:
        bad = properness_failures(arr, L, l, s, alpha, [t.restrict(l)])
        if bad:
            raise ValueError("L does not meet the arrangement properly: " + "; ".join(bad))
    b = len(t.row(0))
    H = h_of_tableau(arr, t)
    if b >= l + 1:
        return SchubertCondition(arr.F(b + 1), H)
    return SchubertCondition(arr.F(b - alpha + s).meet(L), H)


# construction


def _annihilator_points(space: Subspace) -> list[tuple]:
    """All hyperplanes (as normalized forms) containing ``space``, over F_p."""
    fld = space.field
    eqs = space.equations()
    out = []
    for coeffs in projective_points(fld, len(eqs)):
        form = [sum(c * e[j] for c, e in zip(coeffs, eqs)) % fld.p for j in range(space.n + 1)]
        out.append(tuple(form))
    return out


def _hyperplane(fld: Field, n: int, form: Sequence) -> Subspace:
    return Subspace.from_equations(fld, n, [form])


def _random_form(space: Subspace, rng: random.Random, bound: int) -> tuple:
    fld = space.field
    eqs = space.equations()
    coeffs = [fld.random_element(rng, bound) for _ in eqs]
    form = [sum(c * e[j] for c, e in zip(coeffs, eqs)) for j in range(space.n + 1)]
    return tuple(fld(x) for x in form)


def _admissible(arr_flag: Flag, chosen: dict[int, Subspace], p: int, form: Sequence,
                forbidden: list[Subspace]) -> bool:
    m = p // 2
    if any(x != 0 for x in form) is False:
        return False
    if not _form_kills(form, arr_flag[m + 1]) or _form_kills(form, arr_flag[m]):
        return False
    return not any(_form_kills(form, h) for h in forbidden)


def _forbidden(flag: Flag, chosen: dict[int, Subspace], p: int, n: int) -> list[Subspace]:
    """Subspaces ``H_A`` an odd-indexed hyperplane ``H_{2m+1}`` must not contain."""
    if p % 2 == 0:
        return []
    m = p // 2
    fld = flag.field
    out = []
    for A in exclusion_family(m):
        forms = [chosen[a].equations()[0] for a in A]
        out.append(Subspace.from_equations(fld, n, forms))
    return out


def build(n: int, fld: Field | str, seed: int = 0, max_nodes: int = 200_000,
          attempts: int = 2000, bound: int = 20) -> Arrangement:
    """Construct an arrangement level by level.

    ``H_{2m}`` is any hyperplane with ``H_{2m} ∩ F_m = F_{m+1}``; ``H_{2m+1}``
    contains ``F_{m+1}``, not ``F_m``, and none of the ``H_A`` for ``A`` in
    :func:`exclusion_family`.  Over F_p every candidate is enumerated and the
    search backtracks, so for a fixed flag the search is exhaustive (all flags
    are equivalent under PGL, so exhaustion means no arrangement exists).
    Over ℚ candidates are sampled with integer coefficients in ``[-bound, bound]``.
    """
    if isinstance(fld, str):
        fld = parse_field(fld)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    rng = random.Random(seed)
    flag = random_flag(n, fld, rng.randrange(2 ** 32), bound=bound)
    chosen: dict[int, Subspace] = {}
    top = 2 * n - 2
    deepest = [2]
    nodes = [0]

    if fld.finite:
        def search(p: int) -> bool:
            if p > top:
                return True
            deepest[0] = max(deepest[0], p)
            forbidden = _forbidden(flag, chosen, p, n)
            cands = [f for f in _annihilator_points(flag[p // 2 + 1])
                     if _admissible(flag, chosen, p, f, forbidden)]
            rng.shuffle(cands)
            for form in cands:
                nodes[0] += 1
                if nodes[0] > max_nodes:
                    raise ArrangementNotFound(f"node budget {max_nodes} exhausted at H_{p}",
                                              m=p // 2, p=p)
                chosen[p] = _hyperplane(fld, n, form)
                if search(p + 1):
                    return True
                del chosen[p]
            return False

        if not search(2):
            p = deepest[0]
            raise ArrangementNotFound(
                f"no arrangement in P^{n} over {fld}: every candidate for H_{p} (m = {p // 2}) "
                f"is excluded", m=p // 2, p=p)
    else:
        for p in range(2, top + 1):
            forbidden = _forbidden(flag, chosen, p, n)
            for _ in range(attempts):
                form = _random_form(flag[p // 2 + 1], rng, bound)
                if _admissible(flag, chosen, p, form, forbidden):
                    chosen[p] = _hyperplane(fld, n, form)
                    break
            else:
                raise ArrangementNotFound(f"no admissible H_{p} after {attempts} samples",
                                          m=p // 2, p=p)
    return Arrangement(n, fld, flag, dict(chosen))


# verification


@dataclass
class ArrangementReport:
    n: int
    field: str
    condition1: list[dict]
    condition2: list[dict]
    levels: list[dict]
    consequences: list[dict]

    @property
    def definition_ok(self) -> bool:
        return not self.condition1 and not self.condition2

    @property
    def levels_ok(self) -> bool:
        return not self.levels

    @property
    def routes_agree(self) -> bool:
        return self.definition_ok == self.levels_ok

    @property
    def ok(self) -> bool:
        return self.definition_ok and self.levels_ok and not self.consequences

    def to_json(self) -> dict:
        return {"n": self.n, "field": self.field, "ok": self.ok,
                "definition_ok": self.definition_ok, "levels_ok": self.levels_ok,
                "routes_agree": self.routes_agree,
                "condition1": self.condition1, "condition2": self.condition2,
                "levels": self.levels, "consequences": self.consequences}


def check_definition(arr: Arrangement) -> tuple[list[dict], list[dict]]:
    """Failures of conditions 1 and 2, with witnesses."""
    c1, c2 = [], []
    for p in range(2, 2 * arr.n - 1):
        m = p // 2
        if arr.H(p).meet(arr.F(m)) != arr.F(m + 1):
            c1.append({"p": p, "detail": f"H_{p} ∩ F_{m} != F_{m + 1}"})
        form = arr.H(p).equations()[0]
        rows = ballot_sets(p - 1)
        seen = set()
        for i, b1 in enumerate(rows):
            for b2 in rows[i:]:
                union = frozenset(b1) | frozenset(b2)
                if union in seen:
                    continue
                seen.add(union)
                h = arr.H_set(union)
                if _form_kills(form, h) and h != arr.F(m + 1):
                    c2.append({"p": p, "S": tableau_with_second_row(b1).to_json(),
                               "T": tableau_with_second_row(b2).to_json(),
                               "detail": f"H_S ∩ H_T ⊆ H_{p} but differs from F_{m + 1}"})
    return c1, c2


def check_levels(arr: Arrangement, weak: bool = False) -> list[dict]:
    """Failures of the per-level conditions.

    For each ``m``: ``H_{2m} ∩ F_m = F_{m+1}``; ``F_{m+1} ⊆ H_{2m+1}`` and
    ``F_m ⊄ H_{2m+1}``; and ``H_A ⊄ H_{2m+1}`` for every ``A ⊆ {2..2m}`` with
    ``codim H_A = #A <= m``.  ``weak=True`` drops ``F_m ⊄ H_{2m+1}``, which
    lets ``H_3 = F_1`` through.
    """
    bad = []
    top = 2 * arr.n - 2
    for m in range(1, arr.n):
        if 2 * m <= top and arr.H(2 * m).meet(arr.F(m)) != arr.F(m + 1):
            bad.append({"m": m, "clause": "flag", "detail": f"H_{2 * m} ∩ F_{m} != F_{m + 1}"})
        if 2 * m + 1 > top:
            continue
        h = arr.H(2 * m + 1)
        form = h.equations()[0]
        if not arr.F(m + 1) <= h:
            bad.append({"m": m, "clause": "flag", "detail": f"F_{m + 1} ⊄ H_{2 * m + 1}"})
        if not weak and arr.F(m) <= h:
            bad.append({"m": m, "clause": "flag", "detail": f"F_{m} ⊆ H_{2 * m + 1}"})
        for k in range(m + 1):
            for A in combinations(range(2, 2 * m + 1), k):
                hA = arr.H_set(A)
                if hA.codim == k and _form_kills(form, hA):
                    bad.append({"m": m, "clause": "family", "A": list(A),
                                "detail": f"H_A ⊆ H_{2 * m + 1}"})
    return bad


def check_consequences(arr: Arrangement) -> list[dict]:
    """Consequences for tableaux ``T`` of shape ``(alpha, beta)``, ``alpha <= n-1``:
    ``F_{alpha+1} ⊆ H_T`` of codimension ``beta``, ``H_T != F_beta`` for ``beta > 0``,
    and ``T -> H_T`` injective in each degree."""
    bad = []
    n = arr.n
    for l in range(2 * n - 1):
        seen: dict[Subspace, Tableau] = {}
        for beta in range(l // 2 + 1):
            alpha = l - beta
            if alpha > n - 1:
                continue
            for t in enumerate_standard((alpha, beta)):
                h = arr.H_set(t.row(1))
                if h.codim != beta:
                    bad.append({"T": t.to_json(), "clause": "1", "detail": f"codim H_T = {h.codim}"})
                if not arr.F(alpha + 1) <= arr.F((l + 1) // 2 + 1) <= h:
                    bad.append({"T": t.to_json(), "clause": "1", "detail": "flag not inside H_T"})
                if beta > 0 and h == arr.F(beta):
                    bad.append({"T": t.to_json(), "clause": "2", "detail": "H_T = F_beta"})
                if h in seen:
                    bad.append({"T": t.to_json(), "S": seen[h].to_json(), "clause": "3",
                                "detail": "H_S = H_T for S != T"})
                seen[h] = t
    return bad


def verify(arr: Arrangement) -> ArrangementReport:
    c1, c2 = check_definition(arr)
    return ArrangementReport(arr.n, str(arr.field), c1, c2, check_levels(arr), check_consequences(arr))


def random_collection(n: int, fld: Field, seed: int, containing: bool = True,
                      bound: int = 20) -> Arrangement:
    """A flag with random hyperplanes; with ``containing`` each ``H_p`` is drawn
    among hyperplanes through ``F_{p//2+1}``, so the conditions are tested non-trivially."""
    rng = random.Random(seed)
    flag = random_flag(n, fld, rng.randrange(2 ** 32), bound=bound)
    hyper = {}
    for p in range(2, 2 * n - 1):
        base = flag[p // 2 + 1] if containing else Subspace.empty(fld, n)
        while True:
            form = _random_form(base, rng, bound)
            if any(x != 0 for x in form):
                break
        hyper[p] = _hyperplane(fld, n, form)
    return Arrangement(n, fld, flag, hyper)


def field_search(n: int, primes: Sequence[int] = (2, 3, 5, 7),
                 max_nodes: int = 5_000) -> list[dict]:
    """Run :func:`build` over each prime; the verdict is ``"found"``, ``"none"``
    (search exhausted, so no arrangement exists) or ``"undetermined"`` (node
    budget ran out)."""
    out = []
    for p in primes:
        try:
            build(n, PrimeField(p), seed=0, max_nodes=max_nodes)
        except ArrangementNotFound as exc:
            verdict = "undetermined" if "budget" in str(exc) else "none"
            out.append({"p": p, "verdict": verdict, "detail": str(exc)})
            continue
        out.append({"p": p, "verdict": "found", "detail": ""})
    return out


def minimal_field(n: int, primes: Sequence[int] = (2, 3, 5, 7), max_nodes: int = 5_000) -> int | None:
    """Smallest listed prime admitting an arrangement in P^n, or ``None`` when a
    smaller prime stays undetermined (or none of them works)."""
    for row in field_search(n, primes, max_nodes):
        if row["verdict"] == "found":
            return row["p"]
        if row["verdict"] == "undetermined":
            return None
    return None


# pencils


@dataclass(frozen=True)
class Pencil:
    """Hyperplanes ``L_t = <t e_j + e_{j+1} : 0 <= j < n>`` in a frame adapted to
    the flag (``F_i = <e_i..e_n>``) and to ``L_inf = <e_0..e_{n-1}>``."""

    flag: Flag
    l_inf: Subspace
    frame: tuple[tuple, ...]

    @property
    def n(self) -> int:
        return self.flag.n

    @property
    def field(self) -> Field:
        return self.flag.field

    def spanning(self, t, i: int = 0) -> list[tuple]:
        """Explicit spanning vectors of ``L_t ∩ F_i`` (for ``t != 0``)."""
        fld = self.field
        e = self.frame
        out = []
        for j in range(i, self.n):
            v = tuple(fld(t * a + b) for a, b in zip(e[j], e[j + 1]))
            out.append(v)
        return out

    def at(self, t) -> Subspace:
        """``L_t``; ``t=None`` stands for the point at infinity."""
        if t is None:
            return Subspace.span(self.field, self.n, self.frame[:self.n])
        return Subspace.span(self.field, self.n, self.spanning(t, 0))


def pencil_make(flag: Flag, l_inf: Subspace) -> Pencil:
    n, fld = flag.n, flag.field
    if l_inf.codim != 1:
        raise ValueError("L_inf must be a hyperplane")
    if flag[n] <= l_inf:
        raise ValueError("L_inf contains F_n")
    frame: list = [None] * (n + 1)
    frame[n] = flag[n].basis[0]
    for i in range(n - 1, -1, -1):
        cur = flag[i].meet(l_inf)
        below = flag[i + 1].meet(l_inf)
        frame[i] = next(v for v in cur.basis if not below.contains_vector(v))
    frame_t = tuple(tuple(v) for v in frame)
    for i in range(n + 1):
        assert Subspace.span(fld, n, frame_t[i:]) == flag[i]
    assert Subspace.span(fld, n, frame_t[:n]) == l_inf
    return Pencil(flag, l_inf, frame_t)


def pencil_at(pencil: Pencil, t) -> Subspace:
    """``L_t``; ``t=None`` is the point at infinity."""
    return pencil.at(t)


def pencil_verify(pencil: Pencil, seed: int = 0, samples: int = 50) -> dict:
    """Check properness for ``t != 0`` and the limits ``L_t ∩ F_i -> F_{i+1}`` at 0.

    Over F_p every nonzero ``t`` is checked; over ℚ ``samples`` random nonzero
    rationals.
    """
    fld, n, flag = pencil.field, pencil.n, pencil.flag
    if fld.finite:
        ts = list(range(1, fld.p))
    else:
        rng = random.Random(seed)
        ts = []
        while len(ts) < samples:
            num, den = rng.randint(-50, 50), rng.randint(1, 50)
            if num:
                ts.append(Fraction(num, den))
    failures = []
    for t in ts:
        lt = pencil.at(t)
        if lt.codim != 1:
            failures.append({"t": str(t), "detail": "L_t is not a hyperplane"})
            continue
        for i in range(n + 1):
            cut = lt.meet(flag[i])
            explicit = Subspace.span(fld, n, pencil.spanning(t, i))
            if cut != explicit or cut.codim != i + 1 or not proper_meet(lt, flag[i]):
                failures.append({"t": str(t), "i": i, "detail": "L_t ∩ F_i is not the expected proper section"})
    limits = []
    for i in range(n):
        vectors = pencil.spanning(0, i)
        ok = rank(vectors, fld) == len(vectors) and Subspace.span(fld, n, vectors) == flag[i + 1]
        limits.append({"i": i, "ok": ok})
    at_inf = pencil.at(None) == pencil.l_inf
    return {"n": n, "field": str(fld), "checked_t": [str(t) for t in ts],
            "failures": failures, "limits": limits, "infinity_ok": at_inf,
            "ok": not failures and all(x["ok"] for x in limits) and at_inf}
