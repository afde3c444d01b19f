"""Brute-force enumerative geometry of lines over F_q.

Lines of P^n(F_q) are enumerated in canonical echelon form: a 2 x (n+1)
matrix with pivot columns ``i < j``, row 1 having a 1 at ``i`` and a 0 at
``j``, row 2 a 1 at ``j``, and zeros left of the pivots.  Incidence with a
Schubert condition ``Ω(K, M)`` is a rank test, evaluated on numpy batches:
``ℓ ⊆ M`` iff ``ℓ E_M^T ≡ 0``, and ``ℓ`` meets ``K`` iff the 2 x c matrix
``ℓ E_K^T`` has rank < 2, where ``E`` are equation matrices.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .arrangements import (Arrangement, SchubertCondition, omega_of_tableau, omega_T_L,
                           properness_failures)
from .chow import fits_box, intersection_number
from .linalg import (QQ, Field, PrimeField, Subspace, is_prime, projective_points,
                     proper_meet, random_subspace, random_subspace_between)
from .tableau import Tableau, plus_set

ProjLine = tuple[tuple[int, ...], tuple[int, ...]]

BATCH = 1 << 17
MATERIALIZE_LIMIT = 10 ** 8


def _check_q(q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")


def count_lines(n: int, q: int) -> int:
    """Gaussian binomial ``[n+1 choose 2]_q``."""
    _check_q(q)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return (q ** (n + 1) - 1) * (q ** n - 1) // ((q ** 2 - 1) * (q - 1))


def _blocks(n: int) -> list[tuple[int, int, list[int], list[int]]]:
    """Pivot pairs with the free positions of each row, in canonical order."""
    out = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            free1 = [k for k in range(i + 1, n + 1) if k != j]
            free2 = list(range(j + 1, n + 1))
            out.append((i, j, free1, free2))
    return out


def _block_batches(n: int, q: int, block, batch: int = BATCH) -> Iterator[np.ndarray]:
    i, j, free1, free2 = block
    free = [(0, k) for k in free1] + [(1, k) for k in free2]
    total = q ** len(free)
    for start in range(0, total, batch):
        idx = np.arange(start, min(total, start + batch), dtype=np.int64)
        out = np.zeros((len(idx), 2, n + 1), dtype=np.int64)
        out[:, 0, i] = 1
        out[:, 1, j] = 1
        for r, k in reversed(free):
            out[:, r, k] = idx % q
            idx = idx // q
        yield out


def iter_line_batches(n: int, q: int, batch: int = BATCH) -> Iterator[np.ndarray]:
    """All lines as ``(B, 2, n+1)`` integer arrays, in canonical order."""
    _check_q(q)
    for block in _blocks(n):
        yield from _block_batches(n, q, block, batch)


def enumerate_lines(n: int, q: int) -> Iterator[ProjLine]:
    """Stream every line of P^n(F_q) exactly once, in canonical order."""
    for arr in iter_line_batches(n, q):
        for m in arr.tolist():
            yield tuple(m[0]), tuple(m[1])


def all_lines(n: int, q: int) -> np.ndarray:
    """Materialize every line (guarded by a size limit)."""
    if count_lines(n, q) >= MATERIALIZE_LIMIT:
        raise MemoryError(f"refusing to materialize {count_lines(n, q)} lines")
    return np.concatenate(list(iter_line_batches(n, q)))


def line_subspace(line: ProjLine, fld: Field) -> Subspace:
    return Subspace.span(fld, len(line[0]) - 1, line)


def line_satisfies(line: ProjLine, cond: SchubertCondition) -> bool:
    """Exact test: ``ℓ ⊆ M`` and ``ℓ ∩ K`` nonempty."""
    ell = line_subspace(line, cond.M.field)
    if ell.rank != 2:
        raise ValueError(f"{line} does not span a line")
    return ell <= cond.M and not ell.meet(cond.K).is_empty


def _equations(space: Subspace) -> np.ndarray:
    eqs = space.equations()
    return np.array(eqs, dtype=np.int64).reshape(len(eqs), space.n + 1)


def condition_mask(lines: np.ndarray, cond: SchubertCondition) -> np.ndarray:
    """Boolean mask of the lines in ``Ω(K, M)``."""
    q = cond.M.field.p
    ok = np.ones(len(lines), dtype=bool)
    em = _equations(cond.M)
    if len(em):
        ok &= ~(np.einsum("bkn,rn->bkr", lines, em) % q).any(axis=(1, 2))
    ek = _equations(cond.K)
    if len(ek) >= 2:
        p = np.einsum("bkn,rn->bkr", lines, ek) % q
        outer = p[:, 0, :, None] * p[:, 1, None, :]
        ok &= ~((outer - outer.transpose(0, 2, 1)) % q).any(axis=(1, 2))
    return ok


@dataclass(frozen=True)
class SchubertProblem:
    n: int
    field: Field
    conditions: tuple[SchubertCondition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "conditions", tuple(self.conditions))
        for c in self.conditions:
            if c.M.n != self.n or c.M.field != self.field:
                raise ValueError("condition does not live in the problem's ambient space")

    @property
    def types(self) -> list[tuple[int, int]]:
        return [c.type for c in self.conditions]

    def predicted(self) -> int | None:
        """Intersection number when the codimensions add up to ``2n-2``."""
        types = self.types
        if sum(a + b for a, b in types) != 2 * self.n - 2:
            return None
        if not all(fits_box(t, self.n) for t in types):
            return 0
        return intersection_number(types, self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "field": self.field.tag(),
                "conditions": [c.to_json() for c in self.conditions]}

    @classmethod
    def from_json(cls, data: dict) -> "SchubertProblem":
        from .linalg import field_from_tag
        fld = field_from_tag(data["field"])
        n = int(data["n"])
        return cls(n, fld, tuple(SchubertCondition.from_json(fld, n, c) for c in data["conditions"]))


@dataclass
class SolutionReport:
    lines: list[ProjLine]
    predicted: int | None
    certificates: list[list[dict]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.lines)

    @property
    def distinct(self) -> bool:
        return len(set(self.lines)) == len(self.lines)

    @property
    def status(self) -> str:
        if self.predicted is None:
            return "count only"
        if self.count == self.predicted:
            return "matches prediction"
        if self.count > self.predicted:
            return "non-transverse instance"
        return "fewer rational solutions than predicted"

    def to_json(self) -> dict:
        return {"count": self.count, "predicted": self.predicted, "status": self.status,
                "distinct": self.distinct,
                "lines": [[list(r) for r in ell] for ell in self.lines],
                "certificates": self.certificates}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SCHUBERT_THREADS", "4")))
    except ValueError:
        return 1


def _solve_block(n: int, q: int, block, conditions) -> list[ProjLine]:
    found = []
    for arr in _block_batches(n, q, block):
        mask = np.ones(len(arr), dtype=bool)
        for c in conditions:
            mask &= condition_mask(arr, c)
            if not mask.any():
                break
        for m in arr[mask].tolist():
            found.append((tuple(m[0]), tuple(m[1])))
    return found


def certificate(line: ProjLine, cond: SchubertCondition) -> dict:
    """Witness of ``ℓ ∈ Ω(K, M)``: a point of ``ℓ ∩ K``."""
    meet = line_subspace(line, cond.M.field).meet(cond.K)
    return {"inside_M": True, "point": [str(x) for x in meet.basis[0]]}


def solve(problem: SchubertProblem, threads: int | None = None) -> SolutionReport:
    """All F_q-rational lines satisfying every condition.

    The line stream is split by pivot pairs into shards, filtered independently
    and merged in canonical order.  Every solution is re-verified exactly.
    """
    fld = problem.field
    if not isinstance(fld, PrimeField):
        raise ValueError("brute-force solving needs a prime field")
    n, q = problem.n, fld.p
    blocks = _blocks(n)
    threads = threads or _threads()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda b: _solve_block(n, q, b, problem.conditions), blocks))
    else:
        parts = [_solve_block(n, q, b, problem.conditions) for b in blocks]
    lines = [ell for part in parts for ell in part]
    certs = []
    for ell in lines:
        for c in problem.conditions:
            if not line_satisfies(ell, c):
                raise AssertionError(f"line {ell} fails a condition on re-verification")
        certs.append([certificate(ell, c) for c in problem.conditions])
    return SolutionReport(lines, problem.predicted(), certs)


def canonical_line(fld: Field, n: int, vectors: Sequence[Sequence]) -> ProjLine:
    s = Subspace.span(fld, n, vectors)
    if s.rank != 2:
        raise ValueError("vectors do not span a line")
    return tuple(tuple(x) for x in s.basis)  # type: ignore[return-value]


# explicit instances


def _distinct_points(points: Sequence[Sequence], fld: Field) -> bool:
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            a, b = points[i], points[j]
            if fld(a[0] * b[1] - a[1] * b[0]) == 0:
                return False
    return True


def default_points(fld: Field, count: int) -> list[tuple]:
    """``[1,0], [0,1], [1,1], [1,2], ...`` -- distinct points of P^1."""
    pts = [(1, 0), (0, 1)] + [(1, k) for k in range(1, count)]
    pts = pts[:count]
    if fld.finite and count > fld.p + 1:
        raise ValueError(f"P^1({fld}) has only {fld.p + 1} points, need {count}")
    return [tuple(fld(x) for x in p) for p in pts]


def _check_points(points: Sequence[Sequence], fld: Field, what: str) -> list[tuple]:
    pts = [tuple(fld(x) for x in p) for p in points]
    for p in pts:
        if len(p) != 2 or all(x == 0 for x in p):
            raise ValueError(f"{p} is not a point of P^1")
    if not _distinct_points(pts, fld):
        raise ValueError(f"repeated {what}: {list(points)}")
    return pts


@dataclass
class SegreInstance:
    n: int
    field: Field
    points: list[tuple]
    planes: list[Subspace]
    predicted: list[ProjLine]

    @property
    def problem(self) -> SchubertProblem:
        return SchubertProblem(2 * self.n - 1, self.field,
                               tuple(SchubertCondition.omega(L) for L in self.planes))

    def to_json(self) -> dict:
        return {"n": self.n, "field": self.field.tag(),
                "points": [[str(x) for x in p] for p in self.points],
                "planes": [L.to_json() for L in self.planes],
                "predicted": [[[str(x) for x in r] for r in ell] for ell in self.predicted]}


def segre_instance(n: int, fld: Field, points: Sequence[Sequence] | None = None,
                   check: bool = True) -> SegreInstance:
    """Four (n-1)-planes in P^{2n-1} with exactly the lines ``<e_j, e_{n+j}>`` meeting all.

    ``L1 = <e_{n+1..2n}>``, ``L2 = <e_{1..n}>``, ``L3 = <e_j + e_{n+j}>`` and
    ``L4 = <alpha_j e_j + beta_j e_{n+j}>`` for the points ``p_j = [alpha_j, beta_j]``.
    With ``check=False`` repeated points are accepted (a degenerate instance).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    pts = default_points(fld, n) if points is None else [tuple(fld(x) for x in p) for p in points]
    if len(pts) != n:
        raise ValueError(f"need {n} points, got {len(pts)}")
    if check:
        pts = _check_points(pts, fld, "points")
    N = 2 * n - 1
    dim = 2 * n

    def e(k: int, c=1) -> list:
        v = [fld(0)] * dim
        v[k] = fld(c)
        return v

    def add(u, v):
        return [fld(a + b) for a, b in zip(u, v)]

    L1 = Subspace.span(fld, N, [e(n + j) for j in range(n)])
    L2 = Subspace.span(fld, N, [e(j) for j in range(n)])
    L3 = Subspace.span(fld, N, [add(e(j), e(n + j)) for j in range(n)])
    L4 = Subspace.span(fld, N, [add(e(j, a), e(n + j, b)) for j, (a, b) in enumerate(pts)])
    predicted = [canonical_line(fld, N, [e(j), e(n + j)]) for j in range(n)]
    inst = SegreInstance(n, fld, pts, [L1, L2, L3, L4], predicted)
    for ell in predicted:
        for L in inst.planes:
            assert line_satisfies(ell, SchubertCondition.omega(L))
    return inst


@dataclass
class ScrollInstance:
    n: int
    field: Field
    roots: list[tuple]
    F: list            # coefficients A_0..A_n of F = sum A_i b^i a^{n-i}
    K: Subspace
    predicted: list[ProjLine]

    def scroll_line(self, p: Sequence) -> ProjLine:
        """``λ(p) = <p, (0, 0, a^{n-1}, a^{n-2} b, ..., b^{n-1})>`` for ``p = [a, b]``."""
        fld, n = self.field, self.n
        a, b = (fld(x) for x in p)
        point = [a, b] + [fld(0)] * n
        partner = [fld(0), fld(0)] + [fld(a ** (n - i) * b ** (i - 1)) for i in range(1, n + 1)]
        return canonical_line(fld, n + 1, [point, partner])

    @property
    def condition(self) -> SchubertCondition:
        return SchubertCondition.omega(self.K)

    def to_json(self) -> dict:
        return {"n": self.n, "field": self.field.tag(),
                "roots": [[str(x) for x in r] for r in self.roots],
                "F": [str(x) for x in self.F], "K": self.K.to_json(),
                "predicted": [[[str(x) for x in r] for r in ell] for ell in self.predicted]}


def _poly_mul(u: list, v: list, fld: Field) -> list:
    out = [fld(0)] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        for j, y in enumerate(v):
            out[i + j] = fld(out[i + j] + x * y)
    return out


def expand_roots(roots: Sequence[Sequence], fld: Field) -> list:
    """Coefficients (by power of ``b``) of ``prod_j (b_j a - a_j b)``."""
    poly = [fld(1)]
    for a_j, b_j in roots:
        poly = _poly_mul(poly, [fld(b_j), fld(-a_j)], fld)
    return poly


def scroll_instance(n: int, fld: Field, roots: Sequence[Sequence] | None = None) -> ScrollInstance:
    """The condition ``K_{n+1} = {x_2 - y_1 = A_0 x_1 + sum A_i y_i = 0}`` in P^{n+1}.

    Coordinates are ``x_1, x_2, y_1..y_n``; scroll lines ``λ(p)`` for ``p`` on the
    line ``y = 0``; exactly the ``λ(root)`` meet ``K_{n+1}``.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if fld.finite and fld.p + 1 < n:
        raise ValueError(f"only {fld.p + 1} rational scroll lines over {fld}; need q >= n - 1")
    rts = default_points(fld, n) if roots is None else _check_points(roots, fld, "roots")
    if len(rts) != n:
        raise ValueError(f"need {n} roots, got {len(rts)}")
    A = expand_roots(rts, fld)
    N = n + 1
    lam1 = [fld(0)] * (N + 1)
    lam1[1], lam1[2] = fld(1), fld(-1)
    lam2 = [A[0], fld(0)] + list(A[1:])
    K = Subspace.from_equations(fld, N, [lam1, lam2])
    inst = ScrollInstance(n, fld, rts, A, K, [])
    inst.predicted = [inst.scroll_line(r) for r in rts]
    return inst


def pullback_lambda2(inst: ScrollInstance) -> list:
    """``ψ^* Λ_2`` as coefficients by power of ``b`` for
    ``ψ(a, b) = (a^n, a^{n-1} b, a^{n-1} b, a^{n-2} b^2, ..., b^n)``."""
    fld, n = inst.field, inst.n
    lam2 = [inst.F[0], fld(0)] + list(inst.F[1:])
    degrees = [0, 1] + list(range(1, n + 1))
    out = [fld(0)] * (n + 1)
    for c, d in zip(lam2, degrees):
        out[d] = fld(out[d] + c)
    return out


def verify_scroll(inst: ScrollInstance) -> dict:
    """Scan every rational scroll line and compare with the roots."""
    fld = inst.field
    if not fld.finite:
        raise ValueError("scanning scroll lines needs a finite field")
    roots = {_normalize(r, fld) for r in inst.roots}
    meeting, missing = [], []
    for p in projective_points(fld, 2):
        ell = inst.scroll_line(p)
        hit = line_satisfies(ell, inst.condition)
        (meeting if hit else missing).append(p)
    expected = sorted(roots)
    pulled = pullback_lambda2(inst)
    direct = expand_roots(inst.roots, fld)
    values_ok = all(
        fld(sum(c * a ** (inst.n - i) * b ** i for i, c in enumerate(pulled)))
        == _eval_product(inst.roots, a, b, fld)
        for a, b in projective_points(fld, 2))
    return {"n": inst.n, "field": str(fld), "scroll_lines": fld.p + 1,
            "meeting": [list(p) for p in sorted(meeting)], "expected": [list(p) for p in expected],
            "pullback_equals_F": pulled == direct and values_ok,
            "ok": sorted(meeting) == expected and pulled == direct and values_ok}


def _eval_product(roots, a, b, fld: Field):
    out = fld(1)
    for a_j, b_j in roots:
        out = fld(out * (b_j * a - a_j * b))
    return out


def _normalize(p: Sequence, fld: Field) -> tuple:
    a, b = (fld(x) for x in p)
    if a != 0:
        return fld(1), fld(b * fld.inv(a))
    return fld(0), fld(1)


# set-equality lemmas


_LINE_CACHE: dict[tuple[int, int], np.ndarray] = {}


def _lines(n: int, q: int) -> np.ndarray:
    if (n, q) not in _LINE_CACHE:
        _LINE_CACHE[(n, q)] = all_lines(n, q)
    return _LINE_CACHE[(n, q)]


def _union_mask(lines: np.ndarray, conds: Sequence[SchubertCondition]) -> np.ndarray:
    out = np.zeros(len(lines), dtype=bool)
    for c in conds:
        out |= condition_mask(lines, c)
    return out


def _compare(lines: np.ndarray, left: np.ndarray, right: np.ndarray, **extra) -> dict:
    return {"equal": bool((left == right).all()), "left": int(left.sum()), "right": int(right.sum()),
            "only_left": int((left & ~right).sum()), "only_right": int((right & ~left).sum()),
            **extra}


def lemma24_failures(F: Subspace, P: Subspace, N: Subspace, H: Subspace) -> list[str]:
    bad = []
    if H.codim != 1:
        bad.append("H is not a hyperplane")
    if P <= H:
        bad.append("H contains P")
    if N <= H:
        bad.append("H contains N")
    if not F < P.meet(H):
        bad.append("F is not a proper subspace of P ∩ H")
    if not proper_meet(N, F):
        bad.append("N does not meet F properly")
    return bad


def check_lemma_24(F: Subspace, P: Subspace, N: Subspace, H: Subspace, check: bool = True) -> dict:
    """``Ω(F,P) ∩ Ω_L = Ω(N∩F, P) ∪ (Ω(F, P∩H) ∩ Ω_N)`` with ``L = N ∩ H``."""
    if check:
        bad = lemma24_failures(F, P, N, H)
        if bad:
            raise ValueError("hypotheses fail: " + "; ".join(bad))
    n, q = P.n, P.field.p
    lines = _lines(n, q)
    L = N.meet(H)
    left = condition_mask(lines, SchubertCondition(F, P)) & condition_mask(lines, SchubertCondition.omega(L))
    first = condition_mask(lines, SchubertCondition(N.meet(F), P))
    second = condition_mask(lines, SchubertCondition(F, P.meet(H))) & condition_mask(
        lines, SchubertCondition.omega(N))
    return _compare(lines, left, first | second, overlap=int((first & second).sum()))


def lemma24_instance(n: int, q: int, seed: int, attempts: int = 1000) -> tuple[Subspace, ...]:
    """Random ``(F, P, N, H)`` satisfying the hypotheses."""
    fld = PrimeField(q)
    rng = random.Random(seed)
    for _ in range(attempts):
        P = random_subspace(n, rng.randint(0, 1), fld, rng)
        H = random_subspace(n, 1, fld, rng)
        PH = P.meet(H)
        if P <= H or PH.codim >= n:
            continue
        F = random_subspace_between(Subspace.empty(fld, n), PH, rng.randint(PH.codim + 1, n), rng)
        N = random_subspace(n, rng.randint(1, n - 1), fld, rng)
        if not lemma24_failures(F, P, N, H):
            return F, P, N, H
    raise RuntimeError("no instance found")


def check_restriction(K: Subspace, M: Subspace, replacement: Subspace | None = None) -> dict:
    """``Ω_K ∩ G_1 M = Ω(K∩M, M)``; ``replacement`` substitutes for ``K∩M``
    on the right (a negative control)."""
    lines = _lines(M.n, M.field.p)
    left = condition_mask(lines, SchubertCondition.omega(K)) & condition_mask(
        lines, SchubertCondition(M, M))
    inner = K.meet(M) if replacement is None else replacement
    right = condition_mask(lines, SchubertCondition(inner, M))
    return _compare(lines, left, right)


def restriction_instance(n: int, q: int, seed: int) -> tuple[Subspace, Subspace]:
    fld = PrimeField(q)
    rng = random.Random(seed)
    M = random_subspace(n, rng.randint(1, n - 2), fld, rng)
    K = random_subspace(n, rng.randint(1, n), fld, rng)
    return K, M


def lemma52_sides(arr: Arrangement, tableaux: Sequence[Tableau], s: int, alpha: int,
                  N: Subspace, L0: Subspace | None = None):
    """The two sides of the lemma as lists of conditions (left: two parts)."""
    tableaux = list(tableaux)
    l = tableaux[0].degree
    if L0 is None:
        L0 = N.meet(arr.H(l + s + 1))
    ext = plus_set(tableaux, s, alpha)
    left_a = [omega_T_L(arr, t, N, l, s + 1, alpha, check=False) for t in ext]
    left_b = [omega_of_tableau(arr, t) for t in plus_set(tableaux, s + 1, s + 1)]
    right = [omega_of_tableau(arr, t) for t in plus_set(tableaux, s, s)]
    return left_a, left_b, right, L0


def check_lemma_52(arr: Arrangement, tableaux: Sequence[Tableau], s: int, alpha: int,
                   N: Subspace, L0: Subspace | None = None) -> dict:
    """``Ω(𝒯^{+s}(α-s); N) ∪ (Ω(𝒯^{+s+1}) ∩ Ω_N) = Ω(𝒯^{+s}) ∩ Ω_{L_0}``,
    ``L_0 = N ∩ H_{l+s+1}`` unless overridden (negative control)."""
    if not arr.field.finite:
        raise ValueError("needs a prime field")
    tableaux = list(tableaux)
    if not tableaux or len({t.degree for t in tableaux}) != 1:
        raise ValueError("need a nonempty set of tableaux of common degree")
    l = tableaux[0].degree
    if not 0 <= s <= alpha - 1:
        raise ValueError(f"need 0 <= s <= alpha - 1, got s={s}, alpha={alpha}")
    if l + s + 1 > 2 * arr.n - 2:
        raise ValueError(f"H_{l + s + 1} is not part of the arrangement")
    bad = properness_failures(arr, N, l, s + 1, alpha, tableaux)
    if bad:
        raise ValueError("N does not meet the arrangement properly: " + "; ".join(bad))
    left_a, left_b, right, L0 = lemma52_sides(arr, tableaux, s, alpha, N, L0)
    lines = _lines(arr.n, arr.field.p)
    omega_n = condition_mask(lines, SchubertCondition.omega(N))
    omega_l0 = condition_mask(lines, SchubertCondition.omega(L0))
    left = _union_mask(lines, left_a) | (_union_mask(lines, left_b) & omega_n)
    rhs = _union_mask(lines, right) & omega_l0
    return _compare(lines, left, rhs, l=l, s=s, alpha=alpha)


def lemma52_subspace(arr: Arrangement, tableaux: Sequence[Tableau], s: int, alpha: int,
                     seed: int, attempts: int = 500) -> Subspace:
    """Random ``N`` of codimension ``alpha - s`` meeting the arrangement properly."""
    l = tableaux[0].degree
    rng = random.Random(seed)
    inner = arr.F(l + alpha - s + 1)
    amb = Subspace.ambient(arr.field, arr.n)
    for _ in range(attempts):
        N = random_subspace_between(inner, amb, alpha - s, rng)
        if not properness_failures(arr, N, l, s + 1, alpha, tableaux):
            return N
    raise RuntimeError("no properly meeting subspace found")


def generic_section(N: Subspace, seed: int) -> Subspace:
    """``N`` cut by a random hyperplane (a wrong ``L_0`` for negative controls)."""
    rng = random.Random(seed)
    while True:
        h = random_subspace(N.n, 1, N.field, rng)
        cut = N.meet(h)
        if cut.codim == N.codim + 1:
            return cut
