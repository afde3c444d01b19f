"""The acceptance matrix: twelve end-to-end checks with deterministic seeds.

Each check returns ``(passed, detail)``; :func:`run` times them and is shared by
the ``accept`` subcommand and the test suite.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import arrangements as arr_mod
from . import ffverify as ff
from .chow import basis, intersection_number, product, product_by_pieri
from .linalg import QQ, PrimeField, Subspace, random_flag, random_subspace
from .plactic import FormalSum, circ, circ_sums, lr_ballot
from .tableau import (Tableau, enumerate_standard, hook_length_count, partitions_of,
                      star_extend, star_set, EMPTY)

STAR_GOLDEN = [Tableau.of([[1, 2, 3, 5, 6, 7, 8], [4]]),
               Tableau.of([[1, 2, 3, 6, 7, 8], [4, 5]]),
               Tableau.of([[1, 2, 3, 7, 8], [4, 5, 6]])]

CIRC_GOLDEN = [Tableau.of([[1, 2, 3, 5, 6, 7, 8], [4]]),
               Tableau.of([[1, 2, 3, 6, 7, 8], [4, 5]]),
               Tableau.of([[1, 2, 3, 7, 8], [4, 5, 6]]),
               Tableau.of([[1, 2, 3, 6, 7, 8], [4], [5]]),
               Tableau.of([[1, 2, 3, 7, 8], [4, 6], [5]]),
               Tableau.of([[1, 2, 3, 8], [4, 6, 7], [5]])]


def all_tableaux(max_degree: int) -> list[Tableau]:
    return [t for d in range(max_degree + 1) for lam in partitions_of(d) for t in enumerate_standard(lam)]


def random_tableau(rng: random.Random, max_degree: int) -> Tableau:
    d = rng.randint(0, max_degree)
    if d == 0:
        return EMPTY
    return rng.choice(enumerate_standard(rng.choice(partitions_of(d))))


def check_star_golden() -> tuple[bool, str]:
    got = star_extend(Tableau.of([[1, 2, 3], [4]]), 4)
    return got == STAR_GOLDEN, f"{len(got)} tableaux"


def check_circ_golden() -> tuple[bool, str]:
    got = circ(Tableau.of([[1, 2, 3], [4]]), Tableau.of([[1, 2, 3, 4]]))
    ok = sorted(got) == sorted(CIRC_GOLDEN) and all(c == 1 for _, c in got.items())
    return ok, f"{len(got)} terms"


def check_associativity(samples: int = 200, seed: int = 0) -> tuple[bool, str]:
    small = all_tableaux(3)
    for r in small:
        for s in small:
            rs = circ(r, s)
            for t in small:
                if circ_sums(rs, FormalSum.of(t)) != circ_sums(FormalSum.of(r), circ(s, t)):
                    return False, f"fails on {r}, {s}, {t}"
    rng = random.Random(seed)
    for _ in range(samples):
        r, s, t = (random_tableau(rng, 5) for _ in range(3))
        if circ_sums(circ(r, s), FormalSum.of(t)) != circ_sums(FormalSum.of(r), circ(s, t)):
            return False, f"fails on {r}, {s}, {t}"
    one, two = Tableau.of([[1]]), Tableau.of([[1, 2]])
    left = FormalSum({Tableau.of([[1, 2, 3]]): 1, Tableau.of([[1, 3], [2]]): 1})
    right = FormalSum({Tableau.of([[1, 2, 3]]): 1, Tableau.of([[1, 2], [3]]): 1})
    witness = circ(one, two) == left and circ(two, one) == right and left != right
    return witness, f"{len(small) ** 3} exhaustive + {samples} random triples; witness {'ok' if witness else 'wrong'}"


def check_lr(max_total: int = 8) -> tuple[bool, str]:
    pairs = 0
    for total in range(max_total + 1):
        for a in range(total + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(total - a):
                    pairs += 1
                    ms, ns = enumerate_standard(mu), enumerate_standard(nu)
                    for S, T in ((ms[0], ns[0]), (ms[-1], ns[-1])):
                        graded = circ(S, T).by_shape()
                        for lam in partitions_of(total):
                            if graded.get(lam, 0) != lr_ballot(lam, mu, nu):
                                return False, f"mismatch at {lam}, {mu}, {nu}"
    return True, f"{pairs} shape pairs"


def check_pieri(max_n: int = 6) -> tuple[bool, str]:
    count = 0
    for n in range(2, max_n + 1):
        b = basis(n)
        for x in b:
            for y in b:
                count += 1
                if product([x, y], n) != product_by_pieri([x, y], n):
                    return False, f"pair {x}, {y} in n={n}"
                for z in b:
                    count += 1
                    if product([x, y, z], n) != product_by_pieri([x, y, z], n):
                        return False, f"triple {x}, {y}, {z} in n={n}"
    return True, f"{count} products"


def check_catalan() -> tuple[bool, str]:
    values = []
    for n in (3, 4, 5, 6):
        s = n - 1
        v = intersection_number([(1, 0)] * (2 * n - 2), n)
        values.append(v)
        if not (v == len(enumerate_standard((s, s))) == hook_length_count((s, s))
                == factorial(2 * s) // (factorial(s) * factorial(s + 1))):
            return False, f"n={n}: {v}"
    return values == [2, 5, 14, 42], f"values {values}"


def check_segre_ff() -> tuple[bool, str]:
    details = []
    for n, q in ((2, 5), (3, 7)):
        inst = ff.segre_instance(n, PrimeField(q))
        report = ff.solve(inst.problem)
        ok = (report.count == n and set(report.lines) == set(inst.predicted)
              and report.predicted == n and report.distinct)
        details.append(f"P^{2 * n - 1}(F{q}): {report.count} of {ff.count_lines(2 * n - 1, q)} lines")
        if not ok:
            return False, "; ".join(details)
    return True, "; ".join(details)


def check_segre_rational() -> tuple[bool, str]:
    for n in (2, 3, 4):
        inst = ff.segre_instance(n, QQ)
        for ell in inst.predicted:
            if not all(isinstance(x, Fraction) and x.denominator == 1 for row in ell for x in row):
                return False, f"non-integer coordinates for n={n}"
            for L in inst.planes:
                if not ff.line_satisfies(ell, arr_mod.SchubertCondition.omega(L)):
                    return False, f"incidence fails for n={n}"
        if len(set(inst.predicted)) != n:
            return False, f"predicted lines not distinct for n={n}"
    return True, "n = 2, 3, 4 over Q"


def check_scroll() -> tuple[bool, str]:
    report = ff.verify_scroll(ff.scroll_instance(2, PrimeField(5)))
    refused = 0
    for n, q in ((4, 2), (5, 3), (6, 3)):
        try:
            ff.scroll_instance(n, PrimeField(q))
        except ValueError:
            refused += 1
    ok = report["ok"] and report["pullback_equals_F"] and refused == 3
    return ok, f"meeting {report['meeting']}, refused {refused}/3"


def check_arrangement_bound(max_seed: int = 100) -> tuple[bool, str]:
    found = None
    for seed in range(max_seed + 1):
        try:
            a = arr_mod.build(4, PrimeField(3), seed=seed)
        except arr_mod.ArrangementNotFound:
            continue
        report = arr_mod.verify(a)
        if report.definition_ok and report.levels_ok:
            found = seed
            break
    bounds = (arr_mod.s_bound(5), arr_mod.s_bound(6))
    return found is not None and bounds == (6, 17), f"seed {found}, bounds {bounds}"


def check_pencils(seed: int = 0) -> tuple[bool, str]:
    checked = 0
    for q in (5, 7):
        fld = PrimeField(q)
        for n in range(2, 6):
            rng = random.Random(seed * 1000 + q * 10 + n)
            flag = random_flag(n, fld, rng.randrange(2 ** 32))
            while True:
                l_inf = random_subspace(n, 1, fld, rng)
                if not flag[n] <= l_inf:
                    break
            report = arr_mod.pencil_verify(arr_mod.pencil_make(flag, l_inf))
            checked += 1
            if not report["ok"]:
                return False, f"n={n}, q={q}"
    return True, f"{checked} pencils"


def _lemma52_cases():
    one = [Tableau.of([[1]])]
    two = star_set(one, 1)
    return [(3, one, 0, 2), (4, two, 1, 2)]


def check_lemmas(instances: int = 3) -> tuple[bool, str]:
    q = 5
    counts = {"lemma24": 0, "restriction": 0, "lemma52": 0, "controls": 0}
    for n in (3, 4):
        for seed in range(instances):
            F, P, N, H = ff.lemma24_instance(n, q, seed)
            if not ff.check_lemma_24(F, P, N, H)["equal"]:
                return False, f"lemma24 fails n={n} seed={seed}"
            counts["lemma24"] += 1
            K, M = ff.restriction_instance(n, q, seed)
            if not ff.check_restriction(K, M)["equal"]:
                return False, f"restriction fails n={n} seed={seed}"
            counts["restriction"] += 1
        # negative control: F not strictly inside P ∩ H is rejected
        F, P, N, H = ff.lemma24_instance(n, q, 0)
        try:
            ff.check_lemma_24(P.meet(H), P, N, H)
        except ValueError:
            counts["controls"] += 1
        # negative control: a wrong inner space on the right-hand side
        K, M = ff.restriction_instance(n, q, 0)
        wrong = ff.generic_section(M, 5) if K.meet(M).is_empty else K.meet(M).meet(
            random_subspace(n, 1, PrimeField(q), 7))
        if not ff.check_restriction(K, M, replacement=wrong)["equal"]:
            counts["controls"] += 1
    for n, tabs, s, alpha in _lemma52_cases():
        for seed in range(instances):
            a = arr_mod.build(n, PrimeField(q), seed=seed)
            N = ff.lemma52_subspace(a, tabs, s, alpha, seed)
            if not ff.check_lemma_52(a, tabs, s, alpha, N)["equal"]:
                return False, f"lemma52 fails n={n} seed={seed}"
            counts["lemma52"] += 1
        a = arr_mod.build(n, PrimeField(q), seed=0)
        N = ff.lemma52_subspace(a, tabs, s, alpha, 0)
        if not ff.check_lemma_52(a, tabs, s, alpha, N, L0=ff.generic_section(N, 1))["equal"]:
            counts["controls"] += 1
    ok = counts["lemma24"] >= 6 and counts["restriction"] >= 6 and counts["lemma52"] >= 6 and counts["controls"] == 6
    return ok, ", ".join(f"{k}: {v}" for k, v in counts.items())


@dataclass(frozen=True)
class Criterion:
    id: int
    name: str
    check: Callable[[], tuple[bool, str]]
    budget: float  # seconds


CRITERIA = [
    Criterion(1, "star extension golden", check_star_golden, 1),
    Criterion(2, "tableau product golden", check_circ_golden, 1),
    Criterion(3, "associativity and non-commutativity", check_associativity, 120),
    Criterion(4, "shape-graded product equals LR coefficients", check_lr, 300),
    Criterion(5, "tableau product rule equals Pieri", check_pieri, 60),
    Criterion(6, "Catalan intersection numbers", check_catalan, 60),
    Criterion(7, "Segre instance over F5 and F7", check_segre_ff, 600),
    Criterion(8, "Segre instance over Q", check_segre_rational, 1),
    Criterion(9, "scroll instance over F5", check_scroll, 1),
    Criterion(10, "arrangement in P^4 over F3 and size bounds", check_arrangement_bound, 120),
    Criterion(11, "pencils over F5 and F7", check_pencils, 60),
    Criterion(12, "set-equality lemmas with negative controls", check_lemmas, 300),
]


@dataclass
class Outcome:
    criterion: Criterion
    passed: bool
    detail: str
    seconds: float

    @property
    def within_budget(self) -> bool:
        return self.seconds <= self.criterion.budget

    def line(self) -> str:
        mark = "PASS" if self.passed and self.within_budget else "FAIL"
        return (f"[{mark}] {self.criterion.id:>2}. {self.criterion.name}: {self.detail} "
                f"({self.seconds:.2f}s, budget {self.criterion.budget:g}s)")

    def to_json(self) -> dict:
        return {"id": self.criterion.id, "name": self.criterion.name,
                "passed": self.passed, "detail": self.detail}


def run_one(c: Criterion) -> Outcome:
    start = time.perf_counter()
    try:
        passed, detail = c.check()
    except Exception as exc:  # a crash is a failure with its message
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return Outcome(c, passed, detail, time.perf_counter() - start)


def run(only: set[int] | None = None) -> list[Outcome]:
    return [run_one(c) for c in CRITERIA if only is None or c.id in only]
