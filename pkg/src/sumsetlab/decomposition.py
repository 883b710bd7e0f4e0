"""Residue-class decomposition A = U (k.X_i + u_i) and the per-class checkers.

Class indices are 1-based everywhere in this module, so ``d.size(1)`` is
|A_1|, the largest class.  Classes are ordered by size (descending), ties by
ascending offset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .bounds import factorial_bound, factorize, is_prime_power, semiprime_factors
from .core_sets import (
    IntSet,
    add_dilated,
    add_dilated_size,
    set_gcd,
    sumset,
    translate,
)
from .modular import ResidueSet, project


class HypothesisError(ValueError):
    """The input does not satisfy the hypotheses of the requested lemma."""


@dataclass(frozen=True)
class ResidueClass:
    offset: int
    quotient: IntSet

    def __len__(self) -> int:
        return len(self.quotient)


@dataclass(frozen=True)
class Decomposition:
    k: int
    base: IntSet
    classes: tuple[ResidueClass, ...]
    E: tuple[int, ...]
    F: tuple[int, ...]

    @property
    def j(self) -> int:
        return len(self.classes)

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(c.offset for c in self.classes)

    def _cls(self, i: int) -> ResidueClass:
        if not 1 <= i <= self.j:
            raise IndexError(f"class index {i} outside 1..{self.j}")
        return self.classes[i - 1]

    def u(self, i: int) -> int:
        return self._cls(i).offset

    def X(self, i: int) -> IntSet:
        return self._cls(i).quotient

    def size(self, i: int) -> int:
        return len(self._cls(i))

    def part(self, i: int) -> IntSet:
        """A_i = k.X_i + u_i as a set of integers."""
        c = self._cls(i)
        return IntSet(tuple(self.k * x + c.offset for x in c.quotient))

    def projection(self, i: int) -> ResidueSet:
        """The image of X_i in Z/kZ."""
        return project(self.X(i), self.k)

    def prefix_size(self, upto: int) -> int:
        """|A_1| + ... + |A_upto| (zero when upto < 1)."""
        return sum(len(c) for c in self.classes[: max(upto, 0)])


def decompose(a: IntSet, k: int) -> Decomposition:
    if not a:
        raise ValueError("cannot decompose an empty set")
    if k < 2:
        raise ValueError("k must be at least 2")
    groups: dict[int, list[int]] = {}
    for x in a:
        groups.setdefault(x % k, []).append(x)
    classes = sorted(
        (ResidueClass(u, IntSet(tuple((x - u) // k for x in xs))) for u, xs in groups.items()),
        key=lambda c: (-len(c), c.offset),
    )
    E, F = [], []
    for i, c in enumerate(classes, 1):
        width = len(project(c.quotient, k))
        (F if width == k else E).append(i)
    return Decomposition(k, a, tuple(classes), tuple(E), tuple(F))


@dataclass(frozen=True)
class NormalizationStep:
    rule: str  # "gcd", "translate" or "collapse"
    amount: int
    before: IntSet
    after: IntSet
    size_before: int
    size_after: int
    justification: str


_JUSTIFY = {
    "gcd": "dilation invariance: |A/d + k.(A/d)| = |A + k.A|",
    "translate": "translation invariance: |(A-t) + k.(A-t)| = |A + k.A|",
    "collapse": "single class: A = k.X_1 + u_1 gives |A + k.A| = |X_1 + k.X_1|",
}


def normalize(a: IntSet, k: int) -> tuple[IntSet, list[NormalizationStep]]:
    """Reduce to gcd 1, largest class at offset 0 and at least two classes.

    Steps are applied repeatedly in the order gcd division, translation,
    collapse of a single class, until none applies.
    """
    if len(a) < 2:
        raise ValueError("normalization needs at least two elements")
    if k < 2:
        raise ValueError("k must be at least 2")
    log: list[NormalizationStep] = []
    cur = a

    def record(rule: str, amount: int, new: IntSet) -> None:
        log.append(
            NormalizationStep(
                rule,
                amount,
                cur,
                new,
                add_dilated_size(cur, k, cur),
                add_dilated_size(new, k, new),
                _JUSTIFY[rule],
            )
        )

    while True:
        g = set_gcd(cur)
        if g > 1:
            new = IntSet(tuple(x // g for x in cur))
            record("gcd", g, new)
            cur = new
            continue
        d = decompose(cur, k)
        u1 = d.u(1)
        if u1:
            new = translate(cur, -u1)
            record("translate", -u1, new)
            cur = new
            continue
        if d.j == 1:
            new = d.X(1)
            record("collapse", k, new)
            cur = new
            continue
        return cur, log


def normalized_decomposition(a: IntSet, k: int) -> Decomposition:
    return decompose(normalize(a, k)[0], k)


@dataclass(frozen=True)
class DeltaEntry:
    r: int
    s: int
    delta: IntSet


def delta(d: Decomposition, r: int, s: int) -> DeltaEntry:
    """(A_r + k.A) minus (A_r + k.A_s)."""
    ar = d.part(r)
    full = add_dilated(ar, d.k, d.base)
    partial = add_dilated(ar, d.k, d.part(s))
    return DeltaEntry(r, s, full.difference(partial))


def delta_size(d: Decomposition, r: int, s: int) -> int:
    # A_r + k.A_s is contained in A_r + k.A, so the difference is a count.
    ar = d.part(r)
    return add_dilated_size(ar, d.k, d.base) - add_dilated_size(ar, d.k, d.part(s))


def diagonal_delta_sizes(d: Decomposition) -> tuple[int, ...]:
    return tuple(delta_size(d, i, i) for i in range(1, d.j + 1))


@dataclass(frozen=True)
class Inequality:
    """``lhs >= rhs`` (or ``lhs >= alternative`` when a disjunction is stated)."""

    label: str
    lhs: int
    rhs: int
    alternative: int | None = None

    @property
    def holds(self) -> bool:
        if self.lhs >= self.rhs:
            return True
        return self.alternative is not None and self.lhs >= self.alternative


@dataclass(frozen=True)
class LemmaCheck:
    lemma: str
    normalized: IntSet
    decomposition: Decomposition
    checks: tuple[Inequality, ...]
    notes: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def failures(self) -> tuple[Inequality, ...]:
        return tuple(c for c in self.checks if not c.holds)


# -- class identity --------------------------------------------------------


def _ap_difference(xs: IntSet) -> int | None:
    """Common difference if xs (|xs| >= 2) is an arithmetic progression."""
    diffs = {y - x for x, y in zip(xs, xs.elements[1:])}
    return diffs.pop() if len(diffs) == 1 else None


@dataclass(frozen=True)
class IdentityReport:
    lhs: int
    rhs: int
    equal: bool
    bound: int
    elementary_bound_holds: bool
    equality_case: bool
    structure: str | None

    @property
    def structure_consistent(self) -> bool:
        return not self.equality_case or self.structure is not None


def component_identity_check(a: IntSet, b: IntSet, k: int) -> IdentityReport:
    """|A + k.B| against the sum of |X_i + B| and the bound |A| + j(|B|-1)."""
    if not a or not b:
        raise ValueError("sets must be nonempty")
    d = decompose(a, k)
    lhs = add_dilated_size(a, k, b)
    rhs = sum(len(sumset(c.quotient, b)) for c in d.classes)
    bound = len(a) + d.j * (len(b) - 1)
    structure = None
    if lhs == bound:
        if len(b) == 1:
            structure = "single_b"
        elif all(len(c) == 1 for c in d.classes):
            structure = "singleton_classes"
        else:
            diffs = {_ap_difference(b)}
            diffs.update(_ap_difference(c.quotient) for c in d.classes if len(c) > 1)
            if len(diffs) == 1 and None not in diffs:
                structure = "common_difference_aps"
    return IdentityReport(lhs, rhs, lhs == rhs, bound, lhs >= bound, lhs == bound, structure)


# -- Delta sums ------------------------------------------------------------


@dataclass(frozen=True)
class DeltaSumReport:
    indices: tuple[int, ...]
    sum: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.sum >= self.bound


def delta_sum_check(d: Decomposition, indices, sizes: tuple[int, ...] | None = None) -> DeltaSumReport:
    """Sum of |Delta_ii| over the index set against |I|(|I|-1)."""
    idx = tuple(sorted(set(indices)))
    if not idx:
        raise ValueError("index set must be nonempty")
    if idx[0] < 1 or idx[-1] > d.j:
        raise IndexError(f"indices must lie in 1..{d.j}")
    if sizes is None:
        total = sum(delta_size(d, i, i) for i in idx)
    else:
        total = sum(sizes[i - 1] for i in idx)
    return DeltaSumReport(idx, total, len(idx) * (len(idx) - 1))


def all_index_subsets(j: int):
    for r in range(1, j + 1):
        yield from combinations(range(1, j + 1), r)


# -- prime-power k ---------------------------------------------------------


def special_index(d: Decomposition, p: int) -> int:
    """Least class index whose offset is not divisible by p."""
    for i, u in enumerate(d.offsets, 1):
        if u % p:
            return i
    raise HypothesisError(f"every offset is divisible by {p}; the set is not gcd-normalized")


special_index_m = special_index


def _sum_with_quotient(d: Decomposition, i: int) -> int:
    """|X_i + A|."""
    return len(sumset(d.X(i), d.base))


def wo_check(a: IntSet, k: int) -> LemmaCheck:
    """Delta bounds for prime-power k, evaluated on the normalized set."""
    if not is_prime_power(k):
        raise HypothesisError(f"k={k} is not a prime power")
    base, _ = normalize(a, k)
    d = decompose(base, k)
    (p,) = factorize(k)
    m = special_index(d, p)
    am = d.size(m)
    checks = []
    for i in d.E:
        if i != m:
            checks.append(Inequality(f"|D_{i}{i}| >= |A_{m}|", delta_size(d, i, i), am))
    width = len(d.projection(m))
    if width + m - 1 <= k:
        checks.append(
            Inequality("|D_mm| >= |A_1|+...+|A_(m-1)|", delta_size(d, m, m), d.prefix_size(m - 1))
        )
    else:
        rhs = (k + 1) * am + m * (d.size(1) - am) - k
        checks.append(Inequality(f"|X_{m}+A| >= (k+1)|A_m|+m(|A_1|-|A_m|)-k", _sum_with_quotient(d, m), rhs))
    return LemmaCheck("wo", base, d, tuple(checks), {"m": m, "p": p, "projection_width": width})


# -- k = p1 p2 -------------------------------------------------------------


def changsui_check(a: IntSet, k: int) -> LemmaCheck:
    """Delta and |X_n + A| bounds for k a product of two distinct primes."""
    primes = semiprime_factors(k)
    if primes is None:
        raise HypothesisError(f"k={k} is not a product of two distinct primes")
    base, _ = normalize(a, k)
    d = decompose(base, k)
    u2 = d.u(2)
    g = gcd(u2, k)
    checks: list[Inequality] = []
    notes: dict = {"offset_gcd": set_gcd(d.offsets)}
    E = set(d.E)
    if g == 1:
        notes["case"] = "u2_unit"
        if 2 in E:
            checks.append(Inequality("|D_22| >= |A_1|", delta_size(d, 2, 2), d.size(1)))
        for i in sorted(E - {2}):
            checks.append(Inequality(f"|D_{i}{i}| >= |A_2|", delta_size(d, i, i), d.size(2)))
        return LemmaCheck("changsui", base, d, tuple(checks), notes)

    p1 = g
    p2 = k // p1
    n = special_index(d, p1)
    an = d.size(n)
    notes.update(case="u2_shares_prime", p1=p1, p2=p2, n=n)
    if 1 in E:
        checks.append(Inequality("|D_11| >= |A_2| or p2|A_n|", delta_size(d, 1, 1), d.size(2), p2 * an))
    for i in sorted(E):
        if 2 <= i <= n - 1:
            checks.append(Inequality(f"|D_{i}{i}| >= |A_1| or p2|A_n|", delta_size(d, i, i), d.size(1), p2 * an))
        elif i > n:
            checks.append(Inequality(f"|D_{i}{i}| >= |A_n|", delta_size(d, i, i), an))
    if n in E:
        dnn = delta_size(d, n, n)
        checks.append(Inequality(f"|D_{n}{n}| >= |A_2|", dnn, d.size(2)))
        width = len(d.projection(n))
        notes["projection_width"] = width
        a1 = d.size(1)
        if width >= p1 > p2:
            checks.append(Inequality("|X_n+A| >= |A_n|+p1|A_1|-k", _sum_with_quotient(d, n), an + p1 * a1 - k))
        elif width >= p2 > p1:
            checks.append(Inequality("|X_n+A| >= |A_n|+p2|A_1|-k", _sum_with_quotient(d, n), an + p2 * a1 - k))
        elif p1 <= width < p2:
            ell = min(n - 1, p2 + 1 - width)
            notes["l"] = ell
            rhs = an + width * a1 + (d.prefix_size(ell) - a1 if ell >= 2 else 0) - k
            checks.append(
                Inequality("|X_n+A| >= |A_n|+|X^_n||A_1|+|A_2|+...+|A_l|-k", _sum_with_quotient(d, n), rhs)
            )
        else:
            checks.append(Inequality("|D_nn| >= |A_1|+...+|A_{n-1}|", dnn, d.prefix_size(n - 1)))
    return LemmaCheck("changsui", base, d, tuple(checks), notes)


# -- small classes, k = 4 --------------------------------------------------


def _small_class_checks(a: IntSet, classes_wanted: int, slack: int, lemma: str) -> LemmaCheck:
    base, _ = normalize(a, 4)
    d = decompose(base, 4)
    if len(base) < 5:
        raise HypothesisError("needs |A| >= 5")
    if d.j != classes_wanted:
        raise HypothesisError(f"needs exactly {classes_wanted} classes mod 4, found {d.j}")
    if classes_wanted == 2 and d.u(2) % 2 == 0:
        raise HypothesisError("needs an odd second offset")
    checks = []
    n = len(base)
    for i in range(1, d.j + 1):
        ai = d.size(i)
        if ai <= 4:
            lhs = add_dilated_size(d.part(i), 4, base)
            checks.append(Inequality(f"|A_{i}+4A| >= |A|+{slack}|A_{i}|-{slack}", lhs, n + slack * ai - slack))
    return LemmaCheck(lemma, base, d, tuple(checks))


def x3_check(a: IntSet) -> LemmaCheck:
    """Three classes mod 4: |A_i + 4.A| >= |A| + 2|A_i| - 2 for |A_i| <= 4."""
    return _small_class_checks(a, 3, 2, "x3")


def x2_check(a: IntSet) -> LemmaCheck:
    """Two classes mod 4, odd offset: |A_i + 4.A| >= |A| + 3|A_i| - 3 for |A_i| <= 4."""
    return _small_class_checks(a, 2, 3, "x2")


def factorial_check(a: IntSet, k: int) -> Inequality:
    """|A + k.A| >= (k+1)|A| - k!, proved for prime powers and semiprimes."""
    if not (is_prime_power(k) or semiprime_factors(k)):
        raise HypothesisError(f"k={k} is neither a prime power nor a semiprime")
    return Inequality("|A+kA| >= (k+1)|A|-k!", add_dilated_size(a, k, a), factorial_bound(k, len(a)))

