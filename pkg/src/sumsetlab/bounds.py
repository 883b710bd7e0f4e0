"""Closed-form lower bounds for |A + k.A| and the extremal family."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .core_sets import IntSet, add_dilated_size, check_int64, make_set

PRIME = "prime"
PRIME_POWER = "prime_power"
SEMIPRIME = "semiprime"
OTHER = "other"


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError("k must be at least 2")


def chs_bound(k: int, size: int) -> int:
    """(k+1)|A| - ceil(k(k+2)/4)."""
    _check_k(k)
    return (k + 1) * size - (-(-k * (k + 2) // 4))


def factorial_bound(k: int, size: int) -> int:
    """(k+1)|A| - k!; may be negative for small |A|."""
    _check_k(k)
    if k > 20:
        raise OverflowError("k! does not fit 64 bits for k > 20")
    return (k + 1) * size - factorial(k)


def elementary_bound(size: int, j: int, b_size: int) -> int:
    """|A| + j(|B| - 1), the trivial bound from the class decomposition."""
    if j < 1 or size < 1 or b_size < 1:
        raise ValueError("sizes and class count must be positive")
    return size + j * (b_size - 1)


def threshold(k: int) -> int:
    """(k-1)^2 k!, the size from which (k+1)|A| - ceil(k(k+2)/4) is proved."""
    _check_k(k)
    return check_int64((k - 1) ** 2 * factorial(k))


def factorize(n: int) -> dict[int, int]:
    """Trial division; returns {prime: exponent}."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def classify_k(k: int) -> str:
    """One of prime, prime_power, semiprime, other."""
    _check_k(k)
    fac = factorize(k)
    if len(fac) == 1:
        return PRIME if next(iter(fac.values())) == 1 else PRIME_POWER
    if len(fac) == 2 and all(e == 1 for e in fac.values()):
        return SEMIPRIME
    return OTHER


def is_prime_power(k: int) -> bool:
    return k >= 2 and len(factorize(k)) == 1


def semiprime_factors(k: int) -> tuple[int, int] | None:
    fac = factorize(k)
    if len(fac) == 2 and all(e == 1 for e in fac.values()):
        p, q = sorted(fac)
        return p, q
    return None


def deficiency(k: int, h: int) -> int:
    """h(k+1-h): how far the family with block length h sits below (k+1)|A|."""
    return h * (k + 1 - h)


def extremal_h_options(k: int) -> frozenset[int]:
    _check_k(k)
    if k % 2 == 0:
        return frozenset({k // 2, (k + 2) // 2})
    return frozenset({(k + 1) // 2})


@dataclass(frozen=True)
class BoundReport:
    k: int
    size: int
    chs_bound: int
    factorial_bound: int | None
    threshold: int | None
    k_class: str

    def elementary_bound(self, j: int, b_size: int) -> int:
        return elementary_bound(self.size, j, b_size)

    @property
    def theorem_covers(self) -> bool:
        """Whether the chs bound is proved for this k at this size."""
        if self.k == 4 and self.size >= 5:
            return True
        return self.k_class in (PRIME, PRIME_POWER, SEMIPRIME) and (
            self.threshold is not None and self.size >= self.threshold
        )


def bound_report(k: int, size: int) -> BoundReport:
    _check_k(k)
    if size < 1:
        raise ValueError("size must be positive")
    try:
        fb = factorial_bound(k, size)
    except OverflowError:
        fb = None
    try:
        th = threshold(k)
    except OverflowError:
        th = None
    return BoundReport(k, size, chs_bound(k, size), fb, th, classify_k(k))


@dataclass(frozen=True)
class ExtremalFamily:
    """k.{0,...,n} + {0,...,h-1}."""

    k: int
    n: int
    h: int
    set: IntSet

    @property
    def interval_regime(self) -> bool:
        return self.n >= self.k - self.h


def build_extremal(k: int, n: int, h: int) -> ExtremalFamily:
    _check_k(k)
    if not 1 <= h <= k:
        raise ValueError(f"h must lie in 1..{k}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    fam = ExtremalFamily(k, n, h, make_set(k * i + r for i in range(n + 1) for r in range(h)))
    if len(fam.set) != h * (n + 1):
        raise AssertionError("extremal family has the wrong size")
    if fam.interval_regime:
        got = add_dilated_size(fam.set, k, fam.set)
        if got != (k + 1) * len(fam.set) - deficiency(k, h):
            raise AssertionError(f"extremal family k={k} n={n} h={h}: |A+kA|={got}")
    return fam


@dataclass(frozen=True)
class EqualityReport:
    lhs: int
    rhs: int
    equal: bool
    chs: int
    matches_chs: bool


def check_extremal_equality(fam: ExtremalFamily) -> EqualityReport:
    """Compare |A+kA| for the family against the bound it should attain."""
    if not fam.interval_regime:
        raise ValueError(f"n={fam.n} < k-h={fam.k - fam.h}: no equality claim in this regime")
    k, size = fam.k, len(fam.set)
    lhs = add_dilated_size(fam.set, k, fam.set)
    chs = chs_bound(k, size)
    if fam.h in extremal_h_options(k):
        rhs = chs
    else:
        rhs = (k + 1) * size - deficiency(k, fam.h)
    return EqualityReport(lhs, rhs, lhs == rhs, chs, lhs == chs)
