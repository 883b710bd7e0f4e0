"""Residue sets in Z/kZ and the checkers built on them.

A ResidueSet is a bit-vector of width ``modulus``; bit r is set iff the
residue r is a member.  Sums are cyclic rotations OR-ed together.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Union

from .core_sets import IntSet, sumset, translate


@dataclass(frozen=True)
class ResidueSet:
    modulus: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if self.mask < 0 or self.mask >> self.modulus:
            raise ValueError("members must lie in 0..modulus-1")

    @classmethod
    def of(cls, modulus: int, residues: Iterable[int]) -> ResidueSet:
        mask = 0
        for r in residues:
            mask |= 1 << (r % modulus)
        return cls(modulus, mask)

    @classmethod
    def full(cls, modulus: int) -> ResidueSet:
        return cls(modulus, (1 << modulus) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(r for r in range(self.modulus) if self.mask >> r & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, r: object) -> bool:
        return isinstance(r, int) and bool(self.mask >> (r % self.modulus) & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "} mod " + str(self.modulus)

    def shift(self, t: int) -> ResidueSet:
        """self + {t}."""
        return ResidueSet(self.modulus, rotate(self.mask, t, self.modulus))

    def union(self, other: ResidueSet) -> ResidueSet:
        _same_modulus(self, other)
        return ResidueSet(self.modulus, self.mask | other.mask)

    def intersection(self, other: ResidueSet) -> ResidueSet:
        _same_modulus(self, other)
        return ResidueSet(self.modulus, self.mask & other.mask)

    def issubset(self, other: ResidueSet) -> bool:
        _same_modulus(self, other)
        return self.mask & ~other.mask == 0


def rotate(mask: int, t: int, n: int) -> int:
    t %= n
    if t == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << t) | (mask >> (n - t))) & full


def sum_masks(a: int, b: int, n: int) -> int:
    """Mask of A + B in Z/nZ."""
    acc = 0
    r = 0
    while b:
        if b & 1:
            acc |= rotate(a, r, n)
        b >>= 1
        r += 1
    return acc


def _same_modulus(a: ResidueSet, b: ResidueSet) -> None:
    if a.modulus != b.modulus:
        raise ValueError(f"modulus mismatch: {a.modulus} != {b.modulus}")


def project(a: IntSet, k: int) -> ResidueSet:
    """Image of a in Z/kZ (nonnegative representatives)."""
    if not a:
        raise ValueError("cannot project an empty set")
    return ResidueSet.of(k, a)


def residue_sumset(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    _same_modulus(a, b)
    if not a or not b:
        raise ValueError("residue sumset requires nonempty sets")
    return ResidueSet(a.modulus, sum_masks(a.mask, b.mask, a.modulus))


@dataclass(frozen=True)
class AdditionReport:
    """Outcome of a Chowla-type inequality |A+B| >= min(n, |A|+|B|-1).

    ``holds`` is the raw comparison; it only says something about the lemma
    when ``applicable`` is true.
    """

    applicable: bool
    holds: bool
    lhs: int
    rhs: int


def chowla_applicable(b: ResidueSet) -> bool:
    n = b.modulus
    return 0 in b and all(gcd(x, n) == 1 for x in b.members if x)


def chowla_check(a: ResidueSet, b: ResidueSet) -> AdditionReport:
    """Chowla: if 0 is in B and B\\{0} are units, |A+B| >= min(n, |A|+|B|-1)."""
    lhs = len(residue_sumset(a, b))
    rhs = min(a.modulus, len(a) + len(b) - 1)
    return AdditionReport(chowla_applicable(b), lhs >= rhs, lhs, rhs)


@dataclass(frozen=True)
class StabilizerReport:
    fixed: bool
    d: int
    cosets: tuple[int, ...]
    reconstructs: bool
    divides: bool

    @property
    def structure(self) -> tuple[int, tuple[int, ...]] | None:
        return (self.d, self.cosets) if self.fixed else None

    @property
    def consistent(self) -> bool:
        """fixed <=> coset reconstruction, and k/d divides |A| when fixed."""
        return self.fixed == self.reconstructs and (not self.fixed or self.divides)


def coset_union(k: int, d: int, cosets: Iterable[int]) -> int:
    """Mask of the union over beta of d.{0,...,k/d-1} + beta."""
    step = 0
    for t in range(k // d):
        step |= 1 << (d * t)
    mask = 0
    for beta in cosets:
        mask |= step << beta
    return mask


def stabilizer_check(a: ResidueSet, alpha: int) -> StabilizerReport:
    """Test A + alpha = A and the coset description of such sets."""
    k = a.modulus
    if not a:
        raise ValueError("stabilizer check needs a nonempty set")
    if not 0 < alpha < k:
        raise ValueError("alpha must be a nonzero residue in 1..k-1")
    fixed = rotate(a.mask, alpha, k) == a.mask
    d = gcd(k, alpha)
    cosets = tuple(beta for beta in range(d) if a.mask >> beta & 1)
    reconstructs = coset_union(k, d, cosets) == a.mask
    divides = len(a) % (k // d) == 0
    return StabilizerReport(fixed, d, cosets, reconstructs, divides)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def improved_chowla_check(a: ResidueSet, b: ResidueSet, q: int) -> AdditionReport:
    """Chowla with one non-unit generator q, valid when {0,q} already grows A."""
    _same_modulus(a, b)
    k = a.modulus
    if k <= 2 or is_prime(k):
        raise ValueError(f"modulus {k} must be composite and greater than 2")
    if not a or not b:
        raise ValueError("sets must be nonempty")
    q %= k
    lhs = len(residue_sumset(a, b))
    rhs = min(k, len(a) + len(b) - 1)
    allowed = {0, q}
    applicable = (
        gcd(q, k) != 1
        and 0 in b
        and all(x in allowed or gcd(x, k) == 1 for x in b.members)
        and len(residue_sumset(a, ResidueSet.of(k, allowed))) >= len(a) + 1
    )
    return AdditionReport(applicable, lhs >= rhs, lhs, rhs)


SetLike = Union[IntSet, ResidueSet]


def e_transform(a: SetLike, b: SetLike, e: int) -> tuple[SetLike, SetLike]:
    """(A(e), B(e)) = (A u (B+e), B n (A-e))."""
    if isinstance(a, IntSet) and isinstance(b, IntSet):
        if not a or not b:
            raise ValueError("e-transform needs nonempty sets")
        return a.union(translate(b, e)), b.intersection(translate(a, -e))
    if isinstance(a, ResidueSet) and isinstance(b, ResidueSet):
        _same_modulus(a, b)
        if not a or not b:
            raise ValueError("e-transform needs nonempty sets")
        return a.union(b.shift(e)), b.intersection(a.shift(-e))
    raise TypeError("e_transform needs two IntSets or two ResidueSets")


@dataclass(frozen=True)
class ETransformReport:
    subset: bool
    cardinality: bool
    new_part: bool
    membership: bool | None  # None when e not in A or 0 not in B

    @property
    def holds(self) -> bool:
        return self.subset and self.cardinality and self.new_part and self.membership is not False


def e_transform_check(a: SetLike, b: SetLike, e: int) -> ETransformReport:
    """Evaluate the e-transform identities on one triple."""
    ae, be = e_transform(a, b, e)
    if isinstance(a, IntSet):
        gained = set(ae) - set(a)
        lost_shifted = {x + e for x in b if x not in be}
        subset = not be or sumset(ae, be).issubset(sumset(a, b))
    else:
        n = a.modulus
        gained = set(ae.members) - set(a.members)
        lost_shifted = {(x + e) % n for x in b.members if x not in be}
        subset = not be or residue_sumset(ae, be).issubset(residue_sumset(a, b))
    membership = (e in ae and 0 in be) if (e in a and 0 in b) else None
    return ETransformReport(
        subset=subset,
        cardinality=len(ae) + len(be) == len(a) + len(b),
        new_part=gained == lost_shifted,
        membership=membership,
    )
