"""Finite integer sets and the dilated sumset A + k.B.

Sets are immutable, strictly increasing tuples of signed integers that must
fit a signed 64-bit word.  All sumset-family operations are computed with a
dense bit-vector kernel: the dilate k.B is packed into one Python int and
the result is the union of its shifts by the elements of A.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from pathlib import Path
from typing import Iterable, Iterator, Sequence

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

# Span (in bits) above which the kernel falls back to hashing pairwise sums.
DENSE_SPAN_LIMIT = 1 << 24


def check_int64(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{value} does not fit a signed 64-bit integer")
    return value


@dataclass(frozen=True)
class IntSet:
    """A finite set of integers stored as a strictly increasing tuple."""

    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        els = self.elements
        if not isinstance(els, tuple):
            els = tuple(els)
            object.__setattr__(self, "elements", els)
        for x, y in zip(els, els[1:]):
            if x >= y:
                raise ValueError("IntSet elements must be strictly increasing")
        if els:
            check_int64(els[0])
            check_int64(els[-1])

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._members

    def __getitem__(self, i: int) -> int:
        return self.elements[i]

    def __bool__(self) -> bool:
        return bool(self.elements)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    @property
    def _members(self) -> frozenset[int]:
        cached = self.__dict__.get("_frozen")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_frozen", cached)
        return cached

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def to_list(self) -> list[int]:
        return list(self.elements)

    def union(self, other: IntSet) -> IntSet:
        return IntSet(tuple(sorted(self._members | other._members)))

    def intersection(self, other: IntSet) -> IntSet:
        return IntSet(tuple(sorted(self._members & other._members)))

    def difference(self, other: IntSet) -> IntSet:
        return IntSet(tuple(x for x in self.elements if x not in other._members))

    def issubset(self, other: IntSet) -> bool:
        return self._members <= other._members


def make_set(values: Iterable[int]) -> IntSet:
    """Sort and deduplicate ``values`` into an IntSet."""
    return IntSet(tuple(sorted({check_int64(int(v)) for v in values})))


def _require_nonempty(*sets: IntSet) -> None:
    for s in sets:
        if not s:
            raise ValueError("operation requires nonempty sets")


def _bits_to_elements(mask: int, offset: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1 + offset)
        mask ^= low
    return tuple(out)


def dilated_mask(a: IntSet, k: int, b: IntSet) -> tuple[int, int]:
    """Bit-vector of a + k.b as ``(mask, offset)``: bit i set iff i + offset is a sum.

    Caller guarantees both sets are nonempty and the span is small enough.
    """
    lo_a, lo_b = a.elements[0], b.elements[0]
    kb = 0
    for y in b.elements:
        kb |= 1 << (k * (y - lo_b))
    acc = 0
    for x in a.elements:
        acc |= kb << (x - lo_a)
    return acc, lo_a + k * lo_b


def add_dilated(a: IntSet, k: int, b: IntSet) -> IntSet:
    """Return a + k.b = {x + k*y : x in a, y in b}."""
    if k < 1:
        raise ValueError("dilation factor must be positive")
    _require_nonempty(a, b)
    lo = check_int64(a.min + k * b.min)
    check_int64(a.max + k * b.max)
    span = (a.max - a.min) + k * (b.max - b.min)
    if span > DENSE_SPAN_LIMIT:
        return IntSet(tuple(sorted({x + k * y for x in a for y in b})))
    mask, offset = dilated_mask(a, k, b)
    assert offset == lo
    return IntSet(_bits_to_elements(mask, offset))


def add_dilated_size(a: IntSet, k: int, b: IntSet) -> int:
    """|a + k.b| without materializing the elements."""
    if k < 1:
        raise ValueError("dilation factor must be positive")
    _require_nonempty(a, b)
    check_int64(a.min + k * b.min)
    check_int64(a.max + k * b.max)
    span = (a.max - a.min) + k * (b.max - b.min)
    if span > DENSE_SPAN_LIMIT:
        return len({x + k * y for x in a for y in b})
    return dilated_mask(a, k, b)[0].bit_count()


def sumset(a: IntSet, b: IntSet) -> IntSet:
    return add_dilated(a, 1, b)


def dilate(k: int, a: IntSet) -> IntSet:
    if k < 1:
        raise ValueError("dilation factor must be positive")
    _require_nonempty(a)
    return IntSet(tuple(check_int64(k * x) for x in a))


def translate(a: IntSet, t: int) -> IntSet:
    _require_nonempty(a)
    return IntSet(tuple(check_int64(x + t) for x in a))


def reflect(a: IntSet) -> IntSet:
    """-a = {-x : x in a}."""
    return IntSet(tuple(check_int64(-x) for x in reversed(a.elements)))


def set_gcd(values: Iterable[int]) -> int:
    return reduce(gcd, (abs(v) for v in values), 0)


def gcd_normalize(a: IntSet) -> tuple[IntSet, int]:
    """Divide every element by the gcd of the set; returns (quotient set, gcd)."""
    _require_nonempty(a)
    d = set_gcd(a)
    if d == 0:
        raise ValueError("gcd of {0} is undefined for normalization")
    return IntSet(tuple(x // d for x in a)), d


def canonicalize(a: IntSet) -> IntSet:
    """Canonical representative: min 0, gcd 1, lexicographically least of the set
    and its reflection."""
    if len(a) < 2:
        raise ValueError("canonicalize needs at least two elements")
    shifted = translate(a, -a.min)
    reduced, _ = gcd_normalize(shifted)
    top = reduced.max
    mirrored = tuple(top - x for x in reversed(reduced.elements))
    if mirrored < reduced.elements:
        return IntSet(mirrored)
    return reduced


def diameter(a: IntSet) -> int:
    _require_nonempty(a)
    return a.max - a.min


def parse_set_literal(text: str) -> IntSet:
    """Parse ``"0,1,5"`` (optional whitespace, optional minus signs)."""
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        return IntSet()
    try:
        return make_set(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad set literal {text!r}: {exc}") from None


def read_set_file(path: str | Path) -> IntSet:
    """One integer per line; blank lines and ``#`` comments are skipped."""
    values = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not an integer: {line!r}") from None
    return make_set(values)


def format_set(a: Sequence[int] | IntSet, limit: int | None = None) -> str:
    els = list(a)
    if limit is not None and len(els) > limit:
        shown = ",".join(map(str, els[:limit]))
        return "{" + shown + f",... ({len(els) - limit} more)" + "}"
    return "{" + ",".join(map(str, els)) + "}"
