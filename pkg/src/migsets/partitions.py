"""Integer partitions as cycle types of symmetric-group elements.

A partition of n is a non-increasing tuple of positive parts summing to n.
Throughout the package a partition doubles as a conjugacy class of S_n (the
cycle type of its elements), so alongside the combinatorial basics this
module carries the class-level predicates everything else is built on:
partial-sum masks, parity, power maps, and realizability inside an
imprimitive wreath product.

All values are immutable and every function is pure.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

# Bit-vector DP over n+1 bits is quadratic in n; this cap keeps accidental
# huge inputs from stalling, and callers may raise it explicitly.
DEFAULT_SUM_CAP = 10_000

# Full partition enumeration is exponential; refuse past this unless asked.
DEFAULT_ENUMERATION_CAP = 40


class PartitionError(ValueError):
    """Malformed partition, bad argument, or out-of-range query."""


class PartitionTooLarge(PartitionError):
    """An operation exceeded its configured size cap."""


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


class Partition:
    """A partition of a positive integer; parts stored non-increasing."""

    __slots__ = ("parts", "n", "_mask")

    def __init__(self, parts):
        cleaned = []
        for a in parts:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise PartitionError(f"parts must be positive integers, got {a!r}")
            cleaned.append(a)
        if not cleaned:
            raise PartitionError("a partition needs at least one part")
        object.__setattr__(self, "parts", tuple(sorted(cleaned, reverse=True)))
        object.__setattr__(self, "n", sum(cleaned))
        object.__setattr__(self, "_mask", None)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse ``7,5,1^3`` style text (any part order, optional spaces)."""
        parts = []
        for token in text.split(","):
            token = token.replace(" ", "")
            m = _TOKEN.match(token)
            if not m:
                raise PartitionError(f"bad partition token {token!r} in {text!r}")
            value = int(m.group(1))
            count = int(m.group(2)) if m.group(2) else 1
            if value < 1 or count < 1:
                raise PartitionError(f"bad partition token {token!r} in {text!r}")
            parts.extend([value] * count)
        return cls(parts)

    def text(self) -> str:
        """Canonical text: descending, exponent-compressed, e.g. ``7,5,1^3``."""
        out = []
        for value, count in sorted(Counter(self.parts).items(), reverse=True):
            out.append(f"{value}^{count}" if count > 1 else f"{value}")
        return ",".join(out)

    def multiplicities(self) -> tuple[tuple[int, int], ...]:
        """(value, count) pairs, values descending."""
        return tuple(sorted(Counter(self.parts).items(), reverse=True))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return f"Partition({self.text()!r})"

    def __str__(self):
        return self.text()


def enumerate_partitions(n: int, *, cap: int = DEFAULT_ENUMERATION_CAP):
    """Yield all partitions of n, parts descending, in reverse-lexicographic
    order: (n) first, (1^n) last.  The order is part of the contract; the
    first partition carrying a given property is used as its canonical
    representative elsewhere in the package."""
    if n < 1:
        raise PartitionError(f"need n >= 1, got {n}")
    if n > cap:
        raise PartitionTooLarge(f"partition enumeration capped at {cap}, got n={n}")

    def rec(remaining, largest, prefix):
        if remaining == 0:
            yield Partition(prefix)
            return
        for a in range(min(remaining, largest), 0, -1):
            yield from rec(remaining - a, a, prefix + (a,))

    yield from rec(n, n, ())


@dataclass(frozen=True)
class PartialSumMask:
    """Which integers in 0..n arise as sums of sub-multisets of a partition.

    bits has bit i set iff i is a partial sum.  0 and n are always set, and
    the mask is symmetric under i <-> n-i (complement the chosen parts).
    """

    n: int
    bits: int

    def contains(self, i: int) -> bool:
        if not 0 <= i <= self.n:
            raise PartitionError(f"partial-sum query {i} out of range 0..{self.n}")
        return bool(self.bits >> i & 1)

    def missing_interior(self) -> tuple[int, ...]:
        """The non-sums strictly between 0 and n, ascending."""
        return tuple(i for i in range(1, self.n) if not self.bits >> i & 1)

    def restricted_bits(self) -> int:
        """Bits 1..floor(n/2) only; by symmetry this determines the mask."""
        return self.bits & ((1 << (self.n // 2 + 1)) - 2)

    def bitstring(self) -> str:
        """Length n+1, character i (from the left) is '1' iff i is a sum."""
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n + 1))

    def is_symmetric(self) -> bool:
        rev = 0
        for i in range(self.n + 1):
            if self.bits >> i & 1:
                rev |= 1 << (self.n - i)
        return rev == self.bits


def partial_sums(p: Partition, *, cap: int = DEFAULT_SUM_CAP) -> PartialSumMask:
    """Subset-sum DP over a bit vector; each part usable once per occurrence."""
    if p.n > cap:
        raise PartitionTooLarge(f"partial-sum DP capped at n={cap}, got {p.n}")
    if p._mask is not None:
        return p._mask
    bits = 1
    for a in p.parts:
        bits |= bits << a
    mask = PartialSumMask(p.n, bits)
    assert mask.is_symmetric(), "partial-sum masks are symmetric by complementation"
    object.__setattr__(p, "_mask", mask)
    return mask


def is_partial_sum(p: Partition, i: int) -> bool:
    return partial_sums(p).contains(i)


def parity(p: Partition) -> str:
    """'odd' or 'even': the sign of a permutation with this cycle type.

    A part of length a contributes a-1 transpositions, so the permutation is
    odd iff n - (number of parts) is odd, equivalently iff the number of
    even-length parts is odd."""
    return "odd" if (p.n - len(p.parts)) % 2 else "even"


def power_type(p: Partition, k: int) -> Partition:
    """Cycle type of sigma^k for sigma of type p: a part a splits into
    gcd(a, k) cycles of length a/gcd(a, k)."""
    if k < 1:
        raise PartitionError(f"need k >= 1, got {k}")
    parts = []
    for a in p.parts:
        g = math.gcd(a, k)
        parts.extend([a // g] * g)
    return Partition(parts)


def _divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _divisors_of_lcm(parts) -> list[int]:
    """Divisors of lcm(parts), built from the prime factorizations of the
    parts themselves (the lcm may be huge but stays smooth)."""
    exponents: dict[int, int] = {}
    for a in parts:
        rest = a
        q = 2
        while q * q <= rest:
            if rest % q == 0:
                e = 0
                while rest % q == 0:
                    rest //= q
                    e += 1
                exponents[q] = max(exponents.get(q, 0), e)
            q += 1
        if rest > 1:
            exponents[rest] = max(exponents.get(rest, 0), 1)
    divisors = [1]
    for q, e in sorted(exponents.items()):
        divisors = [d * q**i for d in divisors for i in range(e + 1)]
    return sorted(divisors)


def equivalent_types(p: Partition, q: Partition) -> bool:
    """True iff one type is a power of the other.

    Power types of p are periodic in k with period dividing lcm(parts), and
    the type of sigma^k depends only on gcd(k, lcm); scanning divisors of the
    lcm therefore covers every power."""
    if p.n != q.n:
        raise PartitionError(f"degree mismatch: {p.n} vs {q.n}")
    if p == q:
        return True
    if any(power_type(p, k) == q for k in _divisors_of_lcm(p.parts)):
        return True
    return any(power_type(q, k) == p for k in _divisors_of_lcm(q.parts))


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def jordan_witness(p: Partition) -> int | None:
    """Largest prime l such that some power of a permutation of type p is an
    l-cycle fixing at least 3 points; None if no such prime exists.

    Criterion: l is a part of multiplicity 1, l divides no other part (so
    raising to the lcm of the rest kills everything else but keeps the
    l-cycle), and n - l >= 3."""
    best = None
    for value, count in p.multiplicities():
        if count != 1 or not _is_prime(value) or p.n - value < 3:
            continue
        if any(other != value and other % value == 0 for other in p.parts):
            continue
        if best is None or value > best:
            best = value
    return best


def wreath_realizable(p: Partition, a: int, b: int) -> bool:
    """Can a permutation of cycle type p preserve some partition of the n
    points into b blocks of size a (i.e. lie in S_a wr S_b)?

    If it can, its cycles split into groups: the blocks met by a group's
    cycles form an m-cycle of blocks, every cycle length in the group is
    divisible by m, the quotient lengths sum to a (they tile one block), and
    the m's over all groups sum to b.  Conversely any such grouping is
    realizable, so backtracking over groupings decides membership exactly.
    Groups are anchored on the largest remaining part to kill symmetry.
    """
    if a < 2 or b < 2:
        raise PartitionError(f"need block size and count >= 2, got a={a}, b={b}")
    if a * b != p.n:
        raise PartitionError(f"need a*b = n: {a}*{b} != {p.n}")

    memo: dict[tuple, bool] = {}

    def feasible(items: tuple[tuple[int, int], ...], blocks_left: int) -> bool:
        if not items:
            return blocks_left == 0
        key = (items, blocks_left)
        if key in memo:
            return memo[key]
        anchor = items[0][0]
        ok = False
        for m in _divisors(anchor):
            if m > blocks_left or m * a < anchor:
                continue
            for rest in _anchor_groups(items, m, m * a):
                if feasible(rest, blocks_left - m):
                    ok = True
                    break
            if ok:
                break
        memo[key] = ok
        return ok

    return feasible(p.multiplicities(), b)


def _anchor_groups(items, m, target):
    """Yield the item tuples left after removing a group that contains the
    largest value, uses only values divisible by m, and sums to target.
    Choices are made per distinct value (a count each), so equal parts never
    blow up the branching."""
    usable = [(v, c) for v, c in items if v % m == 0]

    def rec(idx, remaining, taken):
        if remaining == 0:
            counts = dict(items)
            for v, t in taken:
                counts[v] -= t
            yield tuple((v, counts[v]) for v, _ in items if counts[v] > 0)
            return
        if idx == len(usable):
            return
        v, c = usable[idx]
        low = 1 if idx == 0 else 0
        high = min(c, remaining // v)
        for take in range(low, high + 1):
            yield from rec(idx + 1, remaining - take * v, taken + [(v, take)])

    yield from rec(0, target, [])
