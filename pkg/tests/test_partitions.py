"""Partition core: frozen examples plus independent slow oracles.

The oracles here deliberately avoid the package's own algorithms: partial
sums are enumerated over explicit sub-multisets, cycle-type powering is done
on actual permutations, and wreath membership is decided by listing every
element of S_a wr S_b.
"""

import itertools
import math
import random
from collections import Counter

import pytest

from migsets.partitions import (
    Partition,
    PartitionError,
    PartitionTooLarge,
    enumerate_partitions,
    equivalent_types,
    is_partial_sum,
    jordan_witness,
    parity,
    partial_sums,
    power_type,
    wreath_realizable,
)


# ---------------------------------------------------------------------------
# independent oracles


def sums_by_enumeration(parts):
    """All partial sums, via explicit choice of a count per distinct part."""
    counts = sorted(Counter(parts).items())
    sums = set()
    for takes in itertools.product(*(range(c + 1) for _, c in counts)):
        sums.add(sum(v * t for (v, _), t in zip(counts, takes)))
    return sums


def perm_of_type(parts):
    """A concrete permutation (image tuple on 0..n-1) with the given type."""
    images = [0] * sum(parts)
    start = 0
    for a in parts:
        for j in range(a):
            images[start + j] = start + (j + 1) % a
        start += a
    return tuple(images)


def type_of_perm(images):
    seen = [False] * len(images)
    lens = []
    for s in range(len(images)):
        if seen[s]:
            continue
        length = 0
        p = s
        while not seen[p]:
            seen[p] = True
            p = images[p]
            length += 1
        lens.append(length)
    return tuple(sorted(lens, reverse=True))


def perm_power(images, k):
    n = len(images)
    result = list(range(n))
    base = list(images)
    e = k
    while e:
        if e & 1:
            result = [base[p] for p in result]
        base = [base[p] for p in base]
        e >>= 1
    return tuple(result)


def perm_parity(images):
    """'odd'/'even' by counting inversions of the image tuple."""
    inv = sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if images[i] > images[j]
    )
    return "odd" if inv % 2 else "even"


def wreath_types_by_enumeration(a, b):
    """Cycle types of every element of S_a wr S_b acting on a*b points.

    Point (i, j) = block i, slot j, laid out as i*a + j.  An element is a
    block permutation plus one S_a permutation per block; image of (i, j)
    is (top[i], bottom[i][j]).
    """
    types = set()
    for top in itertools.permutations(range(b)):
        for bottoms in itertools.product(itertools.permutations(range(a)), repeat=b):
            images = [0] * (a * b)
            for i in range(b):
                for j in range(a):
                    images[i * a + j] = top[i] * a + bottoms[i][j]
            types.add(type_of_perm(images))
    return types


def random_partition(rng, n_max=40, max_parts=20):
    n = rng.randint(1, n_max)
    parts = []
    remaining = n
    while remaining and len(parts) < max_parts - 1:
        a = rng.randint(1, remaining)
        parts.append(a)
        remaining -= a
    if remaining:
        parts.append(remaining)
    return Partition(parts)


# ---------------------------------------------------------------------------
# Partition construction and text format


def test_canonicalization_and_fields():
    p = Partition([1, 5, 3, 3])
    assert p.parts == (5, 3, 3, 1)
    assert p.n == 12
    assert len(p) == 4
    assert list(p) == [5, 3, 3, 1]


def test_equality_and_hash():
    assert Partition([2, 3]) == Partition([3, 2])
    assert hash(Partition([2, 3])) == hash(Partition([3, 2]))
    assert Partition([4]) != Partition([2, 2])


def test_invalid_partitions_rejected():
    with pytest.raises(PartitionError):
        Partition([])
    with pytest.raises(PartitionError):
        Partition([3, 0])
    with pytest.raises(PartitionError):
        Partition([-1, 2])


def test_text_round_trip():
    p = Partition.from_text("1^3,5,7")
    assert p.parts == (7, 5, 1, 1, 1)
    assert p.text() == "7,5,1^3"
    assert Partition.from_text(p.text()) == p
    assert Partition.from_text(" 2 , 2 ,2 ").text() == "2^3"
    assert Partition.from_text("4").text() == "4"


def test_text_rejects_garbage():
    for bad in ["", "0", "3^0", "a", "2^", "^2", "3,,4"]:
        with pytest.raises(PartitionError):
            Partition.from_text(bad)


def test_enumerate_partitions_counts():
    # p(n) for n = 1..10
    expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, count in enumerate(expected, start=1):
        ps = list(enumerate_partitions(n))
        assert len(ps) == count
        assert len(set(ps)) == count
        assert all(p.n == n for p in ps)


def test_enumerate_partitions_order_is_deterministic():
    first = [p.parts for p in enumerate_partitions(6)]
    second = [p.parts for p in enumerate_partitions(6)]
    assert first == second
    assert first[0] == (6,)
    assert first[-1] == (1, 1, 1, 1, 1, 1)


def test_enumerate_partitions_cap():
    with pytest.raises(PartitionTooLarge):
        list(enumerate_partitions(41))
    assert len(list(enumerate_partitions(41, cap=41))) > 0


# ---------------------------------------------------------------------------
# partial sums


def test_partial_sums_frozen_238():
    mask = partial_sums(Partition([2, 3, 3]))
    assert {i for i in range(9) if mask.contains(i)} == {0, 2, 3, 5, 6, 8}
    assert mask.missing_interior() == (1, 4, 7)


def test_partial_sums_frozen_4331():
    mask = partial_sums(Partition([4, 3, 3, 1]))
    assert mask.missing_interior() == (2, 9)


def test_partial_sums_all_ones():
    mask = partial_sums(Partition([1] * 9))
    assert mask.missing_interior() == ()


def test_partial_sums_endpoints_always_set():
    for p in enumerate_partitions(8):
        mask = partial_sums(p)
        assert mask.contains(0) and mask.contains(p.n)


def test_is_partial_sum_examples():
    assert is_partial_sum(Partition([2, 3, 3]), 4) is False
    assert is_partial_sum(Partition([2, 3, 3]), 0) is True
    assert is_partial_sum(Partition([5, 1]), 1) is True


def test_is_partial_sum_range_errors():
    p = Partition([2, 3])
    with pytest.raises(PartitionError):
        is_partial_sum(p, -1)
    with pytest.raises(PartitionError):
        is_partial_sum(p, 6)


def test_partial_sums_cap():
    with pytest.raises(PartitionTooLarge):
        partial_sums(Partition([20000]))
    assert partial_sums(Partition([20000]), cap=30000).contains(20000)


def test_mask_bitstring_and_restricted():
    mask = partial_sums(Partition([4, 1]))
    # indices 0..5, characters left to right
    assert mask.bitstring() == "110011"
    # restricted view keeps bits 1..n//2, here {1} of {1,2}
    assert mask.restricted_bits() == 0b10


def test_partial_sums_vs_enumeration_exhaustive_small():
    for n in range(1, 9):
        for p in enumerate_partitions(n):
            expected = sums_by_enumeration(p.parts)
            mask = partial_sums(p)
            assert {i for i in range(n + 1) if mask.contains(i)} == expected


def test_partial_sums_vs_enumeration_random():
    rng = random.Random(90121)
    for _ in range(400):
        p = random_partition(rng)
        expected = sums_by_enumeration(p.parts)
        mask = partial_sums(p)
        got = {i for i in range(p.n + 1) if mask.contains(i)}
        assert got == expected, p


def test_mask_complement_symmetry_random():
    rng = random.Random(17)
    for _ in range(300):
        p = random_partition(rng)
        mask = partial_sums(p)
        for i in range(p.n + 1):
            assert mask.contains(i) == mask.contains(p.n - i)


# ---------------------------------------------------------------------------
# parity


def test_parity_frozen():
    assert parity(Partition([2] + [1] * 7)) == "odd"
    assert parity(Partition([3, 7, 4, 2, 2])) == "odd"
    assert parity(Partition([1] * 6)) == "even"
    assert parity(Partition([4, 2])) == "even"
    assert parity(Partition([5, 1])) == "even"


def test_parity_matches_inversion_count():
    rng = random.Random(4242)
    for _ in range(200):
        p = random_partition(rng, n_max=9)
        assert parity(p) == perm_parity(perm_of_type(p.parts))


def test_parity_even_part_count_rule():
    rng = random.Random(77)
    for _ in range(200):
        p = random_partition(rng)
        evens = sum(1 for a in p.parts if a % 2 == 0)
        assert (parity(p) == "odd") == (evens % 2 == 1)


# ---------------------------------------------------------------------------
# power_type / equivalent_types


def test_power_type_frozen():
    assert power_type(Partition([4]), 2) == Partition([2, 2])
    assert power_type(Partition([2, 3, 3]), 3) == Partition([2, 1, 1, 1, 1, 1, 1])
    assert power_type(Partition([6]), 2) == Partition([3, 3])
    assert power_type(Partition([6]), 3) == Partition([2, 2, 2])
    p = Partition([5, 4, 2, 1])
    assert power_type(p, 1) == p


def test_power_type_rejects_bad_k():
    with pytest.raises(PartitionError):
        power_type(Partition([3]), 0)


def test_power_type_matches_real_permutation_powers():
    rng = random.Random(555)
    for _ in range(250):
        p = random_partition(rng, n_max=12)
        sigma = perm_of_type(p.parts)
        k = rng.randint(1, 30)
        assert power_type(p, k).parts == type_of_perm(perm_power(sigma, k))


def test_power_type_composition():
    rng = random.Random(556)
    for _ in range(250):
        p = random_partition(rng, n_max=15)
        j, k = rng.randint(1, 12), rng.randint(1, 12)
        assert power_type(power_type(p, j), k) == power_type(p, j * k)


def test_power_type_even_exponent_gives_even_parity():
    rng = random.Random(557)
    for _ in range(200):
        p = random_partition(rng)
        k = 2 * rng.randint(1, 10)
        assert parity(power_type(p, k)) == "even"


def test_equivalent_types_frozen():
    assert equivalent_types(Partition([4]), Partition([2, 2])) is True
    assert equivalent_types(Partition([2, 2]), Partition([4])) is True
    assert equivalent_types(Partition([2, 3, 3]), Partition([2, 1, 1, 1, 1, 1, 1])) is True
    assert equivalent_types(Partition([2, 3, 3]), Partition([5, 1, 1, 1])) is False
    assert equivalent_types(Partition([3, 3]), Partition([2, 2, 2])) is False
    p = Partition([6, 3, 1])
    assert equivalent_types(p, p) is True


def test_equivalent_types_degree_mismatch():
    with pytest.raises(PartitionError):
        equivalent_types(Partition([3]), Partition([2, 2]))


def test_equivalent_types_vs_full_power_scan():
    # scanning k up to lcm(parts) is claimed sufficient; compare with a
    # scan over a much larger k range on real permutations
    rng = random.Random(558)
    for _ in range(60):
        p = random_partition(rng, n_max=10)
        q = random_partition(rng, n_max=10)
        if p.n != q.n:
            q = Partition(list(p.parts))
        sp, sq = perm_of_type(p.parts), perm_of_type(q.parts)
        brute = any(
            type_of_perm(perm_power(sp, k)) == q.parts
            or type_of_perm(perm_power(sq, k)) == p.parts
            for k in range(1, 2 * math.lcm(*p.parts, *q.parts) + 2)
        )
        assert equivalent_types(p, q) == brute


# ---------------------------------------------------------------------------
# jordan_witness


def test_jordan_witness_frozen():
    assert jordan_witness(Partition([3, 7, 4, 2, 2])) == 7
    assert jordan_witness(Partition([1, 1, 1, 5, 7])) == 7
    assert jordan_witness(Partition([1] * 8)) is None
    assert jordan_witness(Partition([2, 3, 3])) == 2
    assert jordan_witness(Partition([4, 3, 3, 1])) is None
    assert jordan_witness(Partition([5, 5, 1])) is None  # multiplicity 2
    assert jordan_witness(Partition([3, 6, 1])) is None  # 3 divides 6


def test_jordan_witness_picks_largest():
    # both 5 and 3 qualify (multiplicity 1, divide nothing else, n-l >= 3)
    assert jordan_witness(Partition([5, 3])) == 5


def test_jordan_witness_requires_three_fixed_points():
    assert jordan_witness(Partition([5, 1, 1])) is None  # n - 5 = 2 < 3
    assert jordan_witness(Partition([5, 1, 1, 1])) == 5


def test_jordan_witness_power_consequence():
    # if the witness is l, raising to the lcm of the other parts leaves an
    # l-cycle with n - l fixed points
    for parts in [(3, 7, 4, 2, 2), (1, 1, 1, 5, 7), (5, 3), (11, 4, 2, 1)]:
        p = Partition(parts)
        ell = jordan_witness(p)
        assert ell is not None
        others = [a for a in p.parts if a != ell]
        k = math.lcm(*others) if others else 1
        assert power_type(p, k) == Partition([ell] + [1] * (p.n - ell))


# ---------------------------------------------------------------------------
# wreath_realizable


def test_wreath_frozen():
    assert wreath_realizable(Partition([6]), 3, 2) is True
    assert wreath_realizable(Partition([2, 2, 2]), 3, 2) is True
    assert wreath_realizable(Partition([4, 1, 1]), 3, 2) is False
    assert wreath_realizable(Partition([4]), 2, 2) is True
    assert wreath_realizable(Partition([5, 1]), 2, 3) is False
    assert wreath_realizable(Partition([4, 2]), 2, 3) is True
    # an l-cycle with k not dividing l never fits blocks of size k
    assert wreath_realizable(Partition([1, 1, 1, 9]), 2, 6) is False
    assert wreath_realizable(Partition([1, 1, 1, 9]), 3, 4) is True


def test_wreath_n15_members():
    # the degree-15 special case of the lower-bound proof
    p = Partition([7, 5, 1, 1, 1])
    assert wreath_realizable(p, 3, 5) is False
    assert wreath_realizable(p, 5, 3) is False
    # while the generic first member of the degree-15 family IS 3|5-realizable
    assert wreath_realizable(Partition([4, 3, 2, 2, 2, 2]), 3, 5) is True


def test_wreath_rejects_bad_arguments():
    with pytest.raises(PartitionError):
        wreath_realizable(Partition([3, 3]), 2, 2)  # 2*2 != 6
    with pytest.raises(PartitionError):
        wreath_realizable(Partition([6]), 6, 1)
    with pytest.raises(PartitionError):
        wreath_realizable(Partition([6]), 1, 6)


@pytest.mark.parametrize(
    "a,b",
    [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (2, 5), (5, 2), (2, 6), (6, 2), (3, 4), (4, 3)],
)
def test_wreath_vs_element_enumeration(a, b):
    realizable = wreath_types_by_enumeration(a, b)
    for p in enumerate_partitions(a * b):
        assert wreath_realizable(p, a, b) == (p.parts in realizable), (p, a, b)
