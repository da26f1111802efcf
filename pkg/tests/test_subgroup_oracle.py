"""Invariable-generation oracle: the per-kind class membership tests are
checked against direct element enumeration of every maximal subgroup for
degrees up to 8, and against hand-derived facts at degree 5, 6, 11, 12."""

import math

import pytest

from migsets.partitions import Partition, enumerate_partitions
from migsets.perms import cycle_type
from migsets.subgroup_oracle import (
    OracleError,
    class_meets_subgroup,
    invariably_generates,
    is_mig_set,
    maximal_subgroups,
)


def P(text):
    return Partition.from_text(text)


# ---------------------------------------------------------------------------
# record lists


def test_record_counts_and_labels():
    recs = maximal_subgroups(6)
    labels = [r.label for r in recs]
    assert labels == ["S_1 x S_5", "S_2 x S_4", "S_2 wr S_3", "S_3 wr S_2", "A_6", "PGL(2,5)"]
    assert maximal_subgroups(5)[-1].label == "AGL(1,5)"
    assert [r.label for r in maximal_subgroups(12) if r.kind == "imprimitive"] == [
        "S_2 wr S_6",
        "S_3 wr S_4",
        "S_4 wr S_3",
        "S_6 wr S_2",
    ]


def test_degree_range_enforced():
    with pytest.raises(OracleError):
        maximal_subgroups(4)
    with pytest.raises(OracleError):
        maximal_subgroups(13)


def test_record_orders_and_class_counts():
    for n in range(5, 13):
        for rec in maximal_subgroups(n):
            assert rec.group().order() == rec.expected_order
            if rec.kind == "alternating":
                assert rec.class_count == 1
            else:
                assert rec.class_count == math.factorial(n) // rec.expected_order


def test_primitive_orders_frozen():
    frozen = {
        5: ("AGL(1,5)", 20),
        6: ("PGL(2,5)", 120),
        7: ("AGL(1,7)", 42),
        8: ("PGL(2,7)", 336),
        9: ("AGL(2,3)", 432),
        10: ("PGammaL(2,9)", 1440),
        11: ("AGL(1,11)", 110),
        12: ("PGL(2,11)", 1320),
    }
    for n, (label, order) in frozen.items():
        prim = [r for r in maximal_subgroups(n) if r.kind in ("affine", "almost_simple")]
        assert [(r.label, r.expected_order) for r in prim] == [(label, order)]


# ---------------------------------------------------------------------------
# class membership per kind, against direct enumeration


def subgroup_cycle_types(rec):
    return {cycle_type(e) for e in rec.group().elements()}


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_class_meets_subgroup_matches_enumeration(n):
    # The conjugacy class of p meets a conjugate of the subgroup iff some
    # element of the subgroup itself has cycle type p.
    for rec in maximal_subgroups(n):
        types = subgroup_cycle_types(rec)
        for p in enumerate_partitions(n):
            assert class_meets_subgroup(rec, p) == (p in types), (rec.label, p.text())


def test_class_membership_frozen_examples():
    recs = {r.label: r for r in maximal_subgroups(6)}
    assert class_meets_subgroup(recs["A_6"], P("3,3"))
    assert not class_meets_subgroup(recs["A_6"], P("6"))
    assert class_meets_subgroup(recs["S_3 wr S_2"], P("6"))
    assert not class_meets_subgroup(recs["S_3 wr S_2"], P("4,1,1"))
    assert class_meets_subgroup(recs["S_2 x S_4"], P("2,2,1,1"))
    assert not class_meets_subgroup(recs["S_1 x S_5"], P("6"))
    assert class_meets_subgroup(recs["PGL(2,5)"], P("5,1"))
    assert not class_meets_subgroup(recs["PGL(2,5)"], P("3,2,1"))


def test_primitive_cycle_types_frozen():
    expected = {
        "AGL(1,5)": {"1^5", "2^2,1", "4,1", "5"},
        "AGL(1,7)": {"1^7", "2^3,1", "3^2,1", "6,1", "7"},
        "AGL(1,11)": {"1^11", "2^5,1", "5^2,1", "10,1", "11"},
        "PGL(2,7)": {"1^8", "2^3,1^2", "2^4", "3^2,1^2", "4^2", "6,1^2", "7,1", "8"},
        "PGL(2,11)": {
            "1^12", "2^5,1^2", "2^6", "3^4", "4^3", "5^2,1^2",
            "6^2", "10,1^2", "11,1", "12",
        },
    }
    for n in (5, 7, 8, 11, 12):
        rec = maximal_subgroups(n)[-1]
        assert {t.text() for t in subgroup_cycle_types(rec)} == expected[rec.label]


def test_primitive_types_closed_under_powers():
    # a subgroup's set of cycle types is closed under taking element powers
    from migsets.partitions import power_type

    for n in range(5, 13):
        for rec in maximal_subgroups(n):
            if rec.kind not in ("affine", "almost_simple"):
                continue
            types = subgroup_cycle_types(rec)
            for p in types:
                for k in range(2, 13):
                    assert power_type(p, k) in types


def test_class_membership_rejects_degree_mismatch():
    rec = maximal_subgroups(6)[0]
    with pytest.raises(OracleError):
        class_meets_subgroup(rec, P("5,2"))


# ---------------------------------------------------------------------------
# invariable generation


def test_invariable_generation_frozen_examples():
    # both classes are even, so the alternating group meets both
    assert not invariably_generates([P("5,1"), P("4,2")], 6)
    # minimal invariably generating set of degree 6: every maximal subgroup
    # misses a member, and every pair is covered by some subgroup
    family = [P("4,1,1"), P("3,1^3"), P("3,3")]
    assert invariably_generates(family, 6)
    assert is_mig_set(family, 6)
    # dropping any member must break generation (minimality, directly)
    for i in range(3):
        rest = family[:i] + family[i + 1 :]
        assert not invariably_generates(rest, 6)
    # a strict superset still generates but is no longer minimal
    assert invariably_generates(family + [P("2,1^4")], 6)
    assert not is_mig_set(family + [P("2,1^4")], 6)


def test_no_small_invariably_generating_sets_degree6():
    types = [p for p in enumerate_partitions(6) if len(p.parts) < 6]
    singles = sum(invariably_generates([p], 6) for p in types)
    assert singles == 0
    import itertools

    pairs = sum(
        invariably_generates(list(pair), 6) for pair in itertools.combinations(types, 2)
    )
    assert pairs == 0


def test_identity_class_never_in_mig_set():
    # the identity type lies in every subgroup, so minimality always fails
    family = [P("1^6"), P("4,1,1"), P("3,1^3"), P("3,3")]
    assert invariably_generates(family, 6)
    assert not is_mig_set(family, 6)


def test_mig_set_rejects_duplicates_and_degree_mix():
    with pytest.raises(OracleError):
        invariably_generates([P("3,3"), P("3,3")], 6)
    with pytest.raises(OracleError):
        invariably_generates([P("3,3"), P("5,2")], 6)
    with pytest.raises(OracleError):
        invariably_generates([], 6)


def test_explicit_families_degree_11_and_12():
    eleven = [P("4,3,2,2"), P("4,3,3,1"), P("9,1,1")]
    assert is_mig_set(eleven, 11)
    twelve = [P("5,3,2,2"), P("4,4,3,1"), P("10,1,1")]
    assert is_mig_set(twelve, 12)


def test_accepts_raw_part_tuples():
    assert not invariably_generates([(5, 1), (4, 2)], 6)
