"""Exact invariable-generation oracle for small symmetric groups.

For 5 <= n <= 12 this module knows the full list of conjugacy-class
representatives of maximal subgroups of the symmetric group: the alternating
group, the subset stabilizers, the block-system stabilizers, and the handful
of primitive groups.  The primitive representatives ship as generator strings
in ``data/maximal_subgroups.txt``; everything else is constructed here.  Every
record is validated against its stated order when loaded.

Whether a conjugacy class of the symmetric group (given by its cycle type)
meets a subgroup in the list is decided per kind: subset stabilizers by a
partial-sum check, block stabilizers by the wreath realizability test,
the alternating group by parity, and the primitive groups by their frozen
cycle-type sets (computed once by element enumeration; all have order at
most 1440).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .partitions import Partition, is_partial_sum, parity, wreath_realizable
from .perms import PermGroup, cycle_type, from_cycles, parse_cycles

MIN_DEGREE = 5
MAX_DEGREE = 12


class OracleError(ValueError):
    """Degree out of range, malformed data file, or inconsistent input."""


@dataclass(frozen=True)
class MaximalSubgroupRecord:
    """One conjugacy class of maximal subgroups of the symmetric group."""

    degree: int
    label: str
    kind: str  # intransitive | imprimitive | alternating | affine | almost_simple
    param: tuple  # (s,) for intransitive, (a, b) for imprimitive, () otherwise
    generators: tuple
    expected_order: int
    class_count: int  # number of conjugate copies inside the symmetric group

    def group(self):
        return PermGroup(self.degree, self.generators)


def _sym_gens(points):
    """Standard generators of the symmetric group on an ordered point list."""
    k = len(points)
    if k < 2:
        return []
    swap = {points[0]: points[1], points[1]: points[0]}
    rot = {points[i]: points[(i + 1) % k] for i in range(k)}
    return [swap, rot]


def _maps_to_perms(degree, maps):
    out = []
    for m in maps:
        out.append(tuple(m.get(x, x) for x in range(degree)))
    return out


def _intransitive_record(n, s):
    # stabilizer of the set {0, ..., s-1}
    maps = _sym_gens(list(range(s))) + _sym_gens(list(range(s, n)))
    gens = tuple(_maps_to_perms(n, maps))
    order = math.factorial(s) * math.factorial(n - s)
    return MaximalSubgroupRecord(
        degree=n,
        label=f"S_{s} x S_{n - s}",
        kind="intransitive",
        param=(s,),
        generators=gens,
        expected_order=order,
        class_count=math.factorial(n) // order,
    )


def _imprimitive_record(n, a, b):
    # stabilizer of the block system {0..a-1}, {a..2a-1}, ...
    maps = _sym_gens(list(range(a)))
    blocks = [list(range(i * a, (i + 1) * a)) for i in range(b)]
    swap = {}
    for x, y in zip(blocks[0], blocks[1]):
        swap[x] = y
        swap[y] = x
    maps.append(swap)
    if b > 2:
        maps.append({x: (x + a) % n for x in range(n)})
    gens = tuple(_maps_to_perms(n, maps))
    order = math.factorial(a) ** b * math.factorial(b)
    return MaximalSubgroupRecord(
        degree=n,
        label=f"S_{a} wr S_{b}",
        kind="imprimitive",
        param=(a, b),
        generators=gens,
        expected_order=order,
        class_count=math.factorial(n) // order,
    )


def _alternating_record(n):
    cycle = tuple(range(n)) if n % 2 == 1 else tuple(range(1, n))
    gens = (from_cycles(n, [(0, 1, 2)]), from_cycles(n, [cycle]))
    return MaximalSubgroupRecord(
        degree=n,
        label=f"A_{n}",
        kind="alternating",
        param=(),
        generators=gens,
        expected_order=math.factorial(n) // 2,
        class_count=1,
    )


_PRIMITIVE_KIND = {
    "AGL(1,5)": "affine",
    "PGL(2,5)": "almost_simple",
    "AGL(1,7)": "affine",
    "PGL(2,7)": "almost_simple",
    "AGL(2,3)": "affine",
    "PGammaL(2,9)": "almost_simple",
    "AGL(1,11)": "affine",
    "PGL(2,11)": "almost_simple",
}


@lru_cache(maxsize=None)
def _load_primitive_records():
    text = (
        resources.files("migsets").joinpath("data/maximal_subgroups.txt").read_text()
    )
    records = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise OracleError(f"malformed dataset line: {line!r}")
        degree, label, order, gen_text = fields
        degree, order = int(degree), int(order)
        if label not in _PRIMITIVE_KIND:
            raise OracleError(f"unknown primitive label {label!r}")
        gens = tuple(parse_cycles(t, degree) for t in gen_text.split(";"))
        rec = MaximalSubgroupRecord(
            degree=degree,
            label=label,
            kind=_PRIMITIVE_KIND[label],
            param=(),
            generators=gens,
            expected_order=order,
            class_count=math.factorial(degree) // order,
        )
        records.setdefault(degree, []).append(rec)
    if sorted(records) != list(range(MIN_DEGREE, MAX_DEGREE + 1)):
        raise OracleError("dataset must cover each degree from 5 to 12")
    return records


def _validate_record(rec):
    grp = rec.group()
    if grp.order() != rec.expected_order:
        raise OracleError(
            f"{rec.label}: generated order {grp.order()} != {rec.expected_order}"
        )
    if rec.kind == "intransitive":
        s = rec.param[0]
        expected = (tuple(range(s)), tuple(range(s, rec.degree)))
        if grp.orbits() != expected:
            raise OracleError(f"{rec.label}: unexpected orbits {grp.orbits()}")
    elif rec.kind == "imprimitive":
        if not grp.is_transitive() or grp.is_primitive():
            raise OracleError(f"{rec.label}: expected a transitive imprimitive group")
    elif rec.kind == "alternating":
        if any(parity(cycle_type(g)) == "odd" for g in rec.generators):
            raise OracleError(f"{rec.label}: generators must be even")
    else:
        if not grp.is_transitive() or not grp.is_primitive():
            raise OracleError(f"{rec.label}: expected a primitive group")
        if all(parity(cycle_type(e)) == "even" for e in grp.elements()):
            raise OracleError(
                f"{rec.label}: contained in the alternating group, not maximal"
            )


@lru_cache(maxsize=None)
def maximal_subgroups(n):
    """Conjugacy-class representatives of the maximal subgroups of S_n.

    Supported for 5 <= n <= 12.  Ordered: intransitive by subset size,
    imprimitive by block size, the alternating group, then the primitive
    groups from the bundled dataset.
    """
    if not MIN_DEGREE <= n <= MAX_DEGREE:
        raise OracleError(f"degree {n} outside supported range 5..{MAX_DEGREE}")
    records = []
    for s in range(1, (n - 1) // 2 + 1):
        records.append(_intransitive_record(n, s))
    for a in range(2, n):
        if n % a == 0 and 2 <= n // a:
            records.append(_imprimitive_record(n, a, n // a))
    records.append(_alternating_record(n))
    records.extend(_load_primitive_records()[n])
    for rec in records:
        _validate_record(rec)
    return tuple(records)


@lru_cache(maxsize=None)
def _primitive_cycle_types(rec):
    return frozenset(cycle_type(e) for e in rec.group().elements())


def class_meets_subgroup(rec, p):
    """Does the conjugacy class with cycle type p meet some conjugate of the
    subgroup the record describes?"""
    if p.n != rec.degree:
        raise OracleError(f"cycle type of degree {p.n} against degree {rec.degree}")
    if rec.kind == "intransitive":
        return is_partial_sum(p, rec.param[0])
    if rec.kind == "imprimitive":
        a, b = rec.param
        return wreath_realizable(p, a, b)
    if rec.kind == "alternating":
        return parity(p) == "even"
    return p in _primitive_cycle_types(rec)


def _check_classes(classes, n):
    out = []
    for p in classes:
        if not isinstance(p, Partition):
            p = Partition(p)
        if p.n != n:
            raise OracleError(f"class {p.text()} is not a cycle type of degree {n}")
        out.append(p)
    if len(set(out)) != len(out):
        raise OracleError("classes must be pairwise distinct")
    if not out:
        raise OracleError("need at least one class")
    return out


def invariably_generates(classes, n):
    """True iff picking any element from each class always generates S_n,
    i.e. no maximal subgroup meets every class."""
    classes = _check_classes(classes, n)
    return not any(
        all(class_meets_subgroup(rec, p) for p in classes)
        for rec in maximal_subgroups(n)
    )


def is_mig_set(classes, n):
    """True iff the classes invariably generate S_n and no proper subset does.

    Minimality is equivalent to: for each class there is a maximal subgroup
    meeting all the others (such a subgroup avoids the omitted class
    automatically, else it would contradict generation).
    """
    classes = _check_classes(classes, n)
    if not invariably_generates(classes, n):
        return False
    for i in range(len(classes)):
        rest = classes[:i] + classes[i + 1 :]
        if not any(
            all(class_meets_subgroup(rec, p) for p in rest)
            for rec in maximal_subgroups(n)
        ):
            return False
    return True
