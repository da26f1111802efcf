"""The acceptance gate: every shipped claim of the package as a runnable
check, one result line per criterion.

Each criterion returns a CriterionResult instead of raising, so the CLI can
print a full report.  Two checks fail by design, faithfully reproducing
source-material claims our own enumerations contradict; they are marked
expected_failure and documented in the README:

  * criterion 4 at n = 6: no family of cycle types of S_6 satisfying the
    partial-sum properties is a minimal invariable generating set (the
    exhaustive scan in criterion 5 shows why: every candidate pair is
    swallowed by one of the six maximal subgroups);
  * criterion 6's component claim a_22 = 1: 21 = 3 * 7 is not a prime
    power and no longer geometric series reaches 22, so a_22 = 0.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass

from .bounds import final_inequality_holds, table1_lookup, upper_bound
from .constructions import (
    build_x_family,
    lemma_partition,
    verify_lemma,
    verify_mig_lower_bound,
    verify_x_family,
)
from .family_search import max_family, max_family_bruteforce
from .partitions import (
    Partition,
    enumerate_partitions,
    partial_sums,
    wreath_realizable,
)
from .perms import PermGroup, cycle_type, from_cycles
from .subgroup_oracle import (
    class_meets_subgroup,
    is_mig_set,
    maximal_subgroups,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    expected_failure: bool
    runtime: float
    detail: str

    def line(self):
        if self.passed:
            status = "PASS"
        elif self.expected_failure:
            status = "FAIL (expected, documented)"
        else:
            status = "FAIL"
        return f"criterion {self.number} [{self.name}]: {status} ({self.runtime:.1f}s) {self.detail}"

    @property
    def acceptable(self):
        return self.passed or self.expected_failure


def criterion_1(time_budget=30.0):
    """Gap partitions verify for every 5 <= n <= 300, 1 <= i < n/3."""
    start = time.time()
    count = 0
    for n in range(5, 301):
        for i in range(1, (n + 2) // 3):
            if 3 * i >= n:
                break
            verify_lemma(lemma_partition(i, n))
            count += 1
    elapsed = time.time() - start
    return CriterionResult(
        1,
        "gap partition sweep",
        elapsed < time_budget,
        False,
        elapsed,
        f"{count} (i, n) pairs verified"
        + ("" if elapsed < time_budget else f"; over {time_budget}s budget"),
    )


def criterion_2(time_budget=120.0):
    """Families for 5 <= n <= 500 satisfy all three defining properties."""
    start = time.time()
    for n in range(5, 501):
        verify_x_family(build_x_family(n))
    elapsed = time.time() - start
    return CriterionResult(
        2,
        "family construction sweep",
        elapsed < time_budget,
        False,
        elapsed,
        "degrees 5..500 verified"
        + ("" if elapsed < time_budget else f"; over {time_budget}s budget"),
    )


def criterion_3():
    """Lower-bound verification for 11 <= n <= 500."""
    start = time.time()
    methods = {"exact": 0, "replay": 0}
    for n in range(11, 501):
        cert = verify_mig_lower_bound(build_x_family(n))
        if "oracle" in cert["checks"]["method"]["detail"]:
            methods["exact"] += 1
        else:
            methods["replay"] += 1
    return CriterionResult(
        3,
        "lower-bound proof replay",
        True,
        False,
        time.time() - start,
        f"degrees 11..500; {methods['exact']} by exact oracle, {methods['replay']} by replay",
    )


def criterion_4():
    """Constructed families pass the exact subgroup oracle for 5 <= n <= 12.

    Fails at n = 6, where no valid family is minimally invariably
    generating; every other degree passes."""
    start = time.time()
    failures = []
    for n in range(5, 13):
        xf = build_x_family(n)
        if not is_mig_set(xf.members, n):
            failures.append(n)
    passed = not failures
    return CriterionResult(
        4,
        "exact oracle cross-check",
        passed,
        failures == [6],
        time.time() - start,
        "degrees 5..12 all minimal invariable generating sets"
        if passed
        else f"oracle rejects degrees {failures}",
    )


STAR_LIST = ("2,1^4", "2^2,1^2", "2^3", "3,1^3", "3^2", "4,1^2", "4,2")


def criterion_5():
    """Degree 6: no minimal invariable generating set of size >= 5 exists,
    and the types meeting at least four maximal subgroups are exactly the
    seven known ones."""
    start = time.time()
    records = maximal_subgroups(6)
    nontrivial = [p for p in enumerate_partitions(6) if p.parts != (1,) * 6]
    star = tuple(
        sorted(
            p.text()
            for p in nontrivial
            if sum(1 for r in records if class_meets_subgroup(r, p)) >= 4
        )
    )
    scanned = 0
    oversized = []
    for k in range(5, len(nontrivial) + 1):
        for combo in itertools.combinations(nontrivial, k):
            scanned += 1
            if is_mig_set(combo, 6):
                oversized.append(combo)
    passed = star == tuple(sorted(STAR_LIST)) and not oversized and scanned == 638
    return CriterionResult(
        5,
        "degree-6 exhaustive scan",
        passed,
        False,
        time.time() - start,
        f"{scanned} subsets scanned, none generate minimally; star list {star}",
    )


def criterion_6_components():
    """Upper-bound components at n = 22 as the source states them: the
    a_22 = 1 claim contradicts our enumeration (a_22 = 0), so this check
    fails by design; the Table 1 hit and the other components do hold."""
    start = time.time()
    r = upper_bound(22)
    hits_ok = r.as_dict()["table1_hits"] == [("M_22.2", 21)]
    stated = (r.delta, r.a, r.b, r.c) == (4, 1, 0, 0) and r.upper == 15
    actual = (r.delta, r.a, r.b, r.c) == (4, 0, 0, 0) and r.upper == 14
    return CriterionResult(
        6,
        "degree-22 bound components",
        hits_ok and stated,
        hits_ok and actual,
        time.time() - start,
        f"computed (delta,a,b,c)=({r.delta},{r.a},{r.b},{r.c}), upper={r.upper}; "
        "stated a_22=1/upper=15 unreachable: 21=3*7 is not a prime power",
    )


def criterion_6_corollary():
    """Closing inequality holds exactly on 71..10000 and fails at 70."""
    start = time.time()
    bad = [n for n in range(71, 10001) if not final_inequality_holds(n)]
    boundary = not final_inequality_holds(70)
    passed = not bad and boundary
    return CriterionResult(
        6,
        "corollary inequality range",
        passed,
        False,
        time.time() - start,
        "holds on 71..10000, fails at 70"
        if passed
        else f"failures {bad[:5]}, n=70 gives {not boundary}",
    )


def criterion_7():
    """Exact search agrees with the naive oracle on 5..14; sandwich bounds
    and witness injectivity hold.  Returns the data table in the detail."""
    start = time.time()
    rows = ["n\tt_max\tlower\thalf\tnodes"]
    ok = True
    for n in range(5, 15):
        r = max_family(n)
        naive = max_family_bruteforce(n)
        ok &= r.t_max == naive
        d = n - 2 * r.t_max
        ok &= (d < 0 or n * n > 1 << d) and r.t_max <= n // 2  # n/2 - log2(n) < t
        ok &= len(set(r.witness_assignment.values())) == len(r.witness_assignment)
        rows.append(
            f"{n}\t{r.t_max}\t{n / 2 - math.log2(n):.3f}\t{n // 2}\t{r.nodes_explored}"
        )
    return CriterionResult(
        7,
        "extremal search cross-check",
        ok,
        False,
        time.time() - start,
        "table:\n" + "\n".join(rows),
    )


def _wreath_group(a, b):
    """S_a wr S_b on 0..ab-1, blocks contiguous."""
    n = a * b
    gens = [from_cycles(n, [(0, 1)])]
    if a > 2:
        gens.append(from_cycles(n, [tuple(range(a))]))
    gens.append(from_cycles(n, [(i, i + a) for i in range(a)]))
    if b > 2:
        gens.append(tuple((x + a) % n for x in range(n)))
    return PermGroup(n, gens)


def criterion_8_wreath():
    """wreath_realizable agrees with element-level enumeration for every
    partition of every n <= 8 and every block shape."""
    start = time.time()
    mismatches = []
    for n in range(4, 9):
        for a in range(2, n // 2 + 1):
            if n % a:
                continue
            b = n // a
            group = _wreath_group(a, b)
            assert group.order() == (
                _factorial(a) ** b * _factorial(b)
            ), f"wrong wreath order at ({a},{b})"
            types = {cycle_type(g) for g in group.elements()}
            for p in enumerate_partitions(n):
                if wreath_realizable(p, a, b) != (p in types):
                    mismatches.append((n, a, b, p.text()))
    return CriterionResult(
        8,
        "block realizability vs enumeration",
        not mismatches,
        False,
        time.time() - start,
        "all degrees <= 8, all block shapes"
        if not mismatches
        else f"mismatches: {mismatches[:5]}",
    )


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def criterion_8_sums(samples=10_000, seed=2024):
    """partial_sums agrees with explicit subset accumulation on random
    partitions of up to 20 parts."""
    start = time.time()
    rng = random.Random(seed)
    mismatches = 0
    for _ in range(samples):
        k = rng.randint(1, 20)
        parts = [rng.randint(1, 12) for _ in range(k)]
        p = Partition(parts)
        claimed = partial_sums(p).bits
        if k <= 13:
            sums = set()
            for r in range(k + 1):
                for combo in itertools.combinations(parts, r):
                    sums.add(sum(combo))
        else:
            sums = {0}
            for a in parts:
                sums |= {s + a for s in sums}
        expected = 0
        for s in sums:
            expected |= 1 << s
        if claimed != expected:
            mismatches += 1
    return CriterionResult(
        8,
        "partial sums vs subset enumeration",
        mismatches == 0,
        False,
        time.time() - start,
        f"{samples} random partitions, {mismatches} mismatches",
    )


ALL_CRITERIA = (
    (1, criterion_1),
    (2, criterion_2),
    (3, criterion_3),
    (4, criterion_4),
    (5, criterion_5),
    (6, criterion_6_components),
    (6, criterion_6_corollary),
    (7, criterion_7),
    (8, criterion_8_wreath),
    (8, criterion_8_sums),
)


def run(numbers=None):
    """Run the acceptance checks (all, or the given criterion numbers)."""
    results = []
    for number, fn in ALL_CRITERIA:
        if numbers and number not in numbers:
            continue
        results.append(fn())
    return results
