"""Counting formulas behind the upper bound on minimal invariable
generating sets of S_n.

The bound is  ⌊n/2⌋ + Δ(n) + a_n + b_n + c_n − 1  where Δ counts divisors
of n, a_n counts projective-space degrees (pairs (q, d) with
(q^d − 1)/(q − 1) = n), b_n counts binomial representations (pairs (d, k)
with C(d, k) = n and k ≤ d/2), and c_n counts perfect-power shapes
(exponents k ≥ 2 with n = d^k).  Each term is the number of ways classes
can hide inside one kind of maximal subgroup, less the overlaps a finer
analysis removes.

b_n is taken at k ≥ 2 by default: the k = 1 pair (n, 1) corresponds to the
natural action itself, not a proper subgroup.  The k ≥ 1 reading stays
available through a flag since the source definition is ambiguous.

All gating comparisons are exact integer arithmetic; in particular the
closing inequality 2√n + 3·log2(n) ≤ n/2 is decided by interval refinement
over rationals, never by floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class BoundsError(ValueError):
    """Input outside a counting formula's domain."""


def divisor_count(n):
    """Δ(n) by trial factorization."""
    if n < 1:
        raise BoundsError(f"need n >= 1, got {n}")
    count = 1
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            count *= e + 1
        p += 1 if p == 2 else 2
    if rest > 1:
        count *= 2
    return count


def _factorize(n):
    out = {}
    rest = n
    p = 2
    while p * p <= rest:
        while rest % p == 0:
            out[p] = out.get(p, 0) + 1
            rest //= p
        p += 1 if p == 2 else 2
    if rest > 1:
        out[rest] = out.get(rest, 0) + 1
    return out


def _is_prime_power(q):
    if q < 2:
        return False
    return len(_factorize(q)) == 1


def count_projective(n):
    """a_n: pairs (q, d), q a prime power, d >= 2, with 1+q+...+q^(d-1) = n."""
    if n < 3:
        raise BoundsError(f"need n >= 3, got {n}")
    count = 1 if _is_prime_power(n - 1) else 0  # d = 2
    d = 3
    while (1 << d) - 1 <= n:  # q = 2 is the smallest candidate
        lo, hi = 2, n
        while lo <= hi:
            q = (lo + hi) // 2
            val = (q**d - 1) // (q - 1)
            if val == n:
                if _is_prime_power(q):
                    count += 1
                break
            if val < n:
                lo = q + 1
            else:
                hi = q - 1
        d += 1
    return count


def _binomial(d, k):
    return math.comb(d, k)


def count_binomial(n, *, include_k1=False):
    """b_n: pairs (d, k) with k <= d/2 and C(d, k) = n.

    k stays below log2(n) because C(2k, k) > 2^k; for each k the value is
    monotone in d, so binary search finds the only possible d."""
    if n < 2:
        raise BoundsError(f"need n >= 2, got {n}")
    count = 1 if include_k1 else 0  # the pair (n, 1)
    k = 2
    while _binomial(2 * k, k) <= n:
        lo, hi = 2 * k, 2 * k + n  # C(2k + n, k) >= n for k >= 2
        while lo <= hi:
            d = (lo + hi) // 2
            val = _binomial(d, k)
            if val == n:
                count += 1
                break
            if val < n:
                lo = d + 1
            else:
                hi = d - 1
        k += 1
    return count


def _iroot(n, k):
    """Largest r with r^k <= n."""
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def count_perfect_power(n):
    """c_n: exponents k >= 2 with n = d^k for some integer d.

    Counted two independent ways (divisors of the gcd of the prime
    exponents, and direct k-th-root testing) which must agree."""
    if n < 4:
        raise BoundsError(f"need n >= 4, got {n}")
    exponents = list(_factorize(n).values())
    g = 0
    for e in exponents:
        g = math.gcd(g, e)
    via_gcd = divisor_count(g) - 1
    via_roots = sum(
        1 for k in range(2, n.bit_length()) if _iroot(n, k) ** k == n
    )
    assert via_gcd == via_roots, f"perfect-power counts disagree at {n}"
    return via_gcd


TABLE1 = (
    (22, "M_22.2", 21),
    (40, "SU_4(2).2", 25),
    (45, "SU_4(2).2", 25),
)


def table1_lookup(n):
    """Known almost simple groups beating the generic count at degree n."""
    return [(label, k) for deg, label, k in TABLE1 if deg == n]


@dataclass(frozen=True)
class BoundReport:
    n: int
    delta: int
    a: int
    b: int  # k >= 2 convention
    b_with_k1: int
    c: int
    omega_nm1: int  # distinct primes of n - 1
    upper: int

    @property
    def lower(self):
        return self.n / 2 - math.log2(self.n)

    def as_dict(self):
        return {
            "n": self.n,
            "delta": self.delta,
            "a": self.a,
            "b": self.b,
            "b_with_k1": self.b_with_k1,
            "c": self.c,
            "omega_nm1": self.omega_nm1,
            "lower": self.lower,
            "upper": self.upper,
            "table1_hits": table1_lookup(self.n),
        }


def bound_report(n):
    if n < 2:
        raise BoundsError(f"need n >= 2, got {n}")
    delta = divisor_count(n)
    a = count_projective(n) if n >= 3 else 0  # no pairs exist below 3
    b = count_binomial(n)
    c = count_perfect_power(n) if n >= 4 else 0  # nor perfect powers below 4
    omega = len(_factorize(n - 1)) if n > 2 else 0
    report = BoundReport(
        n=n,
        delta=delta,
        a=a,
        b=b,
        b_with_k1=b + 1,
        c=c,
        omega_nm1=omega,
        upper=n // 2 + delta + a + b + c - 1,
    )
    # distinct pairs (q, d) force coprime q's, each dividing n - 1
    assert report.a <= report.omega_nm1 or n == 2
    assert 1 << report.b < n  # C(2k, k) > 2^k
    return report


def upper_bound(n):
    if n < 5:
        raise BoundsError(f"upper bound applies from n=5, got {n}")
    return bound_report(n)


def _log2_bounds(n, precision):
    """Integer L with L <= 2^precision * log2(n) < L + 1."""
    L = (n ** (1 << precision)).bit_length() - 1
    return Fraction(L, 1 << precision), Fraction(L + 1, 1 << precision)


def _sqrt_bounds(n, precision):
    scaled = math.isqrt(n << (2 * precision))
    return Fraction(scaled, 1 << precision), Fraction(scaled + 1, 1 << precision)


def final_inequality_holds(n):
    """Exact decision of 2*sqrt(n) + 3*log2(n) <= n/2 by interval refinement."""
    if n < 2:
        raise BoundsError(f"need n >= 2, got {n}")
    rhs = Fraction(n, 2)
    for precision in (8, 16, 32, 64, 128):
        s_lo, s_hi = _sqrt_bounds(n, precision)
        l_lo, l_hi = _log2_bounds(n, precision)
        if 2 * s_hi + 3 * l_hi <= rhs:
            return True
        if 2 * s_lo + 3 * l_lo > rhs:
            return False
    # would need sqrt(n) and log2(n) rational, i.e. n a square power of
    # two; then both endpoints above were already exact
    raise AssertionError(f"interval refinement failed to separate at n={n}")


def corollary_inequality(n):
    """Every link of the chain bounding the non-floor terms of the upper
    bound, evaluated exactly, plus the closing inequality."""
    if n < 5:
        raise BoundsError(f"need n >= 5, got {n}")
    r = bound_report(n)
    log_floor = n.bit_length() - 1
    max_delta = max(divisor_count(x) for x in range(1, log_floor + 1))
    checks = {
        # Delta + a + b + c < n/2
        "direct": 2 * (r.delta + r.a + r.b + r.c) < n,
        "a_le_omega": r.a <= r.omega_nm1,
        "omega_le_log": 1 << r.omega_nm1 <= n,
        "c_le_max_delta": r.c <= max_delta,
        "max_delta_le_log": 1 << max_delta <= n,
        "b_lt_log": 1 << r.b < n,
        "delta_lt_two_sqrt": r.delta * r.delta < 4 * n,
        "final": final_inequality_holds(n),
    }
    return {"n": n, "report": r.as_dict(), "checks": checks}
