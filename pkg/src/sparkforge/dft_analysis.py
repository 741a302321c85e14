"""Combinatorics of DFT row selections.

Everything here is about subsets of Z_N: how they distribute over the
cosets of each divisor subgroup, the resulting full-spark decision for
prime-power N, orbits under the symmetries that preserve full spark, and a
coset-balance necessary condition for restricted isometry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BadModulus,
    BudgetExceeded,
    DegenerateSet,
    IndexOutOfRange,
    NotADivisor,
    NotPrimePower,
)
from .exact_arith import divisors, is_prime_power

__all__ = [
    "IndexSet",
    "DistributionReport",
    "UniformityResult",
    "PrimePowerVerdict",
    "RipCheckResult",
    "distribution_report",
    "is_uniformly_distributed",
    "full_spark_prime_power",
    "closure_orbit",
    "rip_necessary_check",
]

ORBIT_CAP = 100_000


@dataclass(frozen=True)
class IndexSet:
    """A sorted, duplicate-free subset of Z_order."""

    order: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise BadModulus("order must be positive")
        object.__setattr__(self, "members", tuple(self.members))
        for m in self.members:
            if not isinstance(m, int) or not 0 <= m < self.order:
                raise IndexOutOfRange(f"{m} outside 0..{self.order - 1}")
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError("members must be strictly increasing")

    @classmethod
    def from_iterable(cls, order: int, members) -> "IndexSet":
        members = list(members)
        if len(set(members)) != len(members):
            raise ValueError("duplicate members")
        return cls(order, tuple(sorted(members)))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return item in self.members

    def translate(self, t: int) -> "IndexSet":
        return IndexSet(self.order, tuple(sorted((m + t) % self.order for m in self.members)))

    def dilate(self, a: int) -> "IndexSet":
        """Multiply members by a unit of Z_order."""
        if math.gcd(a, self.order) != 1:
            raise BadModulus(f"{a} is not a unit modulo {self.order}")
        return IndexSet(self.order, tuple(sorted((m * a) % self.order for m in self.members)))

    def complement(self) -> "IndexSet":
        inside = set(self.members)
        return IndexSet(self.order, tuple(m for m in range(self.order) if m not in inside))


@dataclass(frozen=True)
class DistributionReport:
    """Coset counts of an index set modulo one divisor."""

    divisor: int
    coset_counts: tuple[int, ...]
    lo: int
    hi: int
    uniform: bool


@dataclass(frozen=True)
class UniformityResult:
    uniform: bool
    violations: tuple[DistributionReport, ...]


@dataclass(frozen=True)
class PrimePowerVerdict:
    full_spark: bool
    uniformity: UniformityResult


@dataclass(frozen=True)
class RipCheckResult:
    passes: bool
    violations: tuple[tuple[int, int, int], ...]


def distribution_report(m: IndexSet, d: int) -> DistributionReport:
    """Counts of members in each residue class modulo a divisor d of the order.

    The set is uniformly distributed over d when every class holds either
    floor(|M|/d) or ceil(|M|/d) members; when d divides |M| both bounds
    coincide, forcing exactly |M|/d per class.
    """
    if d < 1 or m.order % d != 0:
        raise NotADivisor(f"{d} does not divide {m.order}")
    counts = [0] * d
    for x in m.members:
        counts[x % d] += 1
    size = len(m.members)
    lo = size // d
    hi = -(-size // d)
    return DistributionReport(
        divisor=d,
        coset_counts=tuple(counts),
        lo=lo,
        hi=hi,
        uniform=all(lo <= c <= hi for c in counts),
    )


def is_uniformly_distributed(m: IndexSet) -> UniformityResult:
    """Check the coset balance condition for every divisor of the order."""
    if not m.members:
        raise DegenerateSet("empty index set")
    violations = []
    for d in divisors(m.order):
        report = distribution_report(m, d)
        if not report.uniform:
            violations.append(report)
    return UniformityResult(uniform=not violations, violations=tuple(violations))


def full_spark_prime_power(m: IndexSet) -> PrimePowerVerdict:
    """Full-spark decision for DFT rows at prime-power order.

    At prime-power order the selected rows form a full spark frame exactly
    when the row set is uniformly distributed over every divisor; this
    turns an exponential determinant sweep into pure counting.
    """
    if not is_prime_power(m.order):
        raise NotPrimePower(f"{m.order} is not a prime power")
    result = is_uniformly_distributed(m)
    return PrimePowerVerdict(full_spark=result.uniform, uniformity=result)


def closure_orbit(m: IndexSet, cap: int = ORBIT_CAP) -> frozenset[IndexSet]:
    """Orbit of an index set under translation, unit dilation, complement.

    These are exactly the operations that preserve the full-spark property
    of the corresponding DFT rows, so every orbit member shares the seed's
    status.  Proper nonempty sets only; the orbit size is capped.
    """
    n = m.order
    if not m.members or len(m.members) == n:
        raise DegenerateSet("orbit needs a proper nonempty set")
    units = [a for a in range(2, n) if math.gcd(a, n) == 1]
    seen = {m}
    frontier = [m]
    while frontier:
        nxt = []
        for s in frontier:
            images = [s.translate(1), s.complement()]
            images.extend(s.dilate(a) for a in units)
            for img in images:
                if img not in seen:
                    seen.add(img)
                    if len(seen) > cap:
                        raise BudgetExceeded(f"orbit exceeds cap {cap}")
                    nxt.append(img)
        frontier = nxt
    return frozenset(seen)


def rip_necessary_check(m: IndexSet, k: int, delta: float) -> RipCheckResult:
    """Coset balance test implied by a (k, delta) restricted isometry.

    For each divisor d <= k, every residue class modulo d must hold within
    (|M|/d) * delta of the average |M|/d members.  Comparisons are done on
    integers scaled by d, so only the single product |M| * delta is float.
    Violations are reported as (divisor, residue, count); an empty list
    means this necessary condition cannot rule the property out.
    """
    if not m.members:
        raise DegenerateSet("empty index set")
    if k < 1:
        raise ValueError("k must be positive")
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    size = len(m.members)
    violations = []
    for d in divisors(m.order):
        if d > k:
            continue
        counts = [0] * d
        for x in m.members:
            counts[x % d] += 1
        for a, count in enumerate(counts):
            if abs(d * count - size) > size * delta:
                violations.append((d, a, count))
    return RipCheckResult(passes=not violations, violations=tuple(violations))
