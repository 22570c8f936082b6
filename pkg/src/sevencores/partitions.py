"""Partition-level ground truth: brute-force cores and lattice sums.

Two independent views of the same counts live here.

* Direct enumeration: walk every partition of n, keep the t-cores, and
  classify them by the parity-alternating rank.  Exponential in n, so it is capped, but it
  assumes nothing beyond the hook-length definition and serves as the
  oracle for everything built on series.
* Lattice enumeration: t-cores of n correspond to integer vectors
  n0..n(t-1) summing to zero with n = (t*|v|^2)/2 + sum(i*v_i).  Sorting
  vectors by coordinate parities splits the generating function into the
  classes that the rank refinement needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import isqrt
from types import MappingProxyType
from typing import Iterator, Optional

from .series import TruncSeries

# Hard cap for the exponential enumeration; p(45) = 89134 partitions.
PARTITION_BOUND = 45


def enumerate_partitions(n: int) -> Iterator[tuple]:
    """Yield all partitions of n as descending tuples."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > PARTITION_BOUND:
        raise ValueError(
            f"n = {n} exceeds the enumeration cap {PARTITION_BOUND}"
        )
    if n == 0:
        yield ()
        return
    part = [n]
    while True:
        yield tuple(part)
        ones = 0
        while part and part[-1] == 1:
            part.pop()
            ones += 1
        if not part:
            return
        part[-1] -= 1
        rem = ones + 1
        cap = part[-1]
        while rem > cap:
            part.append(cap)
            rem -= cap
        part.append(rem)


def conjugate(partition: tuple) -> tuple:
    """Transpose of the Young diagram, again as a descending tuple."""
    if not partition:
        return ()
    return tuple(
        sum(1 for p in partition if p > j) for j in range(partition[0])
    )


def bg_rank(partition: tuple) -> int:
    """Alternating sum of part parities: +odd(p1) - odd(p2) + odd(p3) ...

    Examples: (2, 1) -> -1 and (3, 2, 1) -> 2.
    """
    total = 0
    for i, p in enumerate(partition):
        if p & 1:
            total += -1 if i & 1 else 1
    return total


def is_t_core(partition: tuple, t: int) -> bool:
    """True when no cell of the diagram has hook length divisible by t."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    conj = conjugate(partition)
    for i, row in enumerate(partition):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            if hook % t == 0:
                return False
    return True


def count_cores(n: int, t: int) -> int:
    """Number of t-core partitions of n, by brute force."""
    return sum(1 for p in enumerate_partitions(n) if is_t_core(p, t))


def rank_histogram(n: int, t: int) -> dict:
    """Rank class -> number of t-cores of n in it, by brute force."""
    out: dict[int, int] = {}
    for p in enumerate_partitions(n):
        if is_t_core(p, t):
            j = bg_rank(p)
            out[j] = out.get(j, 0) + 1
    return out


def count_cores_by_rank(n: int, t: int, j: int) -> int:
    """Number of t-cores of n whose parity-alternating rank equals j."""
    return rank_histogram(n, t).get(j, 0)


def core_rank_census(max_n: int, t: int) -> list:
    """Rows 0..max_n of rank_histogram, computed in one pass."""
    rows: list[dict[int, int]] = [dict() for _ in range(max_n + 1)]
    for n in range(max_n + 1):
        for p in enumerate_partitions(n):
            if is_t_core(p, t):
                j = bg_rank(p)
                rows[n][j] = rows[n].get(j, 0) + 1
    return rows


@dataclass(frozen=True)
class LatticeSpec:
    """Selection of lattice vectors: dimension t plus a parity filter.

    residues is either None (keep every vector) or a frozenset of 0/1
    tuples of length t; a vector is kept when its coordinate parities
    match one of them.  The offset vector weighting the linear term is
    always (0, 1, ..., t-1); it is stored explicitly so an instance is fully
    self-describing, and validated rather than trusted.
    """

    t: int
    residues: Optional[frozenset] = None
    offset: tuple = ()

    def __post_init__(self):
        if self.t < 2:
            raise ValueError(f"t must be at least 2, got {self.t}")
        canonical = tuple(range(self.t))
        if self.offset == ():
            object.__setattr__(self, "offset", canonical)
        elif self.offset != canonical:
            raise ValueError(
                f"offset must be {canonical}, got {self.offset}"
            )
        if self.residues is not None:
            for pattern in self.residues:
                if len(pattern) != self.t:
                    raise ValueError(
                        f"parity pattern {pattern} does not have length {self.t}"
                    )
                if any(bit not in (0, 1) for bit in pattern):
                    raise ValueError(
                        f"parity pattern {pattern} must contain only 0 and 1"
                    )


_RANK_FLIPS = {2: 0, 1: 2, 0: 4, -1: 6}
_ODD_BASE = (1, 0, 1, 0, 1, 0, 1)


def rank_residue_classes(j: int) -> frozenset:
    """Parity patterns of 7-dimensional vectors whose cores have rank j.

    Patterns at Hamming distance 0, 2, 4, 6 from (1,0,1,0,1,0,1) carry
    ranks 2, 1, 0, -1; the four families exhaust all 64 patterns with an
    even number of odd coordinates.
    """
    if j not in _RANK_FLIPS:
        raise ValueError(f"rank class must be in -1..2, got {j}")
    flips = _RANK_FLIPS[j]
    out = set()
    for idxs in combinations(range(7), flips):
        v = list(_ODD_BASE)
        for i in idxs:
            v[i] ^= 1
        out.add(tuple(v))
    return frozenset(out)


@lru_cache(maxsize=None)
def _residue_series(t: int, order: int):
    """Lattice point counts bucketed by coordinate parity pattern.

    Works in doubled exponents e2 = t*|v|^2 + 2*b.v with b = (0..t-1),
    which is always even for vectors summing to zero.  Returns a mapping
    from parity bitmask (bit i = v_i mod 2) to a coefficient tuple.
    """
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    n2 = 2 * order
    min2 = [min(0, t - 2 * i) for i in range(t)]
    total_min = sum(min2)

    def box_excludes(radius: int) -> bool:
        # No vector with some |v_i| = radius fits under n2 even when all
        # other coordinates sit at their unconstrained minima.
        return all(
            t * radius * radius - 2 * i * radius + (total_min - min2[i]) > n2
            for i in range(t)
        )

    m_bound = 0
    while not box_excludes(m_bound + 1):
        m_bound += 1
    assert box_excludes(m_bound + 1)

    suffmin = [0] * (t + 1)
    for i in range(t - 1, -1, -1):
        suffmin[i] = suffmin[i + 1] + min2[i]

    buckets: dict[int, list[int]] = {}

    def close(i: int, s: int, e2: int, mask: int) -> None:
        # Last free coordinate x at index t-2; index t-1 takes -(s + x).
        # Doubled total is 2t*x^2 + 2(ts-1)*x + e2 + t*s^2 - 2(t-1)*s.
        bq = t * s - 1
        c0 = e2 + t * s * s - 2 * (t - 1) * s - n2

        def q(x: int) -> int:
            return 2 * t * x * x + 2 * bq * x + c0

        disc = bq * bq - 2 * t * c0
        if disc < 0:
            return
        root = isqrt(disc)
        lo = (-bq - root) // (2 * t)
        hi = (-bq + root) // (2 * t)
        while q(lo - 1) <= 0:
            lo -= 1
        while lo <= hi and q(lo) > 0:
            lo += 1
        while q(hi + 1) <= 0:
            hi += 1
        while hi >= lo and q(hi) > 0:
            hi -= 1
        for x in range(lo, hi + 1):
            y = -(s + x)
            e2_total = q(x) + n2
            assert e2_total % 2 == 0 and 0 <= e2_total <= n2
            full = mask | ((x & 1) << (t - 2)) | ((y & 1) << (t - 1))
            row = buckets.get(full)
            if row is None:
                row = buckets[full] = [0] * (order + 1)
            row[e2_total // 2] += 1

    def visit(i: int, s: int, e2: int, mask: int) -> None:
        if i == t - 2:
            close(i, s, e2, mask)
            return
        floor_rest = suffmin[i + 1]
        for x in range(-m_bound, m_bound + 1):
            contrib = t * x * x + 2 * i * x
            if e2 + contrib + floor_rest > n2:
                continue
            visit(i + 1, s + x, e2 + contrib, mask | ((x & 1) << i))

    visit(0, 0, 0, 0)
    return MappingProxyType(
        {mask: tuple(row) for mask, row in buckets.items()}
    )


def _pattern_mask(pattern: tuple) -> int:
    mask = 0
    for i, bit in enumerate(pattern):
        mask |= bit << i
    return mask


@lru_cache(maxsize=None)
def lattice_theta(spec: LatticeSpec, order: int) -> TruncSeries:
    """Generating function of the selected lattice vectors by exponent."""
    table = _residue_series(spec.t, order)
    if spec.residues is None:
        masks = list(table)
    else:
        masks = [_pattern_mask(p) for p in spec.residues]
    cs = [0] * (order + 1)
    for mask in masks:
        row = table.get(mask)
        if row is None:
            continue
        for k, c in enumerate(row):
            cs[k] += c
    return TruncSeries(order, cs)


def lattice_sum(t: int, order: int) -> TruncSeries:
    """Full t-core generating function from the lattice view."""
    return lattice_theta(LatticeSpec(t, None), order)


def lattice_rank_sum(j: int, order: int) -> TruncSeries:
    """Generating function of 7-cores with rank j, from the lattice view."""
    return lattice_theta(LatticeSpec(7, rank_residue_classes(j)), order)
