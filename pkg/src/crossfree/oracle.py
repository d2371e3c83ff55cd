"""Independent brute-force enumerators: ground truth for the closed forms.

Valid edge sets are enumerated by depth-first backtracking over the chords
of the convex polygon in lexicographic order, pruning on first violation of
degree <= 2, acyclicity, or a chord crossing.  The constraints are
hereditary, so the search tree has exactly one node per partition and the
work is proportional to the number of partitions, not to 2^(number of
chords).

Enumeration is deliberately independent of the recurrence module: it never
multiplies counts, it walks actual edge sets.  Guard limits are hard
refusals so the oracle keeps its finishes-in-minutes contract; the
CROSSFREE_GUARD_OVERRIDE environment variable raises them at the caller's
own risk.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .geometry import (
    PartitionClass,
    PathPartition,
    VertexRole,
    is_ordered,
    is_ordered2,
)

ENUM_GUARD = 12
ORDERED2_GUARD = 14


class GuardLimitError(ValueError):
    """Raised when a brute-force size guard is exceeded."""


def _guard(n: int, limit: int, what: str) -> None:
    override = os.environ.get("CROSSFREE_GUARD_OVERRIDE")
    if override:
        limit = max(limit, int(override))
    if n > limit:
        raise GuardLimitError(
            f"{what} refuses n={n}: guard limit is {limit} so runs finish in "
            f"minutes (set CROSSFREE_GUARD_OVERRIDE to raise it at your own risk)"
        )
    if n < 1:
        raise ValueError(f"{what} needs n >= 1, got {n}")


@dataclass
class EnumerationReport:
    """Totals and histograms from one exhaustive enumeration."""

    n: int
    partition_class: PartitionClass
    variant: str | None = None
    total: int = 0
    by_path_count: dict[int, int] = field(default_factory=dict)
    by_role_of_1: dict[VertexRole, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "class": self.partition_class.value,
            "variant": self.variant,
            "total": str(self.total),
            "by_path_count": {str(k): str(v) for k, v in sorted(self.by_path_count.items())},
            "by_role_of_1": {r.value: str(v) for r, v in sorted(self.by_role_of_1.items(), key=lambda kv: kv[0].value)},
        }


def _chord_table(n: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Lexicographic chord list and, per chord, a bitmask of crossing chords."""
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    index = {e: i for i, e in enumerate(edges)}
    masks = [0] * len(edges)
    for i, (a, b) in enumerate(edges):
        for c in range(a + 1, b):
            for d in range(b + 1, n + 1):
                # chords (a,b) and (c,d) with a < c < b < d strictly interleave
                j = index[(c, d)]
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return edges, masks


def _scan(n: int, on_node: Callable[[list[int], list[int]], None]) -> None:
    """Visit every valid edge set once; on_node sees degree and component arrays."""
    edges, masks = _chord_table(n)
    m = len(edges)
    deg = [0] * (n + 1)
    comp = list(range(n + 1))

    def rec(start: int, forbidden: int) -> None:
        on_node(deg, comp)
        for e in range(start, m):
            if (forbidden >> e) & 1:
                continue
            a, b = edges[e]
            if deg[a] == 2 or deg[b] == 2:
                continue
            ca, cb = comp[a], comp[b]
            if ca == cb:
                continue
            deg[a] += 1
            deg[b] += 1
            moved = [v for v in range(1, n + 1) if comp[v] == cb]
            for v in moved:
                comp[v] = ca
            rec(e + 1, forbidden | masks[e])
            for v in moved:
                comp[v] = cb
            deg[a] -= 1
            deg[b] -= 1

    rec(0, 0)


def _intervals(n: int, deg: list[int], comp: list[int]) -> list[tuple[int, int]]:
    """Per component, the (min, max) pair of its endpoint labels.

    Endpoints are the degree <= 1 vertices; a singleton contributes (v, v).
    """
    lo: dict[int, int] = {}
    hi: dict[int, int] = {}
    for v in range(1, n + 1):
        if deg[v] > 1:
            continue
        c = comp[v]
        if c in lo:
            hi[c] = v  # labels scanned in increasing order
        else:
            lo[c] = hi[c] = v
    return [(lo[c], hi[c]) for c in lo]


def _sorted_disjoint(intervals: list[tuple[int, int]]) -> bool:
    """ORDERED check used by the counting pass: endpoint intervals of an
    ordered partition are pairwise disjoint, i.e. grouped when sorted."""
    intervals = sorted(intervals)
    return all(intervals[t][1] < intervals[t + 1][0] for t in range(len(intervals) - 1))


def _ordered2_ok(intervals: list[tuple[int, int]], variant: str) -> bool:
    """2-ordered check on endpoint intervals; mirrors geometry.is_ordered2."""
    for p, (i, j) in enumerate(intervals):
        singleton = i == j
        if singleton and variant != "B":
            continue
        inside = 0
        contained = False
        for q, (a, b) in enumerate(intervals):
            if q == p:
                continue
            if i < a and b < j and (variant != "C" or a != b):
                inside += 1
            if a < b and a < i and j < b:
                contained = True
        if singleton:
            if not contained:
                return False
        elif inside != 1 and not contained:
            return False
    return True


def all_class_reports(n: int, variant: str = "A") -> dict[PartitionClass, EnumerationReport]:
    """Reports for NCP, NCPWS, ORDERED and ORDERED2 from a single scan."""
    _guard(n, ENUM_GUARD, "partition enumeration")
    reports = {
        cls: EnumerationReport(n, cls, variant if cls is PartitionClass.ORDERED2 else None)
        for cls in PartitionClass
    }
    roles = {0: VertexRole.SINGLETON, 1: VertexRole.ENDPOINT, 2: VertexRole.MIDDLE}

    def tally(report: EnumerationReport, k: int, role: VertexRole) -> None:
        report.total += 1
        report.by_path_count[k] = report.by_path_count.get(k, 0) + 1
        report.by_role_of_1[role] = report.by_role_of_1.get(role, 0) + 1

    def on_node(deg: list[int], comp: list[int]) -> None:
        intervals = _intervals(n, deg, comp)
        k = len(intervals)
        role = roles[deg[1]]
        tally(reports[PartitionClass.NCP], k, role)
        if not any(i == j for i, j in intervals):
            tally(reports[PartitionClass.NCPWS], k, role)
        if _sorted_disjoint(intervals):
            tally(reports[PartitionClass.ORDERED], k, role)
        if _ordered2_ok(intervals, variant):
            tally(reports[PartitionClass.ORDERED2], k, role)

    _scan(n, on_node)
    return reports


def enumeration_report(
    n: int, partition_class: PartitionClass = PartitionClass.NCP, variant: str = "A"
) -> EnumerationReport:
    """Exhaustive totals for one class (single scan, nothing materialized)."""
    return all_class_reports(n, variant)[partition_class]


def enumerate_partitions(
    n: int,
    partition_class: PartitionClass = PartitionClass.NCP,
    variant: str = "A",
) -> Iterator[PathPartition]:
    """Stream every partition of the class once, in canonical form.

    The class filters use the literal predicates from the geometry module,
    which keeps this stream independent of the interval shortcuts in the
    counting pass; tests pin the two against each other.
    """
    _guard(n, ENUM_GUARD, "partition enumeration")
    edges, masks = _chord_table(n)
    m = len(edges)
    deg = [0] * (n + 1)
    comp = list(range(n + 1))
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}

    def build() -> PathPartition:
        paths = []
        seen = set()
        for v in range(1, n + 1):
            if v in seen or len(adj[v]) == 2:
                continue
            # walk from a free end (or isolated vertex) to the other end
            path = [v]
            seen.add(v)
            cur = v
            while True:
                nxt = [w for w in adj[cur] if w not in seen]
                if not nxt:
                    break
                cur = nxt[0]
                path.append(cur)
                seen.add(cur)
            paths.append(path)
        return PathPartition.from_paths(n, paths, validate=False)

    def keep(part: PathPartition) -> bool:
        if partition_class is PartitionClass.NCP:
            return True
        if partition_class is PartitionClass.NCPWS:
            return not part.has_singleton()
        if partition_class is PartitionClass.ORDERED:
            return is_ordered(part)
        return is_ordered2(part, variant)

    def rec(start: int, forbidden: int) -> Iterator[PathPartition]:
        part = build()
        if keep(part):
            yield part
        for e in range(start, m):
            if (forbidden >> e) & 1:
                continue
            a, b = edges[e]
            if deg[a] == 2 or deg[b] == 2:
                continue
            ca, cb = comp[a], comp[b]
            if ca == cb:
                continue
            deg[a] += 1
            deg[b] += 1
            adj[a].append(b)
            adj[b].append(a)
            moved = [v for v in range(1, n + 1) if comp[v] == cb]
            for v in moved:
                comp[v] = ca
            yield from rec(e + 1, forbidden | masks[e])
            for v in moved:
                comp[v] = cb
            adj[a].pop()
            adj[b].pop()
            deg[a] -= 1
            deg[b] -= 1

    yield from rec(0, 0)


def role_counts(
    n: int, partition_class: PartitionClass = PartitionClass.NCP
) -> tuple[int, int, int]:
    """How often point 1 is a singleton / endpoint / middle across the class.

    For NCP these are exactly g(n-1), f(n), h(n), the three terms of the
    role-split recurrence.
    """
    report = enumeration_report(n, partition_class)
    by_role = report.by_role_of_1
    return (
        by_role.get(VertexRole.SINGLETON, 0),
        by_role.get(VertexRole.ENDPOINT, 0),
        by_role.get(VertexRole.MIDDLE, 0),
    )


@dataclass
class Ordered2Growth:
    """Exploratory 2-ordered totals; no published table exists to pin them."""

    variant: str
    counts: dict[int, int]
    ratios: dict[int, float]
    last_ratio: float | None

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "counts": {str(n): str(c) for n, c in sorted(self.counts.items())},
            "ratios": {str(n): format(r, ".15g") for n, r in sorted(self.ratios.items())},
            "last_ratio": None if self.last_ratio is None else format(self.last_ratio, ".15g"),
        }


def ordered2_count(n: int, variant: str = "A") -> int:
    """Exact number of 2-ordered partitions on n convex points.

    Uses the compiled exhaustive counter when available (same search as
    :func:`_scan`, same interval predicate); falls back to the pure-Python
    scan otherwise.  Both routes are cross-checked in the tests.
    """
    if variant not in ("A", "B", "C"):
        raise ValueError(f"unknown 2-ordered variant {variant!r}")
    _guard(n, ORDERED2_GUARD, "2-ordered enumeration")
    from . import _fastcount

    result = _fastcount.count_ordered2(n, variant)
    if result is not None:
        return result
    count = 0

    def on_node(deg: list[int], comp: list[int]) -> None:
        nonlocal count
        if _ordered2_ok(_intervals(n, deg, comp), variant):
            count += 1

    _scan(n, on_node)
    return count


def estimate_ordered2_growth(n_max: int, variant: str = "A") -> Ordered2Growth:
    """Table of 2-ordered counts for 1..n_max plus consecutive ratios.

    Exploratory output: the growth constant for this class is an open
    published claim without a table, so nothing here is asserted against a
    target value.
    """
    _guard(n_max, ORDERED2_GUARD, "2-ordered enumeration")
    counts = {n: ordered2_count(n, variant) for n in range(1, n_max + 1)}
    ratios = {
        n: counts[n] / counts[n - 1]
        for n in range(2, n_max + 1)
        if counts[n - 1] > 0
    }
    last = ratios[max(ratios)] if ratios else None
    return Ordered2Growth(variant, counts, ratios, last)
