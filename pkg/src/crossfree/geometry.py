"""Labeled convex configurations and non-crossing path partitions.

Conventions used throughout the package:

* Points in convex position carry labels 1..n in clockwise order.  Only the
  cyclic label order matters for crossing questions, so a configuration
  stores no coordinates.
* A path partition is a set of vertex-disjoint paths covering every label;
  an isolated point (a singleton) counts as a path of length 0.
* Canonical form: each path is written with its smaller endpoint first and
  paths are sorted by their smallest label.  Two partitions are equal
  exactly when their canonical forms are structurally equal.

Partition classes:

* NCP     - every component is a path, singletons allowed.
* NCPWS   - NCP with no singletons.
* ORDERED - NCP such that no path endpoint (singletons count as endpoints)
            lies strictly between the endpoints of another path.
* ORDERED2 - a relaxation of ORDERED whose published definition is
            ambiguous; see :func:`is_ordered2` for the variants exposed
            here.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


class PartitionClass(enum.Enum):
    """Taxonomy tags for path partitions."""

    NCP = "ncp"
    NCPWS = "ncpws"
    ORDERED = "ordered"
    ORDERED2 = "ordered2"


class VertexRole(enum.Enum):
    SINGLETON = "singleton"
    ENDPOINT = "endpoint"
    MIDDLE = "middle"


ORDERED2_VARIANTS = ("A", "B", "C")


@dataclass(frozen=True)
class ConvexConfig:
    """n points in convex position, labeled 1..n clockwise."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"point count must be a positive integer, got {self.n!r}")


def chords_cross(a: int, b: int, c: int, d: int, n: int) -> bool:
    """True iff chords {a,b} and {c,d} of a convex n-gon properly cross.

    Chords cross exactly when one of c, d lies strictly between a and b in
    cyclic order.  Chords sharing an endpoint never cross.
    """
    for label in (a, b, c, d):
        if not isinstance(label, int) or not 1 <= label <= n:
            raise ValueError(f"label {label!r} out of range 1..{n}")
    if a == b or c == d:
        raise ValueError("a chord needs two distinct endpoints")
    if {a, b} == {c, d}:
        raise ValueError("chords must be distinct")
    if {a, b} & {c, d}:
        return False
    lo, hi = (a, b) if a < b else (b, a)
    return (lo < c < hi) != (lo < d < hi)


def _canonical_paths(paths: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    oriented = []
    for path in paths:
        seq = tuple(path)
        if len(seq) > 1 and seq[-1] < seq[0]:
            seq = seq[::-1]
        oriented.append(seq)
    return tuple(sorted(oriented, key=min))


@dataclass(frozen=True)
class PathPartition:
    """A non-crossing path partition in canonical form.

    Construct via :meth:`from_paths`, which canonicalizes and validates;
    the raw constructor trusts its input.
    """

    config: ConvexConfig
    paths: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def k(self) -> int:
        """Number of paths (singletons included)."""
        return len(self.paths)

    @classmethod
    def from_paths(
        cls,
        n: int,
        paths: Iterable[Sequence[int]],
        validate: bool = True,
    ) -> "PathPartition":
        config = ConvexConfig(n)
        canonical = _canonical_paths(paths)
        part = cls(config, canonical)
        if validate:
            part.check()
        return part

    def check(self) -> None:
        """Raise ValueError on any invariant violation."""
        n = self.n
        seen: set[int] = set()
        for idx, path in enumerate(self.paths):
            if len(path) == 0:
                raise ValueError(f"paths[{idx}]: empty path")
            for pos, label in enumerate(path):
                if not isinstance(label, int) or not 1 <= label <= n:
                    raise ValueError(
                        f"paths[{idx}][{pos}]: label {label!r} not in 1..{n}"
                    )
                if label in seen:
                    raise ValueError(f"paths[{idx}][{pos}]: label {label} repeated")
                seen.add(label)
        if len(seen) != n:
            missing = sorted(set(range(1, n + 1)) - seen)
            raise ValueError(f"paths: labels {missing} missing")
        edges = list(self.edges())
        for i in range(len(edges)):
            a, b = edges[i]
            for j in range(i + 1, len(edges)):
                c, d = edges[j]
                if {a, b} == {c, d}:
                    raise ValueError(f"duplicate edge ({a},{b})")
                if chords_cross(a, b, c, d, n):
                    raise ValueError(f"edges ({a},{b}) and ({c},{d}) cross")

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (small, large) label pairs."""
        for path in self.paths:
            for u, v in zip(path, path[1:]):
                yield (u, v) if u < v else (v, u)

    def has_singleton(self) -> bool:
        return any(len(path) == 1 for path in self.paths)

    def endpoint_interval(self, path: Sequence[int]) -> tuple[int, int]:
        """Endpoint pair (i, j) with i <= j; a singleton yields (v, v)."""
        i, j = path[0], path[-1]
        return (i, j) if i <= j else (j, i)

    def to_json(self) -> dict:
        return {"n": self.n, "paths": [list(p) for p in self.paths]}

    @classmethod
    def from_json(cls, data: "Mapping | str") -> "PathPartition":
        return parse_partition(data)


def parse_partition(data: "Mapping | str") -> PathPartition:
    """Parse partition JSON, rejecting invariant violations with a field diagnostic."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    if not isinstance(data, Mapping):
        raise ValueError("partition JSON must be an object")
    for field in ("n", "paths"):
        if field not in data:
            raise ValueError(f"{field}: missing field")
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n: expected a positive integer, got {n!r}")
    paths = data["paths"]
    if not isinstance(paths, list) or not all(isinstance(p, list) for p in paths):
        raise ValueError("paths: expected a list of label lists")
    return PathPartition.from_paths(n, paths)


def vertex_roles(part: PathPartition) -> dict[int, VertexRole]:
    """Role of every point: singleton, path endpoint, or path middle."""
    roles: dict[int, VertexRole] = {}
    for path in part.paths:
        if len(path) == 1:
            roles[path[0]] = VertexRole.SINGLETON
        else:
            roles[path[0]] = VertexRole.ENDPOINT
            roles[path[-1]] = VertexRole.ENDPOINT
            for label in path[1:-1]:
                roles[label] = VertexRole.MIDDLE
    return roles


def is_ordered(part: PathPartition) -> bool:
    """ORDERED test: no endpoint of any other path lies strictly between the
    endpoints of a path.  Singletons count as endpoints."""
    intervals = [part.endpoint_interval(p) for p in part.paths]
    for p_idx, (i, j) in enumerate(intervals):
        if i == j:
            continue
        for q_idx, (a, b) in enumerate(intervals):
            if q_idx == p_idx:
                continue
            if i < a < j or i < b < j:
                return False
    return True


def is_ordered2(part: PathPartition, variant: str = "A") -> bool:
    """2-ORDERED test under an explicit interpretation variant.

    The published definition ("contains exactly one path between i and j, or
    is contained in another path") leaves open what "contains" and the role
    of singletons are.  Variants:

    * ``"A"`` (default): every non-singleton path with endpoints i < j either
      has exactly one other path whose endpoints both lie strictly inside
      (i, j), or has its endpoint interval strictly contained in another
      path's endpoint interval.  Singletons count as containable paths and
      are themselves unconstrained.
    * ``"B"``: as A, but singletons are constrained too - each singleton must
      lie strictly inside some other path's endpoint interval.
    * ``"C"``: as A, but only non-singleton paths count toward the
      "exactly one contained path" condition.
    """
    if variant not in ORDERED2_VARIANTS:
        raise ValueError(f"unknown 2-ordered variant {variant!r}; expected one of {ORDERED2_VARIANTS}")
    intervals = [part.endpoint_interval(p) for p in part.paths]
    for p_idx, (i, j) in enumerate(intervals):
        singleton = i == j
        if singleton and variant != "B":
            continue
        inside = 0
        contained = False
        for q_idx, (a, b) in enumerate(intervals):
            if q_idx == p_idx:
                continue
            if i < a and b < j:
                if variant != "C" or a != b:
                    inside += 1
            if a < b and a < i and j < b:
                contained = True
        if singleton:
            # variant B: a lone point must sit inside some path's interval
            if not contained:
                return False
        elif inside != 1 and not contained:
            return False
    return True


def classify_partition(part: PathPartition) -> frozenset[PartitionClass]:
    """All core classes the partition belongs to (2-ordered membership is
    variant-dependent and exposed separately via :func:`is_ordered2`)."""
    tags = {PartitionClass.NCP}
    if not part.has_singleton():
        tags.add(PartitionClass.NCPWS)
    if is_ordered(part):
        tags.add(PartitionClass.ORDERED)
    return frozenset(tags)
