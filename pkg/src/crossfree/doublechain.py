"""Double chains: realization, crossing predicate, and the polygonization
correspondence.

A double chain splits N = n + m points into an upper chain U (labels 1..n,
left to right) and a lower chain L (labels n+1..n+m, left to right) such
that

* each chain is strictly convex and the chains have opposed concavity, with
  U dipping toward L and L rising toward U (so for n, m >= 3 the middle
  points are not on the convex hull);
* the line through any two points of U keeps every point of L strictly
  below, and the line through any two points of L keeps every point of U
  strictly above.

Edges inside a chain behave exactly like chords of a convex polygon.  An
edge joining the chains is called alternating.  The separation properties
give the alternating edges a purely combinatorial crossing rule, so all
double-chain operations here are coordinate-free; the rational-coordinate
realization exists to validate that rule and to render pictures.

The central correspondence: removing the 2k alternating edges of a
polygonization leaves one k-path partition per chain, and gluing two
equal-k partitions back together connects their endpoint slots in order,
left to right (a singleton contributes two coincident slots).  Composition
yields a single Hamiltonian cycle, several disjoint cycles, or a repeated
alternating edge; which one depends only on the pair, never on crossings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .geometry import PathPartition, is_ordered
from .oracle import GuardLimitError, _guard, enumerate_partitions

Edge = tuple[int, int]

PAIR_GUARD = 12
GEOMETRIC_GUARD = 10
AB_GUARD = 16


@dataclass(frozen=True)
class DoubleChainConfig:
    """Chain sizes; labels 1..n_upper on U, then n_upper+1..n_upper+n_lower on L."""

    n_upper: int
    n_lower: int

    def __post_init__(self) -> None:
        if self.n_upper < 1 or self.n_lower < 1:
            raise ValueError("both chains need at least one point")

    @property
    def total(self) -> int:
        return self.n_upper + self.n_lower

    def is_upper(self, label: int) -> bool:
        self.check_label(label)
        return label <= self.n_upper

    def check_label(self, label: int) -> None:
        if not isinstance(label, int) or not 1 <= label <= self.total:
            raise ValueError(f"label {label!r} out of range 1..{self.total}")

    def position(self, label: int) -> int:
        """1-based position within the label's own chain, left to right."""
        self.check_label(label)
        return label if label <= self.n_upper else label - self.n_upper


@dataclass(frozen=True)
class ChainRealization:
    config: DoubleChainConfig
    coordinates: Mapping[int, tuple[Fraction, Fraction]]


def realize(config: DoubleChainConfig, validate: bool = True) -> ChainRealization:
    """Rational coordinates for a double chain of the given sizes.

    U point i sits at (i, (i-(n+1)/2)^2 + H) and L point n+j at
    (j, -(j-(m+1)/2)^2 - H) with H = 2*max(n,m)^2 + 1.  The parabola arcs
    face each other and H is large enough for both separation properties;
    the choice is a convention, validation is the contract.
    """
    n, m = config.n_upper, config.n_lower
    h = 2 * max(n, m) ** 2 + 1
    coords: dict[int, tuple[Fraction, Fraction]] = {}
    for i in range(1, n + 1):
        coords[i] = (Fraction(i), Fraction((2 * i - n - 1) ** 2, 4) + h)
    for j in range(1, m + 1):
        coords[n + j] = (Fraction(j), -Fraction((2 * j - m - 1) ** 2, 4) - h)
    real = ChainRealization(config, coords)
    if validate:
        ok, reason = validate_double_chain(real, config)
        if not ok:
            raise AssertionError(f"built-in realization failed validation: {reason}")
    return real


def _orient(p, q, r) -> int:
    """Sign of the cross product (q-p) x (r-p); exact on Fractions."""
    value = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (value > 0) - (value < 0)


def validate_double_chain(
    real: ChainRealization, config: DoubleChainConfig
) -> tuple[bool, str | None]:
    """Exhaustive exact check of the double-chain defining properties.

    Returns (True, None) or (False, first violated property).  Exact
    rational arithmetic throughout - no floating-point orientation errors.
    """
    n, m = config.n_upper, config.n_lower
    coords = real.coordinates
    for label in range(1, n + m + 1):
        if label not in coords:
            raise ValueError(f"label {label} has no coordinates")
    upper = [coords[i] for i in range(1, n + 1)]
    lower = [coords[n + j] for j in range(1, m + 1)]

    for name, pts in (("U", upper), ("L", lower)):
        for p, q in zip(pts, pts[1:]):
            if not p[0] < q[0]:
                return False, f"{name} is not ordered left to right"
    # opposed concavity: U turns left (dips toward L), L turns right
    for name, pts, sign in (("U", upper, 1), ("L", lower, -1)):
        for p, q, r in zip(pts, pts[1:], pts[2:]):
            if _orient(p, q, r) != sign:
                return False, f"{name} is not strictly convex with the right concavity"
    for i in range(n):
        for j in range(i + 1, n):
            for point in lower:
                if _orient(upper[i], upper[j], point) != -1:
                    return False, (
                        f"line through U points {i + 1},{j + 1} does not leave "
                        f"all of L strictly below"
                    )
    for i in range(m):
        for j in range(i + 1, m):
            for point in upper:
                if _orient(lower[i], lower[j], point) != 1:
                    return False, (
                        f"line through L points {i + 1},{j + 1} does not leave "
                        f"all of U strictly above"
                    )
    return True, None


def edge_kind(edge: Edge, config: DoubleChainConfig) -> str:
    a, b = edge
    ua, ub = config.is_upper(a), config.is_upper(b)
    if ua and ub:
        return "upper"
    if not ua and not ub:
        return "lower"
    return "alternating"


def edges_cross_dc(e1: Edge, e2: Edge, config: DoubleChainConfig) -> bool:
    """Combinatorial crossing predicate for double-chain edges.

    Within a chain the convex rule applies: two chords cross iff their
    position intervals strictly interleave.  Two alternating edges
    (u_a, l_b), (u_c, l_d) cross iff (a-c)(b-d) < 0.  A chain chord never
    crosses an alternating edge: the separation properties put both
    endpoints of every alternating edge strictly on one side of any line
    through two same-chain points.  Edges sharing an endpoint never cross.
    The predicate agrees with exact segment intersection on realizations;
    the tests pin that down.
    """
    for a, b in (e1, e2):
        config.check_label(a)
        config.check_label(b)
        if a == b:
            raise ValueError(f"edge ({a},{b}) is degenerate")
    if set(e1) & set(e2):
        return False
    k1, k2 = edge_kind(e1, config), edge_kind(e2, config)
    if k1 != k2:
        return False
    pos = config.position
    if k1 == "alternating":
        (a, b) = e1 if config.is_upper(e1[0]) else (e1[1], e1[0])
        (c, d) = e2 if config.is_upper(e2[0]) else (e2[1], e2[0])
        return (pos(a) - pos(c)) * (pos(b) - pos(d)) < 0
    lo1, hi1 = sorted((pos(e1[0]), pos(e1[1])))
    lo2, hi2 = sorted((pos(e2[0]), pos(e2[1])))
    return (lo1 < lo2 < hi1) != (lo1 < hi2 < hi1)


def segments_properly_cross(real: ChainRealization, e1: Edge, e2: Edge) -> bool:
    """Exact geometric proper-intersection test on a realization."""
    if set(e1) & set(e2):
        return False
    coords = real.coordinates
    p1, p2 = coords[e1[0]], coords[e1[1]]
    q1, q2 = coords[e2[0]], coords[e2[1]]
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    return d1 * d2 < 0 and d3 * d4 < 0


@dataclass(frozen=True)
class ChainGraph:
    """An edge set over a double chain; edges stored as (small, large) pairs."""

    config: DoubleChainConfig
    edges: frozenset[Edge]

    @classmethod
    def from_edges(
        cls, config: DoubleChainConfig, edges, validate: bool = True
    ) -> "ChainGraph":
        normal = frozenset(
            (a, b) if a < b else (b, a) for a, b in (tuple(e) for e in edges)
        )
        graph = cls(config, normal)
        if validate:
            graph.check()
        return graph

    def check(self) -> None:
        edges = sorted(self.edges)
        for a, b in edges:
            self.config.check_label(a)
            self.config.check_label(b)
            if a == b:
                raise ValueError(f"edge ({a},{b}) is degenerate")
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if edges_cross_dc(edges[i], edges[j], self.config):
                    raise ValueError(f"edges {edges[i]} and {edges[j]} cross")

    def degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in range(1, self.config.total + 1)}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def alternating_edges(self) -> list[Edge]:
        return sorted(e for e in self.edges if edge_kind(e, self.config) == "alternating")

    def to_json(self) -> dict:
        return {
            "n_upper": self.config.n_upper,
            "n_lower": self.config.n_lower,
            "edges": [list(e) for e in sorted(self.edges)],
        }

    @classmethod
    def from_json(cls, data: Mapping, validate: bool = True) -> "ChainGraph":
        for field in ("n_upper", "n_lower", "edges"):
            if field not in data:
                raise ValueError(f"{field}: missing field")
        config = DoubleChainConfig(data["n_upper"], data["n_lower"])
        return cls.from_edges(config, data["edges"], validate=validate)


class CompositionStatus(enum.Enum):
    POLYGONIZATION = "polygonization"
    MULTI_CYCLE = "multi-cycle"
    CROSSING = "crossing"
    DUPLICATED_EDGE = "duplicated-edge"


@dataclass(frozen=True)
class CompositionOutcome:
    status: CompositionStatus
    graph: ChainGraph
    cycle_count: int | None = None
    duplicated_edges: tuple[Edge, ...] = ()

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "cycle_count": self.cycle_count,
            "duplicated_edges": [list(e) for e in self.duplicated_edges],
            "graph": self.graph.to_json(),
        }


def _multigraph_cycles(total: int, edges: Sequence[Edge]) -> list[list[int]]:
    """Cycle decomposition of a 2-regular multigraph (parallel edges allowed)."""
    incident: dict[int, list[int]] = {v: [] for v in range(1, total + 1)}
    for idx, (a, b) in enumerate(edges):
        incident[a].append(idx)
        incident[b].append(idx)
    used = [False] * len(edges)
    cycles = []
    for start in range(1, total + 1):
        fresh = [i for i in incident[start] if not used[i]]
        if not fresh:
            continue
        cycle = [start]
        current = start
        while True:
            step = next(i for i in incident[current] if not used[i])
            used[step] = True
            a, b = edges[step]
            current = b if current == a else a
            if current == start:
                break
            cycle.append(current)
        cycles.append(cycle)
    return cycles


def _is_single_path(graph: ChainGraph) -> bool:
    """Connected, acyclic, all degrees <= 2: one path through every point."""
    deg = graph.degrees()
    if sorted(deg.values()) != [1, 1] + [2] * (graph.config.total - 2):
        return False
    adj: dict[int, list[int]] = {v: [] for v in deg}
    for a, b in graph.edges:
        adj[a].append(b)
        adj[b].append(a)
    start = next(v for v, d in deg.items() if d == 1)
    seen = {start}
    prev, current = None, start
    while True:
        nxt = [w for w in adj[current] if w != prev]
        if not nxt:
            break
        prev, current = current, nxt[0]
        if current in seen:
            return False
        seen.add(current)
    return len(seen) == graph.config.total


def _slots(part: PathPartition) -> list[int]:
    """Endpoint slots in left-to-right position order; singletons twice."""
    slots: list[int] = []
    for path in part.paths:
        i, j = part.endpoint_interval(path)
        slots += [i, j]
    slots.sort()
    return slots


def _chain_edges(pu: PathPartition, pl: PathPartition, n: int) -> list[Edge]:
    edges = list(pu.edges())
    edges += [(a + n, b + n) for a, b in pl.edges()]
    return edges


def _partition_from_edges(n: int, edges: Sequence[Edge]) -> PathPartition:
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    paths = []
    seen: set[int] = set()
    for v in range(1, n + 1):
        if v in seen or len(adj[v]) == 2:
            continue
        path = [v]
        seen.add(v)
        current = v
        while True:
            nxt = [w for w in adj[current] if w not in seen]
            if not nxt:
                break
            current = nxt[0]
            path.append(current)
            seen.add(current)
        paths.append(path)
    if len(seen) != n:
        raise ValueError("chain edges do not decompose into paths")
    return PathPartition.from_paths(n, paths, validate=False)


def compose_pair(pu: PathPartition, pl: PathPartition) -> CompositionOutcome:
    """Glue two equal-k partitions with in-order alternating edges.

    U slot i is joined to L slot i for i = 1..2k.  The outcome is a
    polygonization, several non-crossing cycles, or a duplicated alternating
    edge (when a U singleton faces an L singleton); a crossing outcome is
    checked for defensively but cannot arise from in-order gluing.
    """
    if pu.k != pl.k:
        raise ValueError(
            f"path counts differ ({pu.k} on U, {pl.k} on L); gluing is undefined"
        )
    n, m = pu.n, pl.n
    config = DoubleChainConfig(n, m)
    su = _slots(pu)
    sl = _slots(pl)
    alternating = [(su[i], sl[i] + n) for i in range(2 * pu.k)]
    duplicates = tuple(sorted({e for e in alternating if alternating.count(e) > 1}))
    all_edges = _chain_edges(pu, pl, n) + alternating
    graph = ChainGraph.from_edges(config, set(all_edges), validate=False)

    distinct = sorted(set(alternating))
    for i in range(len(distinct)):
        for j in range(i + 1, len(distinct)):
            if edges_cross_dc(distinct[i], distinct[j], config):
                return CompositionOutcome(CompositionStatus.CROSSING, graph)

    cycles = _multigraph_cycles(config.total, all_edges)
    if len(cycles) == 1:
        if duplicates:
            return CompositionOutcome(
                CompositionStatus.DUPLICATED_EDGE, graph, 1, duplicates
            )
        return CompositionOutcome(CompositionStatus.POLYGONIZATION, graph, 1)
    return CompositionOutcome(
        CompositionStatus.MULTI_CYCLE, graph, len(cycles), duplicates
    )


def is_polygonization(graph: ChainGraph) -> bool:
    """Single non-crossing Hamiltonian cycle through all points?"""
    deg = graph.degrees()
    if any(d != 2 for d in deg.values()):
        return False
    cycles = _multigraph_cycles(graph.config.total, sorted(graph.edges))
    if len(cycles) != 1 or len(cycles[0]) != graph.config.total:
        return False
    edges = sorted(graph.edges)
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if edges_cross_dc(edges[i], edges[j], graph.config):
                return False
    return True


def decompose_polygonization(graph: ChainGraph) -> tuple[PathPartition, PathPartition, int]:
    """Split a polygonization into its chain partitions by dropping the
    alternating edges; both sides come out with k = (alternating count) / 2
    paths.  The lower partition is relabeled to 1..m."""
    if not is_polygonization(graph):
        raise ValueError("input is not a single non-crossing Hamiltonian cycle")
    n, m = graph.config.n_upper, graph.config.n_lower
    upper, lower, alternating = [], [], []
    for edge in graph.edges:
        kind = edge_kind(edge, graph.config)
        if kind == "upper":
            upper.append(edge)
        elif kind == "lower":
            lower.append((edge[0] - n, edge[1] - n))
        else:
            alternating.append(edge)
    if len(alternating) % 2:
        raise AssertionError("odd number of alternating edges in a cycle")
    k = len(alternating) // 2
    pu = _partition_from_edges(n, upper)
    pl = _partition_from_edges(m, lower)
    if pu.k != k or pl.k != k:
        raise AssertionError("chain partitions disagree with alternating edge count")
    return pu, pl, k


def build_hamiltonian_path(pu: PathPartition, pl: PathPartition) -> ChainGraph:
    """Glue two equal-k ordered partitions into a non-crossing Hamiltonian path.

    Skips the first U slot and the last L slot: U slot i+1 joins L slot i.
    Orderedness groups each chain's slot list by path, which makes the
    shifted matching chain the paths into U1-L1-U2-L2-...-Uk-Lk, a single
    path whose free ends are U slot 1's vertex and L slot 2k's vertex.
    """
    if not is_ordered(pu):
        raise ValueError("upper partition is not ordered")
    if not is_ordered(pl):
        raise ValueError("lower partition is not ordered")
    if pu.k != pl.k:
        raise ValueError(
            f"path counts differ ({pu.k} on U, {pl.k} on L); the construction needs equal k"
        )
    n = pu.n
    config = DoubleChainConfig(n, pl.n)
    su = _slots(pu)
    sl = _slots(pl)
    alternating = [(su[i + 1], sl[i] + n) for i in range(2 * pu.k - 1)]
    if len(set(alternating)) != len(alternating):
        raise AssertionError("ordered gluing produced a duplicate edge")
    graph = ChainGraph.from_edges(
        config, _chain_edges(pu, pl, n) + alternating, validate=True
    )
    deg = graph.degrees()
    free = sorted(v for v, d in deg.items() if d == 1)
    if free != sorted((su[0], sl[-1] + n)) or not _is_single_path(graph):
        raise AssertionError("ordered gluing did not produce a Hamiltonian path")
    return graph


def _hamiltonian_path_ends(graph: ChainGraph) -> tuple[int, int]:
    """Free ends (u_end, l_end) of a Hamiltonian path ChainGraph, validated."""
    config = graph.config
    if not _is_single_path(graph):
        raise ValueError("input is not a Hamiltonian path")
    deg = graph.degrees()
    u_end, l_end = sorted(v for v, d in deg.items() if d == 1)
    if not (config.is_upper(u_end) and not config.is_upper(l_end)):
        raise ValueError("free ends must be one upper and one lower point")
    return u_end, l_end


def close_to_polygonization(graph: ChainGraph) -> ChainGraph:
    """Extend a glued Hamiltonian path to a polygonization on (n+2, m+2).

    Adds one point at each end of U and two at the left end of L, then
    routes the free ends around the hull: the U free end drops to the new
    leftmost L points, climbs to the new leftmost U point, crosses over the
    top to the new rightmost U point, and drops to the L free end.  Every
    added edge is a hull-hugging chord or an extreme alternating edge, so
    the closure is non-crossing for every ordered gluing; the validated
    polygonization is the contract, the routing is a convention.
    """
    u_end, l_end = _hamiltonian_path_ends(graph)
    config = graph.config
    n, m = config.n_upper, config.n_lower
    for a, b in graph.alternating_edges():
        u, l = (a, b) if config.is_upper(a) else (b, a)
        if u < u_end or l > l_end:
            raise ValueError(
                "free ends are not extreme among the alternating attachments; "
                "the input must come from the ordered gluing"
            )
    big = DoubleChainConfig(n + 2, m + 2)
    # label shift: new U point 1 on the left, new U point n+2 on the right,
    # new L points n+3, n+4 on the left of the lower chain
    def shift(label: int) -> int:
        return label + 1 if label <= n else label + 4

    edges = [(shift(a), shift(b)) for a, b in graph.edges]
    edges += [
        (shift(u_end), n + 4),
        (n + 3, n + 4),
        (1, n + 3),
        (1, n + 2),
        (n + 2, shift(l_end)),
    ]
    closed = ChainGraph.from_edges(big, edges, validate=True)
    if not is_polygonization(closed):
        raise AssertionError("closure failed to produce a polygonization")
    return closed


def ab_family(
    i: int, config: DoubleChainConfig | None = None
) -> tuple[list[ChainGraph], list[ChainGraph]]:
    """The two alternating-edge partition families at step i.

    Members use only alternating edges among the first i points of each
    chain; every member is a no-singleton partition in which point i of U is
    joined to point i of L.  In family A both of those points are endpoints
    of their common path; in family B exactly one is.  Each A member spawns
    one A child and two B children, each B member one of each, seeded from
    the single edge u1-l1, so the family sizes obey the a/b recurrences.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    if i > AB_GUARD:
        raise GuardLimitError(
            f"alternating-edge families refuse i={i}: guard limit is {AB_GUARD} "
            f"(the families grow like (1+sqrt 2)^i)"
        )
    if config is None:
        config = DoubleChainConfig(i, i)
    if config.n_upper < i or config.n_lower < i:
        raise ValueError(f"config must have at least {i} points per chain")
    n = config.n_upper

    a_sets: set[frozenset[Edge]] = {frozenset({(1, n + 1)})}
    b_sets: set[frozenset[Edge]] = set()
    for step in range(2, i + 1):
        new_edge = (step, n + step)
        next_a: set[frozenset[Edge]] = set()
        next_b: set[frozenset[Edge]] = set()
        for member in a_sets:
            next_a.add(member | {new_edge})
            next_b.add(member | {new_edge, (step, n + step - 1)})
            next_b.add(member | {new_edge, (step - 1, n + step)})
        for member in b_sets:
            next_a.add(member | {new_edge})
            deg_lower = sum(1 for e in member if n + step - 1 in e)
            if deg_lower == 1:
                next_b.add(member | {new_edge, (step, n + step - 1)})
            else:
                next_b.add(member | {new_edge, (step - 1, n + step)})
        a_sets, b_sets = next_a, next_b
    make = lambda s: ChainGraph.from_edges(config, s, validate=False)
    return (
        [make(s) for s in sorted(a_sets, key=sorted)],
        [make(s) for s in sorted(b_sets, key=sorted)],
    )


def _partitions_by_k(n: int) -> dict[int, list[PathPartition]]:
    grouped: dict[int, list[PathPartition]] = {}
    for part in enumerate_partitions(n):
        grouped.setdefault(part.k, []).append(part)
    return grouped


def count_polygonizations_exact(config: DoubleChainConfig) -> int:
    """Polygonization count through the gluing correspondence.

    Iterates over all pairs of equal-k chain partitions and counts the
    compositions that close into a single Hamiltonian cycle.
    """
    _guard(config.total, PAIR_GUARD, "polygonization pair counting")
    upper = _partitions_by_k(config.n_upper)
    lower = _partitions_by_k(config.n_lower)
    count = 0
    for k, us in upper.items():
        for pu in us:
            for pl in lower.get(k, ()):
                outcome = compose_pair(pu, pl)
                if outcome.status is CompositionStatus.POLYGONIZATION:
                    count += 1
    return count


def _cycle_sequences(config: DoubleChainConfig) -> Iterator[list[int]]:
    """All Hamiltonian cycles, as label sequences starting at 1, up to
    rotation and reflection, whose straight-line drawing is non-crossing."""
    total = config.total
    if total < 3:
        return
    real = realize(config)
    labels = list(range(1, total + 1))
    pair_ids: dict[Edge, int] = {}
    pairs: list[Edge] = []
    for x in range(len(labels)):
        for y in range(x + 1, len(labels)):
            pair_ids[(labels[x], labels[y])] = len(pairs)
            pairs.append((labels[x], labels[y]))
    cross_mask = [0] * len(pairs)
    for p in range(len(pairs)):
        for q in range(p + 1, len(pairs)):
            if segments_properly_cross(real, pairs[p], pairs[q]):
                cross_mask[p] |= 1 << q
                cross_mask[q] |= 1 << p

    def pid(a: int, b: int) -> int:
        return pair_ids[(a, b) if a < b else (b, a)]

    seq = [1]
    used = [False] * (total + 1)
    used[1] = True

    def rec(chosen_mask: int) -> Iterator[list[int]]:
        if len(seq) == total:
            last_pid = pid(seq[-1], 1)
            if not (cross_mask[last_pid] & chosen_mask) and seq[1] < seq[-1]:
                yield list(seq)
            return
        for v in range(2, total + 1):
            if used[v]:
                continue
            p = pid(seq[-1], v)
            if cross_mask[p] & chosen_mask:
                continue
            used[v] = True
            seq.append(v)
            yield from rec(chosen_mask | (1 << p))
            seq.pop()
            used[v] = False

    yield from rec(0)


def enumerate_polygonizations(config: DoubleChainConfig) -> Iterator[ChainGraph]:
    """Geometric brute force: every polygonization of the realized chain."""
    _guard(config.total, GEOMETRIC_GUARD, "geometric polygonization enumeration")
    for seq in _cycle_sequences(config):
        edges = list(zip(seq, seq[1:])) + [(seq[-1], seq[0])]
        yield ChainGraph.from_edges(config, edges, validate=False)


def count_polygonizations_geometric(config: DoubleChainConfig) -> int:
    """Independent oracle for the exact count: enumerate Hamiltonian cycles
    up to rotation and reflection and keep the non-self-intersecting ones,
    using exact rational orientation tests on the realization."""
    _guard(config.total, GEOMETRIC_GUARD, "geometric polygonization enumeration")
    return sum(1 for _ in _cycle_sequences(config))
