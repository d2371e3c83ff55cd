"""Exact dynamic programming for the counting sequences.

Eleven sequence families are computed with arbitrary-precision integers:

* g, f, h    - non-crossing path partitions on n convex points: all of them,
               those where a fixed point is a path endpoint, and those where
               it is a path middle.  g(n) = g(n-1) + f(n) + h(n).
* gs, fs, hs - the same three counts with singletons forbidden;
               gs(n) = fs(n) + hs(n).
* go, fo, ho - the same for ordered partitions (no path endpoint strictly
               between the endpoints of another path).
* a, b       - sizes of the alternating-edge partition families on a double
               chain, a_i = a_{i-1} + b_{i-1}, b_i = 2 a_{i-1} + b_{i-1}.

Counts grow like 5.61^n and overflow 64-bit integers near n = 26, so
everything stays in Python ints.  The convolutions are the naive O(n^2)
scheme; n_max up to a few thousand is the supported envelope, which is all
the empirical growth-rate checks need.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class CountTable:
    """One integer sequence, indexed from ``offset`` (0, or 1 for a and b)."""

    family: str
    values: tuple[int, ...]
    offset: int = 0

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not self.offset <= n < self.offset + len(self.values):
            raise IndexError(
                f"{self.family}({n}) not computed; table covers "
                f"{self.offset}..{self.offset + len(self.values) - 1}"
            )
        return self.values[n - self.offset]

    @property
    def n_max(self) -> int:
        return self.offset + len(self.values) - 1

    def indices(self) -> range:
        return range(self.offset, self.offset + len(self.values))

    def to_csv(self) -> str:
        lines = ["n,value"]
        lines += [f"{n},{self[n]}" for n in self.indices()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        # values as decimal strings: they exceed native integer width
        return {
            "family": self.family,
            "offset": self.offset,
            "values": [str(v) for v in self.values],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=None, separators=(",", ":"))


def _extend_gfh(g: list[int], f: list[int], h: list[int], n_max: int) -> None:
    """Grow the g/f/h prefix in place up to index n_max.

    The endpoint sum is regrouped as f(n) = sum c(i) g(n-i) with
    c(i) = g(i-2) + 2 f(i-1), halving the big-int multiplications.
    """
    for n in range(len(g), n_max + 1):
        if n == 0:
            g.append(1)
            f.append(0)
            h.append(0)
            continue
        fn = sum((g[i - 2] + 2 * f[i - 1]) * g[n - i] for i in range(2, n + 1))
        hn = sum(
            (g[i - 2] + f[i - 1]) * f[n - i + 1] + g[i - 2] * h[n - i + 1]
            for i in range(2, n)
        )
        f.append(fn)
        h.append(hn)
        g.append(g[n - 1] + fn + hn)


def _extend_gs(gs: list[int], fs: list[int], hs: list[int], n_max: int) -> None:
    """Same recurrences as g/f/h minus the singleton term in the total."""
    for n in range(len(gs), n_max + 1):
        if n == 0:
            gs.append(1)
            fs.append(0)
            hs.append(0)
            continue
        fn = sum((gs[i - 2] + 2 * fs[i - 1]) * gs[n - i] for i in range(2, n + 1))
        hn = sum(
            (gs[i - 2] + fs[i - 1]) * fs[n - i + 1] + gs[i - 2] * hs[n - i + 1]
            for i in range(2, n)
        )
        fs.append(fn)
        hs.append(hn)
        gs.append(fn + hn)


def _extend_go(go: list[int], fo: list[int], ho: list[int], n_max: int) -> None:
    """Ordered variant: when the fixed point starts a path, its neighbor can
    only be the next point, which collapses the endpoint sum's head."""
    for n in range(len(go), n_max + 1):
        if n == 0:
            go.append(1)
            fo.append(0)
            ho.append(0)
            continue
        if n == 1:
            fn = 0
        else:
            fn = go[n - 2] + fo[n - 1] + sum(fo[i - 1] * go[n - i] for i in range(2, n + 1))
        hn = sum(
            (go[i - 2] + fo[i - 1]) * fo[n - i + 1] + go[i - 2] * ho[n - i + 1]
            for i in range(2, n)
        )
        fo.append(fn)
        ho.append(hn)
        go.append(go[n - 1] + fn + hn)


# Tables are computed jointly (the three recurrences are mutually dependent)
# and memoized as a growable prefix, so repeated queries are cheap.
_GFH: tuple[list[int], list[int], list[int]] = ([], [], [])
_GS: tuple[list[int], list[int], list[int]] = ([], [], [])
_GO: tuple[list[int], list[int], list[int]] = ([], [], [])


def _tables(cache, extend, names, n_max: int) -> tuple[CountTable, ...]:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if len(cache[0]) <= n_max:
        extend(*cache, n_max)
    return tuple(
        CountTable(name, tuple(seq[: n_max + 1])) for name, seq in zip(names, cache)
    )


def gfh_tables(n_max: int) -> tuple[CountTable, CountTable, CountTable]:
    """Tables g, f, h for 0..n_max (all path partitions)."""
    return _tables(_GFH, _extend_gfh, ("g", "f", "h"), n_max)


def gs_tables(n_max: int) -> tuple[CountTable, CountTable, CountTable]:
    """Tables gs, fs, hs for 0..n_max (no singletons)."""
    return _tables(_GS, _extend_gs, ("gs", "fs", "hs"), n_max)


def go_tables(n_max: int) -> tuple[CountTable, CountTable, CountTable]:
    """Tables go, fo, ho for 0..n_max (ordered partitions)."""
    return _tables(_GO, _extend_go, ("go", "fo", "ho"), n_max)


def ab_tables(i_max: int) -> tuple[CountTable, CountTable]:
    """Alternating-edge family sizes a_1..a_i and b_1..b_i."""
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    a = [1]
    b = [0]
    for _ in range(2, i_max + 1):
        a.append(a[-1] + b[-1])
        b.append(2 * a[-2] + b[-1])
    return (
        CountTable("a", tuple(a), offset=1),
        CountTable("b", tuple(b), offset=1),
    )


def g_from_gs(n_max: int) -> CountTable:
    """g(n) recomputed from gs via the singleton-placement binomial identity
    g(n) = sum_i C(n, i) gs(n - i)."""
    gs, _, _ = gs_tables(n_max)
    values = tuple(
        sum(comb(n, i) * gs[n - i] for i in range(n + 1)) for n in range(n_max + 1)
    )
    return CountTable("g", values)


def table_for_class(name: str, n_max: int) -> CountTable:
    """Main counting table for a class name: ncp -> g, ncpws -> gs, ordered -> go."""
    if name == "ncp":
        return gfh_tables(n_max)[0]
    if name == "ncpws":
        return gs_tables(n_max)[0]
    if name == "ordered":
        return go_tables(n_max)[0]
    raise ValueError(f"no counting table for class {name!r}")
