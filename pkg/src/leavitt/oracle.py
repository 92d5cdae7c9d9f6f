"""Brute-force ground truth for every closed-form claim, at desk scale.

Enumeration covers all labeled trees (Prufer sequences) under all edge
orientations, and all orientations of a fixed path.  Observed values come
only from enumeration plus the classifier; the formulas under test are
used solely for the expected side of each report.

A per-n census of the oriented-tree sweep is cached, so the many verify_*
calls that share an enumeration pay for it once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator

from . import extremal, partitions, truncate
from .classify import SemisimpleType, kappa, semisimple_type
from .graphs import DirectedMultigraph, Edge, is_acyclic, sources

TREE_ENUM_CAP = 8
PATH_ENUM_CAP = 20


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    n: int
    s: int | None
    expected: int
    observed: int
    passed: bool
    witness_on_failure: DirectedMultigraph | None = None


def _report(claim, n, s, expected, observed, witness=None) -> VerificationReport:
    ok = expected == observed
    return VerificationReport(
        claim, n, s, expected, observed, ok, None if ok else witness
    )


def prufer_to_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Decode a Prufer sequence over range(n) into n-1 undirected edges."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                edges.append((leaf, x))
                degree[leaf] -= 1
                degree[x] -= 1
                break
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def enumerate_oriented_trees(n: int) -> Iterator[DirectedMultigraph]:
    """All labeled trees on n vertices under all 2^(n-1) orientations.

    n^(n-2) * 2^(n-1) graphs, deterministic order, capped at n=8.
    """
    if not 2 <= n <= TREE_ENUM_CAP:
        raise ValueError(f"oriented-tree enumeration supports 2 <= n <= {TREE_ENUM_CAP}")
    names = tuple(f"v{i}" for i in range(n))
    for seq in product(range(n), repeat=n - 2):
        pairs = prufer_to_edges(seq, n)
        forward = [Edge(f"e{i}", names[a], names[b]) for i, (a, b) in enumerate(pairs)]
        backward = [Edge(f"e{i}", names[b], names[a]) for i, (a, b) in enumerate(pairs)]
        for mask in range(1 << (n - 1)):
            edges = tuple(
                backward[i] if mask >> i & 1 else forward[i] for i in range(n - 1)
            )
            yield DirectedMultigraph(names, edges)


def enumerate_path_orientations(n: int) -> Iterator[DirectedMultigraph]:
    """All 2^(n-1) orientations of the path v1 - v2 - ... - vn."""
    if not 2 <= n <= PATH_ENUM_CAP:
        raise ValueError(f"path enumeration supports 2 <= n <= {PATH_ENUM_CAP}")
    names = tuple(f"v{i}" for i in range(1, n + 1))
    for mask in range(1 << (n - 1)):
        edges = tuple(
            Edge(f"e{i}", names[i + 1], names[i])
            if mask >> i & 1
            else Edge(f"e{i}", names[i], names[i + 1])
            for i in range(n - 1)
        )
        yield DirectedMultigraph(names, edges)


def brute_force_path_counts(g: DirectedMultigraph) -> dict[str, int]:
    """Path counts by literal enumeration of every directed path.

    Exponential; the independent check for the linear-time recurrence.
    """
    if not is_acyclic(g):
        raise ValueError("path enumeration needs an acyclic graph")
    out: dict[str, list[Edge]] = {v: [] for v in g.vertices}
    for e in g.edges:
        out[e.src].append(e)
    counts = dict.fromkeys(g.vertices, 0)

    def walk(v: str) -> None:
        counts[v] += 1
        for e in out[v]:
            walk(e.dst)

    for v in g.vertices:
        walk(v)
    return counts


def canonical_rooted_code(g: DirectedMultigraph) -> str:
    """Canonical string for a tree with a unique source, up to isomorphism.

    Such a tree is an arborescence, so recursive child encoding with sorted
    subtree codes is a complete invariant.
    """
    srcs = sources(g)
    if len(srcs) != 1:
        raise ValueError("canonical code needs exactly one source")
    children: dict[str, list[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        children[e.src].append(e.dst)

    def encode(v: str) -> str:
        return "(" + "".join(sorted(encode(c) for c in children[v])) + ")"

    return encode(srcs[0])


class _Census:
    """One pass over every oriented tree on n vertices.

    Collects, per semisimple type, a first witness; per sink count, the
    dimension extremes; and for single-source trees whose vertex count
    equals kappa(type), the canonical codes seen.
    """

    def __init__(self, n: int):
        self.n = n
        self.count = 0
        self.types: dict[SemisimpleType, DirectedMultigraph] = {}
        self.max_by_sinks: dict[int, tuple[int, DirectedMultigraph]] = {}
        self.min_by_sinks: dict[int, tuple[int, DirectedMultigraph]] = {}
        self.canons: dict[SemisimpleType, dict[str, DirectedMultigraph]] = {}
        for g in enumerate_oriented_trees(n):
            self.count += 1
            t = semisimple_type(g)
            s = len(t)
            dim = sum(p * p for p in t)
            if t not in self.types:
                self.types[t] = g
            best = self.max_by_sinks.get(s)
            if best is None or dim > best[0]:
                self.max_by_sinks[s] = (dim, g)
            best = self.min_by_sinks.get(s)
            if best is None or dim < best[0]:
                self.min_by_sinks[s] = (dim, g)
            if len(sources(g)) == 1 and len(t) + t[-1] - 1 == n:
                code = canonical_rooted_code(g)
                self.canons.setdefault(t, {}).setdefault(code, g)


@lru_cache(maxsize=TREE_ENUM_CAP)
def _census(n: int) -> _Census:
    return _Census(n)


def verify_max_formula(n: int, s: int | None = None) -> VerificationReport:
    """Brute-force maximum dimension vs the closed form (overall or fixed s)."""
    census = _census(n)
    if s is None:
        observed, witness = max(census.max_by_sinks.values(), key=lambda v: v[0])
        expected = extremal.max_dim(n).value
    else:
        observed, witness = census.max_by_sinks[s]
        expected = extremal.max_dim_fixed_sinks(n, s).value
    return _report("max-dim", n, s, expected, observed, witness)


def verify_min_formula(n: int, s: int | None = None) -> VerificationReport:
    """Brute-force minimum dimension vs the closed form (overall or fixed s)."""
    census = _census(n)
    if s is None:
        observed, witness = min(census.min_by_sinks.values(), key=lambda v: v[0])
        expected = extremal.min_dim(n).value
    else:
        observed, witness = census.min_by_sinks[s]
        expected = extremal.min_dim_fixed_sinks(n, s).value
    return _report("min-dim", n, s, expected, observed, witness)


def verify_truncated_count(n: int) -> VerificationReport:
    """Count types with kappa = n by direct multiset enumeration.

    Observed: nondecreasing part tuples over [2, N] with largest part
    exactly N, for every split n = s + N - 1.  Expected: the code
    enumeration, which has 2^(n-2) entries.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    found = set()
    for s in range(1, n):
        big = n + 1 - s
        if big < 2:
            continue
        for rest in combinations_with_replacement(range(2, big + 1), s - 1):
            found.add(tuple(sorted(rest + (big,))))
    expected = len(truncate.enumerate_truncated_trees(n))
    return _report("truncated-count", n, None, expected, len(found))


def verify_line_count(n: int) -> VerificationReport:
    """Dedupe all path orientations by type vs P(n-1) - P(n-4)."""
    observed = len({semisimple_type(g) for g in enumerate_path_orientations(n)})
    expected = partitions.line_algebra_count(n)
    return _report("line-count", n, None, expected, observed)


def verify_truncation_minimality(n: int) -> VerificationReport:
    """No oriented tree with up to n vertices beats kappa(type) vertices.

    For every type realized by some tree on k <= n vertices, the smallest
    realizing k must equal kappa(type).  Reported as matching-type count
    vs total type count.
    """
    smallest: dict[SemisimpleType, tuple[int, DirectedMultigraph]] = {}
    for k in range(2, n + 1):
        for t, g in _census(k).types.items():
            if t not in smallest:
                smallest[t] = (k, g)
    total = len(smallest)
    good = 0
    witness = None
    for t, (k, g) in smallest.items():
        if k == kappa(t):
            good += 1
        elif witness is None:
            witness = g
    return _report("minimality", n, None, total, good, witness)


def verify_uniqueness(n: int) -> VerificationReport:
    """Single-source realizations on kappa(type) vertices are all isomorphic.

    For k <= n, every type found on single-source trees with k = kappa(type)
    vertices must have exactly one canonical code, and it must match the
    code of the constructed canonical tree.  Reported as matching-type
    count vs total type count.
    """
    total = 0
    good = 0
    witness = None
    for k in range(2, n + 1):
        for t, codes in _census(k).canons.items():
            total += 1
            built = canonical_rooted_code(truncate.truncated_tree(t).graph)
            if set(codes) == {built}:
                good += 1
            elif witness is None:
                witness = next(iter(codes.values()))
    return _report("uniqueness", n, None, total, good, witness)
