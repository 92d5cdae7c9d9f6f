"""Finite directed multigraphs: data model, text format, predicates, DOT export.

A graph is a finite ordered set of named vertices plus an ordered list of
named edges.  Parallel edges and self-loops are representable (a self-loop
is a cycle and gets rejected by the acyclic-only operations downstream).
All values are immutable after construction and every operation here is a
pure function, so concurrent reads are safe.

Iteration order is always declaration order, which keeps every derived
output byte-reproducible.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+\Z")

# Names already validated against _TOKEN_RE.  Exhaustive enumeration builds
# millions of graphs out of a handful of distinct names, so a hit here skips
# the regex.  Bounded to keep pathological callers from growing it forever.
_seen_tokens: set[str] = set()
_SEEN_TOKENS_MAX = 1 << 16


class GraphFormatError(ValueError):
    """Malformed graph text.  Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CycleError(ValueError):
    """An acyclic-only operation was applied to a graph with a directed cycle."""


def _check_token(name: str, what: str) -> None:
    if name in _seen_tokens:
        return
    if not isinstance(name, str) or not _TOKEN_RE.fullmatch(name):
        raise ValueError(f"{what} name {name!r} is not a token over [A-Za-z0-9_]")
    if len(_seen_tokens) < _SEEN_TOKENS_MAX:
        _seen_tokens.add(name)


class Edge(NamedTuple):
    name: str
    src: str
    dst: str


@dataclass(frozen=True)
class DirectedMultigraph:
    """Finite multigraph with named vertices and directed named edges.

    Invariants enforced at construction: vertex names unique tokens, edge
    names unique tokens, every edge endpoint declared.  `vertices` and
    `edges` keep declaration order; equality is positional.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        for v in self.vertices:
            _check_token(v, "vertex")
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertex name")
        enames = set()
        for e in self.edges:
            _check_token(e.name, "edge")
            if e.name in enames:
                raise ValueError(f"duplicate edge name {e.name!r}")
            enames.add(e.name)
            if e.src not in vset:
                raise ValueError(f"edge {e.name!r}: undeclared vertex {e.src!r}")
            if e.dst not in vset:
                raise ValueError(f"edge {e.name!r}: undeclared vertex {e.dst!r}")

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, str]] = (),
    ) -> "DirectedMultigraph":
        """Convenience constructor from iterables of names and (name, src, dst)."""
        return cls(tuple(vertices), tuple(Edge(*e) for e in edges))


def parse_graph(text: str) -> DirectedMultigraph:
    """Parse the line-oriented graph format.

    Grammar, per line (LF endings, an optional trailing CR is accepted):
        # comment           -- '#' starts a comment to end of line
        v NAME              -- declare a vertex
        e NAME SRC DST      -- declare an edge (endpoints already declared)
    Tokens match [A-Za-z0-9_]+ and are separated by single spaces; blank
    lines are ignored.  Raises GraphFormatError with the line number on any
    violation.
    """
    vertices: list[str] = []
    vset: set[str] = set()
    edges: list[Edge] = []
    enames: set[str] = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if raw.endswith("\r"):
            raw = raw[:-1]
        content = raw.split("#", 1)[0].rstrip()
        if not content:
            continue
        parts = content.split(" ")
        if any(p == "" for p in parts):
            raise GraphFormatError("tokens must be separated by single spaces", lineno)
        for p in parts:
            if not _TOKEN_RE.fullmatch(p):
                raise GraphFormatError(f"invalid token {p!r}", lineno)
        kind = parts[0]
        if kind == "v":
            if len(parts) != 2:
                raise GraphFormatError("vertex line must be 'v NAME'", lineno)
            name = parts[1]
            if name in vset:
                raise GraphFormatError(f"duplicate vertex {name!r}", lineno)
            vertices.append(name)
            vset.add(name)
        elif kind == "e":
            if len(parts) != 4:
                raise GraphFormatError("edge line must be 'e NAME SRC DST'", lineno)
            name, src, dst = parts[1:]
            if name in enames:
                raise GraphFormatError(f"duplicate edge {name!r}", lineno)
            if src not in vset:
                raise GraphFormatError(f"undeclared vertex {src!r}", lineno)
            if dst not in vset:
                raise GraphFormatError(f"undeclared vertex {dst!r}", lineno)
            edges.append(Edge(name, src, dst))
            enames.add(name)
        else:
            raise GraphFormatError(f"unknown line kind {kind!r}", lineno)
    return DirectedMultigraph(tuple(vertices), tuple(edges))


def serialize_graph(g: DirectedMultigraph) -> str:
    """Inverse of parse_graph: vertex lines, then edge lines, declaration order."""
    out = [f"v {v}" for v in g.vertices]
    out += [f"e {e.name} {e.src} {e.dst}" for e in g.edges]
    return "\n".join(out) + ("\n" if out else "")


def topological_order(g: DirectedMultigraph) -> tuple[str, ...]:
    """Vertices ordered so every edge goes forward; ties by declaration order.

    Raises CycleError if the graph has a directed cycle (self-loops count).
    """
    index = {v: i for i, v in enumerate(g.vertices)}
    n = len(g.vertices)
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for e in g.edges:
        out[index[e.src]].append(index[e.dst])
        indeg[index[e.dst]] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(ready)
    order: list[str] = []
    while ready:
        i = heapq.heappop(ready)
        order.append(g.vertices[i])
        for j in out[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if len(order) != n:
        raise CycleError("graph contains a directed cycle")
    return tuple(order)


def is_acyclic(g: DirectedMultigraph) -> bool:
    """True iff the graph has no directed cycle (a self-loop is a cycle)."""
    try:
        topological_order(g)
        return True
    except CycleError:
        return False


def sinks(g: DirectedMultigraph) -> tuple[str, ...]:
    """Vertices emitting no edges, in declaration order."""
    emitting = {e.src for e in g.edges}
    return tuple(v for v in g.vertices if v not in emitting)


def sources(g: DirectedMultigraph) -> tuple[str, ...]:
    """Vertices receiving no edges, in declaration order."""
    receiving = {e.dst for e in g.edges}
    return tuple(v for v in g.vertices if v not in receiving)


def total_degree(g: DirectedMultigraph, v: str) -> int:
    """Number of edges incident to v; a self-loop still counts once."""
    if v not in g.vertices:
        raise ValueError(f"unknown vertex {v!r}")
    return sum(1 for e in g.edges if e.src == v or e.dst == v)


def has_isolated_vertices(g: DirectedMultigraph) -> bool:
    touched = {e.src for e in g.edges} | {e.dst for e in g.edges}
    return any(v not in touched for v in g.vertices)


def is_weakly_connected(g: DirectedMultigraph) -> bool:
    """Connectivity of the underlying undirected multigraph.

    The empty graph counts as disconnected.
    """
    if not g.vertices:
        return False
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        adj[e.src].append(e.dst)
        adj[e.dst].append(e.src)
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def is_line_graph(g: DirectedMultigraph) -> bool:
    """An oriented simple path (possibly a single vertex).

    Connectivity and total degree <= 2 alone would also admit parallel
    pairs and alternating-oriented even cycles, which are not paths; the
    tree condition (|edges| = |vertices| - 1) rules those out.
    """
    return is_tree(g) and all(total_degree(g, v) <= 2 for v in g.vertices)


def is_tree(g: DirectedMultigraph) -> bool:
    """Weakly connected with |edges| = |vertices| - 1.

    Equality of the edge count forces the underlying multigraph to be simple
    (a parallel pair or self-loop would need an extra edge), so this matches
    the usual notion of a tree under some orientation.
    """
    return len(g.edges) == len(g.vertices) - 1 and is_weakly_connected(g)


def is_bunch_tree(g: DirectedMultigraph) -> bool:
    """Tree with one source where every non-source vertex has degree <= 2.

    Equivalently: finitely many oriented paths glued at their sources.
    """
    if not is_tree(g):
        return False
    srcs = sources(g)
    if len(srcs) != 1:
        return False
    root = srcs[0]
    return all(total_degree(g, v) <= 2 for v in g.vertices if v != root)


def to_dot(g: DirectedMultigraph) -> str:
    """Deterministic DOT rendering; vertices then edges, declaration order."""
    lines = ["digraph {"]
    lines += [f'  "{v}";' for v in g.vertices]
    lines += [f'  "{e.src}" -> "{e.dst}";' for e in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
