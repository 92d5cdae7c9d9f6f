"""Truncated trees: canonical minimal single-source realizations of a type.

Every type with all parts >= 2 is realized by exactly one (up to
isomorphism) tree with a single source and s + N - 1 vertices: a spine
u1 -> u2 -> ... -> uN carrying the largest part, plus one leaf per
remaining part hanging off the spine at the right depth.  Types with a
part equal to 1 would need an isolated vertex and are refused.

Each truncated tree on n vertices is encoded by an n-bit vector: bit
positions are the d-values of the non-sink vertices, where d(u) counts the
vertices v with count(v) <= count(u).  The code always starts with 1 and
ends with 0, so there are exactly 2**(n-2) truncated trees on n vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .classify import SemisimpleType, kappa, normalize_type, path_counts, sinks
from .graphs import DirectedMultigraph, Edge


@dataclass(frozen=True)
class TruncatedTree:
    graph: DirectedMultigraph
    spine: tuple[str, ...]
    leaves: tuple[str, ...]


def truncated_tree(parts: Sequence[int]) -> TruncatedTree:
    """Build the canonical single-source tree realizing the given type.

    The spine u1..uN is an oriented path; for each part other than the
    largest, a leaf w_i receives one edge from the spine vertex at depth
    part - 1.  Requires every part >= 2.
    """
    t = normalize_type(parts)
    if t[0] < 2:
        raise ValueError("no truncated tree exists for a type with a part equal to 1")
    big = t[-1]
    spine = tuple(f"u{i}" for i in range(1, big + 1))
    leaves = tuple(f"w{i}" for i in range(1, len(t)))
    edges = [Edge(f"e{i}", f"u{i}", f"u{i + 1}") for i in range(1, big)]
    edges += [
        Edge(f"f{i}", f"u{t[i - 1] - 1}", f"w{i}") for i in range(1, len(t))
    ]
    g = DirectedMultigraph(spine + leaves, tuple(edges))
    return TruncatedTree(g, spine, leaves)


def d_values(g: DirectedMultigraph) -> dict[str, int]:
    """d(u) = number of vertices v with count(v) <= count(u), u included."""
    counts = path_counts(g)
    values = sorted(counts.values())
    ranked: dict[int, int] = {}
    for i, c in enumerate(values):
        ranked[c] = i + 1  # last occurrence wins: ties share the highest rank
    return {v: ranked[counts[v]] for v in g.vertices}


def alpha_encode(parts: Sequence[int]) -> str:
    """Bit-string code of the truncated tree of the given type.

    Bit d(v) is 1 for every non-sink v of the tree, 0 elsewhere; the code
    has length kappa(type), starts with 1 and ends with 0.
    """
    tree = truncated_tree(parts)
    n = kappa(parts)
    d = d_values(tree.graph)
    sink_set = set(sinks(tree.graph))
    bits = ["0"] * n
    for v in tree.graph.vertices:
        if v not in sink_set:
            bits[d[v] - 1] = "1"
    return "".join(bits)


def alpha_decode(code: str) -> SemisimpleType:
    """Type of the truncated tree with the given code.

    Each 0 bit at position p contributes a part equal to 1 plus the number
    of 1 bits at positions <= p.  Raises ValueError on malformed codes
    (length < 2, characters outside 0/1, first bit 0, or last bit 1).
    """
    if len(code) < 2 or any(c not in "01" for c in code):
        raise ValueError(f"malformed code {code!r}: need >= 2 bits over 0/1")
    if code[0] != "1" or code[-1] != "0":
        raise ValueError(
            f"malformed code {code!r}: must start with 1 and end with 0"
        )
    parts = []
    ones = 0
    for c in code:
        if c == "1":
            ones += 1
        else:
            parts.append(1 + ones)
    return tuple(sorted(parts))


def enumerate_truncated_trees(n: int) -> list[SemisimpleType]:
    """Types of all truncated trees with n vertices, in code order.

    The first and last bits are fixed, so the n - 2 middle bits sweep
    2**(n-2) codes in plain binary order.
    """
    if n < 2:
        raise ValueError("truncated trees need at least 2 vertices")
    width = n - 2
    out = []
    for m in range(1 << width):
        middle = format(m, f"0{width}b") if width else ""
        out.append(alpha_decode("1" + middle + "0"))
    return out
