"""Semisimple classification of finite-dimensional Leavitt path algebras.

For a finite acyclic graph the algebra is a direct sum of full matrix
algebras over the base field, one summand per sink, and the matrix size at
a sink v is the number of directed paths ending at v (the trivial length-0
path included).  The sorted multiset of those sizes is a complete
isomorphism invariant; everything in this module reduces to it.

A type is represented as a nondecreasing tuple of positive integers.
Counts are exact Python integers, so they cannot overflow.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import CycleError, DirectedMultigraph, sinks, topological_order

SemisimpleType = tuple[int, ...]


def normalize_type(parts: Iterable[int]) -> SemisimpleType:
    """Sort a multiset of matrix sizes into canonical form.

    Raises ValueError if empty or if any part is not a positive integer.
    """
    t = tuple(sorted(parts))
    if not t:
        raise ValueError("a semisimple type needs at least one part")
    for p in t:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"invalid part {p!r}: parts are integers >= 1")
    return t


def path_counts(g: DirectedMultigraph) -> dict[str, int]:
    """Number of directed paths ending at each vertex, length 0 included.

    Computed by the recurrence count(v) = 1 + sum of count(src) over the
    in-edges of v, in topological order; literal path enumeration would be
    exponential.  Raises CycleError on cyclic input.
    """
    order = topological_order(g)
    incoming: dict[str, list[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        incoming[e.dst].append(e.src)
    counts: dict[str, int] = {}
    for v in order:
        total = 1
        for u in incoming[v]:
            total += counts[u]
        counts[v] = total
    return counts


def semisimple_type(g: DirectedMultigraph) -> SemisimpleType:
    """Sorted multiset of path counts at the sinks; the full invariant.

    Raises CycleError for cyclic input (the algebra is not
    finite-dimensional) and ValueError for the empty graph.
    """
    if not g.vertices:
        raise ValueError("empty graph: no sinks, no semisimple type")
    try:
        counts = path_counts(g)
    except CycleError:
        raise CycleError(
            "graph contains a directed cycle: not finite-dimensional"
        ) from None
    return tuple(sorted(counts[v] for v in sinks(g)))


def dimension(parts: Sequence[int]) -> int:
    """Total dimension: sum of the squares of the parts."""
    return sum(p * p for p in normalize_type(parts))


def lpa_isomorphic(g1: DirectedMultigraph, g2: DirectedMultigraph) -> bool:
    """Whether two finite acyclic graphs define isomorphic algebras."""
    return semisimple_type(g1) == semisimple_type(g2)


def kappa(parts: Sequence[int]) -> int:
    """The invariant s + N - 1 (summand count plus largest part minus one).

    Defined only when every part is >= 2, i.e. no summand is the base field
    itself.
    """
    t = normalize_type(parts)
    if t[0] < 2:
        raise ValueError("kappa requires every part >= 2")
    return len(t) + t[-1] - 1


def has_trivial_ideal(parts: Sequence[int]) -> bool:
    """True iff some summand is 1-dimensional (a part equals 1)."""
    return normalize_type(parts)[0] == 1


def line_realizable(parts: Sequence[int]) -> tuple[bool, int | None]:
    """Can the type arise from an oriented path, and on how many vertices?

    Realizable iff no part equals 1 and at most two parts equal 2; the
    path then has 1 + sum(part - 1) vertices, an invariant of the type.
    """
    t = normalize_type(parts)
    if t[0] == 1 or sum(1 for p in t if p == 2) > 2:
        return False, None
    return True, 1 + sum(p - 1 for p in t)


def classification(g: DirectedMultigraph) -> dict:
    """Classification record for a finite acyclic graph.

    Shape: {"type": [...], "dimension": D,
            "sinks": [{"vertex": name, "n": count}, ...], "kappa": K or None}
    with sinks in declaration order.
    """
    t = semisimple_type(g)
    counts = path_counts(g)
    return {
        "type": list(t),
        "dimension": dimension(t),
        "sinks": [{"vertex": v, "n": counts[v]} for v in sinks(g)],
        "kappa": None if t[0] < 2 else len(t) + t[-1] - 1,
    }
