"""Extremal dimensions over trees with n vertices, with witness graphs.

The maximum for a fixed number of sinks s is s(n-s+1)^2, achieved by a fan:
an oriented path feeding s leaf sinks.  Over all s the maximum is a
three-case cubic in n (the integer maximum of s(n-s+1)^2 sits next to
(n+1)/3).  The minimum for fixed s is r(q+2)^2 + (s-r)(q+1)^2 where
n-1 = qs + r, achieved by the most balanced bunch tree, and the overall
minimum is 4(n-1) at s = n-1 (the out-star).

Bunch trees (paths glued at a common source) are handled through their
branch-length tuples; rebalance_step is the exchange move that strictly
lowers the dimension until the tuple is balanced, and
dominating_bunch_tuple maps an arbitrary tree to a bunch tuple whose
dimension is no larger.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .classify import dimension, path_counts, semisimple_type, sinks
from .graphs import DirectedMultigraph, Edge, is_tree

BunchTuple = tuple[int, ...]


@dataclass(frozen=True)
class ExtremalReport:
    """An extremal value together with a tree achieving it.

    `s` is the sink count of the witness; `optimal_s` is set when the sink
    count was chosen by the optimization rather than fixed by the caller.
    """

    n: int
    s: int
    value: int
    witness: DirectedMultigraph
    optimal_s: int | None = None


def _check_sink_range(n: int, s: int) -> None:
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if not 1 <= s <= n - 1:
        raise ValueError(f"sink count {s} out of range 1..{n - 1}")


def fan_tree(n: int, s: int) -> DirectedMultigraph:
    """Oriented path p1..p_{n-s} with s sink leaves w1..ws off its end."""
    _check_sink_range(n, s)
    spine = [f"p{i}" for i in range(1, n - s + 1)]
    leaves = [f"w{i}" for i in range(1, s + 1)]
    edges = [Edge(f"e{i}", f"p{i}", f"p{i + 1}") for i in range(1, n - s)]
    edges += [Edge(f"f{i}", spine[-1], f"w{i}") for i in range(1, s + 1)]
    return DirectedMultigraph(tuple(spine + leaves), tuple(edges))


def bunch_tree(parts: Sequence[int]) -> DirectedMultigraph:
    """Paths of the given lengths glued at a fresh common source.

    Branch i contributes vertices b{i}_1..b{i}_{t_i}; the branch end is a
    sink with path count t_i + 1.
    """
    t = tuple(sorted(parts))
    if not t or t[0] < 1:
        raise ValueError("branch lengths must be positive")
    vertices = ["root"]
    edges = []
    for i, length in enumerate(t, start=1):
        prev = "root"
        for j in range(1, length + 1):
            v = f"b{i}_{j}"
            vertices.append(v)
            edges.append(Edge(f"d{i}_{j}", prev, v))
            prev = v
    return DirectedMultigraph(tuple(vertices), tuple(edges))


def max_dim_fixed_sinks(n: int, s: int) -> ExtremalReport:
    """Maximum dimension over trees with n vertices and s sinks: s(n-s+1)^2."""
    _check_sink_range(n, s)
    return ExtremalReport(n=n, s=s, value=s * (n - s + 1) ** 2, witness=fan_tree(n, s))


def max_dim(n: int) -> ExtremalReport:
    """Maximum dimension over all trees with n vertices.

    The best sink count is the integer next to (n+1)/3; the value is cubic
    in n with one closed form per residue of n mod 3.  All arithmetic is
    exact (the numerators are divisible by 27 case by case).
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if n % 3 == 0:
        s = n // 3
        value = n * (2 * n + 3) ** 2 // 27
    elif n % 3 == 1:
        s = (n + 2) // 3
        value = (n + 2) * (2 * n + 1) ** 2 // 27
    else:
        s = (n + 1) // 3
        value = 4 * (n + 1) ** 3 // 27
    return ExtremalReport(n=n, s=s, value=value, witness=fan_tree(n, s), optimal_s=s)


def min_dim_fixed_sinks(n: int, s: int) -> ExtremalReport:
    """Minimum dimension over trees with n vertices and s sinks.

    With n - 1 = qs + r the value is r(q+2)^2 + (s-r)(q+1)^2, witnessed by
    the balanced bunch tree with s - r branches of length q and r of q + 1.
    """
    _check_sink_range(n, s)
    q, r = divmod(n - 1, s)
    value = r * (q + 2) ** 2 + (s - r) * (q + 1) ** 2
    witness = bunch_tree((q,) * (s - r) + (q + 1,) * r)
    return ExtremalReport(n=n, s=s, value=value, witness=witness)


def min_dim(n: int) -> ExtremalReport:
    """Minimum dimension over all trees with n vertices: 4(n-1) at s = n-1."""
    if n < 2:
        raise ValueError("need at least 2 vertices")
    report = min_dim_fixed_sinks(n, n - 1)
    return ExtremalReport(
        n=n, s=n - 1, value=4 * (n - 1), witness=report.witness, optimal_s=n - 1
    )


def bunch_tuple_dimension(parts: Sequence[int]) -> int:
    """Dimension of the bunch tree with the given branch lengths."""
    return sum((t + 1) ** 2 for t in parts)


def rebalance_step(parts: Sequence[int]) -> BunchTuple:
    """One exchange move: grow the shortest branch, shrink the longest.

    Requires max - min >= 2; the dimension then drops by exactly
    2*(max - min) - 2.  Iterating reaches the balanced tuple.
    """
    t = tuple(sorted(parts))
    if len(t) < 1 or t[0] < 1:
        raise ValueError("branch lengths must be positive")
    if t[-1] - t[0] <= 1:
        raise ValueError("tuple already balanced: max - min <= 1")
    return tuple(sorted((t[0] + 1,) + t[1:-1] + (t[-1] - 1,)))


def dominating_bunch_tuple(g: DirectedMultigraph) -> BunchTuple:
    """Bunch tuple whose tree's dimension is at most that of the given tree.

    With the sink contributions n_i = count(sink_i) - 1 sorted nondecreasing
    and the excess beta = sum(n_i) - (n - 1), the excess is removed from the
    smallest contributions: either entirely from the first one, or by
    flattening a prefix to 1 and trimming the first contribution that
    survives.  The result sums to n - 1 with 1 <= m_i <= n_i.
    """
    if not is_tree(g):
        raise ValueError("dominating_bunch_tuple needs a tree")
    if len(g.vertices) < 2:
        raise ValueError("need at least 2 vertices")
    counts = path_counts(g)
    contrib = sorted(counts[v] - 1 for v in sinks(g))
    n = len(g.vertices)
    beta = sum(contrib) - (n - 1)
    if contrib[0] - 1 >= beta:
        m = [contrib[0] - beta] + contrib[1:]
    else:
        # Flatten a prefix to 1 and trim the first entry whose slack covers
        # the rest of beta: find the smallest k >= 2 (1-based) with
        # sum(contrib[i]-1 for i < k-1) < beta <= sum(contrib[i]-1 for i < k).
        used = contrib[0] - 1
        k = 2
        while used + (contrib[k - 1] - 1) < beta:
            used += contrib[k - 1] - 1
            k += 1
        m = [1] * (k - 1) + [contrib[k - 1] - (beta - used)] + contrib[k:]
    return tuple(m)
