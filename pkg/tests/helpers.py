"""Shared brute-force helpers for the test suite."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, product

from leavitt import DirectedMultigraph, Edge


def graph(vertex_spec: str, *edge_specs: str) -> DirectedMultigraph:
    """Tiny builder: graph("a b c", "x a b", "y b c")."""
    edges = tuple(Edge(*spec.split()) for spec in edge_specs)
    return DirectedMultigraph(tuple(vertex_spec.split()), edges)


def random_acyclic_multigraph(
    rng: random.Random, max_vertices: int = 8, max_edges: int = 10
) -> DirectedMultigraph:
    """Random DAG multigraph: edges only go forward in a shuffled order."""
    nv = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(nv)]
    rng.shuffle(names)
    edges = []
    if nv >= 2:
        for i in range(rng.randint(0, max_edges)):
            a, b = sorted(rng.sample(range(nv), 2))
            edges.append(Edge(f"e{i}", names[a], names[b]))
    return DirectedMultigraph(tuple(names), tuple(edges))


def all_small_multigraphs(n_vertices: int, max_edges: int):
    """Every multigraph on a fixed vertex set with up to max_edges edges.

    Edge slots range over all ordered pairs, self-loops included; parallel
    edges come from choosing a slot twice.
    """
    names = tuple(f"v{i}" for i in range(n_vertices))
    slots = list(product(names, repeat=2))
    for ne in range(max_edges + 1):
        for combo in combinations_with_replacement(slots, ne):
            edges = tuple(Edge(f"e{i}", a, b) for i, (a, b) in enumerate(combo))
            yield DirectedMultigraph(names, edges)


def has_cycle_bruteforce(g: DirectedMultigraph) -> bool:
    """Cycle detection by explicit path search, independent of Kahn."""
    out: dict[str, list[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        out[e.src].append(e.dst)

    def search(v: str, start: str, on_path: set[str]) -> bool:
        for w in out[v]:
            if w == start:
                return True
            if w not in on_path:
                on_path.add(w)
                if search(w, start, on_path):
                    return True
                on_path.remove(w)
        return False

    return any(search(v, v, {v}) for v in g.vertices)
