"""Canonical labeling and isomorphism classes for small multigraphs.

Colour refinement on (degree, loops) followed by individualization of one
vertex at a time; among the discrete labelings found, the one giving the
lexicographically least edge list is canonical. No automorphism pruning is
done, which is fine at the sizes used here (n <= 13).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph


def _neighbourhoods(g: Graph) -> tuple[list[list[tuple[int, int]]], list[int]]:
    loops = [0] * g.n
    mult: Counter = Counter()
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            mult[(u, v)] += 1
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (u, v), c in mult.items():
        nbrs[u].append((v, c))
        nbrs[v].append((u, c))
    return nbrs, loops


def _rank(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(colors: list[int], nbrs) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], c) for w, c in nbrs[v])))
            for v in range(len(colors))
        ]
        colors = _rank(sigs)
        k = len(set(colors))
        if k == ncolors:
            return colors
        ncolors = k


def _search(g: Graph):
    """Yield ``(edge tuple, labeling)`` for every leaf of the search tree."""
    nbrs, loops = _neighbourhoods(g)
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    start = _refine(_rank(list(zip(deg, loops))), nbrs)

    stack = [start]
    while stack:
        colors = stack.pop()
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            edges = []
            for u, v in g.edges:
                a, b = colors[u], colors[v]
                edges.append((a, b) if a <= b else (b, a))
            edges.sort()
            yield tuple(edges), colors
            continue
        for v in reversed(cells[target]):
            split = [2 * c + 1 for c in colors]
            split[v] = 2 * colors[v]
            stack.append(_refine(_rank(split), nbrs))


def canonical_form(g: Graph) -> tuple[Graph, list[int]]:
    """Return ``(canonical graph, relabeling)`` where ``relabeling[v]`` is the
    new label of vertex ``v``. Isomorphic graphs get identical canonical graphs."""
    best = None
    best_labels: list[int] = []
    for edges, labels in _search(g):
        if best is None or edges < best:
            best, best_labels = edges, labels
    return Graph._trusted(g.n, best), list(best_labels)


def automorphism_count(g: Graph) -> int:
    """Size of the automorphism group: the leaves reaching the canonical edge
    list form a single regular orbit of it."""
    leaves = Counter(edges for edges, _ in _search(g))
    return leaves[min(leaves)]


def relabel(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


@dataclass
class IsoClasses:
    """Isomorphism classes as (canonical representative, member count) pairs,
    in order of first appearance."""

    classes: list[tuple[Graph, int]] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(size for _, size in self.classes)

    @property
    def sizes(self) -> list[int]:
        return [size for _, size in self.classes]

    def index_of(self, g: Graph) -> int | None:
        rep, _ = canonical_form(g)
        for i, (r, _) in enumerate(self.classes):
            if r == rep:
                return i
        return None


def isomorphism_classes(graphs: Iterable[Graph]) -> IsoClasses:
    sizes: dict[Graph, int] = {}
    for g in graphs:
        rep, _ = canonical_form(g)
        sizes[rep] = sizes.get(rep, 0) + 1
    return IsoClasses(list(sizes.items()))
