"""Materialize the graph of graphs (gog) of a small space and find its
connected components.

Gog vertices are the labeled graphs of a census. Adjacency is computed by
generating swaps and looking the result up in the census, so a neighbour
counts only if it is itself a census member (which is how the ``keep``
predicate applies to both ends of a gog edge).
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .canonical import IsoClasses, canonical_form
from .enumeration import EnumFilter, enumerate_graphs
from .errors import BadArity, CensusTooLarge, ClassMismatch
from .graph import Graph, GraphSpace, validate_degree_sequence
from .swaps import find_k_swap

DEFAULT_CENSUS_CAP = 10**6


@dataclass
class GogSpec:
    space: GraphSpace
    degseq: Sequence[int]
    swap_arity: int = 2
    keep: EnumFilter | None = None
    census: list[Graph] | None = None
    cap: int = DEFAULT_CENSUS_CAP
    # rotate mobile endpoints in any cyclic order, not just along index order
    all_orders: bool = False


@dataclass
class GogReport:
    vertex_count: int
    component_sizes: list[int]
    component_of: dict[Graph, int]
    frozen_count: int
    swap_arity: int = 2
    all_orders: bool = False
    # census graphs in census order; component ids follow first appearance
    graphs: list[Graph] = field(default_factory=list, repr=False)

    @property
    def component_count(self) -> int:
        return len(self.component_sizes)

    @property
    def connected(self) -> bool:
        return self.component_count <= 1

    def to_dict(self, class_matrix: list[list[bool]] | None = None) -> dict:
        out = {
            "vertices": self.vertex_count,
            "component_sizes": self.component_sizes,
            "frozen_count": self.frozen_count,
        }
        if class_matrix is not None:
            out["class_component_matrix"] = class_matrix
        return out


class CensusIndex:
    """Census graphs keyed by an integer encoding of their edge multiset.

    Each vertex pair owns a bit field holding its multiplicity, so a swap
    updates the key by adding and subtracting per-edge weights.
    """

    def __init__(self, graphs: Sequence[Graph], n: int, max_degree: int):
        self.graphs = list(graphs)
        bits = max(1, max_degree.bit_length())
        self.weight = {}
        slot = 0
        for u in range(n):
            for v in range(u, n):
                self.weight[(u, v)] = 1 << (bits * slot)
                slot += 1
        self.keys = [self.encode(g) for g in self.graphs]
        self.index = {key: i for i, key in enumerate(self.keys)}
        self._counters: list[Counter] | None = None

    def encode(self, g: Graph) -> int:
        w = self.weight
        return sum(w[e] for e in g.edges)

    def double_swap_neighbors(self, i: int) -> set[int]:
        g, key, w, index = self.graphs[i], self.keys[i], self.weight, self.index
        values = sorted(set(g.edges))
        mult = {e: g.edges.count(e) for e in values}
        pairs = [(e, e) for e in values if mult[e] > 1]
        pairs += list(itertools.combinations(values, 2))
        out = set()
        for e, f in pairs:
            (u, v), (x, y) = e, f
            base = key - w[e] - w[f]
            for a, b in (((u, x), (v, y)), ((u, y), (v, x))):
                a = a if a[0] <= a[1] else (a[1], a[0])
                b = b if b[0] <= b[1] else (b[1], b[0])
                j = index.get(base + w[a] + w[b])
                if j is not None and j != i:
                    out.add(j)
        return out

    def k_swap_neighbors(self, i: int, k: int) -> set[int]:
        if k == 2:
            return self.double_swap_neighbors(i)
        g, key, w, index = self.graphs[i], self.keys[i], self.weight, self.index
        edges = g.edges
        out = set()
        orientations = list(itertools.product((0, 1), repeat=k))
        for chosen in itertools.combinations(range(len(edges)), k):
            sel = [edges[t] for t in chosen]
            base = key - sum(w[e] for e in sel)
            for orient in orientations:
                mobile = [e[o] for e, o in zip(sel, orient)]
                fixed = [e[1 - o] for e, o in zip(sel, orient)]
                for step in (1, -1):
                    total = base
                    for t in range(k):
                        a, b = fixed[t], mobile[(t + step) % k]
                        total += w[(a, b) if a <= b else (b, a)]
                    j = index.get(total)
                    if j is not None and j != i:
                        out.add(j)
        return out

    def any_order_neighbors(self, i: int, k: int) -> set[int]:
        """Census members one k-swap (any cyclic order) from graph ``i``.

        Decided pairwise with ``find_k_swap``, so the cost is quadratic in the
        census size; meant for the small triangle-constrained censuses.
        """
        if self._counters is None:
            self._counters = [Counter(g.edges) for g in self.graphs]
        g, mg = self.graphs[i], self._counters[i]
        out = set()
        for j, h in enumerate(self.graphs):
            if j == i or sum((mg - self._counters[j]).values()) > k:
                continue
            if find_k_swap(g, h, k) is not None:
                out.add(j)
        return out

    def neighbors(self, i: int, k: int, all_orders: bool = False) -> set[int]:
        if all_orders:
            return self.any_order_neighbors(i, k)
        return self.k_swap_neighbors(i, k)

    def adjacency(self, k: int, all_orders: bool = False) -> list[set[int]]:
        """Undirected adjacency lists.

        Sorted-order k-swaps (k >= 3) are not closed under inversion: undoing
        a move may need a rotation along a different order. A gog edge is
        therefore kept when either endpoint reaches the other.
        """
        adj = [self.neighbors(i, k, all_orders) for i in range(len(self.graphs))]
        for i, nbrs in enumerate(adj):
            for j in nbrs:
                adj[j].add(i)
        return adj


def _census(spec: GogSpec) -> list[Graph]:
    if spec.census is not None:
        if len(spec.census) > spec.cap:
            raise CensusTooLarge(f"census of {len(spec.census)} graphs exceeds the cap of {spec.cap}")
        return list(spec.census)
    return list(enumerate_graphs(spec.space, spec.degseq, spec.keep, limit=spec.cap))


def build_index(spec: GogSpec) -> CensusIndex:
    d = validate_degree_sequence(spec.degseq)
    if spec.swap_arity < 2:
        raise BadArity(f"swap arity must be at least 2, got {spec.swap_arity}")
    return CensusIndex(_census(spec), len(d), max(d))


def iter_gog_edges(spec: GogSpec) -> Iterator[tuple[Graph, Graph]]:
    """Every gog edge once, as a pair of census graphs in census order."""
    idx = build_index(spec)
    adj = idx.adjacency(spec.swap_arity, spec.all_orders)
    for i in range(len(idx.graphs)):
        for j in sorted(adj[i]):
            if i < j:
                yield idx.graphs[i], idx.graphs[j]


def build_gog(spec: GogSpec) -> GogReport:
    idx = build_index(spec)
    adj = idx.adjacency(spec.swap_arity, spec.all_orders)
    count = len(idx.graphs)
    comp = [-1] * count
    sizes: list[int] = []
    frozen = 0
    for s in range(count):
        if comp[s] != -1:
            continue
        cid = len(sizes)
        comp[s] = cid
        size = 0
        queue = deque([s])
        while queue:
            i = queue.popleft()
            size += 1
            nbrs = adj[i]
            if not nbrs:
                frozen += 1
            for j in nbrs:
                if comp[j] == -1:
                    comp[j] = cid
                    queue.append(j)
        sizes.append(size)
    return GogReport(
        vertex_count=count,
        component_sizes=sorted(sizes, reverse=True),
        component_of={g: comp[i] for i, g in enumerate(idx.graphs)},
        frozen_count=frozen,
        swap_arity=spec.swap_arity,
        all_orders=spec.all_orders,
        graphs=idx.graphs,
    )


def components_intersect_classes(report: GogReport, classes: IsoClasses) -> list[list[bool]]:
    """Entry ``[c][i]`` is true iff gog component ``c`` holds a member of class ``i``."""
    reps = {rep: i for i, (rep, _) in enumerate(classes.classes)}
    ncomp = len(report.component_sizes)
    matrix = [[False] * len(reps) for _ in range(ncomp)]
    seen = [0] * len(reps)
    for g, cid in report.component_of.items():
        rep, _ = canonical_form(g)
        i = reps.get(rep)
        if i is None:
            raise ClassMismatch(f"census graph {g.edges} belongs to none of the given classes")
        seen[i] += 1
        matrix[cid][i] = True
    if seen != classes.sizes:
        raise ClassMismatch(f"class sizes {classes.sizes} do not match census membership {seen}")
    return matrix
