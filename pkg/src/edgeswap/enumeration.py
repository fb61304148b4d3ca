"""Exhaustive enumeration of the labeled graphs in a space with a fixed degree
sequence, optionally restricted by triangle statistics.

Vertices are completed one at a time in index order. When vertex ``u`` is
processed it receives all of its remaining stubs as loops and as edges to
higher-indexed vertices, so the edge list grows in sorted order and graphs
come out in lexicographic order of their edge lists.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import CensusTooLarge, FilterInapplicable, InvalidTriangleSequence
from .graph import (
    SIMPLE,
    Edge,
    Graph,
    GraphSpace,
    triangle_count,
    triangle_sequence,
    validate_degree_sequence,
    validate_triangle_sequence,
)


@dataclass(frozen=True)
class EnumFilter:
    """Predicate on graphs; triangle fields also drive search-tree pruning."""

    triangle_count: int | None = None
    triangle_seq: tuple[int, ...] | None = None
    custom: Callable[[Graph], bool] | None = None

    def __post_init__(self):
        if self.triangle_seq is not None:
            object.__setattr__(self, "triangle_seq", validate_triangle_sequence(self.triangle_seq))
            implied = sum(self.triangle_seq) // 3
            if self.triangle_count is not None and self.triangle_count != implied:
                raise InvalidTriangleSequence(
                    f"triangle sequence implies {implied} triangles, not {self.triangle_count}"
                )

    @property
    def uses_triangles(self) -> bool:
        return self.triangle_count is not None or self.triangle_seq is not None

    def __call__(self, g: Graph) -> bool:
        if self.triangle_seq is not None and triangle_sequence(g) != self.triangle_seq:
            return False
        if self.triangle_count is not None and triangle_count(g) != self.triangle_count:
            return False
        return self.custom is None or bool(self.custom(g))


NO_FILTER = EnumFilter()


def _check_filter(space: GraphSpace, degrees: tuple[int, ...], filt: EnumFilter) -> None:
    if filt.uses_triangles and space != SIMPLE:
        raise FilterInapplicable(f"triangle filters need the simple space, not {space.name}")
    if filt.triangle_seq is not None and len(filt.triangle_seq) != len(degrees):
        raise InvalidTriangleSequence(
            f"triangle sequence has {len(filt.triangle_seq)} entries for {len(degrees)} vertices"
        )


class _Search:
    def __init__(self, space: GraphSpace, degrees: tuple[int, ...], filt: EnumFilter):
        self.n = len(degrees)
        self.res = list(degrees)
        self.loop_cap = space.loop_cap
        self.edge_cap = space.edge_cap
        self.filt = filt
        self.edges: list[Edge] = []
        self.tseq = filt.triangle_seq
        self.tcount = filt.triangle_count
        self.prune_triangles = filt.uses_triangles
        self.adj = [0] * self.n

    # -- per-vertex choices ------------------------------------------------

    def _distribute(self, u: int, cands: list[int], pos: int, s: int) -> Iterator[list[tuple[int, int]]]:
        """Yield ways to hand ``s`` stubs of ``u`` to ``cands[pos:]``, lexicographically."""
        if s == 0:
            yield []
            return
        if pos == len(cands):
            return
        res, cap = self.res, self.edge_cap
        # capacity of the tail bounds what can still be placed
        tail = 0
        for w in cands[pos:]:
            tail += res[w] if cap is None else min(cap, res[w])
            if tail >= s:
                break
        if tail < s:
            return
        w = cands[pos]
        top = min(s, res[w]) if cap is None else min(s, res[w], cap)
        for mult in range(top, -1, -1):
            for rest in self._distribute(u, cands, pos + 1, s - mult):
                if mult:
                    yield [(w, mult)] + rest
                else:
                    yield rest

    def choices(self, u: int) -> Iterator[tuple[int, list[tuple[int, int]]]]:
        r = self.res[u]
        max_loops = r // 2 if self.loop_cap is None else min(r // 2, self.loop_cap)
        cands = [w for w in range(u + 1, self.n) if self.res[w] > 0]
        for loops in range(max_loops, -1, -1):
            for dist in self._distribute(u, cands, 0, r - 2 * loops):
                yield loops, dist

    # -- triangle pruning (simple space only) -----------------------------

    def _triangles_ok(self, u: int) -> bool:
        """Bounds check once vertices ``0..u`` have all their edges fixed."""
        adj, n, res = self.adj, self.n, self.res
        # later vertices that can still receive edges; only they can close new triangles
        live = 0
        for w in range(u + 1, n):
            if res[w]:
                live |= 1 << w
        tseq = self.tseq
        closed_total = 0
        open_pairs = 0
        for v in range(n):
            nb = adj[v]
            # pairs of v's neighbours that are already joined
            closed2 = 0
            x = nb
            while x:
                low = x & -x
                closed2 += (adj[low.bit_length() - 1] & nb).bit_count()
                x ^= low
            closed = closed2 // 2
            closed_total += closed
            if v <= u:
                # v is complete; an open pair of its neighbours closes only if
                # both endpoints are still live
                free = (nb & live).bit_count()
                potential = free * (free - 1) // 2
                open_pairs += potential
                if tseq is not None and not (closed <= tseq[v] <= closed + potential):
                    return False
            elif tseq is not None:
                t = tseq[v]
                if closed > t:
                    return False
                r = res[v]
                # v's current neighbours are all processed; each future neighbour b
                # adds |N(v) & N(b)| known triangles, future pairs add at most C(r, 2)
                if r == 0:
                    if closed != t:
                        return False
                    continue
                gains = []
                x = live & ~(1 << v)
                while x:
                    low = x & -x
                    gains.append((adj[low.bit_length() - 1] & nb).bit_count())
                    x ^= low
                if len(gains) < r:
                    return False
                gains.sort(reverse=True)
                if closed + sum(gains[:r]) + r * (r - 1) // 2 < t:
                    return False
        if self.tcount is not None:
            closed_total //= 3
            if closed_total > self.tcount:
                return False
            # triangles still possible: through a processed vertex, or among later ones
            among_later = sum(res[w] * (res[w] - 1) // 2 for w in range(u + 1, n)) // 3
            if closed_total + open_pairs + among_later < self.tcount:
                return False
        return True

    # -- main recursion ---------------------------------------------------

    def run(self, u: int = 0, root_filter: Callable[[int], bool] | None = None) -> Iterator[Graph]:
        n = self.n
        while u < n and self.res[u] == 0:
            u += 1
        if u == n:
            g = Graph._trusted(n, tuple(self.edges))
            if self.filt(g):
                yield g
            return
        res, edges, adj = self.res, self.edges, self.adj
        for idx, (loops, dist) in enumerate(self.choices(u)):
            if root_filter is not None and not root_filter(idx):
                continue
            base = len(edges)
            edges.extend([(u, u)] * loops)
            res[u] = 0
            for w, mult in dist:
                res[w] -= mult
                edges.extend([(u, w)] * mult)
                adj[u] |= 1 << w
                adj[w] |= 1 << u
            if not self.prune_triangles or self._triangles_ok(u):
                yield from self.run(u + 1)
            for w, mult in dist:
                res[w] += mult
                adj[u] &= ~(1 << w)
                adj[w] &= ~(1 << u)
            res[u] = 2 * loops + sum(m for _, m in dist)
            del edges[base:]


def enumerate_graphs(
    space: GraphSpace,
    degrees: Sequence[int],
    filt: EnumFilter | None = None,
    limit: int | None = None,
) -> Iterator[Graph]:
    """Yield every labeled graph in ``space`` with the given degrees that passes
    ``filt``, each once, in sorted edge-list order.

    Raises CensusTooLarge once more than ``limit`` graphs would be yielded.
    """
    d = validate_degree_sequence(degrees)
    filt = filt or NO_FILTER
    _check_filter(space, d, filt)
    count = 0
    for g in _Search(space, d, filt).run():
        count += 1
        if limit is not None and count > limit:
            raise CensusTooLarge(f"more than {limit} graphs in the {space.name} space for {d}")
        yield g


def census(space: GraphSpace, degrees: Sequence[int], filt: EnumFilter | None = None,
           limit: int | None = None) -> list[Graph]:
    return list(enumerate_graphs(space, degrees, filt, limit))


# --- parallel counting ---------------------------------------------------


def _count_part(space, degrees, filt, part, jobs, histogram):
    search = _Search(space, degrees, filt)
    out: Counter = Counter()
    for g in search.run(root_filter=lambda idx: idx % jobs == part):
        out[triangle_count(g) if histogram else 0] += 1
    return out


def _merged_counts(space, degrees, filt, jobs, histogram) -> Counter:
    d = validate_degree_sequence(degrees)
    filt = filt or NO_FILTER
    _check_filter(space, d, filt)
    if histogram and space != SIMPLE:
        raise FilterInapplicable("triangle histograms need the simple space")
    if jobs <= 1:
        return _count_part(space, d, filt, 0, 1, histogram)
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_count_part, space, d, filt, p, jobs, histogram) for p in range(jobs)]
        for fut in futures:
            total.update(fut.result())
    return total


def count_graphs(space: GraphSpace, degrees: Sequence[int], filt: EnumFilter | None = None,
                 jobs: int = 1) -> int:
    """Number of graphs ``enumerate_graphs`` would yield; ``jobs > 1`` splits the
    search at its first branching level across worker processes."""
    return sum(_merged_counts(space, degrees, filt, jobs, histogram=False).values())


def triangle_histogram(degrees: Sequence[int], filt: EnumFilter | None = None,
                       jobs: int = 1) -> dict[int, int]:
    """Simple graphs with the given degrees, bucketed by triangle count."""
    counts = _merged_counts(SIMPLE, degrees, filt, jobs, histogram=True)
    return dict(sorted(counts.items()))
