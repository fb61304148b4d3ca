"""Slow, obviously-correct reference implementations used to check the library.

Nothing here imports the search, refinement or index code under test; only the
``Graph`` value type and the space caps are shared.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

from edgeswap.graph import Graph, GraphSpace


def degrees_of(edges, n):
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return tuple(deg)


def valid(edges, space: GraphSpace) -> bool:
    for (u, v), c in Counter(edges).items():
        cap = space.loop_cap if u == v else space.edge_cap
        if cap is not None and c > cap:
            return False
    return True


def naive_census(space: GraphSpace, degrees) -> set[Graph]:
    """Every edge multiset over the vertex pairs, filtered by degrees and space."""
    n = len(degrees)
    pairs = [(u, v) for u in range(n) for v in range(u, n)]
    out = set()

    def rec(i, chosen, deg):
        if i == len(pairs):
            if tuple(deg) == tuple(degrees) and valid(chosen, space):
                out.add(Graph(n, chosen))
            return
        u, v = pairs[i]
        mult = 0
        while True:
            rec(i + 1, chosen + [(u, v)] * mult, deg)
            deg = list(deg)
            deg[u] += 1
            deg[v] += 1
            if deg[u] > degrees[u] or deg[v] > degrees[v]:
                return
            mult += 1

    rec(0, [], [0] * n)
    return out


def naive_triangles(g: Graph) -> tuple[int, tuple[int, ...]]:
    es = set(g.edges)
    seq = [0] * g.n
    total = 0
    for a, b, c in itertools.combinations(range(g.n), 3):
        if (a, b) in es and (a, c) in es and (b, c) in es:
            total += 1
            for x in (a, b, c):
                seq[x] += 1
    return total, tuple(seq)


def permuted(g: Graph, perm) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def brute_canonical(g: Graph) -> tuple:
    return min(permuted(g, p).edges for p in itertools.permutations(range(g.n)))


def brute_automorphisms(g: Graph) -> int:
    return sum(1 for p in itertools.permutations(range(g.n)) if permuted(g, p) == g)


def brute_double_swaps(g: Graph, space: GraphSpace) -> set[Graph]:
    out = set()
    for i, j in itertools.combinations(range(g.m), 2):
        (u, v), (x, y) = g.edges[i], g.edges[j]
        rest = [e for t, e in enumerate(g.edges) if t not in (i, j)]
        for a, b in (((u, x), (v, y)), ((u, y), (v, x))):
            h = Graph(g.n, rest + [a, b])
            if h != g and valid(h.edges, space):
                out.add(h)
    return out


def _rotate(g: Graph, order, mobile_first, step):
    """Cyclically shift one endpoint of each edge in ``order``."""
    chosen = [g.edges[i] for i in order]
    mob = [e[0] if f else e[1] for e, f in zip(chosen, mobile_first)]
    fix = [e[1] if f else e[0] for e, f in zip(chosen, mobile_first)]
    k = len(order)
    rest = [e for t, e in enumerate(g.edges) if t not in set(order)]
    return Graph(g.n, rest + [(fix[t], mob[(t + step) % k]) for t in range(k)])


def brute_k_swaps(g: Graph, space: GraphSpace, k: int, keep=None, all_orders=False) -> set[Graph]:
    """Neighbors by trying every subset, endpoint choice and direction.

    With ``all_orders`` each subset is tried in every permutation as well.
    """
    out = set()
    for subset in itertools.combinations(range(g.m), k):
        orders = itertools.permutations(subset) if all_orders else [subset]
        for order in orders:
            for flags in itertools.product((True, False), repeat=k):
                for step in (1, -1):
                    h = _rotate(g, order, flags, step)
                    if h != g and valid(h.edges, space) and (keep is None or keep(h)):
                        out.add(h)
    return out


def components(vertices, adjacent) -> list[set]:
    """Connected components by union-find over an explicit neighbor function."""
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in vertices:
        for w in adjacent(v):
            if w in parent:
                parent[find(v)] = find(w)
    groups: dict = {}
    for v in vertices:
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def brute_gog_components(space: GraphSpace, degrees, k=2, keep=None) -> list[set]:
    census = {g for g in naive_census(space, degrees) if keep is None or keep(g)}
    if k == 2:
        nbrs = lambda g: {h for h in brute_double_swaps(g, space) if keep is None or keep(h)}
    else:
        nbrs = lambda g: brute_k_swaps(g, space, k, keep)
    return components(sorted(census), nbrs)


def proposal_outcomes(g: Graph) -> Counter:
    """Result graph of each of the 2*C(m,2) proposals, counted."""
    out = Counter()
    for i, j in itertools.combinations(range(g.m), 2):
        (u, v), (x, y) = g.edges[i], g.edges[j]
        rest = [e for t, e in enumerate(g.edges) if t not in (i, j)]
        for a, b in (((u, x), (v, y)), ((u, y), (v, x))):
            out[Graph(g.n, rest + [a, b])] += 1
    return out


def exact_kernel(census, space: GraphSpace):
    """Transition matrix of the MH chain, built from raw proposal counts."""
    index = {g: i for i, g in enumerate(census)}
    size = len(census)
    P = [[Fraction(0)] * size for _ in range(size)]
    for g in census:
        m = g.m
        total = m * (m - 1)
        fwd = proposal_outcomes(g)
        i = index[g]
        moved = Fraction(0)
        for h, c in fwd.items():
            if h == g or not valid(h.edges, space):
                continue
            back = proposal_outcomes(h)[g]
            p = Fraction(c, total) * min(Fraction(1), Fraction(back, c))
            P[i][index[h]] += p
            moved += p
        P[i][i] = 1 - moved
    return P


def random_graph(rng, space: GraphSpace, n: int, m: int, loop_bias: float = 0.3) -> Graph | None:
    """A random graph of ``space`` on ``n`` vertices, or None if isolated vertices remain.

    Edges are added one at a time, skipping any that would break the space caps.
    """
    edges: list = []
    mult: Counter = Counter()
    for _ in range(m * 4):
        if len(edges) == m:
            break
        if space.loop_cap != 0 and rng.random() < loop_bias:
            u = rng.randrange(n)
            e = (u, u)
        else:
            u, v = sorted(rng.sample(range(n), 2))
            e = (u, v)
        cap = space.loop_cap if e[0] == e[1] else space.edge_cap
        if cap is not None and mult[e] >= cap:
            continue
        mult[e] += 1
        edges.append(e)
    deg = degrees_of(edges, n)
    if min(deg) == 0:
        return None
    return Graph(n, edges)


def replay(g: Graph, moves):
    """Apply double swaps one by one by hand; yield each intermediate graph."""
    for mv in moves:
        edges = list(g.edges)
        (u, v), (x, y) = edges[mv.i], edges[mv.j]
        pair = ((u, x), (v, y)) if mv.pairing.value == "A" else ((u, y), (v, x))
        rest = [e for t, e in enumerate(edges) if t not in (mv.i, mv.j)]
        g = Graph(g.n, rest + list(pair))
        yield g


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Try all n! vertex maps (simple graphs)."""
    if g.n != h.n or g.m != h.m:
        return False
    target = set(h.edges)
    for p in itertools.permutations(range(g.n)):
        if all(((p[u], p[v]) if p[u] <= p[v] else (p[v], p[u])) in target for u, v in g.edges):
            return True
    return False
