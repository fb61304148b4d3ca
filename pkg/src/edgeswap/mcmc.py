"""Double edge-swap Markov chain with a uniform stationary distribution.

Each step draws an unordered pair of edge instances and one of the two
non-identity pairings uniformly. Results outside the space, or equal to the
current graph, are held. Otherwise the move is accepted with probability
``min(1, N(h -> g) / N(g -> h))`` where ``N(g -> h)`` counts the proposals
that turn ``g`` into ``h``. The resulting kernel is symmetric, so the chain is
uniform on each connected component of the gog.
"""

from __future__ import annotations

import bisect
import math
import random
from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Sequence

from scipy import stats

from .errors import InvalidInput, SampleOutsideCensus
from .graph import Edge, Graph, GraphSpace, is_valid_in_space
from .swaps import Pairing, double_swap_neighbors, pair_edges


@dataclass(frozen=True)
class ChainConfig:
    """Run parameters; ``None`` burn-in/thin fall back to ``default_burn_in``/``default_thin``."""

    space: GraphSpace
    burn_in: int | None = None
    thin: int | None = None
    sample_count: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.burn_in is not None and self.burn_in < 0:
            raise InvalidInput("burn_in must be >= 0")
        if self.thin is not None and self.thin < 1:
            raise InvalidInput("thin must be >= 1")
        if self.sample_count < 0:
            raise InvalidInput("sample_count must be >= 0")

    def resolved(self, m: int) -> "ChainConfig":
        return replace(
            self,
            burn_in=default_burn_in(m) if self.burn_in is None else self.burn_in,
            thin=default_thin(m) if self.thin is None else self.thin,
        )


def default_burn_in(m: int) -> int:
    return int(20 * m * math.log(m)) + 1000 if m > 1 else 1000


def default_thin(m: int) -> int:
    return max(1, m)


@dataclass(frozen=True)
class ChainState:
    current: Graph
    steps_taken: int = 0
    accepted: int = 0


def _count_pairings(e: Edge, f: Edge, a: Edge, b: Edge) -> int:
    want = sorted((a, b))
    return sum(1 for p in Pairing if sorted(pair_edges(e, f, p)) == want)


def _instance_pairs(mult: dict, e: Edge, f: Edge) -> int:
    if e == f:
        c = mult.get(e, 0)
        return c * (c - 1) // 2
    return mult.get(e, 0) * mult.get(f, 0)


def proposal_degeneracy(g: Graph, h: Graph) -> int:
    """Number of (instance pair, pairing) proposals that rewire ``g`` into ``h``."""
    mg, mh = Counter(g.edges), Counter(h.edges)
    removed = sorted((mg - mh).elements())
    added = sorted((mh - mg).elements())
    if len(removed) != 2 or len(added) != 2:
        return 0
    (e, f), (a, b) = removed, added
    return _instance_pairs(mg, e, f) * _count_pairings(e, f, a, b)


class _Walker:
    """Mutable chain state shared by ``step`` and ``sample``."""

    def __init__(self, g: Graph, space: GraphSpace):
        self.n = g.n
        self.edges = list(g.edges)
        self.mult = Counter(self.edges)
        self.loop_cap = space.loop_cap
        self.edge_cap = space.edge_cap

    def graph(self) -> Graph:
        return Graph._trusted(self.n, tuple(self.edges))

    def step(self, rng: random.Random) -> bool:
        """One kernel step; returns True if a move was accepted."""
        edges, mult = self.edges, self.mult
        m = len(edges)
        if m < 2:
            return False
        # one uniform draw over (ordered pair, pairing); both orders of a pair
        # give the same rewiring, so the unordered pair is uniform too
        x = int(rng.random() * (2 * m * (m - 1)))
        cross_b = x & 1
        x >>= 1
        i, j = divmod(x, m - 1)
        if j >= i:
            j += 1
        (u, v), (p, q) = e, f = edges[i], edges[j]
        if cross_b:
            a, b = (u, q) if u <= q else (q, u), (v, p) if v <= p else (p, v)
        else:
            a, b = (u, p) if u <= p else (p, u), (v, q) if v <= q else (q, v)
        if (a == e and b == f) or (a == f and b == e):
            return False
        # h != g forces {a, b} and {e, f} to be disjoint
        for x in {a, b}:
            cap = self.loop_cap if x[0] == x[1] else self.edge_cap
            if cap is not None and mult.get(x, 0) + (x == a) + (x == b) > cap:
                return False
        forward = _instance_pairs(mult, e, f) * _count_pairings(e, f, a, b)
        after = {a: mult.get(a, 0), b: mult.get(b, 0)}
        after[a] += 1
        after[b] += 1
        backward = _instance_pairs(after, a, b) * _count_pairings(a, b, e, f)
        if backward < forward and rng.random() * forward >= backward:
            return False
        for x in (e, f):
            del edges[bisect.bisect_left(edges, x)]
            mult[x] -= 1
            if not mult[x]:
                del mult[x]
        for x in (a, b):
            bisect.insort(edges, x)
            mult[x] += 1
        return True


def step(state: ChainState, cfg: ChainConfig, rng: random.Random) -> ChainState:
    walker = _Walker(state.current, cfg.space)
    moved = walker.step(rng)
    return ChainState(
        current=walker.graph() if moved else state.current,
        steps_taken=state.steps_taken + 1,
        accepted=state.accepted + int(moved),
    )


def iter_samples(g0: Graph, cfg: ChainConfig) -> Iterator[tuple[int, Graph]]:
    """Yield ``(step number, graph)`` for each retained sample."""
    if not is_valid_in_space(g0, cfg.space):
        raise InvalidInput(f"starting graph is not valid in the {cfg.space.name} space")
    cfg = cfg.resolved(g0.m)
    if cfg.sample_count == 0:
        return
    rng = random.Random(cfg.seed)
    walker = _Walker(g0, cfg.space)
    steps = 0
    for _ in range(cfg.burn_in):
        walker.step(rng)
    steps += cfg.burn_in
    for _ in range(cfg.sample_count):
        for _ in range(cfg.thin):
            walker.step(rng)
        steps += cfg.thin
        yield steps, walker.graph()


def sample(g0: Graph, cfg: ChainConfig) -> list[Graph]:
    return [g for _, g in iter_samples(g0, cfg)]


def transition_probabilities(g: Graph, space: GraphSpace) -> dict[Graph, Fraction]:
    """Exact one-step distribution of the chain from ``g`` (holding included)."""
    m = g.m
    out: dict[Graph, Fraction] = {}
    if m < 2:
        return {g: Fraction(1)}
    total = m * (m - 1)  # unordered pairs times two pairings
    moved = Fraction(0)
    for h in double_swap_neighbors(g, space):
        fwd, back = proposal_degeneracy(g, h), proposal_degeneracy(h, g)
        p = Fraction(min(fwd, back), total)
        out[h] = p
        moved += p
    out[g] = 1 - moved
    return out


@dataclass(frozen=True)
class UniformityReport:
    statistic: float
    p_value: float
    dof: int
    counts: tuple[int, ...]


def uniformity_report(samples: Sequence[Graph], census: Sequence[Graph]) -> UniformityReport:
    """Chi-square goodness of fit of sample counts against uniform over ``census``."""
    position = {g: i for i, g in enumerate(census)}
    counts = [0] * len(census)
    for g in samples:
        i = position.get(g)
        if i is None:
            raise SampleOutsideCensus(f"sample {g.edges} is not in the census")
        counts[i] += 1
    if len(census) < 2:
        return UniformityReport(0.0, 1.0, 0, tuple(counts))
    result = stats.chisquare(counts)
    return UniformityReport(float(result.statistic), float(result.pvalue), len(census) - 1, tuple(counts))
