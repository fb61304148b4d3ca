"""Labeled graphs with loops and multiedges, the six graph spaces, and
degree/triangle statistics.

A :class:`Graph` is an immutable value: a vertex count plus the sorted list
of edge *instances*. A multiedge appears once per copy and a loop ``(u, u)``
is a single instance that adds 2 to the degree of ``u``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import IO, Iterable

from .errors import (
    InvalidDegreeSequence,
    InvalidGraph,
    InvalidTriangleSequence,
    NonSimpleGraph,
)

Edge = tuple[int, int]


@dataclass(frozen=True, order=True)
class Graph:
    """Immutable labeled multigraph on vertices ``0..n-1``.

    Edges are normalized to ``(min, max)`` and kept sorted, so two graphs
    compare equal exactly when they have the same vertex count and the same
    edge multiset.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidGraph(f"vertex count must be a positive integer, got {self.n!r}")
        norm = []
        for e in self.edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraph(f"edge {(u, v)} has an endpoint outside [0, {self.n})")
            norm.append((u, v) if u <= v else (v, u))
        norm.sort()
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def _trusted(cls, n: int, edges: tuple[Edge, ...]) -> "Graph":
        # Skip validation; callers guarantee normalized, sorted, in-range edges.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", edges)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def multiplicities(self) -> Counter:
        return Counter(self.edges)

    def loops(self) -> list[int]:
        """Loop count per vertex."""
        out = [0] * self.n
        for u, v in self.edges:
            if u == v:
                out[u] += 1
        return out

    @property
    def loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def is_simple(self) -> bool:
        prev = None
        for e in self.edges:
            if e[0] == e[1] or e == prev:
                return False
            prev = e
        return True

    def non_loop_edges(self) -> list[Edge]:
        return [e for e in self.edges if e[0] != e[1]]

    def __str__(self):
        return format_graph(self).rstrip("\n")


class LoopPolicy(enum.Enum):
    FORBIDDEN = "forbidden"
    SINGLE_ONLY = "single"
    UNLIMITED = "unlimited"


class MultiedgePolicy(enum.Enum):
    SINGLE_ONLY = "single"
    UNLIMITED = "unlimited"


_SPACE_NAMES = {
    (LoopPolicy.FORBIDDEN, MultiedgePolicy.SINGLE_ONLY): "simple",
    (LoopPolicy.FORBIDDEN, MultiedgePolicy.UNLIMITED): "multigraph",
    (LoopPolicy.SINGLE_ONLY, MultiedgePolicy.SINGLE_ONLY): "loopy-graph",
    (LoopPolicy.SINGLE_ONLY, MultiedgePolicy.UNLIMITED): "loopy-multigraph",
    (LoopPolicy.UNLIMITED, MultiedgePolicy.SINGLE_ONLY): "multiloop-graph",
    (LoopPolicy.UNLIMITED, MultiedgePolicy.UNLIMITED): "pseudograph",
}

# Short spellings accepted on the command line.
_ALIASES = {
    "multiloop": "multiloop-graph",
    "loopy": "loopy-graph",
    "pseudo": "pseudograph",
    "multi": "multigraph",
}


@dataclass(frozen=True)
class GraphSpace:
    loop_policy: LoopPolicy
    multiedge_policy: MultiedgePolicy

    @property
    def name(self) -> str:
        return _SPACE_NAMES[(self.loop_policy, self.multiedge_policy)]

    @property
    def loop_cap(self) -> int | None:
        """Maximum loops per vertex (``None`` means unbounded)."""
        return {LoopPolicy.FORBIDDEN: 0, LoopPolicy.SINGLE_ONLY: 1, LoopPolicy.UNLIMITED: None}[
            self.loop_policy
        ]

    @property
    def edge_cap(self) -> int | None:
        """Maximum copies of a non-loop edge (``None`` means unbounded)."""
        return 1 if self.multiedge_policy is MultiedgePolicy.SINGLE_ONLY else None

    @classmethod
    def from_name(cls, name: str) -> "GraphSpace":
        key = _ALIASES.get(name, name)
        for policies, space_name in _SPACE_NAMES.items():
            if space_name == key:
                return cls(*policies)
        raise ValueError(f"unknown graph space {name!r}; expected one of {sorted(_SPACE_NAMES.values())}")

    def __str__(self):
        return self.name


SIMPLE = GraphSpace(LoopPolicy.FORBIDDEN, MultiedgePolicy.SINGLE_ONLY)
MULTIGRAPH = GraphSpace(LoopPolicy.FORBIDDEN, MultiedgePolicy.UNLIMITED)
LOOPY_GRAPH = GraphSpace(LoopPolicy.SINGLE_ONLY, MultiedgePolicy.SINGLE_ONLY)
LOOPY_MULTIGRAPH = GraphSpace(LoopPolicy.SINGLE_ONLY, MultiedgePolicy.UNLIMITED)
MULTILOOP_GRAPH = GraphSpace(LoopPolicy.UNLIMITED, MultiedgePolicy.SINGLE_ONLY)
PSEUDOGRAPH = GraphSpace(LoopPolicy.UNLIMITED, MultiedgePolicy.UNLIMITED)

ALL_SPACES = (SIMPLE, MULTIGRAPH, LOOPY_GRAPH, LOOPY_MULTIGRAPH, MULTILOOP_GRAPH, PSEUDOGRAPH)
SPACE_NAMES = tuple(s.name for s in ALL_SPACES)


def validate_degree_sequence(degrees: Iterable[int]) -> tuple[int, ...]:
    """Return ``degrees`` as a tuple, rejecting zeros, negatives and odd sums."""
    d = tuple(int(k) for k in degrees)
    if not d:
        raise InvalidDegreeSequence("degree sequence is empty")
    if any(k <= 0 for k in d):
        raise InvalidDegreeSequence(f"degrees must be positive (no isolated vertices): {d}")
    if sum(d) % 2:
        raise InvalidDegreeSequence(f"degree sum {sum(d)} is odd: {d}")
    return d


def validate_triangle_sequence(counts: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    t = tuple(int(c) for c in counts)
    if any(c < 0 for c in t):
        raise InvalidTriangleSequence(f"triangle counts must be non-negative: {t}")
    if sum(t) % 3:
        raise InvalidTriangleSequence(f"triangle counts must sum to a multiple of 3: {t}")
    if n is not None and len(t) != n:
        raise InvalidTriangleSequence(f"expected {n} triangle counts, got {len(t)}")
    return t


def degree_sequence(g: Graph) -> tuple[int, ...]:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return tuple(deg)


def is_valid_in_space(g: Graph, space: GraphSpace) -> bool:
    loop_cap, edge_cap = space.loop_cap, space.edge_cap
    if loop_cap is None and edge_cap is None:
        return True
    for (u, v), mult in Counter(g.edges).items():
        cap = loop_cap if u == v else edge_cap
        if cap is not None and mult > cap:
            return False
    return True


def _adjacency_masks(g: Graph) -> list[int]:
    if not g.is_simple():
        raise NonSimpleGraph("triangles are only defined for simple graphs")
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def triangle_sequence(g: Graph) -> tuple[int, ...]:
    """Number of triangles through each vertex of a simple graph."""
    adj = _adjacency_masks(g)
    counts = [0] * g.n
    for u, v in g.edges:
        common = adj[u] & adj[v]
        # a triangle at u contains two of u's edges, hence the halving below
        c = common.bit_count()
        counts[u] += c
        counts[v] += c
    return tuple(c // 2 for c in counts)


def triangle_count(g: Graph) -> int:
    return sum(triangle_sequence(g)) // 3


def edge_distance(g: Graph, h: Graph) -> int:
    """Number of edge instances of ``g`` that are absent from ``h``."""
    return sum((Counter(g.edges) - Counter(h.edges)).values())


# --- text format ---------------------------------------------------------


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise InvalidGraph("graph text must start with 'n m'")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise InvalidGraph(f"non-integer token in graph text: {exc}") from None
    n, m = nums[0], nums[1]
    body = nums[2:]
    if len(body) != 2 * m:
        raise InvalidGraph(f"header declares {m} edges but {len(body) / 2:g} were given")
    return Graph(n, [(body[2 * i], body[2 * i + 1]) for i in range(m)])


def read_graph(stream: IO[str]) -> Graph:
    return parse_graph(stream.read())


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse ``"3,3,2"`` (commas and/or whitespace) into a tuple of ints."""
    parts = text.replace(",", " ").split()
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidDegreeSequence(f"not an integer list: {text!r}") from None
