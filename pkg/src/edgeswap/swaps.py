"""Double edge-swaps and k edge-swaps over edge instances.

A double swap picks two edge instances ``(u, v)`` and ``(x, y)`` and rewires
them with one of the two non-identity pairings::

    CROSS_A: (u, v), (x, y) -> (u, x), (v, y)
    CROSS_B: (u, v), (x, y) -> (u, y), (v, x)

A k-swap picks k instances, marks one endpoint of each as mobile, and rotates
the mobile endpoints one step along the chosen order. Selections may share
vertices (loops, two copies of a multiedge, ...); whether the result is
allowed is decided only by the target space.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import BadArity, IndexOutOfRange, InvalidInput
from .graph import Edge, Graph, GraphSpace, is_valid_in_space


class Pairing(enum.Enum):
    CROSS_A = "A"
    CROSS_B = "B"


@dataclass(frozen=True)
class SwapMove:
    i: int
    j: int
    pairing: Pairing = Pairing.CROSS_A

    def __post_init__(self):
        if self.i == self.j:
            raise InvalidInput("a swap needs two distinct edge instances")


class Direction(enum.IntEnum):
    FORWARD = 1
    BACKWARD = -1


@dataclass(frozen=True)
class KSwapMove:
    """Rotate one endpoint of each selected edge instance.

    ``orientations[t]`` is 0 when the smaller endpoint of edge ``indices[t]``
    is mobile and 1 for the larger one. Going ``FORWARD``, edge ``t`` keeps
    its fixed endpoint and receives the mobile endpoint of edge ``t + 1``.
    """

    indices: tuple[int, ...]
    orientations: tuple[int, ...]
    direction: Direction = Direction.FORWARD

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        object.__setattr__(self, "orientations", tuple(self.orientations))
        object.__setattr__(self, "direction", Direction(self.direction))
        if len(self.indices) < 2:
            raise BadArity(f"a k-swap needs k >= 2 edges, got {len(self.indices)}")
        if len(self.orientations) != len(self.indices):
            raise InvalidInput("one orientation per selected edge is required")
        if len(set(self.indices)) != len(self.indices):
            raise InvalidInput("k-swap edge indices must be distinct")
        if any(o not in (0, 1) for o in self.orientations):
            raise InvalidInput("orientations must be 0 or 1")

    @property
    def k(self) -> int:
        return len(self.indices)


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


def pair_edges(e: Edge, f: Edge, pairing: Pairing) -> tuple[Edge, Edge]:
    (u, v), (x, y) = e, f
    if pairing is Pairing.CROSS_A:
        return _norm(u, x), _norm(v, y)
    return _norm(u, y), _norm(v, x)


def _replace(g: Graph, removed: Sequence[int], added: Sequence[Edge]) -> Graph:
    drop = set(removed)
    edges = [e for idx, e in enumerate(g.edges) if idx not in drop]
    edges.extend(added)
    edges.sort()
    return Graph._trusted(g.n, tuple(edges))


def _check_index(g: Graph, idx: int) -> None:
    if not 0 <= idx < g.m:
        raise IndexOutOfRange(f"edge index {idx} out of range for {g.m} edges")


def apply_double_swap(g: Graph, move: SwapMove) -> Graph:
    _check_index(g, move.i)
    _check_index(g, move.j)
    a, b = pair_edges(g.edges[move.i], g.edges[move.j], move.pairing)
    return _replace(g, (move.i, move.j), (a, b))


def _locate(g: Graph, wanted: Sequence[Edge]) -> list[int]:
    # distinct instance indices for possibly repeated edges
    used: set[int] = set()
    out = []
    for e in wanted:
        for idx, f in enumerate(g.edges):
            if f == e and idx not in used:
                used.add(idx)
                out.append(idx)
                break
        else:
            raise InvalidInput(f"edge {e} not present")
    return out


def inverse_double_swap(g: Graph, move: SwapMove) -> SwapMove:
    """The move on ``apply_double_swap(g, move)`` that restores ``g``."""
    e, f = g.edges[move.i], g.edges[move.j]
    a, b = pair_edges(e, f, move.pairing)
    h = apply_double_swap(g, move)
    i, j = _locate(h, (a, b))
    for pairing in Pairing:
        if sorted(pair_edges(a, b, pairing)) == sorted((e, f)):
            return SwapMove(i, j, pairing)
    raise AssertionError("every double swap is invertible")  # pragma: no cover


def iter_double_swap_moves(g: Graph) -> Iterator[SwapMove]:
    """All 2 * C(m, 2) proposals: unordered instance pairs times two pairings."""
    for i, j in itertools.combinations(range(g.m), 2):
        yield SwapMove(i, j, Pairing.CROSS_A)
        yield SwapMove(i, j, Pairing.CROSS_B)


def double_swap_neighbors(g: Graph, space: GraphSpace) -> list[Graph]:
    """Distinct graphs one space-valid double swap away from ``g`` (excluding ``g``)."""
    if not is_valid_in_space(g, space):
        raise InvalidInput(f"graph is not valid in the {space.name} space")
    seen = set()
    edges = g.edges
    for i, j in itertools.combinations(range(g.m), 2):
        for pairing in Pairing:
            a, b = pair_edges(edges[i], edges[j], pairing)
            h = _replace(g, (i, j), (a, b))
            if h != g and h not in seen and is_valid_in_space(h, space):
                seen.add(h)
    return sorted(seen)


def apply_k_swap(g: Graph, move: KSwapMove) -> Graph:
    for idx in move.indices:
        _check_index(g, idx)
    chosen = [g.edges[idx] for idx in move.indices]
    mobile = [e[o] for e, o in zip(chosen, move.orientations)]
    fixed = [e[1 - o] for e, o in zip(chosen, move.orientations)]
    k = move.k
    step = 1 if move.direction is Direction.FORWARD else -1
    added = [_norm(fixed[t], mobile[(t + step) % k]) for t in range(k)]
    return _replace(g, move.indices, added)


def inverse_k_swap(g: Graph, move: KSwapMove) -> KSwapMove:
    """The move on ``apply_k_swap(g, move)`` that restores ``g``."""
    chosen = [g.edges[idx] for idx in move.indices]
    mobile = [e[o] for e, o in zip(chosen, move.orientations)]
    fixed = [e[1 - o] for e, o in zip(chosen, move.orientations)]
    k = move.k
    step = 1 if move.direction is Direction.FORWARD else -1
    new_mobile = [mobile[(t + step) % k] for t in range(k)]
    added = [_norm(fixed[t], new_mobile[t]) for t in range(k)]
    h = apply_k_swap(g, move)
    indices = _locate(h, added)
    orientations = tuple(0 if e[0] == mv else 1 for e, mv in zip(added, new_mobile))
    return KSwapMove(tuple(indices), orientations, Direction(-move.direction))


def iter_k_swap_moves(g: Graph, k: int, all_orders: bool = False) -> Iterator[KSwapMove]:
    """Enumerate k-swaps of ``g``.

    By default the mobile endpoints rotate along increasing index order, in
    both directions (one direction when k == 2, where they coincide). With
    ``all_orders`` every cyclic order of the selected edges is generated
    instead: (k-1)! orders per subset, forward only, since going backward
    along an order is going forward along its reverse.
    """
    if k < 2:
        raise BadArity(f"k must be at least 2, got {k}")
    if all_orders:
        for subset in itertools.combinations(range(g.m), k):
            for rest in itertools.permutations(subset[1:]):
                indices = (subset[0],) + rest
                for orientations in itertools.product((0, 1), repeat=k):
                    yield KSwapMove(indices, orientations, Direction.FORWARD)
        return
    directions = (Direction.FORWARD,) if k == 2 else (Direction.FORWARD, Direction.BACKWARD)
    for indices in itertools.combinations(range(g.m), k):
        for orientations in itertools.product((0, 1), repeat=k):
            for direction in directions:
                yield KSwapMove(indices, orientations, direction)


def k_swap_neighbors(
    g: Graph,
    space: GraphSpace,
    k: int,
    keep: Callable[[Graph], bool] | None = None,
    all_orders: bool = False,
) -> list[Graph]:
    """Distinct space-valid graphs one k-swap away from ``g`` that satisfy ``keep``.

    See ``iter_k_swap_moves`` for the meaning of ``all_orders``.
    """
    if k < 2:
        raise BadArity(f"k must be at least 2, got {k}")
    if not is_valid_in_space(g, space):
        raise InvalidInput(f"graph is not valid in the {space.name} space")
    if keep is not None and not keep(g):
        raise InvalidInput("graph does not satisfy the keep predicate")
    seen: set[Graph] = set()
    rejected: set[Graph] = set()
    for move in iter_k_swap_moves(g, k, all_orders):
        h = apply_k_swap(g, move)
        if h == g or h in seen or h in rejected:
            continue
        if is_valid_in_space(h, space) and (keep is None or keep(h)):
            seen.add(h)
        else:
            rejected.add(h)
    return sorted(seen)


def _submultisets(items: list[Edge], size: int) -> Iterator[list[Edge]]:
    values = sorted(Counter(items).items())

    def rec(pos: int, left: int) -> Iterator[list[Edge]]:
        if left == 0:
            yield []
            return
        if pos == len(values):
            return
        e, c = values[pos]
        for take in range(min(c, left), -1, -1):
            for rest in rec(pos + 1, left - take):
                yield [e] * take + rest

    return rec(0, size)


def _alternating_cycle(removed: list[Edge], added: list[Edge]) -> list[tuple[int, int, int]] | None:
    """Order ``removed``/``added`` as a closed trail m0 -R- f0 -A- m1 -R- f1 ...

    Returns ``[(removed index, mobile end, fixed end), ...]`` or None.
    """
    k = len(removed)
    first = removed[0]

    def walk(start, cur, used_r, used_a, path):
        if len(path) == k:
            return path if cur == start else None
        for i, e in enumerate(removed):
            if used_r >> i & 1 or cur not in e:
                continue
            if not path and i != 0:
                continue
            fixed = e[1] if e[0] == cur else e[0]
            for j, a in enumerate(added):
                if used_a >> j & 1 or fixed not in a:
                    continue
                nxt = a[1] if a[0] == fixed else a[0]
                found = walk(start, nxt, used_r | 1 << i, used_a | 1 << j, path + [(i, cur, fixed)])
                if found:
                    return found
        return None

    for start in sorted(set(first)):
        found = walk(start, start, 0, 0, [])
        if found:
            return found
    return None


def find_k_swap(g: Graph, h: Graph, k: int) -> KSwapMove | None:
    """A k-swap with any cyclic order that turns ``g`` into ``h``, or None.

    The move removes k instances R and adds k edges A; edges in both R and A
    are ones the swap puts back unchanged. Such a move exists iff R and A can
    be arranged as a closed alternating trail, which is searched directly.
    """
    if k < 2:
        raise BadArity(f"k must be at least 2, got {k}")
    if g.n != h.n or g == h:
        return None
    mg, mh = Counter(g.edges), Counter(h.edges)
    lost = list((mg - mh).elements())
    gained = list((mh - mg).elements())
    extra = k - len(lost)
    if extra < 0 or len(gained) != len(lost):
        return None
    common = list((mg & mh).elements())
    for kept in _submultisets(common, extra):
        removed = sorted(lost + kept)
        cycle = _alternating_cycle(removed, sorted(gained + kept))
        if cycle is None:
            continue
        wanted = [removed[i] for i, _, _ in cycle]
        indices = _locate(g, wanted)
        orientations = tuple(0 if e[0] == mobile else 1 for e, (_, mobile, _) in zip(wanted, cycle))
        return KSwapMove(tuple(indices), orientations, Direction.FORWARD)
    return None
