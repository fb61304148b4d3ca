"""Acceptance suite: one test per contract criterion.

Each test carries ``@pytest.mark.criterion(n, title)``; the terminal summary
prints a PASS/FAIL line per criterion (see conftest.py).
"""
import itertools
import math
import random
import time

import numpy as np
import pytest

from edgeswap.canonical import isomorphism_classes
from edgeswap.connectivity import (
    eliminate_last_loop,
    multiloop_criterion,
    reduce_loops_loopy_multigraph,
    saturate_loops_multiloop,
)
from edgeswap.enumeration import EnumFilter, census, count_graphs, triangle_histogram
from edgeswap.gog import GogSpec, build_gog, components_intersect_classes
from edgeswap.graph import (
    LOOPY_GRAPH,
    LOOPY_MULTIGRAPH,
    MULTIGRAPH,
    MULTILOOP_GRAPH,
    PSEUDOGRAPH,
    SIMPLE,
    degree_sequence,
    is_valid_in_space,
)
from edgeswap.mcmc import ChainConfig, sample, uniformity_report

from oracles import brute_double_swaps, components, exact_kernel, random_graph, replay

DEG8 = (3, 3, 3, 3, 2, 2, 2, 2)
DEG9 = (4, 4, 2, 2, 2, 2, 2, 1, 1)
TRI9 = (2, 2, 1, 1, 1, 1, 1, 0, 0)
DEG13 = (5, 5, 4, 4, 2, 2, 2, 2, 2, 2, 2, 1, 1)
TRI13 = (4, 4, 3, 3, 1, 1, 1, 1, 1, 1, 1, 0, 0)


def _budget(start: float, seconds: float) -> None:
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds}s"


@pytest.fixture(scope="module")
def four_triangle():
    return census(SIMPLE, DEG8, EnumFilter(triangle_count=4))


@pytest.mark.criterion(1, "triangle histogram, degrees 3^4 2^4")
def test_eight_vertex_histogram():
    start = time.perf_counter()
    assert triangle_histogram(DEG8) == {0: 2052, 1: 2664, 2: 1152, 3: 168, 4: 21}
    _budget(start, 60)


@pytest.mark.criterion(2, "four-triangle graphs split into classes 18/3")
def test_four_triangle_classes(four_triangle):
    assert len(four_triangle) == 21
    assert sorted(isomorphism_classes(four_triangle).sizes) == [3, 18]


@pytest.mark.criterion(3, "degrees 4^2 2^5 1^2: 5075 graphs, 50 filtered, classes 20/30")
def test_nine_vertex_census():
    start = time.perf_counter()
    assert count_graphs(SIMPLE, DEG9) == 5075
    filtered = census(SIMPLE, DEG9, EnumFilter(triangle_seq=TRI9))
    assert len(filtered) == 50
    assert sorted(isomorphism_classes(filtered).sizes) == [20, 30]
    _budget(start, 60)


@pytest.mark.criterion(4, "four-triangle classes stay apart under k-swaps, k=2..7")
@pytest.mark.parametrize("all_orders", [False, True], ids=["index-order", "any-order"])
def test_four_triangle_classes_stay_apart(four_triangle, all_orders):
    start = time.perf_counter()
    classes = isomorphism_classes(four_triangle)
    keep = EnumFilter(triangle_count=4)
    for k in range(2, 8):
        report = build_gog(GogSpec(SIMPLE, DEG8, k, keep, census=four_triangle, all_orders=all_orders))
        matrix = components_intersect_classes(report, classes)
        assert not any(all(row) for row in matrix), f"classes joined at k={k}"
    _budget(start, 600)


def _multiloop_sweep():
    """Sorted degree sequences, n <= 6, degrees 1..5, even sum."""
    for n in range(1, 7):
        for d in itertools.combinations_with_replacement(range(5, 0, -1), n):
            if sum(d) % 2 == 0:
                yield d


@pytest.mark.criterion(5, "multiloop connectivity criterion matches BFS")
def test_multiloop_criterion_sweep():
    start = time.perf_counter()
    checked = 0
    mismatches = []
    for d in _multiloop_sweep():
        graphs = census(MULTILOOP_GRAPH, d)
        if len(graphs) < 2:
            continue
        checked += 1
        # gog edges from the brute-force swap oracle, BFS by union-find
        comps = components(graphs, lambda g: brute_double_swaps(g, MULTILOOP_GRAPH))
        if (len(comps) == 1) != all(multiloop_criterion(d)):
            mismatches.append(d)
    assert checked == 224
    assert mismatches == []
    _budget(start, 900)


def _random_degseq(rng):
    # n first, then an even total, then a uniform composition into n positive parts
    n = rng.randint(1, 6)
    total = rng.choice([s for s in range(2, 15, 2) if s >= n])
    cuts = sorted(rng.sample(range(1, total), n - 1))
    return tuple(b - a for a, b in zip([0] + cuts, cuts + [total]))


@pytest.mark.criterion(6, "loopy-multigraph gog is connected on random sequences")
def test_loopy_multigraph_connected():
    start = time.perf_counter()
    rng = random.Random(20240601)
    failures = []
    done = 0
    while done < 200:
        d = _random_degseq(rng)
        report = build_gog(GogSpec(LOOPY_MULTIGRAPH, d))
        if report.vertex_count == 0:
            continue
        done += 1
        if not report.connected:
            failures.append(d)
    assert failures == []
    _budget(start, 900)


UNIFORMITY_SPACES = [
    (LOOPY_MULTIGRAPH, (2, 2, 2)),
    (SIMPLE, (2, 2, 2, 2, 2, 2)),
    (MULTIGRAPH, (3, 3, 2, 2)),
    (PSEUDOGRAPH, (2, 2, 2, 2)),
    (MULTILOOP_GRAPH, (3, 1, 1, 1)),
    (SIMPLE, (3, 3, 2, 2, 2, 2)),
    (LOOPY_GRAPH, (3, 2, 2, 1)),
]


def _thin_from_gap(graphs, space) -> int:
    # lag autocorrelation of any observable decays like |lambda_2|^lag;
    # thin so that it is below 1%
    kernel = np.array(exact_kernel(graphs, space), dtype=float)
    lam = sorted(abs(np.linalg.eigvalsh(kernel)))[-2]
    assert lam < 1, "space is not connected"
    return math.ceil(math.log(100) / (1 - lam))


@pytest.mark.criterion(7, "sampler passes chi-square uniformity on 7 spaces")
def test_sampler_uniformity():
    start = time.perf_counter()
    results = []
    for idx, (space, degrees) in enumerate(UNIFORMITY_SPACES):
        graphs = census(space, degrees)
        assert 2 <= len(graphs) <= 500
        cfg = ChainConfig(space, thin=_thin_from_gap(graphs, space), sample_count=10**5, seed=1000 + idx)
        report = uniformity_report(sample(graphs[0], cfg), graphs)
        results.append((space.name, degrees, report.p_value))
    print()
    for name, degrees, p in results:
        print(f"  {name} {degrees}: p={p:.4f}")
    assert all(p >= 0.001 for _, _, p in results), results
    _budget(start, 600)


def _check_trace(g, moves, final, space):
    prev = g
    for step in replay(g, moves):
        assert is_valid_in_space(step, space)
        assert degree_sequence(step) == degree_sequence(g)
        prev = step
    assert prev == final


def _random_inputs(rng, space, count, accept, **kw):
    out = []
    while len(out) < count:
        g = random_graph(rng, space, rng.randint(2, kw.get("max_n", 8)), rng.randint(1, kw.get("max_m", 12)),
                         loop_bias=kw.get("loop_bias", 0.3))
        if g is not None and accept(g):
            out.append(g)
    return out


@pytest.mark.criterion(8, "constructive procedures keep validity and meet postconditions")
def test_constructive_procedures():
    rng = random.Random(8)

    for g in _random_inputs(rng, LOOPY_MULTIGRAPH, 500, lambda g: True, loop_bias=0.5):
        h, moves = reduce_loops_loopy_multigraph(g)
        _check_trace(g, moves, h, LOOPY_MULTIGRAPH)
        assert h.loop_count == g.loop_count % 2

    def one_loop_and_disjoint_edge(g):
        loops = [u for u, v in g.edges if u == v]
        return len(loops) == 1 and any(loops[0] not in e for e in g.edges)

    for g in _random_inputs(rng, LOOPY_MULTIGRAPH, 500, one_loop_and_disjoint_edge, loop_bias=0.15):
        h, move = eliminate_last_loop(g)
        _check_trace(g, [move], h, LOOPY_MULTIGRAPH)
        assert h.loop_count == 0

    def criterion_holds(g):
        return all(multiloop_criterion(degree_sequence(g)))

    for g in _random_inputs(rng, MULTILOOP_GRAPH, 500, criterion_holds):
        h, moves = saturate_loops_multiloop(g)
        _check_trace(g, moves, h, MULTILOOP_GRAPH)
        assert h.loops() == [k // 2 for k in degree_sequence(g)]


@pytest.mark.criterion(9, "13-vertex triangle-sequence census, classes 35/420/840/420")
def test_thirteen_vertex_stretch():
    graphs = census(SIMPLE, DEG13, EnumFilter(triangle_seq=TRI13))
    assert len(graphs) == 1715
    assert sorted(isomorphism_classes(graphs).sizes) == [35, 420, 420, 840]
