"""List edge-colouring of generalised Petersen graphs.

A complete backtracking solver (most-constrained edge first, forward
checking) plus a seeded harness that throws random size-3 lists at
GP(3k, k) and counts how many instances the solver colours.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping

from .errors import InstanceTooLarge, Unsolvable
from .gp_core import Edge, GPGraph, build_gp

DEFAULT_MAX_EDGES = 60
PALETTE_CAP = 9


@dataclass(frozen=True)
class ListAssignment:
    lists: Mapping[Edge, frozenset[int]]

    def __post_init__(self):
        for e, lst in self.lists.items():
            if not lst:
                raise ValueError(f"edge {e} has an empty list")

    @property
    def uniform_size(self) -> int | None:
        sizes = {len(x) for x in self.lists.values()}
        return sizes.pop() if len(sizes) == 1 else None

    @classmethod
    def uniform(cls, g: GPGraph, colours) -> ListAssignment:
        lst = frozenset(colours)
        return cls({e: lst for e in g.edges})


def solve_list_colouring(g: GPGraph, lists: ListAssignment,
                         max_edges: int = DEFAULT_MAX_EDGES) -> dict[Edge, int]:
    """Colour every edge from its list so that adjacent edges differ.

    Raises:
        Unsolvable: the search tree was exhausted.
        InstanceTooLarge: more than ``max_edges`` edges.
    """
    m = len(g.edges)
    if m > max_edges:
        raise InstanceTooLarge("edge count", m, max_edges)
    missing = [e for e in g.edges if e not in lists.lists]
    if missing:
        raise ValueError(f"no list for edges {missing}")

    nbrs = g.edge_neighbours
    dom = [set(lists.lists[e]) for e in g.edges]
    colour: list[int | None] = [None] * m
    nodes = 0

    def pick() -> int:
        best, best_size = -1, None
        for e in range(m):
            if colour[e] is None and (best_size is None or len(dom[e]) < best_size):
                best, best_size = e, len(dom[e])
        return best

    def rec(assigned: int) -> bool:
        nonlocal nodes
        nodes += 1
        if assigned == m:
            return True
        e = pick()
        for c in sorted(dom[e]):
            colour[e] = c
            pruned = []
            ok = True
            for f in nbrs[e]:
                if colour[f] is None and c in dom[f]:
                    dom[f].discard(c)
                    pruned.append(f)
                    if not dom[f]:
                        ok = False
                        break
            if ok and rec(assigned + 1):
                return True
            for f in pruned:
                dom[f].add(c)
            colour[e] = None
        return False

    if not rec(0):
        raise Unsolvable(nodes)
    return {e: c for e, c in zip(g.edges, colour)}  # type: ignore[misc]


def is_list_colouring(g: GPGraph, lists: ListAssignment, colouring: Mapping[Edge, int]) -> bool:
    """Independent checker: every edge coloured from its list, no clash at any vertex."""
    if set(colouring) != set(g.edges):
        return False
    if any(colouring[e] not in lists.lists[e] for e in g.edges):
        return False
    for inc in g.incidence:
        cols = [colouring[e] for e in inc]
        if len(set(cols)) != len(cols):
            return False
    return True


def random_lists(g: GPGraph, palette_size: int, list_size: int, seed: int) -> ListAssignment:
    """Uniform random ``list_size``-subsets of {1..palette_size}, one per edge.

    Uses Python's Mersenne Twister (``random.Random``) seeded with ``seed``;
    edges are visited in ``g.edges`` order.
    """
    if not 1 <= list_size <= palette_size:
        raise ValueError("need 1 <= list_size <= palette_size")
    rng = random.Random(seed)
    palette = range(1, palette_size + 1)
    return ListAssignment({e: frozenset(rng.sample(palette, list_size)) for e in g.edges})


def default_palette(k: int) -> int:
    return min(3 * k, PALETTE_CAP)


@dataclass
class ChoosabilityReport:
    k: int
    trials: int
    palette_size: int
    seed: int
    successes: int = 0
    failures: list[tuple[int, int]] = field(default_factory=list)
    elapsed_ms: int = 0
    max_trial_ms: float = 0.0

    def trial_seed(self, trial: int) -> int:
        return self.seed + trial

    def to_json(self, timing: bool = True) -> dict:
        doc = {
            "k": self.k,
            "trials": self.trials,
            "successes": self.successes,
            "failures": [{"trial": t, "seed": str(s)} for t, s in self.failures],
        }
        if timing:
            doc["elapsed_ms"] = self.elapsed_ms
        return doc


def _run_trial(k: int, palette_size: int, seed: int) -> tuple[bool, float]:
    g = build_gp(3 * k, k)
    lists = random_lists(g, palette_size, 3, seed)
    t0 = time.perf_counter()
    try:
        col = solve_list_colouring(g, lists)
    except Unsolvable:
        ok = False
    else:
        ok = is_list_colouring(g, lists, col)
    return ok, (time.perf_counter() - t0) * 1000


def verify_choosability_sample(k: int, trials: int, palette_size: int | None = None,
                               seed: int = 0, parallel: int = 1) -> ChoosabilityReport:
    """Solve ``trials`` random size-3 list instances on GP(3k, k).

    Trial ``i`` uses seed ``seed + i``, so the outcome does not depend on
    scheduling when ``parallel > 1``.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    g = build_gp(3 * k, k)
    if len(g.edges) > DEFAULT_MAX_EDGES:
        raise InstanceTooLarge("edge count", len(g.edges), DEFAULT_MAX_EDGES)
    palette = default_palette(k) if palette_size is None else palette_size
    report = ChoosabilityReport(k, trials, palette, seed)
    seeds = [seed + i for i in range(trials)]

    t0 = time.perf_counter()
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_run_trial, [k] * trials, [palette] * trials, seeds,
                                    chunksize=max(1, trials // (4 * parallel))))
    else:
        results = [_run_trial(k, palette, s) for s in seeds]
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)

    for i, (ok, ms) in enumerate(results):
        report.max_trial_ms = max(report.max_trial_ms, ms)
        if ok:
            report.successes += 1
        else:
            report.failures.append((i, seeds[i]))
    return report
