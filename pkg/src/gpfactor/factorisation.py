"""1-factorisations of GP(3k, k).

A proper 3-edge-colouring of GP(3k, k) is fixed by its colours on the outer
cycle: each spoke takes the colour missing at its outer vertex and each
inner triangle edge the colour missing from its two spokes.  Reading the
outer colours as triples phi_i = (u_i u_{i+1}, u_{k+i} u_{k+i+1},
u_{2k+i} u_{2k+i+1}) turns colourings into walks of length k in the
triple graphs T and H, which is how they are counted and enumerated here.
An independent backtracking search over all edges checks the whole chain.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Literal, Mapping, Sequence

from .errors import IncompleteColouring, InstanceTooLarge, NotExtendable
from .gp_core import Edge, GPGraph, build_gp
from .triple_dynamics import (
    H, H_COLOURS, H_PM, T, T_COLOURS, T_PM,
    ColourTriple, SignedCount, enumerate_walks, jacobsthal, triple_arc_sign,
    triple_step, count_walks,
)

Scope = Literal["outer", "total"]
POSITIVE_ROTATIONS = frozenset({(1, 2, 3), (2, 3, 1), (3, 1, 2)})
DEFAULT_MAX_VERTICES = 40


@dataclass(frozen=True)
class EdgeColouring:
    """Colours aligned with ``graph.edges``; None marks an uncoloured edge."""

    graph: GPGraph = field(compare=False, repr=False)
    colours: tuple[int | None, ...]
    scope: Scope = "total"

    @classmethod
    def from_outer(cls, g: GPGraph, outer: Sequence[int | None]) -> EdgeColouring:
        """Outer-only colouring with ``outer[i]`` on edge u_i u_{i+1}."""
        if len(outer) != g.n:
            raise ValueError(f"expected {g.n} outer colours, got {len(outer)}")
        return cls(g, tuple(outer) + (None,) * (2 * g.n), "outer")

    @classmethod
    def from_mapping(cls, g: GPGraph, mapping: Mapping[Edge, int], scope: Scope = "total") -> EdgeColouring:
        cols: list[int | None] = [None] * len(g.edges)
        for e, c in mapping.items():
            cols[g.edge_index[(min(e), max(e))]] = c
        return cls(g, tuple(cols), scope)

    def colour(self, edge: Edge) -> int | None:
        return self.colours[self.graph.edge_index[edge]]

    def as_dict(self) -> dict[Edge, int]:
        return {e: c for e, c in zip(self.graph.edges, self.colours) if c is not None}

    def outer_colours(self) -> tuple[int | None, ...]:
        return self.colours[:self.graph.n]

    def is_proper(self) -> bool:
        g = self.graph
        limit = g.n if self.scope == "outer" else len(g.edges)
        for pos in range(limit):
            c = self.colours[pos]
            if c is None or c not in (1, 2, 3):
                return False
            for f in g.edge_neighbours[pos]:
                if f < limit and self.colours[f] == c:
                    return False
        return True

    def relabelled(self, sigma: Mapping[int, int]) -> EdgeColouring:
        return EdgeColouring(self.graph, tuple(None if c is None else sigma[c] for c in self.colours), self.scope)

    def rotated(self, shift: int) -> EdgeColouring:
        """Image under u_i -> u_{i+shift}, v_i -> v_{i+shift}."""
        n = self.graph.n
        cols: list[int | None] = [None] * (3 * n)
        for block in range(3):
            for i in range(n):
                cols[block * n + (i + shift) % n] = self.colours[block * n + i]
        return EdgeColouring(self.graph, tuple(cols), self.scope)


@dataclass(frozen=True)
class OneFactorisation:
    """Three perfect matchings, each a sorted edge tuple, the three sorted."""

    factors: tuple[tuple[Edge, ...], ...]

    @classmethod
    def from_colouring(cls, gamma: EdgeColouring) -> OneFactorisation:
        classes: dict[int, list[Edge]] = {1: [], 2: [], 3: []}
        for e, c in zip(gamma.graph.edges, gamma.colours):
            if c is None:
                raise IncompleteColouring(f"edge {e} is uncoloured")
            classes[c].append(e)
        return cls(tuple(sorted(tuple(sorted(m)) for m in classes.values())))

    def is_valid(self, g: GPGraph) -> bool:
        seen: list[Edge] = [e for m in self.factors for e in m]
        if len(self.factors) != 3 or sorted(seen) != sorted(g.edges):
            return False
        for m in self.factors:
            covered = [x for e in m for x in e]
            if sorted(covered) != list(g.vertices):
                return False
        return True

    def to_json(self, g: GPGraph) -> dict:
        return {
            "k": g.k,
            "factors": [[[g.label(a), g.label(b)] for a, b in m] for m in self.factors],
        }


# -- triples -------------------------------------------------------------------


def triples_of(phi: EdgeColouring) -> list[ColourTriple]:
    """phi_1 .. phi_{k+1} read off the outer cycle."""
    g = phi.graph
    g.require_3k()
    outer = phi.outer_colours()
    if any(c is None for c in outer):
        missing = [i for i, c in enumerate(outer) if c is None]
        raise IncompleteColouring(f"outer edges {missing} are uncoloured")
    return _triples(g.k, outer)  # type: ignore[arg-type]


def _triples(k: int, outer: Sequence[int]) -> list[ColourTriple]:
    n = 3 * k
    return [
        (outer[i % n], outer[(k + i) % n], outer[(2 * k + i) % n])
        for i in range(1, k + 2)
    ]


def _outer_from_triples(k: int, triples: Sequence[ColourTriple]) -> list[int]:
    n = 3 * k
    outer = [0] * n
    for i in range(1, k + 1):
        for j in range(3):
            outer[(i + j * k) % n] = triples[i - 1][j]
    return outer


_cached_step = lru_cache(maxsize=None)(triple_step)


def _extend(k: int, outer: Sequence[int]) -> tuple[int, ...]:
    """Full colour vector forced by a complete outer colouring, or NotExtendable."""
    n = 3 * k
    trip = _triples(k, outer)
    for i in range(1, k + 1):
        p = trip[i - 1]
        if p[0] == p[1] == p[2]:
            raise NotExtendable(i, "monochromatic")
        if _cached_step(p, trip[i]) is None:
            raise NotExtendable(i, "not an arc of T or H")

    # forced propagation; any conflict here also proves non-extendability
    spokes = [0] * n
    for j in range(n):
        a, b = outer[j - 1], outer[j]
        if a == b:
            raise NotExtendable((j - 2) % k + 1, f"outer edges clash at u{j}")
        spokes[j] = 6 - a - b
    inner = [0] * n
    for j in range(n):
        a, b = spokes[j], spokes[(j + k) % n]
        if a == b:
            raise NotExtendable((j - 2) % k + 1, f"spokes clash on triangle of v{j}")
        inner[j] = 6 - a - b
    return tuple(outer) + tuple(spokes) + tuple(inner)


def extend_outer(phi: EdgeColouring) -> EdgeColouring:
    """The unique proper colouring of the whole graph agreeing with ``phi``
    on the outer cycle.

    Raises:
        NotExtendable: no such colouring exists; ``index`` is the first
            triple phi_i that is monochromatic or not followed along an
            arc of T or H.
        IncompleteColouring: an outer edge has no colour.
    """
    g = phi.graph
    g.require_3k()
    outer = phi.outer_colours()
    if any(c is None for c in outer):
        raise IncompleteColouring("outer cycle is not fully coloured")
    gamma = EdgeColouring(g, _extend(g.k, outer), "total")  # type: ignore[arg-type]
    if not gamma.is_proper():
        raise AssertionError("forced propagation produced an improper colouring")
    return gamma


# -- brute force oracle --------------------------------------------------------


def _search_order(g: GPGraph) -> list[int]:
    # outer edges along the cycle, then spokes, then inner edges
    return list(range(len(g.edges)))


def _backtrack(g: GPGraph, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    m = len(g.edges)
    nbrs = g.edge_neighbours
    order = _search_order(g)
    colour = [0] * m
    dom = [7] * m

    def rec(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == m:
            yield tuple(colour)
            return
        e = order[depth]
        choices = (prefix[depth],) if depth < len(prefix) else (1, 2, 3)
        for c in choices:
            bit = 1 << (c - 1)
            if not dom[e] & bit:
                continue
            colour[e] = c
            trail = []
            ok = True
            for f in nbrs[e]:
                if not colour[f] and dom[f] & bit:
                    dom[f] &= ~bit
                    trail.append(f)
                    if not dom[f]:
                        ok = False
                        break
            if ok:
                yield from rec(depth + 1)
            for f in trail:
                dom[f] |= bit
            colour[e] = 0

    yield from rec(0)


def _search_part(n: int, k: int, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
    return list(_backtrack(build_gp(n, k), prefix))


def brute_force_colourings(g: GPGraph, max_vertices: int = DEFAULT_MAX_VERTICES,
                           parallel: int = 1) -> list[EdgeColouring]:
    """Every proper 3-edge-colouring of ``g`` by exhaustive backtracking.

    Knows nothing about triples or the outer-cycle reduction, which is the
    point: it is the reference the structural counts are checked against.
    With ``parallel > 1`` the search is split on the colours of the first
    two edges and the parts are concatenated in branch order, giving the
    same list as the sequential run.
    """
    if 2 * g.n > max_vertices:
        raise InstanceTooLarge("vertex count", 2 * g.n, max_vertices)
    if parallel > 1:
        prefixes = list(product((1, 2, 3), repeat=2))
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            parts = pool.map(_search_part, [g.n] * 9, [g.k] * 9, prefixes)
            rows = [row for part in parts for row in part]
    else:
        rows = list(_backtrack(g))
    return [EdgeColouring(g, row, "total") for row in rows]


def group_by_factorisation(colourings: Sequence[EdgeColouring]) -> dict[OneFactorisation, list[EdgeColouring]]:
    groups: dict[OneFactorisation, list[EdgeColouring]] = {}
    for gamma in colourings:
        groups.setdefault(OneFactorisation.from_colouring(gamma), []).append(gamma)
    return groups


# -- signs ---------------------------------------------------------------------


def vertex_sign(local: ColourTriple) -> int:
    """+1 if the colours around a vertex, in rotation order, are a cyclic shift of 123."""
    return 1 if tuple(local) in POSITIVE_ROTATIONS else -1


def sign_of(gamma: EdgeColouring) -> int:
    g = gamma.graph
    g.require_3k()
    assert g.rotation is not None
    idx = g.edge_index
    s = 1
    for vertex in g.vertices:
        e1, e2, e3 = g.rotation.at(vertex)
        s *= vertex_sign((gamma.colours[idx[e1]], gamma.colours[idx[e2]], gamma.colours[idx[e3]]))
    return s


def sign_product_along_triples(gamma: EdgeColouring) -> int:
    """Product of the T±/H± arc signs along gamma_1 .. gamma_{k+1}."""
    trip = triples_of(gamma)
    s = 1
    for p, q in zip(trip, trip[1:]):
        s *= triple_arc_sign(p, q)
    return s


# -- counting and enumeration -----------------------------------------------------


def count_1f(k: int) -> int:
    """Number of 1-factorisations of GP(3k, k): t_k(1) + 3 h_k(2)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    t = count_walks(T, k, "x0", "x2").total()
    h = count_walks(H, k, "y0", "y2").total()
    total = t + 3 * h
    expected = jacobsthal(k) * (1 if k % 2 else 4)
    if total != expected:
        raise AssertionError(f"walk count {total} disagrees with Jacobsthal value {expected}")
    return total


def signed_count_1f(k: int) -> SignedCount:
    """(positive, negative) 1-factorisations of GP(3k, k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    t = count_walks(T_PM, k, "x0", "x2")
    h = count_walks(H_PM, k, "y0", "y2")
    result = t + h.scale(3)
    if result.total() != count_1f(k):
        raise AssertionError("signed counts do not add up to the 1-factorisation count")
    return result


def alon_tarsi_sum(k: int) -> int:
    """Sum of sign(f) over all 1-factorisations f of GP(3k, k)."""
    return signed_count_1f(k).difference()


# Start classes in stream order: (graph, clockwise colour labels, start, end).
# phi_1 is normalised to 123, 112, 121 or 211 and phi_{k+1} is its left shift.
START_CLASSES = (
    (T, T_COLOURS, 0, 2),
    (H, H_COLOURS, 0, 2),
    (H, H_COLOURS, 2, 4),
    (H, H_COLOURS, 4, 0),
)


def normalised_colourings(k: int, start_class: int | None = None) -> Iterator[EdgeColouring]:
    """One colouring per 1-factorisation, from walks between the start classes.

    ``start_class`` restricts the stream to one of the four classes, which
    partitions the work.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    g = build_gp(3 * k, k)
    classes = START_CLASSES if start_class is None else (START_CLASSES[start_class],)
    for graph, labels, src, dst in classes:
        for walk in enumerate_walks(graph, k, src, dst):
            outer = _outer_from_triples(k, [labels[p] for p in walk])
            yield EdgeColouring(g, _extend(k, outer), "total")


def enumerate_1f(k: int, start_class: int | None = None) -> Iterator[OneFactorisation]:
    for gamma in normalised_colourings(k, start_class):
        yield OneFactorisation.from_colouring(gamma)
