"""Generalised Petersen graphs GP(n, k).

Vertices are integers: u_i = i and v_i = n + i for i in Z_n.  Edges are
canonical pairs (min, max) and are stored in a fixed order: the n outer
edges u_i u_{i+1}, then the n spokes u_i v_i, then the n inner edges
v_i v_{i+k}, each block ordered by i.  Position ``i``, ``n + i`` and
``2n + i`` of :attr:`GPGraph.edges` therefore hold outer(i), spoke(i) and
inner(i).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

from .errors import InvalidParameters, NotApplicable

Edge = tuple[int, int]
Role = Literal["outer", "spoke", "inner"]
ROLES: tuple[Role, ...] = ("outer", "spoke", "inner")


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class RotationSystem:
    """Ordered triple of incident edges at each vertex of GP(3k, k).

    At u_i the order is (u_{i-1}u_i, u_i u_{i+1}, u_i v_i); at v_i it is
    (v_{k+i}v_i, v_i v_{2k+i}, v_i u_i).  A vertex is positive under a
    colouring when the colours read in this order are a cyclic rotation
    of (1, 2, 3).
    """

    order: tuple[tuple[Edge, Edge, Edge], ...]

    def at(self, vertex: int) -> tuple[Edge, Edge, Edge]:
        return self.order[vertex]


@dataclass(frozen=True)
class GPGraph:
    n: int
    k: int
    edges: tuple[Edge, ...] = field(repr=False, compare=False)
    rotation: RotationSystem | None = field(default=None, repr=False, compare=False)

    # -- labelling -------------------------------------------------------

    def u(self, i: int) -> int:
        return i % self.n

    def v(self, i: int) -> int:
        return self.n + i % self.n

    def label(self, vertex: int) -> str:
        if not 0 <= vertex < 2 * self.n:
            raise ValueError(f"vertex {vertex} out of range")
        return f"u{vertex}" if vertex < self.n else f"v{vertex - self.n}"

    @property
    def vertices(self) -> range:
        return range(2 * self.n)

    @property
    def is_3k(self) -> bool:
        return self.n == 3 * self.k

    def require_3k(self) -> None:
        if not self.is_3k:
            raise NotApplicable(f"GP({self.n},{self.k}) is not of the form GP(3k,k)")

    # -- edges by role -----------------------------------------------------

    def outer(self, i: int) -> Edge:
        """Edge u_i u_{i+1}."""
        return self.edges[i % self.n]

    def spoke(self, i: int) -> Edge:
        return self.edges[self.n + i % self.n]

    def inner(self, i: int) -> Edge:
        """Edge v_i v_{i+k}."""
        return self.edges[2 * self.n + i % self.n]

    def role(self, edge: Edge) -> Role:
        return ROLES[self.edge_index[edge] // self.n]

    def edges_with_role(self, role: Role) -> tuple[Edge, ...]:
        r = ROLES.index(role)
        return self.edges[r * self.n:(r + 1) * self.n]

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: pos for pos, e in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> tuple[tuple[Edge, ...], ...]:
        inc: list[list[Edge]] = [[] for _ in self.vertices]
        for e in self.edges:
            inc[e[0]].append(e)
            inc[e[1]].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_neighbours(self) -> tuple[tuple[int, ...], ...]:
        """For each edge position, the positions of edges sharing an endpoint."""
        idx = self.edge_index
        out = []
        for a, b in self.edges:
            nb = {idx[f] for f in self.incidence[a] + self.incidence[b]}
            nb.discard(idx[(a, b)])
            out.append(tuple(sorted(nb)))
        return tuple(out)

    def degree(self, vertex: int) -> int:
        return len(self.incidence[vertex])


def build_gp(n: int, k: int) -> GPGraph:
    """Construct GP(n, k) for 1 <= k < n/2.

    The rotation system is attached only when n == 3k.
    """
    if isinstance(n, bool) or isinstance(k, bool) or not isinstance(n, int) or not isinstance(k, int):
        raise InvalidParameters("n and k must be integers")
    if n < 3 or k < 1 or 2 * k >= n:
        raise InvalidParameters(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")

    outer = [_edge(i, (i + 1) % n) for i in range(n)]
    spokes = [_edge(i, n + i) for i in range(n)]
    inner = [_edge(n + i, n + (i + k) % n) for i in range(n)]
    edges = tuple(outer + spokes + inner)

    rotation = None
    if n == 3 * k:
        order: list[tuple[Edge, Edge, Edge]] = []
        for i in range(n):
            order.append((outer[(i - 1) % n], outer[i], spokes[i]))
        for i in range(n):
            # v_{k+i} v_i is inner(i); v_i v_{2k+i} is inner(2k+i)
            order.append((inner[i], inner[(i + 2 * k) % n], spokes[i]))
        rotation = RotationSystem(tuple(order))
    return GPGraph(n, k, edges, rotation)


def export_graph(g: GPGraph, format: Literal["dot", "json"] = "json") -> bytes:
    """Serialise ``g`` as JSON or Graphviz DOT (UTF-8, newline-terminated)."""
    roles = [ROLES[pos // g.n] for pos in range(len(g.edges))]
    if format == "json":
        doc = {
            "n": g.n,
            "k": g.k,
            "vertices": [g.label(x) for x in g.vertices],
            "edges": [
                {"a": g.label(a), "b": g.label(b), "role": r}
                for (a, b), r in zip(g.edges, roles)
            ],
        }
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")
    if format == "dot":
        lines = [f'graph "GP({g.n},{g.k})" {{']
        lines += [f"  {g.label(x)};" for x in g.vertices]
        lines += [
            f"  {g.label(a)} -- {g.label(b)} [role={r}];"
            for (a, b), r in zip(g.edges, roles)
        ]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {format!r}")
