"""Colour-triple graphs and exact walk counting.

T is a triangle on x0, x1, x2 and H a 6-cycle on y0, y1, y2, z0, z1, z2,
both listed in clockwise order, so a clockwise step goes from position p
to p + 1 (mod cycle length).  The signed versions T± and H± carry both
directions of every edge: in T± clockwise arcs are positive, in H±
clockwise arcs are negative.

Concrete colour triples sit on these cycles as follows (reading the
triple (c1, c2, c3) as the colours of three outer edges spaced k apart):

    T:  x0 = 123, x1 = 312, x2 = 231
    H:  y0 = 112, y1 = 233, y2 = 121, z0 = 332, z1 = 211, z2 = 323

and every other non-monochromatic triple sits on the image of one of
these under a permutation of the colours.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Iterator, Sequence

from .errors import NonIntegerResult, VertexNotInGraph

ColourTriple = tuple[int, int, int]
Walk = tuple[int, ...]


# -- sign semiring -----------------------------------------------------------


@dataclass(frozen=True, order=True)
class SignedCount:
    """A count split into positive and negative mass.

    Multiplication tracks signs: (p1, n1) * (p2, n2) = (p1 p2 + n1 n2, p1 n2 + n1 p2).
    """

    pos: int = 0
    neg: int = 0

    def total(self) -> int:
        return self.pos + self.neg

    def difference(self) -> int:
        return self.pos - self.neg

    def swapped(self) -> SignedCount:
        return SignedCount(self.neg, self.pos)

    def __add__(self, other: SignedCount) -> SignedCount:
        return SignedCount(self.pos + other.pos, self.neg + other.neg)

    def __mul__(self, other: SignedCount) -> SignedCount:
        return SignedCount(
            self.pos * other.pos + self.neg * other.neg,
            self.pos * other.neg + self.neg * other.pos,
        )

    def scale(self, m: int) -> SignedCount:
        return SignedCount(m * self.pos, m * self.neg)

    @classmethod
    def of_sign(cls, sign: int) -> SignedCount:
        return cls(1, 0) if sign > 0 else cls(0, 1)


ZERO = SignedCount(0, 0)
ONE = SignedCount(1, 0)


# -- triple graphs -----------------------------------------------------------


class Kind(Enum):
    T = "T"
    H = "H"
    T_SIGNED = "T±"
    H_SIGNED = "H±"

    @property
    def signed(self) -> bool:
        return self in (Kind.T_SIGNED, Kind.H_SIGNED)

    @property
    def cycle_length(self) -> int:
        return 3 if self in (Kind.T, Kind.T_SIGNED) else 6


@dataclass(frozen=True)
class TripleGraph:
    """Arcs are (src, dst, sign) over vertex positions; unsigned kinds use sign +1."""

    kind: Kind
    vertices: tuple[str, ...]
    arcs: tuple[tuple[int, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def index(self, vertex: str | int) -> int:
        if isinstance(vertex, int) and not isinstance(vertex, bool):
            if 0 <= vertex < self.size:
                return vertex
        elif vertex in self.vertices:
            return self.vertices.index(vertex)
        raise VertexNotInGraph(f"{vertex!r} is not a vertex of {self.kind.value}")

    def step_direction(self, a: int, b: int) -> int:
        """+1 for a clockwise step a -> b, -1 for counter-clockwise."""
        d = (b - a) % self.size
        if d == 1:
            return 1
        if d == self.size - 1:
            return -1
        raise ValueError(f"{self.vertices[a]} and {self.vertices[b]} are not adjacent")

    def arc_sign(self, a: int, b: int) -> int:
        for s, d, sign in self.arcs:
            if s == a and d == b:
                return sign
        raise ValueError(f"no arc {self.vertices[a]} -> {self.vertices[b]}")

    def successors(self, a: int) -> list[tuple[int, int]]:
        return sorted((d, sign) for s, d, sign in self.arcs if s == a)


def _cycle_graph(kind: Kind, names: Sequence[str]) -> TripleGraph:
    m = len(names)
    if kind is Kind.T_SIGNED:
        cw, ccw = 1, -1
    elif kind is Kind.H_SIGNED:
        cw, ccw = -1, 1
    else:
        cw = ccw = 1
    arcs = []
    for p in range(m):
        arcs.append((p, (p + 1) % m, cw))
        arcs.append(((p + 1) % m, p, ccw))
    return TripleGraph(kind, tuple(names), tuple(sorted(arcs)))


T_NAMES = ("x0", "x1", "x2")
H_NAMES = ("y0", "y1", "y2", "z0", "z1", "z2")

T = _cycle_graph(Kind.T, T_NAMES)
H = _cycle_graph(Kind.H, H_NAMES)
T_PM = _cycle_graph(Kind.T_SIGNED, T_NAMES)
H_PM = _cycle_graph(Kind.H_SIGNED, H_NAMES)

GRAPHS = {Kind.T: T, Kind.H: H, Kind.T_SIGNED: T_PM, Kind.H_SIGNED: H_PM}

# colour triples at each position, clockwise
T_COLOURS: tuple[ColourTriple, ...] = ((1, 2, 3), (3, 1, 2), (2, 3, 1))
H_COLOURS: tuple[ColourTriple, ...] = (
    (1, 1, 2), (2, 3, 3), (1, 2, 1), (3, 3, 2), (2, 1, 1), (3, 2, 3),
)


def triple_graph(kind: Kind | str) -> TripleGraph:
    return GRAPHS[Kind(kind)]


# -- concrete triples --------------------------------------------------------


def is_t_patterned(t: ColourTriple) -> bool:
    return len(set(t)) == 3


def is_h_patterned(t: ColourTriple) -> bool:
    return len(set(t)) == 2


def _relabel(t: ColourTriple, sigma: dict[int, int]) -> ColourTriple:
    return (sigma[t[0]], sigma[t[1]], sigma[t[2]])


def clockwise_cycle(t: ColourTriple) -> tuple[Kind, tuple[ColourTriple, ...]] | None:
    """The triple graph (unsigned kind) containing ``t`` and its clockwise cycle,
    rotated so that ``t`` comes first.  None for monochromatic triples."""
    if is_t_patterned(t):
        base = T_COLOURS
        sigma = {1: t[0], 2: t[1], 3: t[2]}
        kind = Kind.T
    elif is_h_patterned(t):
        single = next(c for c in t if t.count(c) == 1)
        repeated = next(c for c in t if t.count(c) == 2)
        sigma = {1: repeated, 2: single, 3: 6 - single - repeated}
        base = H_COLOURS
        kind = Kind.H
    else:
        return None
    cyc = [_relabel(x, sigma) for x in base]
    p = cyc.index(t)
    return kind, tuple(cyc[p:] + cyc[:p])


def triple_step(p: ColourTriple, q: ColourTriple) -> tuple[Kind, int] | None:
    """Whether q follows p in some triple graph, and in which direction.

    Returns (kind, +1) for a clockwise step, (kind, -1) for counter-clockwise,
    or None if (p, q) is not an arc of T or H under any colour relabelling.
    """
    placed = clockwise_cycle(p)
    if placed is None:
        return None
    kind, cyc = placed
    if q == cyc[1]:
        return kind, 1
    if q == cyc[-1]:
        return kind, -1
    return None


def triple_arc_sign(p: ColourTriple, q: ColourTriple) -> int:
    """Sign of the arc p -> q in T± or H±."""
    step = triple_step(p, q)
    if step is None:
        raise ValueError(f"{p} -> {q} is not an arc of T± or H±")
    kind, direction = step
    return direction if kind is Kind.T else -direction


def all_triples() -> Iterator[ColourTriple]:
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            for c in (1, 2, 3):
                yield (a, b, c)


# -- walks -------------------------------------------------------------------


def transfer_matrix(g: TripleGraph) -> list[list[SignedCount]]:
    m = [[ZERO] * g.size for _ in range(g.size)]
    for s, d, sign in g.arcs:
        m[s][d] = m[s][d] + SignedCount.of_sign(sign)
    return m


def _matmul(a: list[list[SignedCount]], b: list[list[SignedCount]]) -> list[list[SignedCount]]:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for t in range(n):
                if a[i][t] != ZERO and b[t][j] != ZERO:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def transfer_power(g: TripleGraph, length: int) -> list[list[SignedCount]]:
    """length-fold product of the transfer matrix, by repeated squaring."""
    if length < 0:
        raise ValueError("walk length must be nonnegative")
    result = [[ONE if i == j else ZERO for j in range(g.size)] for i in range(g.size)]
    base = transfer_matrix(g)
    e = length
    while e:
        if e & 1:
            result = _matmul(result, base)
        e >>= 1
        if e:
            base = _matmul(base, base)
    return result


def count_walks(g: TripleGraph, length: int, src: str | int, dst: str | int) -> SignedCount:
    """Walks of the given length from src to dst, split by the product of arc signs."""
    a, b = g.index(src), g.index(dst)
    return transfer_power(g, length)[a][b]


def enumerate_walks(g: TripleGraph, length: int, src: str | int,
                    dst: str | int | None = None) -> Iterator[Walk]:
    """Depth-first enumeration of walks as vertex-index tuples, in lexicographic order."""
    a = g.index(src)
    b = None if dst is None else g.index(dst)
    succ = [[d for d, _ in g.successors(v)] for v in range(g.size)]
    path = [a]

    def rec(remaining: int) -> Iterator[Walk]:
        if remaining == 0:
            if b is None or path[-1] == b:
                yield tuple(path)
            return
        for nxt in succ[path[-1]]:
            path.append(nxt)
            yield from rec(remaining - 1)
            path.pop()

    yield from rec(length)


def walk_sign(g: TripleGraph, walk: Sequence[int]) -> int:
    s = 1
    for a, b in zip(walk, walk[1:]):
        s *= g.arc_sign(a, b)
    return s


def lift_walk(walk: Sequence[int]) -> Walk:
    """Lift a walk in T starting at x0 to the walk in H starting at y0 that
    takes a step in the same rotational direction at every position."""
    if not walk or walk[0] != 0:
        raise ValueError("walk must start at x0")
    pos = 0
    out = [0]
    for a, b in zip(walk, walk[1:]):
        pos = (pos + T.step_direction(a, b)) % 6
        out.append(pos)
    return tuple(out)


# -- closed forms ------------------------------------------------------------


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerResult(f"{num} is not divisible by {den}")
    return q


def jacobsthal(k: int) -> int:
    """J(k) via J(k) = J(k-1) + 2 J(k-2), J(0) = 0, J(1) = 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, b + 2 * a
    return a


def jacobsthal_closed_form(k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _exact_div(2 ** k + (-1) ** (k + 1), 3)


def closed_form_t(k: int, ell: int) -> int:
    """Walks of length k in the triangle between vertices at distance ell."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if ell == 0:
        return _exact_div(2 ** k + 2 * (-1) ** k, 3)
    if ell == 1:
        return jacobsthal_closed_form(k)
    raise ValueError("ell must be 0 or 1")


def closed_form_signed_t(k: int) -> SignedCount:
    """(positive, negative) walks of length k in T± from x to the vertex
    two clockwise steps away."""
    if k < 1:
        raise ValueError("k must be at least 1")
    sgn = (-1) ** k
    p = (-3) ** ((k + 1) // 2)
    pos = _exact_div(2 ** k - sgn * (1 + p), 6)
    neg = _exact_div(2 ** k - sgn * (1 - p), 6)
    return SignedCount(pos, neg)


def all_relabellings() -> list[dict[int, int]]:
    return [dict(zip((1, 2, 3), p)) for p in permutations((1, 2, 3))]
