import time
from itertools import product

import pytest

# -- independent oracles ------------------------------------------------------
# These never call the package's walk or search code.

# Arc signs read off the signed triple graphs: (clockwise sign, counter-clockwise sign).
ARC_SIGNS = {"T": (1, 1), "H": (1, 1), "T±": (1, -1), "H±": (-1, 1)}
CYCLE = {"T": 3, "H": 6, "T±": 3, "H±": 6}


def oracle_walk_count(kind, length, src, dst):
    """(pos, neg) walks on the cycle by enumerating all 2**length step sequences."""
    m = CYCLE[kind]
    cw, ccw = ARC_SIGNS[kind]
    pos = neg = 0
    for steps in product((1, -1), repeat=length):
        if (src + sum(steps)) % m != dst:
            continue
        s = 1
        for d in steps:
            s *= cw if d == 1 else ccw
        if s > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg


def oracle_walks(kind, length, src, dst):
    m = CYCLE[kind]
    out = set()
    for steps in product((1, -1), repeat=length):
        w = [src]
        for d in steps:
            w.append((w[-1] + d) % m)
        if w[-1] == dst:
            out.add(tuple(w))
    return out


def perfect_matchings(vertices, edges):
    """All perfect matchings by always matching the smallest uncovered vertex."""
    adj = {v: [] for v in vertices}
    for e in edges:
        adj[e[0]].append(e)
        adj[e[1]].append(e)
    result = []

    def rec(uncovered, chosen):
        if not uncovered:
            result.append(frozenset(chosen))
            return
        v = min(uncovered)
        for e in adj[v]:
            w = e[0] if e[1] == v else e[1]
            if w in uncovered:
                rec(uncovered - {v, w}, chosen + [e])

    rec(frozenset(vertices), [])
    return result


def oracle_one_factorisations(n, k):
    """1-factorisations of GP(n,k) as sets of three disjoint perfect matchings."""
    vertices = list(range(2 * n))
    edges = [tuple(sorted((i, (i + 1) % n))) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [tuple(sorted((n + i, n + (i + k) % n))) for i in range(n)]
    pms = perfect_matchings(vertices, edges)
    all_edges = frozenset(edges)
    found = set()
    for i, a in enumerate(pms):
        for b in pms[i + 1:]:
            if a & b:
                continue
            c = all_edges - a - b
            if c in pms:
                found.add(frozenset((a, b, c)))
    return found


@pytest.fixture
def walk_oracle():
    return oracle_walk_count


# -- acceptance reporting -------------------------------------------------------

_acceptance: list[tuple[str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    t0 = time.perf_counter()
    outcome = yield
    if item.module.__name__.endswith("test_acceptance"):
        title = (item.function.__doc__ or item.name).strip().splitlines()[0]
        status = "FAIL" if outcome.excinfo else "PASS"
        _acceptance.append((status, title, time.perf_counter() - t0))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for status, title, secs in _acceptance:
        terminalreporter.write_line(f"{status}  {title}  ({secs:.2f} s)")
