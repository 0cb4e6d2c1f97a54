"""Invariant suites behind ``gpfactor verify``.

Each check returns True/False; the runner reports one line per check.
Oracle checks run the exhaustive searches and are bounded in k.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Callable, Iterator

from .errors import NotExtendable
from .factorisation import (
    EdgeColouring, brute_force_colourings, count_1f, extend_outer,
    group_by_factorisation, sign_of, sign_product_along_triples, signed_count_1f,
)
from .gp_core import build_gp
from .triple_dynamics import (
    GRAPHS, H, H_PM, T, T_PM, SignedCount, closed_form_signed_t, closed_form_t,
    count_walks, enumerate_walks, jacobsthal, jacobsthal_closed_form, lift_walk, walk_sign,
)

ORACLE_K_MAX = 5
EXTENSION_K_MAX = 4
DFS_LENGTH_MAX = 12
LIFT_K_MAX = 12


def check_jacobsthal(k_max: int) -> bool:
    return all(jacobsthal(k) == jacobsthal_closed_form(k) for k in range(k_max + 1))


def check_theorem1(k_max: int) -> bool:
    return all(
        count_1f(k) == jacobsthal(k) * (1 if k % 2 else 4)
        for k in range(1, k_max + 1)
    )


def check_closed_forms(k_max: int) -> bool:
    for k in range(k_max + 1):
        if count_walks(T, k, "x0", "x0").total() != closed_form_t(k, 0):
            return False
        if count_walks(T, k, "x0", "x1").total() != closed_form_t(k, 1):
            return False
        h = count_walks(H, k, "y0", "y2").total()
        if h != (closed_form_t(k, 1) if k % 2 == 0 else 0):
            return False
        if k >= 1:
            t_pm = count_walks(T_PM, k, "x0", "x2")
            if t_pm != closed_form_signed_t(k):
                return False
            h_pm = count_walks(H_PM, k, "y0", "y2")
            if h_pm != (t_pm if k % 2 == 0 else SignedCount()):
                return False
    return True


def check_dfs(k_max: int) -> bool:
    for g in GRAPHS.values():
        for length in range(min(k_max, DFS_LENGTH_MAX) + 1):
            for a in range(g.size):
                for b in range(g.size):
                    signs = Counter(walk_sign(g, w) for w in enumerate_walks(g, length, a, b))
                    if count_walks(g, length, a, b) != SignedCount(signs[1], signs[-1]):
                        return False
    return True


def check_lifting(k_max: int) -> bool:
    for k in range(0, min(k_max, LIFT_K_MAX) + 1, 2):
        walks = list(enumerate_walks(T, k, "x0", "x2"))
        lifts = [lift_walk(w) for w in walks]
        if len(set(lifts)) != len(walks):
            return False
        for w, w2 in zip(walks, lifts):
            if w2[-1] != H.index("y2"):
                return False
            steps = zip(zip(w, w[1:]), zip(w2, w2[1:]))
            if any(T.step_direction(*s) != H.step_direction(*s2) for s, s2 in steps):
                return False
        if set(lifts) != set(enumerate_walks(H, k, "y0", "y2")):
            return False
        if len(lifts) != count_walks(H, k, "y0", "y2").total():
            return False
    return True


def check_alon_tarsi(k_max: int) -> bool:
    for k in range(1, k_max + 1):
        if signed_count_1f(k).difference() == 0:
            return False
        if k % 2 and count_1f(k) % 2 == 0:
            return False
    return True


def check_oracle_count(k_max: int, parallel: int = 1) -> bool:
    return all(
        len(brute_force_colourings(build_gp(3 * k, k), parallel=parallel)) == 6 * count_1f(k)
        for k in range(1, min(k_max, ORACLE_K_MAX) + 1)
    )


def check_oracle_signs(k_max: int, parallel: int = 1) -> bool:
    for k in range(1, min(k_max, ORACLE_K_MAX) + 1):
        cols = brute_force_colourings(build_gp(3 * k, k), parallel=parallel)
        pos = neg = 0
        for members in group_by_factorisation(cols).values():
            signs = {sign_of(c) for c in members}
            if len(members) != 6 or len(signs) != 1:
                return False
            if any(sign_product_along_triples(c) != sign_of(c) for c in members):
                return False
            if signs.pop() > 0:
                pos += 1
            else:
                neg += 1
        if SignedCount(pos, neg) != signed_count_1f(k):
            return False
    return True


def check_extension(k_max: int, parallel: int = 1) -> bool:
    for k in range(1, min(k_max, EXTENSION_K_MAX) + 1):
        g = build_gp(3 * k, k)
        oracle = brute_force_colourings(g, parallel=parallel)
        mult = Counter(c.outer_colours() for c in oracle)
        by_outer = {c.outer_colours(): c for c in oracle}
        for outer in product((1, 2, 3), repeat=3 * k):
            try:
                gamma = extend_outer(EdgeColouring.from_outer(g, outer))
            except NotExtendable:
                if mult[outer] != 0:
                    return False
            else:
                if mult[outer] != 1 or gamma != by_outer[outer]:
                    return False
    return True


def suites(k_max: int, oracle: bool, parallel: int = 1) -> Iterator[tuple[str, Callable[[], bool]]]:
    yield "jacobsthal", lambda: check_jacobsthal(k_max)
    yield "theorem1", lambda: check_theorem1(k_max)
    yield "closed_forms", lambda: check_closed_forms(k_max)
    yield "transfer_vs_dfs", lambda: check_dfs(k_max)
    yield "walk_lifting", lambda: check_lifting(k_max)
    yield "alon_tarsi", lambda: check_alon_tarsi(k_max)
    if oracle:
        yield "oracle_count", lambda: check_oracle_count(k_max, parallel)
        yield "oracle_signs", lambda: check_oracle_signs(k_max, parallel)
        yield "extension_lemma", lambda: check_extension(k_max, parallel)
