"""Brute-force reference implementations.

Everything here works on tuples of +1/-1/0 and follows the definitions
literally, with no shared code from the optimized modules.  It is slow on
purpose and only meant for small n.
"""
from __future__ import annotations

from itertools import combinations, product


def cube(n: int) -> list[tuple[int, ...]]:
    return list(product((1, -1), repeat=n))


def grid(n: int) -> list[tuple[int, ...]]:
    return list(product((1, 0, -1), repeat=n))


def to_tuple(s: str) -> tuple[int, ...]:
    table = {"+": 1, "-": -1, "0": 0}
    return tuple(table[c] for c in s if c != ".")


def to_string(t: tuple[int, ...]) -> str:
    return "".join({1: "+", -1: "-", 0: "0"}[x] for x in t) or "."


def all_subsets(n: int):
    return [A for k in range(n + 1) for A in combinations(range(n), k)]


def shattered(L, n: int) -> list[tuple[int, ...]]:
    out = []
    for A in all_subsets(n):
        patterns = {tuple(s[i] for i in A) for s in L}
        if len(patterns) == 2 ** len(A):
            out.append(A)
    return out


def strongly_shattered(L, n: int) -> list[tuple[int, ...]]:
    members = set(L)
    out = []
    for A in all_subsets(n):
        rest = [i for i in range(n) if i not in A]
        for fixed in product((1, -1), repeat=len(rest)):
            ok = True
            for free in product((1, -1), repeat=len(A)):
                s = [0] * n
                for i, x in zip(rest, fixed):
                    s[i] = x
                for i, x in zip(A, free):
                    s[i] = x
                if tuple(s) not in members:
                    ok = False
                    break
            if ok:
                out.append(A)
                break
    return out


def is_ample(L, n: int) -> bool:
    return len(set(L)) == len(shattered(L, n))


def count_ample(n: int) -> int:
    vertices = cube(n)
    total = 0
    for index in range(2 ** len(vertices)):
        L = [v for i, v in enumerate(vertices) if index >> i & 1]
        if is_ample(L, n):
            total += 1
    return total


def precedes(t, u) -> bool:
    return all(x == 0 or x == y for x, y in zip(t, u))


def baryc(L, n: int) -> set:
    """Every t whose face (all full s with t < s) lies inside L."""
    members = set(L)
    return {t for t in grid(n) if all(s in members for s in cube(n) if precedes(t, s))}


def minima(J) -> set:
    return {t for t in J if not any(u != t and precedes(u, t) for u in J)}


def cocircuits(L, n: int) -> set:
    return minima(baryc(L, n))


def circuits(L, n: int) -> set:
    members = set(L)
    return cocircuits([s for s in cube(n) if s not in members], n)


def l1(t, u) -> int:
    return sum(abs(x - y) for x, y in zip(t, u))


def grid_distances(J) -> dict:
    """All-pairs shortest paths in the grid graph on J (Floyd-Warshall)."""
    nodes = sorted(J)
    inf = float("inf")
    d = {(a, b): (0 if a == b else 1 if l1(a, b) == 1 else inf) for a in nodes for b in nodes}
    for k in nodes:
        for a in nodes:
            dak = d[a, k]
            if dak == inf:
                continue
            for b in nodes:
                if dak + d[k, b] < d[a, b]:
                    d[a, b] = dak + d[k, b]
    return d


def is_grid_isometric(J) -> bool:
    d = grid_distances(J)
    return all(v == l1(a, b) for (a, b), v in d.items())


def satisfies_sca(J) -> bool:
    J = list(J)
    for t1 in J:
        for t2 in J:
            for e in range(len(t1)):
                if t1[e] * t2[e] != -1:
                    continue
                if not any(
                    t[e] == 0 and all(x == 0 or x in (a, b) for x, a, b in zip(t, t1, t2))
                    for t in J
                ):
                    return False
    return True


def is_sign_convex(J) -> bool:
    J = list(J)
    for t1 in J:
        for t2 in J:
            sep = {f for f in range(len(t1)) if t1[f] * t2[f] == -1}
            for e in sep:
                found = False
                for t in J:
                    if t[e] != 0:
                        continue
                    ok = True
                    for f in range(len(t)):
                        if f in sep:
                            continue
                        if t1[f] == 0 or t2[f] == 0:
                            if t[f] != 0 and t[f] not in (t1[f], t2[f]):
                                ok = False
                        elif t[f] != t1[f]:
                            ok = False
                    if ok:
                        found = True
                        break
                if not found:
                    return False
    return True


def face_counts(L, n: int, F) -> list[int]:
    """f_i of the cubes of L inside the face F, listed straight from the grid."""
    B = baryc(L, n)
    counts = [0] * (n + 1)
    for t in B:
        if precedes(F, t):
            counts[t.count(0)] += 1
    return counts
