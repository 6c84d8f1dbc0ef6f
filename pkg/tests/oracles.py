"""Brute-force reference implementations used to freeze expected values.

These work on explicit lattice coordinates and exhaustive search and share
no code with the package.
"""

import itertools
from functools import lru_cache


def lattice_points(word):
    pts = [(0, 0)]
    x = y = 0
    for c in word:
        if c == "N":
            y += 1
        else:
            x += 1
        pts.append((x, y))
    return pts


def is_dyck(word):
    pts = lattice_points(word)
    return all(y >= x for x, y in pts) and pts[-1][0] == pts[-1][1]


def brute_dyck(n):
    """All Dyck words of semilength n in N < E lexicographic order."""
    return ["".join(w) for w in itertools.product("NE", repeat=2 * n) if is_dyck(w)]


@lru_cache(maxsize=None)
def catalan_rec(n):
    if n == 0:
        return 1
    return sum(catalan_rec(i) * catalan_rec(n - 1 - i) for i in range(n))


def oracle_stats(word):
    pts = lattice_points(word)
    n = len(word) // 2
    ret = sum(1 for i, c in enumerate(word) if c == "E" and pts[i + 1][0] == pts[i + 1][1])
    ldr = 0
    fdf = None
    for i in range(len(word) - 1):
        if word[i] == word[i + 1] == "N":
            ldr = pts[i + 1][1]
        if fdf is None and word[i] == word[i + 1] == "E":
            fdf = pts[i + 1][0]
    rises = {pts[i][0] + 1 for i, c in enumerate(word) if c == "N"}
    return {"returns": ret, "ldr": ldr, "fdf": n if fdf is None else fdf, "rises": rises}


def contains_321(p):
    return any(a > b > c for a, b, c in itertools.combinations(p, 3))


def brute_avoiders(n):
    return [p for p in itertools.permutations(range(1, n + 1)) if not contains_321(p)]


def brute_perm_stats(p):
    n = len(p)
    lrmax = {i + 1 for i in range(n) if all(p[j] < p[i] for j in range(i))}
    blocks = sum(1 for i in range(1, n + 1) if all(p[j] <= i for j in range(i)))
    ldes = max([0] + [i for i in range(1, n) if p[i - 1] > p[i]])
    inv = [0] * n
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    ldes_inv = max([0] + [i for i in range(1, n) if inv[i - 1] > inv[i]])
    return lrmax, blocks, ldes, ldes_inv
