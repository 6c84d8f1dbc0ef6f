"""321-avoiding permutations and their correspondence with Dyck words.

Left-to-right maxima of a 321-avoiding permutation become the north runs of
its Dyck word: at a maximum ``m_j`` the path climbs ``m_j - m_{j-1}`` steps,
and every position contributes one east step.  Under this map

* the set of left-to-right maximum positions becomes the rise set,
* the number of blocks becomes the number of returns,
* the last descent of the inverse becomes the last-double-rise height.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .words import EAST, NORTH, DyckWord, WordLike, as_word, enumerate_dyck


class ContainsPattern321(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""

    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{list(values)} is not a permutation of 1..{len(values)}")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(map(str, self.values))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.values)
        for i, v in enumerate(self.values, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))


def parse_permutation(text: str) -> Permutation:
    """Read ``"2 3 1"`` or ``"2,3,1"``."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    try:
        return Permutation(tuple(int(t) for t in tokens))
    except (TypeError, ValueError) as exc:
        raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None


def _values(p) -> Sequence[int]:
    return p.values if isinstance(p, Permutation) else tuple(p)


def is_321_avoiding(p) -> bool:
    # A 321 pattern exists iff the values that are not left-to-right maxima
    # fail to increase.
    top = 0
    last_small = 0
    for v in _values(p):
        if v > top:
            top = v
        elif v < last_small:
            return False
        else:
            last_small = v
    return True


def is_321_avoiding_brute(p) -> bool:
    """Check every triple of positions; cubic, used as a cross-check."""
    vals = _values(p)
    m = len(vals)
    for i in range(m):
        for j in range(i + 1, m):
            if vals[i] > vals[j]:
                for k in range(j + 1, m):
                    if vals[j] > vals[k]:
                        return False
    return True


@dataclass(frozen=True)
class PermStats:
    lrmax: frozenset
    blocks: int
    ldes: int
    ldes_inverse: int


def lrmax(p) -> frozenset:
    out = []
    top = 0
    for i, v in enumerate(_values(p), 1):
        if v > top:
            out.append(i)
            top = v
    return frozenset(out)


def blocks(p) -> int:
    count = 0
    top = 0
    for i, v in enumerate(_values(p), 1):
        top = max(top, v)
        if top == i:
            count += 1
    return count


def ldes(p) -> int:
    vals = _values(p)
    for i in range(len(vals) - 1, 0, -1):
        if vals[i - 1] > vals[i]:
            return i
    return 0


def perm_stats(p) -> PermStats:
    p = p if isinstance(p, Permutation) else Permutation(tuple(p))
    return PermStats(lrmax(p), blocks(p), ldes(p), ldes(p.inverse()))


def to_dyck(p) -> DyckWord:
    vals = _values(p)
    if not is_321_avoiding(vals):
        raise ContainsPattern321(f"{list(vals)} contains the pattern 321")
    parts = []
    top = 0
    for v in vals:
        if v > top:
            parts.append(NORTH * (v - top))
            top = v
        parts.append(EAST)
    return DyckWord._unchecked("".join(parts))


def from_dyck(word: WordLike) -> Permutation:
    steps = as_word(word).steps
    n = len(steps) // 2
    values = [0] * n
    used = [False] * (n + 2)
    height = 0
    x = 0
    for c in steps:
        if c == NORTH:
            height += 1
            values[x] = height
        else:
            x += 1
    for v in values:
        if v:
            used[v] = True
    free = (v for v in range(1, n + 1) if not used[v])
    for i in range(n):
        if not values[i]:
            values[i] = next(free)
    return Permutation(tuple(values))


def enumerate_avoiders(n: int) -> Iterator[Permutation]:
    """Every permutation in S_n(321), ordered like their Dyck words."""
    for word in enumerate_dyck(n):
        yield from_dyck(word)
