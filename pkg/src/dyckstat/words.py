"""Dyck words: parsing, statistics, factorizations, enumeration.

A Dyck word of semilength ``n`` is a sequence of ``n`` north steps ``N``
(0, 1) and ``n`` east steps ``E`` (1, 0) starting at the origin whose
lattice path never dips below the diagonal ``y = x``.  Internally a word is
a plain string over ``"NE"``; :class:`DyckWord` wraps a validated string.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple, Union

NORTH = "N"
EAST = "E"

ALPHABETS = {
    "NE": ("N", "E"),
    "UD": ("U", "D"),
    "bits": ("1", "0"),
}


class DyckError(ValueError):
    """Base class for malformed step sequences."""


class IllegalCharacter(DyckError):
    pass


class UnbalancedWord(DyckError):
    pass


class BelowDiagonal(DyckError):
    pass


class NegativeExcursion(DyckError):
    pass


class DyckWord:
    """An immutable, validated Dyck word.

    Compares and hashes by its step string; ordering is lexicographic with
    ``N < E``.
    """

    __slots__ = ("steps",)

    def __init__(self, steps: str = ""):
        check_dyck(steps)
        object.__setattr__(self, "steps", steps)

    @classmethod
    def _unchecked(cls, steps: str) -> "DyckWord":
        word = object.__new__(cls)
        object.__setattr__(word, "steps", steps)
        return word

    def __setattr__(self, name, value):
        raise AttributeError("DyckWord is immutable")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"DyckWord({self.steps!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, DyckWord):
            return self.steps == other.steps
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.steps)

    def __lt__(self, other: "DyckWord") -> bool:
        return sort_key(self.steps) < sort_key(other.steps)

    def __add__(self, other: "DyckWord") -> "DyckWord":
        if not isinstance(other, DyckWord):
            return NotImplemented
        return DyckWord._unchecked(self.steps + other.steps)

    def __reduce__(self):
        return (DyckWord, (self.steps,))


WordLike = Union[DyckWord, str]

_SORT_TABLE = str.maketrans("NE", "01")


def sort_key(steps: str) -> str:
    """Key ordering step strings lexicographically with ``N < E``."""
    return steps.translate(_SORT_TABLE)


def as_word(word: WordLike) -> DyckWord:
    if isinstance(word, DyckWord):
        return word
    return DyckWord(word)


def check_dyck(steps: str) -> None:
    """Raise the matching :class:`DyckError` unless ``steps`` is a Dyck word."""
    height = 0
    for i, c in enumerate(steps):
        if c == NORTH:
            height += 1
        elif c == EAST:
            height -= 1
            if height < 0:
                raise BelowDiagonal(
                    f"prefix {steps[:i + 1]!r} has more east than north steps"
                )
        else:
            raise IllegalCharacter(f"illegal step {c!r} at position {i}")
    if height != 0:
        raise UnbalancedWord(f"{steps!r} has {height} more north than east steps")


def parse_word(text: str, alphabet: str = "NE") -> DyckWord:
    """Parse ``text`` written in one of the alphabets ``NE``, ``UD``, ``bits``.

    ``U`` and ``1`` are north steps, ``D`` and ``0`` are east steps.
    Surrounding whitespace is ignored.
    """
    try:
        up, down = ALPHABETS[alphabet]
    except KeyError:
        raise ValueError(f"unknown alphabet {alphabet!r}") from None
    text = text.strip()
    for i, c in enumerate(text):
        if c != up and c != down:
            raise IllegalCharacter(
                f"illegal character {c!r} at position {i} for alphabet {alphabet}"
            )
    if alphabet != "NE":
        text = text.translate(str.maketrans(up + down, "NE"))
    return DyckWord(text)


def detect_alphabet(text: str) -> str:
    """Guess the alphabet of ``text`` from its character set."""
    chars = set(text.strip())
    for name, pair in ALPHABETS.items():
        if chars <= set(pair):
            return name
    raise IllegalCharacter(f"cannot match characters {sorted(chars)} to an alphabet")


def format_word(word: WordLike, alphabet: str = "NE") -> str:
    steps = word.steps if isinstance(word, DyckWord) else word
    up, down = ALPHABETS[alphabet]
    if alphabet == "NE":
        return steps
    return steps.translate(str.maketrans("NE", up + down))


# ---------------------------------------------------------------------------
# statistics


@dataclass(frozen=True)
class StatProfile:
    semilength: int
    returns: int
    ldr: int
    fdf: int
    rises: frozenset
    rise_composition: Tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "semilength": self.semilength,
            "returns": self.returns,
            "ldr": self.ldr,
            "fdf": self.fdf,
            "rises": sorted(self.rises),
            "rise_composition": list(self.rise_composition),
        }


def returns(steps: str) -> int:
    """Number of east steps ending on the diagonal."""
    height = 0
    count = 0
    for c in steps:
        if c == NORTH:
            height += 1
        else:
            height -= 1
            if height == 0:
                count += 1
    return count


def ldr(steps: str) -> int:
    """y-coordinate of the point inside the last double rise, 0 if none."""
    j = steps.rfind("NN")
    if j < 0:
        return 0
    return steps.count(NORTH, 0, j + 1)


def fdf(steps: str) -> int:
    """x-coordinate of the point inside the first double fall.

    Words without a double fall get their semilength.
    """
    j = steps.find("EE")
    if j < 0:
        return len(steps) // 2
    return steps.count(EAST, 0, j + 1)


def rises(steps: str) -> frozenset:
    """Set of x-coordinates plus one of the north steps."""
    out = set()
    x = 0
    for c in steps:
        if c == NORTH:
            out.add(x + 1)
        else:
            x += 1
    return frozenset(out)


def north_runs(steps: str) -> Tuple[int, ...]:
    """Lengths of the maximal north runs, in path order."""
    return tuple(len(run) for run in steps.split(EAST) if run)


def compute_stats(word: WordLike) -> StatProfile:
    steps = as_word(word).steps
    return StatProfile(
        semilength=len(steps) // 2,
        returns=returns(steps),
        ldr=ldr(steps),
        fdf=fdf(steps) if steps else 0,
        rises=rises(steps),
        rise_composition=north_runs(steps),
    )


def rises_to_composition(rise_set, n: int) -> Tuple[int, ...]:
    """Composition of ``n`` given by consecutive differences of ``rise_set ∪ {n+1}``."""
    points = sorted(rise_set) + [n + 1]
    return tuple(b - a for a, b in zip(points, points[1:]))


def composition_to_rises(composition: Sequence[int]) -> frozenset:
    out = []
    pos = 1
    for part in composition:
        out.append(pos)
        pos += part
    return frozenset(out)


# ---------------------------------------------------------------------------
# transformations and factorizations


_SWAP = str.maketrans("NE", "EN")


def reverse_complement(word: WordLike) -> DyckWord:
    """Reflect the path across the line ``x + y = n``."""
    steps = as_word(word).steps
    return DyckWord._unchecked(steps[::-1].translate(_SWAP))


def prime_split(steps: str) -> list:
    """Split a balanced step string at every return to level 0."""
    parts = []
    height = 0
    start = 0
    for i, c in enumerate(steps):
        height += 1 if c == NORTH else -1
        if height == 0:
            parts.append(steps[start:i + 1])
            start = i + 1
    return parts


def prime_components(word: WordLike) -> list:
    """Unique factorization into prime Dyck words."""
    return [DyckWord._unchecked(p) for p in prime_split(as_word(word).steps)]


def is_prime(steps: str) -> bool:
    return bool(steps) and len(prime_split(steps)) == 1


@dataclass(frozen=True)
class MarkedFactorization:
    """``N^leading_run Q_1 N^r_1 ... Q_k N^r_k`` with each ``Q_i`` prime."""

    leading_run: int
    items: Tuple[Tuple[str, int], ...]

    @property
    def primes(self) -> Tuple[str, ...]:
        return tuple(prime for prime, _ in self.items)

    @property
    def runs(self) -> Tuple[int, ...]:
        """``(n_0, n_1, ..., n_k)`` as lengths."""
        return (self.leading_run,) + tuple(run for _, run in self.items)

    def assemble(self) -> str:
        return NORTH * self.leading_run + "".join(
            prime + NORTH * run for prime, run in self.items
        )


def marked_factorization(steps: WordLike) -> MarkedFactorization:
    """Factor a word that never dips below its start level.

    Unmatched north steps (those after which the path never comes back down
    to their starting level) form the runs; every matched stretch is split
    into prime factors.
    """
    if isinstance(steps, DyckWord):
        steps = steps.steps
    m = len(steps)
    heights = [0] * (m + 1)
    h = 0
    for i, c in enumerate(steps):
        if c == NORTH:
            h += 1
        elif c == EAST:
            h -= 1
            if h < 0:
                raise NegativeExcursion(
                    f"prefix {steps[:i + 1]!r} has more east than north steps"
                )
        else:
            raise IllegalCharacter(f"illegal step {c!r} at position {i}")
        heights[i + 1] = h
    # suffix_min[i] = min(heights[i:])
    suffix_min = heights[:]
    for i in range(m - 1, -1, -1):
        if suffix_min[i + 1] < suffix_min[i]:
            suffix_min[i] = suffix_min[i + 1]

    leading = 0
    items = []
    i = 0
    while i < m:
        base = heights[i]
        if suffix_min[i + 1] > base:
            # unmatched north step
            if items:
                prime, run = items[-1]
                items[-1] = (prime, run + 1)
            else:
                leading += 1
            i += 1
            continue
        j = i + 1
        while heights[j] != base:
            j += 1
        items.append((steps[i:j], 0))
        i = j
    return MarkedFactorization(leading, tuple(items))


# ---------------------------------------------------------------------------
# enumeration

_MEMO_STEPS = 14


@lru_cache(maxsize=None)
def _completions(height: int, steps: int) -> Tuple[str, ...]:
    """All ways to finish at level 0 from ``height`` in ``steps`` steps, N < E order."""
    if steps == 0:
        return ("",) if height == 0 else ()
    out = []
    if height + 1 <= steps - 1:
        out.extend(NORTH + s for s in _completions(height + 1, steps - 1))
    if height > 0:
        out.extend(EAST + s for s in _completions(height - 1, steps - 1))
    return tuple(out)


def _walk(prefix: str, height: int, steps: int) -> Iterator[str]:
    if steps <= _MEMO_STEPS:
        for tail in _completions(height, steps):
            yield prefix + tail
        return
    if height + 1 <= steps - 1:
        yield from _walk(prefix + NORTH, height + 1, steps - 1)
    if height > 0:
        yield from _walk(prefix + EAST, height - 1, steps - 1)


def iter_dyck_strings(n: int, prefix: str = "") -> Iterator[str]:
    """Step strings of all Dyck words of semilength ``n`` starting with ``prefix``."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    height = 0
    for c in prefix:
        height += 1 if c == NORTH else -1
        if height < 0 or c not in "NE":
            return
    steps = 2 * n - len(prefix)
    if steps < 0 or height > steps:
        return
    yield from _walk(prefix, height, steps)


def enumerate_dyck(n: int, prefix: str = "") -> Iterator[DyckWord]:
    """Yield every Dyck word of semilength ``n`` once, lexicographically (N < E)."""
    make = DyckWord._unchecked
    for s in iter_dyck_strings(n, prefix):
        yield make(s)


def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


# ---------------------------------------------------------------------------
# rendering


def render_ascii(word: WordLike) -> str:
    """Draw the path on an ``(n+1)``-line character grid, top row first.

    Column ``2x`` holds vertical line ``x`` and column ``2x+1`` the gap to
    ``x+1``.  Text line ``y`` shows east steps at height ``y`` as ``_`` and
    north steps from ``y-1`` to ``y`` as ``|``.  Diagonal points are ``.``.
    """
    steps = as_word(word).steps
    n = len(steps) // 2
    grid = [[" "] * (2 * n + 1) for _ in range(n + 1)]
    for y in range(n + 1):
        grid[y][2 * y] = "."
    x = y = 0
    for c in steps:
        if c == NORTH:
            y += 1
            grid[y][2 * x] = "|"
        else:
            grid[y][2 * x + 1] = "_"
            x += 1
    return "\n".join("".join(row).rstrip() for row in reversed(grid))
