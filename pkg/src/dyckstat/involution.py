"""The three-case map ``phi``, its inverse, and the iterated involution.

``phi`` raises the number of returns and the last-double-rise height by one
each while fixing the rise set.  Iterating it (or its inverse) on a word
swaps ``returns`` with ``n - ldr``, which gives the involution
:func:`big_phi`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Tuple, Union

from .words import (
    EAST,
    NORTH,
    DyckWord,
    MarkedFactorization,
    WordLike,
    as_word,
    ldr,
    marked_factorization,
    prime_split,
    returns,
)


class PhiCase(enum.IntEnum):
    CASE1 = 1
    CASE2 = 2
    CASE3 = 3

    def __str__(self) -> str:
        return f"case {self.value}"


class PhiErrorReason(enum.Enum):
    EMPTY_WORD = "EmptyWord"
    ENDS_WITH_SINGLE_EAST = "EndsWithSingleEast"
    MAXIMAL_LDR = "MaximalLdr"
    FEWER_THAN_TWO_RETURNS = "FewerThanTwoReturns"


class PhiError(ValueError):
    """A word outside the domain of ``phi`` or its inverse."""

    def __init__(self, reason: PhiErrorReason, word: str):
        self.reason = reason
        self.word = word
        super().__init__(f"{reason.value}: {word}")


class InternalDomainViolation(RuntimeError):
    """An iteration step of ``big_phi`` left the domain of ``phi``/``phi_inverse``."""

    def __init__(self, word: str, message: str):
        self.word = word
        super().__init__(f"{message} (word {word})")


@dataclass(frozen=True)
class ForwardDecomposition:
    P: Tuple[str, ...]
    Q: str
    R: str

    def assemble(self) -> str:
        return "".join(self.P) + self.Q + self.R


@dataclass(frozen=True)
class BackwardDecomposition:
    P: Tuple[str, ...]
    Q: str
    e: int
    nrun: int
    R: str

    def assemble(self) -> str:
        return "".join(self.P) + self.Q + EAST * self.e + NORTH * self.nrun + self.R


def _steps(word: WordLike) -> str:
    return word.steps if isinstance(word, DyckWord) else as_word(word).steps


def _ends_with_single_east(steps: str) -> bool:
    return not steps.endswith("EE")


def forward_decompose(word: WordLike) -> ForwardDecomposition:
    steps = _steps(word)
    if not steps:
        raise PhiError(PhiErrorReason.EMPTY_WORD, steps)
    if _ends_with_single_east(steps):
        raise PhiError(PhiErrorReason.ENDS_WITH_SINGLE_EAST, steps)
    if ldr(steps) == len(steps) // 2 - 1:
        raise PhiError(PhiErrorReason.MAXIMAL_LDR, steps)
    primes = prime_split(steps)
    last = primes[-1]
    # R starts at the first north step after the last double rise; that north
    # step is preceded by an east step since no later double rise exists.
    j = last.rfind("NN")
    start = last.find(NORTH, j + 2)
    if j < 0 or start < 0:
        raise InternalDomainViolation(steps, "no single-rise suffix in last prime")
    return ForwardDecomposition(tuple(primes[:-1]), last[:start], last[start:])


def _case_of(fac: MarkedFactorization) -> PhiCase:
    runs = fac.runs
    if runs[1] > 0 or (len(fac.items) == 1 and fac.items[0][0] != "NE"):
        return PhiCase.CASE1
    if not any(runs[1:]):
        return PhiCase.CASE2
    return PhiCase.CASE3


def classify_case(decomposition: ForwardDecomposition) -> PhiCase:
    """Pick the rearrangement rule from the marked factorization of ``Q``.

    A ``Q`` with a single prime factor other than ``NE`` takes the Case 1
    rule: moving ``n0`` behind it already raises ``ldr`` by one, whereas the
    Case 2 rearrangement is not injective there (``NNNENNEEENEE`` and
    ``NNENNNEEENEE`` would share an image).
    """
    return _case_of(marked_factorization(decomposition.Q))


def _erase_final_rise_but_one(steps: str) -> Tuple[str, int]:
    """Drop all but one step of the last maximal north run; return the rest and the count dropped."""
    end = steps.rfind(NORTH) + 1
    begin = end
    while begin > 0 and steps[begin - 1] == NORTH:
        begin -= 1
    dropped = end - begin - 1
    return steps[:begin] + steps[begin + dropped:], dropped


def phi(word: WordLike) -> Tuple[DyckWord, PhiCase]:
    """Apply ``phi``; returns the image and which of the three cases applied."""
    dec = forward_decompose(word)
    fac = marked_factorization(dec.Q)
    case = _case_of(fac)
    P = "".join(dec.P)
    n0 = NORTH * fac.leading_run
    if case is PhiCase.CASE1:
        middle = fac.assemble()[fac.leading_run:] + n0
    else:
        # n is cut from the final rise of Q after n0 is set aside; a run that
        # straddles factor boundaries counts as one rise.
        rest = dec.Q[fac.leading_run:]
        if case is PhiCase.CASE2:
            q_prime, dropped = _erase_final_rise_but_one(rest)
            middle = NORTH * dropped + q_prime + n0
        else:
            q1 = fac.items[0][0]
            q_prime, dropped = _erase_final_rise_but_one(rest[len(q1):])
            middle = q1 + NORTH * dropped + q_prime + n0
    return DyckWord._unchecked(P + middle + dec.R), case


def backward_decompose(word: WordLike) -> BackwardDecomposition:
    steps = _steps(word)
    if not steps:
        raise PhiError(PhiErrorReason.EMPTY_WORD, steps)
    if _ends_with_single_east(steps):
        raise PhiError(PhiErrorReason.ENDS_WITH_SINGLE_EAST, steps)
    primes = prime_split(steps)
    if len(primes) < 2:
        raise PhiError(PhiErrorReason.FEWER_THAN_TWO_RETURNS, steps)
    tail = primes[-2] + primes[-1]
    j = tail.rfind("NN")
    if j < 0:
        raise InternalDomainViolation(steps, "no double rise in the two-return suffix")
    r_start = j + 1
    n_start = j
    while n_start > 0 and tail[n_start - 1] == NORTH:
        n_start -= 1
    e_start = n_start
    while e_start > 0 and tail[e_start - 1] == EAST:
        e_start -= 1
    e = n_start - e_start
    if e == 0:
        raise InternalDomainViolation(steps, "no east run before the final double rise")
    return BackwardDecomposition(
        P=tuple(primes[:-2]),
        Q=tail[:e_start],
        e=e,
        nrun=r_start - n_start,
        R=tail[r_start:],
    )


def phi_inverse(word: WordLike) -> Tuple[DyckWord, PhiCase]:
    """Invert ``phi``; the returned case matches the case ``phi`` used."""
    dec = backward_decompose(word)
    Q = dec.Q
    P = "".join(dec.P)
    n = NORTH * dec.nrun
    e = EAST * dec.e
    if Q.endswith("NN"):
        return DyckWord._unchecked(P + n + Q + e + dec.R), PhiCase.CASE1
    fac = marked_factorization(Q)
    body = "".join(prime + NORTH * run for prime, run in fac.items)
    if fac.leading_run > 0:
        middle = body + NORTH * fac.leading_run
        case = PhiCase.CASE2
    else:
        (q1, n1), rest = fac.items[0], fac.items[1:]
        middle = q1 + "".join(prime + NORTH * run for prime, run in rest) + NORTH * n1
        case = PhiCase.CASE3
    return DyckWord._unchecked(P + n + middle + e + dec.R), case


def strip_trailing_ne(word: WordLike) -> Tuple[DyckWord, int]:
    """Remove trailing ``NE`` prime factors; return the core and how many were removed."""
    steps = _steps(word)
    t = 0
    while steps.endswith("NE"):
        steps = steps[:-2]
        t += 1
    return DyckWord._unchecked(steps), t


STRIP = "strip"
APPEND = "append"
START = "start"

TraceLabel = Union[PhiCase, str]


def big_phi_trace(word: WordLike) -> List[Tuple[DyckWord, TraceLabel]]:
    """Every word ``big_phi`` passes through.

    The first entry is the input (``"start"``), or its stripped core
    (``"strip"``) when trailing ``NE`` factors are set aside.  Each ``phi`` or
    ``phi_inverse`` step contributes an entry labelled with its case, and the
    factors are put back in a final ``"append"`` entry.  A fixed point yields
    the one-entry trace ``[(word, "start")]``.
    """
    word = as_word(word)
    core, t = strip_trailing_ne(word)
    steps = core.steps
    n = len(steps) // 2
    r = returns(steps)
    s = n - ldr(steps)
    if not steps or r == s:
        return [(word, START)]
    trace = [(core, STRIP if t else START)]
    current = core
    step, count = (phi, s - r) if r < s else (phi_inverse, r - s)
    for _ in range(count):
        try:
            current, case = step(current)
        except PhiError as exc:
            raise InternalDomainViolation(current.steps, f"{step.__name__} failed: {exc}") from exc
        trace.append((current, case))
    if t:
        trace.append((DyckWord._unchecked(current.steps + "NE" * t), APPEND))
    return trace


def big_phi(word: WordLike) -> DyckWord:
    """The involution swapping ``returns`` and ``n - ldr`` while fixing the rise set."""
    return big_phi_trace(word)[-1][0]
