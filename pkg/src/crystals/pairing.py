"""Prefix statistics and pairing on words of marked/unmarked entries.

All statistics disregard marks: an entry counts by its value only.  Positions are
1-based; for a word ``w`` of length ``N`` the prefix of length ``r`` is
``w[0:r]``, with ``r = 0`` denoting the empty prefix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange
from .tableaux import Word


def m_i_prefix(word: Word, i: int, r: int) -> int:
    """Count of value ``i`` minus count of value ``i + 1`` in the length-``r`` prefix.

    Raises:
        IndexOutOfRange: ``r`` is negative or exceeds the word length.
    """
    if not 0 <= r <= len(word):
        raise IndexOutOfRange(
            f"prefix length {r} outside 0..{len(word)}"
        )
    low = sum(1 for e in word[:r] if e.value == i)
    high = sum(1 for e in word[:r] if e.value == i + 1)
    return low - high


def m_i(word: Word, i: int) -> int:
    """Maximum of :func:`m_i_prefix` over all prefixes, including the empty one."""
    best = 0
    running = 0
    for e in word:
        if e.value == i:
            running += 1
        elif e.value == i + 1:
            running -= 1
        if running > best:
            best = running
    return best


def eps_i(word: Word, i: int) -> int:
    """Maximum over suffixes of the count of ``i + 1`` minus the count of ``i``.

    The empty suffix contributes 0, so the result is never negative.
    """
    best = 0
    running = 0
    for e in reversed(word):
        if e.value == i + 1:
            running += 1
        elif e.value == i:
            running -= 1
        if running > best:
            best = running
    return best


def first_max_position(word: Word, i: int) -> int:
    """Smallest prefix length attaining :func:`m_i` (0 when the maximum is 0)."""
    best = 0
    best_r = 0
    running = 0
    for r, e in enumerate(word, start=1):
        if e.value == i:
            running += 1
        elif e.value == i + 1:
            running -= 1
        if running > best:
            best = running
            best_r = r
    return best_r


def last_max_position(word: Word, i: int) -> int:
    """Largest prefix length attaining :func:`m_i`."""
    best = 0
    best_r = 0
    running = 0
    for r, e in enumerate(word, start=1):
        if e.value == i:
            running += 1
        elif e.value == i + 1:
            running -= 1
        if running >= best:
            best = running
            best_r = r
    return best_r


@dataclass(frozen=True, slots=True)
class PairingResult:
    """Outcome of pairing values ``i + 1`` (highs) against later ``i`` (lows).

    Attributes:
        pairs: Matched ``(high_position, low_position)`` pairs, 1-based, with
            ``high_position < low_position``.
        free_low: Positions of unpaired value-``i`` letters, increasing.
        free_high: Positions of unpaired value-``i + 1`` letters, increasing.
    """

    pairs: tuple[tuple[int, int], ...]
    free_low: tuple[int, ...]
    free_high: tuple[int, ...]


def classify_pairs(word: Word, i: int) -> PairingResult:
    """Pair each value-``i + 1`` letter with the nearest later unpaired value-``i``.

    A single left-to-right scan with a stack: a letter of value ``i + 1`` is
    pushed as a candidate high; a letter of value ``i`` pops and pairs with the
    most recent unpaired high, or stays free if none is open.  Free lows
    therefore all precede free highs, and the free-low count equals
    :func:`m_i` of the word.
    """
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    free_low: list[int] = []
    for pos, e in enumerate(word, start=1):
        if e.value == i + 1:
            stack.append(pos)
        elif e.value == i:
            if stack:
                pairs.append((stack.pop(), pos))
            else:
                free_low.append(pos)
    pairs.sort()
    return PairingResult(tuple(pairs), tuple(free_low), tuple(stack))
