"""Raising and lowering operators on semistandard Young tableaux.

Operators act through the row reading word: the lowering operator ``f_i`` turns
the ``i`` at the first position attaining the maximal prefix statistic into an
``i + 1``, and the raising operator ``e_i`` inverts it.  String lengths come
directly from the prefix/suffix statistics, with ``phi_i - eps_i`` equal to the
weight difference in coordinates ``i`` and ``i + 1``.
"""

from __future__ import annotations

from .errors import IndexOutOfRange
from .pairing import eps_i as _word_eps
from .pairing import first_max_position, last_max_position, m_i
from .tableaux import Entry, YoungTableau, replace_cells, row_reading_cells


def _check_color(i: int) -> None:
    if i < 1:
        raise IndexOutOfRange(f"operator index must be at least 1, got {i}")


def phi(t: YoungTableau, i: int) -> int:
    """Length of the lowering string at ``t`` for color ``i``."""
    _check_color(i)
    return m_i(tuple(e for _, e in row_reading_cells(t)), i)


def eps(t: YoungTableau, i: int) -> int:
    """Length of the raising string at ``t`` for color ``i``."""
    _check_color(i)
    return _word_eps(tuple(e for _, e in row_reading_cells(t)), i)


def lower(t: YoungTableau, i: int) -> YoungTableau | None:
    """Apply ``f_i``: change one ``i`` to ``i + 1``, or return ``None``."""
    _check_color(i)
    cells = row_reading_cells(t)
    word = tuple(e for _, e in cells)
    if m_i(word, i) <= 0:
        return None
    p = first_max_position(word, i)
    (r, c), entry = cells[p - 1]
    assert entry.value == i
    return replace_cells(t, {(r, c): Entry(i + 1)})


def raise_(t: YoungTableau, i: int) -> YoungTableau | None:
    """Apply ``e_i``: change one ``i + 1`` to ``i``, or return ``None``."""
    _check_color(i)
    cells = row_reading_cells(t)
    word = tuple(e for _, e in cells)
    q = last_max_position(word, i)
    if q == len(word):
        return None
    (r, c), entry = cells[q]
    assert entry.value == i + 1
    return replace_cells(t, {(r, c): Entry(i)})
