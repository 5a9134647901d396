"""Raising and lowering operators on semistandard shifted tableaux.

Operators act through the hook reading word.  The lowering operator ``f_i``
locates the word position of the first maximal prefix statistic and edits the
tableau around that cell; the raising operator ``e_i`` starts from the position
just after the last maximal prefix and inverts every lowering case.

Entries with value ``v`` (marked or not) form connected ribbons; some cases walk
a ribbon northwest to its head or southeast along its tail to keep the filling
semistandard while moving weight between values ``i`` and ``i + 1``.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import CrystalError, IndexOutOfRange, ShapeMismatch, ValueOutOfRange
from .pairing import eps_i as _word_eps
from .pairing import first_max_position, last_max_position, m_i
from .tableaux import (
    Cell,
    Entry,
    ShiftedTableau,
    entry_at,
    hook_reading_cells,
    is_strict_partition,
    replace_cells,
    validate_shifted,
)


def _check_color(i: int) -> None:
    if i < 1:
        raise IndexOutOfRange(f"operator index must be at least 1, got {i}")


def phi(t: ShiftedTableau, i: int) -> int:
    """Length of the lowering string at ``t`` for color ``i``."""
    _check_color(i)
    return m_i(tuple(e for _, e in hook_reading_cells(t)), i)


def eps(t: ShiftedTableau, i: int) -> int:
    """Length of the raising string at ``t`` for color ``i``."""
    _check_color(i)
    return _word_eps(tuple(e for _, e in hook_reading_cells(t)), i)


def _in_class(entry: Entry | None, value: int) -> bool:
    return entry is not None and entry.value == value


def _ribbon_head(t: ShiftedTableau, cell: Cell) -> Cell:
    """Walk northwest along the ribbon of ``cell``'s value to its head."""
    value = t.cell(*cell).value
    r, c = cell
    while True:
        if _in_class(entry_at(t, r + 1, c), value):
            r += 1
        elif _in_class(entry_at(t, r, c - 1), value):
            c -= 1
        else:
            return (r, c)


def _ribbon_tail_cells(t: ShiftedTableau, cell: Cell) -> list[Cell]:
    """Cells from ``cell`` walking southeast along its value's ribbon."""
    value = t.cell(*cell).value
    r, c = cell
    out = [(r, c)]
    while True:
        if _in_class(entry_at(t, r - 1, c), value):
            r -= 1
        elif _in_class(entry_at(t, r, c + 1), value):
            c += 1
        else:
            return out
        out.append((r, c))


def lower(t: ShiftedTableau, i: int) -> ShiftedTableau | None:
    """Apply ``f_i``, or return ``None`` when the lowering string is exhausted."""
    _check_color(i)
    cells = hook_reading_cells(t)
    word = tuple(e for _, e in cells)
    if m_i(word, i) <= 0:
        return None
    p = first_max_position(word, i)
    (r, c), x = cells[p - 1]
    assert x.value == i
    north = entry_at(t, r + 1, c)
    east = entry_at(t, r, c + 1)

    if not x.marked:
        if east == Entry(i + 1, True):
            return replace_cells(
                t, {(r, c): Entry(i + 1, True), (r, c + 1): Entry(i + 1)}
            )
        if north is None or north > Entry(i + 1):
            return replace_cells(t, {(r, c): Entry(i + 1)})
        head = _ribbon_head(t, (r + 1, c))
        if t.cell(*head).marked:
            return replace_cells(
                t, {(r, c): Entry(i + 1, True), head: Entry(i + 1)}
            )
        return replace_cells(t, {(r, c): Entry(i + 1, True)})

    if north == Entry(i):
        return replace_cells(t, {(r, c): Entry(i), (r + 1, c): Entry(i + 1, True)})
    if east is None or east > Entry(i + 1, True):
        return replace_cells(t, {(r, c): Entry(i + 1, True)})
    changed = replace_cells(t, {(r, c): Entry(i)})
    for cell in _ribbon_tail_cells(changed, (r, c)):
        if changed.cell(*cell) != Entry(i):
            continue
        neighbor = entry_at(changed, cell[0], cell[1] + 1)
        if neighbor != Entry(i) and neighbor != Entry(i + 1, True):
            return replace_cells(changed, {cell: Entry(i + 1, True)})
    raise AssertionError("lowering walk found no cell to change")


def raise_(t: ShiftedTableau, i: int) -> ShiftedTableau | None:
    """Apply ``e_i``, or return ``None`` when the raising string is exhausted."""
    _check_color(i)
    cells = hook_reading_cells(t)
    word = tuple(e for _, e in cells)
    q = last_max_position(word, i)
    if q == len(word):
        return None
    (r, c), x = cells[q]
    assert x.value == i + 1
    south = entry_at(t, r - 1, c)
    west = entry_at(t, r, c - 1)

    if not x.marked:
        if west == Entry(i + 1, True):
            return replace_cells(
                t, {(r, c): Entry(i + 1, True), (r, c - 1): Entry(i)}
            )
        if south is None or south < Entry(i):
            return replace_cells(t, {(r, c): Entry(i)})
        changed = replace_cells(t, {(r, c): Entry(i + 1, True)})
        for cell in _ribbon_tail_cells(changed, (r, c)):
            if changed.cell(*cell) != Entry(i + 1, True):
                continue
            neighbor = entry_at(changed, cell[0] - 1, cell[1])
            if neighbor != Entry(i) and neighbor != Entry(i + 1, True):
                return replace_cells(changed, {cell: Entry(i)})
        raise AssertionError("raising walk found no cell to change")

    if south == Entry(i):
        return replace_cells(t, {(r, c): Entry(i), (r - 1, c): Entry(i, True)})
    if west is None or west < Entry(i, True):
        return replace_cells(t, {(r, c): Entry(i, True)})
    head = _ribbon_head(t, (r, c - 1))
    if head[0] != head[1]:
        return replace_cells(t, {(r, c): Entry(i), head: Entry(i, True)})
    return replace_cells(t, {(r, c): Entry(i)})


def enumerate_yamanouchi(shape: Sequence[int], n: int) -> list[ShiftedTableau]:
    """All shifted tableaux of ``shape`` whose raising strings all vanish.

    In such a tableau row ``r`` consists of a run of unmarked ``r`` entries
    followed by strictly increasing marked entries larger than ``r``, so
    candidates are generated from that profile and kept when they are valid
    fillings with ``eps(t, i) == 0`` for every color.  The result is ordered
    lexicographically by hook reading word.

    Raises:
        ShapeMismatch: ``shape`` is not a strict partition.
        ValueOutOfRange: ``n`` is not positive.
    """
    shape = tuple(shape)
    if shape and not is_strict_partition(shape):
        raise ShapeMismatch(f"{shape} is not a strict partition")
    if n < 1:
        raise ValueOutOfRange(f"alphabet bound must be positive, got {n}")
    if not shape:
        return [ShiftedTableau((), ())]

    row_options: list[list[tuple[Entry, ...]]] = []
    for r, length in enumerate(shape, start=1):
        options: list[tuple[Entry, ...]] = []
        for run in range(1, length + 1):
            pool = range(r + 1, n + 1)
            for combo in itertools.combinations(pool, length - run):
                options.append(
                    tuple([Entry(r)] * run)
                    + tuple(Entry(v, True) for v in combo)
                )
        row_options.append(options)

    results: list[ShiftedTableau] = []
    for rows in itertools.product(*row_options):
        try:
            t = validate_shifted(shape, rows, n)
        except CrystalError:
            continue
        if all(eps(t, i) == 0 for i in range(1, n)):
            results.append(t)
    results.sort(key=lambda t: tuple(e.sort_key for _, e in hook_reading_cells(t)))
    return results
