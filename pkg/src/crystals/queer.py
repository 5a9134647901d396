"""The queer operator pair and the odd operators derived from it.

On a shifted tableau the queer lowering move turns the rightmost ``1`` of the
bottom row into a ``2`` (on the main diagonal) or ``2'`` (off it); the raising
move inverts this.  Values ``1`` and ``2'`` only ever occur in the bottom row,
so the moves are two-sided inverses.

On a materialized graph, longer-range odd operators are conjugates of the
0-move by walks along even strings: ``S_i`` reflects a vertex across its
``i``-string, words of reflections compose right-to-left, and the ``k``-th odd
lowering operator is the 0-move conjugated by the ``k``-th reflection word.
"""

from __future__ import annotations

from typing import Sequence

from .errors import IndexOutOfRange, StringTruncated
from .graph import CrystalGraph, highest_weights
from .tableaux import Entry, ShiftedTableau, cells_of, replace_cells


def f0(t: ShiftedTableau) -> ShiftedTableau | None:
    """Queer lowering move: rightmost ``1`` of row 1 becomes ``2``/``2'``.

    Undefined (``None``) when the tableau holds no ``1`` or already holds a
    ``2'``.
    """
    ones: list[int] = []
    for (r, c), entry in cells_of(t):
        if entry == Entry(2, True):
            return None
        if entry.value == 1:
            ones.append(c)
    if not ones:
        return None
    column = max(ones)
    replacement = Entry(2) if column == 1 else Entry(2, True)
    return replace_cells(t, {(1, column): replacement})


def e0(t: ShiftedTableau) -> ShiftedTableau | None:
    """Queer raising move: the ``2'``, or a leading diagonal ``2``, becomes ``1``.

    Undefined (``None``) when the tableau has no ``2'`` and the first cell of
    row 1 is not an unmarked ``2``.
    """
    for (r, c), entry in cells_of(t):
        if entry == Entry(2, True):
            return replace_cells(t, {(r, c): Entry(1)})
    if t.shape and t.rows[0] and t.rows[0][0] == Entry(2):
        return replace_cells(t, {(1, 1): Entry(1)})
    return None


def phi0(t: ShiftedTableau) -> int:
    return 0 if f0(t) is None else 1


def eps0(t: ShiftedTableau) -> int:
    return 0 if e0(t) is None else 1


# -- graph-level odd operators -------------------------------------------------

def weyl_s(graph: CrystalGraph, vid: str, i: int) -> str:
    """Reflection ``S_i``: walk to the mirror vertex of the ``i``-string.

    With ``d = wt_i - wt_{i+1}``, applies the color-``i`` lowering move ``d``
    times when ``d >= 0`` and the raising move ``-d`` times otherwise.

    Raises:
        IndexOutOfRange: ``i`` is not a valid even color for this graph.
        StringTruncated: The walk needs an edge the graph does not contain.
    """
    if not 1 <= i <= graph.n - 1:
        raise IndexOutOfRange(
            f"reflection index {i} outside 1..{graph.n - 1}"
        )
    weight = graph.weight_of(vid)
    steps = weight[i - 1] - weight[i]
    cur = vid
    for _ in range(abs(steps)):
        nxt = graph.out_edge(cur, i) if steps >= 0 else graph.in_edge(cur, i)
        if nxt is None:
            raise StringTruncated(
                f"reflection S_{i} from {vid!r} ran off the graph at {cur!r}"
            )
        cur = nxt
    return cur


def apply_weyl_word(graph: CrystalGraph, vid: str, word: Sequence[int]) -> str:
    """Compose reflections; the rightmost letter of ``word`` acts first."""
    cur = vid
    for i in reversed(word):
        cur = weyl_s(graph, cur, i)
    return cur


def odd_word(k: int) -> tuple[int, ...]:
    """Reflection word conjugating the 0-move into the ``k``-th odd move."""
    if k < 1:
        raise IndexOutOfRange(f"odd index must be at least 1, got {k}")
    return tuple(range(2, k + 1)) + tuple(range(1, k))


def odd_f(graph: CrystalGraph, vid: str, k: int) -> str | None:
    """The ``k``-th odd lowering operator; ``odd_f(C, v, 1)`` is the 0-move.

    Returns ``None`` when the conjugated 0-move is undefined.

    Raises:
        IndexOutOfRange: ``k`` outside ``1..n-1``.
        StringTruncated: A reflection walk left the graph.
    """
    if not 1 <= k <= graph.n - 1:
        raise IndexOutOfRange(f"odd index {k} outside 1..{graph.n - 1}")
    word = odd_word(k)
    moved = apply_weyl_word(graph, vid, word)
    lowered = graph.out_edge(moved, 0)
    if lowered is None:
        return None
    return apply_weyl_word(graph, lowered, tuple(reversed(word)))


def odd_e(graph: CrystalGraph, vid: str, k: int) -> str | None:
    """The ``k``-th odd raising operator, inverse to :func:`odd_f`."""
    if not 1 <= k <= graph.n - 1:
        raise IndexOutOfRange(f"odd index {k} outside 1..{graph.n - 1}")
    word = odd_word(k)
    moved = apply_weyl_word(graph, vid, word)
    raised = graph.in_edge(moved, 0)
    if raised is None:
        return None
    return apply_weyl_word(graph, raised, tuple(reversed(word)))


def queer_highest_weights(graph: CrystalGraph) -> list[str]:
    """Vertices annihilated by every even and every odd raising operator.

    A vertex qualifies when it has no incoming even-colored edge and, for
    each ``k``, the ``k``-th reflection word sends it to a vertex with no
    incoming 0-edge.

    Raises:
        StringTruncated: A reflection walk left the graph.
    """
    result = []
    for vid in highest_weights(graph, range(1, graph.n)):
        if all(
            graph.in_edge(apply_weyl_word(graph, vid, odd_word(k)), 0) is None
            for k in range(1, graph.n)
        ):
            result.append(vid)
    return result
