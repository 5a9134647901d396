"""Symmetric polynomials from tableau enumerations.

Characters of the tableau families give the two polynomial bases handled
here: ordinary tableaux for ``schur`` and shifted ones for ``schur_p``.
Basis changes are computed combinatorially — the shifted-to-ordinary
expansion by enumerating tableaux with vanishing raising strings, and
products of the shifted basis by counting distinguished sources in a
tensor product of the corresponding graphs.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .errors import DimensionMismatch, ShapeMismatch, ValueOutOfRange
from .graph import tensor_graphs
from .models import queer_graph
from .poly import SparsePolynomial
from .queer import queer_highest_weights
from .shifted import enumerate_yamanouchi
from .tableaux import (
    enumerate_ssht,
    enumerate_ssyt,
    is_partition,
    is_strict_partition,
    weight,
)

Partition = tuple[int, ...]
Expansion = dict[Partition, int]


def _strip(values: Sequence[int]) -> Partition:
    out = list(values)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def schur(shape: Sequence[int], n: int) -> SparsePolynomial:
    """Sum of ``x^weight`` over ordinary tableaux of ``shape`` in 1..n.

    Identically zero when ``shape`` has more than ``n`` rows.

    Raises:
        ShapeMismatch: ``shape`` is not a partition.
        ValueOutOfRange: ``n`` is not positive.
    """
    return SparsePolynomial.from_weights(
        n, (weight(t, n) for t in enumerate_ssyt(shape, n))
    )


def schur_p(shape: Sequence[int], n: int) -> SparsePolynomial:
    """Sum of ``x^weight`` over shifted tableaux of strict ``shape`` in 1..n.

    Raises:
        ShapeMismatch: ``shape`` is not a strict partition.
        ValueOutOfRange: ``n`` is not positive.
    """
    return SparsePolynomial.from_weights(
        n, (weight(t, n) for t in enumerate_ssht(shape, n))
    )


def schur_p_to_schur(shape: Sequence[int], n: int | None = None) -> Expansion:
    """Expand one shifted-basis element over the ordinary basis.

    Coefficients count the tableaux of ``shape`` with vanishing raising
    strings, grouped by weight; every coefficient is a positive integer and
    the weights are partitions of ``sum(shape)``.  The count is complete
    over the full alphabet.  Pass ``n`` to assert the expansion stays
    faithful in ``n`` variables.

    Raises:
        ShapeMismatch: ``shape`` is not a strict partition.
        DimensionMismatch: some term needs more than ``n`` rows, so an
            ``n``-variable rendering would silently drop it.
    """
    shape = tuple(shape)
    if shape and not is_strict_partition(shape):
        raise ShapeMismatch(f"{shape} is not a strict partition")
    alphabet = max(sum(shape), 1)
    counts: Counter[Partition] = Counter()
    for t in enumerate_yamanouchi(shape, alphabet):
        counts[_strip(weight(t, alphabet))] += 1
    if n is not None:
        for lam in counts:
            if len(lam) > n:
                raise DimensionMismatch(
                    f"expansion term {lam} has {len(lam)} rows and cannot be "
                    f"rendered faithfully in {n} variables"
                )
    return dict(counts)


def product_expand(
    gamma: Sequence[int], delta: Sequence[int], n: int
) -> Expansion:
    """Structure constants of a product in the shifted basis.

    Counts the distinguished sources of the tensor product of the two
    graphs built from ``gamma`` and ``delta`` over an ``n``-letter
    alphabet, grouped by weight.  With ``n`` at least ``sum(gamma) +
    sum(delta)`` the counts expand the product completely.

    Raises:
        ShapeMismatch: either shape is not a strict partition.
        ValueOutOfRange: ``n`` is smaller than 2.
    """
    for shape in (gamma, delta):
        if not is_strict_partition(tuple(shape)):
            raise ShapeMismatch(f"{tuple(shape)} is not a strict partition")
    left = queer_graph(gamma, n)
    right = queer_graph(delta, n)
    product = tensor_graphs(left, right, queer=True)
    counts: Counter[Partition] = Counter()
    for vid in queer_highest_weights(product):
        counts[_strip(product.weight_of(vid))] += 1
    return dict(counts)


def is_staircase(shape: Sequence[int]) -> bool:
    """True iff ``shape`` is ``(k, k-1, ..., 2, 1)`` for some ``k >= 0``."""
    shape = tuple(shape)
    return shape == tuple(range(len(shape), 0, -1))


def staircase_check(k: int, n: int) -> bool:
    """Whether the staircase shape ``(k-1, ..., 1)`` has equal characters.

    Compares the shifted-basis and ordinary-basis polynomials for the
    staircase in ``n`` variables.

    Raises:
        ValueOutOfRange: ``k`` is smaller than 2, or ``n`` is not positive.
    """
    if k < 2:
        raise ValueOutOfRange(f"staircase comparison needs k >= 2, got {k}")
    gamma = tuple(range(k - 1, 0, -1))
    return schur_p(gamma, n) == schur(gamma, n)


def render_expansion(expansion: Expansion, basis: str = "s") -> str:
    """Render ``{partition: coefficient}`` as e.g. ``"s[3,1] + 2*s[2,2]"``.

    Terms are ordered by decreasing partition in lexicographic order; a unit
    coefficient is left implicit; an empty expansion renders as ``"0"``.
    """
    if not expansion:
        return "0"
    parts = []
    for lam in sorted(expansion, reverse=True):
        coefficient = expansion[lam]
        body = f"{basis}[{','.join(str(p) for p in lam)}]"
        parts.append(body if coefficient == 1 else f"{coefficient}*{body}")
    return " + ".join(parts)
