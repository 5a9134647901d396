"""Acceptance gate: one test per shipped guarantee, run with ``pytest -v``.

Each test below encodes one external acceptance criterion at full stated
range and zero tolerance, so the verbose report reads as a pass/fail line
per criterion:

 1. the ordinary character of shape (3,1) on three letters, exactly,
 2. the shifted character and the 24-element enumeration for the same shape,
 3. the shifted-to-ordinary expansions for (3,1) and (4,3,1) with exact
    polynomial reconstruction,
 4. the six zero-raising fillings of shape (4,3,1) on four letters,
 5. the even-axiom checker passes every shifted crystal with |shape| <= 8,
    n <= 5 and every unshifted crystal with |shape| <= 6, n <= 4,
 6. raising inverts lowering edge-by-edge over that whole range, and word
    statistics equal operator-walk counts at every vertex,
 7. every queer crystal with |shape| <= 7, n <= 5 is connected, passes the
    queer and two-color component checkers, and has a unique odd-family
    source sitting at the shape weight,
 8. tensor squares of the three-letter chains decompose as expected and
    characters multiply across ten seeded random tensor pairs,
 9. product expansions with |left| + |right| <= 6 have positive integer
    coefficients, reconstruct the product exactly, and match a greedy
    leading-term oracle,
10. the two staircase coincidences hold for n <= 5 and every non-staircase
    strict shape with |shape| <= 7 has at least two zero-raising fillings,
11. the constructed degree-3 queer crystals match the hand-assembled
    reference graphs up to rooted colored isomorphism,
12. deleting any single edge or bumping any single weight coordinate in
    either transcribed reference crystal trips the corresponding checker.
"""

from __future__ import annotations

import functools
import random

from crystals import (
    CrystalGraph,
    SparsePolynomial,
    character,
    check_01_components,
    check_02_components,
    check_queer_regular,
    check_stembridge,
    components,
    enumerate_ssht,
    enumerate_yamanouchi,
    highest_weights,
    is_staircase,
    isomorphic,
    parse_shifted,
    parse_young,
    product_expand,
    queer_graph,
    queer_highest_weights,
    render_tableau,
    schur,
    schur_p,
    schur_p_to_schur,
    shifted_graph,
    staircase_check,
    standard_graph,
    tensor_graphs,
    young_graph,
)
from crystals.graph import Vertex
from crystals.shifted import eps as shifted_eps
from crystals.shifted import lower as shifted_lower
from crystals.shifted import phi as shifted_phi
from crystals.shifted import raise_ as shifted_raise
from crystals.young import eps as young_eps
from crystals.young import lower as young_lower
from crystals.young import phi as young_phi
from crystals.young import raise_ as young_raise
from oracles import (
    apply_until_none,
    greedy_p_expansion,
    partitions,
    strict_partitions,
)
from reference_data import (
    P31_EXPANSION,
    P431_EXPANSION,
    QUEER31_01_SHAPES,
    QUEER31_02_SHAPES,
    SCHUR31_COEFFS,
    SCHUR_P31_COEFFS,
    SHIFTED31_NODES,
    YAM431_TABLEAUX,
    queer21_reference,
    queer31_graph,
    queer3_reference,
    shifted31_graph,
)

# -- shared sweeps, built once and reused across criteria --------------------


@functools.lru_cache(maxsize=None)
def _shifted_case(shape: tuple[int, ...], n: int) -> CrystalGraph:
    return shifted_graph(shape, n)


@functools.lru_cache(maxsize=None)
def _young_case(shape: tuple[int, ...], n: int) -> CrystalGraph:
    return young_graph(shape, n)


def shifted_cases():
    for total in range(1, 9):
        for shape in strict_partitions(total):
            for n in range(1, 6):
                yield shape, n, _shifted_case(shape, n)


def young_cases():
    for total in range(1, 7):
        for shape in partitions(total):
            for n in range(1, 5):
                yield shape, n, _young_case(shape, n)


def _coefficients(poly: SparsePolynomial) -> dict:
    return {m: c for m, c in poly.sorted_terms() if c}


# -- criteria -----------------------------------------------------------------


def test_01_ordinary_character_of_31_is_exact():
    poly = schur((3, 1), 3)
    got = _coefficients(poly)
    assert got == SCHUR31_COEFFS
    assert len(got) == 12
    assert set(got.values()) == {1, 2}


def test_02_shifted_character_and_enumeration_of_31_are_exact():
    assert _coefficients(schur_p((3, 1), 3)) == SCHUR_P31_COEFFS
    rendered = {render_tableau(t) for t in enumerate_ssht((3, 1), 3)}
    assert len(rendered) == 24
    assert rendered == set(SHIFTED31_NODES.values())


def test_03_expansions_into_the_ordinary_basis_reconstruct_exactly():
    for shape, expected, n in [
        ((3, 1), P31_EXPANSION, 3),
        ((4, 3, 1), P431_EXPANSION, 4),
    ]:
        expansion = schur_p_to_schur(shape)
        assert expansion == expected
        rebuilt = SparsePolynomial.zero(n)
        for lam, coeff in expansion.items():
            rebuilt = rebuilt + schur(lam, n) * coeff
        assert rebuilt == schur_p(shape, n)


def test_04_zero_raising_fillings_of_431_match_verbatim():
    got = [render_tableau(t) for t in enumerate_yamanouchi((4, 3, 1), 4)]
    assert len(got) == 6
    assert set(got) == set(YAM431_TABLEAUX)


def test_05_even_axioms_hold_across_the_full_sweep():
    for shape, n, graph in shifted_cases():
        verdict = check_stembridge(graph)
        assert verdict.ok, (shape, n, verdict.violations[:3])
    for shape, n, graph in young_cases():
        verdict = check_stembridge(graph)
        assert verdict.ok, (shape, n, verdict.violations[:3])


def test_06_raising_inverts_lowering_and_walks_match_statistics():
    for parse, lower, raise_, phi, eps, cases in [
        (
            parse_shifted,
            shifted_lower,
            shifted_raise,
            shifted_phi,
            shifted_eps,
            shifted_cases(),
        ),
        (
            parse_young,
            young_lower,
            young_raise,
            young_phi,
            young_eps,
            young_cases(),
        ),
    ]:
        for shape, n, graph in cases:
            fillings = {
                vid: parse(graph.payload_of(vid)) for vid in graph.vertex_ids
            }
            for src, color, dst in graph.edges:
                assert lower(fillings[src], color) == fillings[dst]
                assert raise_(fillings[dst], color) == fillings[src]
            for vid, t in fillings.items():
                for i in range(1, n):
                    assert phi(t, i) == apply_until_none(t, lower, i), (shape, n)
                    assert eps(t, i) == apply_until_none(t, raise_, i), (shape, n)


def test_07_queer_crystals_are_connected_regular_and_single_sourced():
    for total in range(1, 8):
        for shape in strict_partitions(total):
            for n in range(max(2, len(shape)), 6):
                graph = queer_graph(shape, n)
                assert len(components(graph)) == 1, (shape, n)
                verdict = check_queer_regular(graph)
                assert verdict.ok, (shape, n, verdict.violations[:3])
                assert check_01_components(graph).ok, (shape, n)
                assert check_02_components(graph).ok, (shape, n)
                tops = queer_highest_weights(graph)
                padded = tuple(shape) + (0,) * (n - len(shape))
                assert len(tops) == 1, (shape, n, tops)
                assert graph.weight_of(tops[0]) == padded, (shape, n)


def test_08_tensor_squares_decompose_and_characters_multiply():
    plain = tensor_graphs(standard_graph(3), standard_graph(3))
    tops = {plain.weight_of(v) for v in highest_weights(plain)}
    assert tops == {(2, 0, 0), (1, 1, 0)}

    queer_square = tensor_graphs(
        queer_graph((1,), 3), queer_graph((1,), 3), queer=True
    )
    parts = components(queer_square)
    assert len(parts) == 1 and len(parts[0]) == 9
    tops = queer_highest_weights(queer_square)
    assert len(tops) == 1
    assert queer_square.weight_of(tops[0]) == (2, 0, 0)

    rng = random.Random(8)
    pool = [
        standard_graph(3),
        young_graph((2,), 3),
        young_graph((1, 1), 3),
        young_graph((2, 1), 3),
        shifted_graph((2,), 3),
        shifted_graph((2, 1), 3),
        queer_graph((1,), 3),
        queer_graph((2, 1), 3),
    ]
    for _ in range(10):
        left, right = rng.choice(pool), rng.choice(pool)
        product = tensor_graphs(left, right)
        assert character(product) == character(left) * character(right)


def test_09_product_expansions_reconstruct_and_match_the_oracle():
    for left_total in range(1, 6):
        for right_total in range(1, 7 - left_total):
            n = left_total + right_total
            for gamma in strict_partitions(left_total):
                for delta in strict_partitions(right_total):
                    expansion = product_expand(gamma, delta, n)
                    assert expansion, (gamma, delta)
                    assert all(
                        isinstance(c, int) and c > 0 for c in expansion.values()
                    ), (gamma, delta)
                    product = schur_p(gamma, n) * schur_p(delta, n)
                    rebuilt = SparsePolynomial.zero(n)
                    for shape, coeff in expansion.items():
                        rebuilt = rebuilt + schur_p(shape, n) * coeff
                    assert rebuilt == product, (gamma, delta)
                    assert expansion == greedy_p_expansion(product), (gamma, delta)


def test_10_staircases_coincide_and_everything_else_splits():
    for n in range(1, 6):
        assert staircase_check(3, n)
        assert staircase_check(4, n)
    for total in range(1, 8):
        for shape in strict_partitions(total):
            if is_staircase(shape):
                continue
            count = len(enumerate_yamanouchi(shape, sum(shape)))
            assert count >= 2, (shape, count)


def test_11_degree_three_queer_crystals_match_reference_graphs():
    assert isomorphic(queer_graph((2, 1), 3), queer21_reference())
    assert isomorphic(queer_graph((3,), 3), queer3_reference())


def _edge_deletions(graph: CrystalGraph):
    vertices = [Vertex(v, v, graph.weight_of(v)) for v in graph.vertex_ids]
    for k in range(len(graph.edges)):
        yield CrystalGraph(
            graph.n, vertices, graph.edges[:k] + graph.edges[k + 1 :]
        )


def _weight_bumps(graph: CrystalGraph):
    for vid in graph.vertex_ids:
        for coord in range(graph.n):
            yield CrystalGraph(
                graph.n,
                [
                    Vertex(
                        v,
                        v,
                        tuple(
                            w + (1 if (v == vid and k == coord) else 0)
                            for k, w in enumerate(graph.weight_of(v))
                        ),
                    )
                    for v in graph.vertex_ids
                ],
                graph.edges,
            )


def test_12_single_mutations_never_escape_the_checkers():
    shifted = shifted31_graph()
    mutants = 0
    for mutant in list(_edge_deletions(shifted)) + list(_weight_bumps(shifted)):
        assert not check_stembridge(mutant, exhaustive=False).ok
        mutants += 1
    assert mutants == len(shifted.edges) + len(shifted) * shifted.n

    queer = queer31_graph()
    mutants = 0
    for mutant in list(_edge_deletions(queer)) + list(_weight_bumps(queer)):
        caught = not check_queer_regular(mutant, exhaustive=False).ok
        if not caught:
            caught = (
                not check_01_components(mutant).ok
                or not check_02_components(mutant).ok
            )
        assert caught
        mutants += 1
    assert mutants == len(queer.edges) + len(queer) * queer.n
