"""Compound map, transvection expansions, monomial elements, routing."""

import random

import pytest

from extsquare import exterior, generate, indexing, matrices, rings
from extsquare.words import ext_letter_matrix


def test_compound_of_identity(zmod97):
    e = matrices.identity(zmod97, 5)
    assert exterior.cauchy_binet(e, 5) == matrices.identity(zmod97, 10)


def test_compound_of_diagonal():
    ring = rings.PolynomialRing(("a", "b", "c"))
    a, b, c = (ring.var(v) for v in "abc")
    x = matrices.Matrix(
        ring,
        [
            [a, ring.zero, ring.zero],
            [ring.zero, b, ring.zero],
            [ring.zero, ring.zero, c],
        ],
    )
    m = exterior.cauchy_binet(x, 3)
    assert m.at(0, 0) == ring.mul(a, b)
    assert m.at(1, 1) == ring.mul(a, c)
    assert m.at(2, 2) == ring.mul(b, c)
    for r in range(3):
        for c_ in range(3):
            if r != c_:
                assert m.at(r, c_) == ring.zero


def test_compound_is_multiplicative(zmod97):
    rng = random.Random(20)
    for _ in range(30):
        x = generate.source_pair(4, zmod97, 10, rng).fwd
        y = generate.source_pair(4, zmod97, 10, rng).fwd
        lhs = exterior.cauchy_binet(x.mul(y), 4)
        rhs = exterior.cauchy_binet(x, 4).mul(exterior.cauchy_binet(y, 4))
        assert lhs == rhs


def test_compound_rejects_small_rank(zmod97):
    with pytest.raises(ValueError):
        exterior.cauchy_binet(matrices.identity(zmod97, 2), 2)


def test_expansion_letters_worked_example(poly_xi):
    xi = poly_xi.var("xi")
    word = exterior.ext_transvection(1, 3, xi, 5)
    assert word.letters == (
        ((1, 2), (2, 3), poly_xi.neg(xi)),
        ((1, 4), (3, 4), xi),
        ((1, 5), (3, 5), xi),
    )


def test_expansion_length_and_oracle_ascending(poly_xi):
    xi = poly_xi.var("xi")
    word = exterior.ext_transvection(2, 3, xi, 4)
    assert len(word) == 2
    oracle = exterior.cauchy_binet(matrices.transvection(poly_xi, 4, 2, 3, xi), 4)
    assert word.eval(poly_xi).fwd == oracle


def test_expansion_oracle_descending(poly_xi):
    xi = poly_xi.var("xi")
    word = exterior.ext_transvection(3, 1, xi, 4)
    oracle = exterior.cauchy_binet(matrices.transvection(poly_xi, 4, 3, 1, xi), 4)
    assert word.eval(poly_xi).fwd == oracle


def test_letter_matrix_matches_oracle_everywhere(poly_xi):
    xi = poly_xi.var("xi")
    for n in (3, 4, 5):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                oracle = exterior.cauchy_binet(
                    matrices.transvection(poly_xi, n, i, j, xi), n
                )
                assert ext_letter_matrix(poly_xi, n, i, j, xi) == oracle


def test_p_element_is_signed_permutation(integers):
    for i, j in ((1, 2), (3, 1), (2, 4)):
        m = exterior.p_element(i, j, 4).eval(integers).fwd
        for r in range(m.dim):
            nonzero = [m.at(r, c) for c in range(m.dim) if m.at(r, c) != 0]
            assert len(nonzero) == 1 and nonzero[0] in (1, -1)
        for c in range(m.dim):
            nonzero = [m.at(r, c) for r in range(m.dim) if m.at(r, c) != 0]
            assert len(nonzero) == 1 and nonzero[0] in (1, -1)


def test_monomial_row_and_column_moves(poly_xi):
    xi = poly_xi.var("xi")
    n = 5
    for (i, j, k) in ((1, 2, 3), (2, 3, 5), (4, 2, 1)):
        t = ext_letter_matrix(poly_xi, n, i, j, xi)
        p_ki = exterior.p_element(k, i, n).eval(poly_xi)
        assert p_ki.fwd.mul(t).mul(p_ki.bwd) == ext_letter_matrix(poly_xi, n, k, j, xi)
        p_kj = exterior.p_element(k, j, n).eval(poly_xi)
        assert p_kj.fwd.mul(t).mul(p_kj.bwd) == ext_letter_matrix(poly_xi, n, i, k, xi)


def test_route_target_shapes():
    n = 5
    assert len(exterior.route_target(2, 3, n)) == 0
    assert exterior.route_target(4, 3, n) == exterior.p_element(4, 2, n)
    assert len(exterior.route_target(1, 4, n)) == 6
    # the double collision (3, 2) is the one case needing three moves
    assert len(exterior.route_target(3, 2, n)) == 9


def test_route_target_moves_letters(zmod97):
    n = 4
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            if k == l:
                continue
            w = exterior.route_target(k, l, n).eval(zmod97)
            moved = w.fwd.mul(ext_letter_matrix(zmod97, n, 2, 3, 7)).mul(w.bwd)
            assert moved == ext_letter_matrix(zmod97, n, k, l, 7)


def test_route_source_trivial_case():
    word, s = exterior.route_source((1, 3), (1, 2), 5)
    assert len(word) == 0 and s == 1


def test_route_source_requires_height_one():
    with pytest.raises(ValueError):
        exterior.route_source((1, 2), (3, 4), 5)


def test_route_source_places_entry(zmod97):
    rng = random.Random(21)
    n = 5
    r13 = indexing.rank((1, 3), n)
    r12 = indexing.rank((1, 2), n)
    for I in indexing.pairs(n):
        for J in indexing.pairs(n):
            if indexing.height(I, J) != 1 or I == J:
                continue
            word, s = exterior.route_source(I, J, n)
            g = generate.compound_of_random(n, zmod97, 12, rng)
            w = word.eval(zmod97)
            routed = w.fwd.mul(g.fwd).mul(w.bwd)
            expected = g.fwd.at(indexing.rank(I, n), indexing.rank(J, n))
            got = routed.at(r13, r12)
            assert got == (expected if s == 1 else zmod97.neg(expected))


def test_compound_pair_certifies(zmod97):
    x = generate.source_pair(5, zmod97, 10, random.Random(22))
    p = exterior.compound_pair(x, 5)
    assert p.fwd.mul(p.bwd).is_identity()
