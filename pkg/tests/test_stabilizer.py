"""Column/row stabilizer words and the three-letter variant."""

import random

import pytest

from extsquare import generate, indexing, matrices, plucker, rings, stabilizer
from extsquare.words import ExtWord


def _random_vector(n, ring, rng):
    return plucker.PairVector(
        n, ring, [ring.random(rng) for _ in range(indexing.dim(n))]
    )


def test_column_word_expansion_matches_display():
    # n = 5, j = 5: the word expands into twelve elementary transvections
    # with a fixed sign pattern on the pair labels
    names = tuple(f"w{a}{b}" for a, b in indexing.pairs(5))
    ring = rings.PolynomialRing(names)
    w = plucker.PairVector(5, ring, tuple(ring.var(v) for v in names))
    word = stabilizer.column_stabilizer(5, w)
    assert len(word) == 4
    expansion = word.expand()
    assert len(expansion) == 12

    def v(a, b):
        return w.at((a, b))

    expected = (
        ((1, 2), (2, 5), ring.neg(v(1, 5))),
        ((1, 3), (3, 5), ring.neg(v(1, 5))),
        ((1, 4), (4, 5), ring.neg(v(1, 5))),
        ((1, 2), (1, 5), v(2, 5)),
        ((2, 3), (3, 5), ring.neg(v(2, 5))),
        ((2, 4), (4, 5), ring.neg(v(2, 5))),
        ((1, 3), (1, 5), v(3, 5)),
        ((2, 3), (2, 5), v(3, 5)),
        ((3, 4), (4, 5), ring.neg(v(3, 5))),
        ((1, 4), (1, 5), v(4, 5)),
        ((2, 4), (2, 5), v(4, 5)),
        ((3, 4), (3, 5), v(4, 5)),
    )
    assert expansion.letters == expected


def test_increment_coefficient_patterns():
    # the two coefficient products per ordering of (p, q, j); each pair sums
    # to zero
    cases = {
        (1, 2, 3): (-1, 1),  # p < q < j
        (1, 3, 2): (1, -1),  # p < j < q
        (2, 3, 1): (-1, 1),  # j < p < q
        (3, 2, 1): (1, -1),  # j < q < p
        (3, 1, 2): (-1, 1),  # q < j < p
        (2, 1, 3): (1, -1),  # q < p < j
    }
    for (p, q, j), (c1, c2) in cases.items():
        s1 = indexing.sign(p, q) * indexing.sign(j, q) * indexing.sign(p, j)
        s2 = indexing.sign(q, p) * indexing.sign(j, p) * indexing.sign(q, j)
        assert (s1, s2) == (c1, c2)
        assert s1 + s2 == 0


def test_increment_vanishes_symbolically():
    names = tuple(f"w{a}{b}" for a, b in indexing.pairs(4))
    ring = rings.PolynomialRing(names)
    w = plucker.PairVector(4, ring, tuple(ring.var(v) for v in names))
    for p in range(1, 5):
        for q in range(1, 5):
            for j in range(1, 5):
                if len({p, q, j}) == 3:
                    assert ring.is_zero(stabilizer.pair_increment(p, q, j, w))
    with pytest.raises(ValueError):
        stabilizer.pair_increment(1, 1, 2, w)


def test_column_stabilizer_fixes_random_vectors(zmod97):
    rng = random.Random(40)
    for n in range(3, 8):
        for _ in range(20):
            w = _random_vector(n, zmod97, rng)
            j = rng.randrange(1, n + 1)
            word = stabilizer.column_stabilizer(j, w)
            assert matrices.mat_vec(word.eval(zmod97).fwd, w.entries) == w.entries


def test_column_stabilizer_zero_vector(zmod97):
    w = plucker.PairVector.zero(5, zmod97)
    word = stabilizer.column_stabilizer(2, w)
    assert all(zmod97.is_zero(arg) for _, _, arg in word.letters)
    assert word.eval(zmod97).fwd.is_identity()


def test_row_stabilizer_fixes_random_rows(zmod97):
    rng = random.Random(41)
    for n in range(3, 8):
        for _ in range(20):
            z = _random_vector(n, zmod97, rng)
            i = rng.randrange(1, n + 1)
            word = stabilizer.row_stabilizer(i, z)
            assert matrices.vec_mat(z.entries, word.eval(zmod97).fwd) == z.entries


def test_plucker_stabilizer_fixes_compound_columns(zmod97):
    rng = random.Random(42)
    for n in (5, 6, 7):
        for _ in range(10):
            m = generate.compound_of_random(n, zmod97, 12, rng).fwd
            pair = rng.choice(indexing.pairs(n))
            w = plucker.PairVector.column_of(m, n, pair)
            word = stabilizer.plucker_stabilizer(w)
            assert len(word) == 3
            assert matrices.mat_vec(word.eval(zmod97).fwd, w.entries) == w.entries


def test_plucker_stabilizer_trivial_arguments(zmod97):
    w = plucker.PairVector.basis(5, zmod97, (1, 2))
    word = stabilizer.plucker_stabilizer(w)
    assert all(zmod97.is_zero(arg) for _, _, arg in word.letters)
    assert matrices.mat_vec(word.eval(zmod97).fwd, w.entries) == w.entries


def test_plucker_stabilizer_preconditions(zmod97):
    with pytest.raises(ValueError, match="rank too small"):
        stabilizer.plucker_stabilizer(plucker.PairVector.zero(4, zmod97))
    bad_entries = [0] * indexing.dim(5)
    bad_entries[indexing.rank((1, 2), 5)] = 1
    bad_entries[indexing.rank((3, 4), 5)] = 1
    bad = plucker.PairVector(5, zmod97, bad_entries)
    with pytest.raises(ValueError, match="not a compound-matrix column"):
        stabilizer.plucker_stabilizer(bad)


def test_plucker_stabilizer_residual_is_short_relation(zmod97):
    # on a vector violating the relations, the three-letter word shifts each
    # coordinate {2, i} by the matching signed relation value and fixes the rest
    rng = random.Random(43)
    n = 6
    for _ in range(20):
        w = _random_vector(n, zmod97, rng)
        word = ExtWord(
            n,
            (
                (2, 3, w.at((4, 5))),
                (2, 4, zmod97.neg(w.at((3, 5)))),
                (2, 5, w.at((3, 4))),
            ),
        )
        moved = matrices.mat_vec(word.eval(zmod97).fwd, w.entries)
        for idx, pair in enumerate(indexing.pairs(n)):
            residual = zmod97.sub(moved[idx], w.entries[idx])
            if 2 not in pair:
                assert zmod97.is_zero(residual)
                continue
            i = pair[0] if pair[1] == 2 else pair[1]
            f = plucker.plucker_poly(i, (3, 4, 5), w)
            if indexing.sign(2, i) == -1:
                f = zmod97.neg(f)
            assert residual == f
