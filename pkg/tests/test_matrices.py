"""Exact matrix algebra and certified inverse pairs."""

import random

import pytest

from extsquare import generate, matrices, rings


def _random_matrix(ring, dim, rng):
    return matrices.Matrix(
        ring, [[ring.random(rng) for _ in range(dim)] for _ in range(dim)]
    )


def test_identity_law(zmod97):
    rng = random.Random(0)
    m = _random_matrix(zmod97, 4, rng)
    e = matrices.identity(zmod97, 4)
    assert e.mul(m) == m
    assert m.mul(e) == m


def test_eq_reflexive(zmod97):
    m = _random_matrix(zmod97, 3, random.Random(1))
    assert m == m


def test_associativity_random():
    ring = rings.ModularRing(7)
    rng = random.Random(2)
    for _ in range(25):
        a, b, c = (_random_matrix(ring, 4, rng) for _ in range(3))
        assert a.mul(b).mul(c) == a.mul(b.mul(c))


def test_associativity_poly():
    ring = rings.PolynomialRing(("a", "b"))
    rng = random.Random(3)
    for _ in range(5):
        a, b, c = (_random_matrix(ring, 3, rng) for _ in range(3))
        assert a.mul(b).mul(c) == a.mul(b.mul(c))


def test_dimension_and_ring_mismatch(zmod97):
    a = matrices.identity(zmod97, 3)
    b = matrices.identity(zmod97, 4)
    with pytest.raises(ValueError):
        a.mul(b)
    c = matrices.identity(rings.ModularRing(5), 3)
    with pytest.raises(rings.RingMismatchError):
        a.mul(c)


def test_invpair_certification(zmod97):
    e = matrices.identity(zmod97, 3)
    m = matrices.transvection(zmod97, 3, 1, 2, 5)
    with pytest.raises(ValueError):
        matrices.InvPair(m, m)  # m is not its own inverse
    p = matrices.InvPair(e, e)
    assert p.invert() == p


def test_pair_compose_and_invert(zmod97):
    rng = random.Random(4)
    p = generate.source_pair(4, zmod97, 12, rng)
    q = generate.source_pair(4, zmod97, 12, rng)
    e = matrices.identity_pair(zmod97, 4)
    assert p.compose(p.invert()) == e
    assert p.invert().invert() == p
    composed = p.compose(q)
    assert composed.fwd == p.fwd.mul(q.fwd)
    assert composed.bwd.mul(composed.fwd).is_identity()


def test_transvection_pair_product(zmod97):
    a = matrices.transvection_pair(zmod97, 4, 1, 2, 3)
    b = matrices.transvection_pair(zmod97, 4, 3, 4, 9)
    assert a.compose(b).fwd == a.fwd.mul(b.fwd)


def test_conjugation_inverse_relations(zmod97):
    rng = random.Random(5)
    x = generate.source_pair(4, zmod97, 10, rng)
    y = generate.source_pair(4, zmod97, 10, rng)
    left = matrices.conjugate(y, x, "left")
    assert matrices.conjugate(left, x, "right") == y
    with pytest.raises(ValueError):
        matrices.conjugate(y, x, "sideways")


def test_commutator_with_identity(zmod97):
    x = generate.source_pair(4, zmod97, 10, random.Random(6))
    e = matrices.identity_pair(zmod97, 4)
    assert matrices.commutator(x, e) == e
    assert matrices.commutator(e, x) == e


def test_chevalley_example_symbolic():
    ring = rings.PolynomialRing(("xi", "zeta"))
    xi, zeta = ring.var("xi"), ring.var("zeta")
    x = matrices.transvection_pair(ring, 3, 1, 2, xi)
    y = matrices.transvection_pair(ring, 3, 2, 3, zeta)
    expected = matrices.transvection(ring, 3, 1, 3, ring.mul(xi, zeta))
    assert matrices.commutator(x, y).fwd == expected


def test_shifted_commutator_identity(zmod97):
    # [xy, z]^x == [y, z] [z, x^-1] for random invertible triples
    rng = random.Random(7)
    e = matrices.identity_pair(zmod97, 4)
    for _ in range(200):
        x, y, z = (generate.source_pair(4, zmod97, 8, rng) for _ in range(3))
        lhs = matrices.conjugate(matrices.commutator(x.compose(y), z), x, "right")
        rhs = matrices.commutator(y, z).compose(matrices.commutator(z, x.invert()))
        assert lhs == rhs
    assert matrices.conjugate(e, e, "right") == e


def test_mat_vec_and_vec_mat(zmod97):
    m = matrices.transvection(zmod97, 3, 1, 3, 2)
    assert matrices.mat_vec(m, (1, 1, 1)) == (3, 1, 1)
    assert matrices.vec_mat((1, 1, 1), m) == (1, 1, 3)


def test_scalar_and_is_scalar(zmod97):
    s = matrices.scalar_matrix(zmod97, 4, 5)
    assert s.is_scalar()
    assert not s.is_identity()
    assert matrices.identity(zmod97, 4).is_scalar()
    assert not matrices.transvection(zmod97, 4, 1, 2, 1).is_scalar()


def test_debug_flag_reverifies_compositions(zmod97, monkeypatch):
    monkeypatch.setattr(matrices, "VERIFY_PRODUCTS", True)
    rng = random.Random(8)
    p = generate.source_pair(4, zmod97, 10, rng)
    q = generate.source_pair(4, zmod97, 10, rng)
    assert p.compose(q).fwd == p.fwd.mul(q.fwd)
    bad_fwd = matrices.transvection(zmod97, 4, 1, 2, 1)
    with pytest.raises(ValueError):
        matrices.InvPair._trusted(bad_fwd, bad_fwd)
