"""Short Plucker relations and the compound-group membership criterion.

A vector of length C(n,2) is the coordinate vector of a decomposable
bivector exactly when every short Plucker polynomial vanishes on it; every
column of a compound matrix has this property.  Membership of a whole
N x N matrix in the compound group is decided by the bilinear sums
a^H_{A,C}: they must vanish whenever A and C overlap, and be equal (after
an orientation weight) across all disjoint splittings of a common support.
"""

from __future__ import annotations

from . import indexing, matrices


class PairVector:
    """Length-C(n,2) coordinate vector indexed by two-element subsets of [n]."""

    __slots__ = ("n", "ring", "entries")

    def __init__(self, n: int, ring, entries):
        entries = tuple(ring.coerce(x) for x in entries)
        if len(entries) != indexing.dim(n):
            raise ValueError("dimension mismatch")
        self.n = n
        self.ring = ring
        self.entries = entries

    def at(self, pair):
        return self.entries[indexing.rank(tuple(sorted(pair)), self.n)]

    def signed_at(self, a: int, b: int):
        """Coordinate in antisymmetric labelling: zero when a == b."""
        if a == b:
            return self.ring.zero
        pair, s = indexing.canon(a, b)
        value = self.entries[indexing.rank(pair, self.n)]
        return value if s == 1 else self.ring.neg(value)

    def __eq__(self, other):
        if not isinstance(other, PairVector):
            return NotImplemented
        return (
            self.n == other.n
            and self.ring == other.ring
            and self.entries == other.entries
        )

    @classmethod
    def zero(cls, n: int, ring):
        return cls(n, ring, (ring.zero,) * indexing.dim(n))

    @classmethod
    def basis(cls, n: int, ring, pair):
        entries = [ring.zero] * indexing.dim(n)
        entries[indexing.rank(tuple(sorted(pair)), n)] = ring.one
        return cls(n, ring, entries)

    @classmethod
    def column_of(cls, m: matrices.Matrix, n: int, pair):
        return cls(n, m.ring, m.column(indexing.rank(tuple(sorted(pair)), n)))


def plucker_poly(i: int, J, w: PairVector):
    """Value of the short relation attached to i in [n] and a 3-subset J.

    With J = (j1 < j2 < j3) the relation is the alternating sum over t of
    w_{J \\ j_t} * w_{(j_t, i)}, the second factor in antisymmetric
    labelling.  For i inside J the terms cancel identically and the value
    is zero.
    """
    ring = w.ring
    J = tuple(sorted(J))
    if len(J) != 3 or len(set(J)) != 3:
        raise ValueError("bad index: J must be a 3-subset")
    if not 1 <= i <= w.n:
        raise ValueError("bad index")
    total = ring.zero
    sign = 1
    for t in range(3):
        jt = J[t]
        rest = tuple(x for x in J if x != jt)
        term = ring.mul(w.at(rest), w.signed_at(jt, i))
        total = ring.add(total, term if sign == 1 else ring.neg(term))
        sign = -sign
    return total


def column_satisfies(w: PairVector) -> bool:
    """True when every short Plucker polynomial vanishes on w."""
    ring = w.ring
    for i in range(1, w.n + 1):
        for J in indexing.triples(w.n):
            if not ring.is_zero(plucker_poly(i, J, w)):
                return False
    return True


def a_sum(g: matrices.Matrix, H, A, C, n: int):
    """Bilinear membership sum over the six ordered splittings of H.

    Sum of shuffle_sign(B, D) * g_{B,A} * g_{D,C} over ordered pairs of
    disjoint pairs B, D with union H.
    """
    ring = g.ring
    rA = indexing.rank(tuple(A), n)
    rC = indexing.rank(tuple(C), n)
    total = ring.zero
    for B, D in indexing.splittings(tuple(sorted(H))):
        s = indexing.shuffle_sign(B, D)
        term = ring.mul(
            g.at(indexing.rank(B, n), rA), g.at(indexing.rank(D, n), rC)
        )
        total = ring.add(total, term if s == 1 else ring.neg(term))
    return total


def is_member(g: matrices.Matrix, n: int | None = None) -> bool:
    """Membership of an invertible N x N matrix in the compound group.

    Checks both criterion families exhaustively: a^H_{A,C} = 0 whenever A
    and C intersect, and shuffle_sign(A,C) * a^H_{A,C} constant over the six
    disjoint ordered splittings (A, C) of each 4-subset.  Invertibility of g
    is the caller's responsibility.
    """
    if n is None:
        n = indexing.ambient_rank(g.dim)
    if g.dim != indexing.dim(n):
        raise ValueError("dimension mismatch")
    ring = g.ring
    ps = indexing.pairs(n)
    for H in indexing.quads(n):
        for A in ps:
            for C in ps:
                if set(A) & set(C):
                    if not ring.is_zero(a_sum(g, H, A, C, n)):
                        return False
        for S in indexing.quads(n):
            ref = None
            for A, C in indexing.splittings(S):
                value = a_sum(g, H, A, C, n)
                if indexing.shuffle_sign(A, C) == -1:
                    value = ring.neg(value)
                if ref is None:
                    ref = value
                elif value != ref:
                    return False
    return True


def parabolic_zero_check(g: matrices.Matrix, I, n: int | None = None) -> bool:
    """Zero block forced by a trivial column.

    Requires column I of g to be the standard basis column; then checks
    g_{K,J} = 0 for every K avoiding I entirely and every J meeting I in
    exactly one index.
    """
    if n is None:
        n = indexing.ambient_rank(g.dim)
    ring = g.ring
    I = tuple(sorted(I))
    rI = indexing.rank(I, n)
    col = g.column(rI)
    for r, value in enumerate(col):
        want = ring.one if r == rI else ring.zero
        if value != want:
            raise ValueError("precondition: column is not standard")
    for K in indexing.pairs(n):
        if set(K) & set(I):
            continue
        for J in indexing.pairs(n):
            if indexing.height(I, J) != 1:
                continue
            if not ring.is_zero(g.at(indexing.rank(K, n), indexing.rank(J, n))):
                return False
    return True
