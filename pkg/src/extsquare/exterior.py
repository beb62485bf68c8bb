"""The second compound (Cauchy-Binet) map and its transvection calculus.

cauchy_binet sends an n x n matrix to the C(n,2) x C(n,2) matrix of its
2 x 2 minors.  ext_transvection expands the compound image of a single
elementary transvection into explicit elementary transvections of the
pair-indexed group; the expansion is checked against the minor matrix at
construction time, so the two routes can never drift apart silently.

p_element builds the monomial (signed permutation) words used to reroute a
transvection from one index position to another, and route_source /
route_target build the full conjugation words needed by the decomposition
engine.  Routes are verified when first constructed and then cached.
"""

from __future__ import annotations

from functools import lru_cache

from . import indexing, matrices, rings
from .words import ExtWord, PairWord, ext_letter_matrix


def cauchy_binet(x: matrices.Matrix, n: int) -> matrices.Matrix:
    """Matrix of 2 x 2 minors, rows and columns in lexicographic pair order."""
    if n < 3:
        raise ValueError("rank too small")
    if x.dim != n:
        raise ValueError("dimension mismatch")
    ring = x.ring
    ps = indexing.pairs(n)
    out = []
    for i1, i2 in ps:
        row = []
        for j1, j2 in ps:
            a = ring.mul(x.at(i1 - 1, j1 - 1), x.at(i2 - 1, j2 - 1))
            b = ring.mul(x.at(i1 - 1, j2 - 1), x.at(i2 - 1, j1 - 1))
            row.append(ring.sub(a, b))
        out.append(row)
    return matrices.Matrix(ring, out)


def compound_pair(x: matrices.InvPair, n: int) -> matrices.InvPair:
    """Compound image of a certified pair; re-certified at construction."""
    return matrices.InvPair(cauchy_binet(x.fwd, n), cauchy_binet(x.bwd, n))


def ext_transvection(i: int, j: int, payload, n: int) -> PairWord:
    """Expansion of the compound image of t_{i,j}(xi) into n-2 letters.

    For every a outside {i, j} the word carries one letter at position
    (row {a,i}, column {a,j}) with argument sign(a,i) * sign(a,j) * xi; the
    positions do not interact, so any letter order yields the same product.
    For i < j this is the familiar three-block form (k < i, i < l < j,
    m > j); the i > j word uses the identical sign rule and is certified
    against the minor-matrix oracle below.
    """
    if n < 3:
        raise ValueError("rank too small")
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("bad index")
    if isinstance(payload, rings.RingElement):
        payload = payload.payload
    letters = []
    for a in range(1, n + 1):
        if a == i or a == j:
            continue
        row, si = indexing.canon(a, i)
        col, sj = indexing.canon(a, j)
        letters.append((row, col, payload if si * sj == 1 else _neg(payload)))
    word = PairWord(n, letters)
    _certify_expansion(i, j, n)
    return word


def _neg(payload):
    # payloads here are either python ints (int / zmod handled by canon later)
    # or polynomial tuples; negation is ring independent in both encodings.
    if isinstance(payload, int):
        return -payload
    return tuple((exps, -coeff) for exps, coeff in payload)


@lru_cache(maxsize=None)
def _probe_ring():
    return rings.PolynomialRing(("x",))


@lru_cache(maxsize=None)
def _certify_expansion(i: int, j: int, n: int) -> bool:
    """One-time symbolic check: expansion product equals the minor matrix."""
    ring = _probe_ring()
    xi = ring.var("x")
    letters = []
    for a in range(1, n + 1):
        if a == i or a == j:
            continue
        row, si = indexing.canon(a, i)
        col, sj = indexing.canon(a, j)
        letters.append((row, col, xi if si * sj == 1 else ring.neg(xi)))
    word = PairWord(n, letters)
    oracle = cauchy_binet(matrices.transvection(ring, n, i, j, xi), n)
    if word.eval(ring).fwd != oracle:
        raise AssertionError(
            f"transvection expansion ({i},{j}) disagrees with the minor matrix"
        )
    return True


def p_element(i: int, j: int, n: int) -> ExtWord:
    """Three-letter monomial word: compound of t_{i,j}(1) t_{j,i}(-1) t_{i,j}(1).

    Its source matrix sends e_i to -e_j and e_j to e_i, fixing the rest, so
    conjugation by it acts as a signed transposition on index positions.
    """
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("bad index")
    return ExtWord(n, ((i, j, 1), (j, i, -1), (i, j, 1)))


def _row_move(i: int, j: int, k: int, n: int) -> ExtWord:
    # conjugating by p_element(k, i) moves a transvection at (i, j) to (k, j)
    return p_element(k, i, n)


def _col_move(i: int, j: int, k: int, n: int) -> ExtWord:
    # conjugating by p_element(k, j) moves a transvection at (i, j) to (i, k)
    return p_element(k, j, n)


@lru_cache(maxsize=None)
def route_target(k: int, l: int, n: int) -> ExtWord:
    """Word w with w (ext t_{2,3}(xi)) w^-1 = ext t_{k,l}(xi), sign-exact.

    Built from monomial moves that change one index at a time to a value
    outside the current pair.  Most targets need at most two moves; the
    fully swapped target (3, 2) needs three, going through a spare index.
    The route is certified symbolically once and cached.
    """
    if n < 4:
        raise ValueError("rank too small")
    if k == l or not (1 <= k <= n and 1 <= l <= n):
        raise ValueError("bad index")
    moves = []  # conjugations applied innermost first, as (ExtWord, new (i, j))
    cur = (2, 3)

    def push(word, new):
        moves.append(word)
        return new

    if (k, l) == (2, 3):
        pass
    elif k == 2:
        cur = push(_col_move(2, 3, l, n), (2, l))
    elif l == 3:
        cur = push(_row_move(2, 3, k, n), (k, 3))
    elif k == 3 and l == 2:
        spare = next(m for m in range(1, n + 1) if m not in (2, 3))
        cur = push(_row_move(2, 3, spare, n), (spare, 3))
        cur = push(_col_move(spare, 3, 2, n), (spare, 2))
        cur = push(_row_move(spare, 2, 3, n), (3, 2))
    elif k == 3:
        cur = push(_col_move(2, 3, l, n), (2, l))
        cur = push(_row_move(2, l, 3, n), (3, l))
    elif l == 2:
        cur = push(_row_move(2, 3, k, n), (k, 3))
        cur = push(_col_move(k, 3, 2, n), (k, 2))
    else:
        cur = push(_row_move(2, 3, k, n), (k, 3))
        cur = push(_col_move(k, 3, l, n), (k, l))
    if moves and cur != (k, l):
        raise AssertionError("route construction lost its target")
    word = ExtWord(n)
    for w in moves:
        word = w + word  # later moves conjugate on the outside
    _certify_target_route(word, k, l, n)
    return word


def _certify_target_route(word: ExtWord, k: int, l: int, n: int) -> None:
    ring = _probe_ring()
    xi = ring.var("x")
    w = word.eval(ring)
    moved = w.fwd.mul(ext_letter_matrix(ring, n, 2, 3, xi)).mul(w.bwd)
    if moved != ext_letter_matrix(ring, n, k, l, xi):
        raise AssertionError(f"target route ({k},{l}) failed symbolic check")


@lru_cache(maxsize=None)
def route_source(I, J, n: int):
    """Word w and sign s with (W g W^-1) at ({1,3},{1,2}) = s * g at (I, J).

    I and J must be sorted pairs of height one.  The underlying permutation
    sends the common index to 1, the index only in I to 3 and the index only
    in J to 2, built greedily from at most three transpositions; the sign is
    read off a probe matrix.
    """
    I = tuple(I)
    J = tuple(J)
    if indexing.height(I, J) != 1:
        raise ValueError("height must be one")
    if n < 4:
        raise ValueError("rank too small")
    common = (set(I) & set(J)).pop()
    only_i = (set(I) - set(J)).pop()
    only_j = (set(J) - set(I)).pop()

    perm = {v: v for v in range(1, n + 1)}  # current position of each value

    def transpose(a: int, b: int):
        for v, pos in perm.items():
            if pos == a:
                va = v
            if pos == b:
                vb = v
        perm[va], perm[vb] = b, a

    word = ExtWord(n)
    for value, slot in ((common, 1), (only_i, 3), (only_j, 2)):
        pos = perm[value]
        if pos != slot:
            word = p_element(slot, pos, n) + word
            transpose(pos, slot)
    if not (perm[common] == 1 and perm[only_i] == 3 and perm[only_j] == 2):
        raise AssertionError("source route construction failed")

    ring = rings.IntegerRing()
    N = indexing.dim(n)
    probe_rows = [[0] * N for _ in range(N)]
    probe_rows[indexing.rank(I, n)][indexing.rank(J, n)] = 1
    probe = matrices.Matrix(ring, probe_rows)
    w = word.eval(ring)
    routed = w.fwd.mul(probe).mul(w.bwd)
    s = routed.at(indexing.rank((1, 3), n), indexing.rank((1, 2), n))
    if s not in (1, -1):
        raise AssertionError("source route probe is not a unit")
    return word, s
