"""Symbolic words in elementary generators.

Three word species appear in the calculus, all immutable and never freely
reduced (letter counts are part of the contract):

* TransvWord  -- a word in plain elementary transvections t_{i,j}(xi) of a
  fixed dimension; used for n x n source matrices.
* PairWord    -- a word in elementary transvections of the C(n,2)-dimensional
  group whose row/column labels are two-element subsets of [n]; this is what
  an exterior transvection expands into.
* ExtWord     -- a word in exterior transvections: each letter (i, j, xi)
  stands for the image of t_{i,j}(xi) under the second compound map, an
  N x N matrix touching n-2 positions.

ConjWord records a product of elementary conjugates h^-1 g^{+-1} h of a fixed
matrix g, with h an ExtWord; its length (number of terms) is the quantity the
decomposition engine counts.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import indexing, matrices


@lru_cache(maxsize=None)
def _letter_support(n: int, i: int, j: int):
    """Index arrays for the positions an exterior letter touches.

    For every a outside {i, j} the letter carries sign(a,i) * sign(a,j) * xi
    at row {a,i}, column {a,j}; the positions are disjoint from each other
    and from the diagonal, so a letter matrix is filled in one assignment.
    """
    rows, cols, signs = [], [], []
    for a in range(1, n + 1):
        if a == i or a == j:
            continue
        r, si = indexing.canon(a, i)
        c, sj = indexing.canon(a, j)
        rows.append(indexing.rank(r, n))
        cols.append(indexing.rank(c, n))
        signs.append(si * sj)
    return (
        np.array(rows, dtype=np.intp),
        np.array(cols, dtype=np.intp),
        np.array(signs, dtype=np.int64),
    )


_LETTER_NP_CACHE: dict = {}


def _letter_np(modulus: int, n: int, i: int, j: int, x: int):
    key = (modulus, n, i, j, x)
    hit = _LETTER_NP_CACHE.get(key)
    if hit is None:
        rows, cols, signs = _letter_support(n, i, j)
        hit = np.identity(indexing.dim(n), dtype=np.int64)
        hit[rows, cols] = (signs * x) % modulus
        hit.flags.writeable = False
        _LETTER_NP_CACHE[key] = hit
    return hit


def _canon_letters(letters):
    out = []
    for i, j, payload in letters:
        out.append((int(i), int(j), payload))
    return tuple(out)


def ext_letter_matrix(ring, n: int, i: int, j: int, payload) -> matrices.Matrix:
    """The N x N matrix of a single exterior transvection letter.

    It is the identity plus, for every a outside {i, j}, the entry
    sign(a,i) * sign(a,j) * xi at row {a,i}, column {a,j} (sorted labels).
    All touched positions are independent, so this closed form equals the
    product of the letter's elementary-transvection expansion.
    """
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("bad index")
    xi = ring.coerce(payload)
    N = indexing.dim(n)
    entries = []
    for a in range(1, n + 1):
        if a == i or a == j:
            continue
        row, si = indexing.canon(a, i)
        col, sj = indexing.canon(a, j)
        val = xi if si * sj == 1 else ring.neg(xi)
        entries.append((indexing.rank(row, n), indexing.rank(col, n), val))
    if matrices._np_store(ring):
        data = np.identity(N, dtype=np.int64)
        for r, c, v in entries:
            data[r, c] = v
        return matrices.Matrix(ring, None, _np_data=data % ring.modulus)
    rows = [list(r) for r in matrices.identity(ring, N).rows]
    for r, c, v in entries:
        rows[r][c] = v
    return matrices.Matrix(ring, rows)


class TransvWord:
    """Word in plain elementary transvections over a fixed dimension."""

    __slots__ = ("dim", "letters")

    def __init__(self, dim: int, letters=()):
        self.dim = dim
        letters = _canon_letters(letters)
        for i, j, _ in letters:
            if i == j or not (1 <= i <= dim and 1 <= j <= dim):
                raise ValueError("bad index")
        self.letters = letters

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "TransvWord") -> "TransvWord":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return TransvWord(self.dim, self.letters + other.letters)

    def __eq__(self, other):
        if not isinstance(other, TransvWord):
            return NotImplemented
        return self.dim == other.dim and self.letters == other.letters

    def inverse(self, ring) -> "TransvWord":
        return TransvWord(
            self.dim,
            tuple(
                (i, j, ring.neg(ring.coerce(xi)))
                for i, j, xi in reversed(self.letters)
            ),
        )

    def eval(self, ring) -> matrices.InvPair:
        fwd = matrices.identity(ring, self.dim)
        bwd = matrices.identity(ring, self.dim)
        for i, j, xi in self.letters:
            fwd = fwd.mul(matrices.transvection(ring, self.dim, i, j, xi))
        for i, j, xi in reversed(self.letters):
            bwd = bwd.mul(
                matrices.transvection(ring, self.dim, i, j, ring.neg(ring.coerce(xi)))
            )
        return matrices.InvPair._trusted(fwd, bwd)


class PairWord:
    """Word in elementary transvections with pair-valued row/column labels."""

    __slots__ = ("n", "letters")

    def __init__(self, n: int, letters=()):
        self.n = n
        out = []
        for row, col, payload in letters:
            row = tuple(row)
            col = tuple(col)
            indexing.rank(row, n)
            indexing.rank(col, n)
            if row == col:
                raise ValueError("bad index")
            out.append((row, col, payload))
        self.letters = tuple(out)

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "PairWord") -> "PairWord":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return PairWord(self.n, self.letters + other.letters)

    def __eq__(self, other):
        if not isinstance(other, PairWord):
            return NotImplemented
        return self.n == other.n and self.letters == other.letters

    def inverse(self, ring) -> "PairWord":
        return PairWord(
            self.n,
            tuple(
                (r, c, ring.neg(ring.coerce(xi)))
                for r, c, xi in reversed(self.letters)
            ),
        )

    def to_transv(self) -> TransvWord:
        N = indexing.dim(self.n)
        return TransvWord(
            N,
            tuple(
                (indexing.rank(r, self.n) + 1, indexing.rank(c, self.n) + 1, xi)
                for r, c, xi in self.letters
            ),
        )

    def eval(self, ring) -> matrices.InvPair:
        return self.to_transv().eval(ring)


class ExtWord:
    """Word in exterior transvections over ambient rank n."""

    __slots__ = ("n", "letters")

    def __init__(self, n: int, letters=()):
        if n < 3:
            raise ValueError("rank too small")
        letters = _canon_letters(letters)
        for i, j, _ in letters:
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise ValueError("bad index")
        self.n = n
        self.letters = letters

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "ExtWord") -> "ExtWord":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return ExtWord(self.n, self.letters + other.letters)

    def __eq__(self, other):
        if not isinstance(other, ExtWord):
            return NotImplemented
        return self.n == other.n and self.letters == other.letters

    def __hash__(self):
        return hash((self.n, self.letters))

    def inverse(self, ring) -> "ExtWord":
        return ExtWord(
            self.n,
            tuple(
                (i, j, ring.neg(ring.coerce(xi)))
                for i, j, xi in reversed(self.letters)
            ),
        )

    def eval(self, ring, cache: dict | None = None) -> matrices.InvPair:
        key = None
        if cache is not None:
            key = (self.n, self.letters)
            hit = cache.get(key)
            if hit is not None:
                return hit
        N = indexing.dim(self.n)
        if ring.kind == "zmod" and matrices._np_safe(ring, N):
            pair = self._eval_zmod(ring, N)
        else:
            fwd = matrices.identity(ring, N)
            bwd = matrices.identity(ring, N)
            for i, j, xi in self.letters:
                fwd = fwd.mul(ext_letter_matrix(ring, self.n, i, j, xi))
            for i, j, xi in reversed(self.letters):
                bwd = bwd.mul(
                    ext_letter_matrix(ring, self.n, i, j, ring.neg(ring.coerce(xi)))
                )
            pair = matrices.InvPair._trusted(fwd, bwd)
        if cache is not None:
            cache[key] = pair
        return pair

    def _eval_zmod(self, ring, N: int) -> matrices.InvPair:
        # letter matrices recur across conjugators, so a keyed cache plus a
        # plain int64 matmul beats rebuilding them
        m = ring.modulus
        fwd = np.identity(N, dtype=np.int64)
        bwd = np.identity(N, dtype=np.int64)
        for i, j, xi in self.letters:
            x = ring.coerce(xi)
            if x:
                fwd = (fwd @ _letter_np(m, self.n, i, j, x)) % m
        for i, j, xi in reversed(self.letters):
            x = (-ring.coerce(xi)) % m
            if x:
                bwd = (bwd @ _letter_np(m, self.n, i, j, x)) % m
        return matrices.InvPair._trusted(
            matrices.Matrix(ring, None, _np_data=fwd),
            matrices.Matrix(ring, None, _np_data=bwd),
        )

    def expand(self) -> PairWord:
        """Expansion into elementary transvections of the pair-indexed group."""
        from . import exterior

        word = PairWord(self.n)
        for i, j, xi in self.letters:
            word = word + exterior.ext_transvection(i, j, xi, self.n)
        return word


class ConjWord:
    """Product of elementary conjugates h^-1 g^{eps} h of an unspecified g."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        self.n = n
        out = []
        for eps, h in terms:
            if eps not in (1, -1):
                raise ValueError("conjugate exponent must be +1 or -1")
            if not isinstance(h, ExtWord) or h.n != n:
                raise ValueError("conjugator rank mismatch")
            out.append((eps, h))
        self.terms = tuple(out)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "ConjWord") -> "ConjWord":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return ConjWord(self.n, self.terms + other.terms)

    def __eq__(self, other):
        if not isinstance(other, ConjWord):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def inverse(self) -> "ConjWord":
        """Formal inverse: reversed terms with flipped exponents, same length."""
        return ConjWord(self.n, tuple((-eps, h) for eps, h in reversed(self.terms)))

    def eval(self, g: matrices.InvPair, cache: dict | None = None) -> matrices.InvPair:
        """Multiply out the conjugates against a concrete certified g."""
        N = indexing.dim(self.n)
        if g.dim != N:
            raise ValueError("dimension mismatch")
        ring = g.ring
        if cache is None:
            cache = {}
        acc = matrices.identity_pair(ring, N)
        for eps, h in self.terms:
            x = h.eval(ring, cache)
            base = g if eps == 1 else g.invert()
            term = matrices.InvPair._trusted(
                x.bwd.mul(base.fwd).mul(x.fwd), x.bwd.mul(base.bwd).mul(x.fwd)
            )
            acc = acc.compose(term)
        return acc

    def eval_matrix(self, g: matrices.InvPair, cache: dict | None = None) -> matrices.Matrix:
        """Forward product only; the verification workhorse."""
        N = indexing.dim(self.n)
        if g.dim != N:
            raise ValueError("dimension mismatch")
        ring = g.ring
        if cache is None:
            cache = {}
        acc = matrices.identity(ring, N)
        for eps, h in self.terms:
            x = h.eval(ring, cache)
            base = g.fwd if eps == 1 else g.bwd
            acc = acc.mul(x.bwd).mul(base).mul(x.fwd)
        return acc
