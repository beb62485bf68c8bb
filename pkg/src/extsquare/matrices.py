"""Exact dense square matrices over a ring, and invertible pairs.

Matrices are immutable after construction.  Over a modular ring the entries
live in a read-only int64 numpy array so that products reduce to a single
integer matmul followed by a reduction; over the integer and polynomial
rings the entries are payload tuples multiplied out in pure python.

No general inversion over a ring is attempted.  Every invertible matrix in
the system is carried as an InvPair, a (g, g_inverse) bundle certified by
multiplying the two sides together.
"""

from __future__ import annotations

import numpy as np

from . import rings

# When True, composite InvPairs re-verify fwd * bwd == identity.  The public
# constructor always verifies; this flag additionally checks the internal
# trusted compositions, at roughly double the running cost.
VERIFY_PRODUCTS = False


def _np_safe(ring, dim: int) -> bool:
    # int64 matmul must not overflow: dim * (m-1)^2 accumulated per entry.
    return dim * (ring.modulus - 1) ** 2 < 2**62


def _np_store(ring) -> bool:
    # residues themselves must fit int64; products are guarded separately
    return ring.kind == "zmod" and ring.modulus < 2**62


class Matrix:
    """A dim x dim matrix over a ring, stored row-major."""

    __slots__ = ("ring", "dim", "_np", "_rows")

    def __init__(self, ring, rows, _np_data=None):
        self.ring = ring
        if _np_data is not None:
            self.dim = _np_data.shape[0]
            _np_data.flags.writeable = False
            self._np = _np_data
            self._rows = None
            return
        rows = tuple(tuple(r) for r in rows)
        self.dim = len(rows)
        if any(len(r) != self.dim for r in rows):
            raise ValueError("matrix must be square")
        if _np_store(ring):
            data = np.array(rows, dtype=np.int64) % ring.modulus
            data.flags.writeable = False
            self._np = data
            self._rows = None
        else:
            self._np = None
            self._rows = rows

    @property
    def rows(self):
        if self._rows is None:
            self._rows = tuple(tuple(int(x) for x in row) for row in self._np)
        return self._rows

    def at(self, r: int, c: int):
        """Entry payload at 0-based position (r, c)."""
        if self._np is not None:
            return int(self._np[r, c])
        return self._rows[r][c]

    def column(self, c: int):
        if self._np is not None:
            return tuple(int(x) for x in self._np[:, c])
        return tuple(row[c] for row in self._rows)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise rings.RingMismatchError("ring mismatch")
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if self._np is not None and _np_safe(self.ring, self.dim):
            out = (self._np @ other._np) % self.ring.modulus
            return Matrix(self.ring, None, _np_data=out)
        ring = self.ring
        add, mul, zero = ring.add, ring.mul, ring.zero
        bt = list(zip(*other.rows))
        out_rows = []
        for ra in self.rows:
            out_row = []
            for cb in bt:
                acc = zero
                for a, b in zip(ra, cb):
                    if a != zero and b != zero:
                        acc = add(acc, mul(a, b))
                out_row.append(acc)
            out_rows.append(tuple(out_row))
        return Matrix(ring, out_rows)

    def __matmul__(self, other):
        return self.mul(other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ring != other.ring or self.dim != other.dim:
            return False
        if self._np is not None and other._np is not None:
            return bool(np.array_equal(self._np, other._np))
        return self.rows == other.rows

    def __hash__(self):
        return hash((self.ring.key(), self.rows))

    def is_identity(self) -> bool:
        return self == identity(self.ring, self.dim)

    def is_scalar(self) -> bool:
        ring = self.ring
        d = self.at(0, 0)
        for r in range(self.dim):
            for c in range(self.dim):
                want = d if r == c else ring.zero
                if self.at(r, c) != want:
                    return False
        return True

    def __repr__(self):
        return f"Matrix({self.ring!r}, dim={self.dim})"


def from_rows(ring, rows) -> Matrix:
    """Build a matrix, canonicalizing every entry through the ring."""
    return Matrix(ring, [[ring.coerce(x) for x in row] for row in rows])


def identity(ring, dim: int) -> Matrix:
    if _np_store(ring):
        return Matrix(ring, None, _np_data=np.identity(dim, dtype=np.int64) % ring.modulus)
    z, o = ring.zero, ring.one
    return Matrix(ring, [[o if r == c else z for c in range(dim)] for r in range(dim)])


def scalar_matrix(ring, dim: int, payload) -> Matrix:
    z = ring.zero
    c = ring.coerce(payload)
    return Matrix(ring, [[c if r == s else z for s in range(dim)] for r in range(dim)])


def transvection(ring, dim: int, i: int, j: int, payload) -> Matrix:
    """The elementary matrix e + xi E_{i,j}, indices 1-based."""
    if i == j or not (1 <= i <= dim and 1 <= j <= dim):
        raise ValueError("bad index")
    xi = ring.coerce(payload)
    if _np_store(ring):
        data = np.identity(dim, dtype=np.int64)
        data[i - 1, j - 1] = xi
        return Matrix(ring, None, _np_data=data % ring.modulus)
    rows = [list(r) for r in identity(ring, dim).rows]
    rows[i - 1][j - 1] = xi
    return Matrix(ring, rows)


def mat_vec(m: Matrix, vec):
    """Matrix times column vector of payloads."""
    ring = m.ring
    if len(vec) != m.dim:
        raise ValueError("dimension mismatch")
    if m._np is not None and _np_safe(ring, m.dim):
        v = np.array(vec, dtype=np.int64)
        return tuple(int(x) for x in (m._np @ v) % ring.modulus)
    add, mul, zero = ring.add, ring.mul, ring.zero
    out = []
    for row in m.rows:
        acc = zero
        for a, b in zip(row, vec):
            if a != zero and b != zero:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


def vec_mat(vec, m: Matrix):
    """Row vector of payloads times matrix."""
    ring = m.ring
    if len(vec) != m.dim:
        raise ValueError("dimension mismatch")
    if m._np is not None and _np_safe(ring, m.dim):
        v = np.array(vec, dtype=np.int64)
        return tuple(int(x) for x in (v @ m._np) % ring.modulus)
    add, mul, zero = ring.add, ring.mul, ring.zero
    cols = list(zip(*m.rows))
    out = []
    for col in cols:
        acc = zero
        for a, b in zip(vec, col):
            if a != zero and b != zero:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


class InvPair:
    """A matrix with a certified inverse."""

    __slots__ = ("fwd", "bwd")

    def __init__(self, fwd: Matrix, bwd: Matrix, check: bool = True):
        if fwd.ring != bwd.ring or fwd.dim != bwd.dim:
            raise ValueError("forward and backward parts do not match")
        if check and not (fwd.mul(bwd).is_identity() and bwd.mul(fwd).is_identity()):
            raise ValueError("certificate failure: product is not the identity")
        self.fwd = fwd
        self.bwd = bwd

    @classmethod
    def _trusted(cls, fwd: Matrix, bwd: Matrix) -> "InvPair":
        return cls(fwd, bwd, check=VERIFY_PRODUCTS)

    @property
    def ring(self):
        return self.fwd.ring

    @property
    def dim(self):
        return self.fwd.dim

    def compose(self, other: "InvPair") -> "InvPair":
        return InvPair._trusted(self.fwd.mul(other.fwd), other.bwd.mul(self.bwd))

    def invert(self) -> "InvPair":
        return InvPair._trusted(self.bwd, self.fwd)

    def __eq__(self, other):
        if not isinstance(other, InvPair):
            return NotImplemented
        return self.fwd == other.fwd and self.bwd == other.bwd

    def __hash__(self):
        return hash((self.fwd, self.bwd))

    def __repr__(self):
        return f"InvPair(dim={self.dim}, ring={self.ring!r})"


def identity_pair(ring, dim: int) -> InvPair:
    e = identity(ring, dim)
    return InvPair._trusted(e, e)


def transvection_pair(ring, dim: int, i: int, j: int, payload) -> InvPair:
    xi = ring.coerce(payload)
    return InvPair._trusted(
        transvection(ring, dim, i, j, xi),
        transvection(ring, dim, i, j, ring.neg(xi)),
    )


def conjugate(y: InvPair, x: InvPair, side: str = "right") -> InvPair:
    """Conjugate y by x: left is x y x^-1, right is x^-1 y x."""
    if side == "left":
        return InvPair._trusted(
            x.fwd.mul(y.fwd).mul(x.bwd), x.fwd.mul(y.bwd).mul(x.bwd)
        )
    if side == "right":
        return InvPair._trusted(
            x.bwd.mul(y.fwd).mul(x.fwd), x.bwd.mul(y.bwd).mul(x.fwd)
        )
    raise ValueError("side must be 'left' or 'right'")


def commutator(x: InvPair, y: InvPair) -> InvPair:
    """Left-normed commutator x y x^-1 y^-1."""
    fwd = x.fwd.mul(y.fwd).mul(x.bwd).mul(y.bwd)
    bwd = y.fwd.mul(x.fwd).mul(y.bwd).mul(x.bwd)
    return InvPair._trusted(fwd, bwd)
