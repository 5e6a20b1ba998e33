"""Canonical linear algebra over the chain ring Z/p^k.

The Howell normal form is the canonical representative of a row span over
Z/p^k: row echelon, every pivot a power of p, entries above a pivot reduced
modulo that pivot, and the row set closed under scalar multiplication.  Two
matrices span the same submodule of (Z/p^k)^n iff their Howell forms are
identical, which is what every ideal comparison in this library reduces to.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class CoeffMatrix:
    """Matrix over Z/p^k with entries stored as machine residues."""

    p: int
    k: int
    ncols: int
    rows: tuple = ()

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.p**self.k >= 2**128:
            raise ValueError("p^k must fit in a 128-bit word")
        mod = self.p**self.k
        dtype = np.int64 if mod < 2**31 else object
        normalized = []
        for row in self.rows:
            arr = np.asarray(row, dtype=dtype) % mod
            if arr.shape != (self.ncols,):
                raise ValueError("row length does not match ncols")
            arr.setflags(write=False)
            normalized.append(arr)
        object.__setattr__(self, "rows", tuple(normalized))

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, CoeffMatrix):
            return NotImplemented
        return (
            (self.p, self.k, self.ncols) == (other.p, other.k, other.ncols)
            and self.nrows == other.nrows
            and all(np.array_equal(a, b) for a, b in zip(self.rows, other.rows))
        )

    __hash__ = None


class HowellBuilder:
    """Incremental Howell-form accumulator.

    Rows are inserted one at a time; the builder keeps at most one pivot row
    per column, pivots normalized to powers of p.  Installing a pivot p^e
    with e > 0 also inserts p^(k-e) times the row, which is what makes the
    row set span-closed.  ``on_install`` (if set) is called with every raw
    vector that enters the basis, which ideal canonicalization uses to spin
    products with the ring generators.
    """

    def __init__(self, p: int, k: int, ncols: int, on_install=None):
        self.p = p
        self.k = k
        self.mod = p**k
        self.ncols = ncols
        self.pivots: dict[int, np.ndarray] = {}
        self.pivot_val: dict[int, int] = {}
        self.on_install = on_install
        self._dtype = np.int64 if self.mod < 2**31 else object

    def _valuation(self, x: int) -> int:
        e = 0
        while x % self.p == 0:
            x //= self.p
            e += 1
        return e

    def insert(self, vec) -> None:
        queue = [np.asarray(vec, dtype=self._dtype) % self.mod]
        while queue:
            v = queue.pop()
            col = 0
            while col < self.ncols:
                x = int(v[col])
                if x == 0:
                    col += 1
                    continue
                e = self._valuation(x)
                if col not in self.pivots:
                    self._install(col, v, e, queue)
                    break
                pe = self.pivot_val[col]
                if e >= pe:
                    c = (x // self.p**pe) % self.mod
                    v = (v - c * self.pivots[col]) % self.mod
                    # v[col] is now zero; continue along the row.
                else:
                    old = self.pivots.pop(col)
                    self.pivot_val.pop(col)
                    self._install(col, v, e, queue)
                    queue.append(old)
                    break
            # Row fully reduced to zero when the loop runs off the end.

    def _install(self, col: int, v, e: int, queue) -> None:
        unit = int(v[col]) // self.p**e
        if unit % self.p == 0:
            raise AssertionError("valuation bookkeeping broke")
        inv = pow(unit, -1, self.mod)
        v = (v * inv) % self.mod
        self.pivots[col] = v
        self.pivot_val[col] = e
        if e > 0:
            queue.append((v * self.p ** (self.k - e)) % self.mod)
        if self.on_install is not None:
            self.on_install(v)

    def normalized_rows(self) -> list[np.ndarray]:
        """Back-substituted rows, sorted by pivot column."""
        cols = sorted(self.pivots)
        rows = {c: self.pivots[c].copy() for c in cols}
        for c in cols:
            pe = self.p ** self.pivot_val[c]
            prow = None
            for c2 in cols:
                if c2 >= c:
                    break
                r = rows[c2]
                q = int(r[c]) // pe
                if q:
                    if prow is None:
                        prow = rows[c]
                    rows[c2] = (r - q * prow) % self.mod
        return [rows[c] for c in cols]


def _valuations(vals: np.ndarray, p: int, k: int) -> np.ndarray:
    """Vectorized p-adic valuation, with k standing in for the zero entries."""
    x = np.asarray(vals).copy()
    v = np.full(x.shape, 0, dtype=np.int64)
    v[x == 0] = k
    for _ in range(k):
        mask = (x != 0) & (x % p == 0)
        if not mask.any():
            break
        x[mask] //= p
        v[mask] += 1
    return v


def howell_span_rows(p: int, k: int, ncols: int, mat) -> list[np.ndarray]:
    """Howell normal form rows of the row span of a stacked matrix.

    Column-at-a-time elimination: the minimal-valuation entry in the current
    column becomes the pivot (normalized to p^e), every other row is cleared
    there in one vectorized pass, and p^(k-e) times the pivot re-enters the
    worklist to keep the row set span-closed.  A final ascending pass reduces
    the entries above each pivot modulo the pivot value.
    """
    mod = p**k
    dtype = np.int64 if mod < 2**31 else object
    M = np.asarray(mat, dtype=dtype) % mod
    if M.ndim != 2 or (M.size and M.shape[1] != ncols):
        raise ValueError("matrix shape does not match ncols")
    if M.size == 0:
        return []
    pivot_cols: list[int] = []
    pivot_es: list[int] = []
    pivot_rows: list[np.ndarray] = []
    for col in range(ncols):
        colvals = M[:, col]
        nz = np.nonzero(colvals)[0]
        if len(nz) == 0:
            continue
        es = _valuations(colvals[nz], p, k)
        r = int(nz[np.argmin(es)])
        e = int(es.min())
        pe = p**e
        unit = int(M[r, col]) // pe
        pivot = (M[r] * pow(unit, -1, mod)) % mod
        pivot_cols.append(col)
        pivot_es.append(e)
        pivot_rows.append(pivot)
        # e is minimal among the nonzero entries, so the division is exact.
        c = (colvals // pe) % mod
        c[r] = 0
        idx = np.nonzero(c)[0]
        if len(idx):
            M[idx] = (M[idx] - np.outer(c[idx], pivot)) % mod
        M[r] = 0
        if e > 0:
            M = np.concatenate([M, ((pivot * p ** (k - e)) % mod)[None, :]])
        if len(M) > 4 * ncols + 8:
            M = M[np.any(M, axis=1)]
    H = np.array(pivot_rows, dtype=dtype)
    for i, col in enumerate(pivot_cols):
        if i == 0:
            continue
        pe = p ** pivot_es[i]
        q = H[:i, col] // pe
        idx = np.nonzero(q)[0]
        if len(idx):
            H[idx] = (H[idx] - np.outer(q[idx], H[i])) % mod
    return [row for row in H]


def howell_form(A: CoeffMatrix) -> CoeffMatrix:
    """The unique Howell normal form of the row span of A (zero rows removed)."""
    builder = HowellBuilder(A.p, A.k, A.ncols)
    for row in A.rows:
        builder.insert(row)
    return CoeffMatrix(A.p, A.k, A.ncols, tuple(builder.normalized_rows()))


def same_span(A: CoeffMatrix, B: CoeffMatrix) -> bool:
    if (A.p, A.k, A.ncols) != (B.p, B.k, B.ncols):
        raise ValueError("matrices are not comparable")
    return howell_form(A) == howell_form(B)


def member(v, A: CoeffMatrix) -> bool:
    """True iff v reduces to zero against the Howell form of A."""
    H = howell_form(A)
    mod = A.modulus
    vec = np.asarray(v, dtype=H.rows[0].dtype if H.rows else np.int64) % mod
    if vec.shape != (A.ncols,):
        raise ValueError("vector length does not match ncols")
    p = A.p
    piv = {int(np.nonzero(row)[0][0]): row for row in H.rows}
    for col in sorted(piv):
        x = int(vec[col])
        if x == 0:
            continue
        pe = int(piv[col][col])
        if x % pe:
            return False
        vec = (vec - (x // pe) * piv[col]) % mod
    return not np.any(vec)
