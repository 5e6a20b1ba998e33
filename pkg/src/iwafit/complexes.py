"""Standard resolutions of the trivial module and their tensor products.

A chain complex is a list of free-module ranks together with boundary
matrices d_j: C_j -> C_(j-1).  The building blocks are the periodic
cyclic-group complex (boundaries alternate delta_i - 1 and the norm) and
the two-term complex for a T variable; the total complex of a tensor
product uses the Koszul sign rule d(x (x) y) = dx (x) y + (-1)^deg(x) x (x) dy.
Complexes are built to a finite requested length; only finitely many terms
are ever consumed downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpecMismatchError
from .groupring import GroupRingSpec, RingElement, delta, mul, norm_element, tvar, zero


@dataclass(frozen=True)
class RingMatrix:
    """Rectangular matrix of ring elements, row-major."""

    spec: GroupRingSpec
    nrows: int
    ncols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError("entry count does not match the shape")
        for e in self.entries:
            if e.spec != self.spec:
                raise SpecMismatchError("matrix entry lives on the wrong spec")

    def at(self, i: int, j: int) -> RingElement:
        return self.entries[i * self.ncols + j]

    def transpose(self) -> "RingMatrix":
        ent = tuple(self.at(i, j) for j in range(self.ncols) for i in range(self.nrows))
        return RingMatrix(self.spec, self.ncols, self.nrows, ent)

    def compose(self, other: "RingMatrix") -> "RingMatrix":
        """Matrix product self * other."""
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions differ")
        ent = []
        for i in range(self.nrows):
            for j in range(other.ncols):
                acc = zero(self.spec)
                for t in range(self.ncols):
                    acc = acc + mul(self.at(i, t), other.at(t, j))
                ent.append(acc)
        return RingMatrix(self.spec, self.nrows, other.ncols, tuple(ent))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)


def matrix_from_rows(spec: GroupRingSpec, rows) -> RingMatrix:
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    return RingMatrix(spec, nrows, ncols, tuple(e for r in rows for e in r))


@dataclass(frozen=True)
class ChainComplex:
    """Graded free modules with boundaries d_j: C_j -> C_(j-1), j >= 1.

    ``degree_labels[j]`` gives, for each basis element of C_j, the tuple of
    degrees contributed by each tensor factor (a 1-tuple for the atomic
    complexes).
    """

    spec: GroupRingSpec
    ranks: tuple[int, ...]
    boundaries: tuple[RingMatrix, ...]
    degree_labels: tuple[tuple, ...]

    def __post_init__(self):
        for j, d in enumerate(self.boundaries, start=1):
            if d.nrows != self.ranks[j - 1] or d.ncols != self.ranks[j]:
                raise ValueError(f"boundary d_{j} has the wrong shape")
        for j in range(1, len(self.boundaries)):
            if not self.boundaries[j - 1].compose(self.boundaries[j]).is_zero():
                raise ValueError(f"d_{j} . d_{j + 1} != 0")

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, j: int) -> RingMatrix:
        """d_j for 1 <= j <= length."""
        return self.boundaries[j - 1]


def cyclic_complex(spec: GroupRingSpec, i: int, length: int,
                   generator_power: int = 1) -> ChainComplex:
    """Rank-one complex with boundaries alternating (delta_i^u - 1) and the norm.

    ``generator_power`` replaces the chosen generator delta_i by delta_i^u,
    which must be coprime to the factor order; the norm element is unchanged.
    """
    if not 1 <= i <= spec.s:
        raise ValueError(f"group factor index {i} out of range")
    if length < 1:
        raise ValueError("length must be >= 1")
    m = spec.orders[i - 1]
    from math import gcd

    if gcd(generator_power, m) != 1:
        raise ValueError("generator power must be coprime to the factor order")
    tau = delta(spec, i, generator_power) - delta(spec, i, 0)
    norm = norm_element(spec, [i])
    boundaries = tuple(
        RingMatrix(spec, 1, 1, (tau if j % 2 == 1 else norm,))
        for j in range(1, length + 1)
    )
    labels = tuple(((j,),) for j in range(length + 1))
    return ChainComplex(spec, (1,) * (length + 1), boundaries, labels)


def t_complex(spec: GroupRingSpec, j: int) -> ChainComplex:
    """The two-term complex 0 -> R --T_j--> R -> 0."""
    if not 1 <= j <= spec.d:
        raise ValueError(f"T-variable index {j} out of range")
    d1 = RingMatrix(spec, 1, 1, (tvar(spec, j),))
    return ChainComplex(spec, (1, 1), (d1,), (((0,),), ((1,),)))


def _tensor_pair(C: ChainComplex, D: ChainComplex, length: int) -> ChainComplex:
    spec = C.spec
    # Basis of (C (x) D)_n: pairs (i, alpha, j, beta), i + j = n, ordered by
    # ascending first-factor degree i, then alpha, then beta.
    basis = []
    for n in range(length + 1):
        layer = []
        for i in range(min(n, C.length) + 1):
            j = n - i
            if j > D.length:
                continue
            for alpha in range(C.ranks[i]):
                for beta in range(D.ranks[j]):
                    layer.append((i, alpha, j, beta))
        basis.append(layer)
    ranks = tuple(len(layer) for layer in basis)
    labels = tuple(
        tuple(C.degree_labels[i][alpha] + D.degree_labels[j][beta]
              for (i, alpha, j, beta) in layer)
        for layer in basis
    )
    boundaries = []
    for n in range(1, length + 1):
        pos = {key: r for r, key in enumerate(basis[n - 1])}
        cols = {}
        for c, (i, alpha, j, beta) in enumerate(basis[n]):
            if i >= 1:
                dC = C.boundary(i)
                for ap in range(C.ranks[i - 1]):
                    entry = dC.at(ap, alpha)
                    if not entry.is_zero():
                        cols[(pos[(i - 1, ap, j, beta)], c)] = entry
            if j >= 1:
                dD = D.boundary(j)
                sign = -1 if i % 2 else 1
                for bp in range(D.ranks[j - 1]):
                    entry = dD.at(bp, beta)
                    if not entry.is_zero():
                        r = pos[(i, alpha, j - 1, bp)]
                        val = entry if sign == 1 else -entry
                        cols[(r, c)] = cols.get((r, c), zero(spec)) + val
        ent = tuple(
            cols.get((r, c), zero(spec))
            for r in range(ranks[n - 1])
            for c in range(ranks[n])
        )
        boundaries.append(RingMatrix(spec, ranks[n - 1], ranks[n], ent))
    return ChainComplex(spec, ranks, tuple(boundaries), labels)


def trivial_complex(spec: GroupRingSpec, length: int) -> ChainComplex:
    """The complex concentrated in degree 0 with rank 1 (tensor unit)."""
    ranks = (1,) + (0,) * length
    boundaries = tuple(
        RingMatrix(spec, ranks[j - 1], ranks[j], ()) for j in range(1, length + 1)
    )
    labels = (((0,),),) + tuple(() for _ in range(length))
    return ChainComplex(spec, ranks, boundaries, labels)


def tensor(factors, length: int) -> ChainComplex:
    """Total complex of a list of chain complexes, truncated at ``length``."""
    factors = list(factors)
    if not factors:
        raise ValueError("tensor needs at least one factor")
    spec = factors[0].spec
    for f in factors:
        if f.spec != spec:
            raise SpecMismatchError("tensor factors live on different specs")
    total = factors[0]
    for f in factors[1:]:
        total = _tensor_pair(total, f, length)
    if total.length > length:
        total = ChainComplex(
            spec,
            total.ranks[: length + 1],
            total.boundaries[:length],
            total.degree_labels[: length + 1],
        )
    return total
