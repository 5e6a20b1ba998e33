"""Fitting ideals of presentation matrices.

The Fitting ideal of coker(h: R^b -> R^a) is generated by all a x a minors
of h.  The ring has zero divisors, so fraction-free elimination is not
available; minors are computed division-free by a depth-first walk over
column subsets that carries, for every row subset of the current size, the
determinant of the corresponding submatrix (Laplace expansion along each
newly chosen column).  Subdeterminants are shared across all C(b, a)
minors, costing O(2^a * b) ring multiplications overall.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import RingMatrix, matrix_from_rows
from .errors import SpecMismatchError
from .groupring import GroupRingSpec, RingElement, mul, one, zero
from .ideals import Ideal, unit_ideal, zero_ideal


@dataclass(frozen=True)
class PresentedModule:
    """Module given as coker(h: R^b -> R^a) for an a x b matrix h.

    ``annihilator_witness`` optionally records an element declared by the
    constructor to annihilate the module.
    """

    presentation: RingMatrix
    annihilator_witness: RingElement | None = None

    @property
    def spec(self) -> GroupRingSpec:
        return self.presentation.spec


def fitting_ideal(m: PresentedModule) -> Ideal:
    """Ideal of all maximal minors of the presentation matrix."""
    h = m.presentation
    a, b = h.nrows, h.ncols
    spec = h.spec
    if a == 0:
        return unit_ideal(spec)
    if b < a:
        return zero_ideal(spec)
    minors: list[RingElement] = []
    full = (1 << a) - 1

    def extend(col: int, state: dict[int, RingElement], depth: int):
        # state maps row-bitmasks of size `depth` to subdeterminants of the
        # columns chosen so far.
        if depth == a:
            minors.append(state[full])
            return
        for c in range(col, b - (a - depth) + 1):
            new_state: dict[int, RingElement] = {}
            column = [h.at(i, c) for i in range(a)]
            for mask, det in state.items():
                sign = 1
                for i in range(a):
                    bit = 1 << i
                    if mask & bit:
                        sign = -sign
                        continue
                    entry = column[i]
                    if entry.is_zero():
                        continue
                    term = mul(det, entry) if sign == 1 else -mul(det, entry)
                    new_mask = mask | bit
                    acc = new_state.get(new_mask)
                    new_state[new_mask] = term if acc is None else acc + term
            if new_state:
                extend(c + 1, new_state, depth + 1)
            elif depth + 1 == a:
                pass  # all candidate minors through this column are zero
    # Seed: empty column set, empty row set, determinant 1.
    extend(0, {0: one(spec)}, 0)
    if not minors:
        return zero_ideal(spec)
    return Ideal(spec, minors)


def fitting_ideal_naive(m: PresentedModule) -> Ideal:
    """Independent oracle: cofactor expansion over explicit column subsets."""
    h = m.presentation
    a, b = h.nrows, h.ncols
    spec = h.spec
    if a == 0:
        return unit_ideal(spec)
    if b < a:
        return zero_ideal(spec)

    def det(rows, cols):
        if len(rows) == 1:
            return h.at(rows[0], cols[0])
        acc = zero(spec)
        for t, r in enumerate(rows):
            entry = h.at(r, cols[0])
            if entry.is_zero():
                continue
            sub = det([x for x in rows if x != r], cols[1:])
            term = mul(entry, sub)
            acc = acc + term if t % 2 == 0 else acc - term
        return acc

    gens = [det(list(range(a)), list(cols)) for cols in combinations(range(b), a)]
    return Ideal(spec, gens)


def lift_presentation(m: PresentedModule, target: GroupRingSpec,
                      killed) -> PresentedModule:
    """Lift a presentation over a quotient spec by appending f * identity blocks.

    The source spec must equal ``target`` with trailing T variables removed
    (the quotient by those variables); entries are lifted verbatim and one
    block f_t * 1_a is appended per kill element f_t (elements of the target
    ring).  An empty ``killed`` list with matching specs returns the input.
    """
    killed = list(killed)
    h = m.presentation
    src = h.spec
    if (src.p, src.k, src.orders, src.N) != (target.p, target.k, target.orders, target.N):
        raise SpecMismatchError("source spec is not a T-quotient of the target")
    if src.d > target.d:
        raise SpecMismatchError("source spec has more T variables than the target")
    for f in killed:
        if f.spec != target:
            raise SpecMismatchError("kill element lives on the wrong spec")

    def lift_elem(x: RingElement) -> RingElement:
        from .groupring import make_element

        pad = (0,) * (target.d - src.d)
        return make_element(target, [(exps + pad, c) for exps, c in x.terms()])

    a, b = h.nrows, h.ncols
    rows = [[lift_elem(h.at(i, j)) for j in range(b)] for i in range(a)]
    for f in killed:
        for i in range(a):
            rows[i].extend(f if t == i else zero(target) for t in range(a))
    return PresentedModule(matrix_from_rows(target, rows) if a else
                           RingMatrix(target, 0, b + len(killed) * a, ()),
                           m.annihilator_witness)


def transpose_dual(m: PresentedModule) -> PresentedModule:
    """Dual of a module with square presentation: transpose the matrix."""
    h = m.presentation
    if h.nrows != h.ncols:
        raise ValueError("transpose dual needs a square presentation")
    return PresentedModule(h.transpose(), m.annihilator_witness)


def direct_sum(m1: PresentedModule, m2: PresentedModule) -> PresentedModule:
    if m1.spec != m2.spec:
        raise SpecMismatchError("summands live on different specs")
    h1, h2 = m1.presentation, m2.presentation
    spec = m1.spec
    rows = []
    for i in range(h1.nrows):
        rows.append([h1.at(i, j) for j in range(h1.ncols)] + [zero(spec)] * h2.ncols)
    for i in range(h2.nrows):
        rows.append([zero(spec)] * h1.ncols + [h2.at(i, j) for j in range(h2.ncols)])
    return PresentedModule(matrix_from_rows(spec, rows))


def apply_hom_to_presentation(hom, m: PresentedModule) -> PresentedModule:
    """Entrywise image of the presentation under a ring homomorphism."""
    from .groupring import apply_hom

    h = m.presentation
    ent = tuple(apply_hom(hom, e) for e in h.entries)
    return PresentedModule(RingMatrix(hom.target, h.nrows, h.ncols, ent))
