"""Howell form against brute-force span enumeration.

The spans are small enough (p^k <= 9, ncols <= 2) to enumerate every
Z/p^k-linear combination of the rows, which gives an independent oracle for
same_span, member and the span-closure property of the Howell form.
"""

from itertools import product

import numpy as np
import pytest

from iwafit.linalg import CoeffMatrix, HowellBuilder, howell_form, howell_span_rows, member, same_span


def enumerate_span(rows, mod, ncols):
    """Every Z/mod-combination of the rows, as a frozenset of tuples."""
    rows = [np.asarray(r) for r in rows]
    n = ncols
    out = {(0,) * n}
    for coeffs in product(range(mod), repeat=len(rows)):
        v = np.zeros(n, dtype=np.int64)
        for c, r in zip(coeffs, rows):
            v = (v + c * r) % mod
        out.add(tuple(int(x) for x in v))
    return frozenset(out)


CASES = [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)]


def test_reference_example():
    H = howell_form(CoeffMatrix(2, 2, 2, ((2, 1),)))
    assert [list(map(int, r)) for r in H.rows] == [[2, 1], [0, 2]]
    # derived independently: the span of (2,1) over Z/4 is
    # {(0,0),(2,1),(0,2),(2,3)}, whose echelon closure needs the row (0,2)
    assert enumerate_span([(2, 1)], 4, 2) == enumerate_span([(2, 1), (0, 2)], 4, 2)


@pytest.mark.parametrize("p,k", CASES)
def test_howell_span_is_exact(p, k, rng):
    mod = p**k
    for _ in range(30):
        ncols = int(rng.integers(1, 3))
        nrows = int(rng.integers(1, 4))
        A = rng.integers(0, mod, size=(nrows, ncols))
        H = howell_form(CoeffMatrix(p, k, ncols, tuple(map(tuple, A))))
        assert enumerate_span(A, mod, ncols) == enumerate_span(H.rows, mod, ncols)
        # canonical form is idempotent
        assert howell_form(H) == H


@pytest.mark.parametrize("p,k", CASES)
def test_same_span_matches_enumeration(p, k, rng):
    mod = p**k
    for _ in range(30):
        ncols = int(rng.integers(1, 3))
        A = rng.integers(0, mod, size=(int(rng.integers(1, 4)), ncols))
        B = rng.integers(0, mod, size=(int(rng.integers(1, 4)), ncols))
        expected = enumerate_span(A, mod, ncols) == enumerate_span(B, mod, ncols)
        got = same_span(CoeffMatrix(p, k, ncols, tuple(map(tuple, A))),
                        CoeffMatrix(p, k, ncols, tuple(map(tuple, B))))
        assert got == expected


@pytest.mark.parametrize("p,k", CASES)
def test_member_matches_enumeration(p, k, rng):
    mod = p**k
    for _ in range(30):
        ncols = int(rng.integers(1, 3))
        A = rng.integers(0, mod, size=(int(rng.integers(1, 4)), ncols))
        v = rng.integers(0, mod, size=ncols)
        expected = tuple(int(x) for x in v) in enumerate_span(A, mod, ncols)
        assert member(v, CoeffMatrix(p, k, ncols, tuple(map(tuple, A)))) == expected


def test_bulk_elimination_matches_incremental(rng):
    for _ in range(200):
        p = int(rng.choice([2, 3, 5]))
        k = int(rng.integers(1, 4))
        ncols = int(rng.integers(1, 8))
        nrows = int(rng.integers(1, 10))
        A = rng.integers(0, p**k, size=(nrows, ncols))
        H1 = howell_form(CoeffMatrix(p, k, ncols, tuple(map(tuple, A))))
        H2 = CoeffMatrix(p, k, ncols, tuple(howell_span_rows(p, k, ncols, A)))
        assert H1 == H2


def test_scalar_closure_property(rng):
    # every scalar multiple of a Howell row reduces to zero against the form
    for _ in range(40):
        p, k, ncols = 3, 3, 4
        A = rng.integers(0, 27, size=(3, ncols))
        H = howell_form(CoeffMatrix(p, k, ncols, tuple(map(tuple, A))))
        for row in H.rows:
            for c in (3, 9, 14):
                assert member((c * row) % 27, H)


def test_builder_rejects_bad_modulus():
    with pytest.raises(ValueError):
        CoeffMatrix(4, 2, 1, ((1,),))
    with pytest.raises(ValueError):
        CoeffMatrix(2, 0, 1, ((1,),))


def test_object_dtype_fallback():
    p, k = 3, 70  # modulus far beyond int64
    mod = p**k
    b = HowellBuilder(p, k, 2)
    b.insert([2 * (mod // 3), 1])
    H = CoeffMatrix(p, k, 2, tuple(b.normalized_rows()))
    # pivot normalization: (2*3^69, 1) ~ (3^69, inv(2)); the spawned row
    # 3 * (3^69, inv(2)) = (0, 3*inv(2)) normalizes to (0, 3), and the
    # entry above that pivot reduces to inv(2) mod 3 = 2.
    assert [[int(x) for x in r] for r in H.rows] == [[mod // 3, 2], [0, 3]]
    bulk = howell_span_rows(p, k, 2, np.array([[2 * (mod // 3), 1]], dtype=object))
    assert [[int(x) for x in r] for r in bulk] == [[mod // 3, 2], [0, 3]]
