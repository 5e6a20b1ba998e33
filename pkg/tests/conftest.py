import numpy as np
import pytest

from iwafit import GroupRingSpec, from_vector


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


def random_element(spec: GroupRingSpec, rng):
    if spec.modulus < 2**62:
        return from_vector(spec, rng.integers(0, spec.modulus, size=spec.size))
    # wide moduli: assemble arbitrary-precision draws from 32-bit words
    words = (spec.modulus.bit_length() + 63) // 32
    draws = rng.integers(0, 2**32, size=(spec.size, words), dtype=np.uint64)
    coeffs = []
    for row in draws:
        v = 0
        for w in row:
            v = (v << 32) | int(w)
        coeffs.append(v % spec.modulus)
    return from_vector(spec, np.array(coeffs, dtype=object))


@pytest.fixture
def small_spec():
    return GroupRingSpec(3, 2, (3,), 1, 3)
