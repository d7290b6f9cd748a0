import numpy as np
import pytest

from pdscodes.cyclotomic import CyclotomicInteger, canonicalize


def test_canonical_form_eliminates_top_coefficient():
    # 1 + zeta + zeta^2 = 0 in Z[zeta_3]
    z = CyclotomicInteger.from_counts(3, [1, 1, 1])
    assert z.is_zero()
    assert canonicalize([2, 5, 5], 3) == (-3, 0)


def test_rational_detection_after_normalization():
    # (4, 1, 1) raw = 3 + (1 + zeta + zeta^2) = 3
    z = CyclotomicInteger.from_counts(3, [4, 1, 1])
    assert z.is_rational()
    assert z.rational_value() == 3
    w = CyclotomicInteger.from_counts(3, [1, 2, 0])
    assert not w.is_rational()
    with pytest.raises(ValueError):
        w.rational_value()


def test_p2_always_rational():
    z = CyclotomicInteger.from_counts(2, [5, 3])  # 5 - 3 since zeta_2 = -1
    assert z.is_rational()
    assert z.rational_value() == 2


def test_zeta_power_relations():
    p = 5
    z = CyclotomicInteger.zeta_power(p, 1)
    acc = CyclotomicInteger.integer(p, 1)
    total = CyclotomicInteger.integer(p, 0)
    for _ in range(p):
        total = total + acc
        acc = acc * z
    assert total.is_zero()  # 1 + z + ... + z^(p-1) = 0
    assert acc == CyclotomicInteger.integer(p, 1)  # z^p = 1


def test_ring_axioms_randomized():
    rng = np.random.default_rng(5)
    for p in (2, 3, 5, 7):
        for _ in range(60):
            a, b, c = (
                CyclotomicInteger(p, rng.integers(-9, 10, size=p - 1).tolist())
                for _ in range(3)
            )
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a - a == CyclotomicInteger.integer(p, 0)


def test_reduction_idempotent():
    rng = np.random.default_rng(9)
    for p in (3, 5):
        for _ in range(30):
            raw = rng.integers(-9, 10, size=p).tolist()
            once = CyclotomicInteger(p, raw)
            again = CyclotomicInteger(p, list(once.coeffs) + [0])
            assert once == again


def test_conjugate_and_norm():
    p = 3
    z = CyclotomicInteger.zeta_power(p, 1)
    assert z * z.conjugate() == CyclotomicInteger.integer(p, 1)
    assert z.conjugate() == CyclotomicInteger.zeta_power(p, 2)
    # |a + b*zeta|^2 = a^2 - ab + b^2 for p = 3
    a, b = 4, -7
    w = CyclotomicInteger(p, (a, b))
    assert w.norm_squared() == a * a - a * b + b * b
    # conjugation is an involution
    rng = np.random.default_rng(1)
    for _ in range(20):
        v = CyclotomicInteger(5, rng.integers(-5, 6, size=4).tolist())
        assert v.conjugate().conjugate() == v


def test_int_interop():
    z = CyclotomicInteger.integer(3, 7)
    assert z == 7
    assert z + 1 == 8
    assert 2 * z == 14
    assert 10 - z == 3
