import numpy as np
import pytest

from pdscodes.field import (
    DEFAULT_MODULI,
    FieldConstructionError,
    FieldSpec,
    build_tower,
    default_modulus,
    poly_is_irreducible,
    poly_x_is_primitive,
)


def test_spec_rejects_bad_parameters():
    with pytest.raises(FieldConstructionError):
        FieldSpec(p=4, e=1, m=2)
    with pytest.raises(FieldConstructionError):
        FieldSpec(p=2, e=0, m=2)
    with pytest.raises(FieldConstructionError):
        FieldSpec(p=2, e=1, m=30)  # over the table cap
    with pytest.raises(FieldConstructionError):
        FieldSpec(p=3, e=1, m=2, modulus=(1, 1, 1, 1))  # wrong degree


def test_reducible_modulus_rejected():
    # x^2 + 1 = (x+1)(x+2) over F_2? no: over F_2 x^2+1=(x+1)^2
    with pytest.raises(FieldConstructionError):
        build_tower(FieldSpec(p=2, e=1, m=2, modulus=(1, 0, 1)))


def test_irreducible_but_imprimitive_rejected():
    # x^2 + 1 is irreducible over F_3 but X has order 4, not 8
    assert poly_is_irreducible((1, 0, 1), 3)
    assert not poly_x_is_primitive((1, 0, 1), 3)
    with pytest.raises(FieldConstructionError):
        build_tower(FieldSpec(p=3, e=1, m=2, modulus=(1, 0, 1)))
    # and even with the explicit check disabled, table construction catches it
    with pytest.raises(FieldConstructionError):
        build_tower(FieldSpec(p=3, e=1, m=2, modulus=(1, 0, 1), generator_check=False))


def test_default_moduli_are_primitive():
    for (p, n), coeffs in DEFAULT_MODULI.items():
        if p ** n > 3 ** 6:
            continue  # keep the scan cheap; big ones are exercised elsewhere
        assert len(coeffs) == n + 1
        assert poly_is_irreducible(coeffs, p)
        assert poly_x_is_primitive(coeffs, p)
    assert default_modulus(2, 8) == DEFAULT_MODULI[(2, 8)]


def test_example_field_sizes(f44):
    # 256-element field with a 4-element embedded subfield
    assert f44.qm == 256
    assert f44.q == 4
    assert len(f44.subfield_elements) == 4
    assert sorted(f44.subfield_index[f44.subfield_elements]) == [0, 1, 2, 3]


def test_prime_field_trivial_tower():
    t = build_tower(FieldSpec(p=3, e=1, m=1))
    assert t.qm == 3
    # trace is the identity on F_3
    for x in range(3):
        assert t.trace_to_subfield(x) == x
        assert t.trace_to_prime(x) == x


def test_exp_log_round_trip(f35):
    for i in range(f35.order):
        assert f35.log[f35.exp[i]] == i
    xs = np.arange(1, f35.qm)
    assert np.array_equal(f35.exp[f35.log[xs]], xs)


def test_field_axioms_sampled(f44):
    rng = np.random.default_rng(7)
    for _ in range(200):
        x, y, z = rng.integers(0, f44.qm, size=3)
        x, y, z = int(x), int(y), int(z)
        assert f44.add(x, y) == f44.add(y, x)
        assert f44.add(f44.add(x, y), z) == f44.add(x, f44.add(y, z))
        assert f44.mul(x, f44.add(y, z)) == f44.add(f44.mul(x, y), f44.mul(x, z))
        assert f44.add(x, f44.neg(x)) == 0
        if x != 0:
            assert f44.mul(x, f44.inv(x)) == 1


def test_trace_count_f35(f35):
    # elements with absolute trace zero: exactly 3^4 = 81 of the 243
    assert int(np.count_nonzero(f35.trace_p == 0)) == 81


def test_trace_surjective_and_balanced(f44):
    vals = f44.trace_q[np.arange(f44.qm)]
    counts = {v: 0 for v in f44.subfield_elements.tolist()}
    for v in vals.tolist():
        counts[v] += 1
    assert all(c == f44.qm // f44.q for c in counts.values())
    pvals = f44.trace_p[np.arange(f44.qm)]
    for t in range(f44.p):
        assert int(np.count_nonzero(pvals == t)) == f44.qm // f44.p


def test_trace_linearity_exhaustive_small():
    t = build_tower(FieldSpec(p=2, e=1, m=2))  # F_4 over F_2
    # Tr_{F_4/F_2}(gamma) = gamma + gamma^2 = 1 for gamma^2 + gamma + 1 = 0
    gamma = int(t.exp[1])
    assert t.trace_to_prime(gamma) == 1
    assert t.trace_to_prime(0) == 0
    for x in range(t.qm):
        for y in range(t.qm):
            assert t.trace_to_prime(t.add(x, y)) == (t.trace_to_prime(x) + t.trace_to_prime(y)) % 2


def test_trace_fq_linearity(f44):
    rng = np.random.default_rng(3)
    lams = f44.subfield_elements.tolist()
    for _ in range(100):
        x, y = (int(v) for v in rng.integers(0, f44.qm, size=2))
        assert f44.trace_to_subfield(f44.add(x, y)) == f44.add(
            f44.trace_to_subfield(x), f44.trace_to_subfield(y)
        )
        for lam in lams:
            assert f44.trace_to_subfield(f44.mul(lam, x)) == f44.mul(lam, f44.trace_to_subfield(x))


def test_trace_transitivity(f44, f35):
    # Tr to F_p factors through Tr to F_q; nontrivial when e > 1
    for x in range(f44.qm):
        inner = f44.trace_to_subfield(x)
        # trace of a subfield element down to F_p: sum of e Frobenius powers
        acc, cur = inner, inner
        for _ in range(f44.e - 1):
            cur = int(f44.frob[cur])
            acc = f44.add(acc, cur)
        assert acc == f44.trace_to_prime(x)
    for x in range(f35.qm):
        assert f35.trace_to_prime(x) == f35.trace_to_subfield(x) % 3


def test_hyperplane_sizes(f35, f44):
    for a in (1, int(f35.exp[5]), int(f35.exp[100])):
        assert len(f35.hyperplane(a)) == 81
    with pytest.raises(ValueError):
        f35.hyperplane(0)
    # L(a) = L(lambda a) for subfield scalars
    a = int(f44.exp[3])
    for lam in f44.subfield_elements[1:].tolist():
        assert np.array_equal(f44.hyperplane(a), f44.hyperplane(f44.mul(lam, a)))
    # two independent forms cut out a codim-2 space
    h1 = set(f44.hyperplane(1).tolist())
    h2 = set(f44.hyperplane(int(f44.exp[7])).tolist())
    assert len(h1 & h2) == 16


def test_span_and_annihilator(f34):
    assert f34.linear_span([]).tolist() == [0]
    x = int(f34.exp[10])
    single = f34.linear_span([x])
    assert len(single) == f34.q
    assert set(single.tolist()) == {f34.mul(lam, x) for lam in f34.subfield_elements.tolist()}
    # annihilator of {0} / empty set is everything
    assert len(f34.trace_annihilator([0])) == f34.qm
    assert len(f34.trace_annihilator([])) == f34.qm
    # annihilator of a spanning set is {0}
    spanning = [int(f34.exp[k]) for k in range(f34.m)]
    assert f34.trace_annihilator(spanning).tolist() == [0]


def test_annihilator_duality_random(f34):
    # span(U) = V iff ann(U) subset of ann(V), for U inside V; and ann(ann(S)) = span(S)
    rng = np.random.default_rng(11)
    for _ in range(50):
        vdim = int(rng.integers(1, f34.m + 1))
        vgens = rng.integers(1, f34.qm, size=vdim).tolist()
        v1 = f34.linear_span(vgens)
        size = int(rng.integers(1, min(len(v1), 6)))
        u1 = rng.choice(v1, size=size, replace=False).tolist()
        spans = len(f34.linear_span(u1)) == len(v1)
        lu = set(f34.trace_annihilator(u1).tolist())
        lv = set(f34.trace_annihilator(v1.tolist()).tolist())
        assert spans == lu.issubset(lv)
        assert np.array_equal(
            f34.trace_annihilator(f34.trace_annihilator(u1).tolist()),
            f34.linear_span(u1),
        )


def test_subfield_membership(f44):
    step = f44.subfield_step
    for x in range(f44.qm):
        expected = x == 0 or int(f44.log[x]) % step == 0
        assert f44.in_subfield(x) == expected
        if x != 0:
            # power characterization: nonzero x lies in F_q iff x^(q-1) = 1
            assert (f44.pow(x, f44.q - 1) == 1) == expected
    assert {int(v) for v in f44.subfield_elements} == {x for x in range(f44.qm) if f44.in_subfield(x)}


def test_coordinate_tables(f44):
    elem_of_code, code_of_elem = f44.coordinate_tables()
    assert len(np.unique(elem_of_code)) == f44.qm
    assert np.array_equal(elem_of_code[code_of_elem], np.arange(f44.qm))
    # code digit k scales gamma^k
    assert elem_of_code[0] == 0
    assert elem_of_code[1] == f44.subfield_elements[1]  # c_0 = label 1 -> element 1
    assert elem_of_code[f44.q] == f44.exp[1]  # c_1 = label 1 -> gamma


def test_field_spec_json_round_trip():
    spec = FieldSpec.from_json('{"p": 2, "e": 2, "m": 4}')
    assert spec.modulus is None
    t = build_tower(spec)
    assert t.qm == 256
    spec2 = FieldSpec.from_json({"p": 3, "e": 1, "m": 4, "modulus": [2, 1, 0, 0, 1]})
    assert spec2.modulus == (2, 1, 0, 0, 1)
    assert spec2.to_json()["modulus"] == [2, 1, 0, 0, 1]


def test_trace_linearity_exhaustive_f35(f35):
    xs = np.arange(f35.qm, dtype=np.int64)
    tr = f35.trace_q[xs].astype(np.int64)
    for y in range(f35.qm):
        sums = f35._add_vec(xs, np.int64(y))
        assert np.array_equal(f35.trace_q[sums].astype(np.int64), (tr + tr[y]) % 3)
