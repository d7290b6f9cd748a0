import numpy as np
import pytest

from pdscodes.codes import SubsetCode
from pdscodes.field import FieldSpec, build_tower
from pdscodes.pds import FieldSubset, build_cyclotomic_subset
from pdscodes.secretsharing import (
    analyze_scheme,
    coverage_closed_form,
    minimal_access_count,
    participant_coverage,
)


@pytest.fixture(scope="module")
def ex31_code(f44):
    return SubsetCode(build_cyclotomic_subset(f44, 5, [1, 2, 3, 4]))


@pytest.fixture(scope="module")
def row1_code(f35):
    return SubsetCode(build_cyclotomic_subset(f35, 11, [0]))


def test_minimal_access_totals(ex31_code, row1_code, f44, f35):
    for x1 in (1, int(f44.exp[3]), int(f44.exp[200])):
        total, _ = minimal_access_count(ex31_code, x1)
        assert total == 256
    for x1 in (1, int(f35.exp[11])):
        total, _ = minimal_access_count(row1_code, x1)
        assert total == 243


def test_coverage_closed_form_x1_outside(ex31_code, f44):
    # x1 in the complement: its nontrivial scalar multiples are dictators
    x1 = int(ex31_code.subset.complement().members[0])
    coverage = participant_coverage(ex31_code, x1)
    x1_log = int(f44.log[x1])
    step = f44.subfield_step
    for j, n in coverage.items():
        xi = int(f44.exp[j])
        assert n == coverage_closed_form(ex31_code, x1, xi)
        if (j - x1_log) % step == 0:
            assert n == 256
        else:
            assert n == 192
    scalar_lines = [j for j in coverage if (j - x1_log) % step == 0]
    assert len(scalar_lines) == f44.q - 2  # x1 itself is not a participant


def test_coverage_closed_form_x1_inside(ex31_code, f44):
    x1 = int(ex31_code.subset.members[0])
    coverage = participant_coverage(ex31_code, x1)
    assert set(coverage.values()) == {192}
    report = analyze_scheme(ex31_code, x1)
    assert report.classification == "democratic"
    assert report.dictators == []


def test_classification_dictatorial(ex31_code):
    x1 = int(ex31_code.subset.complement().members[0])
    report = analyze_scheme(ex31_code, x1)
    assert report.classification == "dictatorial"
    assert len(report.dictators) == 2  # q - 2 with q = 4
    out = report.to_json()
    assert out["x1_in_Dbar"] is True
    assert out["total"] == 256
    assert {"n": 256, "count": 2} in out["coverage_classes"]
    assert {"n": 192, "count": 252} in out["coverage_classes"]


def test_row1_coverage_both_sides(row1_code, f35):
    inside = int(row1_code.subset.members[0])
    outside = int(row1_code.subset.complement().members[0])
    for x1 in (inside, outside):
        coverage = participant_coverage(row1_code, x1)
        for j, n in coverage.items():
            assert n == coverage_closed_form(row1_code, x1, int(f35.exp[j]))
    # q = 3: exactly one dictator when x1 avoids the subset
    report = analyze_scheme(row1_code, outside)
    assert len(report.dictators) == 1
    assert report.classification == "dictatorial"


def test_q2_degenerates_to_democratic():
    f64 = build_tower(FieldSpec(p=2, e=1, m=6))
    code = SubsetCode(build_cyclotomic_subset(f64, 9, [0, 3, 6]))
    outside = int(code.subset.complement().members[0])
    report = analyze_scheme(code, outside)
    assert report.total == 64
    assert report.dictators == []  # F_2^* has no nontrivial scalars
    assert report.classification == "democratic"


def test_coverage_constant_on_scalar_classes(ex31_code, f44):
    x1 = int(ex31_code.subset.complement().members[1])
    coverage = participant_coverage(ex31_code, x1)
    step = f44.subfield_step
    for j, n in coverage.items():
        partner = (j + step) % f44.order
        if partner != int(f44.log[x1]):
            assert coverage[partner] == n


def test_access_sets_are_support_minimal(ex31_code, f44):
    # sampled words with coordinate 1 at x1: no other such word has support inside
    from pdscodes.secretsharing import _value_labels_at

    x1 = int(ex31_code.subset.complement().members[0])
    labels = _value_labels_at(ex31_code, x1)
    ones = np.nonzero(labels == 1)[0]
    sup = ex31_code.supports()
    rng = np.random.default_rng(41)
    for w in rng.choice(ones, size=10, replace=False).tolist():
        inside = ~np.bitwise_and(sup[ones], ~sup[int(w)]).any(axis=1)
        assert int(inside.sum()) == 1  # only w itself


def test_nonminimal_code_reports_both_counts(f34):
    members = f34.hyperplane(1)
    code = SubsetCode(FieldSubset(f34, members[members != 0]))
    x1 = int(code.subset.members[0])
    total, oracle_total = minimal_access_count(code, x1, code_is_minimal=False)
    assert total == f34.qm
    assert oracle_total is not None and oracle_total < total
