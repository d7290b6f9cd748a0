"""Secret sharing on the dual of a subset code.

Shares are coordinates of dual codewords; the secret sits at a chosen
nonzero field element x1 and the other coordinates belong to one
participant each.  Minimal access sets correspond to support-minimal
codewords of the primal code whose x1-coordinate is 1, so everything here
is counted on the primal side: the total is a coset count and each
participant's coverage has a two-value closed form depending only on
whether x1 avoids the subset and whether the participant is a scalar
multiple of x1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import SubsetCode
from .pds import GuardExceeded


@dataclass
class AccessReport:
    x1: int
    x1_log: int
    x1_in_complement: bool
    total: int
    oracle_total: int | None          # filtered to truly minimal words when the code is not minimal
    coverage: dict[int, int]          # participant log -> count
    dictators: list[int]              # participant logs lying in every minimal access set
    classification: str               # "dictatorial" | "democratic"

    def to_json(self) -> dict:
        classes: dict[int, int] = {}
        for n in self.coverage.values():
            classes[n] = classes.get(n, 0) + 1
        return {
            "x1_log": self.x1_log,
            "x1_in_Dbar": self.x1_in_complement,
            "total": self.total,
            "coverage_classes": [
                {"n": n, "count": c} for n, c in sorted(classes.items(), reverse=True)
            ],
            "classification": self.classification,
        }


def _value_labels_at(code: SubsetCode, x: int) -> np.ndarray:
    """Dense label of every word's coordinate at position x (a nonzero element)."""
    tower = code.tower
    add_q, _, _ = tower.subfield_tables()
    q, qm = tower.q, tower.qm
    u_all = np.repeat(np.arange(q, dtype=np.int64), qm)
    v_all = np.tile(np.arange(qm, dtype=np.int64), q)
    tr_labels = tower.subfield_index[tower.trace_q[tower.mul_vec(x, v_all)]].astype(np.int64)
    if code.subset.indicator[x]:
        return add_q[u_all, tr_labels].astype(np.int64)
    return tr_labels


def minimal_access_count(code: SubsetCode, x1: int, code_is_minimal: bool = True):
    """Number of minimal access sets: words with coordinate 1 at x1.

    With a minimal code this is exactly q^m (a coset count).  Otherwise the
    support-containment oracle filters to genuinely minimal words and both
    numbers are reported.
    """
    mask1 = _value_labels_at(code, x1) == 1
    total = int(np.count_nonzero(mask1))
    if code_is_minimal:
        return total, None
    flags = code.cover_flags()
    tower = code.tower
    oracle_total = 0
    for w in np.nonzero(mask1)[0].tolist():
        u, v = code.word_of_index(int(w))
        if u != 0:
            # normalize to the projective representative with u-label 1
            inv = next(l for l in range(1, tower.q) if tower.subfield_tables()[1][u, l] == 1)
            rep = code.word_index(1, tower.mul(int(tower.subfield_elements[inv]), v))
        else:
            rep = code.word_index(0, int(tower.exp[int(tower.log[v]) % tower.subfield_step]))
        if flags[rep]:
            oracle_total += 1
    return total, oracle_total


def participant_coverage(code: SubsetCode, x1: int) -> dict[int, int]:
    """For each participant (every nonzero element except x1), the number of
    minimal access sets containing it, by direct enumeration."""
    tower = code.tower
    if x1 == 0:
        raise ValueError("the secret coordinate must be a nonzero element")
    mask1 = _value_labels_at(code, x1) == 1
    sup = np.unpackbits(code.supports(), axis=1, count=tower.order).astype(bool)
    counts = sup[mask1].sum(axis=0)
    x1_log = int(tower.log[x1])
    return {
        j: int(counts[j]) for j in range(tower.order) if j != x1_log
    }


def coverage_closed_form(code: SubsetCode, x1: int, xi: int) -> int:
    """The two-value formula: q^m for scalar multiples of an x1 outside the
    subset, q^m - q^(m-1) in every other case."""
    tower = code.tower
    qm = tower.qm
    in_complement = not code.subset.indicator[x1]
    same_line = (int(tower.log[xi]) - int(tower.log[x1])) % tower.subfield_step == 0
    if in_complement and same_line:
        return qm
    return qm - qm // tower.q


def analyze_scheme(code: SubsetCode, x1: int, code_is_minimal: bool = True) -> AccessReport:
    tower = code.tower
    total, oracle_total = minimal_access_count(code, x1, code_is_minimal)
    coverage = participant_coverage(code, x1)
    dictators = sorted(j for j, n in coverage.items() if n == total)
    classification = "dictatorial" if dictators else "democratic"
    return AccessReport(
        x1=x1,
        x1_log=int(tower.log[x1]),
        x1_in_complement=not code.subset.indicator[x1],
        total=total,
        oracle_total=oracle_total,
        coverage=coverage,
        dictators=dictators,
        classification=classification,
    )
