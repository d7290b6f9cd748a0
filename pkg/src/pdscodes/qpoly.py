"""Reduced q-polynomials: the F_q-linear transformations of F_{q^m}.

f(X) = a_0 X + a_1 X^q + ... + a_{m-1} X^(q^(m-1)) with coefficients in
the big field.  The trace-dual pairing Tr(f(x) y) = Tr(dual(f)(y) x)
drives the induced action on codes: permuting coordinates of a codeword
by a subset automorphism lands on the codeword indexed by the dual image.
"""
from __future__ import annotations

import json
from typing import Sequence

import numpy as np

from .field import FieldTower
from .pds import FieldSubset


class QPolynomial:
    """A reduced q-polynomial over the tower's big field."""

    def __init__(self, tower: FieldTower, coeffs: Sequence[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != tower.m:
            raise ValueError(f"need exactly m = {tower.m} coefficients (reduced form)")
        if any(not 0 <= c < tower.qm for c in coeffs):
            raise ValueError("coefficients must be field elements")
        self.tower = tower
        self.coeffs = coeffs
        self._images = None

    @classmethod
    def identity(cls, tower: FieldTower) -> "QPolynomial":
        return cls(tower, (1,) + (0,) * (tower.m - 1))

    @classmethod
    def scaling(cls, tower: FieldTower, a: int) -> "QPolynomial":
        return cls(tower, (a,) + (0,) * (tower.m - 1))

    @classmethod
    def frobenius(cls, tower: FieldTower, i: int = 1) -> "QPolynomial":
        """x -> x^(q^i)."""
        coeffs = [0] * tower.m
        coeffs[i % tower.m] = 1
        return cls(tower, coeffs)

    @classmethod
    def from_basis_images(cls, tower: FieldTower, images: Sequence[int]) -> "QPolynomial":
        """The unique reduced q-polynomial sending gamma^i to images[i] for i < m.

        Solves the m x m Moore-style system sum_j a_j * (gamma^i)^(q^j) = y_i
        by Gaussian elimination over the big field.
        """
        m, q = tower.m, tower.q
        if len(images) != m:
            raise ValueError(f"need one image per basis element (m = {m})")
        rows = []
        for i in range(m):
            beta = int(tower.exp[i])
            rows.append([tower.pow(beta, q ** j) for j in range(m)] + [int(images[i])])
        for col in range(m):
            piv = next((r for r in range(col, m) if rows[r][col] != 0), None)
            if piv is None:
                raise ValueError("basis images are degenerate; no reduced representation")
            rows[col], rows[piv] = rows[piv], rows[col]
            inv = tower.inv(rows[col][col])
            rows[col] = [tower.mul(inv, v) for v in rows[col]]
            for r in range(m):
                if r != col and rows[r][col] != 0:
                    factor = rows[r][col]
                    rows[r] = [
                        tower.sub(rows[r][c], tower.mul(factor, rows[col][c]))
                        for c in range(m + 1)
                    ]
        return cls(tower, [rows[j][m] for j in range(m)])

    @classmethod
    def from_json(cls, tower: FieldTower, obj: dict | str) -> "QPolynomial":
        if isinstance(obj, str):
            obj = json.loads(obj)
        logs = obj["coeffs_logs"]
        coeffs = [0 if lg is None else int(tower.exp[int(lg) % tower.order]) for lg in logs]
        return cls(tower, coeffs)

    def to_json(self) -> dict:
        logs = [None if c == 0 else int(self.tower.log[c]) for c in self.coeffs]
        return {"coeffs_logs": logs}

    # -- evaluation --------------------------------------------------------

    def images(self) -> np.ndarray:
        """f applied to every field element (indexed by element)."""
        if self._images is None:
            tower = self.tower
            xs = np.arange(tower.qm, dtype=np.int64)
            acc = np.zeros(tower.qm, dtype=np.int64)
            cur = xs
            for a in self.coeffs:
                if a:
                    acc = tower._add_vec(acc, tower.mul_vec(int(a), cur))
                cur = tower.frobq[cur].astype(np.int64)
            self._images = acc
        return self._images

    def __call__(self, x: int) -> int:
        return int(self.images()[x])

    def is_linear_over_subfield(self) -> bool:
        """Sanity check of F_q-linearity by sampling (true by construction)."""
        tower = self.tower
        rng = np.random.default_rng(0)
        img = self.images()
        for _ in range(32):
            x, y = (int(v) for v in rng.integers(0, tower.qm, size=2))
            lam = int(tower.subfield_elements[int(rng.integers(0, tower.q))])
            lhs = img[tower.add(tower.mul(lam, x), y)]
            rhs = tower.add(tower.mul(lam, int(img[x])), int(img[y]))
            if lhs != rhs:
                return False
        return True

    def is_bijective(self) -> bool:
        """Kernel triviality via a spanning basis of images."""
        tower = self.tower
        img = self.images()
        basis_images = [int(img[tower.exp[i]]) for i in range(tower.m)]
        return len(tower.span_basis(basis_images)) == tower.m

    # -- algebra -------------------------------------------------------------

    def trace_dual(self) -> "QPolynomial":
        """The unique reduced g with Tr(f(x) y) = Tr(g(y) x) for all x, y."""
        tower = self.tower
        m, q = tower.m, tower.q
        out = []
        for i in range(m):
            a = self.coeffs[(m - i) % m]
            out.append(tower.pow(a, q ** i) if a else 0)
        return QPolynomial(tower, out)

    def compose(self, other: "QPolynomial") -> "QPolynomial":
        """self after other, reduced: coefficients c_k = sum a_i * b_j^(q^i), i+j = k mod m."""
        tower = self.tower
        m, q = tower.m, tower.q
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                k = (i + j) % m
                out[k] = tower.add(out[k], tower.mul(a, tower.pow(b, q ** i)))
        return QPolynomial(tower, out)

    def __eq__(self, other):
        return (
            isinstance(other, QPolynomial)
            and self.tower is other.tower
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"QPolynomial(coeffs={self.coeffs})"


def is_automorphism_of(subset: FieldSubset, g: QPolynomial) -> bool:
    """Bijective and maps the subset onto itself."""
    if not g.is_bijective():
        return False
    return bool(np.all(subset.indicator[g.images()[subset.members]]))


def is_semilinear_automorphism_of(subset: FieldSubset, p_power: int) -> bool:
    """Whether x -> x^(p^r) preserves the subset (always bijective, F_p-linear only)."""
    tower = subset.tower
    logs = tower.log[subset.members].astype(np.int64)
    images = tower.exp[(logs * pow(tower.p, p_power, tower.order)) % tower.order]
    return bool(np.all(subset.indicator[images]))


def induced_code_automorphism_check(code, g: QPolynomial, enforce_preservation: bool = True) -> bool:
    """Whether permuting coordinates by g maps each word onto the dual-indexed word.

    Checks c(u, v) at position g(x) against c(u, dual(v)) at position x for
    every index pair (u, v), exhaustively.
    """
    subset = code.subset
    tower = code.tower
    if enforce_preservation and not is_automorphism_of(subset, g):
        raise ValueError("g does not preserve the subset; induced action undefined")
    dual = g.trace_dual()
    img = g.images()
    # position permutation: coordinate x picks up the value at g(x)
    perm = tower.log[img[tower.exp[np.arange(tower.order)]]].astype(np.int64)
    if np.any(perm < 0):
        raise ValueError("g is not bijective on the multiplicative group")
    dual_img = dual.images()
    for u in range(tower.q):
        for v in range(tower.qm):
            original = code.codeword(u, v)
            permuted = original[perm]
            target = code.codeword(u, int(dual_img[v]))
            if not np.array_equal(permuted, target):
                return False
    return True
