"""Candidate subsets of F_{q^m}^* and partial-difference-set verification.

A subset is carried as an indicator bitset plus a construction descriptor
(union of cyclotomic classes, explicit element list, or the zero set of a
quadratic form).  Verification runs on two independent routes: the
spectral one reads the distinct character-sum values off the full
spectrum, the combinatorial one counts differences directly; on small
fields both must agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

import numpy as np

from .charsums import Spectrum, full_spectrum, is_invariant_under_subfield
from .field import FieldTower

DIRECT_VERIFY_CAP = 10_000


class PdsVerificationError(ValueError):
    """The subset is not a PDS (or fails a precondition); carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GuardExceeded(RuntimeError):
    """A cost guard stopped an exhaustive computation."""


# -- subset construction ----------------------------------------------------


@dataclass(frozen=True)
class CyclotomicOrigin:
    N: int
    J: tuple[int, ...]

    def to_json(self):
        return {"cyclotomic": {"N": self.N, "J": list(self.J)}}


@dataclass(frozen=True)
class ExplicitOrigin:
    def to_json(self):
        return {"explicit": {}}


@dataclass(frozen=True)
class QuadricOrigin:
    gram: tuple[tuple[int, ...], ...]
    kind: str

    def to_json(self):
        return {"quadric": {"gram": [list(r) for r in self.gram], "kind": self.kind}}


class FieldSubset:
    """A subset of F_{q^m}^* with cached indicator, members and log list."""

    def __init__(self, tower: FieldTower, members: np.ndarray, origin=None):
        members = np.unique(np.asarray(members, dtype=np.int64))
        if len(members) and members[0] == 0:
            raise ValueError("subsets live in the multiplicative group; 0 not allowed")
        if np.any(members >= tower.qm) or np.any(members < 0):
            raise ValueError("member out of field range")
        self.tower = tower
        self.members = members
        self.indicator = np.zeros(tower.qm, dtype=bool)
        self.indicator[members] = True
        self.origin = origin if origin is not None else ExplicitOrigin()

    def __len__(self):
        return int(len(self.members))

    def __contains__(self, x: int) -> bool:
        return bool(self.indicator[x])

    @property
    def logs(self) -> np.ndarray:
        return np.sort(self.tower.log[self.members].astype(np.int64))

    def is_proper(self) -> bool:
        return 0 < len(self) < self.tower.order

    def complement(self) -> "FieldSubset":
        comp = np.setdiff1d(
            self.tower.exp[np.arange(self.tower.order)].astype(np.int64), self.members
        )
        origin = None
        if isinstance(self.origin, CyclotomicOrigin):
            rest = tuple(sorted(set(range(self.origin.N)) - set(self.origin.J)))
            if rest:
                origin = CyclotomicOrigin(self.origin.N, rest)
        return FieldSubset(self.tower, comp, origin)

    def is_symmetric(self) -> bool:
        """Closed under negation (needed for a Cayley connection set)."""
        return bool(np.all(self.indicator[self.tower.neg_table[self.members]]))

    def spectrum(self, mode: str = "auto", workers: int = 1) -> Spectrum:
        return full_spectrum(self.tower, self.members, mode=mode, workers=workers)

    @classmethod
    def from_logs(cls, tower: FieldTower, logs: Sequence[int], origin=None) -> "FieldSubset":
        logs = np.asarray(list(logs), dtype=np.int64) % tower.order
        return cls(tower, tower.exp[logs].astype(np.int64), origin)

    @classmethod
    def from_json(cls, tower: FieldTower, obj: dict) -> "FieldSubset":
        if "cyclotomic" in obj:
            c = obj["cyclotomic"]
            return build_cyclotomic_subset(tower, int(c["N"]), c["J"])
        if "explicit" in obj:
            return cls.from_logs(tower, obj["explicit"]["logs"])
        if "quadric" in obj:
            qd = obj["quadric"]
            gram = qd.get("gram")
            subset, _ = quadric_subset(tower, kind=qd.get("kind"), gram=gram)
            return subset
        raise ValueError("subset spec must be one of cyclotomic/explicit/quadric")

    def to_json(self) -> dict:
        out = self.origin.to_json()
        if isinstance(self.origin, ExplicitOrigin):
            out["explicit"]["logs"] = self.logs.tolist()
        return out


def cyclotomic_classes(tower: FieldTower, N: int) -> list[np.ndarray]:
    """The N classes gamma^i * <gamma^N>, each of size (q^m-1)/N."""
    if N < 1 or tower.order % N != 0:
        raise ValueError(f"N={N} does not divide q^m - 1 = {tower.order}")
    return [
        tower.exp[np.arange(i, tower.order, N)].astype(np.int64) for i in range(N)
    ]


def build_cyclotomic_subset(tower: FieldTower, N: int, J: Sequence[int]) -> FieldSubset:
    """Union of the classes indexed by J; enforces the odd-q symmetry conditions."""
    if tower.order % N != 0:
        raise ValueError(f"N={N} does not divide q^m - 1 = {tower.order}")
    J = tuple(sorted({int(j) % N for j in J}))
    if not J or len(J) >= N:
        raise ValueError("J must be a nonempty proper subset of Z_N")
    if tower.q % 2 == 1:
        half = tower.order // 2
        if half * 2 != tower.order or half % N != 0:
            raise ValueError(
                f"odd q requires N | (q^m-1)/2; got N={N}, (q^m-1)/2={tower.order // 2}"
            )
        shift = half % N
        if {(j + shift) % N for j in J} != set(J):
            raise ValueError("odd q requires J + (q^m-1)/2 = J (mod N)")
    members = np.concatenate(
        [tower.exp[np.arange(j, tower.order, N)].astype(np.int64) for j in J]
    )
    return FieldSubset(tower, members, CyclotomicOrigin(N, J))


def rho_invariant(tower: FieldTower, N: int, J: Sequence[int]) -> bool:
    """J closed under j -> j + (q^m-1)/(q-1) mod N (subfield-scaling shift)."""
    shift = tower.subfield_step % N
    J = {int(j) % N for j in J}
    return {(j + shift) % N for j in J} == J


def is_fq_invariant(subset: FieldSubset) -> bool:
    """Closure under F_q^* scaling; cyclotomic origins are cross-checked via rho."""
    direct = is_invariant_under_subfield(subset.tower, subset.indicator)
    if isinstance(subset.origin, CyclotomicOrigin):
        via_rho = rho_invariant(subset.tower, subset.origin.N, subset.origin.J)
        if via_rho != direct:
            raise AssertionError(
                "rho-invariance of J disagrees with direct scaling; construction bug"
            )
    return direct


# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class PdsCertificate:
    """Strongly-regular parameters and eigensystem of a verified PDS."""

    v: int
    k: int
    lam: int
    mu: int
    theta1: int
    theta2: int
    m1: int
    m2: int
    type_flag: str  # "latin" | "negative_latin" | "neither"
    r: int | None = None
    eps: int | None = None

    def __post_init__(self):
        if not self.theta1 > 0 > self.theta2:
            raise PdsVerificationError(
                f"restricted eigenvalues must straddle zero, got {self.theta1}, {self.theta2}"
            )
        if self.m1 + self.m2 != self.v - 1:
            raise PdsVerificationError("multiplicities must sum to v - 1")
        if self.k + self.m1 * self.theta1 + self.m2 * self.theta2 != 0:
            raise PdsVerificationError("spectrum trace is nonzero")
        if self.lam - self.mu != self.theta1 + self.theta2:
            raise PdsVerificationError("lambda - mu != theta1 + theta2")
        if self.k - self.mu != -self.theta1 * self.theta2:
            raise PdsVerificationError("k - mu != -theta1*theta2")

    def to_json(self) -> dict:
        out = {
            "v": self.v, "k": self.k, "lambda": self.lam, "mu": self.mu,
            "theta1": self.theta1, "theta2": self.theta2,
            "m1": self.m1, "m2": self.m2, "type": self.type_flag,
        }
        if self.r is not None:
            out["r"] = self.r
            out["epsilon"] = self.eps
        return out


def eigensystem_from_parameters(v: int, k: int, lam: int, mu: int):
    """Closed-form (theta1, theta2, m1, m2) of an srg; everything must be integral."""
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    s = isqrt(disc)
    if s * s != disc:
        raise PdsVerificationError(f"eigenvalue discriminant {disc} is not a perfect square")
    if (lam - mu + s) % 2 != 0:
        raise PdsVerificationError("non-integral eigenvalues")
    theta1 = (lam - mu + s) // 2
    theta2 = (lam - mu - s) // 2
    num = 2 * k + (v - 1) * (lam - mu)
    if s == 0 or num % s != 0:
        raise PdsVerificationError("non-integral multiplicities")
    m1 = ((v - 1) - num // s)
    m2 = ((v - 1) + num // s)
    if m1 % 2 or m2 % 2:
        raise PdsVerificationError("non-integral multiplicities")
    return theta1, theta2, m1 // 2, m2 // 2


def classify_latin_type(v: int, k: int, lam: int, mu: int):
    """Match (v,k,lambda,mu) against (n^2, r(n-eps), eps*n+r^2-3*eps*r, r^2-eps*r)."""
    n = isqrt(v)
    if n * n != v:
        return "neither", None, None
    for eps, flag in ((1, "latin"), (-1, "negative_latin")):
        if n - eps <= 0 or k % (n - eps) != 0:
            continue
        r = k // (n - eps)
        if lam == eps * n + r * r - 3 * eps * r and mu == r * r - eps * r:
            return flag, r, eps
    return "neither", None, None


def certificate_from_spectrum(subset: FieldSubset, spectrum: Spectrum) -> PdsCertificate:
    v, k = subset.tower.qm, len(subset)
    if not spectrum.all_rational:
        vals = spectrum._rational_mask[1:]
        witness = int(np.nonzero(~vals)[0][0]) + 1
        raise PdsVerificationError(
            "character sum is irrational at some a; not a PDS with integer eigenvalues",
            witness=witness,
        )
    restricted = spectrum.restricted_values()
    if len(restricted) != 2:
        raise PdsVerificationError(
            f"expected exactly two restricted eigenvalues, found {restricted}",
            witness=restricted,
        )
    (theta1, m1), (theta2, m2) = restricted
    if not theta1 > 0 > theta2:
        raise PdsVerificationError(
            f"restricted eigenvalues {theta1}, {theta2} do not straddle zero",
            witness=restricted,
        )
    mu = k + theta1 * theta2
    lam = mu + theta1 + theta2
    # the closed forms must reproduce what the spectrum shows
    t1, t2, mm1, mm2 = eigensystem_from_parameters(v, k, lam, mu)
    if (t1, t2, mm1, mm2) != (theta1, theta2, m1, m2):
        raise PdsVerificationError(
            "closed-form eigensystem disagrees with the observed spectrum",
            witness=((t1, t2, mm1, mm2), (theta1, theta2, m1, m2)),
        )
    flag, r, eps = classify_latin_type(v, k, lam, mu)
    return PdsCertificate(v, k, lam, mu, theta1, theta2, m1, m2, flag, r, eps)


def verify_pds_spectral(
    subset: FieldSubset, spectrum: Spectrum | None = None, mode: str = "auto", workers: int = 1
) -> tuple[PdsCertificate, Spectrum]:
    """Spectral PDS verification; raises PdsVerificationError with a witness."""
    if not subset.is_proper():
        raise PdsVerificationError("connection set must be nonempty and proper")
    if not subset.is_symmetric():
        bad = next(
            int(d) for d in subset.members if not subset.indicator[subset.tower.neg_table[d]]
        )
        raise PdsVerificationError("set is not symmetric (-D != D)", witness=bad)
    if spectrum is None:
        spectrum = subset.spectrum(mode=mode, workers=workers)
    return certificate_from_spectrum(subset, spectrum), spectrum


def verify_pds_direct(subset: FieldSubset, cap: int = DIRECT_VERIFY_CAP) -> tuple[int, int]:
    """Combinatorial verification: |D ∩ (D + g)| constant on D and off D.

    Uses one difference representative per F_q^*-class when the set is
    invariant (identical verdict, q-1 times faster).
    """
    tower = subset.tower
    if tower.qm > cap:
        raise GuardExceeded(f"direct verification capped at {cap} field elements")
    if not subset.is_proper():
        raise PdsVerificationError("connection set must be nonempty and proper")
    if not subset.is_symmetric():
        raise PdsVerificationError("set is not symmetric (-D != D)")

    if is_fq_invariant(subset):
        reps = tower.exp[np.arange(tower.subfield_step)].astype(np.int64)
    else:
        reps = tower.exp[np.arange(tower.order)].astype(np.int64)

    lam = mu = None
    lam_g = mu_g = None
    for g in reps.tolist():
        shifted = tower.add_sets(subset.members, np.int64(g))
        count = int(np.count_nonzero(subset.indicator[shifted]))
        if subset.indicator[g]:
            if lam is None:
                lam, lam_g = count, g
            elif count != lam:
                raise PdsVerificationError(
                    "common-neighbor count not constant on the set",
                    witness=(lam_g, g, lam, count),
                )
        else:
            if mu is None:
                mu, mu_g = count, g
            elif count != mu:
                raise PdsVerificationError(
                    "common-neighbor count not constant off the set",
                    witness=(mu_g, g, mu, count),
                )
    return int(lam), int(mu)


# -- cyclotomic predictions ---------------------------------------------------


@dataclass(frozen=True)
class CyclotomicPrediction:
    """Eigenvalue prediction for a union of cyclotomic classes (semiprimitive case)."""

    N: int
    J: tuple[int, ...]
    u: int
    ell1: int
    t: int
    sqrt_qm: int
    certificate: PdsCertificate
    coset_values: tuple[int, ...]  # value of the character sum on gamma^i * D by i mod N


def predicted_cyclotomic_eigenvalues(
    tower: FieldTower, N: int, J: Sequence[int]
) -> CyclotomicPrediction:
    """Predicted spectrum of a class union, without touching the field tables.

    Needs the semiprimitivity p^ell = -1 (mod N) for some ell; the minimal
    such ell determines t through e*m = 2*ell*t.
    """
    p, em = tower.p, tower.em
    if N <= 1 or tower.order % N != 0 or N == tower.order:
        raise ValueError(f"N={N} must be a proper divisor > 1 of q^m - 1")
    J = tuple(sorted({int(j) % N for j in J}))
    if not J or len(J) >= N:
        raise ValueError("J must be a nonempty proper subset of Z_N")
    if tower.q % 2 == 1:
        if (tower.order // 2) % N != 0:
            raise ValueError("odd q requires N | (q^m-1)/2")
        shift = (tower.order // 2) % N
        if {(j + shift) % N for j in J} != set(J):
            raise ValueError("odd q requires J + (q^m-1)/2 = J (mod N)")

    ell1 = None
    for ell in range(1, em // 2 + 1):
        if pow(p, ell, N) == N - 1:
            ell1 = ell
            break
    if ell1 is None:
        raise PdsVerificationError(
            f"no ell in 1..{em // 2} with {p}^ell = -1 (mod {N}); semiprimitivity fails"
        )
    if em % (2 * ell1) != 0:
        raise PdsVerificationError(f"2*ell1 = {2 * ell1} does not divide e*m = {em}")
    t = em // (2 * ell1)
    sqm = p ** (em // 2)
    u = len(J)
    k = u * tower.order // N

    sign = 1 if t % 2 == 0 else -1
    if (u * (-1 + sign * sqm)) % N != 0:
        raise PdsVerificationError("predicted eigenvalue is not an integer; inconsistent input")
    theta_a = u * (-1 + sign * sqm) // N          # multiplicity q^m - 1 - k
    theta_b = theta_a - sign * sqm                # multiplicity k
    mult_a, mult_b = tower.qm - 1 - k, k

    eps_type = 1 if t % 2 == 1 else -1            # latin for odd t
    r = u * (sqm + eps_type) // N

    sign_eps = -1 if (N % 2 == 0 and ((p ** ell1 + 1) // N) % 2 == 1) else 1
    if sign_eps ** t == 1:
        special = {(-j) % N for j in J}
    else:
        special = {(-j + N // 2) % N for j in J}
    coset_values = tuple(theta_b if i in special else theta_a for i in range(N))

    if theta_a > 0 > theta_b:
        th1, mm1, th2, mm2 = theta_a, mult_a, theta_b, mult_b
    elif theta_b > 0 > theta_a:
        th1, mm1, th2, mm2 = theta_b, mult_b, theta_a, mult_a
    else:
        raise PdsVerificationError(
            f"degenerate predicted eigenvalues {theta_a}, {theta_b} (one is zero)"
        )
    mu = k + th1 * th2
    lam = mu + th1 + th2
    flag = "latin" if eps_type == 1 else "negative_latin"
    cert = PdsCertificate(tower.qm, k, lam, mu, th1, th2, mm1, mm2, flag, r, eps_type)
    return CyclotomicPrediction(N, J, u, ell1, t, sqm, cert, coset_values)


# -- quadric subsets -----------------------------------------------------------


def _anisotropic_pair(tower: FieldTower):
    """Coefficients (a, b, c) of an irreducible binary form a*x^2+b*xy+c*y^2 over F_q."""
    add, mul, neg = tower.subfield_tables()
    q = tower.q
    if tower.q % 2 == 1:
        squares = {int(mul[i, i]) for i in range(1, q)}
        delta = next(i for i in range(1, q) if i not in squares)
        return 1, 0, int(neg[delta])          # x^2 - delta*y^2
    # even q: x^2 + x*y + delta*y^2 with no root <=> delta outside the image of z^2+z
    image = {int(add[i, int(mul[i, i])]) for i in range(q)}
    delta = next(i for i in range(1, q) if i not in image)
    return 1, 1, delta


def default_gram(tower: FieldTower, kind: str) -> tuple[tuple[int, ...], ...]:
    """Upper-triangular coefficient matrix of the canonical quadric of each kind."""
    m = tower.m
    gram = [[0] * m for _ in range(m)]
    pairs = m // 2
    limit = pairs - 1 if kind == "elliptic" else pairs
    for k in range(limit):
        gram[2 * k][2 * k + 1] = 1
    if kind == "elliptic":
        a, b, c = _anisotropic_pair(tower)
        gram[m - 2][m - 2] = a
        gram[m - 2][m - 1] = b
        gram[m - 1][m - 1] = c
    elif kind != "hyperbolic":
        raise ValueError("kind must be 'hyperbolic' or 'elliptic'")
    return tuple(tuple(row) for row in gram)


def _polar_form_rank(tower: FieldTower, gram) -> int:
    """Rank over F_q of the polarization B(x,y) = Q(x+y) - Q(x) - Q(y)."""
    add, mul, neg = tower.subfield_tables()
    m = len(gram)
    mat = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            val = int(add[gram[i][j], gram[j][i]]) if i != j else int(
                add[gram[i][i], gram[i][i]]
            )
            mat[i][j] = val
    rank = 0
    rows = [row[:] for row in mat]
    for col in range(m):
        piv = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv_label = None
        for cand in range(1, tower.q):
            if mul[rows[rank][col], cand] == 1:
                inv_label = cand
                break
        rows[rank] = [int(mul[v, inv_label]) for v in rows[rank]]
        for r in range(m):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [
                    int(add[rows[r][c], neg[mul[factor, rows[rank][c]]]]) for c in range(m)
                ]
        rank += 1
    return rank


def quadric_subset(
    tower: FieldTower, kind: str | None = None, gram=None
) -> tuple[FieldSubset, PdsCertificate]:
    """Nonzero zero-locus of a nondegenerate quadratic form, plus its predicted certificate.

    The field is viewed as F_q^m through the coordinate tables; gram is an
    upper-triangular coefficient matrix of dense F_q labels with
    Q(x) = sum over i<=j of gram[i][j] * x_i * x_j.
    """
    m, q = tower.m, tower.q
    if m < 4 or m % 2 != 0:
        raise ValueError("quadric construction needs even m >= 4")
    if (m, q) == (4, 2):
        raise ValueError("(m, q) = (4, 2) is excluded")
    if gram is None:
        if kind is None:
            raise ValueError("give a kind (hyperbolic/elliptic) or an explicit gram matrix")
        gram = default_gram(tower, kind)
    gram = tuple(tuple(int(v) for v in row) for row in gram)
    if len(gram) != m or any(len(row) != m for row in gram):
        raise ValueError(f"gram matrix must be {m}x{m}")
    if _polar_form_rank(tower, gram) != m:
        raise ValueError("quadratic form is degenerate (polar form has a radical)")

    add, mul, _ = tower.subfield_tables()
    element_of_code, _ = tower.coordinate_tables()
    codes = np.arange(tower.qm, dtype=np.int64)
    coords = np.empty((tower.qm, m), dtype=np.int64)
    for i in range(m):
        coords[:, i] = (codes // q ** i) % q
    values = np.zeros(tower.qm, dtype=np.int64)
    for i in range(m):
        for j in range(i, m):
            c = gram[i][j]
            if c:
                term = mul[mul[c, coords[:, i]], coords[:, j]]
                values = add[values, term]
    zero_codes = np.nonzero(values == 0)[0]
    members = element_of_code[zero_codes]
    members = members[members != 0]
    sqm = isqrt(tower.qm)

    half = q ** (m // 2 - 1)
    for eps, r, flag in ((1, half + 1, "latin"), (-1, half - 1, "negative_latin")):
        if len(members) == r * (sqm - eps):
            k = r * (sqm - eps)
            lam = eps * sqm + r * r - 3 * eps * r
            mu = r * r - eps * r
            t1, t2, m1, m2 = eigensystem_from_parameters(tower.qm, k, lam, mu)
            cert = PdsCertificate(tower.qm, k, lam, mu, t1, t2, m1, m2, flag, r, eps)
            if kind is not None and flag != {"hyperbolic": "latin", "elliptic": "negative_latin"}[kind]:
                raise ValueError(
                    f"form has {len(members)} zeros, inconsistent with a {kind} quadric"
                )
            detected = "hyperbolic" if eps == 1 else "elliptic"
            subset = FieldSubset(tower, members, QuadricOrigin(gram, detected))
            return subset, cert
    raise PdsVerificationError(
        f"zero count {len(members)} matches neither quadric type", witness=len(members)
    )
