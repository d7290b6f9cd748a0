"""Minimal linear codes from multiplicatively invariant subsets of finite fields."""

from .charsums import Spectrum, full_spectrum, orthogonality_sum, psi_sum
from .codes import (
    MinimalityReport,
    SubsetCode,
    WeightDistribution,
    ab_condition,
    minimality_cyclotomic_sufficient,
    minimality_latin_sufficient,
    minimality_pds_sufficient,
    weight_class,
    weight_distribution_predicted,
)
from .cyclotomic import CyclotomicInteger
from .blocking import BlockingReport, is_cutting_vectorial_blocking
from .field import FieldSpec, FieldTower, build_tower
from .pds import (
    FieldSubset,
    PdsCertificate,
    PdsVerificationError,
    build_cyclotomic_subset,
    cyclotomic_classes,
    is_fq_invariant,
    predicted_cyclotomic_eigenvalues,
    quadric_subset,
    verify_pds_direct,
    verify_pds_spectral,
)
from .qpoly import QPolynomial, induced_code_automorphism_check, is_automorphism_of
from .recipes import RECIPES, build_recipe
from .secretsharing import AccessReport, analyze_scheme

__version__ = "0.1.0"

__all__ = [
    "AccessReport",
    "BlockingReport",
    "CyclotomicInteger",
    "FieldSpec",
    "FieldSubset",
    "FieldTower",
    "MinimalityReport",
    "PdsCertificate",
    "PdsVerificationError",
    "QPolynomial",
    "RECIPES",
    "Spectrum",
    "SubsetCode",
    "WeightDistribution",
    "ab_condition",
    "analyze_scheme",
    "build_cyclotomic_subset",
    "build_recipe",
    "build_tower",
    "cyclotomic_classes",
    "full_spectrum",
    "induced_code_automorphism_check",
    "is_automorphism_of",
    "is_cutting_vectorial_blocking",
    "is_fq_invariant",
    "minimality_cyclotomic_sufficient",
    "minimality_latin_sufficient",
    "minimality_pds_sufficient",
    "orthogonality_sum",
    "predicted_cyclotomic_eigenvalues",
    "psi_sum",
    "quadric_subset",
    "verify_pds_direct",
    "verify_pds_spectral",
    "weight_class",
    "weight_distribution_predicted",
]
