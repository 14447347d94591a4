"""Partial difference sets with Denniston parameters in F_{q^m} x F_{q^{2m}}."""

from .construction import (
    Group,
    ParamSet,
    PdsSet,
    build_denniston,
    expected_char_values,
    expected_params,
    paley_pds,
    projective_set_params,
    quadric_pds,
    srg_params,
)
from .cycint import CycInt
from .gf_tower import ZERO, FieldSpec, FieldTable, build_field, build_plain_field
from .verify import VerifyReport, char_spectrum, difference_count, verify_pds

__all__ = [
    "ZERO",
    "CycInt",
    "FieldSpec",
    "FieldTable",
    "Group",
    "ParamSet",
    "PdsSet",
    "VerifyReport",
    "build_denniston",
    "build_field",
    "build_plain_field",
    "char_spectrum",
    "difference_count",
    "expected_char_values",
    "expected_params",
    "paley_pds",
    "projective_set_params",
    "quadric_pds",
    "srg_params",
    "verify_pds",
]
