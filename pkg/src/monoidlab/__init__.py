"""Square-free and radical factorizations in commutative cancellative monoids."""

from .classify import ClassificationReport, Verdict, classify, gpr_set, irr_set, sqf_set
from .conditions import (
    CONDITIONS,
    ConditionId,
    ConditionResult,
    SurveyReport,
    Witness,
    check_all,
    check_condition,
    check_uniqueness,
    survey,
    validate_witness,
)
from .core import DEFAULT_BUDGET, Budget, Monoid, MonoidClass, Ternary
from .families import build, parse_spec
from .profiles import Profile, constraint_set, enumerate_profiles, is_consistent, table_breakdown

__all__ = [
    "CONDITIONS", "DEFAULT_BUDGET", "Budget", "ClassificationReport", "ConditionId", "ConditionResult",
    "Monoid", "MonoidClass", "Profile", "SurveyReport", "Ternary", "Verdict", "Witness", "build",
    "check_all", "check_condition", "check_uniqueness", "classify", "constraint_set",
    "enumerate_profiles", "gpr_set", "irr_set", "is_consistent", "parse_spec", "sqf_set", "survey",
    "table_breakdown", "validate_witness",
]
