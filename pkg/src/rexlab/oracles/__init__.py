from .enumeration import EnumSpec, count_terms, enumerate_terms, random_term
from .joinability import joinable, peaks
from .schemas import VALIDATORS, PropertyReport, ReportStatus, SchemaValidator
from .suites import SUITES, SuiteConfig, get_suite, run_all, run_suite

__all__ = [
    "EnumSpec",
    "PropertyReport",
    "ReportStatus",
    "SUITES",
    "SchemaValidator",
    "SuiteConfig",
    "VALIDATORS",
    "count_terms",
    "enumerate_terms",
    "get_suite",
    "joinable",
    "peaks",
    "random_term",
    "run_all",
    "run_suite",
]
