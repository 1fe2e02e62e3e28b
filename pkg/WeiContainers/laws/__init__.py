from .collection import Collection
from .suite import Suite, CheckResult, SuiteReport, find_suite, all_suites, run_suite
from .suites import (
    CategorySuite, LatticeSuite, AnswerabilitySuite, TensorSuite, StarSemanticsSuite,
    StrengthSuite, ProblemRoundtripSuite, PredicateRoundtripSuite, SkKernelSuite, DegeneracySuite,
)
from . import corpus

__all__ = [
    "Collection", "Suite", "CheckResult", "SuiteReport", "find_suite", "all_suites", "run_suite",
    "CategorySuite", "LatticeSuite", "AnswerabilitySuite", "TensorSuite", "StarSemanticsSuite",
    "StrengthSuite", "ProblemRoundtripSuite", "PredicateRoundtripSuite", "SkKernelSuite",
    "DegeneracySuite", "corpus",
]
