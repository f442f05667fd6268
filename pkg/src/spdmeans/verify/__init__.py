"""Property checks, fixed instances and randomized suites."""

from .checks import *  # noqa: F401,F403
from .checks import __all__ as _checks_all
from .report import PropertyReport, Skipped, SubCheck, tally
from .suites import SUITES, SuiteConfig, iter_suite, run_suite, summarize

__all__ = [
    *_checks_all,
    "PropertyReport",
    "Skipped",
    "SubCheck",
    "tally",
    "SUITES",
    "SuiteConfig",
    "iter_suite",
    "run_suite",
    "summarize",
]
