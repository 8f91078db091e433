"""Table registry, property suites and the command line front end."""
from .registry import TABLES, TableCase, VerifyReport, cases_for, verify, verify_all

__all__ = ["TABLES", "TableCase", "VerifyReport", "cases_for", "verify", "verify_all"]
