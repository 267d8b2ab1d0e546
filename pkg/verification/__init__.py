"""
verification

Property suites run by `main.py verify`.
"""

from verification.suites import SUITES, SuiteContext, corpus, run_suites

__all__ = ["SUITES", "SuiteContext", "corpus", "run_suites"]
