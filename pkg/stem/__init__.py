"""
stem

Shared exceptions, models, logging and JSON helpers for flipcount.
"""
