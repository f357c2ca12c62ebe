"""Shared default limits for searches and sampled checks."""

DEFAULT_BUDGET = 100_000
DEFAULT_SAMPLES = 500
DEFAULT_SEED = 0
