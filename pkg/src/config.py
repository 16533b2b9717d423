"""
Configuration module for the application.

This module loads environment variables from a `.env` file (if present) using `python-dotenv`
and exposes configuration settings such as DEBUG mode and the size bounds of the
exhaustive searches for use throughout the application.

Attributes:
    DEBUG (bool): Indicates whether the application is running in debug mode.
    BRUTE_FORCE_VERTEX_BOUND (int): Max n_a + n_b for the full permutation search.
    INTERLEAVING_BOUND (int): Max number of interleavings for the fixed-orders search.
    FIXED_A_SEARCH_BOUND (int): Max n_b! * C(n_a + n_b, n_a) for the fixed-A search.
    SAT_VARIABLE_BOUND (int): Max variable count for the small complete SAT solver.
    SAT3_VERTEX_BOUND (int): Max n_a + n_b for the 3-SAT recognition path.
    SC1P_BOUND (int): Max n_a and n_b for the consecutive-ones search.
    PARALLEL_JOBS (int): Default worker count for brute-force paths.
"""

import logging
import os

from dotenv import load_dotenv

# Load environment variables from .env file if present
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logging.getLogger(__name__).warning(
            "Ignoring malformed %s=%r, using %d", name, raw, default
        )
        return default


DEBUG = os.getenv("DEBUG", "False").lower() in ("true", "1", "yes")

BRUTE_FORCE_VERTEX_BOUND = _int_env("BRUTE_FORCE_VERTEX_BOUND", 10)
INTERLEAVING_BOUND = _int_env("INTERLEAVING_BOUND", 200_000)
FIXED_A_SEARCH_BOUND = _int_env("FIXED_A_SEARCH_BOUND", 500_000)
SAT_VARIABLE_BOUND = _int_env("SAT_VARIABLE_BOUND", 4000)
SAT3_VERTEX_BOUND = _int_env("SAT3_VERTEX_BOUND", 26)
SC1P_BOUND = _int_env("SC1P_BOUND", 8)
PARALLEL_JOBS = _int_env("PARALLEL_JOBS", 1)
