"""Exception types and resource-guard defaults.

Guard defaults can be overridden globally through environment variables
(checked once per call, so tests may monkeypatch os.environ):

    HORNKEYS_SUBSET_BUDGET   max number of subsets a brute-force scan may visit
    HORNKEYS_DUAL_CAP        max intermediate family size during dualization
    HORNKEYS_BF_MAX_VARS     max ground-set size for 2^n oracle scans
"""

import os


class InputError(ValueError):
    """Malformed input: bad indices, non-antichain edges, parse errors."""


class ContractError(ValueError):
    """A documented precondition was violated; carries a witness when one exists."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceGuardError(RuntimeError):
    """A size guard tripped before the computation finished."""


DEFAULT_SUBSET_BUDGET = 1 << 22
DEFAULT_DUAL_CAP = 10**6
DEFAULT_BF_MAX_VARS = 16


def _env_int(name, fallback):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"environment variable {name} must be an integer, got {raw!r}")


def subset_budget(override=None):
    if override is not None:
        return override
    return _env_int("HORNKEYS_SUBSET_BUDGET", DEFAULT_SUBSET_BUDGET)


def dual_cap(override=None):
    if override is not None:
        return override
    return _env_int("HORNKEYS_DUAL_CAP", DEFAULT_DUAL_CAP)


def bf_max_vars(override=None):
    if override is not None:
        return override
    return _env_int("HORNKEYS_BF_MAX_VARS", DEFAULT_BF_MAX_VARS)
